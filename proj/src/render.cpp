#include "cartsym/report.hpp"

#include <cstdio>
#include <sstream>

#include "cartsym/error.hpp"
#include "cartsym/symclass.hpp"

namespace cartsym {

namespace {

std::string float_text(double x)
{
    if (x == 0) {
        return "0"; // avoids "-0"
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json points_json(const std::vector<Point>& pts)
{
    auto arr = Json::array();
    for (auto p : pts) {
        arr.push_back(p);
    }
    return arr;
}

std::string points_text(const std::vector<Point>& pts)
{
    std::string out;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        out += (k ? " " : "") + std::to_string(pts[k]);
    }
    return out;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

} // namespace

Format parse_format(std::string_view text)
{
    if (text == "json") {
        return Format::Json;
    }
    if (text == "csv") {
        return Format::Csv;
    }
    if (text == "text") {
        return Format::Text;
    }
    throw ParseError("format must be json, csv or text, got '" + std::string(text) + "'");
}

Json cyclotomic_json(const Cyclotomic& c)
{
    Json out;
    out["exact"] = c.to_string();
    out["order"] = c.order();
    auto coeffs = Json::array();
    for (const auto& r : c.coeffs()) {
        coeffs.push_back(to_string(r));
    }
    out["coeffs"] = std::move(coeffs);
    const auto z = c.to_complex();
    out["float"] = Json::array({z.real(), z.imag()});
    return out;
}

std::string render(const Document& doc, Format format)
{
    std::ostringstream out;
    switch (format) {
    case Format::Json:
        if (doc.json.is_array()) {
            for (const auto& line : doc.json) {
                out << line.dump() << "\n";
            }
        } else {
            out << doc.json.dump(2) << "\n";
        }
        break;
    case Format::Csv:
        for (std::size_t k = 0; k < doc.header.size(); ++k) {
            out << (k ? "," : "") << csv_field(doc.header[k]);
        }
        out << "\n";
        for (const auto& row : doc.rows) {
            for (std::size_t k = 0; k < row.size(); ++k) {
                out << (k ? "," : "") << csv_field(row[k]);
            }
            out << "\n";
        }
        break;
    case Format::Text: {
        for (const auto& line : doc.summary) {
            out << line << "\n";
        }
        if (doc.header.empty()) {
            break;
        }
        std::vector<std::size_t> width(doc.header.size(), 0);
        for (std::size_t k = 0; k < doc.header.size(); ++k) {
            width[k] = doc.header[k].size();
        }
        for (const auto& row : doc.rows) {
            for (std::size_t k = 0; k < row.size() && k < width.size(); ++k) {
                width[k] = std::max(width[k], row[k].size());
            }
        }
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t k = 0; k < cells.size(); ++k) {
                if (k) {
                    s += "  ";
                }
                s += cells[k];
                if (k + 1 < cells.size()) {
                    s += std::string(width[k] - cells[k].size(), ' ');
                }
            }
            out << s << "\n";
        };
        if (!doc.summary.empty()) {
            out << "\n";
        }
        line(doc.header);
        for (const auto& row : doc.rows) {
            line(row);
        }
        break;
    }
    }
    return out.str();
}

Document dims_document(const ResolvedGroup& g, const Character& chi, const std::string& spec, long long n)
{
    const auto sym = build_symmetrizer(chi, true);
    const auto dim = dim_symmetry_class(sym, n);
    const auto summary = summarize(sym, n);

    Document doc;
    doc.json["group"] = g.descriptor.to_string();
    doc.json["character"] = spec;
    doc.json["n"] = n;
    doc.json["dim"] = dim;
    auto orbs = Json::array();
    for (const auto& os : summary.per_orbit) {
        orbs.push_back(points_json(os.orbit));
    }
    doc.json["orbits"] = std::move(orbs);
    doc.json["dbar"] = points_json(summary.surviving);
    auto per = Json::array();
    doc.header = {"representative", "orbit", "stabilizer_order", "multiplicity", "cyclic_dim", "norm_squared"};
    for (const auto& os : summary.per_orbit) {
        Json e;
        e["representative"] = os.representative;
        e["orbit"] = points_json(os.orbit);
        e["stabilizer_order"] = os.stabilizer_order;
        e["multiplicity"] = to_string(os.multiplicity);
        e["cyclic_dim"] = os.cyclic_dim;
        e["norm_squared"] = to_string(os.norm_squared);
        e["spanning"] = points_json(os.spanning);
        per.push_back(std::move(e));
        doc.rows.push_back({std::to_string(os.representative), points_text(os.orbit),
                            std::to_string(os.stabilizer_order), to_string(os.multiplicity),
                            std::to_string(os.cyclic_dim), to_string(os.norm_squared)});
    }
    doc.json["per_orbit"] = std::move(per);
    doc.json["dhat"] = points_json(summary.spanning);
    doc.summary = {"group: " + g.descriptor.to_string(), "character: " + spec, "n: " + std::to_string(n),
                   "dim: " + std::to_string(dim), "dbar: " + points_text(summary.surviving),
                   "dhat: " + points_text(summary.spanning)};
    return doc;
}

Document gram_document(const ResolvedGroup& g, const Character& chi, const std::string& spec, long long n)
{
    const auto od = orbits(chi.group());
    Document doc;
    doc.json["group"] = g.descriptor.to_string();
    doc.json["character"] = spec;
    doc.json["n"] = n;
    doc.header = {"j", "s", "exact", "re", "im"};
    std::vector<Point> dbar;
    auto per = Json::array();
    for (std::size_t k = 0; k < od.orbits.size(); ++k) {
        const auto j0 = od.representatives[k];
        if (dim_cyclic_subspace(chi, j0) == 0) {
            continue;
        }
        dbar.push_back(j0);
        const auto& orbit = od.orbits[k];
        Json e;
        e["representative"] = j0;
        e["orbit"] = points_json(orbit);
        e["norm_squared"] = to_string(norm_squared(chi, j0));
        auto rows = Json::array();
        for (auto j : orbit) {
            auto row = Json::array();
            for (auto s : orbit) {
                const auto v = gram_entry(chi, j, s);
                row.push_back(cyclotomic_json(v));
                const auto z = v.to_complex();
                doc.rows.push_back({std::to_string(j), std::to_string(s), v.to_string(), float_text(z.real()),
                                    float_text(z.imag())});
            }
            rows.push_back(std::move(row));
        }
        e["gram"] = std::move(rows);
        per.push_back(std::move(e));
    }
    doc.json["dbar"] = points_json(dbar);
    doc.json["orbits"] = std::move(per);
    doc.summary = {"group: " + g.descriptor.to_string(), "character: " + spec, "n: " + std::to_string(n),
                   "dbar: " + points_text(dbar),
                   "entries <f_ij, f_is> for j, s in one orbit (independent of i; zero across orbits and for i != r)"};
    return doc;
}

Document obasis_document(const ResolvedGroup& g, const Character& chi, const std::string& spec, std::size_t budget,
                         Verdict* verdict)
{
    const auto rep = search_obasis(chi, budget);
    if (verdict) {
        *verdict = rep.verdict;
    }
    Document doc;
    doc.json["group"] = g.descriptor.to_string();
    doc.json["character"] = spec;
    doc.json["verdict"] = to_string(rep.verdict);
    doc.json["method"] = to_string(rep.method);
    doc.json["obstruction"] = rep.obstruction ? Json(*rep.obstruction) : Json(nullptr);
    const auto cd = parse_character_descriptor(spec);
    std::optional<bool> criterion;
    if (g.descriptor.family == GroupDescriptor::Family::Dihedral && cd.kind == CharacterDescriptor::Kind::DihedralPsi) {
        criterion = dihedral_criterion(g.descriptor.degree, cd.index);
        doc.json["criterion"] = to_string(*criterion ? Verdict::HasOBasis : Verdict::NoOBasis);
    }
    doc.json["budget"] = budget;
    auto orbs = Json::array();
    doc.header = {"representative", "orbit", "required", "found", "subsets_examined", "budget_exhausted"};
    for (const auto& os : rep.orbits) {
        Json e;
        e["representative"] = os.representative;
        e["orbit"] = points_json(os.orbit);
        e["required"] = os.required;
        e["found"] = os.found ? points_json(*os.found) : Json(nullptr);
        e["subsets_examined"] = os.subsets_examined;
        e["budget_exhausted"] = os.budget_exhausted;
        orbs.push_back(std::move(e));
        doc.rows.push_back({std::to_string(os.representative), points_text(os.orbit), std::to_string(os.required),
                            os.found ? points_text(*os.found) : "-", std::to_string(os.subsets_examined),
                            os.budget_exhausted ? "true" : "false"});
    }
    doc.json["orbits"] = std::move(orbs);
    doc.summary = {"group: " + g.descriptor.to_string(), "character: " + spec,
                   "verdict: " + to_string(rep.verdict) + " (" + to_string(rep.method) + ")"};
    if (rep.obstruction) {
        doc.summary.push_back("norm-window obstruction at j = " + std::to_string(*rep.obstruction));
    }
    if (criterion) {
        doc.summary.push_back(std::string("criterion: ") + (*criterion ? "has-O-basis" : "no-O-basis"));
    }
    return doc;
}

Document table_document(const ResolvedGroup& g, long long n)
{
    const auto fam = character_family(g);
    Document doc;
    doc.json["group"] = g.descriptor.to_string();
    doc.json["n"] = n;
    doc.json["complete"] = fam.complete;
    doc.header = {"character", "degree", "dim", "dbar"};
    auto rows = Json::array();
    long long total = 0;
    for (std::size_t k = 0; k < fam.characters.size(); ++k) {
        const auto& chi = fam.characters[k];
        const auto sym = build_symmetrizer(chi, true);
        const auto dim = dim_symmetry_class(sym, n);
        total += dim;
        std::vector<Point> dbar;
        for (auto j : orbits(chi.group()).representatives) {
            if (dim_cyclic_subspace(chi, j) > 0) {
                dbar.push_back(j);
            }
        }
        Json e;
        e["character"] = fam.descriptors[k].to_string();
        e["degree"] = chi.degree();
        e["dim"] = dim;
        e["dbar"] = points_json(dbar);
        rows.push_back(std::move(e));
        doc.rows.push_back(
            {fam.descriptors[k].to_string(), std::to_string(chi.degree()), std::to_string(dim), points_text(dbar)});
    }
    doc.json["rows"] = std::move(rows);
    doc.json["total"] = total;
    doc.summary = {"group: " + g.descriptor.to_string(), "n: " + std::to_string(n),
                   std::string("complete family: ") + (fam.complete ? "yes" : "no"),
                   "total: " + std::to_string(total)};
    return doc;
}

Document verify_document(const std::vector<VerificationReport>& reports)
{
    Document doc;
    doc.json = Json::array();
    doc.header = {"id", "passed", "pass", "fail", "undecided", "failed_checks"};
    std::size_t failed = 0;
    std::size_t checks = 0;
    for (const auto& r : reports) {
        doc.json.push_back(Json::parse(r.to_json_line()));
        std::string names;
        for (const auto& c : r.checks) {
            if (c.status == CheckStatus::Fail) {
                names += (names.empty() ? "" : " ") + c.name;
            }
        }
        failed += r.passed() ? 0 : 1;
        checks += r.checks.size();
        doc.rows.push_back({r.id, r.passed() ? "true" : "false", std::to_string(r.count(CheckStatus::Pass)),
                            std::to_string(r.count(CheckStatus::Fail)), std::to_string(r.count(CheckStatus::Undecided)),
                            names});
    }
    doc.summary = {std::to_string(reports.size()) + " reports, " + std::to_string(checks) + " checks, "
                   + std::to_string(failed) + " failing reports"};
    return doc;
}

} // namespace cartsym
