#include "cartsym/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <thread>

#include <json.hpp>

#include "cartsym/error.hpp"
#include "cartsym/formulas.hpp"
#include "cartsym/symclass.hpp"

namespace cartsym {

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    default:
        return "undecided";
    }
}

bool VerificationReport::passed() const
{
    return count(CheckStatus::Fail) == 0;
}

std::size_t VerificationReport::count(CheckStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

std::string VerificationReport::to_json_line() const
{
    nlohmann::ordered_json doc;
    doc["id"] = id;
    doc["group"] = group;
    doc["character"] = character;
    doc["n"] = n;
    doc["passed"] = passed();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["status"] = to_string(c.status);
        e["expected"] = c.expected;
        e["actual"] = c.actual;
        arr.push_back(std::move(e));
    }
    doc["checks"] = std::move(arr);
    doc["notes"] = notes;
    doc["seconds"] = seconds;
    return doc.dump();
}

namespace {

struct Outcome {
    CheckStatus status = CheckStatus::Pass;
    std::string expected;
    std::string actual;
};

Outcome compare(const std::string& expected, const std::string& actual)
{
    return {expected == actual ? CheckStatus::Pass : CheckStatus::Fail, expected, actual};
}

Outcome truth(bool ok, const std::string& detail = {})
{
    return {ok ? CheckStatus::Pass : CheckStatus::Fail, "true", ok ? "true" : (detail.empty() ? "false" : detail)};
}

class Recorder {
public:
    explicit Recorder(VerificationReport& report) : report_(report) {}

    void run(const std::string& name, const std::function<Outcome()>& body)
    {
        Check c;
        c.name = name;
        try {
            auto o = body();
            c.status = o.status;
            c.expected = std::move(o.expected);
            c.actual = std::move(o.actual);
        } catch (const std::exception& e) {
            c.status = CheckStatus::Fail;
            c.actual = std::string("error: ") + e.what();
        }
        report_.checks.push_back(std::move(c));
    }

private:
    VerificationReport& report_;
};

std::string point_pair(Point j, Point s)
{
    return "(" + std::to_string(j) + "," + std::to_string(s) + ")";
}

CycleStructure structure_of(const GroupDescriptor& d)
{
    CycleStructure cs;
    cs.cycles = d.cycles;
    cs.degree = d.degree;
    return cs;
}

// The n = 2 block oracle must see the found subset as pairwise orthogonal with positive norms.
Outcome check_found_subsets(const Character& chi, const OBasisReport& report)
{
    const BlockOracle oracle(chi, 2);
    for (const auto& os : report.orbits) {
        if (!os.found) {
            continue;
        }
        const auto& pts = *os.found;
        for (std::size_t a = 0; a < pts.size(); ++a) {
            for (int i = 1; i <= 2; ++i) {
                if (oracle.gram(i, pts[a], i, pts[a]).is_zero()) {
                    return {CheckStatus::Fail, "nonzero norm", "zero vector at point " + std::to_string(pts[a])};
                }
                for (std::size_t b = a + 1; b < pts.size(); ++b) {
                    const auto g = oracle.gram(i, pts[a], i, pts[b]);
                    if (!g.is_zero()) {
                        return {CheckStatus::Fail, "0", "gram" + point_pair(pts[a], pts[b]) + " = " + g.to_string()};
                    }
                }
            }
        }
    }
    return {CheckStatus::Pass, "pairwise orthogonal", "pairwise orthogonal"};
}

} // namespace

VerificationReport verify_instance(const ResolvedGroup& g, const Character& chi, const std::string& character_spec,
                                   long long n, Level level, std::size_t budget)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.group = g.descriptor.to_string();
    report.character = character_spec;
    report.n = n;
    report.id = report.group + " " + report.character + " n=" + std::to_string(n);
    Recorder rec(report);

    const auto& grp = *g.group;
    const int m = grp.degree();
    const auto od = orbits(grp);

    ClassFunctionStatus status;
    rec.run("class-function", [&] {
        status = check_class_function(chi);
        return truth(status.constant_on_classes, status.detail);
    });
    rec.run("inverse-conjugate", [&] { return truth(status.inverse_is_conjugate, status.detail); });
    rec.run("irreducible", [&] { return compare("1", inner_product(chi, chi).to_string()); });

    std::optional<Symmetrizer> sym;
    rec.run("symmetrizer-idempotent", [&] {
        sym.emplace(chi);
        return truth(sym->is_idempotent());
    });
    rec.run("symmetrizer-hermitian", [&] { return truth(sym && sym->is_hermitian()); });
    if (!sym) {
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    long long dim = -1;
    rec.run("dimension-trace-vs-multiplicity", [&] {
        dim = n * sym->trace();
        return compare(std::to_string(dim_from_multiplicities(chi, n)), std::to_string(dim));
    });
    rec.run("cyclic-subspaces-span", [&] {
        const auto summary = summarize(*sym, n);
        return compare(std::to_string(dim), std::to_string(summary.dim));
    });

    rec.run("norm-formula", [&] {
        for (Point j = 1; j <= m; ++j) {
            const auto direct = gram_entry(chi, j, j);
            const Cyclotomic formula(norm_squared(chi, j));
            if (direct != formula) {
                return Outcome{CheckStatus::Fail, formula.to_string(), "j=" + std::to_string(j) + ": " + direct.to_string()};
            }
            const auto r = formula.as_rational();
            if (!r || *r < 0 || *r > 1) {
                return Outcome{CheckStatus::Fail, "0 <= norm^2 <= 1", formula.to_string()};
            }
        }
        return Outcome{CheckStatus::Pass, "all j", "all j"};
    });

    rec.run("gram-transporter-independence", [&] {
        for (Point j = 1; j <= m; ++j) {
            for (Point s = 1; s <= m; ++s) {
                std::optional<Cyclotomic> first;
                for (std::size_t t = 0; t < grp.order(); ++t) {
                    if (grp.element(t)(j) != s) {
                        continue;
                    }
                    auto v = gram_entry_with(chi, j, s, t);
                    if (!first) {
                        first = std::move(v);
                    } else if (v != *first) {
                        return Outcome{CheckStatus::Fail, first->to_string(),
                                       point_pair(j, s) + " via " + grp.element(t).to_string() + ": " + v.to_string()};
                    }
                }
            }
        }
        return Outcome{CheckStatus::Pass, "independent", "independent"};
    });

    std::vector<std::vector<Cyclotomic>> gram(static_cast<std::size_t>(m) + 1,
                                              std::vector<Cyclotomic>(static_cast<std::size_t>(m) + 1));
    rec.run("gram-double-sum", [&] {
        for (Point j = 1; j <= m; ++j) {
            for (Point s = 1; s <= m; ++s) {
                gram[j][s] = gram_entry(chi, j, s);
                const auto ds = gram_entry_double_sum(chi, j, s);
                if (ds != gram[j][s]) {
                    return Outcome{CheckStatus::Fail, gram[j][s].to_string(), point_pair(j, s) + ": " + ds.to_string()};
                }
            }
        }
        return Outcome{CheckStatus::Pass, "equal", "equal"};
    });

    rec.run("gram-equals-symmetrizer-entry", [&] {
        for (Point j = 1; j <= m; ++j) {
            for (Point s = 1; s <= m; ++s) {
                const auto& e = sym->matrix()(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(s - 1));
                if (e != gram[j][s]) {
                    return Outcome{CheckStatus::Fail, e.to_string(), point_pair(j, s) + ": " + gram[j][s].to_string()};
                }
            }
        }
        return Outcome{CheckStatus::Pass, "equal", "equal"};
    });

    if (level == Level::Full && n * m <= kOracleLimit) {
        std::optional<BlockOracle> oracle;
        rec.run("gram-block-oracle", [&] {
            oracle.emplace(chi, n);
            std::vector<std::vector<std::vector<Cyclotomic>>> cols(static_cast<std::size_t>(n) + 1);
            for (int i = 1; i <= n; ++i) {
                cols[i].resize(static_cast<std::size_t>(m) + 1);
                for (Point j = 1; j <= m; ++j) {
                    cols[i][j] = oracle->symmetrized(i, j);
                }
            }
            for (int i = 1; i <= n; ++i) {
                for (int r = 1; r <= n; ++r) {
                    for (Point j = 1; j <= m; ++j) {
                        for (Point s = 1; s <= m; ++s) {
                            const auto brute = hermitian_inner(cols[i][j], cols[r][s]);
                            const auto& expected = i == r ? gram[j][s] : Cyclotomic(0);
                            if (brute != expected) {
                                return Outcome{CheckStatus::Fail, expected.to_string(),
                                               "i=" + std::to_string(i) + " r=" + std::to_string(r) + " "
                                                   + point_pair(j, s) + ": " + brute.to_string()};
                            }
                        }
                    }
                }
            }
            return Outcome{CheckStatus::Pass, "equal", "equal"};
        });
        rec.run("block-oracle-rank", [&] {
            if (!oracle) {
                oracle.emplace(chi, n);
            }
            return compare(std::to_string(dim), std::to_string(oracle->rank()));
        });
    }

    using Family = GroupDescriptor::Family;
    const auto& d = g.descriptor;
    const auto charspec = parse_character_descriptor(character_spec);
    using Kind = CharacterDescriptor::Kind;

    if (d.family == Family::CycleProduct && charspec.kind == Kind::Cyclic) {
        const auto cs = structure_of(d);
        if (cs.moved_points() == m) {
            rec.run("cycle-product-closed-form", [&] {
                const Rational closed = cycle_product_closed_form(cs, charspec.residues[0]) * make_rational(n);
                return compare(std::to_string(dim), to_string(closed));
            });
        }
    }
    if (d.family == Family::ProductOfCyclics && charspec.kind == Kind::ProductCyclic) {
        rec.run("product-of-cyclics-closed-form", [&] {
            const auto cs = structure_of(d);
            const Rational closed = product_of_cyclics_closed_form(cs, charspec.residues) * make_rational(n);
            const Rational literal = product_of_cyclics_literal(cs, charspec.residues) * make_rational(n);
            if (literal != closed) {
                report.notes.push_back("discrepancy: the single-term display gives " + to_string(literal)
                                       + ", the sum over j gives " + to_string(closed));
            }
            return compare(std::to_string(dim), to_string(closed));
        });
    }
    if (d.family == Family::Dihedral && (charspec.kind == Kind::DihedralLambda || charspec.kind == Kind::DihedralPsi)) {
        const DihedralCharId id{charspec.kind == Kind::DihedralLambda ? DihedralCharId::Kind::Lambda
                                                                      : DihedralCharId::Kind::Psi,
                                charspec.index};
        rec.run("dihedral-point-stabilizer-formula",
                [&] { return compare(std::to_string(dim), to_string(dihedral_point_stabilizer_formula(chi, n))); });
        rec.run("dihedral-table", [&] { return compare(std::to_string(dihedral_table_dim(m, id, n)), std::to_string(dim)); });
        report.notes.push_back("convention: lambda numbering fixed by the dimension self-test");
    }
    if (charspec.kind == Kind::Principal) {
        rec.run("principal-counts-orbits",
                [&] { return compare(std::to_string(n * static_cast<long long>(od.orbits.size())), std::to_string(dim)); });
    }
    if (charspec.kind == Kind::ThetaMinusOne) {
        rec.run("theta-norm-at-last-point",
                [&] { return compare(to_string(make_rational(m - 1, m)), to_string(norm_squared(chi, m))); });
    }

    std::optional<OBasisReport> ob;
    rec.run("obasis-search", [&] {
        ob = search_obasis(chi, budget);
        if (ob->verdict == Verdict::Undecided) {
            return Outcome{CheckStatus::Undecided, "decided", "undecided (budget " + std::to_string(budget) + ")"};
        }
        return Outcome{CheckStatus::Pass, "decided", to_string(ob->verdict)};
    });
    if (ob) {
        if (ob->obstruction) {
            rec.run("obstruction-soundness", [&] { return compare(to_string(Verdict::NoOBasis), to_string(ob->verdict)); });
        }
        if (chi.degree() == 1 && ob->verdict != Verdict::Undecided) {
            rec.run("linear-character-obasis", [&] { return compare(to_string(Verdict::HasOBasis), to_string(ob->verdict)); });
        }
        if (d.family == Family::Dihedral && charspec.kind == Kind::DihedralPsi && ob->verdict != Verdict::Undecided) {
            rec.run("dihedral-criterion-vs-search", [&] {
                const bool has = dihedral_criterion(m, charspec.index);
                return compare(to_string(ob->verdict), to_string(has ? Verdict::HasOBasis : Verdict::NoOBasis));
            });
        }
        if (level == Level::Full && 2 * m <= kOracleLimit && ob->verdict == Verdict::HasOBasis) {
            rec.run("obasis-block-oracle", [&] { return check_found_subsets(chi, *ob); });
        }
    }

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

VerificationReport verify_family(const ResolvedGroup& g, long long n)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.group = g.descriptor.to_string();
    report.character = "family";
    report.n = n;
    report.id = report.group + " family n=" + std::to_string(n);
    Recorder rec(report);

    const auto fam = character_family(g);
    const auto m = static_cast<std::size_t>(g.group->degree());

    rec.run("family-orthonormal", [&] {
        for (std::size_t a = 0; a < fam.characters.size(); ++a) {
            for (std::size_t b = 0; b < fam.characters.size(); ++b) {
                const auto ip = inner_product(fam.characters[a], fam.characters[b]);
                if (ip != Cyclotomic(a == b ? 1 : 0)) {
                    return Outcome{CheckStatus::Fail, a == b ? "1" : "0",
                                   fam.descriptors[a].to_string() + " vs " + fam.descriptors[b].to_string() + ": "
                                       + ip.to_string()};
                }
            }
        }
        return Outcome{CheckStatus::Pass, "orthonormal", "orthonormal"};
    });

    if (!fam.complete) {
        report.notes.push_back("built-in characters do not exhaust Irr(G); completeness checks skipped");
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    std::vector<Symmetrizer> syms;
    for (const auto& chi : fam.characters) {
        syms.emplace_back(chi);
    }
    rec.run("symmetrizers-sum-to-identity", [&] {
        CycloMatrix sum(m, m);
        for (const auto& s : syms) {
            sum = sum + s.matrix();
        }
        return truth(sum == CycloMatrix::identity(m));
    });
    rec.run("dimensions-sum-to-nm", [&] {
        long long total = 0;
        for (const auto& s : syms) {
            total += dim_symmetry_class(s, n);
        }
        return compare(std::to_string(n * static_cast<long long>(m)), std::to_string(total));
    });

    if (g.descriptor.family == GroupDescriptor::Family::CycleProduct) {
        CycleStructure cs;
        cs.cycles = g.descriptor.cycles;
        cs.degree = g.descriptor.degree;
        if (cs.moved_points() == static_cast<long long>(m)) {
            const auto big_m = cs.lcm();
            rec.run("closed-form-sums-to-nm", [&] {
                Rational total = 0;
                for (long long q = 0; q < big_m; ++q) {
                    total += cycle_product_closed_form(cs, q);
                }
                return compare(std::to_string(n * static_cast<long long>(m)), to_string(total * make_rational(n)));
            });
            rec.run("closed-form-residue-symmetry", [&] {
                for (long long q = 1; q < big_m; ++q) {
                    const auto a = cycle_product_closed_form(cs, q);
                    const auto b = cycle_product_closed_form(cs, big_m - q);
                    if (a != b) {
                        return Outcome{CheckStatus::Fail, to_string(a),
                                       "q=" + std::to_string(big_m - q) + ": " + to_string(b)};
                    }
                }
                return Outcome{CheckStatus::Pass, "symmetric", "symmetric"};
            });
        }
    }

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

InstanceMatrix default_matrix()
{
    const std::vector<long long> ns{2, 3};
    InstanceMatrix out;
    for (int m = 2; m <= 5; ++m) {
        out.push_back({"symmetric:" + std::to_string(m), {"principal", "sign", "theta-1"}, ns});
    }
    out.push_back({"alternating:4", {"principal", "theta-1"}, ns});
    for (const char* cp : {"(1 2 3)", "(1 2)(3 4)", "(1 2 3)(4 5)", "(1 2 3 4)(5 6 7)", "(1 2)(3 4)(5 6 7)"}) {
        out.push_back({std::string("cycleprod:") + cp, {"all"}, ns});
    }
    out.push_back({"prodcyc:(1 2 3);(4 5)@5", {"all"}, ns});
    out.push_back({"prodcyc:(1 2 3);(4 5)@6", {"all"}, ns});
    out.push_back({"prodcyc:(1 2);(3 4)@4", {"all"}, ns});
    for (int m = 3; m <= 12; ++m) {
        out.push_back({"dihedral:" + std::to_string(m), {"all"}, ns});
    }
    out.push_back({"dihedral:14", {"all"}, ns});
    return out;
}

namespace {

struct Job {
    std::shared_ptr<ResolvedGroup> group;
    std::optional<Character> chi; // empty: family job
    std::string spec;
    long long n = 0;
};

} // namespace

std::vector<VerificationReport> run_suite(const InstanceMatrix& matrix, Level level, std::size_t budget, unsigned threads)
{
    std::vector<Job> jobs;
    for (const auto& entry : matrix) {
        auto g = std::make_shared<ResolvedGroup>(resolve_group(entry.group));
        std::vector<std::pair<std::string, Character>> chars;
        for (const auto& spec : entry.characters) {
            const auto d = parse_character_descriptor(spec);
            if (d.kind == CharacterDescriptor::Kind::All) {
                const auto fam = character_family(*g);
                for (std::size_t k = 0; k < fam.characters.size(); ++k) {
                    chars.emplace_back(fam.descriptors[k].to_string(), fam.characters[k]);
                }
            } else {
                chars.emplace_back(d.to_string(), resolve_character(*g, d, false));
            }
        }
        for (auto n : entry.ns) {
            for (const auto& [spec, chi] : chars) {
                jobs.push_back({g, chi, spec, n});
            }
            jobs.push_back({g, std::nullopt, "family", n});
        }
    }

    std::vector<VerificationReport> reports(jobs.size());
    auto work = [&](std::size_t k) {
        const auto& job = jobs[k];
        reports[k] = job.chi ? verify_instance(*job.group, *job.chi, job.spec, job.n, level, budget)
                             : verify_family(*job.group, job.n);
    };
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    if (threads == 1) {
        for (std::size_t k = 0; k < jobs.size(); ++k) {
            work(k);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t k; (k = next++) < jobs.size();) {
                    work(k);
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const VerificationReport& a, const VerificationReport& b) { return a.id < b.id; });
    return reports;
}

} // namespace cartsym
