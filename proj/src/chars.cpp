#include "cartsym/chars.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cartsym/error.hpp"

namespace cartsym {

Character::Character(GroupPtr group, std::vector<Cyclotomic> values, std::string label)
    : group_(std::move(group)), values_(std::move(values)), label_(std::move(label))
{
    if (!group_) {
        throw DomainError("character without a group");
    }
    if (values_.size() != group_->order()) {
        throw DomainError("character '" + label_ + "' has " + std::to_string(values_.size())
                          + " values for a group of order " + std::to_string(group_->order()));
    }
}

long long Character::degree() const
{
    long long d = 0;
    const auto r = values_.front().as_rational();
    if (!r || !is_integer(*r, &d) || d < 1) {
        throw InvariantViolation("character '" + label_ + "' has non-integral degree " + values_.front().to_string());
    }
    return d;
}

Character Character::with_value(std::size_t element, Cyclotomic value) const
{
    Character out = *this;
    out.values_.at(element) = std::move(value);
    out.label_ += "*";
    return out;
}

Character principal(const GroupPtr& g)
{
    return Character(g, std::vector<Cyclotomic>(g->order(), Cyclotomic(1)), "principal");
}

Character sign_character(const GroupPtr& g)
{
    std::vector<Cyclotomic> v;
    v.reserve(g->order());
    for (const auto& e : g->elements()) {
        v.emplace_back(e.sign());
    }
    return Character(g, std::move(v), "sign");
}

Character fixed_point_theta(const GroupPtr& g)
{
    std::vector<Cyclotomic> v;
    v.reserve(g->order());
    for (const auto& e : g->elements()) {
        v.emplace_back(e.fixed_points());
    }
    return Character(g, std::move(v), "theta");
}

Character theta_minus_one(const GroupPtr& g)
{
    std::vector<Cyclotomic> v;
    v.reserve(g->order());
    for (const auto& e : g->elements()) {
        v.emplace_back(e.fixed_points() - 1);
    }
    Character chi(g, std::move(v), "theta-1");
    if (inner_product(chi, chi) != Cyclotomic(1)) {
        throw DomainError("theta-1 is not irreducible: the group is not 2-transitive");
    }
    return chi;
}

Character cyclic_character(const GroupPtr& g, long long q)
{
    if (g->generators().empty()) {
        if (g->order() != 1) {
            throw DomainError("cyclic character needs a designated generator");
        }
        if (q != 0) {
            throw DomainError("residue q must be 0 for the trivial group");
        }
        return Character(g, {Cyclotomic(1)}, "q:0");
    }
    const auto& g0 = g->generators().front();
    const auto order = g0.order();
    if (static_cast<std::size_t>(order) != g->order()) {
        throw DomainError("group is not cyclic on its first generator (generator order "
                          + std::to_string(order) + ", group order " + std::to_string(g->order()) + ")");
    }
    if (q < 0 || q >= order) {
        throw DomainError("residue q = " + std::to_string(q) + " outside 0.." + std::to_string(order - 1));
    }
    std::vector<Cyclotomic> v(g->order());
    Permutation power(g->degree());
    for (long long s = 0; s < order; ++s) {
        v[g->index_of(power)] = Cyclotomic::root_of_unity(static_cast<int>(order), q * s);
        power = g0 * power;
    }
    return Character(g, std::move(v), "q:" + std::to_string(q));
}

Character product_cyclic_character(const GroupPtr& g, const std::vector<long long>& q)
{
    const auto& gens = g->generators();
    if (q.size() != gens.size()) {
        throw DomainError("residue tuple has " + std::to_string(q.size()) + " entries for "
                          + std::to_string(gens.size()) + " cyclic factors");
    }
    std::vector<std::vector<Point>> cycles;
    for (const auto& s : gens) {
        auto cs = s.cycles();
        if (cs.size() != 1) {
            throw DomainError("generator " + s.to_string() + " is not a single cycle");
        }
        cycles.push_back(std::move(cs.front()));
    }
    validate_disjoint_cycles(cycles, g->degree());
    std::string label = "qtuple:";
    for (std::size_t l = 0; l < q.size(); ++l) {
        const auto ml = static_cast<long long>(cycles[l].size());
        if (q[l] < 0 || q[l] >= ml) {
            throw DomainError("residue q_" + std::to_string(l + 1) + " = " + std::to_string(q[l]) + " outside 0.."
                              + std::to_string(ml - 1));
        }
        label += (l ? "," : "") + std::to_string(q[l]);
    }

    std::vector<Cyclotomic> v;
    v.reserve(g->order());
    for (const auto& e : g->elements()) {
        Cyclotomic value(1);
        Permutation rebuilt(g->degree());
        for (std::size_t l = 0; l < cycles.size(); ++l) {
            const auto& c = cycles[l];
            const auto it = std::find(c.begin(), c.end(), e(c.front()));
            if (it == c.end()) {
                throw DomainError("element " + e.to_string() + " does not factor over the cyclic generators");
            }
            const auto j = it - c.begin();
            for (long long t = 0; t < j; ++t) {
                rebuilt = gens[l] * rebuilt;
            }
            value *= Cyclotomic::root_of_unity(static_cast<int>(c.size()), q[l] * j);
        }
        if (rebuilt != e) {
            throw DomainError("element " + e.to_string() + " is not a product of powers of the generators");
        }
        v.push_back(std::move(value));
    }
    return Character(g, std::move(v), label);
}

// ---------------------------------------------------------------------------
// dihedral

std::string DihedralCharId::label() const
{
    return (kind == Kind::Lambda ? "lambda:" : "psi:") + std::to_string(index);
}

std::vector<DihedralCharId> dihedral_character_ids(int m)
{
    if (m < 3) {
        throw DomainError("dihedral group needs m >= 3");
    }
    std::vector<DihedralCharId> ids;
    const int linear = m % 2 == 0 ? 4 : 2;
    for (int k = 1; k <= linear; ++k) {
        ids.push_back({DihedralCharId::Kind::Lambda, k});
    }
    for (int h = 1; 2 * h < m; ++h) {
        ids.push_back({DihedralCharId::Kind::Psi, h});
    }
    return ids;
}

Character dihedral_character(const GroupPtr& g, DihedralCharId id)
{
    const int m = g->degree();
    if (m < 3 || g->generators().size() != 2 || g->order() != static_cast<std::size_t>(2 * m)) {
        throw DomainError("dihedral character needs the group dihedral(m)");
    }
    const auto& r = g->generators()[0];
    const auto& s = g->generators()[1];
    std::vector<Point> rotation(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        rotation[static_cast<std::size_t>(j)] = j + 1;
    }
    if (r != Permutation::from_cycles({rotation}, m) || s != dihedral_reflection(m)) {
        throw DomainError("group generators are not the canonical r, s of dihedral(" + std::to_string(m) + ")");
    }

    using Kind = DihedralCharId::Kind;
    if (id.kind == Kind::Lambda) {
        if (id.index < 1 || id.index > 4 || (id.index > 2 && m % 2 != 0)) {
            throw DomainError("lambda:" + std::to_string(id.index) + " is not a character of D_"
                              + std::to_string(2 * m));
        }
    } else if (id.index < 1 || 2 * id.index >= m) {
        throw DomainError("psi:" + std::to_string(id.index) + " needs 0 < h < m/2 (m = " + std::to_string(m) + ")");
    }

    std::vector<Cyclotomic> v(g->order());
    Permutation rk(m);
    for (int k = 0; k < m; ++k) {
        const auto rot = g->index_of(rk);
        const auto refl = g->index_of(s * rk);
        const long long parity = k % 2 == 0 ? 1 : -1;
        if (id.kind == Kind::Psi) {
            v[rot] = Cyclotomic::root_of_unity(m, static_cast<long long>(k) * id.index)
                     + Cyclotomic::root_of_unity(m, -static_cast<long long>(k) * id.index);
            v[refl] = Cyclotomic(0);
        } else {
            switch (id.index) {
            case 1:
                v[rot] = Cyclotomic(1);
                v[refl] = Cyclotomic(1);
                break;
            case 2:
                v[rot] = Cyclotomic(1);
                v[refl] = Cyclotomic(-1);
                break;
            case 3:
                v[rot] = Cyclotomic(parity);
                v[refl] = Cyclotomic(parity);
                break;
            default:
                v[rot] = Cyclotomic(parity);
                v[refl] = Cyclotomic(-parity);
                break;
            }
        }
        rk = r * rk;
    }
    return Character(g, std::move(v), id.label());
}

void dihedral_convention_self_test()
{
    for (int m : {4, 5, 6}) {
        auto g = std::make_shared<const PermutationGroup>(dihedral(m));
        const auto g1 = stabilizer(*g, 1);
        for (const auto& id : dihedral_character_ids(m)) {
            if (id.kind != DihedralCharId::Kind::Lambda) {
                continue;
            }
            const auto chi = dihedral_character(g, id);
            const Rational per_unit = make_rational(chi.degree()) * restriction_multiplicity(chi, g1);
            const Rational expected = (id.index == 1 || id.index == 3) ? 1 : 0;
            if (per_unit != expected) {
                throw InvariantViolation("dihedral lambda numbering broken for " + id.label() + " at m = "
                                         + std::to_string(m));
            }
        }
    }
}

// ---------------------------------------------------------------------------

Cyclotomic inner_product(const Character& chi, const Character& mu)
{
    if (chi.group_ptr() != mu.group_ptr() && chi.group().elements() != mu.group().elements()) {
        throw DomainError("inner product of characters on different groups");
    }
    Cyclotomic sum;
    for (std::size_t k = 0; k < chi.values().size(); ++k) {
        sum += chi[k] * mu[k].conj();
    }
    return sum * make_rational(1, static_cast<long long>(chi.group().order()));
}

Rational restriction_multiplicity(const Character& chi, const ElementSet& h, bool require_character)
{
    if (!chi.group().is_subgroup(h)) {
        throw DomainError("restriction to a set that is not a subgroup");
    }
    Cyclotomic sum;
    for (auto x : h) {
        sum += chi[x];
    }
    const auto r = sum.as_rational();
    if (!r) {
        throw InvariantViolation("multiplicity of the trivial character in '" + chi.label()
                                 + "' is not rational: " + sum.to_string());
    }
    Rational out = *r / static_cast<long>(h.size());
    if (require_character && (out.get_den() != 1 || sgn(out) < 0)) {
        throw InvariantViolation("multiplicity of the trivial character in '" + chi.label()
                                 + "' is not a nonnegative integer: " + to_string(out));
    }
    return out;
}

bool is_irreducible(const Character& chi)
{
    return inner_product(chi, chi) == Cyclotomic(1);
}

ClassFunctionStatus check_class_function(const Character& chi)
{
    ClassFunctionStatus status;
    const auto& g = chi.group();
    for (const auto& cls : conjugacy_classes(g)) {
        for (auto x : cls) {
            if (chi[x] != chi[cls.front()]) {
                status.constant_on_classes = false;
                status.detail = "values differ on conjugate elements " + g.element(cls.front()).to_string() + " and "
                                + g.element(x).to_string();
                break;
            }
        }
        if (!status.constant_on_classes) {
            break;
        }
    }
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (chi[g.inverse(x)] != chi[x].conj()) {
            status.inverse_is_conjugate = false;
            if (status.detail.empty()) {
                status.detail = "value at the inverse of " + g.element(x).to_string() + " is not the conjugate";
            }
            break;
        }
    }
    long long d = 0;
    const auto r = chi[0].as_rational();
    if (!r || !is_integer(*r, &d) || d < 1) {
        status.integral_degree = false;
        if (status.detail.empty()) {
            status.detail = "value at the identity is not a positive integer";
        }
    }
    return status;
}

Character validate_class_function(const GroupPtr& g, std::vector<Cyclotomic> values, std::string label)
{
    Character chi(g, std::move(values), std::move(label));
    const auto status = check_class_function(chi);
    if (!status.ok()) {
        throw DomainError("invalid class function '" + chi.label() + "': " + status.detail);
    }
    return chi;
}

// ---------------------------------------------------------------------------
// JSON character files

Character parse_character_json(const std::string& text, bool validate)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("character file is not valid JSON: ") + e.what());
    }
    try {
        const auto& grp = doc.at("group");
        const int degree = grp.at("degree").get<int>();
        std::vector<Permutation> gens;
        for (const auto& s : grp.at("generators")) {
            gens.push_back(parse_cycles(s.get<std::string>(), degree));
        }
        auto g = std::make_shared<const PermutationGroup>(generate_group(degree, gens));
        std::vector<Cyclotomic> values(g->order());
        std::vector<bool> seen(g->order(), false);
        for (const auto& entry : doc.at("values")) {
            const auto p = parse_cycles(entry.at("element").get<std::string>(), degree);
            if (!g->contains(p)) {
                throw ParseError("character file lists " + p.to_string() + ", which is not in the group");
            }
            const auto idx = g->index_of(p);
            if (seen[idx]) {
                throw ParseError("character file lists " + p.to_string() + " twice");
            }
            seen[idx] = true;
            const auto& c = entry.at("coeffs");
            const int order = c.at("order").get<int>();
            std::vector<Rational> coeffs;
            for (const auto& v : c.at("values")) {
                coeffs.push_back(v.is_string() ? parse_rational(v.get<std::string>())
                                               : make_rational(v.get<long long>()));
            }
            values[idx] = Cyclotomic::from_coeffs(order, std::move(coeffs));
        }
        for (std::size_t k = 0; k < seen.size(); ++k) {
            if (!seen[k]) {
                throw ParseError("character file does not list a value for " + g->element(k).to_string());
            }
        }
        std::string label = doc.value("label", std::string("file"));
        if (validate) {
            return validate_class_function(g, std::move(values), std::move(label));
        }
        return Character(g, std::move(values), std::move(label));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed character file: ") + e.what());
    } catch (const DomainError& e) {
        if (validate) {
            throw;
        }
        throw ParseError(e.what());
    }
}

Character read_character_file(const std::string& path, bool validate)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open character file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_character_json(buf.str(), validate);
}

std::string character_to_json(const Character& chi)
{
    nlohmann::ordered_json doc;
    doc["label"] = chi.label();
    doc["group"]["degree"] = chi.group().degree();
    auto gens = nlohmann::ordered_json::array();
    for (const auto& g : chi.group().generators()) {
        gens.push_back(g.to_string());
    }
    doc["group"]["generators"] = gens;
    auto values = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < chi.values().size(); ++k) {
        nlohmann::ordered_json entry;
        entry["element"] = chi.group().element(k).to_string();
        const auto full = chi[k];
        auto coeffs = nlohmann::ordered_json::array();
        for (const auto& c : full.coeffs()) {
            coeffs.push_back(to_string(c));
        }
        entry["coeffs"]["order"] = full.order();
        entry["coeffs"]["values"] = coeffs;
        values.push_back(entry);
    }
    doc["values"] = values;
    return doc.dump(2);
}

} // namespace cartsym
