#include "cartsym/formulas.hpp"

#include "cartsym/error.hpp"
#include "cartsym/symclass.hpp"

namespace cartsym {

CycleStructure CycleStructure::consecutive(const std::vector<int>& lengths, int degree)
{
    CycleStructure cs;
    Point next = 1;
    for (auto len : lengths) {
        std::vector<Point> c;
        for (int k = 0; k < len; ++k) {
            c.push_back(next++);
        }
        cs.cycles.push_back(std::move(c));
    }
    cs.degree = degree == 0 ? next - 1 : degree;
    cs.validate();
    return cs;
}

void CycleStructure::validate() const
{
    if (cycles.empty()) {
        throw DomainError("cycle structure needs at least one cycle");
    }
    validate_disjoint_cycles(cycles, degree);
}

std::vector<long long> CycleStructure::lengths() const
{
    std::vector<long long> out;
    for (const auto& c : cycles) {
        out.push_back(static_cast<long long>(c.size()));
    }
    return out;
}

long long CycleStructure::lcm() const
{
    return lcm_of(lengths());
}

std::vector<long long> CycleStructure::cofactors() const
{
    const auto big = lcm();
    std::vector<long long> out;
    for (auto len : lengths()) {
        out.push_back(big / len);
    }
    return out;
}

long long CycleStructure::moved_points() const
{
    long long sum = 0;
    for (auto len : lengths()) {
        sum += len;
    }
    return sum;
}

Rational ramanujan_average(long long k, long long q)
{
    long long sum = 0;
    for (auto d : divisors(k)) {
        sum += ramanujan(k / d, q);
    }
    return make_rational(sum, k);
}

Rational cycle_product_closed_form(const CycleStructure& cs, long long q)
{
    cs.validate();
    if (cs.moved_points() != cs.degree) {
        throw DomainError("the cycle-product formula needs the cycles to cover all " + std::to_string(cs.degree)
                          + " points; use the general multiplicity route for fixed points");
    }
    const auto big = cs.lcm();
    if (q < 0 || q >= big) {
        throw DomainError("residue q = " + std::to_string(q) + " outside 0.." + std::to_string(big - 1));
    }
    Rational sum = 0;
    for (auto k : cs.cofactors()) {
        sum += ramanujan_average(k, q);
    }
    return sum;
}

long long dim_cycle_product(const CycleStructure& cs, long long q, long long n)
{
    const Rational value = cycle_product_closed_form(cs, q) * make_rational(n);
    long long closed = 0;
    if (!is_integer(value, &closed) || closed < 0) {
        throw InvariantViolation("cycle-product closed form is not a nonnegative integer: " + to_string(value));
    }
    auto g = std::make_shared<const PermutationGroup>(cyclic_from_cycle_product(cs.cycles, cs.degree));
    const auto by_trace = dim_symmetry_class(build_symmetrizer(cyclic_character(g, q)), n);
    if (by_trace != closed) {
        throw InvariantViolation("cycle-product closed form " + std::to_string(closed) + " differs from the trace "
                                 + std::to_string(by_trace) + " at q = " + std::to_string(q));
    }
    return closed;
}

namespace {

void check_residues(const CycleStructure& cs, const std::vector<long long>& q)
{
    cs.validate();
    const auto lens = cs.lengths();
    if (q.size() != lens.size()) {
        throw DomainError("residue tuple has " + std::to_string(q.size()) + " entries for " + std::to_string(lens.size())
                          + " cycles");
    }
    for (std::size_t l = 0; l < lens.size(); ++l) {
        if (q[l] < 0 || q[l] >= lens[l]) {
            throw DomainError("residue q_" + std::to_string(l + 1) + " outside 0.." + std::to_string(lens[l] - 1));
        }
    }
}

Rational invariant_multiplicity(const std::vector<long long>& q)
{
    for (auto v : q) {
        if (v != 0) {
            return 0;
        }
    }
    return 1;
}

Rational product_excluding(const CycleStructure& cs, const std::vector<long long>& q, std::size_t skip)
{
    const auto lens = cs.lengths();
    Rational prod = 1;
    for (std::size_t l = 0; l < lens.size(); ++l) {
        if (l != skip) {
            prod *= ramanujan_average(lens[l], q[l]);
        }
    }
    return prod;
}

} // namespace

Rational product_of_cyclics_closed_form(const CycleStructure& cs, const std::vector<long long>& q)
{
    check_residues(cs, q);
    Rational total = make_rational(cs.degree - cs.moved_points()) * invariant_multiplicity(q);
    for (std::size_t j = 0; j < cs.cycles.size(); ++j) {
        total += product_excluding(cs, q, j);
    }
    return total;
}

Rational product_of_cyclics_literal(const CycleStructure& cs, const std::vector<long long>& q)
{
    check_residues(cs, q);
    return make_rational(cs.degree - cs.moved_points()) * invariant_multiplicity(q) + product_excluding(cs, q, 0);
}

ProductOfCyclicsDim dim_product_of_cyclics(const CycleStructure& cs, const std::vector<long long>& q, long long n)
{
    ProductOfCyclicsDim out;
    const Rational value = product_of_cyclics_closed_form(cs, q) * make_rational(n);
    if (!is_integer(value, &out.dim) || out.dim < 0) {
        throw InvariantViolation("product-of-cyclics closed form is not a nonnegative integer: " + to_string(value));
    }
    out.literal = product_of_cyclics_literal(cs, q) * make_rational(n);
    out.discrepancy = out.literal != value;

    auto g = std::make_shared<const PermutationGroup>(product_of_cyclics(cs.cycles, cs.degree));
    const auto by_trace = dim_symmetry_class(build_symmetrizer(product_cyclic_character(g, q)), n);
    if (by_trace != out.dim) {
        throw InvariantViolation("product-of-cyclics closed form " + std::to_string(out.dim)
                                 + " differs from the trace " + std::to_string(by_trace));
    }
    return out;
}

Rational dihedral_point_stabilizer_formula(const Character& chi, long long n)
{
    const auto m = chi.group().degree();
    const auto s = chi(dihedral_reflection(m)).as_rational();
    if (!s) {
        throw InvariantViolation("character value at the reflection is not rational");
    }
    const Rational deg = make_rational(chi.degree());
    return make_rational(n) * deg / 2 * (deg + *s);
}

long long dihedral_table_dim(int m, DihedralCharId id, long long n)
{
    if (m < 3) {
        throw DomainError("dihedral group needs m >= 3");
    }
    if (id.kind == DihedralCharId::Kind::Psi) {
        if (id.index < 1 || 2 * id.index >= m) {
            throw DomainError("psi:" + std::to_string(id.index) + " needs 0 < h < m/2");
        }
        return 2 * n;
    }
    if (id.index < 1 || id.index > 4 || (m % 2 != 0 && id.index > 2)) {
        throw DomainError(id.label() + " is not a character of D_" + std::to_string(2 * m));
    }
    return (id.index == 1 || id.index == 3) ? n : 0;
}

long long dim_dihedral(int m, DihedralCharId id, long long n)
{
    auto g = std::make_shared<const PermutationGroup>(dihedral(m));
    const auto chi = dihedral_character(g, id);
    const auto table = dihedral_table_dim(m, id, n);
    const auto formula = dihedral_point_stabilizer_formula(chi, n);
    const auto by_trace = dim_symmetry_class(build_symmetrizer(chi), n);
    if (formula != make_rational(table) || by_trace != table) {
        throw InvariantViolation("dihedral dimension mismatch for " + id.label() + ", m = " + std::to_string(m)
                                 + ": table " + std::to_string(table) + ", formula " + to_string(formula)
                                 + ", trace " + std::to_string(by_trace));
    }
    return table;
}

} // namespace cartsym
