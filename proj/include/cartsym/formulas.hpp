#pragma once

#include <vector>

#include "cartsym/chars.hpp"

namespace cartsym {

/// Disjoint cycles sigma_1..sigma_p inside S_m, with lengths m_i, M = lcm(m_i)
/// and cofactors m_i' = M / m_i.
struct CycleStructure {
    std::vector<std::vector<Point>> cycles;
    int degree = 0;

    /// Cycles on consecutive points: lengths {3, 2} gives (1 2 3)(4 5).
    /// A degree of 0 means the sum of the lengths.
    static CycleStructure consecutive(const std::vector<int>& lengths, int degree = 0);

    /// Throws DomainError unless the cycles are disjoint, of length >= 2 and within the degree.
    void validate() const;

    std::vector<long long> lengths() const;
    long long lcm() const;
    std::vector<long long> cofactors() const;
    long long moved_points() const;
};

/// (1/k) sum over d | k of c_{k/d}(q). Equals 1 when k divides q, else 0.
Rational ramanujan_average(long long k, long long q);

/// Closed form for G = <sigma_1 ... sigma_p> with sum m_i = m, per unit of dim V:
/// sum_i (1/m_i') sum_{d | m_i'} c_{m_i'/d}(q). Throws DomainError if sum m_i != m
/// or q is outside 0..M-1.
Rational cycle_product_closed_form(const CycleStructure& cs, long long q);

/// n times the closed form, checked to be integral and to equal n * trace(M_lambda_q).
/// Throws InvariantViolation on mismatch.
long long dim_cycle_product(const CycleStructure& cs, long long q, long long n);

/// For G = <sigma_1> ... <sigma_k>, per unit of dim V:
/// (m - sum m_l)[lambda, 1_G] + sum_{j=1..k} prod_{l != j} (1/m_l) sum_{d | m_l} c_{m_l/d}(q_l).
Rational product_of_cyclics_closed_form(const CycleStructure& cs, const std::vector<long long>& q);

/// The displayed variant without the sum over j: the product term appears once,
/// with j bound to the first cycle (this matches the single-cycle case k = 1).
Rational product_of_cyclics_literal(const CycleStructure& cs, const std::vector<long long>& q);

struct ProductOfCyclicsDim {
    long long dim = 0;        // n * closed form, equal to n * trace
    Rational literal;         // n * literal display
    bool discrepancy = false; // literal != dim
};

/// Evaluates both readings and checks the summed one against n * trace.
ProductOfCyclicsDim dim_product_of_cyclics(const CycleStructure& cs, const std::vector<long long>& q, long long n);

/// (dim V) lambda(1)/2 (lambda(1) + lambda(s)) for a character of dihedral(m).
Rational dihedral_point_stabilizer_formula(const Character& chi, long long n);

/// Tabulated dimensions for D_2m: n for lambda_1 (and lambda_3), 0 for lambda_2 (and lambda_4), 2n for psi_h.
long long dihedral_table_dim(int m, DihedralCharId id, long long n);

/// Dimension of V^chi for D_2m, checked three ways (formula, table, trace).
long long dim_dihedral(int m, DihedralCharId id, long long n);

} // namespace cartsym
