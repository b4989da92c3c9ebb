#pragma once

#include <vector>

#include "cartsym/chars.hpp"
#include "cartsym/matrix.hpp"

namespace cartsym {

/// Matrix of the coordinate action Q(tau): column q has a single 1 in row tau(q),
/// i.e. Q(tau) f_iq = f_i,tau(q).
CycloMatrix permutation_action_matrix(const Permutation& tau);

/// The Cartesian symmetrizer C_lambda = lambda(1)/|G| sum lambda(tau) Q(tau) on the
/// coordinate index. On x^m V it acts as n identical copies of this m x m matrix,
/// one per basis vector of V, so all dimensions and Gram entries are computed here
/// and scaled by n.
class Symmetrizer {
public:
    explicit Symmetrizer(Character chi);

    const Character& character() const { return chi_; }
    const PermutationGroup& group() const { return chi_.group(); }
    /// entry(p, q) = lambda(1)/|G| * sum over tau with tau(q) = p of lambda(tau).
    const CycloMatrix& matrix() const { return matrix_; }

    bool is_idempotent() const;
    bool is_hermitian() const;
    /// Trace of the matrix; throws InvariantViolation unless it is a nonnegative integer.
    long long trace() const;

private:
    Character chi_;
    CycloMatrix matrix_;
};

/// With verify set, throws InvariantViolation unless the matrix is idempotent and Hermitian.
Symmetrizer build_symmetrizer(const Character& chi, bool verify = false);

/// lambda(1) * sum over surviving orbit representatives of [lambda, 1_{G_j}], times n.
long long dim_from_multiplicities(const Character& chi, long long n);

/// n * trace(M_lambda), checked against dim_from_multiplicities (InvariantViolation on mismatch).
long long dim_symmetry_class(const Symmetrizer& s, long long n);

/// lambda(1) [lambda, 1_{G_j}]; zero exactly when j carries no invariant vector.
long long dim_cyclic_subspace(const Character& chi, Point j);

/// <f^lambda_ij, f^lambda_is> for any i: zero when j and s lie in different orbits,
/// otherwise lambda(1)/|G| sum over g in G_j of lambda(g tau^-1) for some tau with tau(j) = s.
/// Inner products are conjugate-linear in the first argument.
Cyclotomic gram_entry(const Character& chi, Point j, Point s);

/// The same sum using a caller-chosen transporter tau (element index, tau(j) = s).
Cyclotomic gram_entry_with(const Character& chi, Point j, Point s, std::size_t tau);

/// lambda(1)^2/|G|^2 sum over sigma, tau of lambda(sigma) conj(lambda(tau)) [sigma^-1(j) = tau^-1(s)].
Cyclotomic gram_entry_double_sum(const Character& chi, Point j, Point s);

/// ||f^lambda_ij||^2 = lambda(1) [lambda, 1_{G_j}] / [G : G_j].
Rational norm_squared(const Character& chi, Point j);

struct OrbitSummary {
    Point representative = 0;
    std::vector<Point> orbit;
    std::size_t stabilizer_order = 0;
    Rational multiplicity;
    long long cyclic_dim = 0;
    Rational norm_squared;
    /// Points chosen from the orbit whose symmetrized vectors span the cyclic subspace.
    std::vector<Point> spanning;
};

struct SymmetryClassSummary {
    long long n = 0;
    std::vector<Point> representatives;  // D
    std::vector<Point> surviving;        // D-bar
    std::vector<OrbitSummary> per_orbit; // one per element of D
    std::vector<Point> spanning;         // D-hat, concatenated in orbit order
    long long dim_per_unit = 0;          // |D-hat| = trace
    long long dim = 0;                   // n * |D-hat|
};

/// Orbit bookkeeping plus a basis choice: for each surviving orbit, points are
/// taken in ascending order whenever the symmetrized vector extends the span,
/// until the cyclic-subspace dimension is reached. Throws InvariantViolation if the
/// span of an orbit disagrees with lambda(1)[lambda, 1_{G_j}] or the total with the trace.
SymmetryClassSummary summarize(const Symmetrizer& s, long long n);

/// Independent oracle: materializes the full n*m x n*m symmetrizer on x^m V from
/// Q(tau)(u_1..u_m) = (u_{tau^-1(1)}, ..., u_{tau^-1(m)}) and answers inner products
/// of the standard symmetrized vectors f^lambda_ij directly.
class BlockOracle {
public:
    BlockOracle(const Character& chi, long long n);

    long long n() const { return n_; }
    int m() const { return m_; }
    /// Coordinates of f^lambda_ij in the orthonormal basis f_rs.
    std::vector<Cyclotomic> symmetrized(int i, Point j) const;
    /// <f^lambda_ij, f^lambda_rs>, conjugate-linear in the first argument.
    Cyclotomic gram(int i, Point j, int r, Point s) const;
    /// Rank of the full operator, i.e. dim V^lambda(G).
    std::size_t rank() const;
    const CycloMatrix& matrix() const { return full_; }

private:
    std::size_t index(int i, Point j) const;

    long long n_;
    int m_;
    CycloMatrix full_;
};

/// One-shot oracle query; builds the full operator each call.
Cyclotomic brute_force_gram(const Character& chi, long long n, int i, Point j, int r, Point s);

} // namespace cartsym
