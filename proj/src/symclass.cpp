#include "cartsym/symclass.hpp"

#include "cartsym/error.hpp"

namespace cartsym {

CycloMatrix permutation_action_matrix(const Permutation& tau)
{
    const auto m = static_cast<std::size_t>(tau.degree());
    CycloMatrix out(m, m);
    for (Point q = 1; q <= tau.degree(); ++q) {
        out(static_cast<std::size_t>(tau(q) - 1), static_cast<std::size_t>(q - 1)) = Cyclotomic(1);
    }
    return out;
}

Symmetrizer::Symmetrizer(Character chi) : chi_(std::move(chi))
{
    const auto& g = chi_.group();
    const auto m = static_cast<std::size_t>(g.degree());
    matrix_ = CycloMatrix(m, m);
    for (std::size_t t = 0; t < g.order(); ++t) {
        const auto& value = chi_[t];
        if (value.is_zero()) {
            continue;
        }
        const auto& tau = g.element(t);
        for (Point q = 1; q <= g.degree(); ++q) {
            matrix_(static_cast<std::size_t>(tau(q) - 1), static_cast<std::size_t>(q - 1)) += value;
        }
    }
    const Rational scale = make_rational(chi_.degree(), static_cast<long long>(g.order()));
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = 0; q < m; ++q) {
            matrix_(p, q) *= scale;
        }
    }
}

bool Symmetrizer::is_idempotent() const
{
    return matrix_ * matrix_ == matrix_;
}

bool Symmetrizer::is_hermitian() const
{
    return matrix_.adjoint() == matrix_;
}

long long Symmetrizer::trace() const
{
    const auto t = matrix_.trace();
    const auto r = t.as_rational();
    long long out = 0;
    if (!r || !is_integer(*r, &out) || out < 0) {
        throw InvariantViolation("trace of the symmetrizer for '" + chi_.label()
                                 + "' is not a nonnegative integer: " + t.to_string());
    }
    return out;
}

Symmetrizer build_symmetrizer(const Character& chi, bool verify)
{
    Symmetrizer s(chi);
    if (verify) {
        if (!s.is_idempotent()) {
            throw InvariantViolation("symmetrizer for '" + chi.label() + "' is not idempotent");
        }
        if (!s.is_hermitian()) {
            throw InvariantViolation("symmetrizer for '" + chi.label() + "' is not Hermitian");
        }
    }
    return s;
}

long long dim_from_multiplicities(const Character& chi, long long n)
{
    const auto od = orbits(chi.group());
    Rational sum = 0;
    for (const auto& stab : od.stabilizers) {
        sum += restriction_multiplicity(chi, stab);
    }
    long long out = 0;
    is_integer(sum, &out);
    return n * chi.degree() * out;
}

long long dim_symmetry_class(const Symmetrizer& s, long long n)
{
    if (n < 1) {
        throw DomainError("dim V must be positive");
    }
    const auto by_trace = n * s.trace();
    const auto by_formula = dim_from_multiplicities(s.character(), n);
    if (by_trace != by_formula) {
        throw InvariantViolation("dimension of V^" + s.character().label() + ": trace gives "
                                 + std::to_string(by_trace) + " but the multiplicity sum gives "
                                 + std::to_string(by_formula));
    }
    return by_trace;
}

long long dim_cyclic_subspace(const Character& chi, Point j)
{
    const auto mult = restriction_multiplicity(chi, stabilizer(chi.group(), j));
    long long out = 0;
    if (!is_integer(mult * make_rational(chi.degree()), &out)) {
        throw InvariantViolation("cyclic subspace dimension is not integral");
    }
    return out;
}

Cyclotomic gram_entry_with(const Character& chi, Point j, Point s, std::size_t tau)
{
    const auto& g = chi.group();
    if (g.element(tau)(j) != s) {
        throw DomainError("transporter does not map " + std::to_string(j) + " to " + std::to_string(s));
    }
    const auto tau_inv = g.inverse(tau);
    Cyclotomic sum;
    for (auto x : stabilizer(g, j)) {
        sum += chi[g.multiply(x, tau_inv)];
    }
    return sum * make_rational(chi.degree(), static_cast<long long>(g.order()));
}

Cyclotomic gram_entry(const Character& chi, Point j, Point s)
{
    const auto& g = chi.group();
    if (s < 1 || s > g.degree()) {
        throw DomainError("point " + std::to_string(s) + " out of range");
    }
    const auto tau = transporter(g, j, s);
    if (!tau) {
        return Cyclotomic(0);
    }
    return gram_entry_with(chi, j, s, *tau);
}

Cyclotomic gram_entry_double_sum(const Character& chi, Point j, Point s)
{
    const auto& g = chi.group();
    // bucket elements by sigma^-1(point) so the delta pairs are enumerated directly
    const auto m = static_cast<std::size_t>(g.degree());
    std::vector<Cyclotomic> left(m + 1), right(m + 1);
    for (std::size_t k = 0; k < g.order(); ++k) {
        const auto inv = g.element(g.inverse(k));
        left[static_cast<std::size_t>(inv(j))] += chi[k];
        right[static_cast<std::size_t>(inv(s))] += chi[k].conj();
    }
    Cyclotomic sum;
    for (std::size_t p = 1; p <= m; ++p) {
        if (!left[p].is_zero() && !right[p].is_zero()) {
            sum += left[p] * right[p];
        }
    }
    const auto deg = chi.degree();
    const auto ord = static_cast<long long>(g.order());
    return sum * make_rational(deg * deg, ord * ord);
}

Rational norm_squared(const Character& chi, Point j)
{
    const auto& g = chi.group();
    const auto stab = stabilizer(g, j);
    const auto mult = restriction_multiplicity(chi, stab);
    // [G : G_j] = |G| / |G_j|
    return make_rational(chi.degree()) * mult * static_cast<long>(stab.size()) / static_cast<long>(g.order());
}

SymmetryClassSummary summarize(const Symmetrizer& s, long long n)
{
    if (n < 1) {
        throw DomainError("dim V must be positive");
    }
    const auto& chi = s.character();
    const auto& g = chi.group();
    const auto od = orbits(g);
    const auto deg = chi.degree();

    SymmetryClassSummary out;
    out.n = n;
    out.representatives = od.representatives;
    for (std::size_t k = 0; k < od.orbits.size(); ++k) {
        OrbitSummary os;
        os.representative = od.representatives[k];
        os.orbit = od.orbits[k];
        os.stabilizer_order = od.stabilizers[k].size();
        os.multiplicity = restriction_multiplicity(chi, od.stabilizers[k]);
        long long d = 0;
        is_integer(os.multiplicity * make_rational(deg), &d);
        os.cyclic_dim = d;
        os.norm_squared = make_rational(deg) * os.multiplicity * static_cast<long>(os.stabilizer_order) / static_cast<long>(g.order());
        if (d > 0) {
            out.surviving.push_back(os.representative);
            SpanBuilder span(static_cast<std::size_t>(g.degree()));
            for (auto p : os.orbit) {
                if (span.add(s.matrix().column(static_cast<std::size_t>(p - 1)))) {
                    if (static_cast<long long>(span.rank()) > d) {
                        throw InvariantViolation("orbit of " + std::to_string(os.representative)
                                                 + " spans more than lambda(1)[lambda, 1_Gj] = " + std::to_string(d));
                    }
                    os.spanning.push_back(p);
                }
            }
            if (static_cast<long long>(span.rank()) != d) {
                throw InvariantViolation("orbit of " + std::to_string(os.representative) + " spans "
                                         + std::to_string(span.rank()) + " dimensions, expected " + std::to_string(d));
            }
            out.spanning.insert(out.spanning.end(), os.spanning.begin(), os.spanning.end());
            out.dim_per_unit += d;
        }
        out.per_orbit.push_back(std::move(os));
    }
    if (out.dim_per_unit != s.trace()) {
        throw InvariantViolation("sum of cyclic subspace dimensions " + std::to_string(out.dim_per_unit)
                                 + " differs from the trace " + std::to_string(s.trace()));
    }
    out.dim = n * out.dim_per_unit;
    return out;
}

// ---------------------------------------------------------------------------

BlockOracle::BlockOracle(const Character& chi, long long n) : n_(n), m_(chi.group().degree())
{
    if (n < 1) {
        throw DomainError("dim V must be positive");
    }
    const auto& g = chi.group();
    const auto size = static_cast<std::size_t>(n_) * static_cast<std::size_t>(m_);
    full_ = CycloMatrix(size, size);
    for (std::size_t t = 0; t < g.order(); ++t) {
        const auto inv = g.element(t).inverse();
        // (Q(tau) u)_k = u_{tau^-1(k)} in every component i
        for (Point k = 1; k <= m_; ++k) {
            for (int i = 1; i <= n_; ++i) {
                full_(index(i, k), index(i, inv(k))) += chi[t];
            }
        }
    }
    const Rational scale = make_rational(chi.degree(), static_cast<long long>(g.order()));
    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c) {
            full_(r, c) *= scale;
        }
    }
}

std::size_t BlockOracle::index(int i, Point j) const
{
    if (i < 1 || i > n_ || j < 1 || j > m_) {
        throw DomainError("basis index (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
    }
    return static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i - 1);
}

std::vector<Cyclotomic> BlockOracle::symmetrized(int i, Point j) const
{
    return full_.column(index(i, j));
}

Cyclotomic BlockOracle::gram(int i, Point j, int r, Point s) const
{
    return hermitian_inner(symmetrized(i, j), symmetrized(r, s));
}

std::size_t BlockOracle::rank() const
{
    std::vector<std::vector<Cyclotomic>> cols;
    for (std::size_t c = 0; c < full_.cols(); ++c) {
        cols.push_back(full_.column(c));
    }
    return rank_of_columns(cols);
}

Cyclotomic brute_force_gram(const Character& chi, long long n, int i, Point j, int r, Point s)
{
    return BlockOracle(chi, n).gram(i, j, r, s);
}

} // namespace cartsym
