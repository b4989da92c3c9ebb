#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cartsym {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// Builds a canonical rational num/den (den != 0).
Rational make_rational(long long num, long long den = 1);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& r);

/// Parses "a", "-a", "a/b". Throws ParseError.
Rational parse_rational(const std::string& text);

/// True when r is an integer; stores it in *out when requested.
bool is_integer(const Rational& r, long long* out = nullptr);

// Number-theoretic kernel. All arguments must be >= 1 unless noted.

long long mobius(long long n);
long long totient(long long n);
std::vector<long long> divisors(long long n);
/// Largest power of two dividing h.
long long two_part(long long h);
long long lcm_of(const std::vector<long long>& values);

/// Ramanujan sum c_m(q) for m >= 1, q >= 0, via sum over d | gcd(m, q) of d * mu(m / d).
long long ramanujan(long long m, long long q);

/// Coefficients (ascending powers) of the n-th cyclotomic polynomial.
/// Computed once per order and cached; the cache is safe for concurrent use.
const std::vector<mpz_class>& cyclotomic_polynomial(int n);

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// Stored as coefficients c_0..c_{N-1} of powers of zeta_N, reduced modulo the
/// N-th cyclotomic polynomial, so only c_0..c_{phi(N)-1} can be non-zero and the
/// representation is canonical for a fixed order. Elements that turn out to be
/// rational are demoted to order 1. Mixed-order operands are promoted to the
/// lcm of their orders.
class Cyclotomic {
public:
    Cyclotomic();
    Cyclotomic(const Rational& value); // NOLINT: implicit by design of the field embedding
    Cyclotomic(long long value);       // NOLINT

    /// Element with the given raw (not necessarily reduced) coefficients of
    /// zeta_order^k, k = 0..order-1.
    static Cyclotomic from_coeffs(int order, std::vector<Rational> coeffs);

    /// zeta_order^(k mod order).
    static Cyclotomic root_of_unity(int order, long long k);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// The value as a rational when it lies in Q.
    std::optional<Rational> as_rational() const;

    /// Complex conjugate (zeta -> zeta^-1).
    Cyclotomic conj() const;
    /// Multiplicative inverse. Throws DomainError on zero.
    Cyclotomic inverse() const;
    /// The same element expressed in Q(zeta_order); order must be a multiple of this order.
    Cyclotomic promoted(int order) const;

    /// Floating approximation; display only.
    std::complex<double> to_complex() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& other);
    Cyclotomic& operator-=(const Cyclotomic& other);
    Cyclotomic& operator*=(const Cyclotomic& other);
    Cyclotomic& operator*=(const Rational& scalar);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
    friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    /// Readable form, e.g. "1/2 + 3*z8^2" ("z8" = zeta_8).
    std::string to_string() const;

private:
    Cyclotomic(int order, std::vector<Rational> coeffs, bool reduce);
    void normalize();
    void align_with(Cyclotomic& other);

    int order_ = 1;
    std::vector<Rational> coeffs_;
};

/// Solves a square rational system A x = b by Gaussian elimination.
/// Throws DomainError if A is singular.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b);

} // namespace cartsym
