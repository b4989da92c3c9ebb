#include "cartsym/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <numbers>
#include <sstream>

#include "cartsym/error.hpp"

namespace cartsym {

Rational make_rational(long long num, long long den)
{
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    auto trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
    if (trimmed.empty()) {
        throw ParseError("empty rational");
    }
    Rational r;
    if (r.set_str(trimmed, 10) != 0) {
        throw ParseError("malformed rational '" + text + "'");
    }
    if (r.get_den() == 0) {
        throw ParseError("rational with zero denominator '" + text + "'");
    }
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r, long long* out)
{
    if (r.get_den() != 1) {
        return false;
    }
    if (out) {
        if (!r.get_num().fits_slong_p()) {
            throw DomainError("integer out of range: " + r.get_num().get_str());
        }
        *out = r.get_num().get_si();
    }
    return true;
}

// ---------------------------------------------------------------------------
// number theory

namespace {

void require_positive(long long n, const char* what)
{
    if (n < 1) {
        throw DomainError(std::string(what) + " requires a positive argument, got " + std::to_string(n));
    }
}

} // namespace

long long mobius(long long n)
{
    require_positive(n, "mobius");
    long long result = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

long long totient(long long n)
{
    require_positive(n, "totient");
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

std::vector<long long> divisors(long long n)
{
    require_positive(n, "divisors");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

long long two_part(long long h)
{
    require_positive(h, "two_part");
    return h & -h;
}

long long lcm_of(const std::vector<long long>& values)
{
    long long result = 1;
    for (auto v : values) {
        require_positive(v, "lcm");
        result = std::lcm(result, v);
    }
    return result;
}

long long ramanujan(long long m, long long q)
{
    require_positive(m, "ramanujan");
    if (q < 0) {
        throw DomainError("ramanujan requires q >= 0");
    }
    const long long g = q == 0 ? m : std::gcd(m, q);
    long long sum = 0;
    for (auto d : divisors(g)) {
        sum += d * mobius(m / d);
    }
    return sum;
}

// ---------------------------------------------------------------------------
// cyclotomic polynomials

namespace {

std::mutex phi_mutex;
std::map<int, std::vector<mpz_class>> phi_cache;

// Exact quotient of integer polynomials by a monic divisor.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> num, const std::vector<mpz_class>& den)
{
    const auto dn = den.size() - 1;
    const auto nn = num.size() - 1;
    std::vector<mpz_class> quot(nn - dn + 1);
    for (auto k = nn + 1; k-- > dn;) {
        const mpz_class c = num[k];
        quot[k - dn] = c;
        if (c != 0) {
            for (std::size_t t = 0; t <= dn; ++t) {
                num[k - dn + t] -= c * den[t];
            }
        }
    }
    for (std::size_t k = 0; k < dn; ++k) {
        if (num[k] != 0) {
            throw InvariantViolation("cyclotomic polynomial division left a remainder");
        }
    }
    return quot;
}

} // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(int n)
{
    if (n < 1) {
        throw DomainError("cyclotomic polynomial order must be positive");
    }
    {
        std::lock_guard lock(phi_mutex);
        if (auto it = phi_cache.find(n); it != phi_cache.end()) {
            return it->second;
        }
    }
    std::vector<mpz_class> poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (auto d : divisors(n)) {
        if (d < n) {
            poly = divide_monic(std::move(poly), cyclotomic_polynomial(static_cast<int>(d)));
        }
    }
    std::lock_guard lock(phi_mutex);
    return phi_cache.emplace(n, std::move(poly)).first->second;
}

// ---------------------------------------------------------------------------
// Cyclotomic

Cyclotomic::Cyclotomic() : coeffs_(1) {}

Cyclotomic::Cyclotomic(const Rational& value) : coeffs_{value} {}

Cyclotomic::Cyclotomic(long long value) : coeffs_{make_rational(value)} {}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs, bool reduce)
    : order_(order), coeffs_(std::move(coeffs))
{
    if (reduce) {
        normalize();
    }
}

Cyclotomic Cyclotomic::from_coeffs(int order, std::vector<Rational> coeffs)
{
    if (order < 1) {
        throw DomainError("cyclotomic order must be positive");
    }
    if (coeffs.size() != static_cast<std::size_t>(order)) {
        throw DomainError("cyclotomic of order " + std::to_string(order) + " needs exactly "
                          + std::to_string(order) + " coefficients");
    }
    return Cyclotomic(order, std::move(coeffs), true);
}

Cyclotomic Cyclotomic::root_of_unity(int order, long long k)
{
    if (order < 1) {
        throw DomainError("root of unity order must be positive");
    }
    std::vector<Rational> c(static_cast<std::size_t>(order));
    auto e = k % order;
    if (e < 0) {
        e += order;
    }
    c[static_cast<std::size_t>(e)] = 1;
    return Cyclotomic(order, std::move(c), true);
}

void Cyclotomic::normalize()
{
    if (order_ > 1) {
        const auto& phi = cyclotomic_polynomial(order_);
        const auto deg = phi.size() - 1;
        for (auto d = coeffs_.size(); d-- > deg;) {
            if (sgn(coeffs_[d]) == 0) {
                continue;
            }
            const Rational c = coeffs_[d];
            for (std::size_t t = 0; t < deg; ++t) {
                if (phi[t] != 0) {
                    coeffs_[d - deg + t] -= c * phi[t];
                }
            }
            coeffs_[d] = 0;
        }
        for (std::size_t k = 1; k < coeffs_.size(); ++k) {
            if (sgn(coeffs_[k]) != 0) {
                return;
            }
        }
    }
    // rational value: demote to Q
    coeffs_.resize(1);
    order_ = 1;
}

Cyclotomic Cyclotomic::promoted(int order) const
{
    if (order % order_ != 0) {
        throw DomainError("cannot promote order " + std::to_string(order_) + " to " + std::to_string(order));
    }
    if (order == order_) {
        return *this;
    }
    const auto step = static_cast<std::size_t>(order / order_);
    std::vector<Rational> c(static_cast<std::size_t>(order));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        c[k * step] = coeffs_[k];
    }
    // promotion never needs demotion; keep order as requested unless rational
    Cyclotomic out(order, std::move(c), false);
    if (order_ > 1) {
        out.normalize();
    }
    return out;
}

void Cyclotomic::align_with(Cyclotomic& other)
{
    if (order_ == other.order_) {
        return;
    }
    const int l = std::lcm(order_, other.order_);
    *this = promoted(l);
    other = other.promoted(l);
}

bool Cyclotomic::is_zero() const
{
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) {
            return false;
        }
    }
    return true;
}

std::optional<Rational> Cyclotomic::as_rational() const
{
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) != 0) {
            return std::nullopt;
        }
    }
    return coeffs_[0];
}

Cyclotomic Cyclotomic::conj() const
{
    if (order_ == 1) {
        return *this;
    }
    const auto n = coeffs_.size();
    std::vector<Rational> c(n);
    for (std::size_t k = 0; k < n; ++k) {
        c[(n - k) % n] = coeffs_[k];
    }
    return Cyclotomic(order_, std::move(c), true);
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero()) {
        throw DomainError("inverse of zero");
    }
    if (order_ == 1) {
        return Cyclotomic(Rational(1) / coeffs_[0]);
    }
    // Solve x * y = 1 in the power basis 1, z, ..., z^(phi-1).
    const auto deg = cyclotomic_polynomial(order_).size() - 1;
    std::vector<std::vector<Rational>> a(deg, std::vector<Rational>(deg));
    for (std::size_t t = 0; t < deg; ++t) {
        auto column = *this * root_of_unity(order_, static_cast<long long>(t));
        column = column.promoted(order_);
        for (std::size_t r = 0; r < deg; ++r) {
            a[r][t] = column.coeffs_[r];
        }
    }
    std::vector<Rational> b(deg);
    b[0] = 1;
    auto y = solve_rational(std::move(a), std::move(b));
    y.resize(static_cast<std::size_t>(order_));
    return Cyclotomic(order_, std::move(y), true);
}

std::complex<double> Cyclotomic::to_complex() const
{
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) == 0) {
            continue;
        }
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / order_;
        sum += coeffs_[k].get_d() * std::polar(1.0, angle);
    }
    return sum;
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other)
{
    if (other.order_ == 1) {
        coeffs_[0] += other.coeffs_[0];
        if (order_ == 1) {
            return *this;
        }
        normalize();
        return *this;
    }
    Cyclotomic rhs = other;
    align_with(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    normalize();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other)
{
    return *this += -other;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& scalar)
{
    if (sgn(scalar) == 0) {
        *this = Cyclotomic();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other)
{
    if (other.order_ == 1) {
        return *this *= other.coeffs_[0];
    }
    if (order_ == 1) {
        const Rational s = coeffs_[0];
        *this = other;
        return *this *= s;
    }
    Cyclotomic rhs = other;
    align_with(rhs);
    const auto n = coeffs_.size();
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(rhs.coeffs_[j]) == 0) {
                continue;
            }
            c[(i + j) % n] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(c);
    normalize();
    return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.order_ == b.order_) {
        return a.coeffs_ == b.coeffs_;
    }
    Cyclotomic x = a, y = b;
    x.align_with(y);
    return x.coeffs_ == y.coeffs_;
}

std::string Cyclotomic::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const auto& c = coeffs_[k];
        if (sgn(c) == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
        } else if (sgn(c) < 0) {
            os << "-";
        }
        first = false;
        if (k == 0) {
            os << cartsym::to_string(mag);
            continue;
        }
        if (mag != 1) {
            os << cartsym::to_string(mag) << "*";
        }
        os << "z" << order_;
        if (k > 1) {
            os << "^" << k;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const auto n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(a[pivot][col]) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            throw DomainError("singular rational system");
        }
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        const Rational inv = 1 / a[col][col];
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(a[r][col]) == 0) {
                continue;
            }
            const Rational f = a[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        b[r] /= a[r][r];
    }
    return b;
}

} // namespace cartsym
