#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "cartsym/cyclo.hpp"
#include "cartsym/error.hpp"

using namespace cartsym;

namespace {

// Brute-force oracles.
long long mobius_oracle(long long n)
{
    long long sign = 1;
    for (long long p = 2; p <= n; ++p) {
        if (n % p) {
            continue;
        }
        n /= p;
        if (n % p == 0) {
            return 0;
        }
        sign = -sign;
    }
    return sign;
}

long long totient_oracle(long long n)
{
    long long c = 0;
    for (long long k = 1; k <= n; ++k) {
        c += std::gcd(k, n) == 1;
    }
    return c;
}

Cyclotomic random_cyclo(std::mt19937& rng, int order)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    Cyclotomic out;
    for (int k = 0; k < order; ++k) {
        out += Cyclotomic::root_of_unity(order, k) * make_rational(num(rng), den(rng));
    }
    return out;
}

} // namespace

TEST_CASE("rational helpers")
{
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(4, 2)) == "2");
    CHECK(parse_rational(" -7/21 ") == make_rational(-1, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    long long v = 0;
    CHECK(is_integer(make_rational(10, 5), &v));
    CHECK(v == 2);
    CHECK_FALSE(is_integer(make_rational(1, 2)));
}

TEST_CASE("number theory against brute force")
{
    for (long long n = 1; n <= 60; ++n) {
        CHECK(mobius(n) == mobius_oracle(n));
        CHECK(totient(n) == totient_oracle(n));
        long long sum = 0;
        for (auto d : divisors(n)) {
            CHECK(n % d == 0);
            sum += totient(d);
        }
        CHECK(sum == n);
    }
    CHECK(two_part(12) == 4);
    CHECK(two_part(7) == 1);
    CHECK(two_part(8) == 8);
    CHECK(lcm_of({4, 6, 9}) == 36);
}

TEST_CASE("ramanujan sum equals the exponential sum")
{
    for (long long m = 1; m <= 30; ++m) {
        for (long long q = 0; q <= 30; ++q) {
            std::complex<double> z = 0;
            Cyclotomic exact;
            for (long long s = 1; s <= m; ++s) {
                if (std::gcd(s, m) == 1) {
                    z += std::polar(1.0, 2 * M_PI * double(q * s) / double(m));
                    exact += Cyclotomic::root_of_unity(static_cast<int>(m), q * s);
                }
            }
            const auto c = ramanujan(m, q);
            CHECK(std::abs(z.imag()) < 1e-9);
            CHECK(std::abs(z.real() - double(c)) < 1e-9);
            CHECK(exact == Cyclotomic(c));
        }
    }
}

TEST_CASE("cyclotomic polynomials")
{
    for (int n = 1; n <= 40; ++n) {
        const auto& phi = cyclotomic_polynomial(n);
        CHECK(static_cast<long long>(phi.size()) - 1 == totient(n));
        // every primitive n-th root is a zero
        std::complex<double> z = std::polar(1.0, 2 * M_PI / n), acc = 0, pw = 1;
        for (const auto& c : phi) {
            acc += c.get_d() * pw;
            pw *= z;
        }
        CHECK(std::abs(acc) < 1e-8);
    }
}

TEST_CASE("roots of unity")
{
    const auto z = Cyclotomic::root_of_unity(12, 1);
    Cyclotomic p(1);
    for (int k = 0; k < 12; ++k) {
        p *= z;
    }
    CHECK(p == Cyclotomic(1));
    CHECK(Cyclotomic::root_of_unity(12, 6) == Cyclotomic(-1));
    CHECK(Cyclotomic::root_of_unity(4, 1) * Cyclotomic::root_of_unity(4, 1) == Cyclotomic(-1));
    // zeta_5 + zeta_5^-1 = (sqrt 5 - 1)/2
    const auto psi = Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, -1);
    CHECK(std::abs(psi.to_complex().real() - (std::sqrt(5.0) - 1) / 2) < 1e-12);
    CHECK(psi.conj() == psi);
    // sum of all 8th roots vanishes; the order demotes to 1
    Cyclotomic s;
    for (int k = 0; k < 8; ++k) {
        s += Cyclotomic::root_of_unity(8, k);
    }
    CHECK(s.is_zero());
    CHECK(s.order() == 1);
}

TEST_CASE("field laws on random elements")
{
    std::mt19937 rng(7);
    for (int order : {1, 3, 4, 5, 6, 8, 12}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto a = random_cyclo(rng, order);
            const auto b = random_cyclo(rng, order);
            const auto c = random_cyclo(rng, 2 * order);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b).conj() == a.conj() * b.conj());
            const auto za = a.to_complex(), zb = b.to_complex();
            CHECK(std::abs((a * b).to_complex() - za * zb) < 1e-9);
            CHECK(std::abs(a.conj().to_complex() - std::conj(za)) < 1e-9);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Cyclotomic(1));
                CHECK((b / a) * a == b);
            }
            CHECK((a - a).is_zero());
            const auto norm = a * a.conj();
            CHECK(norm.conj() == norm);
        }
    }
}

TEST_CASE("mixed orders promote to the lcm")
{
    const auto a = Cyclotomic::root_of_unity(3, 1);
    const auto b = Cyclotomic::root_of_unity(4, 1);
    const auto c = a * b;
    CHECK(c == Cyclotomic::root_of_unity(12, 7));
    CHECK(a.promoted(12) == a);
    CHECK(a.promoted(12) == Cyclotomic::root_of_unity(12, 4));
    CHECK_THROWS(Cyclotomic(0).inverse());
}

TEST_CASE("as_rational")
{
    CHECK(Cyclotomic(make_rational(3, 4)).as_rational() == make_rational(3, 4));
    CHECK_FALSE(Cyclotomic::root_of_unity(3, 1).as_rational().has_value());
    const auto x = Cyclotomic::root_of_unity(6, 1) + Cyclotomic::root_of_unity(6, 5);
    REQUIRE(x.as_rational().has_value());
    CHECK(*x.as_rational() == 1);
}

TEST_CASE("rational linear solve")
{
    std::vector<std::vector<Rational>> a{{2, 1}, {1, 3}};
    std::vector<Rational> b{3, 5};
    const auto x = solve_rational(a, b);
    CHECK(x[0] == make_rational(4, 5));
    CHECK(x[1] == make_rational(7, 5));
}
