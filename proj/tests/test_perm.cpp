#include <doctest.h>

#include <set>

#include "cartsym/error.hpp"
#include "cartsym/perm.hpp"

using namespace cartsym;

namespace {

long long factorial(int m)
{
    long long f = 1;
    for (int k = 2; k <= m; ++k) {
        f *= k;
    }
    return f;
}

} // namespace

TEST_CASE("cycle notation")
{
    const auto p = parse_cycles("(1 2 3)(4 5)", 5);
    CHECK(p(1) == 2);
    CHECK(p(3) == 1);
    CHECK(p(5) == 4);
    CHECK(p.to_string() == "(1 2 3)(4 5)");
    CHECK(parse_cycles("(3,1,2)", 3) == parse_cycles("(1 2 3)", 3));
    CHECK(parse_cycles("()", 4).is_identity());
    CHECK(parse_cycles("", 4).to_string() == "()");
    CHECK_THROWS_AS(parse_cycles("(1 2", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1 1)", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1 4)", 3), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1 x)", 3), ParseError);
    for (const char* s : {"(1 4 2)(3 6)", "(2 5)", "(1 2 3 4 5 6)"}) {
        const auto q = parse_cycles(s, 6);
        CHECK(parse_cycles(q.to_string(), 6) == q);
    }
}

TEST_CASE("composition applies the right factor first")
{
    const auto a = parse_cycles("(1 2)", 3);
    const auto b = parse_cycles("(2 3)", 3);
    // (a*b)(3) = a(b(3)) = a(2) = 1
    CHECK((a * b)(3) == 1);
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK(parse_cycles("(1 2 3 4)", 4).order() == 4);
    CHECK(parse_cycles("(1 2)(3 4 5)", 5).order() == 6);
    CHECK(parse_cycles("(1 2)(3 4 5)", 5).sign() == -1);
    CHECK(parse_cycles("(1 2 3)", 4).fixed_points() == 1);
    CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), DomainError);
}

TEST_CASE("group orders")
{
    for (int m = 1; m <= 6; ++m) {
        CHECK(static_cast<long long>(symmetric(m).order()) == factorial(m));
    }
    for (int m = 3; m <= 6; ++m) {
        CHECK(static_cast<long long>(alternating(m).order()) == factorial(m) / 2);
    }
    for (int m = 3; m <= 14; ++m) {
        const auto d = dihedral(m);
        CHECK(d.order() == static_cast<std::size_t>(2 * m));
        // s r s^-1 = r^-1
        const auto& r = d.generators()[0];
        const auto& s = d.generators()[1];
        CHECK(s * r * s.inverse() == r.inverse());
        CHECK(s(1) == 1);
    }
    CHECK(cyclic_from_cycle_product({{1, 2, 3}, {4, 5}}, 5).order() == 6);
    CHECK(product_of_cyclics({{1, 2, 3}, {4, 5}}, 6).order() == 6);
    CHECK(cyclic_from_cycle_product({{1, 2, 3, 4}, {5, 6, 7}}, 7).order() == 12);
    CHECK_THROWS_AS(generate_group(5, {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2)", 5)}, 100), DomainError);
}

TEST_CASE("group is closed and identity comes first")
{
    const auto g = dihedral(6);
    CHECK(g.element(0).is_identity());
    for (std::size_t a = 0; a < g.order(); ++a) {
        CHECK(g.element(g.inverse(a)) == g.element(a).inverse());
        for (std::size_t b = 0; b < g.order(); ++b) {
            CHECK(g.element(g.multiply(a, b)) == g.element(a) * g.element(b));
        }
    }
    CHECK(g.is_subgroup(g.all()));
    CHECK_FALSE(g.is_subgroup({1}));
}

TEST_CASE("orbit-stabilizer")
{
    for (const auto& g : {symmetric(4), alternating(4), dihedral(5), dihedral(8),
                          cyclic_from_cycle_product({{1, 2}, {3, 4}}, 5), product_of_cyclics({{1, 2, 3}, {4, 5}}, 6)}) {
        const auto od = orbits(g);
        std::size_t covered = 0;
        for (std::size_t k = 0; k < od.orbits.size(); ++k) {
            covered += od.orbits[k].size();
            CHECK(od.representatives[k] == od.orbits[k].front());
            CHECK(od.orbits[k].size() * od.stabilizers[k].size() == g.order());
            CHECK(g.is_subgroup(od.stabilizers[k]));
            for (auto j : od.orbits[k]) {
                CHECK(od.orbit_index(j) == k);
                const auto t = transporter(g, od.representatives[k], j);
                REQUIRE(t.has_value());
                CHECK(g.element(*t)(od.representatives[k]) == j);
            }
            const auto reps = left_coset_reps(g, od.stabilizers[k]);
            CHECK(reps.size() == od.orbits[k].size());
            CHECK(g.element(reps.front()).is_identity());
        }
        CHECK(covered == static_cast<std::size_t>(g.degree()));
    }
    const auto g = cyclic_from_cycle_product({{1, 2}}, 3);
    CHECK_FALSE(transporter(g, 1, 3).has_value());
    CHECK(orbits(g).orbits.size() == 2);
}

TEST_CASE("conjugacy classes")
{
    CHECK(conjugacy_classes(symmetric(4)).size() == 5);
    CHECK(conjugacy_classes(alternating(4)).size() == 4);
    CHECK(conjugacy_classes(dihedral(4)).size() == 5);
    CHECK(conjugacy_classes(dihedral(5)).size() == 4);
    CHECK(conjugacy_classes(dihedral(6)).size() == 6);
    const auto cls = conjugacy_classes(symmetric(3));
    CHECK(cls.front().size() == 1);
    std::set<std::size_t> seen;
    for (const auto& c : cls) {
        seen.insert(c.begin(), c.end());
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("disjoint cycle validation")
{
    CHECK_THROWS_AS(validate_disjoint_cycles({{1, 2}, {2, 3}}, 3), DomainError);
    CHECK_THROWS_AS(validate_disjoint_cycles({{1}}, 3), DomainError);
    CHECK_THROWS_AS(validate_disjoint_cycles({{1, 4}}, 3), DomainError);
    CHECK_NOTHROW(validate_disjoint_cycles({{1, 2}, {3, 4}}, 4));
    CHECK_THROWS_AS(dihedral(2), DomainError);
}
