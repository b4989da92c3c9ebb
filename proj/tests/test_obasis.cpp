#include <doctest.h>

#include "cartsym/error.hpp"
#include "cartsym/obasis.hpp"
#include "cartsym/symclass.hpp"

using namespace cartsym;

namespace {

GroupPtr share(PermutationGroup g)
{
    return std::make_shared<const PermutationGroup>(std::move(g));
}

Character psi(const GroupPtr& g, int h)
{
    return dihedral_character(g, {DihedralCharId::Kind::Psi, h});
}

// The found points must be pairwise orthogonal, have nonzero norm and be as many as the cyclic dimension.
void check_witness(const Character& chi, const OBasisReport& rep)
{
    for (const auto& os : rep.orbits) {
        REQUIRE(os.found.has_value());
        const auto& pts = *os.found;
        CHECK(static_cast<long long>(pts.size()) == dim_cyclic_subspace(chi, os.representative));
        for (std::size_t a = 0; a < pts.size(); ++a) {
            CHECK_FALSE(gram_entry(chi, pts[a], pts[a]).is_zero());
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                CHECK(gram_entry(chi, pts[a], pts[b]).is_zero());
            }
        }
    }
}

} // namespace

TEST_CASE("dihedral criterion")
{
    CHECK(dihedral_criterion(4, 1));
    CHECK(dihedral_criterion(8, 1));
    CHECK(dihedral_criterion(8, 2));
    CHECK(dihedral_criterion(8, 3));
    CHECK_FALSE(dihedral_criterion(10, 2));
    CHECK_FALSE(dihedral_criterion(6, 1));
    CHECK(dihedral_criterion(12, 1));
    CHECK_FALSE(dihedral_criterion(12, 2));
    CHECK_THROWS_AS(dihedral_criterion(6, 3), DomainError);
    CHECK_THROWS_AS(dihedral_criterion(2, 1), DomainError);
}

TEST_CASE("criterion agrees with exhaustive search")
{
    for (int m = 3; m <= 12; ++m) {
        const auto g = share(dihedral(m));
        for (int h = 1; 2 * h < m; ++h) {
            CAPTURE(m);
            CAPTURE(h);
            const auto chi = psi(g, h);
            const auto rep = search_obasis(chi);
            REQUIRE(rep.verdict != Verdict::Undecided);
            CHECK((rep.verdict == Verdict::HasOBasis) == dihedral_criterion(m, h));
            if (rep.verdict == Verdict::HasOBasis) {
                check_witness(chi, rep);
            }
            if (m == 5 || m == 6 || m == 7 || m == 9) {
                CHECK(rep.verdict == Verdict::NoOBasis);
            }
        }
    }
}

TEST_CASE("linear characters always have an O-basis")
{
    for (int m = 3; m <= 8; ++m) {
        const auto g = share(dihedral(m));
        for (const auto& id : dihedral_character_ids(m)) {
            if (id.kind == DihedralCharId::Kind::Lambda) {
                CHECK(search_obasis(dihedral_character(g, id)).verdict == Verdict::HasOBasis);
            }
        }
    }
    const auto s = share(symmetric(4));
    CHECK(search_obasis(sign_character(s)).verdict == Verdict::HasOBasis); // vacuous: V^sign = 0
    CHECK(search_obasis(principal(s)).verdict == Verdict::HasOBasis);
}

TEST_CASE("space-level verdict for dihedral groups")
{
    for (int m = 3; m <= 12; ++m) {
        const auto g = share(dihedral(m));
        std::vector<Character> fam;
        for (const auto& id : dihedral_character_ids(m)) {
            fam.push_back(dihedral_character(g, id));
        }
        const auto v = space_obasis_verdict(fam);
        CHECK(v.complete);
        CHECK((v.verdict == Verdict::HasOBasis) == (m == 4 || m == 8));
    }
}

TEST_CASE("norm-window obstruction")
{
    for (int m = 3; m <= 5; ++m) {
        const auto chi = theta_minus_one(share(symmetric(m)));
        REQUIRE(norm_window_obstruction(chi).has_value());
        CHECK(search_obasis(chi).verdict == Verdict::NoOBasis);
    }
    const auto a4 = theta_minus_one(share(alternating(4)));
    CHECK(norm_window_obstruction(a4).has_value());
    CHECK(search_obasis(a4).verdict == Verdict::NoOBasis);
    // converse fails: no obstruction, still no O-basis
    for (int q : {5, 7}) {
        const auto g = share(dihedral(q));
        for (int h = 1; 2 * h < q; ++h) {
            const auto chi = psi(g, h);
            CHECK(norm_squared(chi, 1) < make_rational(1, 2));
            CHECK_FALSE(norm_window_obstruction(chi).has_value());
            CHECK(search_obasis(chi).verdict == Verdict::NoOBasis);
        }
    }
    // linear characters never trigger it
    CHECK_FALSE(norm_window_obstruction(principal(share(symmetric(3)))).has_value());
}

TEST_CASE("tiny budget")
{
    const auto chi = psi(share(dihedral(12)), 1);
    const auto rep = search_obasis(chi, 1);
    CHECK(rep.verdict == Verdict::Undecided);
    CHECK(rep.orbits.front().budget_exhausted);
    // the obstruction still decides when the budget runs out
    const auto theta = theta_minus_one(share(symmetric(5)));
    const auto r2 = search_obasis(theta, 1);
    CHECK(r2.verdict == Verdict::NoOBasis);
    CHECK(r2.method == Method::Obstruction);
}

TEST_CASE("family completeness")
{
    const auto s4 = share(symmetric(4));
    CHECK_FALSE(is_complete_family({principal(s4), sign_character(s4), theta_minus_one(s4)}));
    const auto s3 = share(symmetric(3));
    CHECK(is_complete_family({principal(s3), sign_character(s3), theta_minus_one(s3)}));
    const auto v = space_obasis_verdict({principal(s4), sign_character(s4)});
    CHECK_FALSE(v.complete);
    CHECK(v.verdict == Verdict::Undecided);
    const auto w = space_obasis_verdict({principal(s4), theta_minus_one(s4)});
    CHECK(w.verdict == Verdict::NoOBasis);
}
