#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cartsym/chars.hpp"

namespace cartsym {

enum class Verdict { HasOBasis, NoOBasis, Undecided };
enum class Method { Search, Criterion, Obstruction };

std::string to_string(Verdict v);
std::string to_string(Method m);

inline constexpr std::size_t kDefaultSearchBudget = 2000000;

struct OrbitSearch {
    Point representative = 0;
    std::vector<Point> orbit;
    /// lambda(1) [lambda, 1_{G_j}]: the size an orthogonal spanning subset must have.
    long long required = 0;
    /// First pairwise-orthogonal subset of the orbit of the required size, in lexicographic order.
    std::optional<std::vector<Point>> found;
    std::size_t subsets_examined = 0;
    bool budget_exhausted = false;
};

struct OBasisReport {
    std::string character;
    std::vector<OrbitSearch> orbits; // one per surviving representative
    /// A surviving point whose norm^2 lies strictly between 1/2 and 1 (non-linear characters only).
    std::optional<Point> obstruction;
    Verdict verdict = Verdict::Undecided;
    Method method = Method::Search;
};

/// Some j in D-bar with 1/2 < ||f^lambda_ij||^2 < 1, for non-linear lambda. Its
/// presence rules out an O-basis; its absence proves nothing.
std::optional<Point> norm_window_obstruction(const Character& chi);

/// Exhaustive per-orbit search for pairwise-orthogonal standard symmetrized vectors.
/// V^lambda(G) splits orthogonally over i and over the surviving orbits, so an
/// O-basis exists iff every surviving orbit contains lambda(1)[lambda, 1_{G_j}]
/// points with pairwise-zero Gram entries. A search that exceeds limit nodes for
/// some orbit leaves the verdict Undecided unless the norm-window obstruction fires.
OBasisReport search_obasis(const Character& chi, std::size_t limit = kDefaultSearchBudget);

/// For D_2m and psi_h (0 < h < m/2): an O-basis exists iff m = 0 mod 4 h_2, h_2 the 2-part of h.
bool dihedral_criterion(int m, int h);

struct SpaceVerdict {
    Verdict verdict = Verdict::Undecided;
    /// Whether the family is a complete set of irreducibles (sum of squared degrees = |G|).
    bool complete = false;
    std::vector<OBasisReport> per_character;
};

/// Conjunction of the per-character verdicts over the family. With an incomplete
/// family only a negative answer is conclusive; a positive one is reported Undecided.
SpaceVerdict space_obasis_verdict(const std::vector<Character>& family, std::size_t limit = kDefaultSearchBudget);

/// Sum of chi(1)^2 over the family equals |G| and the family is orthonormal.
bool is_complete_family(const std::vector<Character>& family);

} // namespace cartsym
