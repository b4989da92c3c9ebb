#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cartsym {

/// A point of I_m = {1, ..., m}. Points are 1-based throughout the public API.
using Point = int;

/// Element of S_m stored in image form: images()[j - 1] = tau(j).
class Permutation {
public:
    Permutation() = default;

    /// Identity of the given degree.
    explicit Permutation(int degree);

    /// From 1-based images; throws DomainError unless a bijection of {1..m}.
    static Permutation from_images(std::vector<Point> images);

    /// From disjoint cycles (each a list of 1-based points).
    static Permutation from_cycles(const std::vector<std::vector<Point>>& cycles, int degree);

    int degree() const { return static_cast<int>(images_.size()); }
    const std::vector<Point>& images() const { return images_; }

    Point operator()(Point j) const { return images_[static_cast<std::size_t>(j - 1)]; }

    /// (p * q)(j) = p(q(j)).
    friend Permutation operator*(const Permutation& p, const Permutation& q);
    Permutation inverse() const;
    bool is_identity() const;
    /// Order of the element in S_m.
    long long order() const;
    /// +1 for even permutations, -1 for odd.
    int sign() const;
    int fixed_points() const;

    /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
    std::vector<std::vector<Point>> cycles() const;
    /// Cycle notation, "()" for the identity.
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<Point> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

/// Parses disjoint-cycle notation such as "(1 2 3)(4 5)" or "(1,2,3)".
/// "()" and the empty string denote the identity.
/// Throws ParseError on malformed input, repeated points, or points beyond the degree.
Permutation parse_cycles(std::string_view text, int degree);

/// Indices into PermutationGroup::elements(); used for subgroups and classes.
using ElementSet = std::vector<std::size_t>;

/// A finite subgroup of S_m with every element enumerated (identity first).
class PermutationGroup {
public:
    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(std::size_t index) const { return elements_[index]; }

    bool contains(const Permutation& p) const;
    /// Position of p in elements(); throws DomainError if p is not in the group.
    std::size_t index_of(const Permutation& p) const;
    /// Index of the product / inverse, computed through the lookup table.
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const;

    /// All element indices.
    ElementSet all() const;
    /// True when the listed elements form a subgroup.
    bool is_subgroup(const ElementSet& h) const;

private:
    friend PermutationGroup generate_group(int degree, const std::vector<Permutation>& generators,
                                           std::size_t cap);

    int degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
    std::vector<std::size_t> inverse_;
};

using GroupPtr = std::shared_ptr<const PermutationGroup>;

inline constexpr std::size_t kDefaultGroupCap = 100000;

/// Closure of the generators under composition. Throws DomainError on mixed
/// degrees and when the closure exceeds cap.
PermutationGroup generate_group(int degree, const std::vector<Permutation>& generators,
                                std::size_t cap = kDefaultGroupCap);
PermutationGroup generate_group(const std::vector<Permutation>& generators, std::size_t cap = kDefaultGroupCap);

struct OrbitData {
    /// Orbits in order of their smallest point; each orbit sorted ascending.
    std::vector<std::vector<Point>> orbits;
    /// Smallest point of each orbit, ascending.
    std::vector<Point> representatives;
    /// stabilizers[k] is G_j for j = representatives[k].
    std::vector<ElementSet> stabilizers;

    /// Index into orbits of the orbit containing j.
    std::size_t orbit_index(Point j) const;
};

OrbitData orbits(const PermutationGroup& g);

/// G_j = { g in G : g(j) = j }. Throws DomainError if j is out of range.
ElementSet stabilizer(const PermutationGroup& g, Point j);

/// One element per left coset xH, identity first. Throws DomainError if H is not a subgroup.
ElementSet left_coset_reps(const PermutationGroup& g, const ElementSet& h);

/// Partition of the elements under conjugation; the class of the identity comes first.
std::vector<ElementSet> conjugacy_classes(const PermutationGroup& g);

/// Some element mapping j to s, if any (as an element index).
std::optional<std::size_t> transporter(const PermutationGroup& g, Point j, Point s);

// Built-in families. Generators are canonical and documented per function.

/// <sigma_1 ... sigma_p>: one generator, the product of the given disjoint cycles.
PermutationGroup cyclic_from_cycle_product(const std::vector<std::vector<Point>>& cycles, int degree);
/// <sigma_1> ... <sigma_k>: one generator per disjoint cycle.
PermutationGroup product_of_cyclics(const std::vector<std::vector<Point>>& cycles, int degree);
/// D_2m inside S_m (m >= 3): generators r = (1 2 ... m) and s with s(1) = 1, s(j) = m + 2 - j.
PermutationGroup dihedral(int m);
PermutationGroup symmetric(int m);
PermutationGroup alternating(int m);

/// The reflection s of dihedral(m).
Permutation dihedral_reflection(int m);

/// Checks that the cycles are pairwise disjoint, non-trivial and within the degree.
void validate_disjoint_cycles(const std::vector<std::vector<Point>>& cycles, int degree);

} // namespace cartsym
