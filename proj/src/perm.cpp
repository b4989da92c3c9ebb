#include "cartsym/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>

#include "cartsym/error.hpp"

namespace cartsym {

Permutation::Permutation(int degree)
{
    if (degree < 0) {
        throw DomainError("negative permutation degree");
    }
    images_.resize(static_cast<std::size_t>(degree));
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<Point> images)
{
    const auto m = images.size();
    std::vector<bool> seen(m + 1, false);
    for (auto p : images) {
        if (p < 1 || static_cast<std::size_t>(p) > m || seen[static_cast<std::size_t>(p)]) {
            throw DomainError("image list is not a bijection of {1.." + std::to_string(m) + "}");
        }
        seen[static_cast<std::size_t>(p)] = true;
    }
    Permutation out;
    out.images_ = std::move(images);
    return out;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<Point>>& cycles, int degree)
{
    Permutation out(degree);
    std::vector<bool> used(static_cast<std::size_t>(degree) + 1, false);
    for (const auto& cycle : cycles) {
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const Point p = cycle[k];
            if (p < 1 || p > degree) {
                throw DomainError("point " + std::to_string(p) + " outside 1.." + std::to_string(degree));
            }
            if (used[static_cast<std::size_t>(p)]) {
                throw DomainError("point " + std::to_string(p) + " repeated in cycle notation");
            }
            used[static_cast<std::size_t>(p)] = true;
            out.images_[static_cast<std::size_t>(p - 1)] = cycle[(k + 1) % cycle.size()];
        }
    }
    return out;
}

Permutation operator*(const Permutation& p, const Permutation& q)
{
    if (p.degree() != q.degree()) {
        throw DomainError("composing permutations of different degrees");
    }
    Permutation out;
    out.images_.resize(q.images_.size());
    for (std::size_t j = 0; j < q.images_.size(); ++j) {
        out.images_[j] = p(q.images_[j]);
    }
    return out;
}

Permutation Permutation::inverse() const
{
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j) {
        out.images_[static_cast<std::size_t>(images_[j] - 1)] = static_cast<Point>(j + 1);
    }
    return out;
}

bool Permutation::is_identity() const
{
    for (std::size_t j = 0; j < images_.size(); ++j) {
        if (images_[j] != static_cast<Point>(j + 1)) {
            return false;
        }
    }
    return true;
}

long long Permutation::order() const
{
    long long result = 1;
    for (const auto& c : cycles()) {
        result = std::lcm(result, static_cast<long long>(c.size()));
    }
    return result;
}

int Permutation::sign() const
{
    int s = 1;
    for (const auto& c : cycles()) {
        if (c.size() % 2 == 0) {
            s = -s;
        }
    }
    return s;
}

int Permutation::fixed_points() const
{
    int count = 0;
    for (std::size_t j = 0; j < images_.size(); ++j) {
        count += images_[j] == static_cast<Point>(j + 1);
    }
    return count;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(images_.size() + 1, false);
    for (Point start = 1; start <= degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) {
            continue;
        }
        std::vector<Point> cycle;
        for (Point p = start; !seen[static_cast<std::size_t>(p)]; p = (*this)(p)) {
            seen[static_cast<std::size_t>(p)] = true;
            cycle.push_back(p);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string Permutation::to_string() const
{
    const auto cs = cycles();
    if (cs.empty()) {
        return "()";
    }
    std::ostringstream os;
    for (const auto& c : cs) {
        os << '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
            os << (k ? " " : "") << c[k];
        }
        os << ')';
    }
    return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept
{
    std::size_t h = 1469598103934665603ULL;
    for (auto v : p.images()) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ULL;
    }
    return h;
}

Permutation parse_cycles(std::string_view text, int degree)
{
    if (degree < 1) {
        throw ParseError("cycle notation needs a positive degree");
    }
    std::vector<std::vector<Point>> cycles;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    skip_space();
    while (pos < text.size()) {
        if (text[pos] != '(') {
            throw ParseError("expected '(' at position " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
        }
        ++pos;
        std::vector<Point> cycle;
        while (true) {
            while (pos < text.size()
                   && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) {
                ++pos;
            }
            if (pos >= text.size()) {
                throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
            }
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
                throw ParseError("unexpected character '" + std::string(1, text[pos]) + "' in \""
                                 + std::string(text) + "\"");
            }
            long long value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                if (value > 1000000) {
                    throw ParseError("point too large in \"" + std::string(text) + "\"");
                }
                ++pos;
            }
            if (value < 1 || value > degree) {
                throw ParseError("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
            }
            cycle.push_back(static_cast<Point>(value));
        }
        cycles.push_back(std::move(cycle));
        skip_space();
    }
    try {
        return Permutation::from_cycles(cycles, degree);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

// ---------------------------------------------------------------------------

bool PermutationGroup::contains(const Permutation& p) const
{
    return index_.contains(p);
}

std::size_t PermutationGroup::index_of(const Permutation& p) const
{
    auto it = index_.find(p);
    if (it == index_.end()) {
        throw DomainError("permutation " + p.to_string() + " is not in the group");
    }
    return it->second;
}

std::size_t PermutationGroup::multiply(std::size_t a, std::size_t b) const
{
    return index_of(elements_[a] * elements_[b]);
}

std::size_t PermutationGroup::inverse(std::size_t a) const
{
    return inverse_[a];
}

ElementSet PermutationGroup::all() const
{
    ElementSet out(elements_.size());
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
}

bool PermutationGroup::is_subgroup(const ElementSet& h) const
{
    if (h.empty()) {
        return false;
    }
    std::vector<bool> in(elements_.size(), false);
    for (auto x : h) {
        if (x >= elements_.size() || in[x]) {
            return false;
        }
        in[x] = true;
    }
    if (!in[0]) {
        return false;
    }
    for (auto a : h) {
        for (auto b : h) {
            if (!in[multiply(a, b)]) {
                return false;
            }
        }
    }
    return true;
}

PermutationGroup generate_group(int degree, const std::vector<Permutation>& generators, std::size_t cap)
{
    if (degree < 1) {
        throw DomainError("group degree must be positive");
    }
    for (const auto& g : generators) {
        if (g.degree() != degree) {
            throw DomainError("generator " + g.to_string() + " has degree " + std::to_string(g.degree())
                              + ", expected " + std::to_string(degree));
        }
    }
    PermutationGroup out;
    out.degree_ = degree;
    out.generators_ = generators;
    out.elements_.push_back(Permutation(degree));
    out.index_.emplace(out.elements_.front(), 0);
    for (std::size_t next = 0; next < out.elements_.size(); ++next) {
        for (const auto& g : generators) {
            Permutation p = out.elements_[next] * g;
            if (out.index_.contains(p)) {
                continue;
            }
            if (out.elements_.size() >= cap) {
                throw DomainError("group closure exceeds the enumeration cap of " + std::to_string(cap));
            }
            out.index_.emplace(p, out.elements_.size());
            out.elements_.push_back(std::move(p));
        }
    }
    out.inverse_.resize(out.elements_.size());
    for (std::size_t k = 0; k < out.elements_.size(); ++k) {
        out.inverse_[k] = out.index_.at(out.elements_[k].inverse());
    }
    return out;
}

PermutationGroup generate_group(const std::vector<Permutation>& generators, std::size_t cap)
{
    if (generators.empty()) {
        throw DomainError("cannot infer the degree of a group without generators");
    }
    return generate_group(generators.front().degree(), generators, cap);
}

std::size_t OrbitData::orbit_index(Point j) const
{
    for (std::size_t k = 0; k < orbits.size(); ++k) {
        if (std::binary_search(orbits[k].begin(), orbits[k].end(), j)) {
            return k;
        }
    }
    throw DomainError("point " + std::to_string(j) + " lies in no orbit");
}

OrbitData orbits(const PermutationGroup& g)
{
    OrbitData out;
    const int m = g.degree();
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (Point start = 1; start <= m; ++start) {
        if (seen[static_cast<std::size_t>(start)]) {
            continue;
        }
        std::vector<Point> orbit{start};
        seen[static_cast<std::size_t>(start)] = true;
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            for (const auto& gen : g.generators()) {
                const Point p = gen(orbit[k]);
                if (!seen[static_cast<std::size_t>(p)]) {
                    seen[static_cast<std::size_t>(p)] = true;
                    orbit.push_back(p);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.representatives.push_back(start);
        out.stabilizers.push_back(stabilizer(g, start));
        out.orbits.push_back(std::move(orbit));
    }
    return out;
}

ElementSet stabilizer(const PermutationGroup& g, Point j)
{
    if (j < 1 || j > g.degree()) {
        throw DomainError("point " + std::to_string(j) + " outside 1.." + std::to_string(g.degree()));
    }
    ElementSet out;
    for (std::size_t k = 0; k < g.order(); ++k) {
        if (g.element(k)(j) == j) {
            out.push_back(k);
        }
    }
    return out;
}

ElementSet left_coset_reps(const PermutationGroup& g, const ElementSet& h)
{
    if (!g.is_subgroup(h)) {
        throw DomainError("element list is not a subgroup");
    }
    ElementSet reps;
    std::vector<bool> covered(g.order(), false);
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (covered[x]) {
            continue;
        }
        reps.push_back(x);
        for (auto y : h) {
            covered[g.multiply(x, y)] = true;
        }
    }
    return reps;
}

std::vector<ElementSet> conjugacy_classes(const PermutationGroup& g)
{
    std::vector<ElementSet> out;
    std::vector<bool> assigned(g.order(), false);
    for (std::size_t a = 0; a < g.order(); ++a) {
        if (assigned[a]) {
            continue;
        }
        ElementSet cls;
        for (std::size_t x = 0; x < g.order(); ++x) {
            const auto c = g.multiply(g.multiply(x, a), g.inverse(x));
            if (!assigned[c]) {
                assigned[c] = true;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    return out;
}

std::optional<std::size_t> transporter(const PermutationGroup& g, Point j, Point s)
{
    for (std::size_t k = 0; k < g.order(); ++k) {
        if (g.element(k)(j) == s) {
            return k;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

void validate_disjoint_cycles(const std::vector<std::vector<Point>>& cycles, int degree)
{
    std::vector<bool> used(static_cast<std::size_t>(std::max(degree, 0)) + 1, false);
    for (const auto& c : cycles) {
        if (c.size() < 2) {
            throw DomainError("cycles must have length at least 2");
        }
        for (auto p : c) {
            if (p < 1 || p > degree) {
                throw DomainError("point " + std::to_string(p) + " outside 1.." + std::to_string(degree));
            }
            if (used[static_cast<std::size_t>(p)]) {
                throw DomainError("cycles are not disjoint: point " + std::to_string(p) + " repeats");
            }
            used[static_cast<std::size_t>(p)] = true;
        }
    }
}

PermutationGroup cyclic_from_cycle_product(const std::vector<std::vector<Point>>& cycles, int degree)
{
    validate_disjoint_cycles(cycles, degree);
    return generate_group(degree, {Permutation::from_cycles(cycles, degree)});
}

PermutationGroup product_of_cyclics(const std::vector<std::vector<Point>>& cycles, int degree)
{
    validate_disjoint_cycles(cycles, degree);
    if (cycles.empty()) {
        throw DomainError("a product of cyclic groups needs at least one cycle");
    }
    std::vector<Permutation> gens;
    for (const auto& c : cycles) {
        gens.push_back(Permutation::from_cycles({c}, degree));
    }
    return generate_group(degree, gens);
}

Permutation dihedral_reflection(int m)
{
    std::vector<Point> images(static_cast<std::size_t>(m));
    images[0] = 1;
    for (Point j = 2; j <= m; ++j) {
        images[static_cast<std::size_t>(j - 1)] = m + 2 - j;
    }
    return Permutation::from_images(std::move(images));
}

PermutationGroup dihedral(int m)
{
    if (m < 3) {
        throw DomainError("dihedral group needs m >= 3, got " + std::to_string(m));
    }
    std::vector<Point> rotation(static_cast<std::size_t>(m));
    std::iota(rotation.begin(), rotation.end(), 1);
    const auto r = Permutation::from_cycles({rotation}, m);
    return generate_group(m, {r, dihedral_reflection(m)});
}

PermutationGroup symmetric(int m)
{
    if (m < 1) {
        throw DomainError("symmetric group needs m >= 1");
    }
    std::vector<Permutation> gens;
    if (m >= 2) {
        gens.push_back(Permutation::from_cycles({{1, 2}}, m));
    }
    if (m >= 3) {
        std::vector<Point> all(static_cast<std::size_t>(m));
        std::iota(all.begin(), all.end(), 1);
        gens.push_back(Permutation::from_cycles({all}, m));
    }
    return generate_group(m, gens);
}

PermutationGroup alternating(int m)
{
    if (m < 1) {
        throw DomainError("alternating group needs m >= 1");
    }
    std::vector<Permutation> gens;
    for (Point k = 3; k <= m; ++k) {
        gens.push_back(Permutation::from_cycles({{1, 2, k}}, m));
    }
    return generate_group(m, gens);
}

} // namespace cartsym
