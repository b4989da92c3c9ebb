#include "cartsym/obasis.hpp"

#include "cartsym/error.hpp"
#include "cartsym/symclass.hpp"

namespace cartsym {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::HasOBasis:
        return "has-O-basis";
    case Verdict::NoOBasis:
        return "no-O-basis";
    default:
        return "undecided";
    }
}

std::string to_string(Method m)
{
    switch (m) {
    case Method::Search:
        return "search";
    case Method::Criterion:
        return "criterion";
    default:
        return "obstruction";
    }
}

std::optional<Point> norm_window_obstruction(const Character& chi)
{
    if (chi.degree() < 2) {
        return std::nullopt;
    }
    const auto od = orbits(chi.group());
    const Rational half = make_rational(1, 2);
    for (auto j : od.representatives) {
        const auto n2 = norm_squared(chi, j);
        if (sgn(n2) != 0 && n2 > half && n2 < 1) {
            return j;
        }
    }
    return std::nullopt;
}

namespace {

// Lexicographic backtracking over subsets whose points are pairwise orthogonal.
class OrthogonalSubsetSearch {
public:
    OrthogonalSubsetSearch(std::vector<std::vector<bool>> orthogonal, std::size_t size, std::size_t limit)
        : orthogonal_(std::move(orthogonal)), size_(size), limit_(limit)
    {
    }

    std::optional<std::vector<std::size_t>> run()
    {
        if (extend(0)) {
            return chosen_;
        }
        return std::nullopt;
    }

    std::size_t examined() const { return examined_; }
    bool exhausted() const { return exhausted_; }

private:
    bool extend(std::size_t start)
    {
        if (chosen_.size() == size_) {
            return true;
        }
        const auto n = orthogonal_.size();
        for (std::size_t c = start; c + (size_ - chosen_.size()) <= n; ++c) {
            if (++examined_ > limit_) {
                exhausted_ = true;
                return false;
            }
            bool ok = true;
            for (auto x : chosen_) {
                if (!orthogonal_[x][c]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                continue;
            }
            chosen_.push_back(c);
            if (extend(c + 1)) {
                return true;
            }
            chosen_.pop_back();
            if (exhausted_) {
                return false;
            }
        }
        return false;
    }

    std::vector<std::vector<bool>> orthogonal_;
    std::size_t size_;
    std::size_t limit_;
    std::vector<std::size_t> chosen_;
    std::size_t examined_ = 0;
    bool exhausted_ = false;
};

} // namespace

OBasisReport search_obasis(const Character& chi, std::size_t limit)
{
    OBasisReport report;
    report.character = chi.label();
    report.obstruction = norm_window_obstruction(chi);

    const auto od = orbits(chi.group());
    bool all_found = true;
    bool undecided = false;
    for (std::size_t k = 0; k < od.orbits.size(); ++k) {
        const auto required = dim_cyclic_subspace(chi, od.representatives[k]);
        if (required == 0) {
            continue;
        }
        OrbitSearch os;
        os.representative = od.representatives[k];
        os.orbit = od.orbits[k];
        os.required = required;
        const auto size = os.orbit.size();
        std::vector<std::vector<bool>> orthogonal(size, std::vector<bool>(size, false));
        for (std::size_t a = 0; a < size; ++a) {
            for (std::size_t b = a + 1; b < size; ++b) {
                const bool zero = gram_entry(chi, os.orbit[a], os.orbit[b]).is_zero();
                orthogonal[a][b] = orthogonal[b][a] = zero;
            }
        }
        OrthogonalSubsetSearch search(std::move(orthogonal), static_cast<std::size_t>(required), limit);
        if (auto hit = search.run()) {
            std::vector<Point> points;
            for (auto idx : *hit) {
                points.push_back(os.orbit[idx]);
            }
            os.found = std::move(points);
        } else {
            all_found = false;
            undecided = undecided || search.exhausted();
        }
        os.subsets_examined = search.examined();
        os.budget_exhausted = search.exhausted();
        report.orbits.push_back(std::move(os));
    }

    if (all_found) {
        report.verdict = Verdict::HasOBasis;
    } else if (!undecided) {
        report.verdict = Verdict::NoOBasis;
    } else if (report.obstruction) {
        report.verdict = Verdict::NoOBasis;
        report.method = Method::Obstruction;
    } else {
        // an orbit that was searched to completion without success settles it
        bool settled = false;
        for (const auto& os : report.orbits) {
            settled = settled || (!os.found && !os.budget_exhausted);
        }
        report.verdict = settled ? Verdict::NoOBasis : Verdict::Undecided;
    }
    if (report.obstruction && report.verdict == Verdict::HasOBasis) {
        throw InvariantViolation("norm-window obstruction at point " + std::to_string(*report.obstruction)
                                 + " contradicts the O-basis found for " + chi.label());
    }
    return report;
}

bool dihedral_criterion(int m, int h)
{
    if (m < 3) {
        throw DomainError("dihedral criterion needs m >= 3");
    }
    if (h < 1 || 2 * h >= m) {
        throw DomainError("dihedral criterion needs 0 < h < m/2");
    }
    return m % (4 * two_part(h)) == 0;
}

bool is_complete_family(const std::vector<Character>& family)
{
    if (family.empty()) {
        return false;
    }
    long long sum = 0;
    for (const auto& chi : family) {
        sum += chi.degree() * chi.degree();
    }
    if (static_cast<std::size_t>(sum) != family.front().group().order()) {
        return false;
    }
    for (std::size_t a = 0; a < family.size(); ++a) {
        for (std::size_t b = a; b < family.size(); ++b) {
            const auto ip = inner_product(family[a], family[b]);
            if (ip != Cyclotomic(a == b ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

SpaceVerdict space_obasis_verdict(const std::vector<Character>& family, std::size_t limit)
{
    SpaceVerdict out;
    out.complete = is_complete_family(family);
    bool any_no = false;
    bool any_undecided = false;
    for (const auto& chi : family) {
        auto report = search_obasis(chi, limit);
        any_no = any_no || report.verdict == Verdict::NoOBasis;
        any_undecided = any_undecided || report.verdict == Verdict::Undecided;
        out.per_character.push_back(std::move(report));
    }
    if (any_no) {
        out.verdict = Verdict::NoOBasis;
    } else if (any_undecided || !out.complete) {
        out.verdict = Verdict::Undecided;
    } else {
        out.verdict = Verdict::HasOBasis;
    }
    return out;
}

} // namespace cartsym
