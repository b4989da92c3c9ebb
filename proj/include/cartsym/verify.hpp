#pragma once

#include <string>
#include <vector>

#include "cartsym/descriptor.hpp"
#include "cartsym/obasis.hpp"

namespace cartsym {

enum class CheckStatus { Pass, Fail, Undecided };
std::string to_string(CheckStatus s);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string id;        // "<group> <character> n=<n>"
    std::string group;     // canonical group descriptor
    std::string character; // character descriptor, or "family"
    long long n = 0;
    std::vector<Check> checks;
    std::vector<std::string> notes;
    double seconds = 0;

    bool passed() const;
    std::size_t count(CheckStatus s) const;
    /// One JSON object on a single line.
    std::string to_json_line() const;
};

enum class Level { Quick, Full };

/// Oracle scale bound: the n*m block oracle only runs when n * m <= this.
inline constexpr long long kOracleLimit = 36;

struct SuiteEntry {
    std::string group;
    /// Character descriptors; "all" expands to the built-in family.
    std::vector<std::string> characters;
    std::vector<long long> ns;
};

using InstanceMatrix = std::vector<SuiteEntry>;

/// S_2..S_5 (principal, sign, theta-1), A_4 (theta-1), the cycle products (3), (2,2),
/// (3,2), (4,3), (2,2,3), the products of cyclics (3;2) in S_5 and S_6 and (2;2) in S_4,
/// dihedral m = 3..12 and 14, all with n in {2, 3}.
InstanceMatrix default_matrix();

/// All checks for one character. Failures are report entries, never exceptions.
VerificationReport verify_instance(const ResolvedGroup& g, const Character& chi, const std::string& character_spec,
                                   long long n, Level level, std::size_t budget = kDefaultSearchBudget);

/// Family-level checks: orthonormality, completeness, sum of symmetrizers, sum of dimensions.
VerificationReport verify_family(const ResolvedGroup& g, long long n);

/// Runs every instance (and one family report per group and n), sorted by id.
/// threads = 0 picks the hardware concurrency.
std::vector<VerificationReport> run_suite(const InstanceMatrix& matrix, Level level,
                                          std::size_t budget = kDefaultSearchBudget, unsigned threads = 0);

} // namespace cartsym
