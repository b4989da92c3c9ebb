#pragma once

#include <string>
#include <vector>

#include "cartsym/cyclo.hpp"
#include "cartsym/perm.hpp"

namespace cartsym {

/// Class function on a permutation group with cyclotomic values, stored densely
/// by element index. Constructing one directly performs no validation; use
/// validate_class_function() for untrusted values.
class Character {
public:
    Character(GroupPtr group, std::vector<Cyclotomic> values, std::string label);

    const PermutationGroup& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    const std::vector<Cyclotomic>& values() const { return values_; }
    const Cyclotomic& operator[](std::size_t element) const { return values_[element]; }
    const Cyclotomic& operator()(const Permutation& g) const { return values_[group_->index_of(g)]; }
    const std::string& label() const { return label_; }

    /// Value at the identity. Throws InvariantViolation unless it is a positive integer.
    long long degree() const;
    bool is_linear() const { return degree() == 1; }

    /// Copy with one value replaced (used for negative controls).
    Character with_value(std::size_t element, Cyclotomic value) const;

private:
    GroupPtr group_;
    std::vector<Cyclotomic> values_;
    std::string label_;
};

Character principal(const GroupPtr& g);
/// Alternating (sign) character restricted to G.
Character sign_character(const GroupPtr& g);
/// theta(sigma) = number of fixed points. Not irreducible in general.
Character fixed_point_theta(const GroupPtr& g);
/// theta - 1; throws DomainError unless irreducible (i.e. G is 2-transitive).
Character theta_minus_one(const GroupPtr& g);

/// lambda_q(g0^s) = zeta_M^(q s) where g0 = generators()[0] has order M = |G|.
Character cyclic_character(const GroupPtr& g, long long q);

/// lambda_(q_1..q_k)(sigma_1^j_1 ... sigma_k^j_k) = prod zeta_(m_l)^(q_l j_l) where the
/// generators are the disjoint cycles sigma_l of lengths m_l.
Character product_cyclic_character(const GroupPtr& g, const std::vector<long long>& q);

/// Irreducible characters of D_2m in the numbering lambda_1..lambda_4, psi_h.
struct DihedralCharId {
    enum class Kind { Lambda, Psi };
    Kind kind = Kind::Lambda;
    int index = 1;

    std::string label() const;
    friend bool operator==(const DihedralCharId&, const DihedralCharId&) = default;
};

/// Characters of dihedral(m):
///   lambda_1 trivial; lambda_2(r^k) = 1, lambda_2(s r^k) = -1;
///   (m even) lambda_3(r^k) = lambda_3(s r^k) = (-1)^k; lambda_4(r^k) = (-1)^k, lambda_4(s r^k) = (-1)^(k+1);
///   psi_h(r^k) = zeta_m^(kh) + zeta_m^(-kh), psi_h(s r^k) = 0 for 0 < h < m/2.
/// The group must be exactly dihedral(m) (generators r, s in that order).
Character dihedral_character(const GroupPtr& g, DihedralCharId id);

/// Every irreducible character id of D_2m in table order.
std::vector<DihedralCharId> dihedral_character_ids(int m);

/// Confirms the lambda numbering gives dim V^lambda_1 = dim V^lambda_3 = n and
/// dim V^lambda_2 = dim V^lambda_4 = 0 for small m. Throws InvariantViolation otherwise.
void dihedral_convention_self_test();

/// (1/|G|) sum chi(g) conj(mu(g)).
Cyclotomic inner_product(const Character& chi, const Character& mu);

/// [chi restricted to H, 1_H] = (1/|H|) sum over H of chi(h).
/// With require_character, throws InvariantViolation unless the result is a
/// nonnegative integer. Throws DomainError if H is not a subgroup.
Rational restriction_multiplicity(const Character& chi, const ElementSet& h, bool require_character = true);

/// [chi, chi] == 1.
bool is_irreducible(const Character& chi);

struct ClassFunctionStatus {
    bool constant_on_classes = true;
    bool inverse_is_conjugate = true;
    bool integral_degree = true;
    std::string detail;

    bool ok() const { return constant_on_classes && inverse_is_conjugate && integral_degree; }
};

ClassFunctionStatus check_class_function(const Character& chi);

/// Checks class-function constancy, chi(g^-1) = conj chi(g) and a positive integral
/// degree. Throws DomainError naming the failed check.
Character validate_class_function(const GroupPtr& g, std::vector<Cyclotomic> values, std::string label);

/// Character file: {"group": {"degree": m, "generators": ["(1 2 3)", ...]},
///                  "values": [{"element": "(1 2)", "coeffs": {"order": N, "values": ["1/2", ...]}}, ...]}.
/// Every group element must be listed. With validate = false the values are
/// loaded as-is (used by the verification suite).
Character read_character_file(const std::string& path, bool validate = true);
Character parse_character_json(const std::string& text, bool validate = true);
std::string character_to_json(const Character& chi);

} // namespace cartsym
