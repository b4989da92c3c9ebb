#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cartsym/chars.hpp"

namespace cartsym {

/// Group descriptor grammar, "family:payload":
///   symmetric:m | alternating:m | dihedral:m
///   cycleprod:CYCLES[@m]            e.g. cycleprod:(1 2 3)(4 5)
///   prodcyc:CYCLE;CYCLE;...[@m]     e.g. prodcyc:(1 2 3);(4 5)@6
///   gens:PERM,PERM,...@m            e.g. gens:(1 2 3 4),(2 4)@4
/// Without @m the degree is the largest point mentioned.
struct GroupDescriptor {
    enum class Family { Symmetric, Alternating, Dihedral, CycleProduct, ProductOfCyclics, Generators };

    Family family = Family::Symmetric;
    int degree = 0;
    std::vector<std::vector<Point>> cycles; // CycleProduct, ProductOfCyclics
    std::vector<Permutation> generators;    // Generators

    /// Canonical text form; parses back to an equal descriptor.
    std::string to_string() const;
    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

GroupDescriptor parse_group_descriptor(std::string_view text);

/// Character descriptor grammar:
///   principal | sign | theta-1 | q:INT | qtuple:INT,INT,... | lambda:1..4 | psi:H | file:PATH | all
struct CharacterDescriptor {
    enum class Kind { Principal, Sign, ThetaMinusOne, Cyclic, ProductCyclic, DihedralLambda, DihedralPsi, File, All };

    Kind kind = Kind::Principal;
    std::vector<long long> residues; // Cyclic (one entry), ProductCyclic
    int index = 0;                   // DihedralLambda, DihedralPsi
    std::string path;                // File

    std::string to_string() const;
    friend bool operator==(const CharacterDescriptor&, const CharacterDescriptor&) = default;
};

CharacterDescriptor parse_character_descriptor(std::string_view text);

struct ResolvedGroup {
    GroupDescriptor descriptor;
    GroupPtr group;
};

ResolvedGroup resolve_group(const GroupDescriptor& descriptor);
ResolvedGroup resolve_group(std::string_view text);

/// Character of the resolved group. File characters must be defined on the same
/// group (same degree and element set); with validate = false they are not checked
/// for the class-function laws. Throws DomainError when the kind does not apply.
Character resolve_character(const ResolvedGroup& g, const CharacterDescriptor& descriptor, bool validate = true);

/// A file descriptor carries its own group; this builds it.
ResolvedGroup group_from_character_file(const std::string& path);

struct CharacterFamily {
    std::vector<CharacterDescriptor> descriptors;
    std::vector<Character> characters;
    /// Complete set of irreducibles (cycle products, products of cyclics, dihedral;
    /// other groups only when the built-in characters happen to exhaust Irr(G)).
    bool complete = false;
};

/// Every built-in irreducible character of the group, in table order.
CharacterFamily character_family(const ResolvedGroup& g);

} // namespace cartsym
