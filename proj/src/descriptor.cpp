#include "cartsym/descriptor.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cartsym/error.hpp"
#include "cartsym/obasis.hpp"

namespace cartsym {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '"' || s.front() == '\'')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '"' || s.back() == '\'')) {
        s.remove_suffix(1);
    }
    return s;
}

long long parse_int(std::string_view s, const std::string& production)
{
    s = trim(s);
    long long value = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc() || ptr != end) {
        throw ParseError("expected an integer in " + production + ", got '" + std::string(s) + "'");
    }
    return value;
}

// Splits on any of the separators at parenthesis depth zero.
std::vector<std::string_view> split_top_level(std::string_view s, std::string_view seps)
{
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '(') {
            ++depth;
        } else if (s[k] == ')') {
            --depth;
        } else if (depth == 0 && seps.find(s[k]) != std::string_view::npos) {
            parts.push_back(s.substr(start, k - start));
            start = k + 1;
        }
    }
    parts.push_back(s.substr(start));
    return parts;
}

// Cycle notation with an unknown degree: collect the cycles and the largest point.
std::vector<std::vector<Point>> raw_cycles(std::string_view text, int& max_point)
{
    const auto perm = parse_cycles(text, 1000000);
    (void)perm;
    std::vector<std::vector<Point>> cycles;
    std::size_t pos = 0;
    while ((pos = text.find('(', pos)) != std::string_view::npos) {
        const auto close = text.find(')', pos);
        std::vector<Point> c;
        std::string body(text.substr(pos + 1, close - pos - 1));
        std::replace(body.begin(), body.end(), ',', ' ');
        std::istringstream in(body);
        long long v = 0;
        while (in >> v) {
            c.push_back(static_cast<Point>(v));
            max_point = std::max(max_point, static_cast<int>(v));
        }
        if (!c.empty()) {
            cycles.push_back(std::move(c));
        }
        pos = close + 1;
    }
    return cycles;
}

std::string cycles_to_string(const std::vector<std::vector<Point>>& cycles)
{
    std::string out;
    for (const auto& c : cycles) {
        out += '(';
        for (std::size_t k = 0; k < c.size(); ++k) {
            out += (k ? " " : "") + std::to_string(c[k]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

} // namespace

std::string GroupDescriptor::to_string() const
{
    switch (family) {
    case Family::Symmetric:
        return "symmetric:" + std::to_string(degree);
    case Family::Alternating:
        return "alternating:" + std::to_string(degree);
    case Family::Dihedral:
        return "dihedral:" + std::to_string(degree);
    case Family::CycleProduct:
        return "cycleprod:" + cycles_to_string(cycles) + "@" + std::to_string(degree);
    case Family::ProductOfCyclics: {
        std::string out = "prodcyc:";
        for (std::size_t k = 0; k < cycles.size(); ++k) {
            out += (k ? ";" : "") + cycles_to_string({cycles[k]});
        }
        return out + "@" + std::to_string(degree);
    }
    case Family::Generators: {
        std::string out = "gens:";
        for (std::size_t k = 0; k < generators.size(); ++k) {
            out += (k ? "," : "") + generators[k].to_string();
        }
        return out + "@" + std::to_string(degree);
    }
    }
    return {};
}

GroupDescriptor parse_group_descriptor(std::string_view text)
{
    text = trim(text);
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("group descriptor must be family:payload (symmetric:m, alternating:m, dihedral:m, "
                         "cycleprod:CYCLES[@m], prodcyc:CYCLE;CYCLE[@m], gens:PERM,PERM@m), got '"
                         + std::string(text) + "'");
    }
    const auto family = text.substr(0, colon);
    auto payload = trim(text.substr(colon + 1));

    GroupDescriptor d;
    if (family == "symmetric" || family == "alternating" || family == "dihedral") {
        d.family = family == "symmetric"     ? GroupDescriptor::Family::Symmetric
                   : family == "alternating" ? GroupDescriptor::Family::Alternating
                                             : GroupDescriptor::Family::Dihedral;
        const auto m = parse_int(payload, std::string(family) + ":m");
        if (m < 1 || m > 64) {
            throw ParseError(std::string(family) + ":m needs 1 <= m <= 64");
        }
        d.degree = static_cast<int>(m);
        return d;
    }

    int explicit_degree = 0;
    if (const auto at = payload.rfind('@'); at != std::string_view::npos) {
        explicit_degree = static_cast<int>(parse_int(payload.substr(at + 1), std::string(family) + "...@m"));
        if (explicit_degree < 1) {
            throw ParseError("degree after '@' must be positive");
        }
        payload = trim(payload.substr(0, at));
    }

    int max_point = 0;
    if (family == "cycleprod") {
        d.family = GroupDescriptor::Family::CycleProduct;
        d.cycles = raw_cycles(payload, max_point);
    } else if (family == "prodcyc") {
        d.family = GroupDescriptor::Family::ProductOfCyclics;
        for (auto part : split_top_level(payload, ";")) {
            auto cs = raw_cycles(trim(part), max_point);
            if (cs.size() != 1) {
                throw ParseError("prodcyc expects exactly one cycle per ';'-separated part, got '" + std::string(part)
                                 + "'");
            }
            d.cycles.push_back(std::move(cs.front()));
        }
    } else if (family == "gens") {
        d.family = GroupDescriptor::Family::Generators;
        if (explicit_degree == 0) {
            throw ParseError("gens:PERM,...@m requires an explicit degree");
        }
        for (auto part : split_top_level(payload, ",;")) {
            d.generators.push_back(parse_cycles(trim(part), explicit_degree));
        }
    } else {
        throw ParseError("unknown group family '" + std::string(family)
                         + "' (expected symmetric, alternating, dihedral, cycleprod, prodcyc or gens)");
    }
    d.degree = explicit_degree ? explicit_degree : max_point;
    if (d.degree < 1) {
        throw ParseError("cannot determine the degree of '" + std::string(text) + "'");
    }
    if (max_point > d.degree) {
        throw ParseError("point " + std::to_string(max_point) + " exceeds the degree " + std::to_string(d.degree));
    }
    if (d.family != GroupDescriptor::Family::Generators) {
        try {
            validate_disjoint_cycles(d.cycles, d.degree);
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
    return d;
}

std::string CharacterDescriptor::to_string() const
{
    switch (kind) {
    case Kind::Principal:
        return "principal";
    case Kind::Sign:
        return "sign";
    case Kind::ThetaMinusOne:
        return "theta-1";
    case Kind::Cyclic:
        return "q:" + std::to_string(residues.at(0));
    case Kind::ProductCyclic: {
        std::string out = "qtuple:";
        for (std::size_t k = 0; k < residues.size(); ++k) {
            out += (k ? "," : "") + std::to_string(residues[k]);
        }
        return out;
    }
    case Kind::DihedralLambda:
        return "lambda:" + std::to_string(index);
    case Kind::DihedralPsi:
        return "psi:" + std::to_string(index);
    case Kind::File:
        return "file:" + path;
    case Kind::All:
        return "all";
    }
    return {};
}

CharacterDescriptor parse_character_descriptor(std::string_view text)
{
    text = trim(text);
    CharacterDescriptor d;
    using Kind = CharacterDescriptor::Kind;
    if (text == "principal" || text == "1") {
        d.kind = Kind::Principal;
        return d;
    }
    if (text == "sign" || text == "epsilon") {
        d.kind = Kind::Sign;
        return d;
    }
    if (text == "theta-1") {
        d.kind = Kind::ThetaMinusOne;
        return d;
    }
    if (text == "all") {
        d.kind = Kind::All;
        return d;
    }
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("character descriptor must be one of principal, sign, theta-1, q:INT, qtuple:INT,..., "
                         "lambda:1..4, psi:H, file:PATH, all; got '" + std::string(text) + "'");
    }
    const auto key = text.substr(0, colon);
    const auto value = text.substr(colon + 1);
    if (key == "q") {
        d.kind = Kind::Cyclic;
        d.residues = {parse_int(value, "q:INT")};
    } else if (key == "qtuple") {
        d.kind = Kind::ProductCyclic;
        for (auto part : split_top_level(value, ",")) {
            d.residues.push_back(parse_int(part, "qtuple:INT,INT,..."));
        }
    } else if (key == "lambda") {
        d.kind = Kind::DihedralLambda;
        d.index = static_cast<int>(parse_int(value, "lambda:1..4"));
        if (d.index < 1 || d.index > 4) {
            throw ParseError("lambda index must be 1..4");
        }
    } else if (key == "psi") {
        d.kind = Kind::DihedralPsi;
        d.index = static_cast<int>(parse_int(value, "psi:H"));
    } else if (key == "file") {
        d.kind = Kind::File;
        d.path = std::string(value);
        if (d.path.empty()) {
            throw ParseError("file: needs a path");
        }
    } else {
        throw ParseError("unknown character kind '" + std::string(key) + "'");
    }
    return d;
}

ResolvedGroup resolve_group(const GroupDescriptor& descriptor)
{
    using Family = GroupDescriptor::Family;
    PermutationGroup g;
    switch (descriptor.family) {
    case Family::Symmetric:
        g = symmetric(descriptor.degree);
        break;
    case Family::Alternating:
        g = alternating(descriptor.degree);
        break;
    case Family::Dihedral:
        g = dihedral(descriptor.degree);
        break;
    case Family::CycleProduct:
        g = cyclic_from_cycle_product(descriptor.cycles, descriptor.degree);
        break;
    case Family::ProductOfCyclics:
        g = product_of_cyclics(descriptor.cycles, descriptor.degree);
        break;
    case Family::Generators:
        g = generate_group(descriptor.degree, descriptor.generators);
        break;
    }
    return {descriptor, std::make_shared<const PermutationGroup>(std::move(g))};
}

ResolvedGroup resolve_group(std::string_view text)
{
    return resolve_group(parse_group_descriptor(text));
}

ResolvedGroup group_from_character_file(const std::string& path)
{
    const auto chi = read_character_file(path, false);
    GroupDescriptor d;
    d.family = GroupDescriptor::Family::Generators;
    d.degree = chi.group().degree();
    d.generators = chi.group().generators();
    return {d, chi.group_ptr()};
}

Character resolve_character(const ResolvedGroup& g, const CharacterDescriptor& d, bool validate)
{
    using Kind = CharacterDescriptor::Kind;
    using Family = GroupDescriptor::Family;
    switch (d.kind) {
    case Kind::Principal:
        return principal(g.group);
    case Kind::Sign:
        return sign_character(g.group);
    case Kind::ThetaMinusOne:
        return theta_minus_one(g.group);
    case Kind::Cyclic:
        if (g.descriptor.family != Family::CycleProduct && g.descriptor.family != Family::Generators) {
            throw DomainError("q:INT applies to cycleprod groups");
        }
        return cyclic_character(g.group, d.residues.at(0));
    case Kind::ProductCyclic:
        if (g.descriptor.family != Family::ProductOfCyclics) {
            throw DomainError("qtuple applies to prodcyc groups");
        }
        return product_cyclic_character(g.group, d.residues);
    case Kind::DihedralLambda:
    case Kind::DihedralPsi:
        if (g.descriptor.family != Family::Dihedral) {
            throw DomainError(d.to_string() + " applies to dihedral groups");
        }
        return dihedral_character(g.group, {d.kind == Kind::DihedralLambda ? DihedralCharId::Kind::Lambda
                                                                           : DihedralCharId::Kind::Psi,
                                            d.index});
    case Kind::File: {
        auto chi = read_character_file(d.path, validate);
        if (chi.group().degree() != g.group->degree() || chi.group().order() != g.group->order()) {
            throw DomainError("character file group does not match " + g.descriptor.to_string());
        }
        std::vector<Cyclotomic> values(g.group->order());
        for (std::size_t k = 0; k < g.group->order(); ++k) {
            const auto& e = g.group->element(k);
            if (!chi.group().contains(e)) {
                throw DomainError("character file group does not match " + g.descriptor.to_string());
            }
            values[k] = chi(e);
        }
        return Character(g.group, std::move(values), chi.label());
    }
    case Kind::All:
        throw DomainError("'all' names a family, not a single character");
    }
    throw DomainError("unsupported character descriptor");
}

CharacterFamily character_family(const ResolvedGroup& g)
{
    using Family = GroupDescriptor::Family;
    using Kind = CharacterDescriptor::Kind;
    CharacterFamily out;
    auto add = [&](CharacterDescriptor d) {
        out.characters.push_back(resolve_character(g, d));
        out.descriptors.push_back(std::move(d));
    };
    switch (g.descriptor.family) {
    case Family::Dihedral:
        for (const auto& id : dihedral_character_ids(g.descriptor.degree)) {
            CharacterDescriptor d;
            d.kind = id.kind == DihedralCharId::Kind::Lambda ? Kind::DihedralLambda : Kind::DihedralPsi;
            d.index = id.index;
            add(d);
        }
        break;
    case Family::CycleProduct:
        for (long long q = 0; q < static_cast<long long>(g.group->order()); ++q) {
            CharacterDescriptor d;
            d.kind = Kind::Cyclic;
            d.residues = {q};
            add(d);
        }
        break;
    case Family::ProductOfCyclics: {
        std::vector<long long> q(g.descriptor.cycles.size(), 0);
        while (true) {
            CharacterDescriptor d;
            d.kind = Kind::ProductCyclic;
            d.residues = q;
            add(d);
            std::size_t l = q.size();
            while (l-- > 0) {
                if (++q[l] < static_cast<long long>(g.descriptor.cycles[l].size())) {
                    break;
                }
                q[l] = 0;
            }
            if (l == static_cast<std::size_t>(-1)) {
                break;
            }
        }
        break;
    }
    default: {
        add({Kind::Principal, {}, 0, {}});
        const auto sign = sign_character(g.group);
        if (sign.values() != out.characters.front().values()) {
            add({Kind::Sign, {}, 0, {}});
        }
        try {
            const auto theta = theta_minus_one(g.group);
            if (theta.values() != sign.values()) {
                add({Kind::ThetaMinusOne, {}, 0, {}});
            }
        } catch (const DomainError&) {
            // not 2-transitive: theta-1 is reducible
        }
        break;
    }
    }
    out.complete = is_complete_family(out.characters);
    return out;
}

} // namespace cartsym
