// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cartsym/cli.hpp"
#include "cartsym/formulas.hpp"
#include "cartsym/report.hpp"
#include "cartsym/symclass.hpp"

using namespace cartsym;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Result {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok) {
            detail = why;
        }
        ok = false;
    }
};

int failures = 0;

void criterion(int k, const std::string& title, const std::function<Result()>& body)
{
    Result r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r.fail(std::string("exception: ") + e.what());
    }
    std::cout << (r.ok ? "PASS" : "FAIL") << " [" << k << "] " << title;
    if (!r.detail.empty()) {
        std::cout << " -- " << r.detail;
    }
    std::cout << std::endl;
    failures += r.ok ? 0 : 1;
}

GroupPtr share(PermutationGroup g)
{
    return std::make_shared<const PermutationGroup>(std::move(g));
}

// every (group, character) of the default matrix
std::vector<std::pair<ResolvedGroup, std::vector<Character>>> matrix_characters()
{
    std::vector<std::pair<ResolvedGroup, std::vector<Character>>> out;
    for (const auto& e : default_matrix()) {
        auto g = resolve_group(e.group);
        std::vector<Character> chars;
        for (const auto& spec : e.characters) {
            const auto d = parse_character_descriptor(spec);
            if (d.kind == CharacterDescriptor::Kind::All) {
                const auto fam = character_family(g);
                chars.insert(chars.end(), fam.characters.begin(), fam.characters.end());
            } else {
                chars.push_back(resolve_character(g, d));
            }
        }
        out.emplace_back(std::move(g), std::move(chars));
    }
    return out;
}

} // namespace

int main()
{
    dihedral_convention_self_test();

    criterion(1, "dihedral dimension table, m = 3..12, n = 2, 3", [] {
        Result r;
        double worst = 0;
        for (int m = 3; m <= 12; ++m) {
            const auto t0 = Clock::now();
            for (long long n : {2, 3}) {
                const auto doc = table_document(resolve_group("dihedral:" + std::to_string(m)), n);
                for (const auto& row : doc.json["rows"]) {
                    const auto id = row["character"].get<std::string>();
                    const long long expected = id.rfind("psi:", 0) == 0                       ? 2 * n
                                               : (id == "lambda:1" || id == "lambda:3") ? n
                                                                                        : 0;
                    if (row["dim"].get<long long>() != expected) {
                        r.fail("m=" + std::to_string(m) + " " + id + " dim " + row["dim"].dump());
                    }
                }
                if (doc.json["rows"].size() != dihedral_character_ids(m).size()) {
                    r.fail("m=" + std::to_string(m) + ": wrong number of rows");
                }
            }
            const double dt = since(t0);
            worst = std::max(worst, dt);
            if (dt >= 1.0) {
                r.fail("m=" + std::to_string(m) + " took " + std::to_string(dt) + " s");
            }
        }
        if (r.ok) {
            r.detail = "slowest m " + std::to_string(worst) + " s";
        }
        return r;
    });

    criterion(2, "dimensions over a complete family sum to n*m", [] {
        Result r;
        std::vector<std::string> groups;
        for (int m = 3; m <= 12; ++m) {
            groups.push_back("dihedral:" + std::to_string(m));
        }
        for (const auto& e : default_matrix()) {
            if (e.group.rfind("cycleprod:", 0) == 0 || e.group.rfind("prodcyc:", 0) == 0) {
                groups.push_back(e.group);
            }
        }
        for (const auto& spec : groups) {
            const auto g = resolve_group(spec);
            const auto fam = character_family(g);
            if (!fam.complete) {
                r.fail(spec + ": family incomplete");
            }
            for (long long n : {2, 3}) {
                long long total = 0;
                for (const auto& chi : fam.characters) {
                    total += dim_symmetry_class(build_symmetrizer(chi), n);
                }
                if (total != n * g.group->degree()) {
                    r.fail(spec + " n=" + std::to_string(n) + ": sum " + std::to_string(total));
                }
            }
        }
        r.detail = std::to_string(groups.size()) + " groups";
        return r;
    });

    criterion(3, "symmetrizers idempotent, Hermitian, summing to the identity", [] {
        Result r;
        std::size_t count = 0;
        for (const auto& [g, chars] : matrix_characters()) {
            for (const auto& chi : chars) {
                const Symmetrizer s(chi);
                ++count;
                if (!s.is_idempotent() || !s.is_hermitian()) {
                    r.fail(g.descriptor.to_string() + " " + chi.label());
                }
            }
            const auto fam = character_family(g);
            if (fam.complete) {
                const auto m = static_cast<std::size_t>(g.group->degree());
                CycloMatrix sum(m, m);
                for (const auto& chi : fam.characters) {
                    sum = sum + Symmetrizer(chi).matrix();
                }
                if (!(sum == CycloMatrix::identity(m))) {
                    r.fail(g.descriptor.to_string() + ": sum is not the identity");
                }
            }
        }
        if (r.ok) {
            r.detail = std::to_string(count) + " symmetrizers";
        }
        return r;
    });

    criterion(4, "gram entries equal the block oracle for n*m <= 36", [] {
        Result r;
        std::size_t instances = 0, cross = 0, off_block = 0;
        for (const auto& [g, chars] : matrix_characters()) {
            const int m = g.group->degree();
            const auto od = orbits(*g.group);
            for (const auto& chi : chars) {
                for (long long n : {2, 3}) {
                    if (n * m > kOracleLimit) {
                        continue;
                    }
                    ++instances;
                    const BlockOracle oracle(chi, n);
                    for (Point j = 1; j <= m; ++j) {
                        for (Point s = 1; s <= m; ++s) {
                            const auto expected = gram_entry(chi, j, s);
                            if (od.orbit_index(j) != od.orbit_index(s)) {
                                ++cross;
                                if (!expected.is_zero()) {
                                    r.fail("nonzero across orbits");
                                }
                            }
                            for (int i = 1; i <= n; ++i) {
                                for (int k = 1; k <= n; ++k) {
                                    off_block += i != k;
                                    const auto want = i == k ? expected : Cyclotomic(0);
                                    if (oracle.gram(i, j, k, s) != want) {
                                        r.fail(g.descriptor.to_string() + " " + chi.label() + " n="
                                               + std::to_string(n));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        if (cross == 0 || off_block == 0) {
            r.fail("cross-orbit or i != r cases not exercised");
        }
        r.detail = std::to_string(instances) + " instances, " + std::to_string(cross) + " cross-orbit pairs";
        return r;
    });

    criterion(5, "norm values", [] {
        Result r;
        for (int m = 3; m <= 6; ++m) {
            const auto v = norm_squared(theta_minus_one(share(symmetric(m))), m);
            if (v != make_rational(m - 1, m)) {
                r.fail("S_" + std::to_string(m) + ": " + to_string(v));
            }
        }
        const auto d8 = share(dihedral(4));
        if (norm_squared(dihedral_character(d8, {DihedralCharId::Kind::Psi, 1}), 1) != make_rational(1, 2)) {
            r.fail("D_8 psi_1");
        }
        for (int q : {5, 7}) {
            const auto g = share(dihedral(q));
            for (int h = 1; 2 * h < q; ++h) {
                for (Point j = 1; j <= q; ++j) {
                    if (norm_squared(dihedral_character(g, {DihedralCharId::Kind::Psi, h}), j) != make_rational(2, q)) {
                        r.fail("D_" + std::to_string(2 * q) + " psi_" + std::to_string(h));
                    }
                }
            }
        }
        return r;
    });

    criterion(6, "cycle-product closed form equals n*trace", [] {
        Result r;
        const auto t0 = Clock::now();
        for (const auto& lengths : std::vector<std::vector<int>>{{3}, {2, 2}, {3, 2}, {4, 3}, {2, 2, 3}}) {
            const auto cs = CycleStructure::consecutive(lengths);
            const auto g = share(cyclic_from_cycle_product(cs.cycles, cs.degree));
            for (long long n : {2, 3}) {
                long long total = 0;
                for (long long q = 0; q < cs.lcm(); ++q) {
                    const Rational closed = cycle_product_closed_form(cs, q) * make_rational(n);
                    const auto by_trace = n * Symmetrizer(cyclic_character(g, q)).trace();
                    if (closed != make_rational(by_trace)) {
                        r.fail("q=" + std::to_string(q) + ": " + to_string(closed) + " vs " + std::to_string(by_trace));
                    }
                    total += by_trace;
                }
                if (total != n * cs.degree) {
                    r.fail("sum over q " + std::to_string(total));
                }
            }
        }
        const double dt = since(t0);
        if (dt >= 2.0) {
            r.fail("took " + std::to_string(dt) + " s");
        }
        if (r.ok) {
            r.detail = std::to_string(dt) + " s";
        }
        return r;
    });

    criterion(7, "product-of-cyclics closed form (sum over j) equals n*trace; discrepancy reported", [] {
        Result r;
        struct Case {
            std::string spec;
            std::vector<int> lengths;
            int degree;
        };
        std::size_t flagged = 0;
        for (const auto& c : std::vector<Case>{{"prodcyc:(1 2 3);(4 5)@5", {3, 2}, 5},
                                               {"prodcyc:(1 2 3);(4 5)@6", {3, 2}, 6},
                                               {"prodcyc:(1 2);(3 4)@4", {2, 2}, 4}}) {
            const auto cs = CycleStructure::consecutive(c.lengths, c.degree);
            const auto g = resolve_group(c.spec);
            const auto fam = character_family(g);
            for (std::size_t k = 0; k < fam.characters.size(); ++k) {
                const auto& q = fam.descriptors[k].residues;
                for (long long n : {2, 3}) {
                    const auto d = dim_product_of_cyclics(cs, q, n);
                    const auto by_trace = n * Symmetrizer(fam.characters[k]).trace();
                    if (d.dim != by_trace) {
                        r.fail(c.spec + " " + fam.descriptors[k].to_string());
                    }
                    const auto rep = verify_instance(g, fam.characters[k], fam.descriptors[k].to_string(), n, Level::Quick);
                    bool noted = false;
                    for (const auto& note : rep.notes) {
                        noted = noted || note.rfind("discrepancy", 0) == 0;
                    }
                    if (noted != d.discrepancy) {
                        r.fail("discrepancy flag not reported for " + rep.id);
                    }
                    flagged += d.discrepancy;
                }
            }
        }
        r.detail = std::to_string(flagged) + " instances flag the literal display";
        return r;
    });

    criterion(8, "dihedral O-basis criterion equals exhaustive search", [] {
        Result r;
        const auto t0 = Clock::now();
        std::size_t cases = 0;
        for (int m = 3; m <= 12; ++m) {
            const auto g = share(dihedral(m));
            for (int h = 1; 2 * h < m; ++h) {
                ++cases;
                const auto rep = search_obasis(dihedral_character(g, {DihedralCharId::Kind::Psi, h}));
                const auto want = dihedral_criterion(m, h) ? Verdict::HasOBasis : Verdict::NoOBasis;
                if (rep.verdict != want) {
                    r.fail("(m,h)=(" + std::to_string(m) + "," + std::to_string(h) + "): " + to_string(rep.verdict));
                }
                const bool must_have = (m == 4 && h == 1) || (m == 8 && (h == 1 || h == 2));
                const bool must_not = m == 5 || m == 6 || m == 7 || m == 9;
                if ((must_have && rep.verdict != Verdict::HasOBasis) || (must_not && rep.verdict != Verdict::NoOBasis)) {
                    r.fail("anchor (m,h)=(" + std::to_string(m) + "," + std::to_string(h) + ")");
                }
            }
        }
        const double dt = since(t0);
        if (dt >= 5.0) {
            r.fail("took " + std::to_string(dt) + " s");
        }
        if (r.ok) {
            r.detail = std::to_string(cases) + " cases, " + std::to_string(dt) + " s";
        }
        return r;
    });

    criterion(9, "space-level O-basis exactly for m in {4, 8}", [] {
        Result r;
        std::string yes;
        for (int m = 3; m <= 12; ++m) {
            const auto fam = character_family(resolve_group("dihedral:" + std::to_string(m)));
            const auto v = space_obasis_verdict(fam.characters);
            if (v.verdict == Verdict::Undecided || !v.complete) {
                r.fail("m=" + std::to_string(m) + " undecided");
            }
            if (v.verdict == Verdict::HasOBasis) {
                yes += (yes.empty() ? "" : ",") + std::to_string(m);
            }
        }
        if (yes != "4,8") {
            r.fail("has-O-basis for m in {" + yes + "}");
        }
        return r;
    });

    criterion(10, "norm-window obstruction sound; converse fails for D_10, D_14", [] {
        Result r;
        std::vector<Character> obstructed;
        for (int m = 3; m <= 5; ++m) {
            obstructed.push_back(theta_minus_one(share(symmetric(m))));
        }
        obstructed.push_back(theta_minus_one(share(alternating(4))));
        for (const auto& chi : obstructed) {
            if (!norm_window_obstruction(chi)) {
                r.fail(chi.group().order() == 12 ? "A_4 not obstructed" : "S_m not obstructed");
            }
            const auto rep = search_obasis(chi);
            if (rep.verdict != Verdict::NoOBasis || rep.method != Method::Search) {
                r.fail("search did not confirm no-O-basis");
            }
        }
        for (int q : {5, 7}) {
            const auto g = share(dihedral(q));
            for (int h = 1; 2 * h < q; ++h) {
                const auto chi = dihedral_character(g, {DihedralCharId::Kind::Psi, h});
                if (norm_squared(chi, 1) != make_rational(2, q) || norm_window_obstruction(chi)) {
                    r.fail("D_" + std::to_string(2 * q) + " obstruction fired");
                }
                if (search_obasis(chi).verdict != Verdict::NoOBasis) {
                    r.fail("D_" + std::to_string(2 * q) + " psi_" + std::to_string(h) + " has an O-basis");
                }
            }
        }
        return r;
    });

    criterion(11, "Ramanujan sums: Moebius form equals the exponential sum, m <= 30, q <= 30", [] {
        Result r;
        for (long long m = 1; m <= 30; ++m) {
            for (long long q = 0; q <= 30; ++q) {
                Cyclotomic sum;
                for (long long s = 1; s <= m; ++s) {
                    if (std::gcd(s, m) == 1) {
                        sum += Cyclotomic::root_of_unity(static_cast<int>(m), q * s);
                    }
                }
                if (sum != Cyclotomic(ramanujan(m, q))) {
                    r.fail("c_" + std::to_string(m) + "(" + std::to_string(q) + ")");
                }
            }
        }
        return r;
    });

    criterion(12, "corrupted character fails verify with a named check and exit code 2", [] {
        Result r;
        const auto g = resolve_group("dihedral:4");
        const auto psi = resolve_character(g, parse_character_descriptor("psi:1"));
        const auto bad = psi.with_value(g.group->index_of(g.group->generators()[0]), Cyclotomic(1));
        const std::string path = "acceptance_corrupted.json";
        {
            std::ofstream out(path);
            out << character_to_json(bad);
        }
        const std::string arg = "file:" + path;
        const char* argv[] = {"cartsym", "verify", "--char", arg.c_str(), "--format", "csv"};
        std::ostringstream out, err;
        const int code = run_cli(6, argv, out, err);
        std::remove(path.c_str());
        if (code != kExitInvariant) {
            r.fail("exit code " + std::to_string(code));
        }
        const auto text = out.str();
        const auto pos = text.find("class-function");
        if (pos == std::string::npos) {
            r.fail("no named failing check in: " + text);
        } else {
            r.detail = "failed checks: " + text.substr(pos, text.find('\n', pos) - pos);
        }
        return r;
    });

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
    return failures == 0 ? 0 : 1;
}
