#include "cartsym/cli.hpp"

#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "cartsym/error.hpp"
#include "cartsym/report.hpp"

namespace cartsym {

namespace {

struct Options {
    std::string group;
    std::string character;
    long long n = 2;
    std::string format = "json";
    std::size_t budget = 0;
    std::string level = "full";
    unsigned threads = 0;
};

std::size_t effective_budget(const Options& o)
{
    if (o.budget > 0) {
        return o.budget;
    }
    if (const char* env = std::getenv("CARTSYM_BUDGET")) {
        try {
            const auto v = std::stoull(env);
            if (v > 0) {
                return static_cast<std::size_t>(v);
            }
        } catch (const std::exception&) {
        }
        throw ParseError(std::string("CARTSYM_BUDGET must be a positive integer, got '") + env + "'");
    }
    return kDefaultSearchBudget;
}

// Group from --group, or from the file when the character is file:PATH and --group is absent.
ResolvedGroup group_for(const Options& o, const CharacterDescriptor* cd)
{
    if (!o.group.empty()) {
        return resolve_group(o.group);
    }
    if (cd && cd->kind == CharacterDescriptor::Kind::File) {
        return group_from_character_file(cd->path);
    }
    throw ParseError("--group is required");
}

int run_verify(const Options& o, std::ostream& out)
{
    InstanceMatrix matrix;
    const auto level = o.level == "quick" ? Level::Quick : Level::Full;
    if (o.level != "quick" && o.level != "full") {
        throw ParseError("--level must be quick or full");
    }
    std::vector<VerificationReport> reports;
    if (o.group.empty() && o.character.empty()) {
        matrix = default_matrix();
        reports = run_suite(matrix, level, effective_budget(o), o.threads);
    } else {
        const auto cd = parse_character_descriptor(o.character.empty() ? "all" : o.character);
        const auto g = group_for(o, &cd);
        if (cd.kind == CharacterDescriptor::Kind::File) {
            // loaded as-is so a broken file shows up as failed checks
            const auto chi = resolve_character(g, cd, false);
            reports.push_back(verify_instance(g, chi, cd.to_string(), o.n, level, effective_budget(o)));
        } else {
            matrix.push_back({g.descriptor.to_string(), {cd.to_string()}, {o.n}});
            reports = run_suite(matrix, level, effective_budget(o), o.threads);
        }
    }
    out << render(verify_document(reports), parse_format(o.format));
    for (const auto& r : reports) {
        if (!r.passed()) {
            return kExitInvariant;
        }
    }
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cartesian symmetry classes: dimensions, Gram data and O-basis search"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool needs_char) {
        sub->add_option("--group,-g", o.group, "group descriptor, e.g. dihedral:6 or cycleprod:\"(1 2 3)(4 5)\"");
        auto* c = sub->add_option("--char,-c", o.character,
                                  "character: principal, sign, theta-1, q:INT, qtuple:INT,..., lambda:K, psi:H, file:PATH");
        if (needs_char) {
            c->required();
        }
        sub->add_option("--n", o.n, "dimension of V (default 2)")->check(CLI::PositiveNumber);
        sub->add_option("--format,-f", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    };
    auto* dims = app.add_subcommand("dims", "dimension of V^lambda(G), orbits and cyclic subspaces");
    add_common(dims, true);
    auto* gram = app.add_subcommand("gram", "Gram entries and norms of the standard symmetrized vectors");
    add_common(gram, true);
    auto* obasis = app.add_subcommand("obasis", "search for an orthogonal basis of standard symmetrized vectors");
    add_common(obasis, true);
    obasis->add_option("--budget", o.budget, "subset budget per orbit (also CARTSYM_BUDGET)");
    auto* table = app.add_subcommand("table", "dimension table over the built-in character family");
    add_common(table, false);
    auto* verify = app.add_subcommand("verify", "run the verification suite (default matrix without --group)");
    add_common(verify, false);
    verify->add_option("--budget", o.budget, "subset budget per orbit (also CARTSYM_BUDGET)");
    verify->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--threads", o.threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        dihedral_convention_self_test();
        if (verify->parsed()) {
            return run_verify(o, out);
        }
        const auto format = parse_format(o.format);
        if (table->parsed()) {
            if (!o.character.empty() && o.character != "all") {
                throw ParseError("table takes the whole character family; omit --char or pass --char all");
            }
            out << render(table_document(group_for(o, nullptr), o.n), format);
            return kExitOk;
        }
        const auto cd = parse_character_descriptor(o.character);
        if (cd.kind == CharacterDescriptor::Kind::All) {
            throw ParseError("'all' is only accepted by table and verify");
        }
        const auto g = group_for(o, &cd);
        const auto chi = resolve_character(g, cd, true);
        const auto spec = cd.to_string();
        if (dims->parsed()) {
            out << render(dims_document(g, chi, spec, o.n), format);
        } else if (gram->parsed()) {
            out << render(gram_document(g, chi, spec, o.n), format);
        } else {
            Verdict v = Verdict::Undecided;
            out << render(obasis_document(g, chi, spec, effective_budget(o), &v), format);
            if (v == Verdict::Undecided) {
                err << "search budget exhausted; raise --budget or CARTSYM_BUDGET\n";
                return kExitUndecided;
            }
        }
        return kExitOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvariantViolation& e) {
        err << "invariant violated: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
}

} // namespace cartsym
