#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cartsym/error.hpp"
#include "cartsym/report.hpp"

namespace py = pybind11;
using namespace cartsym;

namespace {

py::object to_py(const Json& j)
{
    switch (j.type()) {
    case Json::value_t::null:
        return py::none();
    case Json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
        return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
        return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
        return py::float_(j.get<double>());
    case Json::value_t::string:
        return py::str(j.get<std::string>());
    case Json::value_t::array: {
        py::list out;
        for (const auto& x : j) {
            out.append(to_py(x));
        }
        return out;
    }
    default: {
        py::dict out;
        for (const auto& [k, v] : j.items()) {
            out[py::str(k)] = to_py(v);
        }
        return out;
    }
    }
}

struct Resolved {
    ResolvedGroup group;
    Character chi;
    std::string spec;
};

Resolved resolve(const std::string& group, const std::string& chr)
{
    const auto cd = parse_character_descriptor(chr);
    auto g = resolve_group(group);
    auto chi = resolve_character(g, cd);
    return {std::move(g), std::move(chi), cd.to_string()};
}

} // namespace

PYBIND11_MODULE(_cartsym, m)
{
    m.doc() = "Cartesian symmetry classes over permutation groups";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    py::class_<Permutation>(m, "Permutation")
        .def(py::init([](const std::string& text, int degree) { return parse_cycles(text, degree); }), py::arg("cycles"),
             py::arg("degree"))
        .def_static("from_images", &Permutation::from_images)
        .def_property_readonly("degree", &Permutation::degree)
        .def_property_readonly("images", &Permutation::images)
        .def("__call__", &Permutation::operator())
        .def("cycles", &Permutation::cycles)
        .def("inverse", &Permutation::inverse)
        .def("order", &Permutation::order)
        .def("sign", &Permutation::sign)
        .def("is_identity", &Permutation::is_identity)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &Permutation::to_string)
        .def("__repr__", [](const Permutation& p) { return "Permutation('" + p.to_string() + "')"; });

    m.def(
        "group_info",
        [](const std::string& spec) {
            const auto g = resolve_group(spec);
            py::dict d;
            d["group"] = g.descriptor.to_string();
            d["degree"] = g.group->degree();
            d["order"] = g.group->order();
            std::vector<std::string> gens;
            for (const auto& p : g.group->generators()) {
                gens.push_back(p.to_string());
            }
            d["generators"] = gens;
            d["orbits"] = orbits(*g.group).orbits;
            std::vector<std::string> chars;
            for (const auto& c : character_family(g).descriptors) {
                chars.push_back(c.to_string());
            }
            d["characters"] = chars;
            return d;
        },
        py::arg("group"));

    m.def("mobius", &mobius);
    m.def("totient", &totient);
    m.def("ramanujan", &ramanujan, py::arg("m"), py::arg("q"));
    m.def("two_part", &two_part);
    m.def("dihedral_criterion", &dihedral_criterion, py::arg("m"), py::arg("h"));

    m.def(
        "dims",
        [](const std::string& group, const std::string& chr, long long n) {
            const auto r = resolve(group, chr);
            return to_py(dims_document(r.group, r.chi, r.spec, n).json);
        },
        py::arg("group"), py::arg("char"), py::arg("n") = 2);
    m.def(
        "gram",
        [](const std::string& group, const std::string& chr, long long n) {
            const auto r = resolve(group, chr);
            return to_py(gram_document(r.group, r.chi, r.spec, n).json);
        },
        py::arg("group"), py::arg("char"), py::arg("n") = 2);
    m.def(
        "obasis",
        [](const std::string& group, const std::string& chr, std::size_t budget) {
            const auto r = resolve(group, chr);
            return to_py(obasis_document(r.group, r.chi, r.spec, budget).json);
        },
        py::arg("group"), py::arg("char"), py::arg("budget") = kDefaultSearchBudget);
    m.def(
        "table", [](const std::string& group, long long n) { return to_py(table_document(resolve_group(group), n).json); },
        py::arg("group"), py::arg("n") = 2);
    m.def(
        "verify",
        [](const std::optional<std::string>& group, const std::string& chr, const std::vector<long long>& ns,
           const std::string& level, unsigned threads) {
            if (level != "quick" && level != "full") {
                throw ParseError("level must be quick or full");
            }
            InstanceMatrix matrix;
            if (group) {
                matrix.push_back({*group, {chr}, ns});
            } else {
                matrix = default_matrix();
            }
            std::vector<VerificationReport> reports;
            {
                py::gil_scoped_release release;
                reports = run_suite(matrix, level == "quick" ? Level::Quick : Level::Full, kDefaultSearchBudget, threads);
            }
            return to_py(verify_document(reports).json);
        },
        py::arg("group") = py::none(), py::arg("char") = "all", py::arg("ns") = std::vector<long long>{2, 3},
        py::arg("level") = "full", py::arg("threads") = 0);
}
