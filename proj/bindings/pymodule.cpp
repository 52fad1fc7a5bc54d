#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nichols/dynkin.hpp"
#include "nichols/json_io.hpp"
#include "nichols/oracle.hpp"

namespace py = pybind11;
using namespace nichols;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(json_to_py(v));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = json_to_py(v);
            return out;
        }
        default: return py::none();
    }
}

Json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        Json out = Json::array();
        for (const auto& v : obj) out.push_back(py_to_json(v));
        return out;
    }
    if (py::isinstance<py::dict>(obj)) {
        Json out = Json::object();
        for (const auto& [k, v] : obj.cast<py::dict>()) out[k.cast<std::string>()] = py_to_json(v);
        return out;
    }
    throw py::type_error("cannot convert python object to a descriptor");
}

}  // namespace

PYBIND11_MODULE(_nichols, m) {
    m.doc() = "exact computations with twisted Yetter-Drinfeld modules and Nichols algebras";

    py::register_exception<BudgetExceeded>(m, "BudgetError");
    py::register_exception<DescriptorError>(m, "DescriptorError");

    py::class_<Phase>(m, "Phase")
        .def(py::init([](const std::string& s) {
                 auto p = Phase::parse(s);
                 if (!p) throw py::value_error("bad phase string");
                 return *p;
             }),
             py::arg("exponent"))
        .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den"))
        .def_static("zeta", &Phase::zeta, py::arg("m"), py::arg("k") = 1)
        .def_property_readonly("num", &Phase::num)
        .def_property_readonly("den", &Phase::den)
        .def("order", &Phase::order)
        .def("inverse", &Phase::inverse)
        .def("pow", &Phase::pow)
        .def("__mul__", [](const Phase& a, const Phase& b) { return a * b; })
        .def("__truediv__", [](const Phase& a, const Phase& b) { return a / b; })
        .def("__eq__", [](const Phase& a, const Phase& b) { return a == b; })
        .def("__hash__", [](const Phase& a) { return py::hash(py::str(a.str())); })
        .def("__str__", &Phase::str)
        .def("__repr__", [](const Phase& a) { return "Phase('" + a.str() + "')"; });

    py::class_<FinAbGroup>(m, "Group")
        .def(py::init<std::vector<std::int64_t>>(), py::arg("factors"))
        .def_property_readonly("factors", &FinAbGroup::factors)
        .def_property_readonly("order", &FinAbGroup::order)
        .def_property_readonly("exponent", &FinAbGroup::exponent)
        .def_property_readonly("rank", &FinAbGroup::rank)
        .def("__repr__", [](const FinAbGroup& g) { return g.str(); });

    // descriptor-level interface: plain dict/list descriptors in, dicts out
    m.def("enumerate_cocycles", [](const py::object& group) {
        const auto g = group_from_json(py_to_json(group));
        py::list out;
        for (const auto& phi : enumerate_cocycles(g)) out.append(json_to_py(cocycle_to_json(phi)));
        return out;
    });
    m.def("verify_cocycle", [](const py::object& cocycle) {
        return verify_3cocycle(*cocycle_from_json(py_to_json(cocycle)));
    });
    m.def("is_abelian_cocycle", [](const py::object& cocycle) {
        return is_abelian(*cocycle_from_json(py_to_json(cocycle)));
    });
    m.def("eval_cocycle", [](const py::object& cocycle, const std::vector<std::int64_t>& a,
                             const std::vector<std::int64_t>& b, const std::vector<std::int64_t>& c) {
        auto phi = cocycle_from_json(py_to_json(cocycle));
        const auto& g = phi->group();
        return phi->eval(g.element(a), g.element(b), g.element(c)).str();
    });
    m.def("simple_module", [](const py::object& spec) {
        const auto j = py_to_json(spec);
        auto phi = cocycle_from_json(j.at("cocycle"));
        SimpleYDSpec s;
        const auto& g = phi->group();
        s.degree = element_from_json(g, j.at("degree"));
        for (const auto& c : j.at("context")) s.context.push_back(element_from_json(g, c));
        if (j.contains("alpha")) s.alpha = phase_from_json(j["alpha"]);
        if (j.contains("beta")) s.beta = phase_from_json(j["beta"]);
        if (j.contains("gamma")) s.gamma = phase_from_json(j["gamma"]);
        return json_to_py(module_to_json(make_simple(phi, s)));
    });
    m.def("module_sum", [](const py::object& a, const py::object& b) {
        return json_to_py(module_to_json(
            YDModule::direct_sum(module_from_json(py_to_json(a)), module_from_json(py_to_json(b)))));
    });
    m.def("solve_twist", [](const py::object& cocycle, bool on_hat) {
        auto phi = cocycle_from_json(py_to_json(cocycle));
        std::optional<Cochain2> j;
        if (on_hat) {
            const auto hat = hat_group(phi->group());
            PullbackCocycle lifted(hat.pi, phi);
            j = solve_coboundary(lifted);
        } else {
            j = solve_coboundary(*phi);
        }
        if (!j) return py::object(py::none());
        return json_to_py(cochain_to_json(*j));
    }, py::arg("cocycle"), py::arg("on_hat") = true);
    m.def("twist_module", [](const py::object& module, const py::object& cochain, bool inverse) {
        auto mod = module_from_json(py_to_json(module));
        auto j = cochain_from_json(py_to_json(cochain));
        if (inverse) j = j.inverse();
        return json_to_py(module_to_json(mod.twisted(j)));
    }, py::arg("module"), py::arg("cochain"), py::arg("inverse") = false);
    m.def("change_base", [](const py::object& module) {
        auto mod = module_from_json(py_to_json(module));
        return json_to_py(module_to_json(mod.change_base(hat_group(mod.group()))));
    });
    m.def("classify", [](const py::object& module, std::int64_t max_objects, std::int64_t max_roots) {
        auto mod = module_from_json(py_to_json(module));
        const auto report = is_finite_type(mod, RootSystemCaps{max_objects, max_roots});
        return json_to_py(report_to_json(report, mod.group()));
    }, py::arg("module"), py::arg("max_objects") = 1024, py::arg("max_roots") = 512);
    m.def("hilbert_series", [](const py::object& module, int max_degree, std::int64_t budget) {
        auto mod = module_from_json(py_to_json(module));
        return hilbert_series_oracle(mod, max_degree, OracleBudget{budget});
    }, py::arg("module"), py::arg("max_degree"), py::arg("budget") = 10000);
    m.def("graded_dimension", [](const py::object& module, int degree, std::int64_t budget) {
        auto mod = module_from_json(py_to_json(module));
        const auto r = graded_dim(mod, degree, OracleBudget{budget});
        return py::make_tuple(r.rank, r.kernel_dim);
    }, py::arg("module"), py::arg("degree"), py::arg("budget") = 10000);
    m.def("dynkin_dot", [](const py::object& module) {
        auto mod = module_from_json(py_to_json(module));
        const auto sb = has_standard_basis(mod);
        if (!sb) throw py::value_error("module has no standard basis");
        return dynkin_diagram(*sb).dot();
    });
}
