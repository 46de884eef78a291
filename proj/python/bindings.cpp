#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>

#include "orbik/builtin.hpp"
#include "orbik/drinfeld.hpp"
#include "orbik/inertial_product.hpp"
#include "orbik/io.hpp"

namespace py = pybind11;
using namespace orbik;

namespace {

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

ConjugacyOptions options_from(std::optional<std::uint64_t> seed) { return ConjugacyOptions{seed}; }

struct PyGroup {
  GroupPtr group;
  SubgroupPtr whole;

  explicit PyGroup(FiniteGroup g)
      : group(std::make_shared<const FiniteGroup>(std::move(g))), whole(Subgroup::whole(group)) {}
};

struct PyEngine {
  std::shared_ptr<PyGroup> group;
  std::unique_ptr<InertialProduct> engine;

  PyEngine(std::shared_ptr<PyGroup> g, const std::vector<std::string>& reps, std::optional<std::uint64_t> seed)
      : group(std::move(g)) {
    const auto chi = representation_from_specs(group->whole, reps);
    engine = std::make_unique<InertialProduct>(group->group, chi, options_from(seed));
  }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact inertial products on K-theory of [V/G] and Drinfeld double fusion rings";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ArithmeticError);

  py::class_<Cyclotomic>(m, "Cyclotomic")
      .def(py::init([](const std::string& text) { return Cyclotomic::parse(text); }), py::arg("text"))
      .def(py::init<long>())
      .def_static("root_of_unity", &Cyclotomic::root_of_unity, py::arg("n"), py::arg("k") = 1)
      .def_property_readonly("conductor", &Cyclotomic::conductor)
      .def("galois", &Cyclotomic::galois)
      .def("conj", &Cyclotomic::conj)
      .def("as_integer", [](const Cyclotomic& c) -> std::optional<long> { return c.as_long(); })
      .def("is_zero", &Cyclotomic::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &Cyclotomic::str)
      .def("__repr__", [](const Cyclotomic& c) { return "Cyclotomic('" + c.str() + "')"; });

  py::class_<PyGroup, std::shared_ptr<PyGroup>>(m, "Group")
      .def_static("builtin", [](const std::string& name) { return std::make_shared<PyGroup>(builtin_group(name)); })
      .def_static("from_json",
                  [](const std::string& text) {
                    json j;
                    try {
                      j = json::parse(text);
                    } catch (const json::exception& e) {
                      throw ParseError(e.what());
                    }
                    return std::make_shared<PyGroup>(group_from_json(j));
                  })
      .def_static("from_cayley", [](const std::vector<std::vector<int>>& t) {
        return std::make_shared<PyGroup>(FiniteGroup::from_cayley(t));
      })
      .def_property_readonly("order", [](const PyGroup& g) { return g.group->order(); })
      .def_property_readonly("num_classes", [](const PyGroup& g) { return g.whole->num_classes(); })
      .def("classes", [](const PyGroup& g) { return to_python(classes_json(*g.whole)); })
      .def("character_table", [](const PyGroup& g) {
        return to_python(character_table_json(character_table(g.whole)));
      });

  py::class_<PyEngine>(m, "InertialProduct")
      .def(py::init<std::shared_ptr<PyGroup>, const std::vector<std::string>&, std::optional<std::uint64_t>>(),
           py::arg("group"), py::arg("reps") = std::vector<std::string>{}, py::arg("seed") = py::none())
      .def_property_readonly("dimension", [](const PyEngine& e) { return e.engine->representation().dimension(); })
      .def_property_readonly("basis_size", [](const PyEngine& e) { return e.engine->basis().size(); })
      .def("sectors", [](const PyEngine& e) { return to_python(sectors_json(*e.engine)); })
      .def("product_table", [](const PyEngine& e) { return to_python(product_table_json(e.engine->product_table())); })
      .def("canonical_product_table",
           [](const PyEngine& e) { return to_python(product_table_json(e.engine->canonical_product_table())); })
      .def("product_coordinates",
           [](const PyEngine& e, std::size_t i, std::size_t j) {
             return e.engine->coordinates(e.engine->virtual_product(e.engine->basis_element(i), e.engine->basis_element(j)));
           })
      .def("ring_property_check", [](const PyEngine& e) { return to_python(ring_report_json(e.engine->ring_property_check())); })
      .def(
          "check",
          [](const PyEngine& e, int degree) {
            bool ok = false;
            return to_python(check_report_json(*e.engine, degree, ok));
          },
          py::arg("degree") = 10);

  m.def(
      "drinfeld_fusion",
      [](const std::shared_ptr<PyGroup>& g, std::optional<std::uint64_t> seed) {
        return to_python(product_table_json(DrinfeldDouble(g->group, options_from(seed)).fusion_constants()));
      },
      py::arg("group"), py::arg("seed") = py::none());

  m.def("compare", [](const std::shared_ptr<PyGroup>& g) {
    const auto virt = InertialProduct(g->group, ClassFunction::zero(g->whole)).product_table();
    const auto diff = compare_tables(virt, DrinfeldDouble(g->group).fusion_constants());
    py::dict out;
    out["basis"] = virt.size();
    out["compared"] = diff.compared;
    out["mismatches"] = diff.mismatches;
    out["identical"] = diff.identical();
    return out;
  });
}
