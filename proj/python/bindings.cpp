#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "centlab/catalog.hpp"
#include "centlab/centralizer.hpp"
#include "centlab/constructors.hpp"
#include "centlab/enumerate.hpp"
#include "centlab/error.hpp"
#include "centlab/noncomm.hpp"
#include "centlab/theorems.hpp"

namespace py = pybind11;
using namespace centlab;

namespace {

Invariants invariants_of(FiniteRing const& r) {
  auto inv = r.group().invariants();
  return {inv.begin(), inv.end()};
}

py::dict facts_dict(RingFacts const& f) {
  py::dict d;
  d["label"] = f.label;
  d["order"] = f.order;
  d["additive"] = f.additive;
  d["center"] = f.center_size;
  d["index"] = f.index;
  d["quotient"] = f.quotient;
  d["n"] = f.n;
  d["t"] = f.t;
  d["clique"] = f.clique;
  d["unital"] = f.unital;
  d["commutative"] = f.commutative;
  return d;
}

std::vector<RingRecord> records_from(py::object catalog) {
  if (py::isinstance<py::str>(catalog)) return parse_catalog(catalog.cast<std::string>());
  return make_records(catalog.cast<std::vector<FiniteRing>>(), Provenance::User);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "centlab core";

  static py::exception<Error> exc(m, "CentlabError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (Error const& e) {
      py::set_error(exc, e.what());
    }
  });

  py::class_<FiniteRing>(m, "Ring")
      .def_property_readonly("order", &FiniteRing::order)
      .def_property_readonly("invariants", &invariants_of)
      .def_property_readonly("label", &FiniteRing::label)
      .def_property_readonly("table", [](FiniteRing const& r) {
        return std::vector<Element>(r.table().begin(), r.table().end());
      })
      .def("add", &FiniteRing::add)
      .def("mul", &FiniteRing::mul)
      .def("commute", &FiniteRing::commute)
      .def("is_commutative", &FiniteRing::is_commutative)
      .def("identity", &FiniteRing::identity)
      .def("with_label", &FiniteRing::with_label)
      .def("__repr__", [](FiniteRing const& r) {
        return "<Ring " + r.label() + " order " + std::to_string(r.order()) + ">";
      });

  m.def("validate_ring",
        [](Invariants inv, std::vector<Element> table, std::string label) {
          return validate_ring(AdditiveGroup(std::move(inv)), std::move(table), std::move(label));
        },
        py::arg("invariants"), py::arg("table"), py::arg("label") = "");

  m.def("zero_ring", &zero_ring);
  m.def("cyclic_ring", &cyclic_ring, py::arg("n"), py::arg("c") = 1);
  m.def("top_row_ring", &top_row_ring);
  m.def("full_matrix_ring", &full_matrix_ring);
  m.def("upper_triangular_ring", &upper_triangular_ring);
  m.def("direct_product", &direct_product);
  m.def("opposite_ring", &opposite_ring);
  m.def("witness_rings", &witness_rings);

  m.def("parse_ring", &parse_ring);
  m.def("serialize_ring", &serialize_ring);
  m.def("parse_catalog", [](std::string const& text) {
    std::vector<FiniteRing> out;
    for (auto& r : parse_catalog(text)) out.push_back(r.ring.with_label(r.id));
    return out;
  });
  m.def("serialize_catalog", [](std::vector<FiniteRing> rings, std::string const& provenance) {
    return serialize_catalog(make_records(std::move(rings), parse_provenance(provenance)));
  }, py::arg("rings"), py::arg("provenance") = "user");

  m.def("center", [](FiniteRing const& r) { return center(r).elements(); });
  m.def("cent_count", [](FiniteRing const& r) { return cent_structure(r).n(); });
  m.def("quotient_invariants", [](FiniteRing const& r) { return quotient_invariants(r, center(r)); });
  m.def("max_noncommuting_set", [](FiniteRing const& r) {
    auto c = max_noncommuting_set(r);
    return py::make_tuple(c.t, c.witness);
  });

  m.def("enumerate_rings",
        [](Invariants inv, unsigned workers) {
          py::gil_scoped_release release;
          return enumerate_rings(inv, workers);
        },
        py::arg("invariants"), py::arg("workers") = 1);
  m.def("enumerate_order",
        [](std::uint32_t order, unsigned workers) {
          py::gil_scoped_release release;
          return enumerate_order(order, workers);
        },
        py::arg("order"), py::arg("workers") = 1);

  m.def("analyze", [](FiniteRing const& r) { return facts_dict(analyze(r)); });
  m.def("theorem_ids", [] {
    std::vector<std::string> ids;
    for (auto const& info : theorem_registry()) ids.emplace_back(info.name);
    return ids;
  });
  m.def("verify", [](std::string const& id, FiniteRing const& r) {
    auto v = verify(parse_theorem_id(id), r);
    py::dict d;
    d["status"] = std::string(to_string(v.status));
    d["hypothesis"] = v.hypothesis_holds;
    d["conclusion"] = v.conclusion_holds;
    d["witness"] = v.witness;
    return d;
  });
  m.def("scan",
        [](py::object catalog, std::string const& ids, unsigned workers) {
          auto records = records_from(catalog);
          auto id_list = parse_theorem_list(ids);
          ScanSummary s;
          {
            py::gil_scoped_release release;
            s = scan(records, id_list, ScanOptions{workers, {}});
          }
          return py::make_tuple(render_scan(s), s.any_failure());
        },
        py::arg("catalog"), py::arg("theorems") = "ALL", py::arg("workers") = 1,
        "Scan rings (a list, or catalog text). Returns (report, any_failure).");
}
