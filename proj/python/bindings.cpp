#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyalg/generate.hpp"
#include "polyalg/invariants.hpp"
#include "polyalg/io.hpp"

namespace py = pybind11;
using namespace polyalg;

namespace {

Polyomino from_cells(const std::vector<std::pair<int, int>>& cells) {
  std::vector<Cell> cs;
  cs.reserve(cells.size());
  for (auto& [x, y] : cells) cs.push_back({x, y});
  return Polyomino(std::move(cs)).translated_to_origin();
}

std::vector<std::pair<int, int>> to_cells(const Polyomino& p) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : p.cells()) out.push_back({c.x, c.y});
  return out;
}

std::vector<std::int64_t> coeffs(const IntPolynomial& h) { return h.coeffs(); }

py::dict classify_dict(const Polyomino& p) {
  auto rep = classify_basic(p);
  py::dict d;
  d["is_simple"] = rep.is_simple;
  d["holes"] = rep.holes.size();
  d["is_thin"] = rep.is_thin;
  d["is_closed_path"] = rep.is_closed_path;
  d["is_weakly_closed_path"] = rep.is_weakly_closed_path;
  d["l_configurations"] = rep.l_configurations;
  d["max_ladder_steps"] = rep.max_ladder_steps;
  d["has_weak_ladder"] = rep.has_weak_ladder;
  d["has_zig_zag"] = rep.has_zig_zag;
  d["is_prime_closed_path"] =
      rep.is_prime_closed_path ? py::cast(*rep.is_prime_closed_path) : py::none();
  return d;
}

py::dict invariants_dict(const Polyomino& p) {
  auto cls = classify_basic(p);
  py::dict d;
  if (cls.is_closed_path && cls.is_prime_closed_path.value_or(false)) {
    auto rep = closed_path_invariants(p);
    d["h"] = coeffs(rep.hp.num);
    d["h_rook"] = coeffs(rep.h_rook);
    d["h_formula"] = rep.h_formula ? py::cast(coeffs(*rep.h_formula)) : py::none();
    d["formula"] = rep.formula;
    d["h_oracle"] = rep.h_oracle ? py::cast(coeffs(*rep.h_oracle)) : py::none();
    d["krull_dim"] = rep.krull_dim;
    d["regularity"] = rep.regularity;
    d["gorenstein"] = rep.gorenstein;
    d["methods_agree"] = rep.methods_agree;
  } else if (cls.is_simple && cls.is_thin) {
    auto h = h_simple_thin(p);
    auto hs = hilbert_series_oracle(p);
    d["h"] = coeffs(h);
    d["h_rook"] = coeffs(h);
    d["h_oracle"] = coeffs(hs.num);
    d["krull_dim"] = hs.denom_exp;
    d["regularity"] = h.degree();
    d["gorenstein"] = gorenstein(p);
    d["methods_agree"] = h == hs.num;
  } else {
    auto hs = hilbert_series_oracle(p);
    d["h"] = coeffs(hs.num);
    d["h_oracle"] = coeffs(hs.num);
    d["krull_dim"] = hs.denom_exp;
    d["regularity"] = hs.num.degree();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_polyalg, m) {
  m.doc() = "exact invariants of polyomino coordinate rings";

  py::class_<Polyomino>(m, "Polyomino")
      .def(py::init(&from_cells), py::arg("cells"))
      .def_static("parse", [](const std::string& text) { return parse_input(text); })
      .def_property_readonly("rank", &Polyomino::rank)
      .def_property_readonly("cells", &to_cells)
      .def_property_readonly("num_vertices",
                             [](const Polyomino& p) { return p.vertices().size(); })
      .def("ascii", &render_ascii)
      .def("__repr__", [](const Polyomino& p) {
        return "<Polyomino rank=" + std::to_string(p.rank()) + ">";
      });

  m.def("classify", &classify_dict, py::arg("p"));
  m.def("rook_polynomial", [](const Polyomino& p) { return coeffs(rook_polynomial(p)); });
  m.def("rook_number", &rook_number);
  m.def("invariants", &invariants_dict, py::arg("p"));
  m.def(
      "hilbert_series",
      [](const Polyomino& p) {
        auto hs = hilbert_series_oracle(p);
        return py::make_tuple(coeffs(hs.num), hs.denom_exp);
      },
      "oracle Hilbert series as (numerator coefficients, denominator exponent)");
  m.def(
      "generate",
      [](int max_rank, bool closed_paths, bool no_zigzag) {
        GenerateOptions o;
        o.max_rank = max_rank;
        o.closed_paths = closed_paths;
        o.no_zigzag = no_zigzag;
        std::vector<Polyomino> out = generate(o);
        return out;
      },
      py::arg("max_rank"), py::arg("closed_paths") = false, py::arg("no_zigzag") = false);

  py::register_exception<Error>(m, "PolyalgError");
}
