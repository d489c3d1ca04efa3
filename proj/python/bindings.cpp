#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ktweb/action.hpp"
#include "ktweb/report.hpp"

namespace py = pybind11;
using namespace ktweb;

namespace {

// alpha entries: int | float | "p/q" string. Ints and strings keep the tuple
// on the exact backend, any plain float makes it real.
KTParams params_from(const py::sequence& seq) {
  if (py::len(seq) != 6) throw py::value_error("alpha must have 6 entries");
  std::array<Rat, 6> exact;
  std::array<double, 6> reals{};
  bool all_exact = true;
  for (size_t i = 0; i < 6; ++i) {
    py::handle v = seq[i];
    if (py::isinstance<py::str>(v)) {
      const auto r = parse_rational(v.cast<std::string>());
      if (!r) throw py::value_error("bad rational string: " + v.cast<std::string>());
      exact[i] = *r;
      reals[i] = to_double(*r);
    } else if (py::isinstance<py::int_>(v)) {
      exact[i] = Rat(v.cast<long long>());
      reals[i] = v.cast<double>();
    } else {
      all_exact = false;
      reals[i] = v.cast<double>();
    }
  }
  return all_exact ? KTParams::from_rationals(exact) : KTParams::from_doubles(reals);
}

Poly2 poly_from(const py::sequence& terms) {
  Poly2 V;
  for (py::handle term : terms) {
    const py::sequence t = py::reinterpret_borrow<py::sequence>(term);
    if (py::len(t) != 3) throw py::value_error("potential terms are (i, j, coeff)");
    const int i = t[0].cast<int>();
    const int j = t[1].cast<int>();
    Rat c;
    if (py::isinstance<py::str>(t[2])) {
      const auto r = parse_rational(t[2].cast<std::string>());
      if (!r) throw py::value_error("bad rational coefficient");
      c = *r;
    } else if (py::isinstance<py::int_>(t[2])) {
      c = Rat(t[2].cast<long long>());
    } else {
      c = rational_from_double(t[2].cast<double>());
    }
    V.add_term(i, j, c);
  }
  return V;
}

Rect rect_from(const std::array<double, 4>& r) { return Rect{r[0], r[1], r[2], r[3]}; }

}  // namespace

PYBIND11_MODULE(_ktweb, m) {
  m.doc() = "SE(2) classification of planar Killing two-tensors and orthogonal separation";

  py::register_exception<DegenerateInput>(m, "DegenerateInput");
  py::register_exception<Incompatible>(m, "Incompatible");
  py::register_exception<DegreeOverflow>(m, "DegreeOverflow");
  py::register_exception<ParseError>(m, "ParseError");

  m.def("kt_components", [](const py::sequence& alpha, double x1, double x2) {
    const SymMat2 k = kt_components(params_from(alpha), {x1, x2});
    return py::make_tuple(k.k11, k.k12, k.k22);
  });
  m.def("kt_eigenvalues", [](const py::sequence& alpha, double x1, double x2) {
    return kt_eigenvalues(params_from(alpha), {x1, x2});
  });
  m.def("induced_action", [](double theta, double a, double b, const py::sequence& alpha) {
    const KTParams q = induced_action({theta, a, b}, params_from(alpha));
    return std::vector<double>(q.a.begin(), q.a.end());
  });
  m.def("group_apply_point", [](double theta, double a, double b, double x1, double x2) {
    const Point2 y = group_apply_point({theta, a, b}, {x1, x2});
    return py::make_tuple(y.x1, y.x2);
  });
  m.def("compatible", [](const py::sequence& alpha, const py::sequence& potential) {
    return compatible(params_from(alpha), poly_from(potential));
  });

  // JSON-string reports; the ktweb package decodes them to dicts.
  m.def("classify_json", [](const py::sequence& a) { return classify_json(params_from(a)); });
  m.def("equivalent_json", [](const py::sequence& a, const py::sequence& b, double tol) {
    return equivalent_json(params_from(a), params_from(b), tol);
  });
  m.def("frame_json", [](const py::sequence& a) { return frame_json(params_from(a)); });
  m.def("canonical_json", [](const py::sequence& a) { return canonical_json(params_from(a)); });
  m.def("separate_json", [](const py::sequence& a, const py::sequence& potential) {
    return separate_json(params_from(a), poly_from(potential));
  });
  m.def("render_svg_file",
        [](const py::sequence& a, const std::array<double, 4>& region, int curves, int samples,
           const std::string& path) {
          const WebPlot plot = web_curves(params_from(a), rect_from(region), curves, samples);
          emit_svg(plot, path);
          return render_summary_json(plot, path);
        });
  m.def("render_csv_file",
        [](const py::sequence& a, const std::array<double, 4>& region, int curves, int samples,
           const std::string& path) {
          const WebPlot plot = web_curves(params_from(a), rect_from(region), curves, samples);
          emit_csv(plot, path);
          return render_summary_json(plot, path);
        });
}
