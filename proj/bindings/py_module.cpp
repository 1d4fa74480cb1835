#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hrpairs/family.hpp"
#include "hrpairs/isosceles.hpp"
#include "hrpairs/oracle.hpp"
#include "hrpairs/serialize.hpp"
#include "hrpairs/shapes.hpp"

namespace py = pybind11;

namespace {

using hrp::Rat;

Rat rat_arg(const std::string& text) { return hrp::parse_rat(text); }

py::int_ to_py_int(const hrp::Int& n) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(n.get_str().c_str(), nullptr, 10));
}

hrp::Int int_arg(const py::int_& n) { return hrp::Int(py::str(n).cast<std::string>()); }

py::dict pair_dict(const hrp::Pair& pair) {
  // Same flat schema the CLI emits, exact "num/den" strings throughout.
  py::dict d;
  d["triangle"] = py::make_tuple(hrp::rat_str(pair.triangle().a()),
                                 hrp::rat_str(pair.triangle().b()),
                                 hrp::rat_str(pair.triangle().c()));
  d["rhombus_side"] = hrp::rat_str(pair.rhombus().side());
  d["angle_param"] = hrp::rat_str(pair.rhombus().angle_param());
  d["sin_theta"] = hrp::rat_str(pair.rhombus().sin_theta());
  d["cos_theta"] = hrp::rat_str(pair.rhombus().cos_theta());
  d["perimeter"] = hrp::rat_str(pair.perimeter());
  d["area"] = hrp::rat_str(pair.area());
  d["heron"] = pair.integral();
  d["provenance"] = hrp::provenance_str(pair.provenance());
  return d;
}

}  // namespace

PYBIND11_MODULE(_hrpairs, m) {
  m.doc() = "Exact (arbitrary-precision rational) construction and search of triangle/rhombus "
            "pairs with a common area and a common perimeter";

  // exact arithmetic
  m.def(
      "integer_sqrt",
      [](const py::int_& n) {
        const auto r = hrp::integer_sqrt(int_arg(n));
        return py::make_tuple(to_py_int(r.root), r.exact);
      },
      py::arg("n"), "Floor square root and exactness flag of a non-negative integer.");
  m.def(
      "rational_sqrt",
      [](const std::string& q) -> std::optional<std::string> {
        const auto root = hrp::rational_sqrt(rat_arg(q));
        if (!root) return std::nullopt;
        return hrp::rat_str(*root);
      },
      py::arg("q"), "Exact square root of a rational, or None when irrational.");
  m.def(
      "height", [](const std::string& q) { return to_py_int(hrp::height(rat_arg(q))); },
      py::arg("q"), "max(|numerator|, denominator) in lowest terms.");
  m.def(
      "normalize", [](const std::string& q) { return hrp::rat_str(rat_arg(q)); }, py::arg("q"),
      "Canonical \"num/den\" form of rational text.");

  // shapes
  py::class_<hrp::Triangle>(m, "Triangle")
      .def(py::init([](const std::string& a, const std::string& b, const std::string& c) {
             return hrp::Triangle(rat_arg(a), rat_arg(b), rat_arg(c));
           }),
           py::arg("a"), py::arg("b"), py::arg("c"))
      .def_property_readonly("a", [](const hrp::Triangle& t) { return hrp::rat_str(t.a()); })
      .def_property_readonly("b", [](const hrp::Triangle& t) { return hrp::rat_str(t.b()); })
      .def_property_readonly("c", [](const hrp::Triangle& t) { return hrp::rat_str(t.c()); })
      .def("perimeter", [](const hrp::Triangle& t) { return hrp::rat_str(t.perimeter()); })
      .def("area",
           [](const hrp::Triangle& t) -> std::optional<std::string> {
             const auto area = t.area();
             if (!area) return std::nullopt;
             return hrp::rat_str(*area);
           })
      .def("heron", &hrp::Triangle::heron);

  py::class_<hrp::Rhombus>(m, "Rhombus")
      .def(py::init([](const std::string& side, const std::string& t) {
             return hrp::Rhombus(rat_arg(side), rat_arg(t));
           }),
           py::arg("side"), py::arg("angle_param"))
      .def_property_readonly("side",
                             [](const hrp::Rhombus& r) { return hrp::rat_str(r.side()); })
      .def_property_readonly("angle_param",
                             [](const hrp::Rhombus& r) { return hrp::rat_str(r.angle_param()); })
      .def("sin_theta", [](const hrp::Rhombus& r) { return hrp::rat_str(r.sin_theta()); })
      .def("cos_theta", [](const hrp::Rhombus& r) { return hrp::rat_str(r.cos_theta()); })
      .def("perimeter", [](const hrp::Rhombus& r) { return hrp::rat_str(r.perimeter()); })
      .def("area", [](const hrp::Rhombus& r) { return hrp::rat_str(r.area()); });

  py::class_<hrp::Pair>(m, "Pair")
      .def(py::init([](const hrp::Triangle& t, const hrp::Rhombus& r) {
             return hrp::Pair(t, r, hrp::Provenance::from_search());
           }),
           py::arg("triangle"), py::arg("rhombus"),
           "Asserts the exact perimeter and area equalities; raises ValueError otherwise.")
      .def_property_readonly("triangle", &hrp::Pair::triangle)
      .def_property_readonly("rhombus", &hrp::Pair::rhombus)
      .def("perimeter", [](const hrp::Pair& p) { return hrp::rat_str(p.perimeter()); })
      .def("area", [](const hrp::Pair& p) { return hrp::rat_str(p.area()); })
      .def("integral", &hrp::Pair::integral)
      .def("to_dict", &pair_dict);

  m.def(
      "scale_pair",
      [](const hrp::Pair& pair, const std::string& lam) {
        return hrp::scale_pair(pair, rat_arg(lam));
      },
      py::arg("pair"), py::arg("scale"));
  m.def(
      "minimal_integral_scale",
      [](const hrp::Pair& pair) {
        const auto scaled = hrp::minimal_integral_scale(pair);
        return py::make_tuple(hrp::rat_str(scaled.lambda), scaled.pair);
      },
      py::arg("pair"), "Returns (lambda, pair) with the minimal integral witness.");

  // family
  m.def(
      "pair_from_u",
      [](const std::string& u) {
        const hrp::FamilyPair fp = hrp::pair_from_u(hrp::FamilyParameter(rat_arg(u)));
        py::dict d;
        d["pair"] = fp.pair;
        d["u"] = hrp::rat_str(fp.u);
        d["t1"] = hrp::rat_str(fp.t1);
        d["s1"] = hrp::rat_str(fp.s1);
        d["v"] = hrp::rat_str(fp.v);
        return d;
      },
      py::arg("u"),
      "Closed-form rational pair for family index u (u^2 > 1/3) with witnesses.");
  m.def(
      "brahmagupta_sides",
      [](const std::string& u, const std::string& v, const std::string& w) {
        return hrp::brahmagupta_sides(rat_arg(u), rat_arg(v), rat_arg(w));
      },
      py::arg("u"), py::arg("v"), py::arg("w"));
  m.def(
      "g_curve_coefficients",
      [](const std::string& u) {
        const hrp::QuarticCurve c = hrp::g_curve(rat_arg(u));
        return py::make_tuple(hrp::rat_str(c.c4()), hrp::rat_str(c.c3()), hrp::rat_str(c.c2()),
                              hrp::rat_str(c.c1()), hrp::rat_str(c.c0()));
      },
      py::arg("u"), "Coefficients (c4, c3, c2, c1, c0) of s^2 = g(t).");
  m.def(
      "fermat_tangent_point",
      [](const std::vector<std::string>& coefficients, const std::string& base_s,
         bool negative_root) {
        if (coefficients.size() != 5) {
          throw std::invalid_argument("expected five curve coefficients");
        }
        const hrp::QuarticCurve curve(rat_arg(coefficients[0]), rat_arg(coefficients[1]),
                                      rat_arg(coefficients[2]), rat_arg(coefficients[3]),
                                      rat_arg(coefficients[4]));
        const hrp::CurvePoint p = hrp::fermat_tangent_point(
            curve, hrp::CurvePoint{0, rat_arg(base_s)},
            negative_root ? hrp::RootSign::negative : hrp::RootSign::positive);
        return py::make_tuple(hrp::rat_str(p.t), hrp::rat_str(p.s));
      },
      py::arg("coefficients"), py::arg("base_s"), py::arg("negative_root") = true,
      "New rational point (t1, s1) from the base point (0, base_s).");
  m.def(
      "v_from_t",
      [](const std::string& u, const std::string& t) {
        return hrp::rat_str(hrp::v_from_t(rat_arg(u), rat_arg(t)));
      },
      py::arg("u"), py::arg("t"));

  // isosceles / nonexistence
  m.def(
      "isosceles_shape",
      [](const std::string& u, const std::string& v) {
        const hrp::IsoscelesTriangle t = hrp::isosceles_shape(rat_arg(u), rat_arg(v));
        py::dict d;
        d["legs"] = hrp::rat_str(t.legs);
        d["base"] = hrp::rat_str(t.base);
        d["altitude"] = hrp::rat_str(t.altitude);
        d["area"] = hrp::rat_str(t.area);
        d["perimeter"] = hrp::rat_str(t.perimeter);
        return d;
      },
      py::arg("u"), py::arg("v"));
  m.def(
      "match_quadratic",
      [](const std::string& u,
         const std::string& v) -> std::optional<std::pair<std::string, std::string>> {
        const auto roots = hrp::match_quadratic(rat_arg(u), rat_arg(v));
        if (!roots) return std::nullopt;
        return std::pair(hrp::rat_str(roots->first), hrp::rat_str(roots->second));
      },
      py::arg("u"), py::arg("v"));
  m.def(
      "sextic_value",
      [](const std::string& U) { return hrp::rat_str(hrp::sextic_value(rat_arg(U))); },
      py::arg("U"));
  m.def(
      "sextic_scan",
      [](unsigned long height, unsigned threads) {
        const hrp::SexticScanReport report = hrp::sextic_scan(height, threads);
        py::list points;
        for (const auto& point : report.points) {
          points.append(py::make_tuple(hrp::rat_str(point.U()), hrp::rat_str(point.W())));
        }
        py::dict d;
        d["height"] = report.height;
        d["candidates_tested"] = report.candidates_tested;
        d["points"] = points;
        d["elapsed_ms"] = report.elapsed.count();
        return d;
      },
      py::arg("height"), py::arg("threads") = 0);
  m.def(
      "isosceles_pair_attempt",
      [](const std::string& u, const std::string& v, const std::string& t) {
        return hrp::isosceles_pair_attempt(rat_arg(u), rat_arg(v), rat_arg(t));
      },
      py::arg("u"), py::arg("v"), py::arg("t"),
      "Raises ValueError for every valid input; the nonexistence result made executable.");
  m.def(
      "degenerate_witness",
      []() {
        const hrp::DegeneracyReport report = hrp::degenerate_witness();
        py::list checks;
        for (const auto& check : report.checks) {
          checks.append(py::make_tuple(check.claim, check.verified));
        }
        return checks;
      },
      "Checked derivation record: u = v forces the degenerate solution only.");

  // exhaustive search
  m.def(
      "search_pairs",
      [](long max_perimeter, const std::string& filter, bool rational_side, unsigned threads) {
        hrp::SearchOptions options;
        if (filter == "all") {
          options.filter = hrp::SearchFilter::all;
        } else if (filter == "heron-only") {
          options.filter = hrp::SearchFilter::heron_only;
        } else if (filter == "isosceles-only") {
          options.filter = hrp::SearchFilter::isosceles_only;
        } else {
          throw std::invalid_argument("filter must be all | heron-only | isosceles-only");
        }
        options.rational_side = rational_side;
        options.threads = threads;
        const hrp::SearchReport report = hrp::search_pairs(max_perimeter, options);
        py::dict d;
        d["perimeter_bound"] = report.perimeter_bound;
        d["pairs"] = report.pairs;
        d["triangles_tested"] = report.triangles_tested;
        d["elapsed_ms"] = report.elapsed.count();
        return d;
      },
      py::arg("max_perimeter"), py::arg("filter") = "all", py::arg("rational_side") = false,
      py::arg("threads") = 0);
  m.def(
      "recover_t",
      [](const std::string& sin) -> std::optional<std::string> {
        const auto t = hrp::recover_t(rat_arg(sin));
        if (!t) return std::nullopt;
        return hrp::rat_str(*t);
      },
      py::arg("sin_theta"));
  m.def(
      "cross_validate",
      [](const std::vector<std::string>& u_values, long max_perimeter, unsigned threads) {
        std::vector<Rat> parsed;
        parsed.reserve(u_values.size());
        for (const auto& text : u_values) parsed.push_back(rat_arg(text));
        const hrp::CrossValidationReport report =
            hrp::cross_validate(parsed, max_perimeter, threads);
        py::list entries;
        for (const auto& entry : report.entries) {
          py::dict e;
          e["u"] = hrp::rat_str(entry.u);
          e["status"] = entry.status == hrp::CrossValidationEntry::Status::verified ? "verified"
                        : entry.status == hrp::CrossValidationEntry::Status::skipped
                            ? "skipped"
                            : "missing";
          e["perimeter"] = hrp::rat_str(entry.perimeter);
          entries.append(e);
        }
        py::dict d;
        d["entries"] = entries;
        d["unmatched_search_hits"] = report.unmatched_search_hits;
        d["ok"] = report.ok();
        return d;
      },
      py::arg("u_values"), py::arg("max_perimeter"), py::arg("threads") = 0,
      "Every family pair fitting under the bound must be rediscovered by the search.");

  m.attr("__version__") = "0.1.0";
}
