#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chyp/dynamics.hpp"
#include "chyp/io.hpp"
#include "chyp/limitset.hpp"
#include "chyp/verify.hpp"

namespace py = pybind11;
using namespace chyp;

namespace {

py::object to_py(const io::json& j) {
  switch (j.type()) {
    case io::json::value_t::null: return py::none();
    case io::json::value_t::boolean: return py::bool_(j.get<bool>());
    case io::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case io::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case io::json::value_t::number_float: return py::float_(j.get<double>());
    case io::json::value_t::string: return py::str(j.get<std::string>());
    case io::json::value_t::array: {
      py::list out;
      for (const auto& x : j) out.append(to_py(x));
      return std::move(out);
    }
    case io::json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return std::move(out);
    }
    default: throw GeometryError("unsupported JSON value");
  }
}

Form form_arg(const std::string& name) { return io::parse_form(name); }

using PointArray = Eigen::Matrix<Complex, Eigen::Dynamic, 3, Eigen::RowMajor>;

std::vector<BoundaryPoint> boundary_points(const PointArray& a, Form form) {
  std::vector<BoundaryPoint> out;
  out.reserve(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) out.push_back(BoundaryPoint::project(a.row(i).transpose(), form));
  return out;
}

PointArray point_array(const std::vector<BoundaryPoint>& pts) {
  PointArray a(static_cast<Eigen::Index>(pts.size()), 3);
  for (std::size_t i = 0; i < pts.size(); ++i) a.row(static_cast<Eigen::Index>(i)) = pts[i].rep().transpose();
  return a;
}

py::object heisenberg_tuple(const HeisenbergPoint& h) {
  if (h.is_infinity()) return py::none();
  return py::make_tuple(h.zeta(), h.v());
}

CurveLift curve_arg(const py::object& spec) {
  if (py::isinstance<py::str>(spec)) return builtin_curve(spec.cast<std::string>());
  const auto rows = spec.cast<Eigen::Matrix<double, Eigen::Dynamic, 3, Eigen::RowMajor>>();
  std::vector<HeisenbergPoint> samples;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) samples.emplace_back(Complex(rows(i, 0), rows(i, 1)), rows(i, 2));
  return CurveLift::from_heisenberg_samples(samples);
}

}  // namespace

PYBIND11_MODULE(_chyp, m) {
  m.doc() = "Numerical geometry of the complex hyperbolic plane and its boundary";
  py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);

  m.def("herm_inner", [](const std::string& form, const CVec3& z, const CVec3& w) {
    return herm_inner(form_arg(form), z, w);
  }, py::arg("form"), py::arg("z"), py::arg("w"));
  m.def("boxtimes", [](const std::string& form, const CVec3& z, const CVec3& w) {
    return boxtimes(form_arg(form), z, w);
  }, py::arg("form"), py::arg("z"), py::arg("w"));
  m.def("cayley_matrix", [] { return cayley_matrix(); });
  m.def("change_form", [](const std::string& from, const std::string& to, const CVec3& z) {
    return change_form(form_arg(from), form_arg(to), z);
  }, py::arg("source"), py::arg("target"), py::arg("z"));
  m.def("change_form_matrix", [](const std::string& from, const std::string& to, const CMat3& g) {
    return change_form(form_arg(from), form_arg(to), g);
  }, py::arg("source"), py::arg("target"), py::arg("g"));
  m.def("is_form_unitary", [](const std::string& form, const CMat3& g, double tol) {
    return is_form_unitary(form_arg(form), g, tol);
  }, py::arg("form"), py::arg("g"), py::arg("tol") = kKernelTol);

  m.def("heis_embed", [](Complex zeta, double v) { return heis_embed({zeta, v}).rep(); },
        py::arg("zeta"), py::arg("v"));
  m.def("heis_project", [](const CVec3& z, const std::string& form) {
    return heisenberg_tuple(heis_project(BoundaryPoint(z, form_arg(form))));
  }, py::arg("z"), py::arg("form") = "siegel", "(zeta, v), or None at infinity");
  m.def("cartan_invariant", [](const CVec3& p, const CVec3& q, const CVec3& r, const std::string& form) {
    const Form f = form_arg(form);
    return cartan_invariant(BoundaryPoint(p, f), BoundaryPoint(q, f), BoundaryPoint(r, f));
  }, py::arg("p"), py::arg("q"), py::arg("r"), py::arg("form") = "siegel");

  m.def("builtin_curves", [] {
    std::vector<std::string> names;
    for (auto n : builtin_curve_names()) names.emplace_back(n);
    return names;
  });
  m.def("classify_curve", [](const py::object& spec, std::size_t grid, double tol, std::uint64_t seed) {
    return to_py(io::to_json(classify_curve(curve_arg(spec), grid, tol, seed)));
  }, py::arg("curve"), py::arg("grid") = kDefaultCurveGrid, py::arg("tol") = kDefaultClassifierTol,
     py::arg("seed") = 0x5eedULL,
     "curve: a builtin name or an (N, 3) array of Heisenberg samples (re, im, v) at t = k/N");

  m.def("classify_isometry", [](const CMat3& g, const std::string& form) {
    return std::string(to_string(classify_isometry(ProjMap(g), form_arg(form))));
  }, py::arg("g"), py::arg("form") = "siegel");
  m.def("normalize_loxodromic", [](const CMat3& g, const std::string& form) {
    const LoxodromicData d = normalize_loxodromic(ProjMap(g), form_arg(form));
    py::dict out;
    out["lambda"] = d.lambda;
    out["sqrt_lambda"] = d.sqrt_lambda;
    out["attracting"] = d.attracting.rep();
    out["repelling"] = d.repelling.rep();
    out["conjugator"] = d.conjugator.matrix();
    return out;
  }, py::arg("g"), py::arg("form") = "siegel");

  m.def("sample_limit_set", [](const std::vector<CMat3>& generators, const std::string& form,
                               std::size_t max_word_length, double dedup_tol, double depth_tol) {
    GroupPresentation g;
    g.form = form_arg(form);
    for (const auto& x : generators) g.generators.emplace_back(x);
    SamplerOptions o;
    o.max_word_length = max_word_length;
    o.dedup_tol = dedup_tol;
    o.depth_tol = depth_tol;
    const LimitSample s = sample_limit_set(g, o);
    py::dict out;
    out["points"] = point_array(s.points);
    out["words_visited"] = s.words_visited;
    out["count_before_dedup"] = s.count_before_dedup;
    out["truncated"] = s.truncated;
    out["classification"] = to_py(io::to_json(classify_limit_sample(s)));
    return out;
  }, py::arg("generators"), py::arg("form") = "siegel", py::arg("max_word_length") = 12,
     py::arg("dedup_tol") = 1e-6, py::arg("depth_tol") = 1e-3);
  m.def("classify_limit_points", [](const PointArray& points, const std::string& form, double tol, std::uint64_t seed) {
    return to_py(io::to_json(classify_limit_sample(boundary_points(points, form_arg(form)), tol, seed)));
  }, py::arg("points"), py::arg("form") = "siegel", py::arg("tol") = 1e-8, py::arg("seed") = 0x5eedULL);

  m.def("verify_suites", [] {
    std::vector<std::string> names;
    for (auto n : verify_suite_names()) names.emplace_back(n);
    return names;
  });
  m.def("run_verify", [](const std::string& suite, std::uint64_t seed, double scale) {
    VerifyOptions o;
    o.seed = seed;
    o.scale = scale;
    py::list out;
    for (const auto& r : run_verify(suite, o)) {
      py::dict d;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["cases"] = r.cases;
      d["max_residual"] = r.max_residual;
      d["threshold"] = r.threshold;
      d["details"] = r.details;
      out.append(d);
    }
    return out;
  }, py::arg("suite"), py::arg("seed") = VerifyOptions{}.seed, py::arg("scale") = 1.0);
}
