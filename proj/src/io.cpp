#include "chyp/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace chyp::io {

namespace {

double number(const json& j, const char* what) {
  if (!j.is_number()) throw GeometryError(std::string("expected a number for ") + what);
  return j.get<double>();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_cell(const std::string& s) {
  std::size_t used = 0;
  const double x = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("trailing characters");
  return x;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Complex parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw GeometryError("complex number must be [re, im]");
  return {number(j[0], "re"), number(j[1], "im")};
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

CVec3 parse_vec3(const json& j) {
  if (!j.is_array() || j.size() != 3) throw GeometryError("vector must have 3 complex entries");
  return {parse_complex(j[0]), parse_complex(j[1]), parse_complex(j[2])};
}

json to_json(const CVec3& v) { return json::array({to_json(v(0)), to_json(v(1)), to_json(v(2))}); }

CMat3 parse_matrix(const json& j) {
  if (!j.is_array()) throw GeometryError("matrix must be an array");
  CMat3 m;
  if (j.size() == 9) {
    for (int k = 0; k < 9; ++k) m(k / 3, k % 3) = parse_complex(j[k]);
    return m;
  }
  if (j.size() == 3) {
    for (int r = 0; r < 3; ++r) {
      if (!j[r].is_array() || j[r].size() != 3) throw GeometryError("matrix rows must have 3 entries");
      for (int c = 0; c < 3; ++c) m(r, c) = parse_complex(j[r][c]);
    }
    return m;
  }
  throw GeometryError("matrix must have 9 row-major entries or 3 rows");
}

json to_json(const CMat3& m) {
  json out = json::array();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) out.push_back(to_json(m(r, c)));
  }
  return out;
}

Form parse_form(const std::string& name) {
  if (name == "form1" || name == "ball") return Form::Ball;
  if (name == "form2" || name == "siegel") return Form::Siegel;
  throw GeometryError("unknown form '" + name + "' (expected form1 or form2)");
}

GroupPresentation parse_group(const json& j) {
  if (!j.is_object()) throw GeometryError("group must be a JSON object");
  GroupPresentation g;
  g.form = parse_form(j.value("form", std::string("form2")));
  if (!j.contains("generators") || !j["generators"].is_array()) {
    throw GeometryError("group needs a \"generators\" array");
  }
  std::size_t index = 0;
  for (const auto& m : j["generators"]) {
    try {
      g.generators.emplace_back(parse_matrix(m));
    } catch (const GeometryError& e) {
      throw GeometryError("generator " + std::to_string(index) + ": " + e.what());
    }
    ++index;
  }
  if (j.contains("labels")) g.labels = j["labels"].get<std::vector<std::string>>();
  return g;
}

CurveLift parse_curve_spec(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw GeometryError("curve spec needs a \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "builtin") {
    if (!j.contains("name")) throw GeometryError("builtin curve spec needs a \"name\"");
    return builtin_curve(j["name"].get<std::string>());
  }
  if (kind == "heis-samples") {
    if (!j.contains("points") || !j["points"].is_array()) {
      throw GeometryError("heis-samples spec needs a \"points\" array");
    }
    std::vector<HeisenbergPoint> pts;
    for (const auto& p : j["points"]) {
      if (!p.is_array() || p.size() != 3) throw GeometryError("heis-samples points are [re, im, v]");
      pts.emplace_back(Complex(number(p[0], "zeta_re"), number(p[1], "zeta_im")), number(p[2], "v"));
    }
    return CurveLift::from_heisenberg_samples(pts);
  }
  throw GeometryError("unknown curve kind '" + kind + "'");
}

Chain parse_chain(const json& j) {
  if (!j.is_object() || j.value("kind", std::string()) != "chain") {
    throw GeometryError("chain spec must have kind \"chain\"");
  }
  const Form form = parse_form(j.value("form", std::string("form2")));
  const CVec3 p = parse_vec3(j.at("polar"));
  switch (sign_class(form, p)) {
    case SignClass::Positive: return Chain::polar(ProjPoint(p), form);
    case SignClass::Null: return Chain::degenerate(BoundaryPoint(p, form));
    case SignClass::Negative: break;
  }
  throw GeometryError("chain polar point is negative");
}

json to_json(const Chain& c) {
  return {{"kind", "chain"},
          {"form", to_string(c.form())},
          {"polar", to_json(c.polar_point().rep())},
          {"degenerate", c.is_degenerate()}};
}

RCircleSpec parse_rcircle(const json& j) {
  const std::string kind = j.value("kind", std::string());
  if (kind == "rcircle-inf") {
    InfiniteRCircle r;
    if (j.contains("base")) {
      const auto& b = j["base"];
      if (!b.is_array() || b.size() != 3) throw GeometryError("rcircle base is [re, im, v]");
      r.base = HeisenbergPoint(Complex(number(b[0], "re"), number(b[1], "im")), number(b[2], "v"));
    }
    r.theta = j.value("theta", 0.0);
    return r;
  }
  if (kind == "rcircle-fin") {
    FiniteRCircle r;
    if (j.contains("matrix")) {
      const CMat3 m = parse_matrix(j["matrix"]);
      if (!is_form_unitary(Form::Siegel, m, 1e-9)) throw GeometryError("rcircle matrix is not form2-unitary");
      r.map = ProjMap(m);
    }
    return r;
  }
  throw GeometryError("rcircle spec kind must be rcircle-inf or rcircle-fin");
}

json to_json(const HeisenbergPoint& h) {
  if (h.is_infinity()) return "inf";
  return json::array({h.zeta().real(), h.zeta().imag(), h.v()});
}

json to_json(const ChainFit& f) {
  return {{"polar", to_json(f.polar.rep())},
          {"residual", f.residual},
          {"max_incidence", f.max_incidence},
          {"polar_sign", to_string(f.polar_sign)}};
}

json to_json(const LineFit& f) {
  return {{"direction", f.direction},
          {"collinearity_residual", f.collinearity_residual},
          {"v_residual", f.v_residual},
          {"projection_degenerate", f.projection_degenerate},
          {"anchor_origin", f.anchor_origin},
          {"anchor_infinity", f.anchor_infinity}};
}

json to_json(const CurveClassification& c) {
  return {{"verdict", to_string(c.verdict)},
          {"residuals",
           {{"chain_fit", c.chain_fit.residual},
            {"legendrian_max_defect", c.legendrian.max_defect},
            {"legendrian_argmax_t", c.legendrian.argmax_t},
            {"max_cartan_abs", c.max_cartan_abs},
            {"line_collinearity", c.line.collinearity_residual},
            {"line_v", c.line.v_residual}}},
          {"chain_fit", to_json(c.chain_fit)},
          {"line", to_json(c.line)},
          {"cartan_triples", c.cartan_triples},
          {"grid", c.grid},
          {"tol", c.tol}};
}

json to_json(const LimitClassification& c) {
  json out = {{"verdict", to_string(c.verdict)},
              {"points", c.points},
              {"residuals",
               {{"chain_fit", c.chain_residual},
                {"max_cartan_abs", c.max_cartan_abs},
                {"cartan_within_tol", c.cartan_within_tol},
                {"legendrian_proxy", c.legendrian_proxy}}},
              {"triples", c.triples},
              {"tol", c.tol}};
  if (c.chain_fit) out["chain_fit"] = to_json(*c.chain_fit);
  if (c.line) {
    out["line"] = to_json(*c.line);
    out["residuals"]["line_collinearity"] = c.line->collinearity_residual;
    out["residuals"]["line_v"] = c.line->v_residual;
  }
  return out;
}

std::string csv_row(const HeisenbergPoint& h) {
  if (h.is_infinity()) return "inf,,";
  return format_double(h.zeta().real()) + "," + format_double(h.zeta().imag()) + "," + format_double(h.v());
}

void write_csv(std::ostream& out, const std::vector<HeisenbergPoint>& points) {
  out << kCsvHeader << '\n';
  for (const auto& p : points) out << csv_row(p) << '\n';
}

std::vector<CsvRow> read_csv(std::istream& in) {
  std::vector<CsvRow> rows;
  std::string line;
  std::size_t n = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++n;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (first && t.rfind("zeta_re", 0) == 0) {
      first = false;
      continue;
    }
    first = false;
    CsvRow row;
    row.line = n;
    const auto cells = split_commas(t);
    if (cells.size() != 3) {
      row.error = "expected 3 columns";
    } else if (cells[0] == "inf" && cells[1].empty() && cells[2].empty()) {
      row.point = HeisenbergPoint::infinity();
    } else {
      try {
        row.point = HeisenbergPoint(Complex(parse_cell(cells[0]), parse_cell(cells[1])), parse_cell(cells[2]));
      } catch (const std::exception&) {
        row.error = "malformed number";
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw GeometryError(what + ": invalid JSON (" + e.what() + ")");
  }
}

}  // namespace chyp::io
