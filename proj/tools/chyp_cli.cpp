// Command-line front end: chart conversion, curve and limit-set
// classification, the verification batteries, Cartan triples and R-circle
// point emission.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chyp/io.hpp"
#include "chyp/verify.hpp"

using namespace chyp;
using io::json;

namespace {

// Reads a flat JSON object whose keys are long option names.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    json j = json::object();
    for (const CLI::Option* opt : app->get_options({})) {
      if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
      const std::string name = opt->get_lnames().front();
      if (opt->count() > 0) {
        j[name] = opt->results().size() == 1 ? json(opt->results().front()) : json(opt->results());
      } else if (default_also && !opt->get_default_str().empty()) {
        j[name] = opt->get_default_str();
      }
    }
    return j.dump(2);
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    json j;
    try {
      j = json::parse(input);
    } catch (const json::parse_error& e) {
      throw CLI::ConversionError("config", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config", "top level must be an object");
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : j.items()) {
      CLI::ConfigItem item;
      item.name = key;
      if (value.is_string()) {
        item.inputs.push_back(value.get<std::string>());
      } else if (value.is_boolean()) {
        item.inputs.push_back(value.get<bool>() ? "true" : "false");
      } else if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      } else {
        item.inputs.push_back(value.dump());
      }
      items.push_back(std::move(item));
    }
    return items;
  }
};

// Flags shared by every subcommand; unset values fall back to the
// subcommand's documented default and are echoed in the output.
struct RunConfig {
  std::optional<double> tol;
  std::optional<std::size_t> samples;
  std::size_t max_word_length = 12;
  std::uint64_t seed = 0x5eed;
  std::optional<std::string> format;
  std::string output;
  double dedup_tol = 1e-6;
  double depth_tol = 1e-3;
  std::string sidecar;

  double tol_or(double d) const { return tol.value_or(d); }
  std::size_t samples_or(std::size_t d) const { return samples.value_or(d); }
  std::string format_or(const char* d) const { return format.value_or(d); }
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw GeometryError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to --output or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw GeometryError("cannot write '" + path + "'");
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw GeometryError("cannot write '" + path + "'");
  f << j.dump(2) << '\n';
}

// ---- convert ---------------------------------------------------------------

enum class Chart { Ball, Siegel, Heisenberg };

Chart parse_chart(const std::string& s) {
  if (s == "ball") return Chart::Ball;
  if (s == "siegel") return Chart::Siegel;
  if (s == "heisenberg") return Chart::Heisenberg;
  throw GeometryError("unknown chart '" + s + "' (expected ball, siegel or heisenberg)");
}

// Projective points are printed with the last coordinate scaled to one when
// it is significant, which reads like the usual homogeneous notation.
CVec3 display_rep(const CVec3& v) {
  if (std::abs(v(2)) > 1e-8 * v.norm()) return v / v(2);
  return ProjPoint::canonical(v);
}

const char* kProjHeader = "z1_re,z1_im,z2_re,z2_im,z3_re,z3_im";

std::string csv_vec(const CVec3& v) {
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (i) s += ",";
    s += io::format_double(v(i).real()) + "," + io::format_double(v(i).imag());
  }
  return s;
}

struct ConvertRow {
  std::size_t line = 0;
  std::string error;
  std::optional<HeisenbergPoint> heis;
  std::optional<CVec3> vec;
};

std::vector<ConvertRow> read_convert_input(Chart from, const std::string& text) {
  std::vector<ConvertRow> rows;
  if (from == Chart::Heisenberg) {
    std::istringstream in(text);
    for (auto& r : io::read_csv(in)) {
      ConvertRow row;
      row.line = r.line;
      row.error = r.error;
      row.heis = r.point;
      rows.push_back(row);
    }
    return rows;
  }
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.rfind("z1_re", 0) == 0) continue;
    ConvertRow row;
    row.line = n;
    std::vector<double> xs;
    std::stringstream ss(line);
    std::string cell;
    bool bad = false;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        xs.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t\r", used) != std::string::npos) bad = true;
      } catch (const std::exception&) {
        bad = true;
      }
    }
    if (bad || xs.size() != 6) {
      row.error = "expected 6 numbers z1_re,z1_im,z2_re,z2_im,z3_re,z3_im";
    } else {
      row.vec = CVec3(Complex(xs[0], xs[1]), Complex(xs[2], xs[3]), Complex(xs[4], xs[5]));
      if (row.vec->norm() == 0.0) {
        row.vec.reset();
        row.error = "zero vector";
      }
    }
    rows.push_back(row);
  }
  return rows;
}

int cmd_convert(const RunConfig& cfg, const std::string& from_s, const std::string& to_s,
                const std::string& input, const std::vector<std::string>& inline_points) {
  const std::string format = cfg.format_or("csv");
  const Chart from = parse_chart(from_s);
  const Chart to = parse_chart(to_s);
  const double tol = cfg.tol_or(kKernelTol);

  std::string text;
  for (const auto& p : inline_points) text += p + "\n";
  if (!input.empty()) text += read_file(input);
  std::vector<ConvertRow> rows = read_convert_input(from, text);

  json results = json::array();
  std::vector<std::string> csv;
  std::size_t failures = 0;
  for (auto& row : rows) {
    json entry = {{"line", row.line}};
    if (row.error.empty()) {
      try {
        CVec3 siegel;
        if (from == Chart::Heisenberg) {
          siegel = heis_embed(*row.heis).rep();
        } else {
          siegel = change_form(from == Chart::Ball ? Form::Ball : Form::Siegel, Form::Siegel, *row.vec);
        }
        if (to == Chart::Heisenberg) {
          const HeisenbergPoint h = heis_project(BoundaryPoint(siegel, Form::Siegel, tol));
          entry["point"] = io::to_json(h);
          csv.push_back(io::csv_row(h));
        } else {
          const CVec3 v = display_rep(change_form(Form::Siegel, to == Chart::Ball ? Form::Ball : Form::Siegel, siegel));
          entry["point"] = io::to_json(v);
          csv.push_back(csv_vec(v));
        }
      } catch (const GeometryError& e) {
        row.error = e.what();
      }
    }
    if (!row.error.empty()) {
      ++failures;
      entry["error"] = row.error;
      std::cerr << "line " << row.line << ": " << row.error << '\n';
    }
    results.push_back(entry);
  }

  Sink sink(cfg.output);
  if (format == "csv") {
    sink.out() << (to == Chart::Heisenberg ? io::kCsvHeader : kProjHeader) << '\n';
    for (const auto& r : csv) sink.out() << r << '\n';
  } else {
    json out = {{"from", from_s}, {"to", to_s}, {"rows", results}, {"errors", failures},
                {"config", {{"tol", tol}}}};
    sink.out() << out.dump(2) << '\n';
  }
  return failures == 0 ? 0 : 3;
}

// ---- classify-curve ------------------------------------------------------

int cmd_classify_curve(const RunConfig& cfg, const std::string& spec_path, const std::string& builtin) {
  json spec;
  if (!builtin.empty()) {
    spec = {{"kind", "builtin"}, {"name", builtin}};
  } else {
    if (spec_path.empty()) throw GeometryError("classify-curve needs a spec file or --builtin");
    spec = io::parse_json_text(read_file(spec_path), "curve spec");
  }
  const CurveLift c = io::parse_curve_spec(spec);
  const std::size_t grid = cfg.samples_or(kDefaultCurveGrid);
  const double tol = cfg.tol_or(kDefaultClassifierTol);
  const CurveClassification cls = classify_curve(c, grid, tol, cfg.seed);
  json out = io::to_json(cls);
  out["config"] = {{"tol", tol}, {"samples", grid}, {"seed", cfg.seed}};
  Sink sink(cfg.output);
  sink.out() << out.dump(2) << '\n';
  return 0;
}

// ---- limitset ---------------------------------------------------------------

int cmd_limitset(const RunConfig& cfg, const std::string& group_path) {
  if (group_path.empty()) throw GeometryError("limitset needs a group file");
  const GroupPresentation g = io::parse_group(io::parse_json_text(read_file(group_path), "group"));
  g.validate();

  SamplerOptions opts;
  opts.max_word_length = cfg.max_word_length;
  opts.dedup_tol = cfg.dedup_tol;
  opts.depth_tol = cfg.depth_tol;
  const LimitSample s = sample_limit_set(g, opts);
  const double tol = cfg.tol_or(1e-8);
  const std::size_t triples = cfg.samples_or(kDefaultCartanTriples);
  const LimitClassification cls = classify_limit_sample(s, tol, cfg.seed, triples);

  std::vector<HeisenbergPoint> chart;
  for (const auto& p : s.points) chart.push_back(heis_project(p.in(Form::Siegel)));

  json meta = io::to_json(cls);
  meta["sample"] = {{"max_word_length", s.max_word_length},
                    {"dedup_tol", s.dedup_tol},
                    {"depth_tol", s.depth_tol},
                    {"words_visited", s.words_visited},
                    {"count_before_dedup", s.count_before_dedup},
                    {"count", s.points.size()},
                    {"truncated", s.truncated}};
  meta["config"] = {{"tol", tol},
                    {"samples", triples},
                    {"max-word-length", cfg.max_word_length},
                    {"dedup-tol", cfg.dedup_tol},
                    {"depth-tol", cfg.depth_tol},
                    {"seed", cfg.seed}};

  Sink sink(cfg.output);
  if (cfg.format_or("csv") == "json") {
    json pts = json::array();
    for (const auto& h : chart) pts.push_back(io::to_json(h));
    meta["points"] = pts;
    sink.out() << meta.dump(2) << '\n';
    return 0;
  }
  io::write_csv(sink.out(), chart);
  std::string sidecar = cfg.sidecar;
  if (sidecar.empty() && !cfg.output.empty() && cfg.output != "-") sidecar = cfg.output + ".json";
  if (sidecar.empty()) {
    std::cerr << meta.dump(2) << '\n';
  } else {
    write_json_file(sidecar, meta);
  }
  return 0;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  VerifyOptions opts;
  opts.seed = cfg.seed;
  const auto reports = run_verify(suite, opts);
  bool ok = true;
  Sink sink(cfg.output);
  json arr = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed;
    std::cerr << r.name << ": " << r.seconds << " s\n";
    if (cfg.format_or("text") == "json") {
      arr.push_back({{"suite", r.name},
                     {"passed", r.passed},
                     {"cases", r.cases},
                     {"max_residual", r.max_residual},
                     {"threshold", r.threshold},
                     {"details", r.details}});
    } else {
      sink.out() << (r.passed ? "PASS " : "FAIL ") << r.name << "  cases=" << r.cases
                 << "  max_residual=" << io::format_double(r.max_residual)
                 << "  threshold=" << io::format_double(r.threshold) << '\n';
      for (const auto& d : r.details) sink.out() << "    " << d << '\n';
    }
  }
  if (cfg.format_or("text") == "json") {
    sink.out() << json({{"suites", arr}, {"passed", ok}, {"config", {{"seed", cfg.seed}}}}).dump(2) << '\n';
  }
  return ok ? 0 : 1;
}

// ---- cartan -----------------------------------------------------------------

int cmd_cartan(const RunConfig& cfg, const std::string& input, const std::vector<std::string>& inline_points) {
  std::string text;
  for (const auto& p : inline_points) text += p + "\n";
  if (!input.empty()) text += read_file(input);
  std::istringstream in(text);
  std::vector<BoundaryPoint> pts;
  for (const auto& row : io::read_csv(in)) {
    if (!row.error.empty()) throw GeometryError("line " + std::to_string(row.line) + ": " + row.error);
    pts.push_back(heis_embed(*row.point));
  }
  if (pts.size() != 3) throw GeometryError("cartan needs exactly 3 Heisenberg points");
  const double tol = cfg.tol_or(1e-8);
  const double a = cartan_invariant(pts[0], pts[1], pts[2]) + 0.0;
  const char* kind = std::abs(std::abs(a) - std::numbers::pi / 2) <= tol ? "chain"
                     : std::abs(a) <= tol                                ? "rcircle"
                                                                         : "generic";
  Sink sink(cfg.output);
  if (cfg.format_or("json") == "text") {
    sink.out() << io::format_double(a) << ' ' << kind << '\n';
  } else {
    const json out = {{"cartan", a}, {"triple", kind}, {"config", {{"tol", tol}}}};
    sink.out() << out.dump(2) << '\n';
  }
  return 0;
}

// ---- rcircle ----------------------------------------------------------------

int cmd_rcircle(const RunConfig& cfg, const std::string& spec_path, double range) {
  const RCircleSpec spec = spec_path.empty() ? RCircleSpec(FiniteRCircle{})
                                             : io::parse_rcircle(io::parse_json_text(read_file(spec_path), "rcircle spec"));
  const std::size_t n = cfg.samples_or(128);
  std::vector<HeisenbergPoint> pts;
  constexpr double pi = std::numbers::pi;
  for (std::size_t k = 0; k < n; ++k) {
    const double u = static_cast<double>(k) / static_cast<double>(n);
    double t;
    if (std::holds_alternative<FiniteRCircle>(spec)) {
      // Half-open pieces [-pi/4, pi/4) and [3pi/4, 5pi/4) traverse the
      // closed curve once.
      const double s = 2.0 * u;
      t = s < 1.0 ? -pi / 4 + s * pi / 2 : 3 * pi / 4 + (s - 1.0) * pi / 2;
    } else {
      t = -range + 2.0 * range * u;
    }
    pts.push_back(rcircle_point(spec, t));
  }
  Sink sink(cfg.output);
  if (cfg.format_or("csv") == "csv") {
    io::write_csv(sink.out(), pts);
  } else {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(io::to_json(p));
    sink.out() << json({{"points", arr}, {"config", {{"samples", n}, {"range", range}}}}).dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex hyperbolic plane geometry kernel"};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file with the same keys as the flags");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--tol", cfg.tol, "Tolerance (meaning depends on the subcommand)")
      ->check(CLI::PositiveNumber);
  app.add_option("--samples", cfg.samples, "Sample count (grid, triples or points)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-word-length", cfg.max_word_length, "Word length cap for limitset")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format: csv or json (verify also prints text)")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--output", cfg.output, "Output file (default stdout)");
  app.add_option("--dedup-tol", cfg.dedup_tol, "Chordal dedup tolerance for limitset")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--depth-tol", cfg.depth_tol, "Near-boundary threshold for limitset")
      ->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--sidecar", cfg.sidecar, "Metadata JSON path for limitset CSV output");

  std::string from, to, input;
  std::vector<std::string> points;
  auto* convert = app.add_subcommand("convert", "Convert points between ball, siegel and heisenberg charts");
  convert->add_option("--from", from, "Source chart")->required();
  convert->add_option("--to", to, "Target chart")->required();
  convert->add_option("--input", input, "CSV file ('-' for stdin)");
  convert->add_option("--point", points, "Inline CSV row (repeatable)");

  std::string spec, builtin;
  auto* classify = app.add_subcommand("classify-curve", "Classify a closed boundary curve");
  classify->add_option("spec", spec, "Curve spec JSON file");
  classify->add_option("--builtin", builtin, "Builtin curve name instead of a spec file");

  std::string group;
  auto* limitset = app.add_subcommand("limitset", "Sample and classify the limit set of a group");
  limitset->add_option("group", group, "Group JSON file")->required();

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a property battery");
  verify->add_option("suite", suite, "Suite name")->required();

  std::string triple_input;
  std::vector<std::string> triple_points;
  auto* cartan = app.add_subcommand("cartan", "Cartan invariant of three Heisenberg points");
  cartan->add_option("--input", triple_input, "CSV file with three rows");
  cartan->add_option("--point", triple_points, "Inline CSV row zeta_re,zeta_im,v (repeatable)");

  std::string rspec;
  double range = 10.0;
  auto* rcircle = app.add_subcommand("rcircle", "Emit points of an R-circle");
  rcircle->add_option("spec", rspec, "R-circle spec JSON (default: the standard finite circle)");
  rcircle->add_option("--range", range, "Half-length of the parameter window for rcircle-inf")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*convert) return cmd_convert(cfg, from, to, input, points);
    if (*classify) return cmd_classify_curve(cfg, spec, builtin);
    if (*limitset) return cmd_limitset(cfg, group);
    if (*verify) return cmd_verify(cfg, suite);
    if (*cartan) return cmd_cartan(cfg, triple_input, triple_points);
    if (*rcircle) return cmd_rcircle(cfg, rspec, range);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
