#include "chyp/limitset.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <unordered_map>

namespace chyp {

namespace {

constexpr double kGeneratorTol = 1e-9;

struct Node {
  CVec3 u;
  int first;
};

// Hash grid over ball coordinates in R^4.
class PointGrid {
 public:
  explicit PointGrid(double cell) : cell_(cell) {}

  bool near(const Eigen::Vector2cd& w, double tol) const {
    const Key k = key(w);
    for (int n = 0; n < 81; ++n) {
      Key probe = k;
      int r = n;
      for (int d = 0; d < 4; ++d) {
        probe[d] += r % 3 - 1;
        r /= 3;
      }
      const auto it = cells_.find(probe);
      if (it == cells_.end()) continue;
      for (const auto& other : it->second) {
        if ((other - w).norm() < tol) return true;
      }
    }
    return false;
  }

  void insert(const Eigen::Vector2cd& w) { cells_[key(w)].push_back(w); }

 private:
  using Key = std::array<std::int64_t, 4>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = 1469598103934665603ULL;
      for (auto x : k) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
      return h;
    }
  };

  Key key(const Eigen::Vector2cd& w) const {
    return {static_cast<std::int64_t>(std::floor(w(0).real() / cell_)),
            static_cast<std::int64_t>(std::floor(w(0).imag() / cell_)),
            static_cast<std::int64_t>(std::floor(w(1).real() / cell_)),
            static_cast<std::int64_t>(std::floor(w(1).imag() / cell_))};
  }

  double cell_;
  std::unordered_map<Key, std::vector<Eigen::Vector2cd>, KeyHash> cells_;
};

}  // namespace

void GroupPresentation::validate() const {
  if (generators.empty()) throw GeometryError("no generators");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!is_form_unitary(form, generators[i].matrix(), kGeneratorTol)) {
      throw GeometryError("generator " + std::to_string(i) + " is not form-unitary");
    }
  }
}

std::vector<BoundaryPoint> dedup_points(const std::vector<BoundaryPoint>& points, double tol) {
  std::vector<BoundaryPoint> kept;
  if (!(tol > 0.0)) return points;
  PointGrid grid(tol);
  for (const auto& p : points) {
    const Eigen::Vector2cd w = ball_coordinates(p);
    if (grid.near(w, tol)) continue;
    grid.insert(w);
    kept.push_back(p);
  }
  return kept;
}

LimitSample sample_limit_set(const GroupPresentation& g, const SamplerOptions& opts) {
  g.validate();
  const CVec3 base =
      opts.base ? *opts.base : change_form(Form::Siegel, g.form, CVec3(-1.0, 0.0, 1.0));
  if (sign_class(g.form, base) != SignClass::Negative) {
    throw GeometryError("sample_limit_set: base point is not negative");
  }

  std::vector<CMat3> letters;
  for (const auto& m : g.generators) {
    letters.push_back(m.matrix());
    letters.push_back(m.inverse().matrix());
  }
  const int nletters = static_cast<int>(letters.size());

  LimitSample out;
  out.form = g.form;
  out.max_word_length = opts.max_word_length;
  out.dedup_tol = opts.dedup_tol;
  out.depth_tol = opts.depth_tol;

  std::vector<BoundaryPoint> candidates;
  std::vector<Node> frontier{{base.normalized(), -1}};
  for (std::size_t len = 1; len <= opts.max_word_length && !out.truncated; ++len) {
    std::vector<Node> next;
    next.reserve(frontier.size() * static_cast<std::size_t>(std::max(1, nletters - 1)));
    for (const Node& node : frontier) {
      for (int s = 0; s < nletters; ++s) {
        if (node.first >= 0 && s == (node.first ^ 1)) continue;
        if (out.words_visited >= opts.max_words) {
          out.truncated = true;
          break;
        }
        ++out.words_visited;
        const CVec3 u = (letters[s] * node.u).normalized();
        next.push_back({u, s});
        const CVec3 ball = change_form(g.form, Form::Ball, u);
        if (std::abs(herm_square(Form::Ball, ball)) / ball.squaredNorm() <= opts.depth_tol) {
          candidates.push_back(BoundaryPoint::project(u, g.form));
        }
      }
      if (out.truncated) break;
    }
    frontier = std::move(next);
  }
  out.count_before_dedup = candidates.size();
  out.points = dedup_points(candidates, opts.dedup_tol);
  return out;
}

const char* to_string(LimitVerdict v) {
  switch (v) {
    case LimitVerdict::Elementary: return "ELEMENTARY";
    case LimitVerdict::Chain: return "CHAIN";
    case LimitVerdict::RCircle: return "RCIRCLE";
    case LimitVerdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

LimitClassification classify_limit_sample(const std::vector<BoundaryPoint>& points, double tol,
                                          std::uint64_t seed, std::size_t triples) {
  LimitClassification out;
  out.points = points.size();
  out.tol = tol;
  if (points.size() <= 2) {
    out.verdict = LimitVerdict::Elementary;
    return out;
  }

  out.chain_fit = fit_chain(points);
  out.chain_residual = out.chain_fit->residual;
  if (out.chain_residual <= tol) {
    out.verdict = LimitVerdict::Chain;
    return out;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
  std::vector<double> values;
  values.reserve(triples);
  std::size_t within = 0;
  for (std::size_t n = 0; n < triples; ++n) {
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    std::size_t k = pick(rng);
    while (k == i || k == j) k = pick(rng);
    const double c = std::abs(cartan_invariant(points[i], points[j], points[k]));
    values.push_back(c);
    out.max_cartan_abs = std::max(out.max_cartan_abs, c);
    if (c <= tol) ++within;
  }
  out.triples = triples;
  out.cartan_within_tol = triples ? static_cast<double>(within) / static_cast<double>(triples) : 0.0;
  if (!values.empty()) {
    const std::size_t at = std::min(values.size() - 1, (values.size() * 99) / 100);
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(at), values.end());
    out.legendrian_proxy = values[at];
  }

  // Anchor on a far-apart pair so the chart normalization is well conditioned.
  std::size_t a = 0;
  double best = -1.0;
  for (std::size_t k = 1; k < points.size(); ++k) {
    const double d = chordal_dist(points[0], points[k]);
    if (d > best) {
      best = d;
      a = k;
    }
  }
  std::vector<BoundaryPoint> ordered;
  ordered.reserve(points.size());
  ordered.push_back(points[a]);
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k != a) ordered.push_back(points[k]);
  }
  LineFit line = fit_horizontal_line(ordered);
  // Indices refer to `points`, not to the reordered copy.
  const std::size_t m = line.anchor_infinity;
  line.anchor_origin = a;
  line.anchor_infinity = m - 1 < a ? m - 1 : m;
  out.line = line;

  if (out.cartan_within_tol >= 0.99 && line.collinearity_residual <= tol && line.v_residual <= tol) {
    out.verdict = LimitVerdict::RCircle;
  } else {
    out.verdict = LimitVerdict::Unknown;
  }
  return out;
}

}  // namespace chyp
