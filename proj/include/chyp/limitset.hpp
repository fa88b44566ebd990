#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chyp/curves.hpp"

namespace chyp {

/// Finitely many generators, all unitary for `form`.
struct GroupPresentation {
  Form form = Form::Siegel;
  std::vector<ProjMap> generators;
  std::vector<std::string> labels;

  /// Throws on an empty list or on the first generator failing
  /// is_form_unitary at 1e-9; the message names its index.
  void validate() const;
};

struct SamplerOptions {
  std::size_t max_word_length = 12;
  double dedup_tol = 1e-6;
  /// Orbit points with |<u,u>| above this in the ball model (unit u) are
  /// considered too shallow and dropped.
  double depth_tol = 1e-3;
  /// Enumeration stops once this many words have been visited.
  std::size_t max_words = 4'000'000;
  /// Interior base point in the group's form; default is the Siegel point
  /// (-1, 0, 1), the centre of the ball.
  std::optional<CVec3> base;
};

struct LimitSample {
  Form form = Form::Siegel;
  std::vector<BoundaryPoint> points;
  std::size_t max_word_length = 0;
  double dedup_tol = 0.0;
  double depth_tol = 0.0;
  std::size_t words_visited = 0;
  std::size_t count_before_dedup = 0;
  bool truncated = false;
};

/// Breadth-first over reduced words up to the length cap. Within a length,
/// words are ordered by their tail's position and then by the prepended
/// letter (generators in order, each followed by its inverse).
LimitSample sample_limit_set(const GroupPresentation& g, const SamplerOptions& opts = {});

/// Greedy, order-stable removal of points within `tol` (chordal) of an
/// earlier kept point.
std::vector<BoundaryPoint> dedup_points(const std::vector<BoundaryPoint>& points, double tol);

enum class LimitVerdict { Elementary, Chain, RCircle, Unknown };
const char* to_string(LimitVerdict v);

struct LimitClassification {
  LimitVerdict verdict = LimitVerdict::Unknown;
  std::size_t points = 0;
  std::optional<ChainFit> chain_fit;
  double chain_residual = 0.0;
  /// Largest |cartan| over the sampled triples.
  double max_cartan_abs = 0.0;
  /// Fraction of sampled triples with |cartan| <= tol.
  double cartan_within_tol = 0.0;
  /// 99th percentile of |cartan|; zero on an R-circle, which is Legendrian.
  double legendrian_proxy = 0.0;
  std::size_t triples = 0;
  std::optional<LineFit> line;
  double tol = 0.0;
};

inline constexpr std::size_t kDefaultCartanTriples = 10'000;

LimitClassification classify_limit_sample(const std::vector<BoundaryPoint>& points, double tol = 1e-8,
                                          std::uint64_t seed = 0x5eedULL,
                                          std::size_t triples = kDefaultCartanTriples);

inline LimitClassification classify_limit_sample(const LimitSample& s, double tol = 1e-8,
                                                 std::uint64_t seed = 0x5eedULL,
                                                 std::size_t triples = kDefaultCartanTriples) {
  return classify_limit_sample(s.points, tol, seed, triples);
}

}  // namespace chyp
