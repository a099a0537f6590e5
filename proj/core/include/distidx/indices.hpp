#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "distidx/graph.hpp"
#include "distidx/rational.hpp"

namespace distidx {

// Strictly increasing convex weight f on the non-negative integers with
// f(0) = 0. Only integer points are ever evaluated, so convexity is the
// second-difference condition on 0, 1, ..., max_distance().
class ConvexWeight {
 public:
  enum class Kind { kIdentity, kHyper, kPower, kTable };

  static ConvexWeight identity();
  // x -> x(x+1)/2, which turns W_f into the hyper-Wiener index.
  static ConvexWeight hyper();
  // x -> x^j for an integer j >= 1 (kInvalidWeight otherwise).
  static ConvexWeight power(int exponent);
  // values[k-1] = f(k) for k = 1..values.size(). Throws kInvalidWeight when
  // the points are not positive, strictly increasing and convex through 0.
  static ConvexWeight table(std::vector<Rational> values);

  Kind kind() const { return kind_; }
  int exponent() const { return exponent_; }
  // Largest distance the weight is defined on.
  int max_distance() const;
  // kWeightDomainExceeded beyond max_distance().
  Rational operator()(int distance) const;
  // Round-trippable text form: id, hyper, pow:J or table:f1,f2,...
  std::string spec() const;
  // Inverse of spec(): "id", "hyper", "pow:J" (integer J >= 1) or
  // "table:f1,f2,...". kInvalidWeight on anything else.
  static ConvexWeight parse(std::string_view text);

 private:
  Kind kind_ = Kind::kIdentity;
  int exponent_ = 1;
  std::vector<Rational> table_;
};

// histogram[d] = number of unordered pairs at distance d (index 0 unused).
std::vector<std::int64_t> distance_histogram(const DistanceMatrix& d);

std::int64_t wiener(const DistanceMatrix& d);
Rational generalized_wiener(const DistanceMatrix& d, const ConvexWeight& f);
Rational hyper_wiener(const DistanceMatrix& d);

// W / C(n,2); kTooSmall for n < 2.
Rational mean_distance(const DistanceMatrix& d);

inline constexpr double kPlusInfinity = std::numeric_limits<double>::infinity();

// Power mean of the pair distances. j = 0 is the geometric mean and
// j = +/-infinity the max/min. kTooSmall for n < 2.
double power_mean_distance(const DistanceMatrix& d, double j);

// M_j of an explicit list of positive values, same conventions.
double power_mean(const std::vector<double>& values, double j);

// Pairs with at least one leaf / with two leaves.
std::int64_t external_wiener(const Graph& g, const DistanceMatrix& d);
std::int64_t terminal_wiener(const Graph& g, const DistanceMatrix& d);

struct EdgeSideCounts {
  Edge edge;
  int n_u = 0;  // vertices strictly closer to edge.u
  int n_v = 0;  // vertices strictly closer to edge.v
  int deg_u = 0;
  int deg_v = 0;

  int degree_sum() const { return deg_u + deg_v; }
  // Average endpoint degree.
  Rational x() const { return Rational(degree_sum(), 2); }
};

std::vector<EdgeSideCounts> edge_side_counts(const Graph& g,
                                             const DistanceMatrix& d);

std::int64_t szeged(const Graph& g, const DistanceMatrix& d);
std::int64_t weighted_szeged(const Graph& g, const DistanceMatrix& d);
std::int64_t szeged(std::span<const EdgeSideCounts> sides);
std::int64_t weighted_szeged(std::span<const EdgeSideCounts> sides);

// W(G) - sum of eccentricities.
std::int64_t w_minus_ecc(const DistanceMatrix& d);

// Graph overloads compute the distance matrix (kNotConnected if needed).
inline std::int64_t wiener(const Graph& g) { return wiener(DistanceMatrix(g)); }
inline std::int64_t w_minus_ecc(const Graph& g) {
  return w_minus_ecc(DistanceMatrix(g));
}

}  // namespace distidx
