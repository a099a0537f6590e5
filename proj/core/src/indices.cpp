#include "distidx/indices.hpp"

#include <algorithm>
#include <cmath>

#include "distidx/invariants.hpp"

namespace distidx {

ConvexWeight ConvexWeight::identity() { return ConvexWeight(); }

ConvexWeight ConvexWeight::hyper() {
  ConvexWeight w;
  w.kind_ = Kind::kHyper;
  return w;
}

ConvexWeight ConvexWeight::power(int exponent) {
  if (exponent < 1) {
    throw Error(ErrorCode::kInvalidWeight,
                "power weight needs an integer exponent >= 1");
  }
  ConvexWeight w;
  w.kind_ = exponent == 1 ? Kind::kIdentity : Kind::kPower;
  w.exponent_ = exponent;
  return w;
}

ConvexWeight ConvexWeight::table(std::vector<Rational> values) {
  if (values.empty()) throw Error(ErrorCode::kInvalidWeight, "empty table");
  Rational prev = 0;
  Rational prev_step = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const Rational step = values[k] - prev;
    if (step <= 0) {
      throw Error(ErrorCode::kInvalidWeight,
                  "table not strictly increasing at f(" +
                      std::to_string(k + 1) + ")");
    }
    if (k > 0 && step < prev_step) {
      throw Error(ErrorCode::kInvalidWeight,
                  "table not convex at f(" + std::to_string(k + 1) + ")");
    }
    prev = values[k];
    prev_step = step;
  }
  ConvexWeight w;
  w.kind_ = Kind::kTable;
  w.table_ = std::move(values);
  return w;
}

int ConvexWeight::max_distance() const {
  return kind_ == Kind::kTable ? static_cast<int>(table_.size())
                               : std::numeric_limits<int>::max();
}

Rational ConvexWeight::operator()(int distance) const {
  if (distance < 0) throw Error(ErrorCode::kWeightDomainExceeded, "negative");
  switch (kind_) {
    case Kind::kIdentity:
      return distance;
    case Kind::kHyper:
      return Rational(static_cast<std::int64_t>(distance) * (distance + 1) / 2);
    case Kind::kPower: {
      Rational r = 1;
      for (int i = 0; i < exponent_; ++i) r *= distance;
      return r;
    }
    case Kind::kTable:
      if (distance == 0) return 0;
      if (distance > max_distance()) {
        throw Error(ErrorCode::kWeightDomainExceeded,
                    "distance " + std::to_string(distance) +
                        " beyond table of " + std::to_string(max_distance()));
      }
      return table_[distance - 1];
  }
  return 0;
}

std::string ConvexWeight::spec() const {
  switch (kind_) {
    case Kind::kIdentity: return "id";
    case Kind::kHyper: return "hyper";
    case Kind::kPower: return "pow:" + std::to_string(exponent_);
    case Kind::kTable: {
      std::string out = "table:";
      for (std::size_t i = 0; i < table_.size(); ++i) {
        if (i > 0) out += ',';
        out += table_[i].to_string();
      }
      return out;
    }
  }
  return "";
}

ConvexWeight ConvexWeight::parse(std::string_view text) {
  const auto bad = [&](const std::string& why) {
    return Error(ErrorCode::kInvalidWeight,
                 "weight '" + std::string(text) + "': " + why);
  };
  if (text == "id" || text == "identity") return identity();
  if (text == "hyper") return hyper();
  if (text.starts_with("pow:")) {
    const std::string arg(text.substr(4));
    Rational j;
    try {
      j = Rational::parse(arg);
    } catch (const Error&) {
      throw bad("exponent is not a number");
    }
    if (!j.is_integer()) throw bad("only integer exponents are exact");
    if (j.num() < 1 || j.num() > 62) throw bad("exponent out of range");
    return power(static_cast<int>(j.num()));
  }
  if (text.starts_with("table:")) {
    std::vector<Rational> values;
    std::string_view rest = text.substr(6);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string item(rest.substr(0, comma));
      try {
        values.push_back(Rational::parse(item));
      } catch (const Error&) {
        throw bad("table entry '" + item + "' is not a number");
      }
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return table(std::move(values));
  }
  throw bad("expected id, hyper, pow:J or table:f1,f2,...");
}

std::vector<std::int64_t> distance_histogram(const DistanceMatrix& d) {
  const int n = d.order();
  std::vector<std::int64_t> hist(n, 0);
  for (int u = 0; u < n; ++u) {
    const auto row = d.row(u);
    for (int v = u + 1; v < n; ++v) ++hist[row[v]];
  }
  while (hist.size() > 1 && hist.back() == 0) hist.pop_back();
  return hist;
}

std::int64_t wiener(const DistanceMatrix& d) {
  std::int64_t total = 0;
  for (int u = 0; u < d.order(); ++u) {
    const auto row = d.row(u);
    for (int v = u + 1; v < d.order(); ++v) total += row[v];
  }
  return total;
}

Rational generalized_wiener(const DistanceMatrix& d, const ConvexWeight& f) {
  const auto hist = distance_histogram(d);
  Rational total = 0;
  for (std::size_t k = 1; k < hist.size(); ++k) {
    if (hist[k] != 0) total += f(static_cast<int>(k)) * hist[k];
  }
  return total;
}

Rational hyper_wiener(const DistanceMatrix& d) {
  return generalized_wiener(d, ConvexWeight::hyper());
}

Rational mean_distance(const DistanceMatrix& d) {
  const std::int64_t n = d.order();
  if (n < 2) throw Error(ErrorCode::kTooSmall, "mean distance needs n >= 2");
  return Rational(wiener(d), n * (n - 1) / 2);
}

double power_mean(const std::vector<double>& values, double j) {
  if (values.empty()) throw Error(ErrorCode::kTooSmall, "empty power mean");
  if (std::isinf(j)) {
    return j > 0 ? *std::max_element(values.begin(), values.end())
                 : *std::min_element(values.begin(), values.end());
  }
  const double count = static_cast<double>(values.size());
  double acc = 0.0;
  if (j == 0.0) {
    for (double x : values) acc += std::log(x);
    return std::exp(acc / count);
  }
  for (double x : values) acc += std::pow(x, j);
  return std::pow(acc / count, 1.0 / j);
}

double power_mean_distance(const DistanceMatrix& d, double j) {
  if (d.order() < 2) {
    throw Error(ErrorCode::kTooSmall, "power mean needs n >= 2");
  }
  // Distances are small integers, so work from the histogram.
  const auto hist = distance_histogram(d);
  double pairs = 0;
  for (std::size_t k = 1; k < hist.size(); ++k) pairs += hist[k];
  if (std::isinf(j)) {
    if (j > 0) return static_cast<double>(hist.size() - 1);
    for (std::size_t k = 1; k < hist.size(); ++k) {
      if (hist[k] != 0) return static_cast<double>(k);
    }
  }
  double acc = 0.0;
  if (j == 0.0) {
    for (std::size_t k = 1; k < hist.size(); ++k) {
      acc += hist[k] * std::log(static_cast<double>(k));
    }
    return std::exp(acc / pairs);
  }
  for (std::size_t k = 1; k < hist.size(); ++k) {
    acc += hist[k] * std::pow(static_cast<double>(k), j);
  }
  return std::pow(acc / pairs, 1.0 / j);
}

std::int64_t external_wiener(const Graph& g, const DistanceMatrix& d) {
  const VertexSet leaf = leaves(g);
  std::int64_t total = 0;
  for (int u = 0; u < g.order(); ++u) {
    const auto row = d.row(u);
    const bool u_leaf = (leaf >> u) & 1U;
    for (int v = u + 1; v < g.order(); ++v) {
      if (u_leaf || ((leaf >> v) & 1U)) total += row[v];
    }
  }
  return total;
}

std::int64_t terminal_wiener(const Graph& g, const DistanceMatrix& d) {
  const VertexSet leaf = leaves(g);
  std::int64_t total = 0;
  for_each_vertex(leaf, [&](int u) {
    for_each_vertex(leaf & ~first_n(u + 1), [&](int v) { total += d(u, v); });
  });
  return total;
}

std::vector<EdgeSideCounts> edge_side_counts(const Graph& g,
                                             const DistanceMatrix& d) {
  std::vector<EdgeSideCounts> out;
  const int n = g.order();
  for (const Edge& e : g.edges()) {
    EdgeSideCounts s;
    s.edge = e;
    s.deg_u = g.degree(e.u);
    s.deg_v = g.degree(e.v);
    const auto du = d.row(e.u);
    const auto dv = d.row(e.v);
    for (int x = 0; x < n; ++x) {
      s.n_u += du[x] < dv[x];
      s.n_v += dv[x] < du[x];
    }
    out.push_back(s);
  }
  return out;
}

std::int64_t szeged(std::span<const EdgeSideCounts> sides) {
  std::int64_t total = 0;
  for (const auto& s : sides) total += std::int64_t{s.n_u} * s.n_v;
  return total;
}

std::int64_t weighted_szeged(std::span<const EdgeSideCounts> sides) {
  std::int64_t total = 0;
  for (const auto& s : sides) {
    total += std::int64_t{s.degree_sum()} * s.n_u * s.n_v;
  }
  return total;
}

std::int64_t szeged(const Graph& g, const DistanceMatrix& d) {
  return szeged(edge_side_counts(g, d));
}

std::int64_t weighted_szeged(const Graph& g, const DistanceMatrix& d) {
  return weighted_szeged(edge_side_counts(g, d));
}

std::int64_t w_minus_ecc(const DistanceMatrix& d) {
  return wiener(d) - total_eccentricity(d);
}

}  // namespace distidx
