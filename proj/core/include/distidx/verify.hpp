#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "distidx/canon.hpp"
#include "distidx/enumerate.hpp"
#include "distidx/indices.hpp"
#include "distidx/rational.hpp"

namespace distidx {

using FieldValue = std::variant<std::int64_t, double, bool, std::string,
                                std::vector<std::string>>;
using Fields = std::vector<std::pair<std::string, FieldValue>>;

// How the optimizer set is compared with the expected set.
enum class MatchMode {
  kExact,     // optimizers == expected
  kSubset,    // optimizers ⊆ expected (a family of admissible extremals)
  kContains,  // expected ⊆ optimizers (extremal, uniqueness not claimed)
  kNone,      // no optimizer claim; pass rests on the inequalities
};

std::string_view to_string(MatchMode mode);

// Per-graph inequalities and identities that every scan re-checks on every
// graph it sees, whichever statement it is verifying.
class BoundAudit {
 public:
  BoundAudit();

  // g must be connected.
  void observe(const Graph& g);
  // Same, reusing values the caller already has.
  void observe(const Graph& g, const DistanceMatrix& d, int matching,
               int alpha);
  void merge(const BoundAudit& other);

  std::int64_t graphs() const { return graphs_; }
  const std::map<std::string, std::int64_t>& violations() const {
    return violations_;
  }
  bool clean() const;
  // graph6 of the first offending graph per violated check.
  const std::map<std::string, std::string>& witnesses() const {
    return witnesses_;
  }

  // Power-mean exponents and tolerance used for the independence bounds.
  static const std::vector<double>& chung_exponents();
  static constexpr double kTolerance = 1e-9;

 private:
  void flag(const std::string& check, const Graph& g);

  std::int64_t graphs_ = 0;
  std::map<std::string, std::int64_t> violations_;
  std::map<std::string, std::string> witnesses_;
};

struct CheckReport {
  std::string statement;
  Fields params;
  std::int64_t size = 0;  // graphs in the scanned (filtered) family
  std::optional<Rational> optimum;
  std::vector<CanonicalForm> optimizers;  // sorted, unique
  std::vector<CanonicalForm> expected;    // sorted, unique
  MatchMode mode = MatchMode::kExact;
  bool unique_claimed = false;
  std::optional<Rational> margin;  // gap to the runner-up, when one exists
  bool pass = false;
  Fields details;
  BoundAudit audit;
};

struct ScanOptions {
  // Worker threads over enumeration partitions; 0 picks the hardware count.
  int threads = 0;
};

// Maximum of W_f over trees with matching number m is attained only by
// a_nm(n, m). kEmptyFamily when no tree of order n has matching number m.
CheckReport check_wf_max_matching(int n, int m, const ConvexWeight& f,
                                  const ScanOptions& opt = {});
// The same statement for every feasible m in one scan.
std::vector<CheckReport> check_wf_max_matching_all(
    int n, const std::vector<ConvexWeight>& weights,
    const ScanOptions& opt = {});

// Maximum of W_f over trees with matching number m is strictly increasing
// in m.
CheckReport check_monotonicity(int n, const ConvexWeight& f,
                               const ScanOptions& opt = {});

// Maximum of W_f over connected graphs with independence number alpha:
// a_nm(n, n-alpha) when 2*alpha >= n, dumbbell(n, alpha) when
// 2 <= alpha < n/2, K_n when alpha = 1. `source` defaults to the built-in
// connected graphs of order n.
CheckReport check_wf_max_independence(int n, int alpha, const ConvexWeight& f,
                                      const GraphSource* source = nullptr,
                                      const ScanOptions& opt = {});
std::vector<CheckReport> check_wf_max_independence_all(
    int n, const std::vector<ConvexWeight>& weights,
    const GraphSource* source = nullptr, const ScanOptions& opt = {});

// Power-mean distance bounds in terms of the independence number, for
// every connected graph of order n, plus the equality characterisation
// (equality in the doubled bound only when j = alpha = 1). The report
// lists every graph attaining equality under "equality_graphs".
CheckReport check_chung(int n, double j, const GraphSource* source = nullptr,
                        const ScanOptions& opt = {});

// Every W_ex maximiser over trees of order n is a balanced double broom;
// the leaf-distance bounds hold for every tree, with equality in the
// leaf-to-spine bound exactly at double brooms.
CheckReport check_wex_max(int n, const ScanOptions& opt = {});

// Bipartite unicyclic graphs of order n: one report per bipartition
// (p, q), 1 < p <= q, with unique maximiser g4(ceil((q-p)/2),
// floor((q-p)/2), 2p-4); then one report per even cycle length 2k <= n
// showing cycle_with_path(k, n) maximises W among unicyclic graphs whose
// cycle has length 2k.
std::vector<CheckReport> check_bipartite_unicyclic(int n,
                                                   const ScanOptions& opt = {});

// W(g4(1,1,2k-6)) = (4k^3 - 19k + 33)/3 > k^3 = W(C_{2k}) for k = 3..k_max.
CheckReport check_g4_closed_form(int k_max);

// W - eccentricity is maximised only by P_n (n >= 9; smaller n are
// reported descriptively). Also re-derives the radius <= 2 bounds used to
// reduce the statement to trees.
CheckReport check_w_minus_ecc_max(int n, const GraphSource& source,
                                  const ScanOptions& opt = {});

// Closed forms for W and eccentricity sums of cycles and paths, and the
// comparison (W - ecc)(C_k) > (W - ecc)(P_k), which holds exactly for
// k in {3, 5} with difference 1.
CheckReport check_cycle_vs_path(int k_max);

// Lower bound ceil(n(n-4)/2) on W - eccentricity over connected graphs and
// the minimiser family (exact for n >= 6, containment for n = 4, 5).
CheckReport check_w_minus_ecc_min(int n, const GraphSource* source = nullptr,
                                  const ScanOptions& opt = {});
// Minimiser over trees: P_n for n <= 6, subdivided_star(n) for n >= 7.
CheckReport check_w_minus_ecc_tree_min(int n, const ScanOptions& opt = {});
// For each diameter d, trees minimising W - eccentricity are P_{d+1} with
// the other vertices pendant at one central vertex (or, for even d, at a
// neighbour of the centre). One report per diameter.
std::vector<CheckReport> check_diameter_fixed_min(int n,
                                                  const ScanOptions& opt = {});

// wSz(G) <= n * floor(n^2/4)^2 with equality only at K_{floor(n/2),
// ceil(n/2)} (and K_3, P_3 at n = 3).
CheckReport check_wsz_conjecture(int n, const GraphSource* source = nullptr,
                                 const ScanOptions& opt = {});

}  // namespace distidx
