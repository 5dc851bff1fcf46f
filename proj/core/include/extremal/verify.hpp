#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extremal/count_value.hpp"
#include "extremal/enumerate.hpp"

namespace extremal {

struct Violation {
  std::string graph6;
  std::string observed;
  std::string bound;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

/// Outcome of one sweep. Violations and witnesses are sorted, so reports are
/// independent of worker count and stream order within a source.
struct VerificationReport {
  std::string theorem;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string source;
  CountValue graphs_scanned;  ///< graphs read from the source
  CountValue graphs_checked;  ///< graphs meeting every hypothesis
  std::vector<Violation> violations;
  std::vector<std::string> witnesses;
  std::vector<std::pair<std::string, CountValue>> tallies;  ///< sorted by key
  std::vector<std::string> skipped_templates;
  std::int64_t elapsed_ms = 0;

  bool verified() const noexcept { return violations.empty(); }
  CountValue tally(std::string_view key) const;
};

/// JSON with keys theorem, params, source, graphs_scanned, graphs_checked,
/// violations, witnesses, tallies, skipped_templates, verdict, elapsed_ms.
/// Counts are decimal strings.
std::string to_json(const VerificationReport& report, bool include_elapsed = true);
VerificationReport report_from_json(std::string_view json);

struct VerifyOptions {
  int workers = 1;
};

/// e(G) <= edge_bound(n, d) for nonhamiltonian G with min degree >= d.
/// Witnesses attain the bound.
VerificationReport verify_edge_bound(int n, int d, const GraphSource& source, VerifyOptions opts = {});

/// N_k(G) <= clique_bound(n, d, k) under the same hypotheses.
VerificationReport verify_clique_bound(int n, int d, int k, const GraphSource& source, VerifyOptions opts = {});

/// Graphs with N_k(G) > max{h_k(n,d+2), h_k(n,floor((n-1)/2))} must be
/// contained in a stability template. Witnesses are the graphs over the
/// threshold; tallies count matches per template.
VerificationReport verify_stability(int n, int d, int k, const GraphSource& source, VerifyOptions opts = {});

/// Graphs with N_k(G) > max{h_k(n,d+1), h_k(n,floor((n-1)/2))} must be
/// contained in H(n,d) or K'(n,d).
VerificationReport verify_prior_stability(int n, int d, int k, const GraphSource& source, VerifyOptions opts = {});

/// Labeled K_{1,t-1} count is at most the larger of H(n,d) and
/// H(n,floor((n-1)/2)); equality only for whichever of those attains it.
VerificationReport verify_star_claim(int n, int d, int t, const GraphSource& source, VerifyOptions opts = {});

/// For saturated G with N_k(G) > h_k(n,floor((n-1)/2)) for some k in 2..4:
/// Ore's inequality holds on nonedges; some r-set D of vertices of degree
/// <= r leaves a clique; when the least such r equals min degree, G is
/// H(n,r) or K'(n,r).
VerificationReport verify_saturation_lemmas(int n, const GraphSource& source, VerifyOptions opts = {});

/// N(K'(n,d), F) <= N(H(n,d), F) for every F on t vertices without isolated
/// vertices (t <= 7). n defaults to 2dt + d + t when 0.
VerificationReport verify_kprime_vs_h(int d, int t, int n = 0);

/// Star counts of H(n,floor((n-1)/2)) and H(n,d) by formula and by direct
/// embedding count.
struct StarComparison {
  CountValue balanced_formula;
  CountValue balanced_embeddings;
  CountValue low_degree_formula;
  CountValue low_degree_embeddings;

  bool paths_agree() const noexcept {
    return balanced_formula == balanced_embeddings && low_degree_formula == low_degree_embeddings;
  }
  bool balanced_wins() const noexcept { return balanced_formula > low_degree_formula; }
};
StarComparison compare_star_counts(int n, int d, int t);

/// Smallest r in [1, floor((n-1)/2)] admitting an r-set of vertices of
/// degree <= r whose complement is a clique; 0 when none.
int complete_complement_posa_order(const Graph& g);

}  // namespace extremal
