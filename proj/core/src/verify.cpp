#include "extremal/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <thread>

#include "extremal/classify.hpp"
#include "extremal/constructions.hpp"
#include "extremal/counting.hpp"
#include "extremal/errors.hpp"
#include "extremal/formulas.hpp"
#include "extremal/graph6.hpp"
#include "extremal/hamilton.hpp"

namespace extremal {

namespace {

using Clock = std::chrono::steady_clock;

struct Partial {
  CountValue scanned;
  CountValue checked;
  std::vector<Violation> violations;
  std::vector<std::string> witnesses;
  std::map<std::string, CountValue> tallies;

  void bump(const std::string& key) { tallies[key] += CountValue(1); }

  void merge(Partial&& other) {
    scanned += other.scanned;
    checked += other.checked;
    std::move(other.violations.begin(), other.violations.end(), std::back_inserter(violations));
    std::move(other.witnesses.begin(), other.witnesses.end(), std::back_inserter(witnesses));
    for (auto& [key, value] : other.tallies) tallies[key] += value;
  }
};

using Visitor = std::function<void(const Graph&, Partial&)>;

/// Worker w of W opens its own stream and handles graphs w, w+W, w+2W, ...
Partial run_sharded(const GraphSource& source, int workers, const Visitor& visit) {
  workers = std::max(1, workers);
  std::vector<Partial> parts(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  auto body = [&](int w) {
    try {
      auto stream = source.open();
      std::size_t index = 0;
      Partial& mine = parts[static_cast<std::size_t>(w)];
      while (auto g = stream->next()) {
        if (index++ % static_cast<std::size_t>(workers) != static_cast<std::size_t>(w)) continue;
        mine.scanned += CountValue(1);
        visit(*g, mine);
      }
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Partial total;
  for (auto& p : parts) total.merge(std::move(p));
  return total;
}

VerificationReport finish(std::string theorem, std::vector<std::pair<std::string, std::int64_t>> params,
                          const GraphSource& source, Partial&& p, Clock::time_point started) {
  VerificationReport r;
  r.theorem = std::move(theorem);
  r.params = std::move(params);
  r.source = source.description();
  r.graphs_scanned = p.scanned;
  r.graphs_checked = p.checked;
  r.violations = std::move(p.violations);
  r.witnesses = std::move(p.witnesses);
  std::sort(r.violations.begin(), r.violations.end());
  std::sort(r.witnesses.begin(), r.witnesses.end());
  r.tallies.assign(p.tallies.begin(), p.tallies.end());
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started).count();
  return r;
}

void check_degree_param(int n, int d) {
  if (n < 3) throw ParameterError("verification needs n >= 3");
  if (d < 1 || d > max_degree_bound(n)) {
    throw ParameterError("need 1 <= d <= floor((n-1)/2), got n=" + std::to_string(n) + " d=" + std::to_string(d));
  }
}

/// Degree first, hamiltonicity last.
bool meets_base_hypotheses(const Graph& g, int n, int d) {
  return g.order() == n && g.min_degree() >= d && !is_hamiltonian(g);
}

void note_order_mismatch(const Graph& g, int n, Partial& p) {
  if (g.order() != n) p.bump("skipped_order_mismatch");
}

}  // namespace

CountValue VerificationReport::tally(std::string_view key) const {
  for (const auto& [k, v] : tallies) {
    if (k == key) return v;
  }
  return 0;
}

VerificationReport verify_edge_bound(int n, int d, const GraphSource& source, VerifyOptions opts) {
  check_degree_param(n, d);
  const auto started = Clock::now();
  const CountValue bound = edge_bound(n, d);
  Partial p = run_sharded(source, opts.workers, [&](const Graph& g, Partial& out) {
    note_order_mismatch(g, n, out);
    if (!meets_base_hypotheses(g, n, d)) return;
    out.checked += CountValue(1);
    const CountValue edges = g.edge_count();
    if (edges > bound) out.violations.push_back({to_graph6(g), edges.to_string(), bound.to_string()});
    if (edges == bound) out.witnesses.push_back(to_graph6(g));
  });
  return finish("edge-bound", {{"n", n}, {"d", d}}, source, std::move(p), started);
}

VerificationReport verify_clique_bound(int n, int d, int k, const GraphSource& source, VerifyOptions opts) {
  check_degree_param(n, d);
  if (k < 2) throw ParameterError("clique bound needs k >= 2");
  const auto started = Clock::now();
  const CountValue bound = clique_bound(n, d, k);
  Partial p = run_sharded(source, opts.workers, [&](const Graph& g, Partial& out) {
    note_order_mismatch(g, n, out);
    if (!meets_base_hypotheses(g, n, d)) return;
    out.checked += CountValue(1);
    const CountValue cliques = count_cliques(g, k);
    if (cliques > bound) out.violations.push_back({to_graph6(g), cliques.to_string(), bound.to_string()});
    if (cliques == bound) out.witnesses.push_back(to_graph6(g));
  });
  return finish("clique-bound", {{"n", n}, {"d", d}, {"k", k}}, source, std::move(p), started);
}

namespace {

/// Shared body of the two stability sweeps: graphs strictly above the
/// threshold must fit one of the templates.
VerificationReport stability_sweep(std::string theorem, int n, int d, int k, int shift,
                                   const std::vector<FamilyMember>& templates, const GraphSource& source,
                                   VerifyOptions opts) {
  check_degree_param(n, d);
  if (k < 2) throw ParameterError("stability sweep needs k >= 2");
  const auto started = Clock::now();
  const CountValue threshold = max(extremal_cliques(n, d + shift, k), extremal_cliques(n, max_degree_bound(n), k));

  std::vector<FamilyMember> usable;
  std::vector<std::string> skipped;
  for (const auto& m : templates) {
    if (family_defined(m.kind, m.n, m.d)) {
      usable.push_back(m);
    } else {
      skipped.push_back(describe(m));
    }
  }
  Partial p = run_sharded(source, opts.workers, [&](const Graph& g, Partial& out) {
    note_order_mismatch(g, n, out);
    if (g.order() != n || g.min_degree() < d) return;
    // Threshold before hamiltonicity: it is the cheaper of the two.
    const CountValue cliques = count_cliques(g, k);
    if (!(cliques > threshold)) return;
    if (is_hamiltonian(g)) return;
    out.checked += CountValue(1);
    bool matched = false;
    for (const FamilyMember& m : usable) {
      const bool fits = contained_in(g, m).has_value();
      if (fits) {
        matched = true;
        out.bump("matched " + describe(m));
      }
    }
    if (matched) {
      out.witnesses.push_back(to_graph6(g));
    } else {
      out.violations.push_back({to_graph6(g), cliques.to_string(), "> " + threshold.to_string() + " with no template"});
    }
  });
  VerificationReport r =
      finish(std::move(theorem), {{"n", n}, {"d", d}, {"k", k}}, source, std::move(p), started);
  r.skipped_templates = std::move(skipped);
  return r;
}

}  // namespace

VerificationReport verify_stability(int n, int d, int k, const GraphSource& source, VerifyOptions opts) {
  check_degree_param(n, d);
  return stability_sweep("stability", n, d, k, 2, stability_templates(n, d), source, opts);
}

VerificationReport verify_prior_stability(int n, int d, int k, const GraphSource& source, VerifyOptions opts) {
  check_degree_param(n, d);
  const std::vector<FamilyMember> templates = {{FamilyKind::H, n, d}, {FamilyKind::Kprime, n, d}};
  return stability_sweep("prior-stability", n, d, k, 1, templates, source, opts);
}

VerificationReport verify_star_claim(int n, int d, int t, const GraphSource& source, VerifyOptions opts) {
  check_degree_param(n, d);
  if (t < 3 || t > n) throw ParameterError("star claim needs 3 <= t <= n");
  const auto started = Clock::now();
  const int top = max_degree_bound(n);
  const Graph low = build_h(n, d);
  const Graph balanced = build_h(n, top);
  const CountValue low_count = star_count(low.degree_sequence(), t);
  const CountValue balanced_count = star_count(balanced.degree_sequence(), t);
  const CountValue bound = max(low_count, balanced_count);
  std::vector<Graph> extremal;
  if (low_count == bound) extremal.push_back(low);
  if (balanced_count == bound && top != d) extremal.push_back(balanced);

  Partial p = run_sharded(source, opts.workers, [&](const Graph& g, Partial& out) {
    note_order_mismatch(g, n, out);
    if (!meets_base_hypotheses(g, n, d)) return;
    out.checked += CountValue(1);
    const CountValue stars = star_count(g.degree_sequence(), t);
    if (stars > bound) {
      out.violations.push_back({to_graph6(g), stars.to_string(), bound.to_string()});
    } else if (stars == bound) {
      out.witnesses.push_back(to_graph6(g));
      const bool allowed =
          std::any_of(extremal.begin(), extremal.end(), [&](const Graph& e) { return are_isomorphic(g, e); });
      if (!allowed) out.violations.push_back({to_graph6(g), stars.to_string(), "equality outside extremal set"});
    }
  });
  return finish("star", {{"n", n}, {"d", d}, {"t", t}}, source, std::move(p), started);
}

int complete_complement_posa_order(const Graph& g) {
  const int n = g.order();
  const Row all = low_bits(n);
  for (int r = 1; r <= max_degree_bound(n); ++r) {
    std::vector<Vertex> low;
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) <= r) low.push_back(v);
    }
    const int m = static_cast<int>(low.size());
    if (m < r) continue;
    std::vector<int> pick(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      Row set = 0;
      for (int i : pick) set |= bit(low[static_cast<std::size_t>(i)]);
      if (g.is_clique(VertexSet(all & ~set))) return r;
      int i = r - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - r + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return 0;
}

VerificationReport verify_saturation_lemmas(int n, const GraphSource& source, VerifyOptions opts) {
  if (n < 3) throw ParameterError("saturation lemmas need n >= 3");
  const auto started = Clock::now();
  const int top = max_degree_bound(n);
  std::vector<CountValue> thresholds;
  for (int k = 2; k <= 4; ++k) thresholds.push_back(extremal_cliques(n, top, k));

  Partial p = run_sharded(source, opts.workers, [&](const Graph& g, Partial& out) {
    note_order_mismatch(g, n, out);
    if (g.order() != n) return;
    bool dense = false;
    for (int k = 2; k <= 4 && !dense; ++k) dense = count_cliques(g, k) > thresholds[static_cast<std::size_t>(k - 2)];
    if (!dense) return;
    if (!is_saturated(g)) return;
    out.checked += CountValue(1);
    const std::string code = to_graph6(g);
    out.witnesses.push_back(code);

    const auto ore = ore_check(g);
    if (!ore.empty()) {
      out.violations.push_back({code, std::to_string(ore.size()) + " nonedges with d(u)+d(v) >= n", "ore"});
    }
    const int r = complete_complement_posa_order(g);
    if (r == 0) {
      out.violations.push_back({code, "none", "low-degree set with complete complement"});
      return;
    }
    out.bump("r=" + std::to_string(r));
    const int delta = g.min_degree();
    if (r != delta) return;
    out.bump("r equals min degree");
    if (are_isomorphic(g, build_h(n, delta))) {
      out.bump("is " + describe({FamilyKind::H, n, delta}));
    } else if (are_isomorphic(g, build_kprime(n, delta))) {
      out.bump("is " + describe({FamilyKind::Kprime, n, delta}));
    } else {
      out.violations.push_back({code, "r=" + std::to_string(r), "isomorphic to H or K' at min degree"});
    }
  });
  return finish("saturation", {{"n", n}}, source, std::move(p), started);
}

VerificationReport verify_kprime_vs_h(int d, int t, int n) {
  if (d < 1 || t < 2 || t > kMaxInternalOrder) throw ParameterError("kprime-vs-h needs d >= 1 and 2 <= t <= 7");
  if (n == 0) n = 2 * d * t + d + t;
  const auto started = Clock::now();
  const Graph h = build_h(n, d);
  const Graph kp = build_kprime(n, d);
  const GraphSource patterns = GraphSource::internal(t);
  Partial p = run_sharded(patterns, 1, [&](const Graph& f, Partial& out) {
    if (f.min_degree() < 1) return;
    out.checked += CountValue(1);
    const CountValue in_kp = count_labeled_embeddings(kp, f);
    const CountValue in_h = count_labeled_embeddings(h, f);
    if (in_kp > in_h) out.violations.push_back({to_graph6(f), in_kp.to_string(), in_h.to_string()});
    if (in_kp == in_h) out.bump("equal");
  });
  return finish("kprime-vs-h", {{"n", n}, {"d", d}, {"t", t}}, patterns, std::move(p), started);
}

StarComparison compare_star_counts(int n, int d, int t) {
  if (t < 2 || t > n) throw ParameterError("star comparison needs 2 <= t <= n");
  const Graph balanced = build_h(n, max_degree_bound(n));
  const Graph low = build_h(n, d);
  const Graph star = star_graph(t - 1);
  return StarComparison{star_count(balanced.degree_sequence(), t), count_labeled_embeddings(balanced, star),
                        star_count(low.degree_sequence(), t), count_labeled_embeddings(low, star)};
}

}  // namespace extremal
