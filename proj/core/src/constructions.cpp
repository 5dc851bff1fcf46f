#include "extremal/constructions.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "extremal/errors.hpp"
#include "extremal/formulas.hpp"

namespace extremal {

namespace {

void add_clique(std::vector<Edge>& es, int first, int last) {
  for (int u = first; u < last; ++u) {
    for (int v = u + 1; v < last; ++v) es.push_back({u, v});
  }
}

void require(bool ok, FamilyKind kind, int n, int d) {
  if (!ok) {
    throw ParameterError("family " + std::string(family_tag(kind)) + " undefined for n=" + std::to_string(n) +
                         " d=" + std::to_string(d));
  }
}

}  // namespace

std::string_view family_tag(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::H: return "h";
    case FamilyKind::Kprime: return "kprime";
    case FamilyKind::Hprime: return "hprime";
    case FamilyKind::Gprime2: return "gprime2";
    case FamilyKind::F3: return "f3";
    case FamilyKind::GprimeD: return "gprimed";
  }
  return "?";
}

std::optional<FamilyKind> parse_family_tag(std::string_view tag) noexcept {
  for (FamilyKind k : {FamilyKind::H, FamilyKind::Kprime, FamilyKind::Hprime, FamilyKind::Gprime2, FamilyKind::F3,
                       FamilyKind::GprimeD}) {
    if (family_tag(k) == tag) return k;
  }
  return std::nullopt;
}

std::string describe(const FamilyMember& m) {
  const std::string args = "(" + std::to_string(m.n) + "," + std::to_string(m.d) + ")";
  switch (m.kind) {
    case FamilyKind::H: return "H" + args;
    case FamilyKind::Kprime: return "K'" + args;
    case FamilyKind::Hprime: return "H'" + args;
    case FamilyKind::Gprime2: return "G'(" + std::to_string(m.n) + ",2)";
    case FamilyKind::F3: return "F(" + std::to_string(m.n) + ",3)";
    case FamilyKind::GprimeD: return "G'd" + args;
  }
  return "?";
}

bool family_defined(FamilyKind kind, int n, int d) noexcept {
  if (n < 1 || n > kMaxOrder) return false;
  switch (kind) {
    case FamilyKind::H:
    case FamilyKind::Kprime: return d >= 1 && d <= max_degree_bound(n);
    case FamilyKind::Hprime: return d >= 1 && d <= max_degree_bound(n) && n >= 2 * d + 2;
    case FamilyKind::Gprime2: return n >= 7;
    case FamilyKind::F3: return n >= 8;
    // S (d-1 vertices) and the d+1 distinct z_i all live in the clique of order n-d-1.
    case FamilyKind::GprimeD: return d >= 1 && n >= 3 * d + 1;
  }
  return false;
}

int family_min_degree(FamilyKind kind, int n, int d) noexcept {
  switch (kind) {
    case FamilyKind::Gprime2: return 2;
    case FamilyKind::F3: return 3;
    // Both B vertices of H'(n,1) lie on the B edge; at n = 4 the clique
    // vertex outside the join has degree 1.
    case FamilyKind::Hprime: return d == 1 ? std::min(2, n - 3) : d;
    default: return d;
  }
}

Graph build_h(int n, int d) {
  require(family_defined(FamilyKind::H, n, d), FamilyKind::H, n, d);
  std::vector<Edge> es;
  add_clique(es, 0, n - d);
  for (int v = n - d; v < n; ++v) {
    for (int a = 0; a < d; ++a) es.push_back({a, v});
  }
  return Graph::from_edges(n, es);
}

Graph build_kprime(int n, int d) {
  require(family_defined(FamilyKind::Kprime, n, d), FamilyKind::Kprime, n, d);
  std::vector<Edge> es;
  add_clique(es, 0, n - d);
  // Second clique: shared vertex 0 plus the last d vertices.
  add_clique(es, n - d, n);
  for (int v = n - d; v < n; ++v) es.push_back({0, v});
  return Graph::from_edges(n, es);
}

Graph build_hprime(int n, int d) {
  require(family_defined(FamilyKind::Hprime, n, d), FamilyKind::Hprime, n, d);
  std::vector<Edge> es;
  const int a_size = n - d - 1;
  add_clique(es, 0, a_size);
  for (int b = a_size; b < n; ++b) {
    for (int a = 0; a < d; ++a) es.push_back({a, b});
  }
  es.push_back({n - 2, n - 1});
  return Graph::from_edges(n, es);
}

Graph build_gprime2(int n) {
  require(family_defined(FamilyKind::Gprime2, n, 2), FamilyKind::Gprime2, n, 2);
  std::vector<Edge> es;
  add_clique(es, 0, n - 3);
  // a_i = i-1 for i = 1..3, x = 3.
  constexpr int x = 3;
  for (int i = 0; i < 3; ++i) {
    const int b = n - 3 + i;
    es.push_back({i, b});
    es.push_back({x, b});
  }
  return Graph::from_edges(n, es);
}

Graph build_f3(int n) {
  require(family_defined(FamilyKind::F3, n, 3), FamilyKind::F3, n, 3);
  std::vector<Edge> es;
  add_clique(es, 0, n - 4);
  es.push_back({n - 4, n - 3});
  es.push_back({n - 2, n - 1});
  for (int b = n - 4; b < n; ++b) {
    es.push_back({0, b});
    es.push_back({1, b});
  }
  return Graph::from_edges(n, es);
}

Graph build_gprime_d(int n, int d) {
  require(family_defined(FamilyKind::GprimeD, n, d), FamilyKind::GprimeD, n, d);
  std::vector<Edge> es;
  add_clique(es, 0, n - d - 1);
  // S = {0..d-2}; z_i = d-1+i for i = 0..d.
  for (int i = 0; i <= d; ++i) {
    const int v = n - d - 1 + i;
    for (int s = 0; s < d - 1; ++s) es.push_back({s, v});
    es.push_back({d - 1 + i, v});
  }
  return Graph::from_edges(n, es);
}

Graph build_family(FamilyKind kind, int n, int d) {
  switch (kind) {
    case FamilyKind::H: return build_h(n, d);
    case FamilyKind::Kprime: return build_kprime(n, d);
    case FamilyKind::Hprime: return build_hprime(n, d);
    case FamilyKind::Gprime2: return build_gprime2(n);
    case FamilyKind::F3: return build_f3(n);
    case FamilyKind::GprimeD: return build_gprime_d(n, d);
  }
  throw ParameterError("unknown family");
}

}  // namespace extremal
