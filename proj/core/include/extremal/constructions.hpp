#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "extremal/graph.hpp"

namespace extremal {

// Extremal nonhamiltonian families. Vertex layout is fixed for every family:
// the large clique comes first, its attachment vertices are the lowest clique
// indices, and the special (low-degree) vertices come last.

enum class FamilyKind {
  H,        ///< K_{n-d} plus d vertices joined to the same d clique vertices
  Kprime,   ///< K_{n-d} and K_{d+1} sharing one vertex
  Hprime,   ///< K_{n-d-1} plus d+1 vertices inducing one edge, all joined to d clique vertices
  Gprime2,  ///< K_{n-3} plus b_1..b_3 with N(b_i) = {a_i, x}
  F3,       ///< K_{n-4} plus a 4-vertex perfect matching joined to 2 clique vertices
  GprimeD,  ///< K_{n-d-1} plus d+1 independent v_i with N(v_i) = S + z_i, |S| = d-1
};

struct FamilyMember {
  FamilyKind kind;
  int n;
  int d;

  friend bool operator==(const FamilyMember&, const FamilyMember&) = default;
  friend auto operator<=>(const FamilyMember&, const FamilyMember&) = default;
};

/// Lowercase CLI tag: h, kprime, hprime, gprime2, f3, gprimed.
std::string_view family_tag(FamilyKind kind) noexcept;
std::optional<FamilyKind> parse_family_tag(std::string_view tag) noexcept;
/// e.g. "H(9,2)", "K'(9,3)", "G'(9,2)".
std::string describe(const FamilyMember& m);

/// Parameter floors. Gprime2 and F3 ignore d (fixed at 2 and 3).
bool family_defined(FamilyKind kind, int n, int d) noexcept;
/// Declared minimum degree of a defined member.
int family_min_degree(FamilyKind kind, int n, int d) noexcept;

Graph build_h(int n, int d);
Graph build_kprime(int n, int d);
Graph build_hprime(int n, int d);
Graph build_gprime2(int n);
Graph build_f3(int n);
Graph build_gprime_d(int n, int d);

/// Dispatches on kind; throws ParameterError when the member is undefined.
Graph build_family(FamilyKind kind, int n, int d);
inline Graph build_family(const FamilyMember& m) { return build_family(m.kind, m.n, m.d); }

}  // namespace extremal
