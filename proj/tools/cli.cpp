#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "extremal/classify.hpp"
#include "extremal/constructions.hpp"
#include "extremal/counting.hpp"
#include "extremal/enumerate.hpp"
#include "extremal/errors.hpp"
#include "extremal/formulas.hpp"
#include "extremal/graph6.hpp"
#include "extremal/hamilton.hpp"
#include "extremal/verify.hpp"

namespace extremal::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kWorkersEnv = "EXTREMAL_WORKERS";

int default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(vs[i]);
  }
  return s;
}

/// Graphs from --in FILE when given, otherwise from the input stream.
class GraphInput {
 public:
  GraphInput(const std::string& path, std::istream& fallback) {
    if (path.empty() || path == "-") {
      reader_.emplace(fallback);
    } else {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path);
      reader_.emplace(file_);
    }
  }

  template <typename F>
  void each(F&& fn) {
    while (auto g = reader_->next()) fn(*g);
  }

 private:
  std::ifstream file_;
  std::optional<Graph6Reader> reader_;
};

Graph read_single_graph(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  Graph6Reader reader(file);
  auto g = reader.next();
  if (!g) throw ParseError("no graph in " + path);
  return *g;
}

std::vector<int> parse_degrees(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size() || v < 0) throw ParameterError("bad degree '" + item + "'");
    out.push_back(v);
  }
  return out;
}

struct Runner {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;

  void add(CLI::App* app, std::function<int()> fn) { commands.emplace_back(app, std::move(fn)); }
};

void add_gen(CLI::App& app, Runner& r) {
  struct Opts {
    std::string family;
    int n = 0;
    int d = 0;
    std::string format = "graph6";
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("gen", "Build a family member");
  sub->add_option("--family", o->family, "h|kprime|hprime|gprime2|f3|gprimed")->required();
  sub->add_option("--n", o->n, "Order")->required();
  sub->add_option("--d", o->d, "Degree parameter (implied for gprime2 and f3)");
  sub->add_option("--format", o->format, "graph6|json")->check(CLI::IsMember({"graph6", "json"}));
  r.add(sub, [o, &r] {
    const auto kind = parse_family_tag(o->family);
    if (!kind) throw ParameterError("unknown family '" + o->family + "'");
    int d = o->d;
    if (*kind == FamilyKind::Gprime2) d = 2;
    if (*kind == FamilyKind::F3) d = 3;
    const FamilyMember m{*kind, o->n, d};
    const Graph g = build_family(m);
    if (o->format == "graph6") {
      write_graph6(r.out, g);
      return 0;
    }
    Json j;
    j["family"] = std::string(family_tag(m.kind));
    j["name"] = describe(m);
    j["n"] = m.n;
    j["d"] = m.d;
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    j["graph6"] = to_graph6(g);
    r.out << j.dump() << '\n';
    return 0;
  });
}

void add_eval(CLI::App& app, Runner& r) {
  auto* eval = app.add_subcommand("eval", "Evaluate a formula exactly");
  eval->require_subcommand(1);

  auto ints = std::make_shared<std::map<std::string, std::int64_t>>();
  auto need = [ints](CLI::App* sub, std::initializer_list<const char*> names) {
    for (const char* name : names) sub->add_option(std::string("--") + name, (*ints)[name])->required();
  };
  auto at = [ints](const char* name) { return ints->at(name); };
  auto as_int = [at](const char* name) { return static_cast<int>(at(name)); };

  auto* ff = eval->add_subcommand("ff", "Falling factorial (k)_t");
  need(ff, {"k", "t"});
  r.add(ff, [&r, at, as_int] {
    r.out << falling_factorial(at("k"), as_int("t")) << '\n';
    return 0;
  });

  auto a_text = std::make_shared<std::string>();
  auto* binom = eval->add_subcommand("binom", "Generalised binomial; a may be p/q");
  binom->add_option("--a", *a_text)->required();
  binom->add_option("--b", (*ints)["b"])->required();
  r.add(binom, [&r, a_text, as_int] {
    r.out << gen_binom(Rational::parse(*a_text), as_int("b")).to_string() << '\n';
    return 0;
  });

  auto* h = eval->add_subcommand("h", "Extremal edge count C(n-d,2)+d^2");
  need(h, {"n", "d"});
  r.add(h, [&r, as_int] {
    r.out << extremal_edges(as_int("n"), as_int("d")) << '\n';
    return 0;
  });

  auto* hk = eval->add_subcommand("hk", "Extremal clique count C(n-x,k)+x*C(x,k-1)");
  need(hk, {"n", "x", "k"});
  r.add(hk, [&r, as_int] {
    r.out << extremal_cliques(as_int("n"), as_int("x"), as_int("k")) << '\n';
    return 0;
  });

  auto* e = eval->add_subcommand("e", "Edge bound for nonhamiltonian graphs");
  need(e, {"n", "d"});
  r.add(e, [&r, as_int] {
    r.out << edge_bound(as_int("n"), as_int("d")) << '\n';
    return 0;
  });

  auto* ek = eval->add_subcommand("ek", "k-clique bound for nonhamiltonian graphs");
  need(ek, {"n", "d", "k"});
  r.add(ek, [&r, as_int] {
    r.out << clique_bound(as_int("n"), as_int("d"), as_int("k")) << '\n';
    return 0;
  });

  auto* d0 = eval->add_subcommand("d0", "Degree threshold");
  need(d0, {"n"});
  r.add(d0, [&r, as_int] {
    r.out << degree_threshold(as_int("n")) << '\n';
    return 0;
  });

  auto* n0 = eval->add_subcommand("n0", "Large order threshold 4dt+3d^2+5t");
  need(n0, {"d", "t"});
  r.add(n0, [&r, as_int] {
    r.out << large_order_threshold(as_int("d"), as_int("t")) << '\n';
    return 0;
  });

  auto degrees = std::make_shared<std::string>();
  auto unlabeled = std::make_shared<bool>(false);
  auto* star = eval->add_subcommand("star", "Star count from a degree sequence");
  star->add_option("--degrees", *degrees, "Comma separated degrees")->required();
  star->add_option("--t", (*ints)["t"], "Star order")->required();
  star->add_flag("--unlabeled", *unlabeled, "Sum of binomials instead of falling factorials");
  r.add(star, [&r, degrees, unlabeled, as_int] {
    const auto ds = parse_degrees(*degrees);
    r.out << (*unlabeled ? star_count_unlabeled(ds, as_int("t")) : star_count(ds, as_int("t"))) << '\n';
    return 0;
  });
}

void add_graph_commands(CLI::App& app, Runner& r) {
  auto in_path = std::make_shared<std::string>();
  auto with_input = [in_path](CLI::App* sub) { sub->add_option("--in", *in_path, "graph6 file (default stdin)"); };

  auto* ham = app.add_subcommand("ham", "Hamiltonicity queries");
  ham->require_subcommand(1);
  auto* check = ham->add_subcommand("check", "Print true or false per graph");
  with_input(check);
  r.add(check, [&r, in_path] {
    GraphInput(*in_path, r.in).each([&](const Graph& g) { r.out << (is_hamiltonian(g) ? "true" : "false") << '\n'; });
    return 0;
  });
  auto* cycle = ham->add_subcommand("cycle", "Print a hamiltonian cycle or none");
  with_input(cycle);
  r.add(cycle, [&r, in_path] {
    GraphInput(*in_path, r.in).each([&](const Graph& g) {
      const auto c = find_hamiltonian_cycle(g);
      r.out << (c ? join(*c) : "none") << '\n';
    });
    return 0;
  });
  auto ends = std::make_shared<std::pair<int, int>>(0, 0);
  auto* path = ham->add_subcommand("path", "Print a hamiltonian path between two vertices or none");
  with_input(path);
  path->add_option("--from", ends->first)->required();
  path->add_option("--to", ends->second)->required();
  r.add(path, [&r, in_path, ends] {
    GraphInput(*in_path, r.in).each([&](const Graph& g) {
      const auto p = hamiltonian_path_between(g, ends->first, ends->second);
      r.out << (p ? join(*p) : "none") << '\n';
    });
    return 0;
  });

  auto* sat = app.add_subcommand("saturate", "Add nonedges in lexicographic order while nonhamiltonian");
  with_input(sat);
  r.add(sat, [&r, in_path] {
    GraphInput(*in_path, r.in).each([&](const Graph& g) { write_graph6(r.out, saturate(g)); });
    return 0;
  });

  auto* posa = app.add_subcommand("posa", "Smallest r with r vertices of degree <= r");
  with_input(posa);
  r.add(posa, [&r, in_path] {
    GraphInput(*in_path, r.in).each([&](const Graph& g) {
      const auto c = posa_certificate(g);
      if (!c) {
        r.out << "none\n";
        return;
      }
      Json j;
      j["r"] = c->r;
      j["vertices"] = c->low_degree.to_vector();
      r.out << j.dump() << '\n';
    });
    return 0;
  });

  auto t = std::make_shared<int>(1);
  auto* cover = app.add_subcommand("pathcover", "Cover by at most t paths via a universal t-clique");
  with_input(cover);
  cover->add_option("--t", *t)->required();
  r.add(cover, [&r, in_path, t] {
    GraphInput(*in_path, r.in).each([&](const Graph& g) {
      const auto p = path_partition(g, *t);
      r.out << (p ? Json(p->paths).dump() : "none") << '\n';
    });
    return 0;
  });

  auto pattern = std::make_shared<std::string>();
  auto unlabeled = std::make_shared<bool>(false);
  auto* count = app.add_subcommand("count", "Labeled embeddings of a pattern per graph");
  with_input(count);
  count->add_option("--pattern", *pattern, "graph6 file holding the pattern")->required();
  count->add_flag("--unlabeled", *unlabeled, "Divide by the pattern's automorphism count");
  r.add(count, [&r, in_path, pattern, unlabeled] {
    const Graph f = read_single_graph(*pattern);
    GraphInput(*in_path, r.in).each([&](const Graph& g) {
      r.out << (*unlabeled ? count_unlabeled(g, f) : count_labeled_embeddings(g, f)) << '\n';
    });
    return 0;
  });

  auto k = std::make_shared<int>(3);
  auto* cliques = app.add_subcommand("cliques", "Number of k-cliques per graph");
  with_input(cliques);
  cliques->add_option("--k", *k)->required();
  r.add(cliques, [&r, in_path, k] {
    GraphInput(*in_path, r.in).each([&](const Graph& g) { r.out << count_cliques(g, *k) << '\n'; });
    return 0;
  });

  auto d = std::make_shared<int>(1);
  auto* cls = app.add_subcommand("classify", "Stability templates containing each graph");
  with_input(cls);
  cls->add_option("--d", *d)->required();
  r.add(cls, [&r, in_path, d] {
    GraphInput(*in_path, r.in).each([&](const Graph& g) {
      const auto result = classify(g, *d);
      Json j;
      j["graph6"] = to_graph6(g);
      Json matches = Json::array();
      for (const auto& m : result.matches) {
        matches.push_back({{"family", family_tag(m.member.kind)}, {"d", m.member.d}, {"name", describe(m.member)}});
      }
      j["matches"] = matches;
      Json skipped = Json::array();
      for (const auto& m : result.skipped) skipped.push_back(describe(m));
      j["skipped"] = skipped;
      r.out << j.dump() << '\n';
    });
    return 0;
  });

  auto grow = app.add_subcommand("grow", "Classes on n+1 vertices from every class on n vertices");
  with_input(grow);
  r.add(grow, [&r, in_path] {
    std::vector<Graph> classes;
    GraphInput(*in_path, r.in).each([&](const Graph& g) { classes.push_back(g); });
    for (const Graph& g : extend_classes(classes)) write_graph6(r.out, g);
    return 0;
  });
}

void add_enum(CLI::App& app, Runner& r) {
  auto n = std::make_shared<int>(0);
  auto filters = std::make_shared<StreamFilters>();
  auto* sub = app.add_subcommand("enum", "One graph per isomorphism class (n <= 7)");
  sub->add_option("--n", *n)->required();
  sub->add_option("--min-degree", filters->min_degree);
  sub->add_flag("--nonhamiltonian", filters->require_nonhamiltonian);
  sub->add_flag("--connected", filters->require_connected);
  r.add(sub, [&r, n, filters] {
    auto stream = apply_filters(enumerate_nonisomorphic(*n), *filters);
    while (auto g = stream->next()) write_graph6(r.out, *g);
    return 0;
  });
}

void add_verify(CLI::App& app, Runner& r) {
  struct Opts {
    int n = 0;
    int d = 1;
    int k = 3;
    int t = 3;
    std::string in;
    std::string report;
    int workers = 1;
  };
  auto o = std::make_shared<Opts>();
  o->workers = default_workers();
  auto* verify = app.add_subcommand("verify", "Exhaustive sweeps over every class of a given order");
  verify->require_subcommand(1);

  auto sweep_options = [o](CLI::App* sub, bool with_d, bool with_k, bool with_t) {
    sub->add_option("--n", o->n, "Order")->required();
    if (with_d) sub->add_option("--d", o->d, "Minimum degree")->required();
    if (with_k) sub->add_option("--k", o->k, "Clique order")->capture_default_str();
    if (with_t) sub->add_option("--t", o->t, "Star order")->capture_default_str();
    sub->add_option("--in", o->in, "graph6 file (default: internal enumeration, n <= 7)");
    sub->add_option("--workers", o->workers, std::string("Worker threads (default: ") + kWorkersEnv +
                                                 " or hardware concurrency)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--report", o->report, "Write the JSON report here instead of stdout");
  };

  auto finish = [o, &r](const VerificationReport& rep) {
    const std::string json = to_json(rep);
    if (o->report.empty()) {
      r.out << json;
    } else {
      std::ofstream file(o->report);
      if (!file) throw std::runtime_error("cannot write " + o->report);
      file << json;
    }
    r.err << rep.theorem << ": " << rep.graphs_checked << " of " << rep.graphs_scanned << " graphs checked, "
          << rep.violations.size() << " violations, " << o->workers << " workers, " << rep.elapsed_ms << " ms\n";
    return rep.verified() ? 0 : 1;
  };
  auto source = [o] { return o->in.empty() ? GraphSource::internal(o->n) : GraphSource::file(o->in); };
  auto opts = [o] { return VerifyOptions{o->workers}; };

  auto* edge = verify->add_subcommand("edge-bound", "e(G) <= e(n,d)");
  sweep_options(edge, true, false, false);
  r.add(edge, [=] { return finish(verify_edge_bound(o->n, o->d, source(), opts())); });

  auto* clique = verify->add_subcommand("clique-bound", "N_k(G) <= max{h_k(n,d), h_k(n,floor((n-1)/2))}");
  sweep_options(clique, true, true, false);
  r.add(clique, [=] { return finish(verify_clique_bound(o->n, o->d, o->k, source(), opts())); });

  auto* stab = verify->add_subcommand("stability", "Graphs over the d+2 threshold fit a template");
  sweep_options(stab, true, true, false);
  r.add(stab, [=] { return finish(verify_stability(o->n, o->d, o->k, source(), opts())); });

  auto* prior = verify->add_subcommand("prior-stability", "Graphs over the d+1 threshold fit H or K'");
  sweep_options(prior, true, true, false);
  r.add(prior, [=] { return finish(verify_prior_stability(o->n, o->d, o->k, source(), opts())); });

  auto* star = verify->add_subcommand("star", "Star counts maximised only by H(n,d) or H(n,floor)");
  sweep_options(star, true, false, true);
  r.add(star, [=] { return finish(verify_star_claim(o->n, o->d, o->t, source(), opts())); });

  auto* sat = verify->add_subcommand("saturation", "Structure of dense saturated graphs");
  sweep_options(sat, false, false, false);
  r.add(sat, [=] { return finish(verify_saturation_lemmas(o->n, source(), opts())); });

  auto* kvh = verify->add_subcommand("kprime-vs-h", "N(K'(n,d),F) <= N(H(n,d),F) for patterns on t vertices");
  kvh->add_option("--d", o->d)->required();
  kvh->add_option("--t", o->t)->required();
  kvh->add_option("--n", o->n, "Host order (default 2dt+d+t)");
  kvh->add_option("--report", o->report);
  r.add(kvh, [=] { return finish(verify_kprime_vs_h(o->d, o->t, o->n)); });

  auto* order = verify->add_subcommand("star-order", "Compare star counts of H(n,floor) and H(n,d)");
  order->add_option("--n", o->n)->required();
  order->add_option("--d", o->d)->required();
  order->add_option("--t", o->t)->required();
  r.add(order, [o, &r] {
    const StarComparison c = compare_star_counts(o->n, o->d, o->t);
    Json j;
    j["balanced_formula"] = c.balanced_formula.to_string();
    j["balanced_embeddings"] = c.balanced_embeddings.to_string();
    j["low_degree_formula"] = c.low_degree_formula.to_string();
    j["low_degree_embeddings"] = c.low_degree_embeddings.to_string();
    j["paths_agree"] = c.paths_agree();
    j["balanced_wins"] = c.balanced_wins();
    r.out << j.dump(2) << '\n';
    return c.paths_agree() ? 0 : 1;
  });
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal nonhamiltonian graphs: constructions, exact counts and exhaustive checks", "extremal"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  Runner r{in, out, err, {}};
  add_gen(app, r);
  add_eval(app, r);
  add_graph_commands(app, r);
  add_enum(app, r);
  add_verify(app, r);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    for (auto& [sub, fn] : r.commands) {
      if (sub->parsed()) return fn();
    }
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace extremal::cli
