#include "cli.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hgraph/forms.hpp"
#include "hgraph/hyperelliptic.hpp"
#include "hgraph/io.hpp"
#include "hgraph/parity.hpp"

namespace hgraph::cli {

using nlohmann::json;

namespace {

template <class T>
std::string list(const std::vector<T>& xs) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? ", " : "") << xs[i];
  s << ']';
  return s.str();
}

const char* boolean(bool b) { return b ? "true" : "false"; }

struct Options {
  std::string graph, target, morphism, divisor;
  Vertex base = 0;
  int k = 1;
  int samples = 200;
  int max_edges = 7;
  int jobs = 1;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  bool all_factors = false;
  bool by_definition = false;
};

struct Context {
  const Options& opt;
  std::ostream& out;
  std::ostream& err;

  Multigraph graph() const { return graph_from_json(read_json_file(opt.graph)); }
  Multigraph target() const { return graph_from_json(read_json_file(opt.target)); }
  GraphMorphism morphism() const { return morphism_from_json(read_json_file(opt.morphism), graph(), target()); }
  Divisor divisor_on(const Multigraph& g) const {
    if (opt.divisor.empty()) throw ParseError("--divisor is required");
    return divisor_from_json(read_json_file(opt.divisor), g);
  }
  std::size_t class_bound() const { return opt.budget ? opt.budget : kDefaultClassBound; }
  std::size_t aut_bound() const { return opt.budget ? opt.budget : kDefaultAutomorphismLimit; }
};

int cmd_info(const Context& c) {
  auto g = c.graph();
  int conn = edge_connectivity(g);
  c.out << "vertices=" << g.vertex_count() << "\n"
        << "edges=" << g.edge_count() << "\n"
        << "genus=" << genus(g) << "\n"
        << "edge_connectivity=" << (conn == kUnboundedConnectivity ? std::string("inf") : std::to_string(conn))
        << "\n"
        << "bridges=" << list(bridges(g)) << "\n"
        << "kappa=" << spanning_tree_count(g) << "\n";
  return kOk;
}

int cmd_rank(const Context& c) {
  auto g = c.graph();
  auto d = c.divisor_on(g);
  c.out << "rank=" << (c.opt.by_definition ? rank_by_definition(g, d) : rank(g, d)) << "\n";
  return kOk;
}

int cmd_reduce(const Context& c) {
  auto g = c.graph();
  if (c.opt.base < 0 || c.opt.base >= g.vertex_count()) throw ParseError("--base out of range");
  auto r = reduce(g, c.divisor_on(g), c.opt.base);
  c.out << "base=" << r.base << "\n" << "reduced=" << list(r.divisor.coeffs) << "\n";
  return kOk;
}

int cmd_rr_check(const Context& c) {
  auto g = c.graph();
  if (!c.opt.divisor.empty()) {
    Chip res = riemann_roch_residual(g, c.divisor_on(g));
    c.out << "residual=" << res << "\n";
    return res == 0 ? kOk : kFalse;
  }
  std::mt19937_64 rng(c.opt.seed);
  std::uniform_int_distribution<Chip> degree(-3, 2 * genus(g) + 1);
  int failures = 0;
  for (int i = 0; i < c.opt.samples; ++i) {
    auto d = sample_divisor(g.vertex_count(), degree(rng), rng);
    if (riemann_roch_residual(g, d) != 0) {
      ++failures;
      c.out << "failure " << list(d.coeffs) << "\n";
    }
  }
  c.out << "checked=" << c.opt.samples << " failures=" << failures << "\n";
  return failures == 0 ? kOk : kFalse;
}

int cmd_jacobian(const Context& c) {
  auto js = jacobian_structure(c.graph());
  c.out << "kappa=" << js.order << " factors="
        << list(c.opt.all_factors ? js.invariant_factors : js.nontrivial_factors()) << "\n";
  return kOk;
}

int cmd_abel_jacobi(const Context& c) {
  auto g = c.graph();
  if (c.opt.base < 0 || c.opt.base >= g.vertex_count()) throw ParseError("--base out of range");
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    c.out << "S(" << x << ")=" << list(abel_jacobi(g, c.opt.base, x).representative.coeffs) << "\n";
  bool inj = sk_injectivity(g, c.opt.k);
  c.out << "injective_k" << c.opt.k << "=" << boolean(inj) << "\n";
  return kOk;
}

int cmd_eulerian_cut(const Context& c) {
  auto cut = eulerian_cut(c.graph());
  if (!cut) {
    c.out << "none\n";
    return kFalse;
  }
  std::vector<Vertex> side;
  for (Vertex v = 0; v < static_cast<Vertex>(cut->side_a.size()); ++v)
    if (cut->side_a[v]) side.push_back(v);
  c.out << json{{"side_a", side}, {"edges", cut->edges}}.dump() << "\n";
  return kOk;
}

int cmd_to_b2(const Context& c) {
  auto phi = morphism_to_B2(c.graph());
  if (!phi) {
    c.out << "none\n";
    return kFalse;
  }
  c.out << morphism_to_json(*phi).dump() << "\n";
  return kOk;
}

int cmd_morphism_check(const Context& c) {
  auto phi = c.morphism();
  if (auto why = morphism_violation(phi)) {
    c.out << "not a morphism: " << *why << "\n";
    return kFalse;
  }
  auto cert = is_harmonic(phi);
  if (!cert) {
    c.out << "not harmonic\n";
    return kFalse;
  }
  c.out << "harmonic degree=" << cert->degree << "\n"
        << "horizontal=" << list(cert->horizontal) << "\n"
        << "vertical=" << list(cert->vertical) << "\n"
        << "nondegenerate=" << boolean(is_nondegenerate(*cert)) << "\n";
  return kOk;
}

int cmd_rh_check(const Context& c) {
  auto phi = c.morphism();
  certificate(phi);
  auto rh = riemann_hurwitz(phi);
  c.out << "ramification=" << list(rh.ramification.coeffs) << "\n"
        << "divisor_identity=" << boolean(rh.divisor_identity) << "\n"
        << "residual=" << rh.residual << "\n";
  return rh.divisor_identity && rh.residual == 0 ? kOk : kFalse;
}

int cmd_push(const Context& c) {
  auto phi = c.morphism();
  c.out << divisor_to_json(push_divisor(phi, c.divisor_on(phi.source))).dump() << "\n";
  return kOk;
}

int cmd_pull(const Context& c) {
  auto phi = c.morphism();
  c.out << divisor_to_json(pull_divisor(phi, certificate(phi), c.divisor_on(phi.target))).dump() << "\n";
  return kOk;
}

int cmd_forms(const Context& c) {
  auto g = c.graph();
  auto b = flow_basis(g);
  c.out << "genus=" << b.cycles.size() << "\n"
        << "tree=" << list(b.tree_edges) << "\n"
        << "cotree=" << list(b.cotree_edges) << "\n";
  for (std::size_t i = 0; i < b.cycles.size(); ++i) c.out << "cycle" << i << "=" << list(b.cycles[i].values) << "\n";
  auto gram = gram_matrix(g, b);
  c.out << "gram=[";
  for (std::size_t i = 0; i < gram.size(); ++i) c.out << (i ? ", " : "") << list(gram[i]);
  c.out << "]\n";
  return kOk;
}

int cmd_canonical_map(const Context& c) {
  auto g = c.graph();
  auto psi = canonical_map(g);
  for (Edge e = 0; e < g.edge_count(); ++e) c.out << "e" << e << "=" << list(psi[e]) << "\n";
  auto fibers = canonical_fibers(g);
  c.out << "fibers=[";
  for (std::size_t i = 0; i < fibers.size(); ++i) c.out << (i ? ", " : "") << list(fibers[i]);
  c.out << "]\n";
  bool inj = fibers.size() == static_cast<std::size_t>(g.edge_count());
  c.out << "injective=" << boolean(inj) << "\n";
  return kOk;
}

int cmd_aut(const Context& c) {
  auto g = c.graph();
  auto auts = automorphisms(g, c.aut_bound());
  std::size_t invs = 0;
  for (const auto& a : auts)
    if (is_involution(a)) ++invs;
  c.out << "automorphisms=" << auts.size() << "\n" << "involutions=" << invs << "\n";
  if (bridges(g).empty() && genus(g) >= 2) c.out << "faithful=" << boolean(aut_faithfulness_check(g, auts)) << "\n";
  return kOk;
}

json witness_to_json(const Multigraph& g, const HyperellipticWitness& w) {
  auto cond = verify_witness(g, w);
  return {{"divisor", w.divisor.coeffs},
          {"involution", morphism_to_json(w.involution)},
          {"quotient_tree", graph_to_json(w.quotient_tree)},
          {"quotient_map", morphism_to_json(w.quotient_map)},
          {"conditions",
           {{"rank_one_divisor", cond.rank_one_divisor},
            {"tree_quotient", cond.tree_quotient},
            {"double_cover_of_tree", cond.double_cover_of_tree}}}};
}

int cmd_hyperelliptic(const Context& c) {
  auto g = c.graph();
  auto w = is_hyperelliptic(g);
  if (!w) {
    c.out << "not hyperelliptic\n";
    return kFalse;
  }
  c.out << witness_to_json(g, *w).dump() << "\n";
  return kOk;
}

int cmd_weierstrass(const Context& c) {
  c.out << json(weierstrass_points(c.graph())).dump() << "\n";
  return kOk;
}

int cmd_classify(const Context& c) {
  c.out << classify_weierstrass_free(c.graph()).describe() << "\n";
  return kOk;
}

json scan_record(const Multigraph& g) {
  json r{{"graph", graph_to_json(g)}, {"genus", genus(g)}};
  auto w = weierstrass_points(g);
  bool hyper = genus(g) >= 2 && is_hyperelliptic(g).has_value();
  r["weierstrass"] = w;
  r["hyperelliptic"] = hyper;
  if (hyper) {
    auto cls = classify_weierstrass_free(g);
    r["classification"] = cls.describe();
    r["outside_families"] = w.empty() && cls.kind == Classification::Kind::NotInFamilies;
  }
  return r;
}

int cmd_scan(const Context& c) {
  auto graphs = two_edge_connected_multigraphs(c.opt.max_edges);
  std::vector<std::string> lines(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) lines[i] = scan_record(graphs[i]).dump();
  };
  int jobs = std::max(1, c.opt.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& l : lines) c.out << l << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Divisors, harmonic morphisms and hyperelliptic graphs"};
  app.name("hgraph");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", opt.seed, "Seed for sampled checks");
  app.add_option("--budget", opt.budget, "Cap on exhaustive enumerations");

  std::map<CLI::App*, std::function<int(const Context&)>> handlers;
  auto sub = [&](const char* name, const char* help, std::function<int(const Context&)> fn) {
    auto* s = app.add_subcommand(name, help);
    handlers[s] = std::move(fn);
    return s;
  };
  auto with_graph = [&](CLI::App* s) {
    s->add_option("graph", opt.graph, "Graph JSON")->required();
    return s;
  };
  auto with_morphism = [&](CLI::App* s) {
    with_graph(s);
    s->add_option("target", opt.target, "Target graph JSON")->required();
    s->add_option("morphism", opt.morphism, "Morphism JSON")->required();
    return s;
  };

  with_graph(sub("info", "Basic invariants", cmd_info));
  auto* rank_cmd = with_graph(sub("rank", "Rank of a divisor", cmd_rank));
  rank_cmd->add_option("--divisor", opt.divisor)->required();
  rank_cmd->add_flag("--by-definition", opt.by_definition, "Skip the high-degree shortcut");
  auto* reduce_cmd = with_graph(sub("reduce", "q-reduced representative", cmd_reduce));
  reduce_cmd->add_option("--divisor", opt.divisor)->required();
  reduce_cmd->add_option("--base", opt.base);
  auto* rr = with_graph(sub("rr-check", "Riemann-Roch residual, one divisor or sampled", cmd_rr_check));
  rr->add_option("--divisor", opt.divisor);
  rr->add_option("--samples", opt.samples);
  with_graph(sub("jacobian", "Order and invariant factors", cmd_jacobian))
      ->add_flag("--all-factors", opt.all_factors, "Include factors equal to 1");
  auto* aj = with_graph(sub("abel-jacobi", "Abel-Jacobi images and injectivity", cmd_abel_jacobi));
  aj->add_option("--base", opt.base);
  aj->add_option("--k", opt.k);
  with_graph(sub("eulerian-cut", "Nonempty Eulerian cut", cmd_eulerian_cut));
  with_graph(sub("to-b2", "Harmonic morphism onto B2", cmd_to_b2));
  with_morphism(sub("morphism-check", "Morphism axiom and harmonicity", cmd_morphism_check));
  with_morphism(sub("rh-check", "Riemann-Hurwitz", cmd_rh_check));
  with_morphism(sub("push", "Push a source divisor forward", cmd_push))->add_option("--divisor", opt.divisor)->required();
  with_morphism(sub("pull", "Pull a target divisor back", cmd_pull))->add_option("--divisor", opt.divisor)->required();
  with_graph(sub("forms", "Flow basis and Gram matrix", cmd_forms));
  with_graph(sub("canonical-map", "Canonical map and its fibers", cmd_canonical_map));
  with_graph(sub("aut", "Automorphism counts", cmd_aut));
  with_graph(sub("hyperelliptic", "Hyperelliptic witness", cmd_hyperelliptic));
  with_graph(sub("weierstrass", "Weierstrass points", cmd_weierstrass));
  with_graph(sub("classify", "Weierstrass-free family", cmd_classify));
  auto* scan = sub("scan", "Scan small bridgeless multigraphs", cmd_scan);
  scan->add_option("--max-edges", opt.max_edges);
  scan->add_option("--jobs", opt.jobs);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Context ctx{opt, out, err};
  try {
    for (auto& [s, fn] : handlers)
      if (s->parsed()) return fn(ctx);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const MorphismError& e) {
    err << "error: " << e.what() << "\n";
    return kFalse;
  } catch (const HypothesisError& e) {
    err << "hypothesis: " << e.what() << "\n";
    return kHypothesis;
  } catch (const BudgetExceeded& e) {
    err << "budget: " << e.what() << "\n";
    return kHypothesis;
  }
  return kUsage;
}

}  // namespace hgraph::cli
