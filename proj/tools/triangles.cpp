// Command-line front end: parse a graph, run a solver or construction, print a
// JSON report. Exit codes: 0 all checked bounds pass, 1 a bound fails or the
// search budget is exhausted, 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tuza/exact.hpp"
#include "tuza/generators.hpp"
#include "tuza/haxell.hpp"
#include "tuza/io.hpp"
#include "tuza/krivelevich.hpp"
#include "tuza/planar.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace tuza;

constexpr int kExitOk = 0;
constexpr int kExitBound = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::string input;
  std::string family;
  int n = 0;
  int m = 0;
  int mult = 1;
  int k = 1;
  std::uint64_t seed = 1;
  bool skip_exact = false;
  long long budget = HaxellOptions{}.node_budget;
};

class Report {
 public:
  explicit Report(std::string command) { doc_["command"] = std::move(command); }

  json& operator[](const char* key) { return doc_[key]; }

  void bound(const std::string& name, const std::string& claimed, json achieved, bool pass) {
    doc_["bounds"].push_back({{"name", name},
                              {"claimed", claimed},
                              {"achieved", std::move(achieved)},
                              {"status", pass ? "pass" : "fail"}});
    failed_ = failed_ || !pass;
  }

  void unchecked(const std::string& name, const std::string& claimed) {
    doc_["bounds"].push_back(
        {{"name", name}, {"claimed", claimed}, {"achieved", nullptr}, {"status", "unchecked"}});
  }

  int finish() {
    if (!doc_.contains("bounds")) doc_["bounds"] = json::array();
    doc_["ok"] = !failed_;
    std::cout << doc_.dump(2) << '\n';
    return failed_ ? kExitBound : kExitOk;
  }

 private:
  json doc_;
  bool failed_ = false;
};

json triangle_json(const Triangle& t) { return json::array({t.v[0], t.v[1], t.v[2]}); }

json edges_json(const std::set<EdgeKey>& es) {
  json out = json::array();
  for (const auto& e : es) out.push_back({e.u, e.v});
  return out;
}

json packing_json(const PackingCertificate& p) {
  json out = json::array();
  for (const auto& [t, k] : p.multiplicity) out.push_back({{"triangle", triangle_json(t)}, {"times", k}});
  return out;
}

json transversal_json(const TransversalCertificate& c) {
  return {{"edges", edges_json(c.edges)}, {"weight", c.weight}};
}

json fractional_json(const LPSolution& s) {
  json f = json::array();
  for (const auto& [t, v] : s.packing.values)
    if (!v.is_zero()) f.push_back({{"triangle", triangle_json(t)}, {"value", v.str()}});
  json g = json::array();
  for (const auto& [e, v] : s.transversal.values)
    if (!v.is_zero()) g.push_back({{"edge", {e.u, e.v}}, {"value", v.str()}});
  return {{"packing", f}, {"transversal", g}};
}

json instance_json(const Multigraph& g) {
  return {{"n", g.vertex_count()},
          {"m", g.edge_count()},
          {"total_weight", g.total_weight()},
          {"triangles", enumerate_triangles(g).size()}};
}

Multigraph generated(const Flags& f) {
  if (f.family == "random") return gen_random(f.n, f.m, f.mult, f.seed);
  if (f.family == "gk") return gen_gk(f.k).graph;
  if (f.family == "apex-cycle") return gen_apex(cycle_graph(f.n));
  if (f.family == "apex-petersen") return gen_apex(petersen_graph());
  return gen_named(f.family, f.n, f.seed);
}

Multigraph load(const Flags& f) {
  if (!f.input.empty()) {
    if (f.input == "-") {
      std::string text(std::istreambuf_iterator<char>(std::cin), {});
      return parse_graph(text);
    }
    return read_graph_file(f.input);
  }
  if (!f.family.empty()) return generated(f);
  throw CLI::ValidationError("graph", "one of --input or --family is required");
}

struct Exact {
  NuResult nu;
  TauResult tau;
};

void add_lp_duality(Report& r, const Multigraph& g, const LPSolution& s) {
  bool ok = is_fractional_packing(g, s.packing) && is_fractional_transversal(g, s.transversal) &&
            s.packing.value() == s.value && s.transversal.value(g) == s.value;
  r.bound("lp-duality", "f(T) = sum w(e) g(e), both feasible", s.value.str(), ok);
}

void add_chain(Report& r, const std::optional<Exact>& ex, const Rational& nustar) {
  const std::string names[] = {"tau >= tau*", "nu* >= nu", "2nu >= tau*"};
  if (!ex) {
    for (const auto& n : names) r.unchecked("chain " + n, n);
    return;
  }
  Rational nu(ex->nu.value), tau(ex->tau.value);
  r.bound("chain tau >= tau*", names[0], ex->tau.value, tau >= nustar);
  r.bound("chain nu* >= nu", names[1], ex->nu.value, nustar >= nu);
  r.bound("chain 2nu >= tau*", names[2], 2 * ex->nu.value, Rational(2) * nu >= nustar);
}

void add_krivelevich(Report& r, const Multigraph& g, const std::optional<Exact>& ex) {
  auto k = krivelevich_construct(g);
  bool valid = verify_transversal(g, k.certificate);
  r.bound("krivelevich", "w(L) <= 2nu* - sqrt(nu*)/4", k.certificate.weight,
          valid && within_2nustar_bound(Rational(k.certificate.weight), k.lp.value));
  if (ex) r.bound("krivelevich >= tau", "w(L) >= tau", k.certificate.weight, k.certificate.weight >= ex->tau.value);
  r["krivelevich"] = {{"nustar", k.lp.value.str()},
                      {"independent", k.independent},
                      {"cut_graph_size", k.cut_graph_size},
                      {"cut_size", k.cut_size},
                      {"transversal", transversal_json(k.certificate)}};
}

void add_planar(Report& r, const Multigraph& g, const std::optional<Exact>& ex) {
  auto p = reduce_and_certify(g);
  json steps = json::object();
  for (const auto& s : p.trace.steps) {
    auto key = to_string(s.kind);
    steps[key] = steps.value(key, 0) + 1;
  }
  bool complete = p.status == PlanarStatus::Complete;
  r["planar"] = {{"status", complete ? "complete" : "incomplete"},
                 {"steps", steps},
                 {"packing", packing_json(p.packing)},
                 {"transversal", transversal_json(p.transversal)}};
  if (!complete) {
    r.unchecked("planar", "w(C) <= 2|P|");
    return;
  }
  bool valid = verify_packing(g, p.packing) && verify_transversal(g, p.transversal);
  r.bound("planar", "w(C) <= 2|P|", p.transversal.weight,
          valid && p.transversal.weight <= 2 * p.packing.value());
  if (ex) {
    r.bound("planar |P| <= nu", "|P| <= nu", p.packing.value(), p.packing.value() <= ex->nu.value);
    r.bound("planar w(C) >= tau", "w(C) >= tau", p.transversal.weight,
            p.transversal.weight >= ex->tau.value);
  }
}

void add_haxell(Report& r, const Multigraph& g, const Flags& f) {
  if (f.skip_exact) {
    r.unchecked("haxell", "min candidate <= 73/25 nu");
    return;
  }
  HaxellOptions opts;
  opts.node_budget = f.budget;
  auto h = haxell_construct(g, opts);
  json cands = json::array();
  for (const auto& c : h.candidates) {
    bool valid = verify_transversal(g, c.certificate);
    cands.push_back({{"label", c.label},
                     {"size", c.size},
                     {"weight", c.certificate.weight},
                     {"coefficient", c.coefficient.str()},
                     {"bound", c.bound.str()},
                     {"pass", valid && c.within_bound}});
    r.bound("haxell " + c.label, "size <= " + c.coefficient.str() + " nu", c.size,
            valid && c.within_bound);
  }
  Weight best = h.certificate.weight;
  r.bound("haxell", "min candidate <= 73/25 nu", best, Rational(25 * best) <= Rational(73 * h.state.nu));
  r["haxell"] = {{"nu", h.state.nu},
                 {"gamma", h.state.gamma.str()},
                 {"nodes", h.state.nodes},
                 {"candidates", cands},
                 {"best", h.candidates.empty() ? "" : h.candidates[h.best].label},
                 {"transversal", transversal_json(h.certificate)}};
}

std::optional<Exact> exact(const Multigraph& g, const Flags& f, Report& r) {
  if (f.skip_exact) {
    r["nu"] = nullptr;
    r["tau"] = nullptr;
    return std::nullopt;
  }
  Exact ex{nu_exact(g), tau_exact(g)};
  r["nu"] = ex.nu.value;
  r["tau"] = ex.tau.value;
  return ex;
}

int run(const std::string& command, const Flags& f) {
  if (command == "generate") {
    std::cout << emit_graph(generated(f));
    return kExitOk;
  }
  Multigraph g = load(f);
  Report r(command);
  r["instance"] = instance_json(g);

  if (command == "solve") {
    auto ex = exact(g, f, r);
    if (ex) {
      r.bound("packing valid", "packing respects w", ex->nu.value, verify_packing(g, ex->nu.certificate));
      r.bound("transversal valid", "transversal hits every triangle", ex->tau.value,
              verify_transversal(g, ex->tau.certificate));
      r.bound("nu <= tau <= 3nu", "nu <= tau <= 3nu", ex->tau.value,
              ex->nu.value <= ex->tau.value && ex->tau.value <= 3 * ex->nu.value);
      r["certificates"] = {{"packing", packing_json(ex->nu.certificate)},
                           {"transversal", transversal_json(ex->tau.certificate)}};
    }
  } else if (command == "lp") {
    auto s = lp_optimal(g);
    r["nustar"] = s.value.str();
    add_lp_duality(r, g, s);
    r["certificates"] = fractional_json(s);
  } else if (command == "kriv") {
    auto ex = exact(g, f, r);
    add_krivelevich(r, g, ex);
  } else if (command == "haxell") {
    add_haxell(r, g, f);
  } else if (command == "planar") {
    auto ex = exact(g, f, r);
    add_planar(r, g, ex);
  } else if (command == "certify-chain") {
    auto ex = exact(g, f, r);
    auto s = lp_optimal(g);
    r["nustar"] = s.value.str();
    add_lp_duality(r, g, s);
    add_chain(r, ex, s.value);
    add_krivelevich(r, g, ex);
    add_planar(r, g, ex);
    add_haxell(r, g, f);
  }
  return r.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle packing and covering in edge-weighted multigraphs"};
  app.require_subcommand(1);
  Flags flags;

  const char* commands[][2] = {
      {"solve", "exact nu and tau with certificates"},
      {"lp", "exact fractional optimum nu* = tau* with primal and dual"},
      {"kriv", "transversal of weight at most 2nu* - sqrt(nu*)/4"},
      {"haxell", "five candidate transversals, best within 73/25 nu"},
      {"planar", "reduction rules with packing and transversal certificates"},
      {"generate", "print a generated graph in the text format"},
      {"certify-chain", "inequality chain plus every construction bound"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--input", flags.input, "graph file, '-' for stdin");
    sub->add_option("--family", flags.family,
                    "generated graph: complete|cycle|wheel|petersen|octahedron|stacked|gk|random|"
                    "apex-cycle|apex-petersen");
    sub->add_option("--n", flags.n, "size parameter of the family");
    sub->add_option("--m", flags.m, "edge count (random)");
    sub->add_option("--mult", flags.mult, "largest multiplicity (random)");
    sub->add_option("--k", flags.k, "level of G_k");
    sub->add_option("--seed", flags.seed, "seed for randomized families");
    sub->add_flag("--skip-exact", flags.skip_exact, "skip exponential exact solves");
    sub->add_option("--budget", flags.budget, "node budget for family searches")
        ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, flags);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << '\n';
    return kExitBound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBound;
  }
}
