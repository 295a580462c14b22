// coxhom: homology invariants and Hopf-formula generator words for Artin and
// Coxeter groups, read from a graph file or a catalog name.
//
// Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 internal
// consistency failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "coxhom/coxhom.hpp"

namespace {

constexpr int kUsage = 1;
constexpr int kParse = 2;
constexpr int kInconsistent = 3;

struct GraphSource {
  std::string file;
  std::string type;

  void attach(CLI::App* cmd, std::string const& file_flag = "--file",
              std::string const& type_flag = "--type") {
    auto* f = cmd->add_option(file_flag, file, "Graph file");
    auto* t = cmd->add_option(type_flag, type, "Catalog type, e.g. ~D4");
    f->excludes(t);
  }

  [[nodiscard]] bool given() const { return !file.empty() || !type.empty(); }

  [[nodiscard]] coxhom::CoxeterGraph load() const {
    return file.empty() ? coxhom::parse_catalog(type)
                        : coxhom::read_graph_file(file);
  }
};

std::string group_string(coxhom::GroupDescriptor const& d) {
  if (d.free_rank == 0 && d.torsion2_rank == 0) {
    return "0";
  }
  std::string out;
  if (d.free_rank > 0) {
    out = "Z^" + std::to_string(d.free_rank);
  }
  if (d.torsion2_rank > 0) {
    out += (out.empty() ? "" : " + ") + std::string("Z2^") +
           std::to_string(d.torsion2_rank);
  }
  return out;
}

char const* yes_no(bool b) { return b ? "yes" : "no"; }

int run_compute(coxhom::CoxeterGraph const& g, bool json) {
  auto const classes = coxhom::pair_classes(g);
  auto const p = coxhom::invariant_profile(g, classes);
  auto const h = coxhom::homology_summary(g, classes, p);
  if (json) {
    std::cout << coxhom::render_json(g, p, h);
  } else {
    std::cout << "graph: " << g.size() << " vertices, " << g.labels().size()
              << " labelled pairs\n"
              << "p = " << p.p << "  q1 = " << p.q1 << "  q2 = " << p.q2
              << "  q3 = " << p.q3 << "  q = " << p.q << "\n"
              << "n1 = " << p.n1 << "  n2 = " << p.n2 << "  n3 = " << p.n3
              << "  n4 = " << p.n4 << "  (-n1+n2+n3+n4 = " << p.howlett_rank()
              << ")\n"
              << "H1(A;Z)  = " << group_string({h.h1_artin_free_rank, 0}) << "\n"
              << "H2(N;Z)  = " << group_string(h.h2_orbit) << "\n"
              << "H2(W;Z)  = " << group_string(h.h2_coxeter) << "\n"
              << "H2(A;Z2) = " << group_string({0, h.h2_artin_mod2_rank})
              << "\n"
              << "corollary: all_torsion=" << yes_no(h.corollary.all_torsion)
              << " odd_equals_gamma=" << yes_no(h.corollary.odd_equals_gamma)
              << " tree=" << yes_no(h.corollary.tree)
              << " applies=" << yes_no(h.corollary.applies) << "\n"
              << "H2(A;Z)  = "
              << (h.h2_artin_integral ? group_string(*h.h2_artin_integral)
                                      : std::string("unknown"))
              << "\n";
  }
  if (!p.howlett_identity_holds()) {
    std::cerr << "internal error: Howlett identity violated\n";
    return kInconsistent;
  }
  return 0;
}

int run_generators(coxhom::CoxeterGraph const& g, coxhom::Flavor flavor,
                   bool json) {
  auto const omega = coxhom::omega_sets(g, flavor);
  auto const profile = coxhom::invariant_profile(g);
  bool ok = static_cast<std::int64_t>(omega.total()) == profile.mod2_rank();

  auto const& names = g.vertices();
  auto emit = [&](char const* label, coxhom::Word const& w) {
    bool const zero = coxhom::in_commutator_subgroup(w);
    ok = ok && zero;
    if (!json) {
      std::cout << label << "  " << coxhom::render_word(w, names)
                << "    [ab=0: " << yes_no(zero) << "]\n";
    }
  };
  for (auto const& pw : omega.omega1) emit("omega1", pw.word);
  for (auto const& pw : omega.omega2) emit("omega2", pw.word);
  for (auto const& cw : omega.omega3) emit("omega3", cw.word);

  if (json) {
    std::cout << coxhom::omega_json(g, omega, profile.mod2_rank()).dump(2)
              << "\n";
  } else {
    std::cout << "flavor " << coxhom::to_string(flavor) << ": "
              << omega.omega1.size() << " + " << omega.omega2.size() << " + "
              << omega.omega3.size() << " = " << omega.total()
              << " words, p+q = " << profile.mod2_rank() << "\n";
  }
  if (!ok) {
    std::cerr << "internal error: generator words violate their contract\n";
    return kInconsistent;
  }
  return 0;
}

int run_check(coxhom::CoxeterGraph const& g) {
  auto const results = coxhom::run_consistency_checks(g);
  for (auto const& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed && !r.detail.empty()) {
      std::cout << "  (" << r.detail << ")";
    }
    std::cout << "\n";
  }
  return coxhom::all_passed(results) ? 0 : kInconsistent;
}

int run_stability(coxhom::CoxeterGraph const& seed, std::int64_t n_max,
                  bool json) {
  auto const report = coxhom::stability_scan(seed, n_max);
  if (json) {
    std::cout << coxhom::stability_json(seed, n_max, report).dump(2) << "\n";
  } else {
    for (auto const& point : report.ranks) {
      std::cout << "n = " << point.n << "  rank H2(A;Z2) = " << point.rank
                << "\n";
    }
    std::cout << "verdict: "
              << (report.verdict ? "constant for n >= 3" : "NOT constant")
              << "\n";
  }
  return report.verdict ? 0 : kInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology invariants of Artin and Coxeter groups"};
  app.require_subcommand(1);

  GraphSource compute_src;
  bool compute_json = false;
  auto* compute = app.add_subcommand("compute", "Invariant profile and homology");
  compute_src.attach(compute);
  compute->add_flag("--json", compute_json, "Emit JSON");

  GraphSource gen_src;
  std::string flavor_name = "artin";
  bool gen_json = false;
  auto* generators =
      app.add_subcommand("generators", "Hopf-formula generator words");
  gen_src.attach(generators);
  generators->add_option("--flavor", flavor_name, "artin or coxeter")
      ->check(CLI::IsMember({"artin", "coxeter"}));
  generators->add_flag("--json", gen_json, "Emit JSON");

  GraphSource check_src;
  auto* check = app.add_subcommand("check", "Run internal consistency checks");
  check_src.attach(check);

  GraphSource seed_src;
  std::int64_t n_max = 0;
  bool stab_json = false;
  auto* stability =
      app.add_subcommand("stability", "Mod-2 rank along the extension family");
  seed_src.attach(stability, "--seed-file", "--seed-type");
  stability->add_option("--n-max", n_max, "Largest family index (>= 4)")
      ->required();
  stability->add_flag("--json", stab_json, "Emit JSON");

  std::string catalog_action;
  auto* catalog = app.add_subcommand("catalog", "Catalog of standard types");
  catalog->add_option("action", catalog_action, "list")
      ->required()
      ->check(CLI::IsMember({"list"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  if (catalog->parsed()) {
    for (auto const& name : coxhom::catalog_names()) {
      std::cout << name << "\n";
    }
    return 0;
  }

  GraphSource const* source = nullptr;
  CLI::App const* active = nullptr;
  for (auto [src, cmd] : {std::pair{&compute_src, compute},
                          std::pair{&gen_src, generators},
                          std::pair{&check_src, check},
                          std::pair{&seed_src, stability}}) {
    if (cmd->parsed()) {
      source = src;
      active = cmd;
    }
  }
  if (source == nullptr || !source->given()) {
    std::cerr << "error: a graph is required ("
              << (active == stability ? "--seed-file or --seed-type"
                                      : "--file or --type")
              << ")\n";
    return kUsage;
  }
  if (active == stability && n_max < 4) {
    std::cerr << "error: --n-max must be at least 4\n";
    return kUsage;
  }

  coxhom::CoxeterGraph graph;
  try {
    graph = source->load();
  } catch (coxhom::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }

  try {
    if (active == compute) return run_compute(graph, compute_json);
    if (active == generators) {
      auto const flavor = flavor_name == "coxeter" ? coxhom::Flavor::Coxeter
                                                   : coxhom::Flavor::Artin;
      return run_generators(graph, flavor, gen_json);
    }
    if (active == check) return run_check(graph);
    return run_stability(graph, n_max, stab_json);
  } catch (coxhom::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == coxhom::ErrorKind::EmptyGraph ? kParse : kInconsistent;
  }
}
