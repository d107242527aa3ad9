// advicelab: instance generation, LOCAL-model runs, structure checks,
// adversary search, and the advice/time tradeoff table.
//
// Exit codes: 0 all verdicts pass, 1 a verdict failed (witness printed),
// 2 invalid input.

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "advicelab/adversary.hpp"
#include "advicelab/codec.hpp"
#include "advicelab/colouring.hpp"
#include "advicelab/election.hpp"
#include "advicelab/epsilon_rings.hpp"
#include "advicelab/fat_rings.hpp"
#include "advicelab/generators.hpp"
#include "advicelab/graph.hpp"
#include "advicelab/instance_io.hpp"
#include "advicelab/nested_rings.hpp"
#include "advicelab/rational.hpp"
#include "advicelab/rng.hpp"
#include "advicelab/select.hpp"
#include "advicelab/sim.hpp"

namespace {

using namespace advicelab;

std::uint64_t seed_or_env(std::uint64_t seed, bool seed_given) {
  if (seed_given) return seed;
  if (const char* env = std::getenv("ADVICELAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("ADVICELAB_SEED is not a number");
    }
  }
  return 0;
}

std::uint64_t resolve_label_bound(const Instance& inst, std::uint64_t cli_L) {
  std::uint64_t L = cli_L;
  if (L == 0 && inst.label_bound) L = *inst.label_bound;
  if (L == 0) L = default_label_bound(inst.graph.node_count());
  if (L < max_label(inst.graph))
    throw std::invalid_argument("label bound L below the largest label in the instance");
  return L;
}

std::string sanitize(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c == '/') c = '-';
  return out;
}

struct GenParams {
  std::string family;
  std::uint64_t D = 0;
  std::string eps = "1/4";
  std::uint64_t n = 0;
  std::uint64_t extra_edges = 0;
  bool extra_edges_given = false;
  std::uint64_t L = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_dir = ".";
};

void write_manifest(const std::filesystem::path& dir, const std::string& prefix,
                    const std::vector<std::string>& header,
                    const std::vector<std::string>& files) {
  std::ofstream m(dir / (prefix + "_manifest.txt"));
  if (!m) throw std::runtime_error("cannot write manifest in " + dir.string());
  for (const auto& line : header) m << line << "\n";
  for (const auto& f : files) m << "file " << f << "\n";
  std::cout << "manifest " << prefix + "_manifest.txt" << "\n";
}

int cmd_gen(const GenParams& p) {
  const std::filesystem::path dir(p.out_dir);
  std::filesystem::create_directories(dir);
  std::vector<std::string> files;

  auto emit = [&](const std::string& name, const LabeledGraph& g,
                  std::optional<std::uint64_t> bound) {
    write_instance_file((dir / name).string(), g, bound);
    files.push_back(name);
    std::cout << "wrote " << name << "\n";
  };

  if (p.family == "nested") {
    if (p.D == 0) throw std::invalid_argument("gen nested needs --D >= 1");
    auto fam = nested_ring_family(static_cast<int>(p.D));
    const std::string prefix = "nested_D" + std::to_string(p.D);
    emit(prefix + "_base.instance", fam.base, std::nullopt);
    for (std::size_t k = 1; k <= fam.members.size(); ++k)
      emit(prefix + "_k" + std::to_string(k) + ".instance", fam.members[k - 1], std::nullopt);
    write_manifest(dir, prefix, {"family nested", "D " + std::to_string(p.D)}, files);
    return 0;
  }
  if (p.family == "epsilon") {
    if (p.D == 0) throw std::invalid_argument("gen epsilon needs --D >= 1");
    auto fam = epsilon_family(p.D, parse_rational(p.eps), p.L);
    const std::string prefix =
        "epsilon_D" + std::to_string(p.D) + "_eps" + sanitize(fam.eps.str());
    for (std::size_t i = 1; i <= fam.members.size(); ++i)
      emit(prefix + "_i" + std::to_string(i) + ".instance", fam.members[i - 1], fam.L);
    write_manifest(dir, prefix,
                   {"family epsilon", "D " + std::to_string(p.D), "eps " + fam.eps.str(),
                    "x " + std::to_string(fam.x), "y " + std::to_string(fam.y),
                    "L " + std::to_string(fam.L)},
                   files);
    return 0;
  }
  if (p.family == "random-ring") {
    if (p.n < 3) throw std::invalid_argument("gen random-ring needs --n >= 3");
    const std::uint64_t seed = seed_or_env(p.seed, p.seed_given);
    const std::uint64_t L = p.L ? p.L : default_label_bound(p.n);
    Rng rng(seed);
    Instance inst = random_ring(p.n, L, rng);
    const std::string prefix =
        "random_ring_n" + std::to_string(p.n) + "_seed" + std::to_string(seed);
    emit(prefix + ".instance", inst.graph, inst.label_bound);
    write_manifest(dir, prefix,
                   {"family random-ring", "n " + std::to_string(p.n),
                    "seed " + std::to_string(seed), "L " + std::to_string(L)},
                   files);
    return 0;
  }
  if (p.family == "random-graph") {
    if (p.n < 2) throw std::invalid_argument("gen random-graph needs --n >= 2");
    const std::uint64_t seed = seed_or_env(p.seed, p.seed_given);
    const std::uint64_t L = p.L ? p.L : default_label_bound(p.n);
    const std::uint64_t extra = p.extra_edges_given ? p.extra_edges : p.n / 2;
    Rng rng(seed);
    Instance inst = random_connected_graph(p.n, extra, L, rng);
    const std::string prefix = "random_graph_n" + std::to_string(p.n) + "_m" +
                               std::to_string(extra) + "_seed" + std::to_string(seed);
    emit(prefix + ".instance", inst.graph, inst.label_bound);
    write_manifest(dir, prefix,
                   {"family random-graph", "n " + std::to_string(p.n),
                    "extra-edges " + std::to_string(extra), "seed " + std::to_string(seed),
                    "L " + std::to_string(L)},
                   files);
    return 0;
  }
  throw std::invalid_argument("unknown family '" + p.family +
                              "' (nested, epsilon, random-ring, random-graph)");
}

struct RunParams {
  std::string instance_path;
  std::string algo;
  std::string alpha = "1/1";
  std::uint64_t L = 0;
  int cap = 0;
};

int cmd_run(const RunParams& p) {
  Instance inst = read_instance_file(p.instance_path);
  const LabeledGraph& g = inst.graph;
  const int cap = p.cap > 0 ? p.cap : default_round_cap(g);

  RunReport report;
  bool selection_task = false;
  if (p.algo == "select") {
    const Rational alpha = parse_rational(p.alpha);
    const std::uint64_t L = resolve_label_bound(inst, p.L);
    report = run(g, select_oracle(alpha, L), select_algorithm(alpha, L), cap);
    selection_task = true;
  } else if (p.algo == "elect-max") {
    const std::uint64_t L = resolve_label_bound(inst, p.L);
    report = run(g, elect_max_oracle(L), elect_max_algorithm(), cap);
  } else if (p.algo == "elect-diam") {
    report = run(g, elect_diam_oracle(), elect_diam_algorithm(), cap);
  } else if (p.algo == "elect-stall") {
    report = run(g, elect_stall_oracle(), elect_stall_algorithm(), cap);
  } else {
    throw std::invalid_argument("unknown algorithm '" + p.algo +
                                "' (select, elect-max, elect-diam, elect-stall)");
  }

  std::cout << format_report(report);
  const bool pass = selection_task ? report.selection_pass : report.election_pass;
  return pass ? 0 : 1;
}

struct VerifyParams {
  std::string check;
  std::uint64_t L = 0;
  int beta = 0;
  std::uint64_t D = 0;
  std::string eps = "1/4";
  int n = 0;
  int pool = 0;
  int slots = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

int verify_legality(std::uint64_t L, int beta) {
  auto rep = check_legal_colouring(L, beta);
  if (rep.legal) {
    std::cout << "legality pass: L=" << L << " beta=" << beta << "\n";
    return 0;
  }
  const auto& w = *rep.witness;
  std::cout << "legality FAIL: colour=" << colour_to_string(w.colour) << " label=" << w.label
            << "\n";
  return 1;
}

int verify_membership(std::uint64_t L, int beta) {
  const std::uint64_t radix = static_cast<std::uint64_t>(floor_log2(L)) + 1;
  Colour colours = 1;
  for (int i = 0; i < beta - 1; ++i) colours *= radix;
  for (std::uint64_t first = 1; first <= L; ++first) {
    for (Colour c = 0; c < colours; ++c) {
      if (first_entry_exists(first, c, L, beta) != first_entry_exists_brute(first, c, L, beta)) {
        std::cout << "membership FAIL: first=" << first << " colour=" << colour_to_string(c)
                  << "\n";
        return 1;
      }
    }
  }
  std::cout << "membership pass: L=" << L << " beta=" << beta << "\n";
  return 0;
}

int verify_nested(std::uint64_t D) {
  auto fam = nested_ring_family(static_cast<int>(D));
  for (std::size_t k = 1; k <= fam.members.size(); ++k) {
    const auto& m = fam.members[k - 1];
    if (diameter(m) != static_cast<int>(k)) {
      std::cout << "nested FAIL: member " << k << " has diameter " << diameter(m) << "\n";
      return 1;
    }
    if (max_label(m) != D + k + 1) {
      std::cout << "nested FAIL: member " << k << " max label " << max_label(m) << "\n";
      return 1;
    }
  }
  auto res = verify_nested_views(fam);
  if (!res.pass) {
    const auto& w = *res.witness;
    std::cout << "nested FAIL: views differ at i=" << w.i << " j=" << w.j << " r=" << w.r << "\n";
    return 1;
  }
  std::cout << "nested pass: D=" << D << "\n";
  return 0;
}

int verify_fat_count(int pool, int slots) {
  auto seqs = enumerate_fat_slot_sequences(pool, slots);
  const std::uint64_t expected = fat_ring_count_formula(pool, slots);
  if (seqs.size() != expected) {
    std::cout << "fat-count FAIL: enumerated " << seqs.size() << " expected " << expected << "\n";
    return 1;
  }
  std::cout << "fat-count pass: pool=" << pool << " slots=" << slots << " count=" << expected
            << "\n";
  return 0;
}

int verify_fat_views(const VerifyParams& p) {
  auto res = advicelab::verify_fat_views(static_cast<int>(p.D), p.n, p.pool, p.trials,
                                         seed_or_env(p.seed, p.seed_given));
  if (!res.pass) {
    std::cout << "fat-views FAIL: node " << *res.failing_label << " distinguishes the rings\n";
    return 1;
  }
  std::cout << "fat-views pass: D=" << p.D << " n=" << p.n << " pool=" << p.pool
            << (p.trials ? " trials=" + std::to_string(p.trials) : " exhaustive") << "\n";
  return 0;
}

int verify_epsilon(std::uint64_t D, const std::string& eps_text) {
  auto fam = epsilon_family(D, parse_rational(eps_text));
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    if (fam.members[i].node_count() != static_cast<int>(2 * D)) {
      std::cout << "epsilon FAIL: member " << i + 1 << " has " << fam.members[i].node_count()
                << " nodes, expected " << 2 * D << "\n";
      return 1;
    }
  }
  auto res = verify_epsilon_views(fam);
  if (!res.pass) {
    std::cout << "epsilon FAIL: views differ at i=" << res.witness->first
              << " j=" << res.witness->second << "\n";
    return 1;
  }
  auto demo = epsilon_demo(fam, 1, static_cast<int>(fam.y));
  if (!demo.demonstrated()) {
    std::cout << "epsilon FAIL: advice replay did not mislead the strawman\n";
    return 1;
  }
  std::cout << "epsilon pass: D=" << D << " eps=" << fam.eps.str() << " x=" << fam.x
            << " y=" << fam.y << " decoy=" << demo.decoy << "\n";
  return 0;
}

int cmd_verify(const VerifyParams& p) {
  if (p.check == "legality") {
    if (p.L == 0 || p.beta < 2) throw std::invalid_argument("legality needs --L and --beta >= 2");
    return verify_legality(p.L, p.beta);
  }
  if (p.check == "membership") {
    if (p.L == 0 || p.beta < 2)
      throw std::invalid_argument("membership needs --L and --beta >= 2");
    return verify_membership(p.L, p.beta);
  }
  if (p.check == "nested") {
    if (p.D == 0) throw std::invalid_argument("nested needs --D >= 1");
    return verify_nested(p.D);
  }
  if (p.check == "fat-count") {
    if (p.pool == 0 || p.slots == 0)
      throw std::invalid_argument("fat-count needs --pool and --slots");
    return verify_fat_count(p.pool, p.slots);
  }
  if (p.check == "fat-views") {
    if (p.D == 0 || p.n == 0 || p.pool == 0)
      throw std::invalid_argument("fat-views needs --D, --n and --pool");
    return verify_fat_views(p);
  }
  if (p.check == "epsilon") {
    if (p.D == 0) throw std::invalid_argument("epsilon needs --D");
    return verify_epsilon(p.D, p.eps);
  }
  throw std::invalid_argument(
      "unknown check '" + p.check +
      "' (legality, membership, nested, fat-count, fat-views, epsilon)");
}

struct AdversaryParams {
  std::string algo = "local-max-noadvice";
  int budget = 1;
  int pool = 8;
  std::string alpha = "1/1";
  std::uint64_t L = 0;
  std::string out = "counterexample.instance";
};

int cmd_adversary(const AdversaryParams& p) {
  AdversaryConfig config{p.budget, p.pool};
  AdviceOracle oracle;
  AlgorithmUnderTest alg;
  if (p.algo == "local-max-noadvice") {
    oracle = local_max_oracle();
    alg = local_max_algorithm();
  } else if (p.algo == "select") {
    // Every label the harness can mint fits below this bound.
    const std::uint64_t L =
        p.L ? p.L : std::bit_ceil(std::uint64_t{16} * static_cast<std::uint64_t>(p.pool) + 8);
    const Rational alpha = parse_rational(p.alpha);
    oracle = select_oracle(alpha, L);
    alg = select_algorithm(alpha, L);
  } else {
    throw std::invalid_argument("unknown adversary target '" + p.algo +
                                "' (local-max-noadvice, select)");
  }

  AdversaryResult res = run_adversary(alg, oracle, config);
  switch (res.outcome) {
    case AdversaryOutcome::counterexample: {
      write_instance_file(p.out, *res.instance);
      std::cout << "counterexample written to " << p.out << "\n";
      if (!res.fresh_labels.empty()) {
        std::cout << "fresh labels:";
        for (Label l : res.fresh_labels) std::cout << ' ' << l;
        std::cout << "\n";
      }
      std::cout << format_report(res.instance_report);
      return 0;
    }
    case AdversaryOutcome::starved:
      std::cout << "starved at stage " << res.starved_stage
                << ": largest same-advice class too small to glue\n";
      return 1;
    case AdversaryOutcome::survived:
      std::cout << "survived: the assembled ring was still answered correctly\n";
      return 1;
  }
  return 2;
}

struct TableParams {
  std::string D_list = "64,256,1024";
  std::string alpha_list = "1/1";
  int rings = 3;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

int cmd_table(const TableParams& p) {
  const std::uint64_t seed = seed_or_env(p.seed, p.seed_given);
  std::vector<std::uint64_t> Ds;
  for (const auto& t : split_list(p.D_list)) Ds.push_back(std::stoull(t));
  std::vector<Rational> alphas;
  for (const auto& t : split_list(p.alpha_list)) alphas.push_back(parse_rational(t));

  std::cout << "task algo D alpha time advice_bits bound\n";
  Rng rng(seed);
  for (std::uint64_t D : Ds) {
    if (D < 2) throw std::invalid_argument("table needs D >= 2");
    const std::size_t n = 2 * D;  // even ring: diameter exactly D
    const std::uint64_t L = default_label_bound(n);
    std::vector<LabeledGraph> rings;
    for (int i = 0; i < p.rings; ++i) rings.push_back(random_ring(n, L, rng).graph);

    for (const Rational& alpha : alphas) {
      int max_time = 0;
      std::size_t max_bits = 0;
      for (const auto& g : rings) {
        auto rep = run(g, select_oracle(alpha, L), select_algorithm(alpha, L),
                       default_round_cap(g));
        if (!rep.selection_pass) {
          std::cout << "selection verdict failed at D=" << D << " alpha=" << alpha.str() << "\n";
          return 1;
        }
        max_time = std::max(max_time, rep.time);
        max_bits = std::max(max_bits, rep.advice_bits);
      }
      const std::size_t bound =
          select_advice_length_bound(floor_log2(D), alpha, L);
      std::cout << "selection select " << D << " " << alpha.str() << " " << max_time << " "
                << max_bits << " " << bound << "\n";
    }

    struct Scheme {
      const char* name;
      AdviceOracle oracle;
      AlgorithmUnderTest alg;
      std::size_t bound;
    };
    const Scheme schemes[] = {
        {"elect-max", elect_max_oracle(L), elect_max_algorithm(),
         static_cast<std::size_t>(ceil_log2(L))},
        {"elect-diam", elect_diam_oracle(), elect_diam_algorithm(),
         static_cast<std::size_t>(ceil_log2(D))},
        {"elect-stall", elect_stall_oracle(), elect_stall_algorithm(), 0},
    };
    for (const auto& s : schemes) {
      int max_time = 0;
      std::size_t max_bits = 0;
      for (const auto& g : rings) {
        auto rep = run(g, s.oracle, s.alg, default_round_cap(g) + 1);
        if (!rep.election_pass) {
          std::cout << "election verdict failed at D=" << D << " algo=" << s.name << "\n";
          return 1;
        }
        max_time = std::max(max_time, rep.time);
        max_bits = std::max(max_bits, rep.advice_bits);
      }
      std::cout << "election " << s.name << " " << D << " - " << max_time << " " << max_bits
                << " " << s.bound << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LOCAL-model advice lab: selection and election with advice on labeled graphs"};
  app.require_subcommand(1);

  GenParams gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate instance files plus a manifest");
  gen_cmd->add_option("--family", gen.family, "nested, epsilon, random-ring, random-graph")
      ->required();
  gen_cmd->add_option("--D", gen.D, "diameter parameter (nested, epsilon)");
  gen_cmd->add_option("--eps", gen.eps, "epsilon as p/q (epsilon family)");
  gen_cmd->add_option("--n", gen.n, "node count (random families)");
  auto* ee = gen_cmd->add_option("--extra-edges", gen.extra_edges,
                                 "extra edges beyond the spanning tree (random-graph)");
  gen_cmd->add_option("--L", gen.L, "label bound, 0 = automatic");
  auto* gseed = gen_cmd->add_option("--seed", gen.seed, "RNG seed (ADVICELAB_SEED fallback)");
  gen_cmd->add_option("--out", gen.out_dir, "output directory");

  RunParams runp;
  auto* run_cmd = app.add_subcommand("run", "Run an algorithm on an instance file");
  run_cmd->add_option("--instance", runp.instance_path, "instance file")->required();
  run_cmd->add_option("--algo", runp.algo, "select, elect-max, elect-diam, elect-stall")
      ->required();
  run_cmd->add_option("--alpha", runp.alpha, "time fraction p/q (select)");
  run_cmd->add_option("--L", runp.L, "label bound override, 0 = from instance");
  run_cmd->add_option("--cap", runp.cap, "round cap override");

  VerifyParams ver;
  auto* ver_cmd = app.add_subcommand("verify", "Check a structural claim, witness on failure");
  ver_cmd->add_option("--check", ver.check,
                      "legality, membership, nested, fat-count, fat-views, epsilon")
      ->required();
  ver_cmd->add_option("--L", ver.L, "label bound");
  ver_cmd->add_option("--beta", ver.beta, "tuple length");
  ver_cmd->add_option("--D", ver.D, "diameter parameter");
  ver_cmd->add_option("--eps", ver.eps, "epsilon as p/q");
  ver_cmd->add_option("--n", ver.n, "node count (fat-views)");
  ver_cmd->add_option("--pool", ver.pool, "label-set pool size (fat checks)");
  ver_cmd->add_option("--slots", ver.slots, "slot count (fat-count)");
  ver_cmd->add_option("--trials", ver.trials, "sampled trials, 0 = exhaustive (fat-views)");
  auto* vseed = ver_cmd->add_option("--seed", ver.seed, "RNG seed (ADVICELAB_SEED fallback)");

  AdversaryParams adv;
  auto* adv_cmd = app.add_subcommand("adversary", "Chop-and-glue search for a counterexample");
  adv_cmd->add_option("--algo", adv.algo, "local-max-noadvice or select");
  adv_cmd->add_option("--budget", adv.budget, "gluing stages");
  adv_cmd->add_option("--pool", adv.pool, "starting triangles");
  adv_cmd->add_option("--alpha", adv.alpha, "time fraction p/q (select)");
  adv_cmd->add_option("--L", adv.L, "label bound for select, 0 = automatic");
  adv_cmd->add_option("--out", adv.out, "counterexample output path");

  TableParams tab;
  auto* tab_cmd = app.add_subcommand("table", "Advice/time tradeoff table over seeded rings");
  tab_cmd->add_option("--D", tab.D_list, "comma-separated diameters");
  tab_cmd->add_option("--alpha", tab.alpha_list, "comma-separated fractions");
  tab_cmd->add_option("--rings", tab.rings, "rings per diameter");
  auto* tseed = tab_cmd->add_option("--seed", tab.seed, "RNG seed (ADVICELAB_SEED fallback)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  gen.seed_given = gseed->count() > 0;
  gen.extra_edges_given = ee->count() > 0;
  ver.seed_given = vseed->count() > 0;
  tab.seed_given = tseed->count() > 0;

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen);
    if (run_cmd->parsed()) return cmd_run(runp);
    if (ver_cmd->parsed()) return cmd_verify(ver);
    if (adv_cmd->parsed()) return cmd_adversary(adv);
    if (tab_cmd->parsed()) return cmd_table(tab);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
