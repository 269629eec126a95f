// Experiment runner for the shallow-circuit advantage laboratory.

#include "CLI11.hpp"
#include "json.hpp"

#include "qadv/bptf.hpp"
#include "qadv/core.hpp"
#include "qadv/csvio.hpp"
#include "qadv/dtree.hpp"
#include "qadv/games.hpp"
#include "qadv/gpm.hpp"
#include "qadv/ismr_circuit.hpp"
#include "qadv/nndecomp.hpp"
#include "qadv/qec.hpp"
#include "qadv/resource.hpp"
#include "qadv/switching.hpp"
#include "qadv/teleport.hpp"

#include <bit>
#include <fstream>
#include <iostream>

using namespace qadv;
using nlohmann::json;

namespace {

DistKind parse_dist(const std::string& s) {
  if (s == "dit") return DistKind::UniformDitResidueZero;
  if (s == "binary") return DistKind::HammingEncodedUniformBinary;
  throw CLI::ValidationError("--dist", "expected 'dit' or 'binary'");
}

qsim::GraphKind parse_graph(const std::string& s) {
  if (s == "tree") return qsim::GraphKind::BinaryTree;
  if (s == "path") return qsim::GraphKind::Path;
  if (s == "grid3d") return qsim::GraphKind::Grid3d;
  throw CLI::ValidationError("--graph", "expected 'tree', 'path' or 'grid3d'");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int run_ismr_verify(int p, const std::string& x, const std::string& y) {
  DitString xs = DitString::from_ascii(Prime(2), x);
  DitString ys = DitString::from_ascii(Prime(2), y);
  IsmrInstance inst(Prime(p), xs.size(), ys.size());
  bool ok = ismr_verify(inst, xs, ys);
  json out{{"p", p},
           {"x", x},
           {"y", y},
           {"residue", ismr_residue(inst, xs)},
           {"valid", ok}};
  std::cout << out.dump() << "\n";
  return ok ? 0 : 1;
}

void run_game_brute(int p, size_t n, const std::string& dist, size_t r, uint64_t seed,
                    const std::string& out_path) {
  DistKind d = parse_dist(dist);
  Rng rng = make_rng(seed);
  std::vector<uint8_t> fixed(r);
  int base = (d == DistKind::UniformDitResidueZero) ? p : 2;
  for (auto& v : fixed) v = static_cast<uint8_t>(rng() % base);
  games::GameSpec game(Prime(p), n, d, fixed);
  auto res = games::optimal_classical_correlation_bruteforce(game);
  double bound = games::classical_correlation_upper_bound(Prime(p), game.symbol_count(), r, d);
  json out{{"p", p},
           {"n", n},
           {"dist", dist},
           {"r", r},
           {"b_star", res.best.offsets.to_ascii()},
           {"corr", res.value},
           {"bound", bound},
           {"satisfied", res.value <= bound + 1e-12}};
  if (p == 3)
    out["prob_bound"] = games::winning_probability_bound_p3(n, r, d);
  if (out_path.empty() || out_path == "-") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::ofstream f(out_path, std::ios::binary);
    f << out.dump(2) << "\n";
  }
}

void run_game_bound(int p, size_t n, size_t r, const std::string& dist) {
  DistKind d = parse_dist(dist);
  json out{{"p", p},
           {"n", n},
           {"r", r},
           {"dist", dist},
           {"corr_bound", games::classical_correlation_upper_bound(Prime(p), n, r, d)},
           {"corr_bound_re", games::classical_correlation_upper_bound_re(Prime(p), n, r, d)}};
  if (p == 3) out["prob_bound"] = games::winning_probability_bound_p3(n, r, d);
  std::cout << out.dump(2) << "\n";
}

void run_sim_php(size_t n, const std::string& graph, bool exhaustive, uint64_t seed,
                 const std::string& out_path) {
  qsim::GraphSpec g = qsim::GraphSpec::make(parse_graph(graph), n);
  std::string config = "sim-php --n=" + std::to_string(n) + " --graph=" + graph +
                       (exhaustive ? " --exhaustive" : "");
  io::CsvWriter csv(out_path, config, seed);
  csv.row({"x", "corr", "success_prob", "output_len"});
  Rng rng = make_rng(seed);
  auto run_one = [&](const DitString& x) {
    double invalid = qsim::php_invalid_mass_exact(x, g);
    size_t outlen = n;
    for (size_t i = 0; i < n; ++i) outlen += g.path_edge_indices(i).size();
    // p=2 correlation = 1 - 2 Pr[invalid]
    csv.row({x.to_ascii(), io::fmt(1.0 - 2.0 * invalid), io::fmt(1.0 - invalid),
             std::to_string(outlen)});
  };
  if (exhaustive) {
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
      if (std::popcount(mask) % 2) continue;
      std::vector<uint8_t> bits(n);
      for (size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1;
      run_one(DitString(Prime(2), bits));
    }
  } else {
    InputDistribution dist{DistKind::UniformBinaryResidueZero, n, Prime(2)};
    for (int t = 0; t < 16; ++t) run_one(sample_valid_input(dist, rng));
  }
}

void run_sim_qupit(int p, size_t n, const std::string& gadget, uint64_t seed,
                   const std::string& out_path) {
  qsim::GraphSpec g = qsim::GraphSpec::path(n);
  std::string config =
      "sim-qupit --p=" + std::to_string(p) + " --n=" + std::to_string(n) + " --gadget=" + gadget;
  io::CsvWriter csv(out_path, config, seed);
  csv.row({"x", "corr", "success_prob", "output_len"});
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
    if (std::popcount(mask) % p) continue;
    std::vector<uint8_t> bits(n);
    for (size_t i = 0; i < n; ++i) bits[i] = (mask >> i) & 1;
    DitString x(Prime(2), bits);
    std::vector<double> law = (gadget == "teleport")
                                  ? qsim::clifford_t_exact_deviation_law(Prime(p), x, g)
                                  : qsim::qupit_exact_deviation_law(Prime(p), x, g);
    size_t outlen = n;
    DitString edges = DitString::filled(Prime(p), g.edges.size());
    outlen = n + qsim::qupit_correction_dits(Prime(p), x, g, edges).size();
    csv.row({x.to_ascii(), io::fmt(qsim::correlation_of_law(Prime(p), law)), io::fmt(law[0]),
             std::to_string(outlen)});
  }
}

void run_switch(size_t w, int k, double keep, size_t t, long long trials, size_t m, size_t n,
                uint64_t seed, const std::string& out_path) {
  Rng rng = make_rng(seed);
  std::string config = "switch-empirical --w=" + std::to_string(w) + " --k=" + std::to_string(k) +
                       " --keep=" + io::fmt(keep) + " --t=" + std::to_string(t) +
                       " --trials=" + std::to_string(trials) + " --m=" + std::to_string(m) +
                       " --n=" + std::to_string(n);
  io::CsvWriter csv(out_path, config, seed);
  csv.row({"mode", "estimate", "bound", "vacuous", "ok", "failures", "trials"});
  classical::Depth2Bptf f = classical::random_depth2(n, 8, w, k, rng);
  auto est = classical::empirical_switch_prob(f, keep, t, trials, rng);
  csv.row({"single", io::fmt(est.estimate), io::fmt(est.bound), est.vacuous ? "1" : "0",
           est.ok ? "1" : "0", std::to_string(est.failures), std::to_string(est.trials)});
  if (m > 1) {
    std::vector<classical::Depth2Bptf> fam;
    for (size_t i = 0; i < m; ++i) fam.push_back(classical::random_depth2(n, 6, w, k, rng));
    auto multi = classical::empirical_multi_switch_prob(fam, keep, t, t + 2, trials / 10 + 1, rng);
    csv.row({"multi", io::fmt(multi.estimate), io::fmt(multi.bound), multi.vacuous ? "1" : "0",
             multi.ok ? "1" : "0", std::to_string(multi.failures), std::to_string(multi.trials)});
  }
}

void run_anf(const std::string& tree_path) {
  std::ifstream f(tree_path);
  if (!f) throw std::runtime_error("cannot open tree file: " + tree_path);
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  classical::DTree tree = classical::tree_from_json(text);
  classical::Anf anf = classical::dt_to_anf(tree);
  json monos = json::array();
  for (uint64_t mask : anf.monomials) {
    json vars = json::array();
    for (int i = 0; i < 64; ++i)
      if ((mask >> i) & 1) vars.push_back(i);
    monos.push_back(vars);
  }
  std::cout << json{{"monomials", monos}, {"degree", anf.degree()}}.dump(2) << "\n";
}

void run_qec_threshold(int p, const std::string& l_list, const std::string& tau_list,
                       long long trials, uint64_t seed, const std::string& out_path) {
  std::string config = "qec-threshold --p=" + std::to_string(p) + " --L-list=" + l_list +
                       " --tau-list=" + tau_list + " --trials=" + std::to_string(trials);
  io::CsvWriter csv(out_path, config, seed);
  csv.row({"p", "L", "tau", "trials", "failures", "rate", "ci_low", "ci_high"});
  uint64_t task = 0;
  for (const std::string& ls : split_list(l_list)) {
    size_t L = std::stoul(ls);
    qec::SurfaceLattice lat(Prime(p), L);
    for (const std::string& ts : split_list(tau_list)) {
      double tau = std::stod(ts);
      Rng rng = make_rng(seed, task++);
      auto res = qec::monte_carlo_failure(lat, tau, trials, rng);
      csv.row({std::to_string(p), std::to_string(L), io::fmt(tau), std::to_string(res.trials),
               std::to_string(res.failures), io::fmt(res.rate), io::fmt(res.ci.lo),
               io::fmt(res.ci.hi)});
    }
  }
}

void run_nn_decompose(const std::string& activation, double c, double w, int k, size_t n,
                      const std::string& out_path) {
  if (activation != "relu") throw CLI::ValidationError("--activation", "only 'relu' is built in");
  nn::ActivationSpec spec = nn::relu_spec(c, w, k, n);
  auto d = nn::decompose_activation(spec);
  json gates = json::array();
  for (const auto& g : d.gates) {
    json fires = json::array();
    for (int t = 0; t <= k; ++t)
      if (g.fires_at_weight[t]) fires.push_back(t);
    gates.push_back({{"fires_at_weights", fires}, {"tail_above", k}});
  }
  // verification report: exhaustive over the bounded region
  bool ok = true;
  size_t ncheck = std::min<size_t>(n, 16);
  for (uint64_t x = 0; x < (uint64_t(1) << ncheck) && ok; ++x) {
    int weight = std::popcount(x);
    if (weight > k) continue;
    ok = std::abs(nn::eval_krelu(d, spec, x) - w * std::floor(spec.f(weight) / w)) < 1e-12;
  }
  json out{{"activation", activation}, {"c", c},           {"w", w},  {"k", k},
           {"n", n},                   {"gate_count", d.l}, {"gates", gates},
           {"verified_bounded_region", ok}};
  if (out_path.empty() || out_path == "-") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::ofstream f(out_path, std::ios::binary);
    f << out.dump(2) << "\n";
  }
}

void run_resource(const std::string& formula, int d, double cq, double clower) {
  resource::CrossoverModel m;
  if (formula == "exact-ac0") m.formula = resource::BoundFormula::ExactAc0;
  else if (formula == "exact-bptf") m.formula = resource::BoundFormula::ExactBptf;
  else if (formula == "average-bptf") m.formula = resource::BoundFormula::AverageBptf;
  else throw CLI::ValidationError("--formula", "exact-ac0 | exact-bptf | average-bptf");
  m.d = d;
  m.c_q = cq;
  m.c_lower = clower;
  auto c = resource::resource_crossover(m);
  json out{{"formula", formula}, {"d", d},           {"c_q", cq},
           {"c_lower", clower},  {"log10_n", c.log10_n}, {"n_star", c.n}};
  std::cout << out.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shallow-circuit quantum advantage laboratory"};
  app.require_subcommand(1);

  uint64_t seed = 0;
  std::string out_path;

  // ismr-verify
  auto* verify = app.add_subcommand("ismr-verify", "check a relation instance");
  int vp = 2;
  std::string vx, vy;
  verify->add_option("--p", vp)->required();
  verify->add_option("--x", vx)->required();
  verify->add_option("--y", vy)->required();

  // game-brute
  auto* brute = app.add_subcommand("game-brute", "brute-force classical game optimum");
  int gp = 3;
  size_t gn = 4, gr = 0;
  std::string gdist = "dit";
  brute->add_option("--p", gp)->required();
  brute->add_option("--n", gn)->required();
  brute->add_option("--dist", gdist);
  brute->add_option("--r", gr);
  brute->add_option("--seed", seed)->required();
  brute->add_option("--out", out_path);

  // game-bound
  auto* gbound = app.add_subcommand("game-bound", "closed-form correlation bound");
  int bp = 3;
  size_t bn = 4, br = 0;
  std::string bdist = "dit";
  gbound->add_option("--p", bp)->required();
  gbound->add_option("--n", bn)->required();
  gbound->add_option("--dist", bdist);
  gbound->add_option("--r", br);

  // sim-php
  auto* php = app.add_subcommand("sim-php", "exact qubit PHP circuit laws");
  size_t pn = 4;
  std::string pgraph = "tree";
  bool pexh = false;
  php->add_option("--n", pn)->required();
  php->add_option("--graph", pgraph);
  php->add_flag("--exhaustive", pexh);
  php->add_option("--seed", seed)->required();
  php->add_option("--out", out_path);

  // sim-qupit
  auto* qupit = app.add_subcommand("sim-qupit", "qupit ISMR circuit laws");
  int qp = 3;
  size_t qn = 3;
  std::string qgadget = "direct";
  qupit->add_option("--p", qp)->required();
  qupit->add_option("--n", qn)->required();
  qupit->add_option("--gadget", qgadget);
  qupit->add_option("--seed", seed)->required();
  qupit->add_option("--out", out_path);

  // switch-empirical
  auto* sw = app.add_subcommand("switch-empirical", "Monte Carlo switching-lemma check");
  size_t sw_w = 2, sw_t = 3, sw_m = 1, sw_n = 24;
  int sw_k = 0;
  double sw_keep = 0.01;
  long long sw_trials = 100000;
  sw->add_option("--w", sw_w)->required();
  sw->add_option("--k", sw_k)->required();
  sw->add_option("--keep", sw_keep)->required();
  sw->add_option("--t", sw_t)->required();
  sw->add_option("--trials", sw_trials)->required();
  sw->add_option("--m", sw_m);
  sw->add_option("--n", sw_n);
  sw->add_option("--seed", seed)->required();
  sw->add_option("--out", out_path);

  // anf
  auto* anf = app.add_subcommand("anf", "decision tree to ANF");
  std::string tree_path;
  anf->add_option("--tree", tree_path)->required();

  // qec-threshold
  auto* qec_cmd = app.add_subcommand("qec-threshold", "surface-code failure rates");
  int qec_p = 3;
  std::string llist = "3,5,7", taulist = "0.005";
  long long qtrials = 100000;
  qec_cmd->add_option("--p", qec_p)->required();
  qec_cmd->add_option("--L-list", llist)->required();
  qec_cmd->add_option("--tau-list", taulist)->required();
  qec_cmd->add_option("--trials", qtrials)->required();
  qec_cmd->add_option("--seed", seed)->required();
  qec_cmd->add_option("--out", out_path);

  // nn-decompose
  auto* nn_cmd = app.add_subcommand("nn-decompose", "activation to bPTF layer");
  std::string act = "relu";
  double nc = 1.0, nw = 1.0;
  int nk = 3;
  size_t nn_n = 8;
  nn_cmd->add_option("--activation", act);
  nn_cmd->add_option("--c", nc);
  nn_cmd->add_option("--w", nw);
  nn_cmd->add_option("--k", nk);
  nn_cmd->add_option("--n", nn_n);
  nn_cmd->add_option("--out", out_path);

  // resource-estimate
  auto* res = app.add_subcommand("resource-estimate", "classical/quantum crossover size");
  std::string formula = "exact-ac0";
  int rd = 3;
  double rcq = 1.0, rcl = 4.0;
  res->add_option("--formula", formula);
  res->add_option("--d", rd);
  res->add_option("--cq", rcq);
  res->add_option("--clower", rcl);

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return run_ismr_verify(vp, vx, vy);
    if (brute->parsed()) run_game_brute(gp, gn, gdist, gr, seed, out_path);
    if (gbound->parsed()) run_game_bound(bp, bn, br, bdist);
    if (php->parsed()) run_sim_php(pn, pgraph, pexh, seed, out_path);
    if (qupit->parsed()) run_sim_qupit(qp, qn, qgadget, seed, out_path);
    if (sw->parsed()) run_switch(sw_w, sw_k, sw_keep, sw_t, sw_trials, sw_m, sw_n, seed, out_path);
    if (anf->parsed()) run_anf(tree_path);
    if (qec_cmd->parsed()) run_qec_threshold(qec_p, llist, taulist, qtrials, seed, out_path);
    if (nn_cmd->parsed()) run_nn_decompose(act, nc, nw, nk, nn_n, out_path);
    if (res->parsed()) run_resource(formula, rd, rcq, rcl);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
