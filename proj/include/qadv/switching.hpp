#pragma once

#include "qadv/bptf.hpp"
#include "qadv/core.hpp"
#include "qadv/dtree.hpp"

namespace qadv::classical {

// AND of literals; sign 1 keeps the variable, 0 negates it.
struct Clause {
  std::vector<int> vars;
  std::vector<uint8_t> signs;
  size_t width() const { return vars.size(); }
};

// Depth-2 object bPTF[k] o AND_w.
struct Depth2Bptf {
  size_t n = 0;
  BptfGate top;  // fan_in = clauses.size()
  std::vector<Clause> clauses;

  uint8_t evaluate(uint64_t x) const;
};

Depth2Bptf random_depth2(size_t n, size_t m_clauses, size_t w, int k, Rng& rng);

// Certificate of one canonical-decision-tree run (Def. A.4 shape): batch i
// queried clause clause_idx[i], the sizes[i] free positions listed in
// positions[i], and received answer bits answers[i].
struct TWitness {
  size_t r = 0;
  std::vector<size_t> clause_idx;
  std::vector<size_t> sizes;
  std::vector<std::vector<size_t>> positions;
  std::vector<uint64_t> answers;
  size_t size() const;  // sum of sizes
};

// One pass of the canonical decision tree on a concrete input: clauses are
// visited in listed order, skipping falsified ones; the free variables of the
// current clause are queried as a batch; the counter of satisfied clauses
// exits early through the saturated gate value at ctr == k; the final value
// evaluates the circuit with remaining stars set to 0.
struct CdtRun {
  size_t depth = 0;   // total variables queried
  uint8_t value = 0;
  TWitness witness;
};
CdtRun canonical_decision_tree(const Depth2Bptf& f, const Restriction& rho, uint64_t oracle_input);

// Worst case over oracle answers of the queried depth.
size_t cdt_depth(const Depth2Bptf& f, const Restriction& rho, size_t abort_above = 64);

// Truncation of a full-run witness to a t-witness (first batches reaching
// cumulative size >= t). Throws if the run is shallower than t.
TWitness truncate_witness(const TWitness& w, size_t t);

// Replays a witness against the circuit and restriction: the recorded batch
// structure must reproduce itself when the answers are fed back.
bool witness_replays(const Depth2Bptf& f, const Restriction& rho, const TWitness& w);

// Lemma A.9 check: for every extension (further fixing of stars) the
// canonical depth never exceeds the base depth bound l.
bool check_downward_closed(const Depth2Bptf& f, const Restriction& rho, size_t l,
                           size_t extension_count, Rng& rng);

struct SwitchEstimate {
  double estimate = 0.0;
  double bound = 0.0;
  bool ok = false;        // upper 3-sigma Wilson limit below the bound
  bool vacuous = false;   // bound >= 1
  long long failures = 0;
  long long trials = 0;
};

// Monte Carlo Pr[F restricted by a keep_prob-random restriction has canonical
// depth > t], against the (20 p w)^t 2^k bound.
SwitchEstimate empirical_switch_prob(const Depth2Bptf& f, double keep_prob, size_t t,
                                     long long trials, Rng& rng);

// Multi-circuit variant: greedy global tree over the family; failure when the
// worst-case global query count exceeds t before every member drops to
// canonical depth <= l. Bound m 2^k (80 w p)^t.
SwitchEstimate empirical_multi_switch_prob(const std::vector<Depth2Bptf>& fs, double keep_prob,
                                           size_t l, size_t t, long long trials, Rng& rng);

}  // namespace qadv::classical
