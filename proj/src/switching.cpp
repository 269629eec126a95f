#include "qadv/switching.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qadv::classical {

uint8_t Depth2Bptf::evaluate(uint64_t x) const {
  uint64_t wires = 0;
  for (size_t j = 0; j < clauses.size(); ++j) {
    uint8_t v = 1;
    for (size_t t = 0; t < clauses[j].vars.size(); ++t) {
      uint8_t bit = (x >> clauses[j].vars[t]) & 1;
      if (bit != clauses[j].signs[t]) {
        v = 0;
        break;
      }
    }
    wires |= uint64_t(v) << j;
  }
  return eval_bptf_gate(top, wires, clauses.size());
}

Depth2Bptf random_depth2(size_t n, size_t m_clauses, size_t w, int k, Rng& rng) {
  Depth2Bptf f;
  f.n = n;
  for (size_t j = 0; j < m_clauses; ++j) {
    Clause c;
    size_t width = 1 + rng() % w;
    std::vector<int> pool(n);
    for (size_t i = 0; i < n; ++i) pool[i] = static_cast<int>(i);
    for (size_t t = 0; t < width && !pool.empty(); ++t) {
      size_t pick = rng() % pool.size();
      c.vars.push_back(pool[pick]);
      c.signs.push_back(rng() & 1);
      pool.erase(pool.begin() + pick);
    }
    f.clauses.push_back(std::move(c));
  }
  f.top = random_bptf_gate(BptfKind::OrType, k, m_clauses, rng);
  return f;
}

size_t TWitness::size() const {
  size_t s = 0;
  for (size_t v : sizes) s += v;
  return s;
}

namespace {

// clause status under a partial assignment (-1 = star)
enum class ClauseState { Falsified, Satisfied, Open };

ClauseState clause_state(const Clause& c, const std::vector<int8_t>& assign) {
  bool open = false;
  for (size_t t = 0; t < c.vars.size(); ++t) {
    int8_t v = assign[c.vars[t]];
    if (v < 0)
      open = true;
    else if (v != c.signs[t])
      return ClauseState::Falsified;
  }
  return open ? ClauseState::Open : ClauseState::Satisfied;
}

uint8_t finish_value(const Depth2Bptf& f, std::vector<int8_t> assign) {
  uint64_t x = 0;
  for (size_t i = 0; i < f.n; ++i)
    if (assign[i] == 1) x |= uint64_t(1) << i;  // stars become 0
  return f.evaluate(x);
}

}  // namespace

CdtRun canonical_decision_tree(const Depth2Bptf& f, const Restriction& rho,
                               uint64_t oracle_input) {
  if (rho.marks.size() != f.n) throw LengthMismatch("canonical_decision_tree: rho size");
  std::vector<int8_t> assign(f.n, -1);
  for (size_t i = 0; i < f.n; ++i)
    if (rho.fixed(i)) assign[i] = static_cast<int8_t>(rho.marks[i]);

  CdtRun run;
  int ctr = 0;
  size_t jstar = 0;
  while (jstar < f.clauses.size()) {
    // next clause not identically false under the current assignment
    size_t j = jstar;
    while (j < f.clauses.size() && clause_state(f.clauses[j], assign) == ClauseState::Falsified)
      ++j;
    if (j == f.clauses.size()) break;
    const Clause& c = f.clauses[j];
    std::vector<size_t> batch_pos;
    uint64_t answers = 0;
    for (size_t t = 0; t < c.vars.size(); ++t) {
      if (assign[c.vars[t]] >= 0) continue;
      uint8_t bit = (oracle_input >> c.vars[t]) & 1;
      answers |= uint64_t(bit) << batch_pos.size();
      batch_pos.push_back(t);
      assign[c.vars[t]] = static_cast<int8_t>(bit);
      run.depth += 1;
    }
    run.witness.clause_idx.push_back(j);
    run.witness.sizes.push_back(batch_pos.size());
    run.witness.positions.push_back(batch_pos);
    run.witness.answers.push_back(answers);
    run.witness.r += 1;
    if (clause_state(c, assign) == ClauseState::Satisfied) {
      ctr += 1;
      if (ctr == f.top.k) {
        run.value = eval_bptf_gate(f.top, ~uint64_t(0) >> (64 - f.clauses.size()),
                                   f.clauses.size());
        return run;
      }
    }
    jstar = j + 1;
  }
  run.value = finish_value(f, assign);
  return run;
}

namespace {

size_t cdt_depth_rec(const Depth2Bptf& f, std::vector<int8_t>& assign, size_t jstar, int ctr,
                     size_t abort_above) {
  size_t j = jstar;
  while (j < f.clauses.size() && clause_state(f.clauses[j], assign) == ClauseState::Falsified)
    ++j;
  if (j == f.clauses.size()) return 0;
  const Clause& c = f.clauses[j];
  std::vector<size_t> free_pos;
  for (size_t t = 0; t < c.vars.size(); ++t)
    if (assign[c.vars[t]] < 0) free_pos.push_back(t);
  size_t s = free_pos.size();
  if (s > 26) throw TooLarge("cdt_depth: batch too large to enumerate");

  size_t worst = 0;
  for (uint64_t a = 0; a < (uint64_t(1) << s); ++a) {
    for (size_t t = 0; t < s; ++t)
      assign[c.vars[free_pos[t]]] = static_cast<int8_t>((a >> t) & 1);
    int nctr = ctr;
    bool exited = false;
    if (clause_state(c, assign) == ClauseState::Satisfied) {
      nctr += 1;
      if (nctr == f.top.k) exited = true;
    }
    size_t rest = exited ? 0 : cdt_depth_rec(f, assign, j + 1, nctr, abort_above);
    worst = std::max(worst, s + rest);
    for (size_t t = 0; t < s; ++t) assign[c.vars[free_pos[t]]] = -1;
    if (worst > abort_above) break;
  }
  return worst;
}

}  // namespace

size_t cdt_depth(const Depth2Bptf& f, const Restriction& rho, size_t abort_above) {
  std::vector<int8_t> assign(f.n, -1);
  for (size_t i = 0; i < f.n; ++i)
    if (rho.fixed(i)) assign[i] = static_cast<int8_t>(rho.marks[i]);
  return cdt_depth_rec(f, assign, 0, 0, abort_above);
}

TWitness truncate_witness(const TWitness& w, size_t t) {
  TWitness out;
  size_t acc = 0;
  for (size_t i = 0; i < w.r; ++i) {
    out.clause_idx.push_back(w.clause_idx[i]);
    out.sizes.push_back(w.sizes[i]);
    out.positions.push_back(w.positions[i]);
    out.answers.push_back(w.answers[i]);
    out.r += 1;
    acc += w.sizes[i];
    if (acc >= t) return out;
  }
  throw std::invalid_argument("truncate_witness: run shallower than t");
}

bool witness_replays(const Depth2Bptf& f, const Restriction& rho, const TWitness& w) {
  // feed the recorded answers back through the batch procedure
  std::vector<int8_t> assign(f.n, -1);
  for (size_t i = 0; i < f.n; ++i)
    if (rho.fixed(i)) assign[i] = static_cast<int8_t>(rho.marks[i]);
  size_t jstar = 0;
  for (size_t b = 0; b < w.r; ++b) {
    size_t j = jstar;
    while (j < f.clauses.size() && clause_state(f.clauses[j], assign) == ClauseState::Falsified)
      ++j;
    if (j != w.clause_idx[b]) return false;
    const Clause& c = f.clauses[j];
    std::vector<size_t> free_pos;
    for (size_t t = 0; t < c.vars.size(); ++t)
      if (assign[c.vars[t]] < 0) free_pos.push_back(t);
    if (free_pos.size() != w.sizes[b]) return false;
    for (size_t t = 0; t < free_pos.size(); ++t) {
      if (free_pos[t] != w.positions[b][t]) return false;
      assign[c.vars[free_pos[t]]] = static_cast<int8_t>((w.answers[b] >> t) & 1);
    }
    jstar = j + 1;
  }
  return true;
}

bool check_downward_closed(const Depth2Bptf& f, const Restriction& rho, size_t l,
                           size_t extension_count, Rng& rng) {
  if (cdt_depth(f, rho) > l) throw std::invalid_argument("check_downward_closed: base depth > l");
  for (size_t t = 0; t < extension_count; ++t) {
    Restriction ext = rho;
    for (size_t i = 0; i < f.n; ++i)
      if (!ext.fixed(i) && (rng() & 1))
        ext.marks[i] = (rng() & 1) ? Restriction::One : Restriction::Zero;
    if (cdt_depth(f, ext) > l) return false;
  }
  return true;
}

SwitchEstimate empirical_switch_prob(const Depth2Bptf& f, double keep_prob, size_t t,
                                     long long trials, Rng& rng) {
  size_t w = 0;
  for (const auto& c : f.clauses) w = std::max(w, c.width());
  SwitchEstimate est;
  est.bound = std::pow(20.0 * keep_prob * static_cast<double>(w), static_cast<double>(t)) *
              std::pow(2.0, f.top.k);
  est.vacuous = est.bound >= 1.0;
  est.trials = trials;
  for (long long i = 0; i < trials; ++i) {
    Restriction rho = sample_restriction(f.n, keep_prob, rng);
    if (cdt_depth(f, rho, t) > t) est.failures += 1;
  }
  est.estimate = static_cast<double>(est.failures) / trials;
  auto ci = wilson_interval(est.failures, trials, 3.0);
  est.ok = !est.vacuous && ci.hi <= est.bound;
  return est;
}

namespace {

Restriction restriction_of(const std::vector<int8_t>& assign) {
  Restriction r(assign.size());
  for (size_t i = 0; i < assign.size(); ++i)
    if (assign[i] >= 0) r.marks[i] = assign[i] ? Restriction::One : Restriction::Zero;
  return r;
}

// worst-case global query count of the greedy forest construction: every
// circuit must drop to canonical depth <= l; the global tree queries the
// canonical batches of the first offender and recurses over its answers
size_t global_depth_rec(const std::vector<Depth2Bptf>& fs, std::vector<int8_t>& assign, size_t l,
                        size_t abort_above);

size_t global_expand_circuit(const std::vector<Depth2Bptf>& fs, std::vector<int8_t>& assign,
                             size_t bad, size_t jstar, int ctr, size_t l, size_t abort_above) {
  const Depth2Bptf& f = fs[bad];
  size_t j = jstar;
  while (j < f.clauses.size() && clause_state(f.clauses[j], assign) == ClauseState::Falsified)
    ++j;
  if (j == f.clauses.size()) return global_depth_rec(fs, assign, l, abort_above);
  const Clause& c = f.clauses[j];
  std::vector<size_t> free_pos;
  for (size_t t = 0; t < c.vars.size(); ++t)
    if (assign[c.vars[t]] < 0) free_pos.push_back(t);
  size_t s = free_pos.size();
  if (s > 26) throw TooLarge("global_depth: batch too large to enumerate");
  size_t worst = 0;
  for (uint64_t a = 0; a < (uint64_t(1) << s); ++a) {
    for (size_t t = 0; t < s; ++t)
      assign[c.vars[free_pos[t]]] = static_cast<int8_t>((a >> t) & 1);
    int nctr = ctr;
    bool exited = false;
    if (clause_state(c, assign) == ClauseState::Satisfied) {
      nctr += 1;
      if (nctr == f.top.k) exited = true;
    }
    size_t rest = exited ? global_depth_rec(fs, assign, l, abort_above)
                         : global_expand_circuit(fs, assign, bad, j + 1, nctr, l, abort_above);
    worst = std::max(worst, s + rest);
    for (size_t t = 0; t < s; ++t) assign[c.vars[free_pos[t]]] = -1;
    if (worst > abort_above) break;
  }
  return worst;
}

size_t global_depth_rec(const std::vector<Depth2Bptf>& fs, std::vector<int8_t>& assign, size_t l,
                        size_t abort_above) {
  Restriction rho = restriction_of(assign);
  for (size_t i = 0; i < fs.size(); ++i) {
    if (cdt_depth(fs[i], rho, std::max(l, abort_above)) <= l) continue;
    return global_expand_circuit(fs, assign, i, 0, 0, l, abort_above);
  }
  return 0;
}

}  // namespace

SwitchEstimate empirical_multi_switch_prob(const std::vector<Depth2Bptf>& fs, double keep_prob,
                                           size_t l, size_t t, long long trials, Rng& rng) {
  size_t w = 0;
  for (const auto& f : fs)
    for (const auto& c : f.clauses) w = std::max(w, c.width());
  int k = fs.empty() ? 0 : fs.front().top.k;
  SwitchEstimate est;
  est.bound = static_cast<double>(fs.size()) * std::pow(2.0, k) *
              std::pow(80.0 * keep_prob * static_cast<double>(w), static_cast<double>(t));
  est.vacuous = est.bound >= 1.0;
  est.trials = trials;
  size_t n = fs.empty() ? 0 : fs.front().n;
  for (long long i = 0; i < trials; ++i) {
    Restriction rho = sample_restriction(n, keep_prob, rng);
    std::vector<int8_t> assign(n, -1);
    for (size_t v = 0; v < n; ++v)
      if (rho.fixed(v)) assign[v] = static_cast<int8_t>(rho.marks[v]);
    if (global_depth_rec(fs, assign, l, t) > t) est.failures += 1;
  }
  est.estimate = static_cast<double>(est.failures) / trials;
  auto ci = wilson_interval(est.failures, trials, 3.0);
  est.ok = !est.vacuous && ci.hi <= est.bound;
  return est;
}

}  // namespace qadv::classical
