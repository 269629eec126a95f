#include "qadv/dtree.hpp"

#include "json.hpp"

namespace qadv::classical {

size_t Restriction::star_count() const {
  size_t c = 0;
  for (Mark m : marks) c += (m == Star);
  return c;
}

Restriction Restriction::then(const Restriction& tau) const {
  if (tau.marks.size() != marks.size())
    throw LengthMismatch("Restriction::then: size mismatch");
  Restriction r = *this;
  for (size_t i = 0; i < marks.size(); ++i)
    if (r.marks[i] == Star) r.marks[i] = tau.marks[i];
  return r;
}

uint64_t Restriction::fill(uint64_t alive_bits) const {
  uint64_t x = 0;
  size_t pos = 0;
  for (size_t i = 0; i < marks.size(); ++i) {
    uint64_t b = (marks[i] == Star) ? ((alive_bits >> pos++) & 1) : uint64_t(marks[i]);
    x |= b << i;
  }
  return x;
}

Restriction sample_restriction(size_t n, double keep_prob, Rng& rng) {
  if (keep_prob <= 0.0 || keep_prob >= 1.0)
    throw std::invalid_argument("sample_restriction: keep_prob in (0,1)");
  Restriction r(n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (size_t i = 0; i < n; ++i) {
    if (u(rng) < keep_prob)
      r.marks[i] = Restriction::Star;
    else
      r.marks[i] = (rng() & 1) ? Restriction::One : Restriction::Zero;
  }
  return r;
}

DTree DTree::leaf(uint8_t bit) {
  DTree t;
  t.nodes.push_back({-1, -1, -1, bit});
  t.root = 0;
  return t;
}

DTree DTree::split(int var, DTree when_one, DTree when_zero) {
  DTree t;
  int one_root = when_one.root;
  t.nodes = std::move(when_one.nodes);
  int offset = static_cast<int>(t.nodes.size());
  for (auto n : when_zero.nodes) {
    if (n.var >= 0) {
      n.left += offset;
      n.right += offset;
    }
    t.nodes.push_back(n);
  }
  t.nodes.push_back({var, one_root, when_zero.root + offset, 0});
  t.root = static_cast<int>(t.nodes.size()) - 1;
  return t;
}

bool DTree::evaluate(uint64_t x) const {
  int cur = root;
  while (nodes[cur].var >= 0)
    cur = ((x >> nodes[cur].var) & 1) ? nodes[cur].left : nodes[cur].right;
  return nodes[cur].leaf;
}

int DTree::depth_of(int node) const {
  if (nodes[node].var < 0) return 0;
  return 1 + std::max(depth_of(nodes[node].left), depth_of(nodes[node].right));
}

int DTree::depth() const { return depth_of(root); }

static int restrict_node(const DTree& t, int node, const Restriction& rho, DTree& out) {
  const auto& n = t.nodes[node];
  if (n.var < 0) {
    out.nodes.push_back(n);
    return static_cast<int>(out.nodes.size()) - 1;
  }
  if (rho.fixed(static_cast<size_t>(n.var))) {
    int next = (rho.marks[n.var] == Restriction::One) ? n.left : n.right;
    return restrict_node(t, next, rho, out);
  }
  int l = restrict_node(t, n.left, rho, out);
  int r = restrict_node(t, n.right, rho, out);
  out.nodes.push_back({n.var, l, r, 0});
  return static_cast<int>(out.nodes.size()) - 1;
}

DTree restrict_tree(const DTree& t, const Restriction& rho) {
  DTree out;
  out.root = restrict_node(t, t.root, rho, out);
  return out;
}

static void collect_clauses(const DTree& t, int node, const Anf& path, std::vector<Anf>& out) {
  const auto& n = t.nodes[node];
  if (n.var < 0) {
    if (n.leaf) out.push_back(path);
    return;
  }
  collect_clauses(t, n.left, path & Anf::variable(n.var), out);
  collect_clauses(t, n.right, path & (Anf::variable(n.var) ^ Anf::constant(true)), out);
}

Anf dt_to_anf(const DTree& t) {
  std::vector<Anf> clauses;
  collect_clauses(t, t.root, Anf::constant(true), clauses);
  Anf acc;  // false
  for (const Anf& c : clauses) acc = acc ^ c ^ (acc & c);  // acc OR c
  return acc;
}

static DTree random_subtree(const std::vector<int>& avail, int depth, double leaf_prob, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (depth == 0 || avail.empty() || u(rng) < leaf_prob)
    return DTree::leaf(static_cast<uint8_t>(rng() & 1));
  size_t pick = rng() % avail.size();
  std::vector<int> rest;
  for (size_t i = 0; i < avail.size(); ++i)
    if (i != pick) rest.push_back(avail[i]);
  DTree one = random_subtree(rest, depth - 1, leaf_prob, rng);
  DTree zero = random_subtree(rest, depth - 1, leaf_prob, rng);
  return DTree::split(avail[pick], std::move(one), std::move(zero));
}

DTree random_tree(size_t n, int depth, double leaf_prob, Rng& rng) {
  std::vector<int> avail(n);
  for (size_t i = 0; i < n; ++i) avail[i] = static_cast<int>(i);
  return random_subtree(avail, depth, leaf_prob, rng);
}

static nlohmann::json node_to_json(const DTree& t, int node) {
  const auto& n = t.nodes[node];
  if (n.var < 0) return nlohmann::json{{"bit", int(n.leaf)}};
  return nlohmann::json{
      {"var", n.var}, {"left", node_to_json(t, n.left)}, {"right", node_to_json(t, n.right)}};
}

std::string tree_to_json(const DTree& t) { return node_to_json(t, t.root).dump(); }

static DTree node_from_json(const nlohmann::json& j) {
  if (j.contains("bit")) return DTree::leaf(static_cast<uint8_t>(j["bit"].get<int>()));
  return DTree::split(j["var"].get<int>(), node_from_json(j["left"]), node_from_json(j["right"]));
}

DTree tree_from_json(const std::string& json) {
  return node_from_json(nlohmann::json::parse(json));
}

}  // namespace qadv::classical
