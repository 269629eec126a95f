#include "qadv/gpm.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace qadv::qsim {

GraphSpec GraphSpec::path(size_t n) {
  GraphSpec g;
  g.n_vertices = n;
  for (size_t i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
  g.root = n / 2;
  return g;
}

GraphSpec GraphSpec::binary_tree(size_t n) {
  GraphSpec g;
  g.n_vertices = n;
  for (size_t i = 1; i < n; ++i) g.edges.push_back({(i - 1) / 2, i});
  g.root = 0;
  return g;
}

GraphSpec GraphSpec::grid3d(size_t n) {
  // near-cubic box holding n vertices; BFS spanning tree from the box centre
  size_t side = 1;
  while (side * side * side < n) ++side;
  auto id = [&](size_t x, size_t y, size_t z) { return (z * side + y) * side + x; };
  std::vector<size_t> keep;
  for (size_t i = 0; i < side * side * side && keep.size() < n; ++i) keep.push_back(i);
  std::vector<int> index_of(side * side * side, -1);
  for (size_t i = 0; i < keep.size(); ++i) index_of[keep[i]] = static_cast<int>(i);

  size_t c = side / 2;
  size_t start = id(std::min(c, side - 1), std::min(c, side - 1), std::min(c, side - 1));
  if (index_of[start] < 0) start = keep[0];

  GraphSpec g;
  g.n_vertices = n;
  std::vector<bool> seen(side * side * side, false);
  std::queue<size_t> q;
  q.push(start);
  seen[start] = true;
  const long long d3[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  while (!q.empty()) {
    size_t cur = q.front();
    q.pop();
    long long x = cur % side, y = (cur / side) % side, z = cur / (side * side);
    for (auto& d : d3) {
      long long nx = x + d[0], ny = y + d[1], nz = z + d[2];
      if (nx < 0 || ny < 0 || nz < 0 || nx >= (long long)side || ny >= (long long)side ||
          nz >= (long long)side)
        continue;
      size_t nb = id(nx, ny, nz);
      if (index_of[nb] < 0 || seen[nb]) continue;
      seen[nb] = true;
      g.edges.push_back({static_cast<size_t>(index_of[cur]), static_cast<size_t>(index_of[nb])});
      q.push(nb);
    }
  }
  g.root = static_cast<size_t>(index_of[start]);
  g.validate();
  // re-root at a tree centre
  size_t best = g.root, best_ecc = SIZE_MAX;
  for (size_t v = 0; v < n; ++v) {
    GraphSpec trial = g;
    trial.set_root(v);
    size_t e = trial.eccentricity();
    if (e < best_ecc) {
      best_ecc = e;
      best = v;
    }
  }
  g.set_root(best);
  return g;
}

GraphSpec GraphSpec::make(GraphKind kind, size_t n) {
  switch (kind) {
    case GraphKind::Path: return path(n);
    case GraphKind::BinaryTree: return binary_tree(n);
    case GraphKind::Grid3d: return grid3d(n);
  }
  throw std::invalid_argument("GraphSpec::make");
}

void GraphSpec::validate() const {
  if (edges.size() + 1 != n_vertices)
    throw DisconnectedGraph("GraphSpec: a tree needs n-1 edges");
  ensure_bfs();
  for (size_t v = 0; v < n_vertices; ++v)
    if (v != root && parent_[v] < 0)
      throw DisconnectedGraph("GraphSpec: disconnected vertex");
}

void GraphSpec::set_root(size_t r) {
  root = r;
  parent_.clear();
  parent_edge_.clear();
  depth_.clear();
}

void GraphSpec::ensure_bfs() const {
  if (!parent_.empty()) return;
  parent_.assign(n_vertices, -1);
  parent_edge_.assign(n_vertices, -1);
  depth_.assign(n_vertices, 0);
  std::vector<std::vector<std::pair<size_t, size_t>>> adj(n_vertices);  // (neighbor, edge idx)
  for (size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].first].push_back({edges[e].second, e});
    adj[edges[e].second].push_back({edges[e].first, e});
  }
  std::vector<bool> seen(n_vertices, false);
  std::queue<size_t> q;
  q.push(root);
  seen[root] = true;
  while (!q.empty()) {
    size_t v = q.front();
    q.pop();
    for (auto [w, e] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent_[w] = static_cast<int>(v);
      parent_edge_[w] = static_cast<int>(e);
      depth_[w] = depth_[v] + 1;
      q.push(w);
    }
  }
}

size_t GraphSpec::depth_of(size_t v) const {
  ensure_bfs();
  return depth_[v];
}

std::vector<size_t> GraphSpec::path_edge_indices(size_t v) const {
  ensure_bfs();
  std::vector<size_t> out;
  size_t cur = v;
  while (cur != root) {
    if (parent_[cur] < 0) throw DisconnectedGraph("path_edge_indices: disconnected");
    out.push_back(static_cast<size_t>(parent_edge_[cur]));
    cur = static_cast<size_t>(parent_[cur]);
  }
  return out;
}

size_t GraphSpec::eccentricity() const {
  ensure_bfs();
  size_t e = 0;
  for (size_t v = 0; v < n_vertices; ++v) e = std::max(e, depth_[v]);
  return e;
}

DitString gpm_reference_string(Prime p, const GraphSpec& g, const DitString& edge_outcomes,
                               uint8_t root_value) {
  if (edge_outcomes.size() != g.edges.size())
    throw LengthMismatch("gpm_reference_string: one outcome per edge");
  g.validate();
  std::vector<uint8_t> z(g.n_vertices, 0);
  for (size_t v = 0; v < g.n_vertices; ++v) {
    auto path = g.path_edge_indices(v);
    size_t len = path.size();
    long long acc = root_value;
    for (size_t t = 0; t < len; ++t) {
      int sign = ((t + len) % 2 == 0) ? 1 : -1;
      acc += sign * static_cast<long long>(edge_outcomes[path[t]]);
    }
    z[v] = static_cast<uint8_t>(mod_p(acc, p.value));
  }
  return DitString(p, std::move(z));
}

DitString gpm_edge_outcomes_from_reference(Prime p, const GraphSpec& g, const DitString& z) {
  std::vector<uint8_t> e(g.edges.size());
  for (size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    int su = (g.depth_of(u) % 2 == 0) ? 1 : -1;
    int sv = (g.depth_of(v) % 2 == 0) ? 1 : -1;
    e[i] = static_cast<uint8_t>(mod_p(su * static_cast<long long>(z[u]) +
                                          sv * static_cast<long long>(z[v]),
                                      p.value));
  }
  return DitString(p, std::move(e));
}

QupitState gpm_state_from_reference(Prime p, const DitString& z) {
  QupitState s(p, z.size());
  std::fill(s.amp.begin(), s.amp.end(), cplx(0.0, 0.0));
  double a = 1.0 / std::sqrt(static_cast<double>(p.value));
  for (int shift = 0; shift < p.value; ++shift) {
    size_t idx = 0, stride = 1;
    for (size_t i = 0; i < z.size(); ++i) {
      idx += static_cast<size_t>((z[i] + shift) % p.value) * stride;
      stride *= static_cast<size_t>(p.value);
    }
    s.amp[idx] = a;
  }
  return s;
}

GpmRecord build_gpm_state(Prime p, const GraphSpec& g, Rng& rng) {
  g.validate();
  size_t n = g.n_vertices, ne = g.edges.size();
  QupitState joint(p, n + ne);
  for (size_t v = 0; v < n; ++v) apply_gate(joint, gate_fourier(v));
  for (size_t e = 0; e < ne; ++e) {
    apply_gate(joint, gate_sum(g.edges[e].first, n + e));
    apply_gate(joint, gate_sum(g.edges[e].second, n + e));
  }
  std::vector<uint8_t> outcomes(ne);
  for (size_t e = 0; e < ne; ++e) outcomes[e] = measure_site(joint, n + e, rng);
  for (size_t v = 0; v < n; ++v)
    if (g.depth_of(v) % 2 == 1) apply_gate(joint, gate_inv(v));

  // edges are collapsed; slice out the vertex register
  QupitState vert(p, n);
  size_t vdim = vert.dim();
  size_t eoff = 0, stride = vdim;
  for (size_t e = 0; e < ne; ++e) {
    eoff += outcomes[e] * stride;
    stride *= static_cast<size_t>(p.value);
  }
  for (size_t i = 0; i < vdim; ++i) vert.amp[i] = joint.amp[eoff + i];
  vert.renormalize();

  DitString eo(p, outcomes);
  DitString z = gpm_reference_string(p, g, eo, 0);
  return {std::move(vert), std::move(eo), std::move(z)};
}

}  // namespace qadv::qsim
