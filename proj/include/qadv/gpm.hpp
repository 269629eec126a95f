#pragma once

#include "qadv/core.hpp"
#include "qadv/qsim.hpp"

namespace qadv::qsim {

struct DisconnectedGraph : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GraphKind { Path, BinaryTree, Grid3d };

// Tree over the input qupits; one ancilla qupit per edge. The root is the
// tree centre (minimizes the maximum distance to any vertex) unless overridden.
struct GraphSpec {
  size_t n_vertices = 0;
  std::vector<std::pair<size_t, size_t>> edges;
  size_t root = 0;

  static GraphSpec path(size_t n);
  static GraphSpec binary_tree(size_t n);
  static GraphSpec grid3d(size_t n);  // BFS spanning tree of a near-cubic grid
  static GraphSpec make(GraphKind kind, size_t n);

  void validate() const;  // connected and acyclic
  size_t depth_of(size_t v) const;                   // distance to root
  std::vector<size_t> path_edge_indices(size_t v) const;  // v up to root
  size_t eccentricity() const;                       // max distance to root
  void set_root(size_t r);

 private:
  mutable std::vector<int> parent_;       // parent vertex, -1 at root
  mutable std::vector<int> parent_edge_;  // edge index to parent
  mutable std::vector<size_t> depth_;
  void ensure_bfs() const;
};

// Generalized poor-man's cat state (1/sqrt(p)) sum_i |z^{+i}> plus the
// classical data that pins down z.
struct GpmRecord {
  QupitState state;        // vertex qupits only
  DitString edge_outcomes; // measured edge ancillas, in edge order
  DitString reference;     // z with z_root = 0
};

// z_u from the edge outcomes: alternating signed sum along the path to the
// root, z_u = sum_t (-1)^{t+len} e_t + rootValue, where t indexes edges from
// u and len is the path length.
DitString gpm_reference_string(Prime p, const GraphSpec& g, const DitString& edge_outcomes,
                               uint8_t root_value = 0);

// Inverse direction: edge value from a reference string,
// e_{uv} = (-1)^{depth(u)} z_u + (-1)^{depth(v)} z_v.
DitString gpm_edge_outcomes_from_reference(Prime p, const GraphSpec& g, const DitString& z);

// Runs the preparation circuit (Fourier layer, SUM onto edge ancillas, edge
// measurement, INV on odd-depth vertices) on a full joint statevector.
GpmRecord build_gpm_state(Prime p, const GraphSpec& g, Rng& rng);

// The state (1/sqrt(p)) sum_i |z^{+i}> written down directly.
QupitState gpm_state_from_reference(Prime p, const DitString& z);

}  // namespace qadv::qsim
