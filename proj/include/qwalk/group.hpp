#pragma once

// Dihedral group D_{2n} = <a, b | a^n = b^2 = e, bab = a^{-1}>, its Cayley
// graph for the generating set S = {a, a^{-1}, b}, and the two-block
// semi-Cayley graph SC(Z_n; {1, n-1}, {1, n-1}, {0}) it is isomorphic to.
//
// Vertex indices 0..2n-1 follow the semi-Cayley block ordering: block 0 holds
// the rotation residues, block 1 the reflection residues.

#include <array>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qwalk {

// Vertex of the semi-Cayley graph: index i in [0, 2n), block i / n, residue i mod n.
class VertexIndex {
 public:
  VertexIndex(int n, int index);
  static VertexIndex from_parts(int n, int block, int residue);

  int n() const { return n_; }
  int value() const { return index_; }
  int block() const { return index_ / n_; }
  int residue() const { return index_ % n_; }

  bool operator==(const VertexIndex&) const = default;

 private:
  int n_;
  int index_;
};

// Group element b^s a^r in canonical form.
class DihedralElement {
 public:
  DihedralElement(int n, int r, int s);

  static DihedralElement identity(int n) { return {n, 0, 0}; }
  static DihedralElement rotation(int n, int r) { return {n, r, 0}; }
  // b a^r
  static DihedralElement reflection(int n, int r) { return {n, r, 1}; }

  int n() const { return n_; }
  int r() const { return r_; }
  int s() const { return s_; }
  // Position in all_elements(): r + n*s.
  int ordinal() const { return r_ + n_ * s_; }

  bool operator==(const DihedralElement&) const = default;

 private:
  int n_;
  int r_;
  int s_;
};

// (b^s1 a^r1)(b^s2 a^r2) = b^(s1+s2) a^((-1)^s2 r1 + r2). Throws ParameterError
// when the two elements belong to different groups.
DihedralElement mul(const DihedralElement& x, const DihedralElement& y);
DihedralElement inverse(const DihedralElement& x);
inline DihedralElement operator*(const DihedralElement& x, const DihedralElement& y) {
  return mul(x, y);
}

// All 2n elements ordered by ordinal(). Requires odd n >= 3.
std::vector<DihedralElement> all_elements(int n);

// The generating set {a, a^{-1}, b} as a set (n >= 3 keeps the three distinct).
std::array<DihedralElement, 3> generators(int n);

// Cayley graph of D_{2n} on group elements (vertex id = ordinal()).
// g ~ h iff g^{-1} h is a generator, i.e. the neighbours of g are g a, g a^{-1}
// and g b. With the product above this is the convention under which phi()
// is a graph isomorphism onto the semi-Cayley graph.
struct CayleyGraph {
  int n = 0;
  std::vector<std::array<int, 3>> neighbors;
  std::vector<std::pair<int, int>> edges;  // each undirected edge once, first < second

  int vertex_count() const { return 2 * n; }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;
  bool is_connected() const;
};

// Throws DomainError for even n or n < 3.
CayleyGraph cayley_graph(int n);

// phi(a^r) = r, phi(b a^r) = n + ((n - r) mod n).
VertexIndex phi(const DihedralElement& x);

// Semi-Cayley adjacency rule: same block and residues differ by +-1 mod n,
// or different blocks with equal residue.
bool semi_cayley_adjacent(int n, int i, int j);

// Dense 0/1 matrix [[W + W^{n-1}, I], [I, W + W^{n-1}]].
Eigen::MatrixXi semi_cayley_adjacency(int n);

// semi_cayley_adjacency(n) / 3.
Eigen::MatrixXd normalized_adjacency(int n);

// Neighbour indices of vertex i in the semi-Cayley graph.
std::array<int, 3> semi_cayley_neighbors(int n, int i);

}  // namespace qwalk
