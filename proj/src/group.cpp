#include "qwalk/group.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

int mod(long long x, int n) {
  const long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

VertexIndex::VertexIndex(int n, int index) : n_(n), index_(index) {
  if (n < 1 || index < 0 || index >= 2 * n) {
    throw ParameterError("vertex index " + std::to_string(index) + " outside [0, " +
                         std::to_string(2 * n) + ")");
  }
}

VertexIndex VertexIndex::from_parts(int n, int block, int residue) {
  if (block < 0 || block > 1 || residue < 0 || residue >= n) {
    throw ParameterError("invalid (block, residue) pair");
  }
  return {n, block * n + residue};
}

DihedralElement::DihedralElement(int n, int r, int s) : n_(n), r_(r), s_(s) {
  require_odd_order(n);
  if (r < 0 || r >= n || (s != 0 && s != 1)) {
    throw ParameterError("element exponents out of range: r=" + std::to_string(r) +
                         " s=" + std::to_string(s));
  }
}

DihedralElement mul(const DihedralElement& x, const DihedralElement& y) {
  if (x.n() != y.n()) {
    throw ParameterError("cannot multiply elements of D_" + std::to_string(2 * x.n()) +
                         " and D_" + std::to_string(2 * y.n()));
  }
  const int n = x.n();
  const int sign = y.s() == 0 ? 1 : -1;
  return {n, mod(static_cast<long long>(sign) * x.r() + y.r(), n), (x.s() + y.s()) % 2};
}

DihedralElement inverse(const DihedralElement& x) {
  // Reflections are involutions; a^r inverts to a^{n-r}.
  if (x.s() == 1) return x;
  return {x.n(), mod(-x.r(), x.n()), 0};
}

std::vector<DihedralElement> all_elements(int n) {
  require_odd_order(n);
  std::vector<DihedralElement> out;
  out.reserve(2 * n);
  for (int s = 0; s < 2; ++s) {
    for (int r = 0; r < n; ++r) out.emplace_back(n, r, s);
  }
  return out;
}

std::array<DihedralElement, 3> generators(int n) {
  return {DihedralElement::rotation(n, 1), DihedralElement::rotation(n, n - 1),
          DihedralElement::reflection(n, 0)};
}

bool CayleyGraph::has_edge(int u, int v) const {
  const auto& nb = neighbors.at(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

bool CayleyGraph::is_connected() const {
  if (neighbors.empty()) return true;
  std::vector<char> seen(neighbors.size(), 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : neighbors[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == neighbors.size();
}

CayleyGraph cayley_graph(int n) {
  require_odd_order(n);
  CayleyGraph g;
  g.n = n;
  const auto elements = all_elements(n);
  const auto gens = generators(n);
  g.neighbors.resize(elements.size());
  for (const auto& x : elements) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      g.neighbors[x.ordinal()][k] = (x * gens[k]).ordinal();
    }
  }
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v : g.neighbors[u]) {
      if (u < v) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

VertexIndex phi(const DihedralElement& x) {
  const int n = x.n();
  if (x.s() == 0) return {n, x.r()};
  return {n, n + mod(n - x.r(), n)};
}

bool semi_cayley_adjacent(int n, int i, int j) {
  const int bi = i / n, bj = j / n;
  const int ri = i % n, rj = j % n;
  if (bi == bj) {
    const int d = mod(ri - rj, n);
    return d == 1 || d == n - 1;
  }
  return ri == rj;
}

Eigen::MatrixXi semi_cayley_adjacency(int n) {
  require_odd_order(n);
  const int size = 2 * n;
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) a(i, j) = semi_cayley_adjacent(n, i, j) ? 1 : 0;
  }
  return a;
}

Eigen::MatrixXd normalized_adjacency(int n) {
  return semi_cayley_adjacency(n).cast<double>() / 3.0;
}

std::array<int, 3> semi_cayley_neighbors(int n, int i) {
  const int b = i / n, r = i % n;
  return {b * n + mod(r + 1, n), b * n + mod(r - 1, n), (1 - b) * n + r};
}

}  // namespace qwalk
