#pragma once

#include "jpst/exactnum.hpp"

#include <iosfwd>
#include <vector>

namespace jpst {

/// A k-subset of the ground set {1..n}, stored sorted. One scheme vertex.
struct KSubset {
  int n = 0;
  std::vector<int> elements;  // strictly increasing, values in [1,n]

  KSubset() = default;
  KSubset(int ground_set_size, std::vector<int> elems);  // validates, sorts

  int k() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const;
  KSubset complement() const;

  friend bool operator==(const KSubset&, const KSubset&) = default;
};

/// Parameters of a generalized Johnson graph J(n,k,i): vertices are the
/// k-subsets of {1..n}, adjacent when the intersection has size exactly i.
/// The standing assumption n >= 2k >= 2 is enforced.
struct JohnsonParams {
  int n = 0, k = 0, i = 0;
  JohnsonParams(int n, int k, int i);  // throws on invalid parameters
};

/// Undirected loop-free graph as sorted neighbor lists, vertices 0-based.
struct Graph {
  std::vector<std::vector<int>> adj;

  int vertex_count() const { return static_cast<int>(adj.size()); }
  std::size_t edge_count() const;
  bool has_edge(int u, int v) const;
};

// All C(n,k) k-subsets in lexicographic order. Position 0 is {1..k}; the
// last position is {n-k+1..n} (the complement of position 0 when n = 2k).
std::vector<KSubset> enumerate_vertices(int n, int k);

// |A ∩ B|; throws if the two subsets have different n or k.
int intersection_class(const KSubset& a, const KSubset& b);

// 0-based lexicographic rank (combinatorial number system) and its inverse.
Integer subset_rank(const KSubset& s);
KSubset subset_unrank(int n, int k, const Integer& rank);

// Explicit graph construction, O(v^2). Refuses instances with more than
// vertex_budget vertices ("instance too large; use spectral path").
// i = k yields the empty graph (the identity relation carries no edges).
Graph build_graph(const JohnsonParams& p, int vertex_budget = 10000);

// Exact eigenvalue of J(n,k,i) on eigenspace j, 0 <= j <= k:
//   lambda_j = sum_l (-1)^l C(j,l) C(k-j,k-i-l) C(n-k-j,k-i-l).
Integer eigenvalue(const JohnsonParams& p, int j);

// The n = 2k specialization with squared binomials; must agree with
// eigenvalue({2k,k,i}, j) for every j.
Integer eigenvalue_2k(int k, int i, int j);

// lambda_j for j = 0..k.
std::vector<Integer> spectrum(const JohnsonParams& p);

/// The six closed-form eigenvalues of J(2k,k,i), 0 <= i <= k-1.
struct ClosedFormEigenvalues {
  Integer lambda0;           // C(k,i)^2
  Integer lambda1;           // C(k,i)^2 - 2 C(k,i) C(k-1,i)
  Integer lambda_k;          // (-1)^(k-i) C(k,i)
  Integer lambda_k_minus_1;  // (-1)^(k-i) [C(k,i) - 2 C(k-1,i)]
  Integer lambda_i;
  Integer lambda_i_plus_1;
};
ClosedFormEigenvalues closed_form_eigenvalues(int k, int i);

// Dimension of eigenspace j: m_j = C(n,j) - C(n,j-1).
Integer multiplicity(int n, int j);

// Sufficient condition for connectivity of J(n,k,i): 2k - n < i < k.
bool predicted_connected(const JohnsonParams& p);

// Oracle for the condition above.
bool bfs_connected(const Graph& g);

// Edge-list text export, "u v" per line, 1-based vertex ranks.
void write_edge_list(const Graph& g, std::ostream& os);

}  // namespace jpst
