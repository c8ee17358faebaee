#include "jpst/johnson.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <ostream>
#include <stdexcept>

namespace jpst {

KSubset::KSubset(int ground_set_size, std::vector<int> elems)
    : n(ground_set_size), elements(std::move(elems)) {
  std::sort(elements.begin(), elements.end());
  if (n < 1) throw std::invalid_argument("invalid parameters");
  for (std::size_t t = 0; t < elements.size(); ++t) {
    if (elements[t] < 1 || elements[t] > n)
      throw std::invalid_argument("subset element out of range");
    if (t > 0 && elements[t] == elements[t - 1])
      throw std::invalid_argument("subset elements must be distinct");
  }
}

bool KSubset::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

KSubset KSubset::complement() const {
  std::vector<int> rest;
  rest.reserve(n - k());
  for (int x = 1; x <= n; ++x)
    if (!contains(x)) rest.push_back(x);
  return KSubset(n, std::move(rest));
}

JohnsonParams::JohnsonParams(int n_, int k_, int i_) : n(n_), k(k_), i(i_) {
  if (k < 1 || n < 2 * k || i < 0 || i > k)
    throw std::invalid_argument("invalid parameters");
}

std::size_t Graph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& nb : adj) deg += nb.size();
  return deg / 2;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<KSubset> enumerate_vertices(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("invalid parameters");
  std::vector<KSubset> out;
  std::vector<int> cur(k);
  for (int t = 0; t < k; ++t) cur[t] = t + 1;
  while (true) {
    out.emplace_back(n, cur);
    // advance to the lexicographic successor
    int t = k - 1;
    while (t >= 0 && cur[t] == n - k + 1 + t) --t;
    if (t < 0) break;
    ++cur[t];
    for (int s = t + 1; s < k; ++s) cur[s] = cur[s - 1] + 1;
  }
  return out;
}

int intersection_class(const KSubset& a, const KSubset& b) {
  if (a.n != b.n || a.k() != b.k())
    throw std::invalid_argument("mismatched subset parameters");
  int count = 0;
  auto it = b.elements.begin();
  for (int x : a.elements) {
    while (it != b.elements.end() && *it < x) ++it;
    if (it != b.elements.end() && *it == x) ++count;
  }
  return count;
}

Integer subset_rank(const KSubset& s) {
  Integer r = 0;
  int prev = 0;
  const int k = s.k();
  for (int t = 0; t < k; ++t) {
    for (int c = prev + 1; c < s.elements[t]; ++c) r += binom(s.n - c, k - 1 - t);
    prev = s.elements[t];
  }
  return r;
}

KSubset subset_unrank(int n, int k, const Integer& rank) {
  if (k < 1 || k > n || rank < 0 || rank >= binom(n, k))
    throw std::invalid_argument("invalid parameters");
  std::vector<int> elems;
  elems.reserve(k);
  Integer r = rank;
  int c = 1;
  for (int t = 0; t < k; ++t) {
    while (true) {
      const Integer block = binom(n - c, k - 1 - t);  // subsets starting with c
      if (r < block) break;
      r -= block;
      ++c;
    }
    elems.push_back(c);
    ++c;
  }
  return KSubset(n, std::move(elems));
}

Graph build_graph(const JohnsonParams& p, int vertex_budget) {
  const Integer v_big = binom(p.n, p.k);
  if (v_big > vertex_budget)
    throw std::invalid_argument("instance too large; use spectral path");
  const int v = static_cast<int>(v_big);

  // n is small whenever v is within budget; pack subsets into bitmasks.
  const auto vertices = enumerate_vertices(p.n, p.k);
  std::vector<std::uint64_t> mask(v, 0);
  for (int r = 0; r < v; ++r)
    for (int x : vertices[r].elements) mask[r] |= std::uint64_t{1} << x;

  Graph g;
  g.adj.assign(v, {});
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      if (std::popcount(mask[a] & mask[b]) == p.i) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
      }
  return g;
}

Integer eigenvalue(const JohnsonParams& p, int j) {
  if (j < 0 || j > p.k) throw std::invalid_argument("eigenspace index out of range");
  Integer sum = 0;
  for (int l = 0; l <= p.k - p.i; ++l) {
    Integer term = binom(j, l) * binom(p.k - j, p.k - p.i - l) *
                   binom(p.n - p.k - j, p.k - p.i - l);
    if (l % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

Integer eigenvalue_2k(int k, int i, int j) {
  if (k < 1 || i < 0 || i > k || j < 0 || j > k)
    throw std::invalid_argument("invalid parameters");
  Integer sum = 0;
  for (int l = 0; l <= k - i; ++l) {
    const Integer b = binom(k - j, k - i - l);
    if (l % 2 == 0)
      sum += binom(j, l) * b * b;
    else
      sum -= binom(j, l) * b * b;
  }
  return sum;
}

std::vector<Integer> spectrum(const JohnsonParams& p) {
  std::vector<Integer> lam(p.k + 1);
  for (int j = 0; j <= p.k; ++j) lam[j] = eigenvalue(p, j);
  return lam;
}

ClosedFormEigenvalues closed_form_eigenvalues(int k, int i) {
  if (k < 1 || i < 0 || i > k - 1) throw std::invalid_argument("invalid parameters");
  const Integer cki = binom(k, i);
  const Integer ck1i = binom(k - 1, i);
  const int sign = ((k - i) % 2 == 0) ? 1 : -1;

  ClosedFormEigenvalues cf;
  cf.lambda0 = cki * cki;
  cf.lambda1 = cki * cki - 2 * cki * ck1i;
  cf.lambda_k = sign * cki;
  cf.lambda_k_minus_1 = sign * (cki - 2 * ck1i);

  cf.lambda_i = 0;
  for (int l = 0; l <= k - i; ++l) {
    const Integer b = binom(k - i, l);
    const Integer term = binom(i, l) * b * b;
    cf.lambda_i += (l % 2 == 0) ? term : -term;
  }
  cf.lambda_i_plus_1 = 0;
  for (int l = 0; l <= k - i; ++l) {
    const Integer b = binom(k - i - 1, l - 1);
    const Integer term = binom(i + 1, l) * b * b;
    cf.lambda_i_plus_1 += (l % 2 == 0) ? term : -term;
  }
  return cf;
}

Integer multiplicity(int n, int j) {
  if (n < 1 || j < 0) throw std::invalid_argument("invalid parameters");
  return binom(n, j) - binom(n, j - 1);
}

bool predicted_connected(const JohnsonParams& p) {
  return 2 * p.k - p.n < p.i && p.i < p.k;
}

bool bfs_connected(const Graph& g) {
  const int v = g.vertex_count();
  if (v == 0) throw std::invalid_argument("empty graph");
  std::vector<char> seen(v, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : g.adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  return reached == v;
}

void write_edge_list(const Graph& g, std::ostream& os) {
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int w : g.adj[u])
      if (u < w) os << u + 1 << ' ' << w + 1 << '\n';
}

}  // namespace jpst
