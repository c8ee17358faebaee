#include "jpst/scheme.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace jpst {

int AssociationScheme::relation_class(const Integer& u, const Integer& v) const {
  if (u < 0 || u >= this->v || v < 0 || v >= this->v)
    throw std::invalid_argument("vertex rank out of range");
  if (u == v) return 0;
  if (!vertices.empty()) {
    const int a = static_cast<int>(u);
    const int b = static_cast<int>(v);
    return k - intersection_class(vertices[a], vertices[b]);
  }
  return k - intersection_class(subset_unrank(n, k, u), subset_unrank(n, k, v));
}

AssociationScheme build_johnson_scheme(int n, int k, int vertex_budget) {
  if (k < 1 || n < 2 * k) throw std::invalid_argument("invalid parameters");
  AssociationScheme s;
  s.n = n;
  s.k = k;
  s.d = k;
  s.v = binom(n, k);

  s.P.assign(k + 1, std::vector<Integer>(k + 1));
  s.valencies.resize(k + 1);
  s.m.resize(k + 1);
  for (int i = 0; i <= k; ++i) {
    const JohnsonParams p(n, k, k - i);
    for (int j = 0; j <= k; ++j) s.P[i][j] = eigenvalue(p, j);
    s.valencies[i] = s.P[i][0];
  }
  for (int j = 0; j <= k; ++j) s.m[j] = multiplicity(n, j);

  if (s.v <= vertex_budget) {
    s.vertices = enumerate_vertices(n, k);
    s.relations.reserve(k + 1);
    for (int i = 0; i <= k; ++i)
      s.relations.push_back(build_graph(JohnsonParams(n, k, k - i), vertex_budget));
  }
  return s;
}

bool AxiomReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Entry& e) { return e.pass; });
}

AxiomReport verify_axioms(const AssociationScheme& s) {
  if (!s.relations_materialized())
    throw std::invalid_argument("relations not materialized");
  AxiomReport report;
  const int v = static_cast<int>(s.v);
  const int d = s.d;

  // Relation 0 is the identity: no edges.
  report.entries.push_back(
      {"identity_relation", s.relations[0].edge_count() == 0, ""});

  // Every off-diagonal ordered pair lies in exactly one relation.
  {
    std::vector<std::uint8_t> cover(static_cast<std::size_t>(v) * v, 0);
    for (int r = 1; r <= d; ++r)
      for (int u = 0; u < v; ++u)
        for (int w : s.relations[r].adj[u])
          ++cover[static_cast<std::size_t>(u) * v + w];
    bool ok = true;
    std::string detail;
    for (int u = 0; u < v && ok; ++u)
      for (int w = 0; w < v && ok; ++w) {
        const int expect = (u == w) ? 0 : 1;
        if (cover[static_cast<std::size_t>(u) * v + w] != expect) {
          ok = false;
          detail = "pair (" + std::to_string(u + 1) + "," + std::to_string(w + 1) +
                   ") covered " +
                   std::to_string(cover[static_cast<std::size_t>(u) * v + w]) +
                   " times";
        }
      }
    report.entries.push_back({"pair_partition", ok, detail});
  }

  // Symmetry of every relation.
  {
    bool ok = true;
    for (int r = 1; r <= d && ok; ++r)
      for (int u = 0; u < v && ok; ++u)
        for (int w : s.relations[r].adj[u])
          if (!s.relations[r].has_edge(w, u)) {
            ok = false;
            break;
          }
    report.entries.push_back({"symmetry", ok, ""});
  }

  // Closure: (A_i A_j)_{u,w} must depend only on the relation class of (u,w).
  {
    auto dense = [&](int r) {
      std::vector<std::int64_t> a(static_cast<std::size_t>(v) * v, 0);
      if (r == 0)
        for (int u = 0; u < v; ++u) a[static_cast<std::size_t>(u) * v + u] = 1;
      else
        for (int u = 0; u < v; ++u)
          for (int w : s.relations[r].adj[u]) a[static_cast<std::size_t>(u) * v + w] = 1;
      return a;
    };
    bool ok = true;
    std::string detail;
    for (int i = 0; i <= d && ok; ++i) {
      const auto ai = dense(i);
      for (int j = i; j <= d && ok; ++j) {
        const auto aj = dense(j);
        std::vector<std::int64_t> prod(static_cast<std::size_t>(v) * v, 0);
        for (int u = 0; u < v; ++u)
          for (int t = 0; t < v; ++t) {
            const std::int64_t x = ai[static_cast<std::size_t>(u) * v + t];
            if (x == 0) continue;
            for (int w = 0; w < v; ++w)
              prod[static_cast<std::size_t>(u) * v + w] += x * aj[static_cast<std::size_t>(t) * v + w];
          }
        // intersection number c^r_{ij} read off from the first pair seen in class r
        std::vector<std::int64_t> coeff(d + 1, -1);
        for (int u = 0; u < v && ok; ++u)
          for (int w = 0; w < v && ok; ++w) {
            const int r = s.relation_class(u, w);
            const std::int64_t val = prod[static_cast<std::size_t>(u) * v + w];
            if (coeff[r] < 0)
              coeff[r] = val;
            else if (coeff[r] != val) {
              ok = false;
              detail = "A_" + std::to_string(i) + " A_" + std::to_string(j) +
                       " not constant on class " + std::to_string(r);
            }
          }
      }
    }
    report.entries.push_back({"bose_mesner_closure", ok, detail});
  }

  // Row orthogonality: P diag(m) P^T = v diag(valencies).
  {
    bool ok = true;
    for (int i = 0; i <= d && ok; ++i)
      for (int i2 = 0; i2 <= d && ok; ++i2) {
        Integer acc = 0;
        for (int j = 0; j <= d; ++j) acc += s.m[j] * s.P[i][j] * s.P[i2][j];
        const Integer expect = (i == i2) ? s.v * s.valencies[i] : Integer(0);
        if (acc != expect) ok = false;
      }
    report.entries.push_back({"eigenmatrix_orthogonality", ok, ""});
  }

  // Mass checks: valencies and multiplicities both sum to v.
  {
    Integer sv = 0, sm = 0;
    for (int i = 0; i <= d; ++i) sv += s.valencies[i];
    for (int j = 0; j <= d; ++j) sm += s.m[j];
    report.entries.push_back({"valency_sum", sv == s.v, ""});
    report.entries.push_back({"multiplicity_sum", sm == s.v, ""});
  }

  return report;
}

Rational dual_eigenvalue(const AssociationScheme& s, int j, int i) {
  if (j < 0 || j > s.d || i < 0 || i > s.d)
    throw std::invalid_argument("class index out of range");
  return Rational(s.m[j] * s.P[i][j], s.valencies[i]);
}

Rational idempotent_entry(const AssociationScheme& s, int j, const Integer& u,
                          const Integer& v) {
  const int l = s.relation_class(u, v);
  return dual_eigenvalue(s, j, l) / Rational(s.v);
}

std::vector<int> involution_classes(const AssociationScheme& s) {
  std::vector<int> out;
  for (int c = 1; c <= s.d; ++c) {
    if (s.valencies[c] != 1) continue;
    if (s.relations_materialized()) {
      // must be a perfect matching: every vertex has exactly one neighbor
      // and the pairing is an involution
      const Graph& g = s.relations[c];
      bool ok = true;
      for (int u = 0; u < g.vertex_count() && ok; ++u) {
        if (g.adj[u].size() != 1) ok = false;
        else {
          const int w = g.adj[u][0];
          if (w == u || g.adj[w] != std::vector<int>{u}) ok = false;
        }
      }
      if (!ok) continue;
    }
    out.push_back(c);
  }
  return out;
}

nlohmann::json scheme_summary_json(const AssociationScheme& s) {
  nlohmann::json j;
  j["n"] = s.n;
  j["k"] = s.k;
  j["v"] = s.v.str();
  auto strs = [](const std::vector<Integer>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(x.str());
    return out;
  };
  j["valencies"] = strs(s.valencies);
  j["multiplicities"] = strs(s.m);
  nlohmann::json pm = nlohmann::json::array();
  for (const auto& row : s.P) pm.push_back(strs(row));
  j["P"] = pm;
  return j;
}

}  // namespace jpst
