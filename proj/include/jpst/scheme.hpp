#pragma once

#include "jpst/exactnum.hpp"
#include "jpst/johnson.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace jpst {

/// A symmetric association scheme built from the Johnson family: class index
/// i corresponds to intersection size k-i, so relation 0 is the identity and
/// relation k is the Kneser class. P[i][j] is the eigenvalue of relation i on
/// eigenspace j; in particular P[i][0] is the valency v_i.
struct AssociationScheme {
  int n = 0, k = 0;
  int d = 0;                             // class count (= k)
  Integer v;                             // vertex count C(n,k)
  std::vector<Integer> valencies;        // v_i, i = 0..d
  std::vector<Integer> m;                // multiplicities m_j, j = 0..d
  std::vector<std::vector<Integer>> P;   // (d+1) x (d+1) eigenmatrix

  // Materialized only when v fits the vertex budget; relations[0] is the
  // identity relation and carries no edges.
  std::vector<Graph> relations;
  std::vector<KSubset> vertices;

  bool relations_materialized() const { return !relations.empty(); }

  // Scheme class of the ordered pair (u,v) of vertex ranks: 0 on the
  // diagonal, otherwise k - |intersection|. Works with or without
  // materialized relations.
  int relation_class(const Integer& u, const Integer& v) const;
};

// Builds J(n,k). Relations are materialized when C(n,k) <= vertex_budget;
// the eigenmatrix, valencies and multiplicities are always filled.
AssociationScheme build_johnson_scheme(int n, int k, int vertex_budget = 10000);

/// Pass/fail record per scheme axiom.
struct AxiomReport {
  struct Entry {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Entry> entries;

  bool all_pass() const;
};

// Checks, on a materialized scheme: the relations partition all ordered
// pairs, each relation is symmetric and loop-free, products A_i A_j lie in
// the integer span of the relation matrices, and the row orthogonality
// P diag(m) P^T = v diag(valencies) holds.
AxiomReport verify_axioms(const AssociationScheme& s);

// Dual eigenvalue q_j(i) = m_j p_i(j) / v_i, exact. q_j(0) = m_j.
Rational dual_eigenvalue(const AssociationScheme& s, int j, int i);

// (E_j)_{u,v} = (m_j / v) p_l(j) / v_l where l is the relation class of
// (u,v). Diagonal entries equal m_j / v.
Rational idempotent_entry(const AssociationScheme& s, int j, const Integer& u,
                          const Integer& v);

// Indices of classes that are fixed-point-free involutions (perfect
// matchings): the only candidates for a PST pairing. Class 0 is excluded.
std::vector<int> involution_classes(const AssociationScheme& s);

// Summary export: {n, k, v, valencies[], multiplicities[], P[][]}.
// Big integers are serialized as decimal strings.
nlohmann::json scheme_summary_json(const AssociationScheme& s);

}  // namespace jpst
