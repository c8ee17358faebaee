#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jpst/johnson.hpp"
#include "oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

using namespace jpst;

namespace {

// Independent spectral oracle: eigenvalues of the explicit adjacency matrix.
std::vector<double> numeric_spectrum(const Graph& g) {
  const int v = g.vertex_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(v, v);
  for (int u = 0; u < v; ++u)
    for (int w : g.adj[u]) a(u, w) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> predicted_spectrum(const JohnsonParams& p) {
  std::vector<double> out;
  for (int j = 0; j <= p.k; ++j) {
    const double lam = eigenvalue(p, j).convert_to<double>();
    const long long m = multiplicity(p.n, j).convert_to<long long>();
    for (long long c = 0; c < m; ++c) out.push_back(lam);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("KSubset validation") {
  CHECK_THROWS_AS(KSubset(4, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(KSubset(4, {1, 5}), std::invalid_argument);
  CHECK_THROWS_AS(KSubset(4, {2, 2}), std::invalid_argument);
  const KSubset s(6, {3, 1, 2});  // sorted on construction
  CHECK(s.elements == std::vector<int>{1, 2, 3});
  CHECK(s.complement().elements == std::vector<int>{4, 5, 6});
}

TEST_CASE("enumerate_vertices lexicographic order") {
  const auto v42 = enumerate_vertices(4, 2);
  REQUIRE(v42.size() == 6);
  CHECK(v42[0].elements == std::vector<int>{1, 2});
  CHECK(v42[1].elements == std::vector<int>{1, 3});
  CHECK(v42[2].elements == std::vector<int>{1, 4});
  CHECK(v42[3].elements == std::vector<int>{2, 3});
  CHECK(v42[4].elements == std::vector<int>{2, 4});
  CHECK(v42[5].elements == std::vector<int>{3, 4});

  const auto v63 = enumerate_vertices(6, 3);
  REQUIRE(v63.size() == 20);
  CHECK(v63.front().elements == std::vector<int>{1, 2, 3});
  CHECK(v63.back().elements == std::vector<int>{4, 5, 6});

  const auto v21 = enumerate_vertices(2, 1);
  REQUIRE(v21.size() == 2);
  CHECK(v21[0].elements == std::vector<int>{1});
  CHECK(v21[1].elements == std::vector<int>{2});

  CHECK_THROWS_AS(enumerate_vertices(3, 4), std::invalid_argument);
}

TEST_CASE("complementation mirrors lexicographic positions when n = 2k") {
  for (int k = 1; k <= 4; ++k) {
    const int n = 2 * k;
    const auto verts = enumerate_vertices(n, k);
    const Integer v = binom(n, k);
    for (std::size_t r = 0; r < verts.size(); ++r) {
      CHECK(subset_rank(verts[r]) == Integer(r));
      CHECK(subset_rank(verts[r].complement()) == v - 1 - Integer(r));
    }
  }
}

TEST_CASE("rank/unrank round trip") {
  for (int n = 1; n <= 9; ++n)
    for (int k = 1; k <= n; ++k) {
      const auto verts = enumerate_vertices(n, k);
      for (std::size_t r = 0; r < verts.size(); ++r)
        CHECK(subset_unrank(n, k, Integer(r)) == verts[r]);
    }
  CHECK_THROWS_AS(subset_unrank(6, 3, 20), std::invalid_argument);
}

TEST_CASE("intersection_class") {
  CHECK(intersection_class(KSubset(6, {1, 2, 3}), KSubset(6, {4, 5, 6})) == 0);
  CHECK(intersection_class(KSubset(6, {1, 2, 3}), KSubset(6, {1, 2, 3})) == 3);
  CHECK(intersection_class(KSubset(6, {1, 2, 3}), KSubset(6, {1, 4, 5})) == 1);
  CHECK_THROWS_AS(intersection_class(KSubset(6, {1, 2, 3}), KSubset(5, {1, 2, 3})),
                  std::invalid_argument);
}

TEST_CASE("build_graph small structures") {
  // K(4,2) is a perfect matching on 6 vertices
  const Graph m = build_graph(JohnsonParams(4, 2, 0));
  CHECK(m.vertex_count() == 6);
  CHECK(m.edge_count() == 3);
  for (const auto& nb : m.adj) CHECK(nb.size() == 1);
  CHECK_FALSE(bfs_connected(m));

  // J(6,3,1) is 9-regular on 20 vertices
  const Graph g = build_graph(JohnsonParams(6, 3, 1));
  CHECK(g.vertex_count() == 20);
  for (const auto& nb : g.adj) CHECK(nb.size() == 9);

  // Petersen
  const Graph pet = build_graph(JohnsonParams(5, 2, 0));
  CHECK(pet.vertex_count() == 10);
  for (const auto& nb : pet.adj) CHECK(nb.size() == 3);
  CHECK(bfs_connected(pet));

  // identity class carries no edges
  CHECK(build_graph(JohnsonParams(6, 3, 3)).edge_count() == 0);

  CHECK_THROWS_WITH(build_graph(JohnsonParams(40, 20, 1)),
                    "instance too large; use spectral path");
}

TEST_CASE("graph regularity matches the valency formula") {
  for (int n = 2; n <= 9; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (int i = 0; i < k; ++i) {
        const Graph g = build_graph(JohnsonParams(n, k, i));
        const Integer want = binom(k, i) * binom(n - k, k - i);
        for (const auto& nb : g.adj) CHECK(Integer(nb.size()) == want);
      }
}

TEST_CASE("eigenvalue examples") {
  const JohnsonParams pet(5, 2, 0);
  CHECK(eigenvalue(pet, 0) == 3);
  CHECK(eigenvalue(pet, 1) == -2);
  CHECK(eigenvalue(pet, 2) == 1);

  const JohnsonParams j631(6, 3, 1);
  CHECK(spectrum(j631) == std::vector<Integer>{9, -3, -1, 3});

  // Kneser classes have spectrum (-1)^j
  for (int k = 1; k <= 8; ++k)
    for (int j = 0; j <= k; ++j)
      CHECK(eigenvalue(JohnsonParams(2 * k, k, 0), j) == (j % 2 == 0 ? 1 : -1));

  CHECK_THROWS_AS(eigenvalue(j631, 4), std::invalid_argument);
  CHECK_THROWS_AS(eigenvalue(j631, -1), std::invalid_argument);
}

TEST_CASE("squared form agrees with the general formula when n = 2k") {
  for (int k = 1; k <= 12; ++k)
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j)
        CHECK(eigenvalue_2k(k, i, j) == eigenvalue(JohnsonParams(2 * k, k, i), j));
}

TEST_CASE("closed forms match the eigenvalue formula") {
  for (int k = 2; k <= 24; ++k)
    for (int i = 0; i < k; ++i) {
      const auto cf = closed_form_eigenvalues(k, i);
      const JohnsonParams p(2 * k, k, i);
      CHECK(cf.lambda0 == eigenvalue(p, 0));
      CHECK(cf.lambda1 == eigenvalue(p, 1));
      CHECK(cf.lambda_k == eigenvalue(p, k));
      CHECK(cf.lambda_k_minus_1 == eigenvalue(p, k - 1));
      CHECK(cf.lambda_i == eigenvalue(p, i));
      CHECK(cf.lambda_i_plus_1 == eigenvalue(p, i + 1));
      CHECK(cf.lambda0 - cf.lambda1 == 2 * binom(k, i) * binom(k - 1, i));
    }
}

TEST_CASE("closed form spot values") {
  const auto cf31 = closed_form_eigenvalues(3, 1);
  CHECK(cf31.lambda0 == 9);
  CHECK(cf31.lambda1 == -3);
  CHECK(cf31.lambda_k == 3);
  CHECK(cf31.lambda_k_minus_1 == -1);

  const auto cf21 = closed_form_eigenvalues(2, 1);
  CHECK(cf21.lambda0 == 4);
  CHECK(cf21.lambda1 == 0);
  CHECK(cf21.lambda_k == -2);
}

TEST_CASE("multiplicities") {
  CHECK(multiplicity(6, 0) == 1);
  CHECK(multiplicity(6, 1) == 5);
  CHECK(multiplicity(6, 2) == 9);
  CHECK(multiplicity(6, 3) == 5);
  CHECK(multiplicity(5, 0) == 1);
  CHECK(multiplicity(5, 1) == 4);
  CHECK(multiplicity(5, 2) == 5);
  CHECK(multiplicity(2, 0) == 1);
  CHECK(multiplicity(2, 1) == 1);
  for (int n = 2; n <= 24; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      Integer sum = 0;
      for (int j = 0; j <= k; ++j) sum += multiplicity(n, j);
      CHECK(sum == binom(n, k));
    }
}

TEST_CASE("spectrum matches dense diagonalization for all n <= 10") {
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (int i = 0; i < k; ++i) {
        const JohnsonParams p(n, k, i);
        const auto want = predicted_spectrum(p);
        const auto got = numeric_spectrum(build_graph(p));
        REQUIRE(want.size() == got.size());
        double residual = 0;
        for (std::size_t t = 0; t < want.size(); ++t)
          residual = std::max(residual, std::abs(want[t] - got[t]));
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(i);
        CHECK(residual < 1e-6);
      }
}

TEST_CASE("row sum equals valency") {
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (int i = 0; i <= k; ++i)
        CHECK(eigenvalue(JohnsonParams(n, k, i), 0) ==
              binom(k, i) * binom(n - k, k - i));
}

TEST_CASE("connectivity prediction is sufficient, n <= 10") {
  CHECK(predicted_connected(JohnsonParams(6, 3, 1)));
  CHECK_FALSE(predicted_connected(JohnsonParams(6, 3, 0)));
  CHECK(predicted_connected(JohnsonParams(5, 2, 0)));
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (int i = 0; i <= k; ++i) {
        const JohnsonParams p(n, k, i);
        if (predicted_connected(p)) CHECK(bfs_connected(build_graph(p)));
      }
}

TEST_CASE("bfs_connected basics") {
  CHECK_FALSE(bfs_connected(build_graph(JohnsonParams(6, 3, 0))));  // 10 K_2
  Graph single;
  single.adj.resize(1);
  CHECK(bfs_connected(single));
}

TEST_CASE("edge list export") {
  std::ostringstream os;
  write_edge_list(build_graph(JohnsonParams(4, 2, 0)), os);
  CHECK(os.str() == "1 6\n2 5\n3 4\n");  // the antipodal matching
}

TEST_CASE("JohnsonParams validation") {
  CHECK_THROWS_AS(JohnsonParams(3, 2, 0), std::invalid_argument);  // n < 2k
  CHECK_THROWS_AS(JohnsonParams(6, 3, 4), std::invalid_argument);  // i > k
  CHECK_THROWS_AS(JohnsonParams(6, 3, -1), std::invalid_argument);
  CHECK_THROWS_AS(JohnsonParams(2, 0, 0), std::invalid_argument);
}
