#include "jpst/walk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jpst {

namespace {

double to_double(const Rational& q) {
  return q.convert_to<double>();
}

std::complex<double> entry_value(const SpectralWalkData& w, int relation_class,
                                 double t) {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t j = 0; j < w.theta.size(); ++j) {
    const double phase = t * w.theta[j].convert_to<double>();
    acc += to_double(w.idem[j][relation_class]) *
           std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return acc;
}

int pair_class(const SpectralWalkData& w, const KSubset& u, const KSubset& v) {
  if (u.n != w.n || v.n != w.n || u.k() != w.k || v.k() != w.k)
    throw std::invalid_argument("vertex does not belong to this scheme");
  if (u == v) return 0;
  return w.k - intersection_class(u, v);
}

}  // namespace

double Amplitude::modulus() const { return std::hypot(re, im); }

SpectralWalkData make_walk_data(int n, int k, std::vector<int> classes) {
  if (k < 1 || n < 2 * k) throw std::invalid_argument("invalid parameters");
  if (classes.empty()) throw std::invalid_argument("empty class set");
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  for (int c : classes)
    if (c < 0 || c > k - 1) throw std::invalid_argument("class index out of range");

  SpectralWalkData w;
  w.n = n;
  w.k = k;
  w.classes = classes;
  w.v = binom(n, k);
  w.theta.assign(k + 1, 0);
  for (int c : classes) {
    const auto lam = spectrum(JohnsonParams(n, k, c));
    for (int j = 0; j <= k; ++j) w.theta[j] += lam[j];
  }
  w.m.resize(k + 1);
  for (int j = 0; j <= k; ++j) w.m[j] = multiplicity(n, j);

  // (E_j) entry on relation class c: (m_j / v) * p_c(j) / v_c, where
  // p_c(j) is the eigenvalue of the class with intersection size k - c.
  w.idem.assign(k + 1, std::vector<Rational>(k + 1));
  for (int c = 0; c <= k; ++c) {
    const JohnsonParams p(n, k, k - c);
    const auto lam = spectrum(p);
    const Integer valency = lam[0];
    for (int j = 0; j <= k; ++j)
      w.idem[j][c] = Rational(w.m[j] * lam[j], w.v * valency);
  }
  return w;
}

Amplitude transition_entry(const SpectralWalkData& w, const KSubset& u,
                           const KSubset& v, double t) {
  const auto z = entry_value(w, pair_class(w, u, v), t);
  return {z.real(), z.imag()};
}

Amplitude transition_entry(const SpectralWalkData& w, const Integer& u_rank,
                           const Integer& v_rank, double t) {
  return transition_entry(w, subset_unrank(w.n, w.k, u_rank),
                          subset_unrank(w.n, w.k, v_rank), t);
}

Amplitude antipodal_amplitude(const SpectralWalkData& w, double t) {
  if (w.n != 2 * w.k) throw std::invalid_argument("no antipodal pairing");
  const auto z = entry_value(w, w.k, t);
  return {z.real(), z.imag()};
}

Amplitude antipodal_amplitude(int n, int k, const std::vector<int>& classes,
                              double t) {
  if (n != 2 * k) throw std::invalid_argument("no antipodal pairing");
  return antipodal_amplitude(make_walk_data(n, k, classes), t);
}

Eigen::MatrixXcd dense_walk_oracle(const Graph& g, double t) {
  const int v = g.vertex_count();
  if (v > 2000) throw std::invalid_argument("graph too large for dense oracle");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(v, v);
  for (int u = 0; u < v; ++u)
    for (int w : g.adj[u]) a(u, w) = 1.0;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  const Eigen::MatrixXd& q = solver.eigenvectors();
  const Eigen::VectorXd& lam = solver.eigenvalues();

  Eigen::VectorXcd phases(v);
  for (int j = 0; j < v; ++j)
    phases(j) = std::complex<double>(std::cos(t * lam(j)), std::sin(t * lam(j)));
  return q * phases.asDiagonal() * q.transpose();
}

ScanResult scan_max_amplitude(const SpectralWalkData& w, const KSubset& u,
                              const KSubset& v, double t_max, double step) {
  if (step <= 0) throw std::invalid_argument("step must be positive");
  const int c = pair_class(w, u, v);

  const std::size_t d = w.theta.size();
  std::vector<double> coeff(d), th(d);
  for (std::size_t j = 0; j < d; ++j) {
    coeff[j] = to_double(w.idem[j][c]);
    th[j] = w.theta[j].convert_to<double>();
  }
  auto mod2 = [&](double t) {
    double re = 0, im = 0;
    for (std::size_t j = 0; j < d; ++j) {
      re += coeff[j] * std::cos(t * th[j]);
      im += coeff[j] * std::sin(t * th[j]);
    }
    return re * re + im * im;
  };

  ScanResult best;
  for (double t = step; t <= t_max + step / 2; t += step) {
    const double f = mod2(t);
    if (f > best.max_modulus) {
      best.max_modulus = f;
      best.t_star = t;
    }
  }

  // One guarded Newton step on d/dt |H|^2 around the grid argmax.
  // |H|^2(t) = sum_{j,l} c_j c_l cos(t (theta_j - theta_l)).
  auto derivatives = [&](double t) {
    double d1 = 0, d2 = 0;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        const double gap = th[j] - th[l];
        d1 -= coeff[j] * coeff[l] * gap * std::sin(t * gap);
        d2 -= coeff[j] * coeff[l] * gap * gap * std::cos(t * gap);
      }
    return std::pair{d1, d2};
  };
  const auto [d1, d2] = derivatives(best.t_star);
  if (d2 < 0) {
    const double refined = best.t_star - d1 / d2;
    if (refined > 0 && refined <= t_max &&
        std::abs(refined - best.t_star) <= step) {
      const double f = mod2(refined);
      if (f > best.max_modulus) {
        best.max_modulus = f;
        best.t_star = refined;
      }
    }
  }

  best.max_modulus = std::sqrt(best.max_modulus);
  return best;
}

bool periodicity_check(const SpectralWalkData& w) {
  // Integer spectrum by construction: e^{2 pi i theta_j} = 1 exactly, so
  // H(2pi)_{u,u} = sum_j (E_j)_{u,u} = sum_j m_j / v.
  Rational acc = 0;
  for (std::size_t j = 0; j < w.theta.size(); ++j) acc += w.idem[j][0];
  const double residual = std::abs(to_double(acc) - 1.0);
  return residual < 1e-12;
}

bool periodicity_check(std::span<const double> theta,
                       std::span<const double> diagonal_entries) {
  if (theta.size() != diagonal_entries.size())
    throw std::invalid_argument("mismatched lengths");
  for (double th : theta)
    if (std::abs(th - std::round(th)) > 1e-9)
      throw std::invalid_argument("non-integer spectrum");
  double acc = 0;
  for (double e : diagonal_entries) acc += e;  // e^{2 pi i theta} = 1 exactly
  return std::abs(acc - 1.0) < 1e-12;
}

}  // namespace jpst
