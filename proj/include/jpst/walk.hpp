#pragma once

#include "jpst/exactnum.hpp"
#include "jpst/johnson.hpp"

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace jpst {

/// One entry of the transition matrix H(t) = exp(itA).
struct Amplitude {
  double re = 0.0;
  double im = 0.0;

  double modulus() const;
  std::complex<double> value() const { return {re, im}; }
};

/// Spectral data for the walk on a union of Johnson classes: integer
/// eigenvalues theta_j per eigenspace together with the exact idempotent
/// entry per relation class. Evaluating H(t)_{u,v} costs O(d), independent
/// of the vertex count.
struct SpectralWalkData {
  int n = 0, k = 0;
  std::vector<int> classes;   // intersection sizes of the union
  Integer v;                  // C(n,k)
  std::vector<Integer> theta; // union eigenvalue per eigenspace, j = 0..k
  std::vector<Integer> m;     // multiplicities
  std::vector<std::vector<Rational>> idem;  // idem[j][c]: (E_j) entry on class c
};

// classes nonempty, each in [0, k-1].
SpectralWalkData make_walk_data(int n, int k, std::vector<int> classes);

// H(t)_{u,v} = sum_j e^{i t theta_j} (E_j)_{u,v}.
Amplitude transition_entry(const SpectralWalkData& w, const KSubset& u,
                           const KSubset& v, double t);
Amplitude transition_entry(const SpectralWalkData& w, const Integer& u_rank,
                           const Integer& v_rank, double t);

// H(t)_{A, complement(A)} = sum_j e^{i t theta_j} (m_j/v) (-1)^j; the same
// for every antipodal pair. Requires n = 2k ("no antipodal pairing").
Amplitude antipodal_amplitude(const SpectralWalkData& w, double t);
Amplitude antipodal_amplitude(int n, int k, const std::vector<int>& classes,
                              double t);

// Full H(t) = Q e^{it Lambda} Q^T by dense symmetric eigendecomposition.
// The independent oracle for everything the spectral path claims. v <= 2000.
Eigen::MatrixXcd dense_walk_oracle(const Graph& g, double t);

struct ScanResult {
  double t_star = 0.0;
  double max_modulus = 0.0;
};

// Grid-scan of |H(t)_{u,v}| over (0, t_max] with one Newton refinement
// around the grid argmax.
ScanResult scan_max_amplitude(const SpectralWalkData& w, const KSubset& u,
                              const KSubset& v, double t_max, double step);

// H(2pi) = I for an integer spectrum: e^{2 pi i theta} = 1 exactly, so the
// check reduces to idempotent completeness sum_j (E_j)_{u,u} = 1.
bool periodicity_check(const SpectralWalkData& w);

// General form taking a possibly non-integer spectrum with the diagonal
// idempotent entries; throws "non-integer spectrum" when integrality fails.
bool periodicity_check(std::span<const double> theta,
                       std::span<const double> diagonal_entries);

}  // namespace jpst
