#include "jpst/pst.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace jpst {

namespace {

constexpr const char* kAntipodalRule = "antipodal: A <-> complement(A)";

std::string ord2_str(const ExtendedNat& e) {
  return e.is_infinite() ? std::string("inf") : std::to_string(e.value());
}

// lambda - mu reduced to {0,1,2,3}
int diff_mod4(const Integer& lambda, const Integer& mu) {
  Integer r = (lambda - mu) % 4;
  if (r < 0) r += 4;
  return static_cast<int>(r);
}

}  // namespace

SpectrumPartition partition_from_involution(const AssociationScheme& s, int t) {
  const auto classes = involution_classes(s);
  if (std::find(classes.begin(), classes.end(), t) == classes.end())
    throw std::invalid_argument("not an involution class");
  SpectrumPartition part;
  part.t_class = t;
  part.signs.resize(s.d + 1);
  for (int j = 0; j <= s.d; ++j) {
    const Integer& p = s.P[t][j];
    if (p != 1 && p != -1)
      throw std::logic_error("involution class with eigenvalue not +-1");
    part.signs[j] = (p == 1) ? 1 : -1;
  }
  return part;
}

SpectrumPartition antipodal_partition(int k) {
  SpectrumPartition part;
  part.t_class = k;
  part.signs.resize(k + 1);
  for (int j = 0; j <= k; ++j) part.signs[j] = (j % 2 == 0) ? 1 : -1;
  return part;
}

Integer alpha(std::span<const Integer> sorted_eigenvalues) {
  if (sorted_eigenvalues.size() < 2) throw std::invalid_argument("trivial spectrum");
  for (std::size_t t = 1; t < sorted_eigenvalues.size(); ++t)
    if (!(sorted_eigenvalues[t - 1] > sorted_eigenvalues[t]))
      throw std::invalid_argument("eigenvalues must be distinct and sorted descending");
  std::vector<Integer> gaps;
  gaps.reserve(sorted_eigenvalues.size() - 1);
  for (std::size_t j = 1; j < sorted_eigenvalues.size(); ++j)
    gaps.push_back(sorted_eigenvalues[0] - sorted_eigenvalues[j]);
  return gcd_all(gaps);
}

Integer alpha(const std::vector<Integer>& sorted_eigenvalues) {
  return alpha(std::span<const Integer>(sorted_eigenvalues.data(),
                                        sorted_eigenvalues.size()));
}

CriterionResult ord2_criterion(std::span<const Integer> theta,
                               const SpectrumPartition& part) {
  if (theta.size() != part.signs.size())
    throw std::invalid_argument("partition does not match spectrum length");
  if (theta.size() < 2) throw std::invalid_argument("trivial spectrum");

  CriterionResult res;

  // alpha over the nonzero gaps only; repeated values across distinct
  // eigenspaces contribute a zero gap with ord2 = infinity.
  std::vector<Integer> nonzero;
  for (std::size_t j = 1; j < theta.size(); ++j) {
    const Integer gap = theta[0] - theta[j];
    if (gap != 0) nonzero.push_back(gap);
  }
  if (nonzero.empty()) throw std::invalid_argument("trivial spectrum");
  res.alpha = gcd_all(nonzero);
  res.ord2_alpha = ord2(res.alpha);

  for (std::size_t j = 1; j < theta.size(); ++j) {
    GapInfo info;
    info.j = static_cast<int>(j);
    info.sign = part.signs[j];
    info.gap = theta[0] - theta[j];
    info.ord2_gap = ord2(info.gap);
    info.violates = (info.sign > 0) ? !(info.ord2_gap > res.ord2_alpha)
                                    : !(info.ord2_gap == res.ord2_alpha);
    if (info.violates) res.violations.push_back(info.j);
    res.gaps.push_back(std::move(info));
  }
  res.pass = res.violations.empty();
  return res;
}

CriterionResult ord2_criterion(const std::vector<Integer>& theta,
                               const SpectrumPartition& part) {
  return ord2_criterion(std::span<const Integer>(theta.data(), theta.size()), part);
}

std::string_view to_string(ObstructionTag tag) {
  switch (tag) {
    case ObstructionTag::NotTwoK: return "NOT_2K";
    case ObstructionTag::NoInvolutionClass: return "NO_INVOLUTION_CLASS";
    case ObstructionTag::DegreeEven: return "DEGREE_EVEN";
    case ObstructionTag::OddEven: return "ODD_EVEN";
    case ObstructionTag::OddOdd: return "ODD_ODD";
    case ObstructionTag::Ord2Fail: return "ORD2_FAIL";
  }
  return "?";
}

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::Pst: return "PST";
    case Decision::NoPst: return "NO_PST";
    case Decision::InconclusivePass: return "INCONCLUSIVE_PASS";
  }
  return "?";
}

PstVerdict verdict_single_class(int n, int k, int i) {
  if (k < 1 || n < 2 * k || i < 0 || i > k)
    throw std::invalid_argument("invalid parameters");
  if (i == k) throw std::invalid_argument("identity class");

  PstVerdict v;
  v.n = n;
  v.k = k;
  v.classes = {i};

  if (n != 2 * k) {
    v.decision = Decision::NoPst;
    v.obstruction = ObstructionTag::NotTwoK;
    v.detail = "n != 2k: the scheme has no fixed-point-free involution class "
               "and every candidate pair is moved by a transposition fixing "
               "the source vertex";
    return v;
  }

  const auto lam = spectrum(JohnsonParams(n, k, i));
  const auto part = antipodal_partition(k);
  v.criterion = ord2_criterion(lam, part);

  if (i == 0) {
    v.decision = Decision::Pst;
    v.time = std::numbers::pi / 2;
    v.partner_rule = kAntipodalRule;
    v.detail = "Kneser class: disjoint union of K_2 edges on antipodal pairs";
    return v;
  }

  v.decision = Decision::NoPst;
  const bool cki_odd = binom(k, i) % 2 != 0;
  const bool ck1i_odd = binom(k - 1, i) % 2 != 0;

  if (!cki_odd) {
    v.obstruction = ObstructionTag::DegreeEven;
    // ord2(alpha) <= ord2(lambda_k - lambda_{k-1}) < ord2(lambda_0 - lambda_1)
    const ExtendedNat top_gap = ord2(lam[0] - lam[1]);
    const ExtendedNat bottom_gap = ord2(lam[k] - lam[k - 1]);
    std::ostringstream os;
    os << "C(" << k << "," << i << ") even; ord2(lambda_0-lambda_1)="
       << ord2_str(top_gap) << " exceeds ord2(lambda_k-lambda_{k-1})="
       << ord2_str(bottom_gap) << ", so the I- equality at j=1 cannot hold";
    v.detail = os.str();
  } else if (!ck1i_odd) {
    v.obstruction = ObstructionTag::OddEven;
    std::ostringstream os;
    os << "C(" << k << "," << i << ") odd, C(" << k - 1 << "," << i
       << ") even; ord2(alpha)=" << ord2_str(v.criterion->ord2_alpha)
       << " <= 1 while ord2(lambda_0-lambda_1)=" << ord2_str(ord2(lam[0] - lam[1]))
       << " >= 2 with 1 in I-";
    v.detail = os.str();
  } else {
    v.obstruction = ObstructionTag::OddOdd;
    const int hi = (k % 2 == 0) ? k - i + 2 : k - i + 1;
    const int lo = (k % 2 == 0) ? k - i : k - i - 1;
    std::ostringstream os;
    os << "C(" << k << "," << i << ") and C(" << k - 1 << "," << i
       << ") both odd; lambda_" << hi << "-lambda_" << lo << " = 2 (mod 4) "
       << "(observed " << diff_mod4(lam[hi], lam[lo])
       << ") rules out ord2 > 1 on both I+ gaps";
    v.detail = os.str();
  }
  return v;
}

PstVerdict verdict_union(int n, int k, std::vector<int> classes) {
  if (k < 1 || n < 2 * k) throw std::invalid_argument("invalid parameters");
  if (classes.empty()) throw std::invalid_argument("empty class set");
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  for (int c : classes)
    if (c < 0 || c > k - 1) throw std::invalid_argument("class index out of range");

  PstVerdict v;
  v.n = n;
  v.k = k;
  v.classes = classes;

  if (n != 2 * k) {
    v.decision = Decision::NoPst;
    v.obstruction = ObstructionTag::NotTwoK;
    v.detail = "n != 2k: PST between vertices of a union of classes forces "
               "complementary endpoints, which do not exist";
    return v;
  }

  // union spectrum per eigenspace
  std::vector<Integer> theta(k + 1, 0);
  for (int c : classes) {
    const auto lam = spectrum(JohnsonParams(n, k, c));
    for (int j = 0; j <= k; ++j) theta[j] += lam[j];
  }
  const auto part = antipodal_partition(k);
  v.criterion = ord2_criterion(theta, part);

  const bool all_but_kneser =
      static_cast<int>(classes.size()) == k - 1 && classes.front() == 1;
  const bool all_classes =
      static_cast<int>(classes.size()) == k && classes.front() == 0;
  const Integer vertex_count = binom(n, k);

  if (all_but_kneser && vertex_count % 4 == 0) {
    v.decision = Decision::Pst;
    v.time = std::numbers::pi / 2;
    v.partner_rule = kAntipodalRule;
    v.detail = "complement of the Kneser class with C(2k,k) = " +
               vertex_count.str() + " = 0 (mod 4): PST transfers from the "
               "Kneser matching to its complement at pi/2";
    return v;
  }

  if (all_classes && vertex_count > 2) {
    v.decision = Decision::NoPst;
    v.obstruction = ObstructionTag::Ord2Fail;
    v.detail = "union of all classes is the complete graph K_" +
               vertex_count.str() + ", which has no PST; the ord2 criterion "
               "fails at every even eigenspace index";
    return v;
  }

  if (v.criterion->pass) {
    v.decision = Decision::InconclusivePass;
    v.detail = "ord2 necessary conditions met; confirm with the walk oracle";
  } else {
    v.decision = Decision::NoPst;
    v.obstruction = ObstructionTag::Ord2Fail;
    std::ostringstream os;
    os << "ord2 criterion fails at j =";
    for (int j : v.criterion->violations) os << ' ' << j;
    v.detail = os.str();
  }
  return v;
}

std::optional<std::pair<int, int>> automorphism_obstruction(int n, int k,
                                                            const KSubset& a,
                                                            const KSubset& b) {
  if (a.n != n || b.n != n || a.k() != k || b.k() != k)
    throw std::invalid_argument("mismatched subset parameters");
  if (a == b) throw std::invalid_argument("vertices must be distinct");

  const int inter = intersection_class(a, b);
  if (n == 2 * k && inter == 0) return std::nullopt;  // B = complement(A)

  if (inter > 0) {
    // Case 1: swap an element of A∩B with one of A\B; fixes A, moves B.
    int x = 0, xp = 0;
    for (int e : a.elements) {
      if (b.contains(e) && x == 0) x = e;
      if (!b.contains(e) && xp == 0) xp = e;
    }
    return std::make_pair(x, xp);
  }

  // Case 2: A and B disjoint but not complementary; both endpoints of the
  // transposition live outside A.
  int y = b.elements.front();
  int yp = 0;
  for (int e = 1; e <= n; ++e)
    if (!a.contains(e) && !b.contains(e)) {
      yp = e;
      break;
    }
  return std::make_pair(y, yp);
}

std::string_view to_string(CheckStatus st) {
  switch (st) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

bool CongruenceReport::all_ok() const {
  return adjacent_pair != CheckStatus::Fail && even_k_pair != CheckStatus::Fail &&
         odd_k_pair != CheckStatus::Fail && alpha_bound != CheckStatus::Fail;
}

CongruenceReport validate_congruence_lemmas(int k, int i) {
  if (k < 2 || i < 1 || i > k - 1) throw std::invalid_argument("invalid parameters");
  CongruenceReport rep;
  rep.k = k;
  rep.i = i;

  const bool cki_odd = binom(k, i) % 2 != 0;
  const bool ck1i_odd = binom(k - 1, i) % 2 != 0;
  if (!cki_odd) return rep;  // every check is gated on C(k,i) odd

  const auto lam = spectrum(JohnsonParams(2 * k, k, i));

  rep.adjacent_pair =
      diff_mod4(lam[i], lam[i + 1]) == 2 ? CheckStatus::Pass : CheckStatus::Fail;

  std::vector<Integer> gaps;
  for (int j = 1; j <= k; ++j) gaps.push_back(lam[0] - lam[j]);
  const ExtendedNat oa = ord2(gcd_all(gaps));
  rep.alpha_bound =
      (oa.is_finite() && oa.value() <= 1) ? CheckStatus::Pass : CheckStatus::Fail;

  if (ck1i_odd && k % 2 == 0)
    rep.even_k_pair = diff_mod4(lam[k - i + 2], lam[k - i]) == 2
                          ? CheckStatus::Pass
                          : CheckStatus::Fail;
  if (ck1i_odd && k % 2 == 1)
    rep.odd_k_pair = diff_mod4(lam[k - i + 1], lam[k - i - 1]) == 2
                         ? CheckStatus::Pass
                         : CheckStatus::Fail;
  return rep;
}

nlohmann::json verdict_json(const PstVerdict& v) {
  nlohmann::json j;
  j["n"] = v.n;
  j["k"] = v.k;
  j["classes"] = v.classes;
  j["status"] = std::string(to_string(v.decision));
  j["has_pst"] = v.has_pst();
  j["time"] = v.time ? nlohmann::json(*v.time) : nlohmann::json(nullptr);
  j["partner_rule"] = v.partner_rule;
  if (v.obstruction)
    j["obstruction"] = {{"tag", std::string(to_string(*v.obstruction))},
                        {"detail", v.detail}};
  else
    j["obstruction"] = nullptr;
  if (v.decision != Decision::NoPst) j["note"] = v.detail;

  if (v.criterion) {
    nlohmann::json gaps = nlohmann::json::array();
    for (const auto& g : v.criterion->gaps) {
      nlohmann::json e;
      e["j"] = g.j;
      e["sign"] = g.sign;
      e["gap"] = g.gap.str();
      e["ord2"] = g.ord2_gap.is_infinite() ? nlohmann::json(nullptr)
                                           : nlohmann::json(g.ord2_gap.value());
      e["violates"] = g.violates;
      gaps.push_back(e);
    }
    j["evidence"] = {
        {"alpha", v.criterion->alpha.str()},
        {"ord2_alpha", v.criterion->ord2_alpha.is_infinite()
                           ? nlohmann::json(nullptr)
                           : nlohmann::json(v.criterion->ord2_alpha.value())},
        {"criterion_pass", v.criterion->pass},
        {"gaps", gaps}};
  } else {
    j["evidence"] = nullptr;
  }
  return j;
}

}  // namespace jpst
