#pragma once

#include "jpst/exactnum.hpp"
#include "jpst/johnson.hpp"
#include "jpst/scheme.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jpst {

/// Sign vector splitting eigenspace indices into I+ (s_j = +1) and
/// I- (s_j = -1) relative to an involution class T: s_j is the eigenvalue
/// of T on eigenspace j. Always s_0 = +1.
struct SpectrumPartition {
  std::vector<int> signs;
  int t_class = -1;
};

// Partition induced by involution class t; throws if t is not one.
SpectrumPartition partition_from_involution(const AssociationScheme& s, int t);

// Partition of J(2k,k) relative to the Kneser class: s_j = (-1)^j.
SpectrumPartition antipodal_partition(int k);

// gcd of the gaps lambda_0 - lambda_j for a strictly descending list of
// distinct eigenvalues. Throws "trivial spectrum" if fewer than two values.
Integer alpha(std::span<const Integer> sorted_eigenvalues);
Integer alpha(const std::vector<Integer>& sorted_eigenvalues);

/// Per-eigenspace record of the ord2 test.
struct GapInfo {
  int j = 0;
  int sign = 0;         // +1 / -1
  Integer gap;          // lambda_0 - lambda_j
  ExtendedNat ord2_gap; // infinity for a zero gap
  bool violates = false;
};

/// Outcome of the ord2 necessary condition: pass iff
/// ord2(lambda_0 - lambda_j) > ord2(alpha) on I+ and = ord2(alpha) on I-.
struct CriterionResult {
  bool pass = false;
  Integer alpha;            // gcd over the nonzero gaps
  ExtendedNat ord2_alpha;
  std::vector<GapInfo> gaps;      // j = 1..d
  std::vector<int> violations;    // every violating eigenspace index
};

// Eigenvalues are given per eigenspace index (not sorted); theta[0] is the
// eigenvalue on eigenspace 0, the valency for connected classes.
CriterionResult ord2_criterion(std::span<const Integer> theta,
                               const SpectrumPartition& part);
CriterionResult ord2_criterion(const std::vector<Integer>& theta,
                               const SpectrumPartition& part);

enum class ObstructionTag {
  NotTwoK,             // PST in the Johnson scheme forces n = 2k
  NoInvolutionClass,   // no fixed-point-free involution class available
  DegreeEven,          // C(k,i) even
  OddEven,             // C(k,i) odd, C(k-1,i) even
  OddOdd,              // both odd
  Ord2Fail,            // the ord2 criterion fails (unions)
};
std::string_view to_string(ObstructionTag tag);

enum class Decision { Pst, NoPst, InconclusivePass };
std::string_view to_string(Decision d);

/// Decision record for a class or union of classes of J(n,k).
struct PstVerdict {
  int n = 0, k = 0;
  std::vector<int> classes;  // intersection sizes of the union

  Decision decision = Decision::NoPst;
  std::optional<double> time;   // set iff decision == Pst
  std::string partner_rule;     // vertex pairing description when PST holds
  std::optional<ObstructionTag> obstruction;  // set iff decision == NoPst
  std::string detail;           // which condition fired, with its numbers
  std::optional<CriterionResult> criterion;   // spectrum evidence when computed

  bool has_pst() const { return decision == Decision::Pst; }
};

// The single-class decision: PST iff n = 2k and i = 0 (at time pi/2,
// between antipodal pairs). Negative verdicts carry the parity obstruction
// and the confirming ord2 evidence. i = k is rejected ("identity class").
PstVerdict verdict_single_class(int n, int k, int i);

// Decision for the edge-union of the classes J(n,k,i), i in `classes`
// (nonempty, each in [0,k-1]). Yes-cases: the union of all classes except
// the Kneser class when C(2k,k) is divisible by 4 (time pi/2). The ord2
// criterion is necessary only, so a pass outside the closed-form cases is
// reported as InconclusivePass for oracle confirmation.
PstVerdict verdict_union(int n, int k, std::vector<int> classes);

// If A and B are not complementary, a transposition of {1..n} fixing A
// setwise and moving B (so no PST between A and B is possible); nullopt
// iff B is the complement of A with n = 2k.
std::optional<std::pair<int, int>> automorphism_obstruction(int n, int k,
                                                            const KSubset& a,
                                                            const KSubset& b);

enum class CheckStatus { Pass, Fail, Skipped };
std::string_view to_string(CheckStatus st);

/// Results of the eigenvalue congruence checks for J(2k,k,i), each gated on
/// its hypothesis:
///   adjacent_pair:  lambda_i - lambda_{i+1} = 2 (mod 4)       [C(k,i) odd]
///   even_k_pair:    lambda_{k-i+2} - lambda_{k-i} = 2 (mod 4) [both odd, k even]
///   odd_k_pair:     lambda_{k-i+1} - lambda_{k-i-1} = 2 (mod 4) [both odd, k odd]
///   alpha_bound:    ord2(alpha) <= 1                          [C(k,i) odd]
struct CongruenceReport {
  int k = 0, i = 0;
  CheckStatus adjacent_pair = CheckStatus::Skipped;
  CheckStatus even_k_pair = CheckStatus::Skipped;
  CheckStatus odd_k_pair = CheckStatus::Skipped;
  CheckStatus alpha_bound = CheckStatus::Skipped;

  bool all_ok() const;  // no Fail entries
};

CongruenceReport validate_congruence_lemmas(int k, int i);

// Verdict JSON: {n, k, classes, has_pst, status, time, partner_rule,
// obstruction: {tag, detail} | null, evidence: {...} | null}.
nlohmann::json verdict_json(const PstVerdict& v);

}  // namespace jpst
