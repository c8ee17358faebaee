#pragma once

#include "jpst/johnson.hpp"
#include "jpst/pst.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace jpst {

std::string_view artifact_version();

// Times are rational multiples of pi parsed exactly before the single float
// conversion: "pi", "pi/2", "3pi/4", "2pi", "0.75". Throws on bad input.
double parse_time(const std::string& text);

// {command, parameters, results, version, timestamp}. The results payload is
// deterministic for identical parameters; the timestamp is not.
nlohmann::json make_envelope(const std::string& command,
                             nlohmann::json parameters, nlohmann::json results);

nlohmann::json cmd_scheme_info(int n, int k);

struct PstCommandResult {
  nlohmann::json envelope;
  int exit_code = 0;  // 0 decided, 3 inconclusive
};
PstCommandResult cmd_pst(int n, int k, const std::vector<int>& classes);

nlohmann::json cmd_survey(int k_max);
std::string survey_csv(const nlohmann::json& survey_envelope);

struct VerifyCommandResult {
  nlohmann::json envelope;
  bool ok = false;
};
// Runs the combinatorial property suites at their fixed ranges plus the
// closed-form and congruence validators up to k_max. With corrupt set, one
// eigenvalue is perturbed as a negative control and the run must fail.
VerifyCommandResult cmd_verify(int k_max, bool corrupt = false);

nlohmann::json cmd_walk(int n, int k, const std::vector<int>& classes,
                        const KSubset& from, const KSubset& to, double t);

// Amplitude trace "t,re,im,modulus" over a uniform grid on (0, t_max].
std::string walk_trace_csv(int n, int k, const std::vector<int>& classes,
                           const KSubset& from, const KSubset& to, double t_max,
                           int points = 1000);

}  // namespace jpst
