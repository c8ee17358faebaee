#include "jpst/report.hpp"

#include "jpst/walk.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace jpst {

namespace {

constexpr double kPstThreshold = 1e-9;   // modulus >= 1 - threshold counts as PST
constexpr double kScanCeiling = 0.999;   // absence evidence: grid max below this
constexpr double kScanStep = 1e-4;

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json ord2_json(const ExtendedNat& e) {
  return e.is_infinite() ? nlohmann::json(nullptr) : nlohmann::json(e.value());
}

nlohmann::json amplitude_oracle(int n, int k, const std::vector<int>& classes,
                                double t) {
  const Amplitude a = antipodal_amplitude(n, k, classes, t);
  return {{"kind", "amplitude_at_time"},
          {"t", t},
          {"re", a.re},
          {"im", a.im},
          {"modulus", a.modulus()},
          {"confirms_pst", a.modulus() >= 1.0 - kPstThreshold}};
}

nlohmann::json scan_oracle(int n, int k, const std::vector<int>& classes) {
  const auto w = make_walk_data(n, k, classes);
  const auto u = subset_unrank(n, k, 0);
  const auto result = scan_max_amplitude(w, u, u.complement(), 2 * std::numbers::pi,
                                         kScanStep);
  return {{"kind", "scan"},
          {"t_max", 2 * std::numbers::pi},
          {"step", kScanStep},
          {"t_star", result.t_star},
          {"max_modulus", result.max_modulus},
          {"below_pst_threshold", result.max_modulus < kScanCeiling},
          {"detects_pst", result.max_modulus >= 1.0 - kPstThreshold}};
}

nlohmann::json witness_oracle(int n, int k) {
  // sample pair: the first vertex and a vertex differing in one element
  const KSubset a = subset_unrank(n, k, 0);
  std::vector<int> shifted = a.elements;
  shifted.back() = k + 1;
  const KSubset b(n, shifted);
  const auto w = automorphism_obstruction(n, k, a, b);
  nlohmann::json j{{"kind", "automorphism_witness"},
                   {"vertex_a", a.elements},
                   {"vertex_b", b.elements}};
  j["transposition"] =
      w ? nlohmann::json({w->first, w->second}) : nlohmann::json(nullptr);
  return j;
}

}  // namespace

std::string_view artifact_version() { return "0.1.0"; }

double parse_time(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty time");

  const auto pos = s.find("pi");
  if (pos == std::string::npos) {
    std::size_t used = 0;
    const double val = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad time: " + text);
    return val;
  }

  std::string num = s.substr(0, pos);
  std::string rest = s.substr(pos + 2);
  if (!num.empty() && num.back() == '*') num.pop_back();

  long long numerator = 1, denominator = 1;
  if (!num.empty()) {
    std::size_t used = 0;
    numerator = std::stoll(num, &used);
    if (used != num.size()) throw std::invalid_argument("bad time: " + text);
  }
  if (!rest.empty()) {
    if (rest.front() != '/') throw std::invalid_argument("bad time: " + text);
    std::size_t used = 0;
    denominator = std::stoll(rest.substr(1), &used);
    if (used != rest.size() - 1 || denominator == 0)
      throw std::invalid_argument("bad time: " + text);
  }
  return static_cast<double>(numerator) * std::numbers::pi /
         static_cast<double>(denominator);
}

nlohmann::json make_envelope(const std::string& command,
                             nlohmann::json parameters, nlohmann::json results) {
  return {{"command", command},
          {"parameters", std::move(parameters)},
          {"results", std::move(results)},
          {"version", std::string(artifact_version())},
          {"timestamp", iso_timestamp()}};
}

nlohmann::json cmd_scheme_info(int n, int k) {
  const auto s = build_johnson_scheme(n, k);
  nlohmann::json results;
  results["scheme"] = scheme_summary_json(s);
  results["involution_classes"] = involution_classes(s);

  nlohmann::json conn = nlohmann::json::array();
  for (int i = 0; i < k; ++i)
    conn.push_back({{"i", i},
                    {"predicted_connected",
                     predicted_connected(JohnsonParams(n, k, i))}});
  results["connectivity"] = conn;
  return make_envelope("scheme-info", {{"n", n}, {"k", k}}, results);
}

PstCommandResult cmd_pst(int n, int k, const std::vector<int>& classes) {
  const PstVerdict verdict = classes.size() == 1
                                 ? verdict_single_class(n, k, classes.front())
                                 : verdict_union(n, k, classes);

  nlohmann::json results;
  results["verdict"] = verdict_json(verdict);
  if (n != 2 * k)
    results["oracle"] = witness_oracle(n, k);
  else if (verdict.decision == Decision::Pst)
    results["oracle"] = amplitude_oracle(n, k, verdict.classes, *verdict.time);
  else
    results["oracle"] = scan_oracle(n, k, verdict.classes);

  PstCommandResult out;
  out.envelope = make_envelope("pst", {{"n", n}, {"k", k}, {"classes", classes}},
                               results);
  out.exit_code = verdict.decision == Decision::InconclusivePass ? 3 : 0;
  return out;
}

nlohmann::json cmd_survey(int k_max) {
  if (k_max < 2) throw std::invalid_argument("invalid parameters");
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 2; k <= k_max; ++k)
    for (int i = 0; i < k; ++i) {
      const PstVerdict v = verdict_single_class(2 * k, k, i);
      nlohmann::json row;
      row["k"] = k;
      row["i"] = i;
      row["binom_k_i_parity"] = binom(k, i) % 2 == 0 ? "even" : "odd";
      row["binom_km1_i_parity"] = binom(k - 1, i) % 2 == 0 ? "even" : "odd";
      row["has_pst"] = v.has_pst();
      row["obstruction"] =
          v.obstruction ? std::string(to_string(*v.obstruction)) : "";
      row["alpha"] = v.criterion->alpha.str();
      row["ord2_alpha"] = ord2_json(v.criterion->ord2_alpha);
      rows.push_back(std::move(row));
    }
  return make_envelope("survey", {{"k_max", k_max}},
                       {{"k_max", k_max}, {"rows", rows}});
}

std::string survey_csv(const nlohmann::json& survey_envelope) {
  std::ostringstream os;
  os << "k,i,binom_k_i_parity,binom_km1_i_parity,has_pst,obstruction,alpha,"
        "ord2_alpha\n";
  for (const auto& row : survey_envelope.at("results").at("rows")) {
    os << row.at("k").get<int>() << ',' << row.at("i").get<int>() << ','
       << row.at("binom_k_i_parity").get<std::string>() << ','
       << row.at("binom_km1_i_parity").get<std::string>() << ','
       << (row.at("has_pst").get<bool>() ? "yes" : "no") << ','
       << row.at("obstruction").get<std::string>() << ','
       << row.at("alpha").get<std::string>() << ',';
    if (row.at("ord2_alpha").is_null())
      os << "inf";
    else
      os << row.at("ord2_alpha").get<int>();
    os << '\n';
  }
  return os.str();
}

namespace {

struct Suite {
  std::string name;
  long long checked = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures.size() < 32) failures.push_back(what);
    if (!ok && failures.size() == 32) failures.push_back("...");
  }
};

// Pascal triangle rows 0..max as exact integers.
std::vector<std::vector<Integer>> pascal_table(int max) {
  std::vector<std::vector<Integer>> t(max + 1);
  for (int a = 0; a <= max; ++a) {
    t[a].resize(a + 1);
    t[a][0] = t[a][a] = 1;
    for (int b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
  }
  return t;
}

std::string cell(int k, int i, const std::string& what) {
  return "(k=" + std::to_string(k) + ",i=" + std::to_string(i) + "," + what + ")";
}

}  // namespace

VerifyCommandResult cmd_verify(int k_max, bool corrupt) {
  if (k_max < 2) throw std::invalid_argument("invalid parameters");
  std::vector<Suite> suites;

  const auto table = pascal_table(512);

  {
    Suite s{"lucas_cross_check"};
    // binom() agrees with the Pascal recurrence along a sample diagonal,
    // then Lucas digitwise agrees with the table everywhere
    for (int a = 0; a <= 512; a += 7)
      s.check(binom(a, a / 2) == table[a][a / 2],
              "binom(" + std::to_string(a) + "," + std::to_string(a / 2) + ")");
    for (int p : {2, 3, 5})
      for (int a = 0; a <= 512; ++a)
        for (int b = 0; b <= a; ++b) {
          const int expect = static_cast<int>(table[a][b] % p);
          if (binom_mod_p(a, b, p) != expect)
            s.check(false, "lucas(" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(p) + ")");
          else
            ++s.checked;
        }
    suites.push_back(std::move(s));
  }

  {
    Suite s{"parity_even_a_odd_b"};
    for (int a = 0; a <= 512; a += 2)
      for (int b = 1; b <= a; b += 2)
        s.check(table[a][b] % 2 == 0,
                "C(" + std::to_string(a) + "," + std::to_string(b) + ") odd");
    suites.push_back(std::move(s));
  }

  {
    Suite s{"vandermonde"};
    const auto big = pascal_table(128);
    auto at = [&](int a, int b) -> Integer {
      if (b < 0 || a < 0 || b > a) return 0;
      return big[a][b];
    };
    for (int a = 0; a <= 64; ++a)
      for (int b = 0; b <= 64; ++b)
        for (int c = 0; c <= 64; ++c) {
          Integer sum = 0;
          for (int l = 0; l <= a; ++l) sum += at(a, l) * at(b, c - l);
          s.check(sum == at(a + b, c),
                  "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ")");
        }
    suites.push_back(std::move(s));
  }

  {
    Suite s{"either_or_even"};
    for (int k = 1; k <= 64; ++k)
      for (int i = 1; i < k; ++i) {
        if (table[k][i] % 2 == 0) continue;
        for (int l = 1; l <= k - i; ++l)
          s.check(binom(i, l) % 2 == 0 || binom(k - i, l) % 2 == 0,
                  cell(k, i, "l=" + std::to_string(l)));
      }
    suites.push_back(std::move(s));
  }

  {
    Suite s{"triple_binomial_even"};
    for (int k = 1; k <= 64; ++k)
      for (int i = 1; i < k; ++i) {
        if (table[k][i] % 2 == 0) continue;
        for (int l = 0; l <= k - i; ++l) {
          const Integer prod =
              binom(k - i, l) * binom(i, k - i - l) * binom(i - 2, k - i - l - 2);
          s.check(prod % 2 == 0, cell(k, i, "l=" + std::to_string(l)));
        }
      }
    suites.push_back(std::move(s));
  }

  {
    Suite s{"odd_summation"};
    for (int k = 2; k <= 64; k += 2)
      for (int i = 1; i < k; ++i) {
        if (table[k][i] % 2 == 0 || table[k - 1][i] % 2 == 0) continue;
        Integer sum = 0;
        for (int l = 0; l <= k - i - 2; l += 2) {
          const Integer b = binom(i - 2, k - i - l - 2);
          sum += binom(k - i, l) * b * b;
        }
        s.check(sum % 2 == 1, cell(k, i, "sum"));
      }
    suites.push_back(std::move(s));
  }

  {
    Suite s{"closed_form_consistency"};
    bool corruption_pending = corrupt;
    for (int k = 2; k <= k_max; ++k)
      for (int i = 0; i < k; ++i) {
        const auto cf = closed_form_eigenvalues(k, i);
        auto lam = spectrum(JohnsonParams(2 * k, k, i));
        if (corruption_pending) {
          lam[0] += 1;  // negative control: must be caught below
          corruption_pending = false;
        }
        s.check(cf.lambda0 == lam[0], cell(k, i, "lambda0"));
        s.check(cf.lambda1 == lam[1], cell(k, i, "lambda1"));
        s.check(cf.lambda_k == lam[k], cell(k, i, "lambda_k"));
        s.check(cf.lambda_k_minus_1 == lam[k - 1], cell(k, i, "lambda_{k-1}"));
        s.check(cf.lambda_i == lam[i], cell(k, i, "lambda_i"));
        s.check(cf.lambda_i_plus_1 == lam[i + 1], cell(k, i, "lambda_{i+1}"));
        s.check(lam[0] - lam[1] == 2 * binom(k, i) * binom(k - 1, i),
                cell(k, i, "top_gap"));
      }
    suites.push_back(std::move(s));
  }

  {
    Suite s{"congruence_lemmas"};
    for (int k = 2; k <= k_max; ++k)
      for (int i = 1; i < k; ++i) {
        const auto rep = validate_congruence_lemmas(k, i);
        s.check(rep.adjacent_pair != CheckStatus::Fail, cell(k, i, "adjacent_pair"));
        s.check(rep.even_k_pair != CheckStatus::Fail, cell(k, i, "even_k_pair"));
        s.check(rep.odd_k_pair != CheckStatus::Fail, cell(k, i, "odd_k_pair"));
        s.check(rep.alpha_bound != CheckStatus::Fail, cell(k, i, "alpha_bound"));
      }
    suites.push_back(std::move(s));
  }

  bool ok = true;
  nlohmann::json suites_json = nlohmann::json::array();
  for (const auto& s : suites) {
    ok = ok && s.failures.empty();
    suites_json.push_back({{"name", s.name},
                           {"checked", s.checked},
                           {"failures", s.failures}});
  }

  VerifyCommandResult out;
  out.ok = ok;
  out.envelope = make_envelope(
      "verify", {{"k_max", k_max}, {"corrupt", corrupt}},
      {{"k_max", k_max}, {"ok", ok}, {"suites", suites_json}});
  return out;
}

nlohmann::json cmd_walk(int n, int k, const std::vector<int>& classes,
                        const KSubset& from, const KSubset& to, double t) {
  const auto w = make_walk_data(n, k, classes);
  const Amplitude a = transition_entry(w, from, to, t);
  nlohmann::json results{{"n", n},
                         {"k", k},
                         {"classes", w.classes},
                         {"from", from.elements},
                         {"to", to.elements},
                         {"t", t},
                         {"re", a.re},
                         {"im", a.im},
                         {"modulus", a.modulus()}};
  return make_envelope("walk",
                       {{"n", n},
                        {"k", k},
                        {"classes", classes},
                        {"from", from.elements},
                        {"to", to.elements},
                        {"t", t}},
                       results);
}

std::string walk_trace_csv(int n, int k, const std::vector<int>& classes,
                           const KSubset& from, const KSubset& to, double t_max,
                           int points) {
  if (points < 1) throw std::invalid_argument("invalid parameters");
  const auto w = make_walk_data(n, k, classes);
  std::ostringstream os;
  os << "t,re,im,modulus\n";
  char line[128];
  for (int s = 1; s <= points; ++s) {
    const double t = t_max * s / points;
    const Amplitude a = transition_entry(w, from, to, t);
    std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,%.12g\n", t, a.re, a.im,
                  a.modulus());
    os << line;
  }
  return os.str();
}

}  // namespace jpst
