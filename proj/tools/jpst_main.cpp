#include "jpst/report.hpp"
#include "jpst/walk.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

std::vector<int> parse_class_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("bad class list: " + text);
    std::size_t used = 0;
    out.push_back(std::stoi(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad class list: " + text);
  }
  if (out.empty()) throw std::invalid_argument("empty class list");
  return out;
}

jpst::KSubset parse_vertex(int n, const std::string& text) {
  std::vector<int> elems;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    elems.push_back(std::stoi(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad vertex: " + text);
  }
  return jpst::KSubset(n, std::move(elems));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  os << content;
}

void emit(const nlohmann::json& envelope, bool as_json) {
  if (as_json) {
    std::cout << envelope.dump(2) << '\n';
    return;
  }
  // compact human-readable rendering of the results payload
  std::cout << envelope.at("command").get<std::string>() << " "
            << envelope.at("parameters").dump() << "\n"
            << envelope.at("results").dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Johnson scheme construction and perfect state transfer decisions"};
  app.require_subcommand(1);

  int n = 0, k = 0, k_max = 0;
  std::string classes_text, time_text = "pi/2", from_text, to_text, out_path;
  bool as_json = false, trace = false, corrupt = false, csv_stdout = false;

  auto* scheme_info = app.add_subcommand(
      "scheme-info", "Eigenmatrix, valencies, multiplicities and involution "
                     "classes of J(n,k)");
  scheme_info->add_option("--n", n)->required();
  scheme_info->add_option("--k", k)->required();
  scheme_info->add_flag("--json", as_json);

  auto* pst = app.add_subcommand(
      "pst", "Decide PST for a class or union of classes, with oracle "
             "confirmation");
  pst->add_option("--n", n)->required();
  pst->add_option("--k", k)->required();
  pst->add_option("--classes", classes_text, "comma list of intersection sizes")
      ->required();
  pst->add_flag("--json", as_json);

  auto* survey = app.add_subcommand(
      "survey", "Single-class verdict table over 2 <= k <= kmax");
  survey->add_option("--kmax", k_max)->required();
  survey->add_option("--out", out_path, "write CSV rows to this path");
  survey->add_flag("--csv", csv_stdout, "write CSV rows to stdout instead of JSON");
  survey->add_flag("--json", as_json);

  auto* verify = app.add_subcommand(
      "verify", "Run the combinatorial property suites and the eigenvalue "
                "congruence validators");
  verify->add_option("--kmax", k_max)->required();
  verify->add_flag("--corrupt", corrupt,
                   "perturb one eigenvalue as a negative control (must fail)");
  verify->add_flag("--json", as_json);

  auto* walk = app.add_subcommand(
      "walk", "Transition amplitude H(t)_{u,v} on a union of classes");
  walk->add_option("--n", n)->required();
  walk->add_option("--k", k)->required();
  walk->add_option("--classes", classes_text)->required();
  walk->add_option("--time", time_text, "e.g. pi/2, 3pi/4, 0.75");
  walk->add_option("--from", from_text, "comma list of subset elements")
      ->required();
  walk->add_option("--to", to_text)->required();
  walk->add_flag("--trace", trace, "emit a CSV amplitude trace over (0, time]");
  walk->add_option("--out", out_path, "CSV output path for --trace");
  walk->add_flag("--csv", csv_stdout, "write the trace to stdout instead of JSON");
  walk->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (scheme_info->parsed()) {
      emit(jpst::cmd_scheme_info(n, k), as_json);
      return kExitOk;
    }

    if (pst->parsed()) {
      const auto result = jpst::cmd_pst(n, k, parse_class_list(classes_text));
      emit(result.envelope, as_json);
      return result.exit_code;
    }

    if (survey->parsed()) {
      const auto envelope = jpst::cmd_survey(k_max);
      if (!out_path.empty()) write_file(out_path, jpst::survey_csv(envelope));
      if (csv_stdout)
        std::cout << jpst::survey_csv(envelope);
      else
        emit(envelope, as_json);
      return kExitOk;
    }

    if (verify->parsed()) {
      const auto result = jpst::cmd_verify(k_max, corrupt);
      emit(result.envelope, as_json);
      return result.ok ? kExitOk : kExitVerifyFail;
    }

    if (walk->parsed()) {
      const auto classes = parse_class_list(classes_text);
      const auto from = parse_vertex(n, from_text);
      const auto to = parse_vertex(n, to_text);
      const double t = jpst::parse_time(time_text);
      if (trace) {
        if (out_path.empty() && !csv_stdout)
          throw std::invalid_argument("--trace requires --out or --csv");
        const std::string csv = jpst::walk_trace_csv(n, k, classes, from, to, t);
        if (!out_path.empty()) write_file(out_path, csv);
        if (csv_stdout) {
          std::cout << csv;
          return kExitOk;
        }
      }
      emit(jpst::cmd_walk(n, k, classes, from, to, t), as_json);
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFail;
  }
  return kExitUsage;
}
