#include "jpst/exactnum.hpp"
#include "jpst/johnson.hpp"
#include "jpst/pst.hpp"
#include "jpst/report.hpp"
#include "jpst/scheme.hpp"
#include "jpst/walk.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include <cmath>
#include <complex>
#include <limits>

namespace py = pybind11;
using namespace jpst;

namespace {

py::int_ to_py(const Integer& x) { return py::int_(py::str(x.str())); }

py::object to_py(const Rational& q) {
  return py::module_::import("fractions")
      .attr("Fraction")(to_py(numerator(q)), to_py(denominator(q)));
}

py::object to_py(const ExtendedNat& e) {
  if (e.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(e.value());
}

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Integer integer_from_py(const py::int_& x) {
  return Integer(py::str(x).cast<std::string>());
}

std::vector<Integer> integer_list(const std::vector<py::int_>& xs) {
  std::vector<Integer> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(integer_from_py(x));
  return out;
}

std::vector<py::tuple> vertex_tuples(int n, int k) {
  std::vector<py::tuple> out;
  for (const auto& s : enumerate_vertices(n, k)) out.push_back(py::cast(s.elements));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Johnson scheme construction and perfect state transfer decisions";
  m.attr("__version__") = std::string(artifact_version());

  // exact combinatorics
  m.def("binom", [](long long a, long long b) { return to_py(binom(a, b)); },
        py::arg("a"), py::arg("b"),
        "C(a,b) as an exact integer; 0 outside 0 <= b <= a");
  m.def("ord2",
        [](const py::int_& x) { return to_py(ord2(integer_from_py(x))); },
        py::arg("x"), "exponent of 2 in x; inf for x = 0");
  m.def("gcd_all",
        [](const std::vector<py::int_>& xs) { return to_py(gcd_all(integer_list(xs))); },
        py::arg("xs"));
  m.def("dominates",
        [](const py::int_& b, const py::int_& a) {
          return dominates(integer_from_py(b), integer_from_py(a));
        },
        py::arg("b"), py::arg("a"),
        "base-2 digit domination b <= a (C(a,b) odd)");
  m.def("binom_mod_p",
        [](const py::int_& a, const py::int_& b, int p) {
          return binom_mod_p(integer_from_py(a), integer_from_py(b), p);
        },
        py::arg("a"), py::arg("b"), py::arg("p"));

  // Johnson graphs
  m.def("enumerate_vertices", &vertex_tuples, py::arg("n"), py::arg("k"),
        "all k-subsets of {1..n} in lexicographic order");
  m.def("intersection_size",
        [](int n, const std::vector<int>& a, const std::vector<int>& b) {
          return intersection_class(KSubset(n, a), KSubset(n, b));
        },
        py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("eigenvalue",
        [](int n, int k, int i, int j) {
          return to_py(eigenvalue(JohnsonParams(n, k, i), j));
        },
        py::arg("n"), py::arg("k"), py::arg("i"), py::arg("j"));
  m.def("spectrum",
        [](int n, int k, int i) {
          py::list out;
          for (const auto& lam : spectrum(JohnsonParams(n, k, i)))
            out.append(to_py(lam));
          return out;
        },
        py::arg("n"), py::arg("k"), py::arg("i"),
        "eigenvalues of J(n,k,i) indexed by eigenspace");
  m.def("closed_form_eigenvalues",
        [](int k, int i) {
          const auto cf = closed_form_eigenvalues(k, i);
          py::dict d;
          d["lambda0"] = to_py(cf.lambda0);
          d["lambda1"] = to_py(cf.lambda1);
          d["lambda_k"] = to_py(cf.lambda_k);
          d["lambda_k_minus_1"] = to_py(cf.lambda_k_minus_1);
          d["lambda_i"] = to_py(cf.lambda_i);
          d["lambda_i_plus_1"] = to_py(cf.lambda_i_plus_1);
          return d;
        },
        py::arg("k"), py::arg("i"));
  m.def("multiplicity",
        [](int n, int j) { return to_py(multiplicity(n, j)); }, py::arg("n"),
        py::arg("j"));
  m.def("predicted_connected",
        [](int n, int k, int i) {
          return predicted_connected(JohnsonParams(n, k, i));
        },
        py::arg("n"), py::arg("k"), py::arg("i"));
  m.def("graph_edges",
        [](int n, int k, int i, int vertex_budget) {
          const Graph g = build_graph(JohnsonParams(n, k, i), vertex_budget);
          std::vector<std::pair<int, int>> edges;
          for (int u = 0; u < g.vertex_count(); ++u)
            for (int w : g.adj[u])
              if (u < w) edges.emplace_back(u + 1, w + 1);
          return edges;
        },
        py::arg("n"), py::arg("k"), py::arg("i"),
        py::arg("vertex_budget") = 10000,
        "edge list of J(n,k,i), 1-based vertex ranks");
  m.def("is_connected",
        [](int n, int k, int i, int vertex_budget) {
          return bfs_connected(build_graph(JohnsonParams(n, k, i), vertex_budget));
        },
        py::arg("n"), py::arg("k"), py::arg("i"),
        py::arg("vertex_budget") = 10000);

  // scheme
  m.def("scheme_summary",
        [](int n, int k) {
          return json_to_py(scheme_summary_json(build_johnson_scheme(n, k)));
        },
        py::arg("n"), py::arg("k"));
  m.def("involution_classes",
        [](int n, int k) { return involution_classes(build_johnson_scheme(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("dual_eigenvalue",
        [](int n, int k, int j, int i) {
          return to_py(dual_eigenvalue(build_johnson_scheme(n, k), j, i));
        },
        py::arg("n"), py::arg("k"), py::arg("j"), py::arg("i"),
        "q_j(i) as an exact Fraction");
  m.def("idempotent_entry",
        [](int n, int k, int j, long long u, long long v) {
          return to_py(idempotent_entry(build_johnson_scheme(n, k), j, u, v));
        },
        py::arg("n"), py::arg("k"), py::arg("j"), py::arg("u"), py::arg("v"),
        "(E_j)_{u,v} for 0-based vertex ranks, as an exact Fraction");
  m.def("verify_axioms",
        [](int n, int k) {
          const auto rep = verify_axioms(build_johnson_scheme(n, k));
          py::list out;
          for (const auto& e : rep.entries)
            out.append(py::make_tuple(e.name, e.pass, e.detail));
          return out;
        },
        py::arg("n"), py::arg("k"));

  // PST decisions
  m.def("verdict_single_class",
        [](int n, int k, int i) { return json_to_py(verdict_json(verdict_single_class(n, k, i))); },
        py::arg("n"), py::arg("k"), py::arg("i"));
  m.def("verdict_union",
        [](int n, int k, const std::vector<int>& classes) {
          return json_to_py(verdict_json(verdict_union(n, k, classes)));
        },
        py::arg("n"), py::arg("k"), py::arg("classes"));
  m.def("automorphism_obstruction",
        [](int n, int k, const std::vector<int>& a, const std::vector<int>& b)
            -> py::object {
          const auto w = automorphism_obstruction(n, k, KSubset(n, a), KSubset(n, b));
          if (!w) return py::none();
          return py::make_tuple(w->first, w->second);
        },
        py::arg("n"), py::arg("k"), py::arg("a"), py::arg("b"));
  m.def("validate_congruence_lemmas",
        [](int k, int i) {
          const auto rep = validate_congruence_lemmas(k, i);
          py::dict d;
          d["k"] = rep.k;
          d["i"] = rep.i;
          d["adjacent_pair"] = std::string(to_string(rep.adjacent_pair));
          d["even_k_pair"] = std::string(to_string(rep.even_k_pair));
          d["odd_k_pair"] = std::string(to_string(rep.odd_k_pair));
          d["alpha_bound"] = std::string(to_string(rep.alpha_bound));
          d["all_ok"] = rep.all_ok();
          return d;
        },
        py::arg("k"), py::arg("i"));

  // walks
  m.def("transition_entry",
        [](int n, int k, const std::vector<int>& classes,
           const std::vector<int>& from, const std::vector<int>& to, double t) {
          const auto w = make_walk_data(n, k, classes);
          const Amplitude a = transition_entry(w, KSubset(n, from), KSubset(n, to), t);
          return std::complex<double>(a.re, a.im);
        },
        py::arg("n"), py::arg("k"), py::arg("classes"), py::arg("from_"),
        py::arg("to"), py::arg("t"));
  m.def("antipodal_amplitude",
        [](int n, int k, const std::vector<int>& classes, double t) {
          const Amplitude a = antipodal_amplitude(n, k, classes, t);
          return std::complex<double>(a.re, a.im);
        },
        py::arg("n"), py::arg("k"), py::arg("classes"), py::arg("t"));
  m.def("dense_walk_oracle",
        [](int n, int k, int i, double t, int vertex_budget) {
          return dense_walk_oracle(build_graph(JohnsonParams(n, k, i), vertex_budget), t);
        },
        py::arg("n"), py::arg("k"), py::arg("i"), py::arg("t"),
        py::arg("vertex_budget") = 2000,
        "full exp(itA) of J(n,k,i) by dense diagonalization");
  m.def("scan_max_amplitude",
        [](int n, int k, const std::vector<int>& classes,
           const std::vector<int>& from, const std::vector<int>& to,
           double t_max, double step) {
          const auto w = make_walk_data(n, k, classes);
          const auto r = scan_max_amplitude(w, KSubset(n, from), KSubset(n, to),
                                            t_max, step);
          return py::make_tuple(r.t_star, r.max_modulus);
        },
        py::arg("n"), py::arg("k"), py::arg("classes"), py::arg("from_"),
        py::arg("to"), py::arg("t_max"), py::arg("step") = 1e-4);
  m.def("periodicity_check",
        [](int n, int k, const std::vector<int>& classes) {
          return periodicity_check(make_walk_data(n, k, classes));
        },
        py::arg("n"), py::arg("k"), py::arg("classes"));

  // reports (the same payloads the CLI emits)
  m.def("scheme_info_report",
        [](int n, int k) { return json_to_py(cmd_scheme_info(n, k)); },
        py::arg("n"), py::arg("k"));
  m.def("pst_report",
        [](int n, int k, const std::vector<int>& classes) {
          const auto r = cmd_pst(n, k, classes);
          return py::make_tuple(json_to_py(r.envelope), r.exit_code);
        },
        py::arg("n"), py::arg("k"), py::arg("classes"));
  m.def("parse_time", &parse_time, py::arg("text"));
}
