// Python bindings for the pardes core: permutations, statistics, polynomial
// tables, closed forms, Genocchi values, bijections and verification suites.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pardes/bijections.hpp"
#include "pardes/closed_form.hpp"
#include "pardes/genocchi.hpp"
#include "pardes/operators.hpp"
#include "pardes/patterns.hpp"
#include "pardes/verify.hpp"

namespace py = pybind11;
using namespace pardes;

namespace {

py::int_ to_py_int(const BigInt& v) {
  const std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::dict poly_to_dict(const BivariatePolynomial& poly) {
  py::dict out;
  for (const auto& [key, value] : poly.terms())
    out[py::make_tuple(key.z, key.x)] = to_py_int(value);
  return out;
}

Permutation as_perm(const std::vector<int>& values) { return Permutation(values); }

std::vector<int> values_of(const Permutation& p) { return p.values(); }

AvoidanceClass avoidance_class(const std::string& name) {
  if (name == "def1") return AvoidanceClass::Def1;
  if (name == "conj") return AvoidanceClass::Conj;
  throw std::invalid_argument("avoidance class must be 'def1' or 'conj'");
}

py::dict report_to_dict(const VerificationReport& report) {
  py::list records;
  for (const auto& rec : report.records) {
    py::dict d;
    d["identity"] = rec.identity;
    d["n"] = rec.n;
    d["status"] = rec.pass ? "pass" : "fail";
    d["expected_deviation"] = rec.expected_deviation;
    d["left"] = rec.left;
    d["right"] = rec.right;
    d["note"] = rec.note;
    records.append(d);
  }
  py::dict out;
  out["suite"] = report.suite;
  out["passed"] = report.passed();
  out["records"] = records;
  return out;
}

std::optional<int> opt_j(const py::object& j) {
  if (j.is_none()) return std::nullopt;
  return j.cast<int>();
}

}  // namespace

PYBIND11_MODULE(pardes, m) {
  m.doc() = "Exact distributions of parity-refined descent statistics";

  // permutation primitives
  m.def("red", [](const std::vector<int>& seq) { return red(seq).values(); },
        py::arg("seq"), "Reduce a sequence of distinct integers to relative order");
  m.def("complement",
        [](const std::vector<int>& p) { return values_of(complement(as_perm(p))); },
        py::arg("perm"));
  m.def("reverse",
        [](const std::vector<int>& p) { return values_of(reverse(as_perm(p))); },
        py::arg("perm"));
  m.def("insert_at",
        [](const std::vector<int>& p, int slot) {
          return values_of(insert_at(as_perm(p), slot));
        },
        py::arg("perm"), py::arg("slot"));
  m.def("remove_max",
        [](const std::vector<int>& p) {
          const auto [q, slot] = remove_max(as_perm(p));
          return py::make_tuple(q.values(), slot);
        },
        py::arg("perm"));
  m.def("rotate_to_front",
        [](const std::vector<int>& p, int v) {
          return values_of(rotate_to_front(as_perm(p), v));
        },
        py::arg("perm"), py::arg("value"));
  m.def("all_perms", [](int n) {
    py::list out;
    for_each_perm(n, [&](std::span<const int> p) {
      out.append(std::vector<int>(p.begin(), p.end()));
    });
    return out;
  });
  m.def("enumeration_cap", &enumeration_cap);
  m.def("set_enumeration_cap", &set_enumeration_cap, py::arg("n"));

  // statistics
  m.def("descent_set",
        [](const std::vector<int>& p, const std::string& kind) {
          return parity_descent_set(as_perm(p), descent_kind_from_string(kind));
        },
        py::arg("perm"), py::arg("kind"),
        "kind: left_even, left_odd, right_even, right_odd or plain");
  m.def("descent_count",
        [](const std::vector<int>& p, const std::string& kind) {
          return parity_descent_count(as_perm(p), descent_kind_from_string(kind));
        },
        py::arg("perm"), py::arg("kind"));
  m.def("first_parity_flag",
        [](const std::vector<int>& p, const std::string& parity) {
          if (parity == "even") return first_parity_flag(as_perm(p), Parity::Even);
          if (parity == "odd") return first_parity_flag(as_perm(p), Parity::Odd);
          throw std::invalid_argument("parity must be 'even' or 'odd'");
        },
        py::arg("perm"), py::arg("parity"));

  // patterns
  m.def("count_matches",
        [](const std::vector<int>& p, const std::string& pattern) {
          return count_consecutive_matches(as_perm(p), ParityPattern::parse(pattern));
        },
        py::arg("perm"), py::arg("pattern"),
        "Consecutive matches of an annotated pattern, e.g. '2e1*'");
  m.def("avoids",
        [](const std::vector<int>& p, const std::vector<std::string>& patterns) {
          std::vector<ParityPattern> parsed;
          parsed.reserve(patterns.size());
          for (const auto& s : patterns) parsed.push_back(ParityPattern::parse(s));
          return avoids_consecutive(as_perm(p), parsed);
        },
        py::arg("perm"), py::arg("patterns"));
  m.def("parity_k_tau_avoiding",
        [](const std::vector<int>& p, const std::vector<int>& tau, int k) {
          return is_parity_k_tau_avoiding(as_perm(p), as_perm(tau), k);
        },
        py::arg("perm"), py::arg("tau"), py::arg("k"),
        "Classical avoidance of tau with every letter constrained mod k");

  // polynomial tables and closed forms
  m.def("family_poly",
        [](const std::string& f, int n) {
          return poly_to_dict(family_poly(family_from_string(f), n));
        },
        py::arg("family"), py::arg("n"),
        "Distribution polynomial as {(zdeg, xdeg): coefficient}");
  m.def("closed_form_poly",
        [](const std::string& f, int n) {
          return poly_to_dict(closed_form_poly(family_from_string(f), n));
        },
        py::arg("family"), py::arg("n"));
  m.def("apply_operator",
        [](const std::string& op, int size_param, const py::dict& poly) {
          BivariatePolynomial p;
          for (const auto& item : poly) {
            const auto key = item.first.cast<std::pair<int, int>>();
            p.add_term(key.first, key.second,
                       BigInt(py::str(item.second).cast<std::string>()));
          }
          return poly_to_dict(apply_operator(operator_from_string(op), size_param, p));
        },
        py::arg("op"), py::arg("size_param"), py::arg("poly"),
        "op: delta, gamma, theta, omega, phi, psi or xi");
  m.def("coeff",
        [](const std::string& f, int k, int n, const py::object& j) {
          return to_py_int(coeff(family_from_string(f), opt_j(j), k, n));
        },
        py::arg("family"), py::arg("k"), py::arg("n"), py::arg("j") = py::none(),
        "Closed-form coefficient; j is the z-degree for families P and Q");
  m.def("differential_form_check",
        [](const std::string& f, int n) {
          return differential_form_check(family_from_string(f), n);
        },
        py::arg("family"), py::arg("n"));

  // genocchi
  m.def("genocchi_sequence",
        [](int count) {
          py::list out;
          for (const auto& v : genocchi_sequence(count).values) out.append(to_py_int(v));
          return out;
        },
        py::arg("count"));
  m.def("dumont_count", &dumont_count, py::arg("n"));
  m.def("avoidance_count",
        [](int n, const std::string& cls) { return avoidance_count(n, avoidance_class(cls)); },
        py::arg("n"), py::arg("cls"), "cls: 'def1' or 'conj'");

  // bijections
  m.def("r_symmetry",
        [](const std::vector<int>& p) { return values_of(r_symmetry(as_perm(p))); },
        py::arg("perm"));
  m.def("r_symmetry_inverse",
        [](const std::vector<int>& p) { return values_of(r_symmetry_inverse(as_perm(p))); },
        py::arg("perm"));
  m.def("r_split",
        [](const std::vector<int>& p) {
          const auto [tag, pi] = r_split(as_perm(p));
          return py::make_tuple(to_string(tag), pi.values());
        },
        py::arg("perm"));
  m.def("r_split_inverse",
        [](const std::string& tag, const std::vector<int>& p) {
          if (tag != "P0" && tag != "P1")
            throw std::invalid_argument("tag must be 'P0' or 'P1'");
          return values_of(
              r_split_inverse(tag == "P0" ? SplitTag::P0 : SplitTag::P1, as_perm(p)));
        },
        py::arg("tag"), py::arg("perm"));
  m.def("p_complement",
        [](const std::vector<int>& p) { return values_of(p_complement(as_perm(p))); },
        py::arg("perm"));
  m.def("p_complement_inverse",
        [](const std::vector<int>& p) {
          return values_of(p_complement_inverse(as_perm(p)));
        },
        py::arg("perm"));
  m.def("alpha",
        [](const std::vector<int>& p) {
          const Permutation sigma = as_perm(p);
          return values_of(alpha_table(sigma.size()).apply(sigma));
        },
        py::arg("perm"));
  m.def("alpha_inverse",
        [](const std::vector<int>& p) {
          const Permutation pi = as_perm(p);
          return values_of(alpha_table(pi.size()).apply_inverse(pi));
        },
        py::arg("perm"));
  m.def("beta",
        [](const std::vector<int>& p) {
          const Permutation sigma = as_perm(p);
          return values_of(beta_table(sigma.size()).apply(sigma));
        },
        py::arg("perm"));
  m.def("beta_inverse",
        [](const std::vector<int>& p) {
          const Permutation pi = as_perm(p);
          return values_of(beta_table(pi.size()).apply_inverse(pi));
        },
        py::arg("perm"));
  m.def("alpha_pairs", [](int n) {
    py::list out;
    for (const auto& [from, to] : alpha_table(n).pairs())
      out.append(py::make_tuple(from.values(), to.values()));
    return out;
  });
  m.def("beta_pairs", [](int n) {
    py::list out;
    for (const auto& [from, to] : beta_table(n).pairs())
      out.append(py::make_tuple(from.values(), to.values()));
    return out;
  });
  m.def("matching_cap", &matching_cap);
  m.def("set_matching_cap", &set_matching_cap, py::arg("n"));

  // verification
  m.def("brute_distribution",
        [](int n, const std::string& f) {
          return poly_to_dict(brute_distribution(n, family_from_string(f)));
        },
        py::arg("n"), py::arg("family"));
  m.def("registered_suites", &registered_suites);
  m.def("run_suite",
        [](const std::string& id, int max_n) {
          return report_to_dict(run_identity_suite(id, max_n));
        },
        py::arg("suite"), py::arg("max_n") = 0);

  py::register_exception<resource_limit_error>(m, "ResourceLimitError",
                                               PyExc_RuntimeError);
}
