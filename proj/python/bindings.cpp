#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "markoff/coeffs.hpp"
#include "markoff/genvieta.hpp"
#include "markoff/lattice.hpp"
#include "markoff/oracle.hpp"
#include "markoff/persist.hpp"
#include "markoff/render.hpp"
#include "markoff/sweep.hpp"

namespace py = pybind11;
namespace gen = markoff::gen;
using markoff::Rational;
using markoff::Slope;

namespace {

py::object to_int(const markoff::BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str(10).c_str(), nullptr, 10));
}

py::object to_fraction(const Rational& v) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_int(v.get_num()), to_int(v.get_den()));
}

// Accepts int, Fraction, or a string such as "3/4".
Rational to_rational(const py::handle& v) {
  if (py::isinstance<py::str>(v)) return markoff::parse_rational(v.cast<std::string>());
  if (py::hasattr(v, "numerator") && py::hasattr(v, "denominator")) {
    Rational r(markoff::BigInt(py::str(v.attr("numerator")).cast<std::string>()),
               markoff::BigInt(py::str(v.attr("denominator")).cast<std::string>()));
    r.canonicalize();
    return r;
  }
  return markoff::parse_rational(py::str(v).cast<std::string>());
}

Slope to_slope(const py::handle& v) {
  if (py::isinstance<py::str>(v)) return Slope::parse(v.cast<std::string>());
  if (py::isinstance<py::int_>(v)) return Slope::parse(py::str(v).cast<std::string>());
  const auto r = to_rational(v);
  return Slope::reduce(r.get_num().get_si(), r.get_den().get_si());
}

py::dict coeff_dict(const markoff::CoeffMap& f) {
  py::dict out;
  for (const auto& [pt, c] : f) out[py::make_tuple(pt.alpha, pt.beta)] = to_int(c);
  return out;
}

py::list points(const markoff::PointSet& pts) {
  py::list out;
  for (const auto& pt : pts) out.append(py::make_tuple(pt.alpha, pt.beta));
  return out;
}

gen::Word to_word(const py::handle& w) {
  if (py::isinstance<py::str>(w)) return gen::parse_word(w.cast<std::string>());
  return w.cast<gen::Word>();
}

std::vector<Rational> to_rationals(const py::sequence& seq) {
  std::vector<Rational> out;
  for (const auto& v : seq) out.push_back(to_rational(v));
  return out;
}

}  // namespace

PYBIND11_MODULE(_markoff, m) {
  m.doc() = "Coefficient maps of the formal Markoff map and the N-variable Vieta action";

  py::register_exception<gen::ResourceError>(m, "ResourceError", PyExc_MemoryError);

  m.def("normalize_slope", [](const py::handle& s) { return to_slope(s).str(); }, py::arg("slope"));
  m.def(
      "parents",
      [](const py::handle& s) {
        const auto t = markoff::parents(to_slope(s));
        return py::make_tuple(t.s0.str(), t.s1.str(), t.s_prime.str());
      },
      py::arg("slope"));
  m.def("domain", [](const py::handle& s) { return points(markoff::Domain(to_slope(s)).enumerate()); },
        py::arg("slope"), "Points of J_s in canonical order (sector slopes only).");
  m.def("coeff_map", [](const py::handle& s) { return coeff_dict(markoff::coeff_map_ext(to_slope(s))); },
        py::arg("slope"), "F_s as a dict {(alpha, beta): coefficient}.");
  m.def("markoff_number", [](const py::handle& s) { return to_int(markoff::markoff_number(to_slope(s))); },
        py::arg("slope"));
  m.def(
      "evaluate",
      [](const py::handle& s, const py::handle& x, const py::handle& y, const py::handle& z) {
        return to_fraction(markoff::evaluate(to_slope(s), to_rational(x), to_rational(y), to_rational(z)));
      },
      py::arg("slope"), py::arg("x"), py::arg("y"), py::arg("z"));
  m.def(
      "pascal_edges",
      [](const py::handle& s) {
        const auto e = markoff::pascal_edges(to_slope(s));
        auto conv = [](const std::vector<markoff::BigInt>& v) {
          py::list out;
          for (const auto& c : v) out.append(to_int(c));
          return out;
        };
        return py::make_tuple(conv(e.left), conv(e.right), conv(e.bottom));
      },
      py::arg("slope"));
  m.def(
      "verify_theorem",
      [](const py::handle& s) {
        markoff::CoeffCache cache;
        return markoff::verify_theorem(to_slope(s), cache).ok();
      },
      py::arg("slope"));
  m.def("f_oracle", [](const py::handle& s) { return markoff::f_oracle(to_slope(s)).str(); }, py::arg("slope"),
        "f_s from the exchange-relation walk, as text.");
  m.def(
      "render_svg",
      [](const py::handle& s) {
        const auto slope = to_slope(s);
        return markoff::render_svg(slope, *markoff::coeff_map(slope));
      },
      py::arg("slope"));
  m.def(
      "render_ascii",
      [](const py::handle& s) {
        const auto slope = to_slope(s);
        return markoff::render_ascii(slope, *markoff::coeff_map(slope));
      },
      py::arg("slope"));
  m.def(
      "serialize",
      [](const py::handle& s) {
        const auto slope = to_slope(s);
        return markoff::serialize_coeff_map(slope, markoff::coeff_map_ext(slope));
      },
      py::arg("slope"), "Versioned JSON document for F_s.");
  m.def(
      "parse",
      [](const std::string& text) {
        const auto [slope, f] = markoff::parse_coeff_map(text);
        return py::make_tuple(slope.str(), coeff_dict(f));
      },
      py::arg("text"));
  m.def(
      "verify",
      [](int max_pq, int workers) {
        markoff::SweepConfig cfg;
        cfg.max_pq = max_pq;
        cfg.workers = workers;
        markoff::CoeffCache cache;
        markoff::SweepReport report;
        {
          py::gil_scoped_release release;
          report = markoff::run_verify_sweep(cfg, cache);
        }
        return py::make_tuple(report.ok(), report.structured());
      },
      py::arg("max_pq") = 30, py::arg("workers") = 1,
      "Runs the verification sweep; returns (ok, structured report).");

  m.def(
      "gen_apply",
      [](int n, const py::handle& word, const std::string& a) {
        const auto w = to_word(word);
        const auto spec = gen::parse_aspec(a, n);
        std::vector<std::string> out;
        if (spec.empty()) {
          for (const auto& c : gen::apply_word(n, w)) out.push_back(c.str());
        } else {
          for (const auto& c : gen::apply_word(n, w, spec)) out.push_back(c.str());
        }
        return out;
      },
      py::arg("n"), py::arg("word"), py::arg("a") = "symbolic",
      "Coordinates of the word applied to the identity state, as text.");
  m.def("word_to_slopes",
        [](const py::handle& word) {
          const auto s = gen::word_to_slopes(to_word(word));
          return py::make_tuple(s[0].str(), s[1].str(), s[2].str());
        },
        py::arg("word"));
  m.def(
      "gen_crosscheck",
      [](int n, const py::handle& word, const py::sequence& point, const py::sequence& a) {
        return gen::numeric_crosscheck(n, to_word(word), to_rationals(point), to_rationals(a));
      },
      py::arg("n"), py::arg("word"), py::arg("point"), py::arg("a"));
  m.def(
      "gen_scan",
      [](int n, int max_len, const std::string& a, int workers) {
        const auto spec = gen::parse_aspec(a, n);
        gen::ScanResult r;
        {
          py::gil_scoped_release release;
          r = gen::run_scan(n, max_len, spec, workers);
        }
        return r.structured();
      },
      py::arg("n"), py::arg("max_len"), py::arg("a") = "zero", py::arg("workers") = 1,
      "Positivity scan over reduced words; returns the structured report.");
}
