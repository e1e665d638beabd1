#include "mtc/arithmetic_lemmas.hpp"
#include "mtc/descriptor_flags.hpp"
#include "mtc/embedding_exclusion.hpp"
#include "mtc/minuscule_catalog.hpp"
#include "mtc/monodromy.hpp"
#include "mtc/mt_checker.hpp"
#include "mtc/quadratic_modules.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

namespace {

mtc::BigInt to_big(const py::int_& x) { return mtc::parse_bigint(py::str(x).cast<std::string>()); }

py::int_ to_py(const mtc::BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

std::vector<std::string> labels(const std::vector<mtc::IrrepDescriptor>& ds) {
  std::vector<std::string> out;
  for (const auto& d : ds) out.push_back(d.label());
  return out;
}

py::dict verdict_dict(const mtc::Verdict& v) {
  py::dict out;
  out["conclusion"] = std::string(mtc::to_string(v.conclusion));
  out["citations"] = v.citations;
  out["notes"] = v.notes;
  std::vector<std::string> fired;
  for (const auto& f : v.fired) fired.emplace_back(mtc::rule_id(f.rule));
  out["fired"] = fired;
  out["machine"] = mtc::to_machine(v);
  out["explain"] = mtc::explain(v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic core of mtcheck";

  m.def(
      "catalog",
      [](const std::string& family, int rank) {
        py::list out;
        for (const auto& e : mtc::enumerate_minuscule(mtc::LieType(mtc::parse_family(family), rank))) {
          py::dict d;
          d["label"] = e.label();
          d["family"] = std::string(1, mtc::family_letter(e.family()));
          d["rank"] = e.rank();
          d["weight"] = e.index();
          d["dim"] = to_py(e.dim());
          d["form"] = std::string(mtc::to_string(e.form()));
          out.append(d);
        }
        return out;
      },
      py::arg("family"), py::arg("rank"), "Minuscule fundamental weights of one Lie type.");

  m.def(
      "check_pair",
      [](const std::string& inner, const std::string& outer, const py::int_& r) {
        const auto v = mtc::check_pair(
            mtc::CandidatePair::make(mtc::IrrepDescriptor::parse(inner), mtc::IrrepDescriptor::parse(outer)),
            to_big(r));
        return py::make_tuple(std::string(mtc::to_string(v.status)), std::string(v.reason()));
      },
      py::arg("inner"), py::arg("outer"), py::arg("rank_tau"));

  m.def(
      "surviving_inners",
      [](const py::int_& n, const std::string& form, const py::int_& r) {
        return labels(mtc::surviving_inners(to_big(n), mtc::parse_form_class(form), to_big(r)));
      },
      py::arg("dim"), py::arg("form"), py::arg("rank_tau"));

  m.def(
      "minuscule_of_dim", [](const py::int_& n) { return labels(mtc::minuscule_of_dim(to_big(n))); },
      py::arg("dim"));

  m.def(
      "quadratic_min_rank",
      [](const std::string& label) -> py::object {
        const auto r = mtc::quadratic_min_rank(mtc::IrrepDescriptor::parse(label));
        if (!r) return py::none();
        return to_py(*r);
      },
      py::arg("label"));

  m.def(
      "transvection_constraint",
      [](const py::int_& n) {
        const auto t = mtc::transvection_constraint(to_big(n));
        py::dict out;
        out["shapes"] = labels(t.shapes);
        out["forces_simple"] = t.forces_simple;
        out["symplectic_is_special_linear"] = t.symplectic_is_special_linear;
        return out;
      },
      py::arg("dim"));

  m.def(
      "rank2_constraint",
      [](const py::int_& n, const std::optional<std::string>& form) {
        auto shapes = mtc::rank2_constraint(to_big(n));
        if (form) shapes = mtc::filter_by_form(shapes, mtc::parse_form_class(*form));
        std::vector<std::string> out;
        for (const auto& s : shapes) out.push_back(s.label());
        return out;
      },
      py::arg("dim"), py::arg("form") = py::none());

  m.def(
      "divisibility_solutions",
      [](long m_max) {
        std::vector<std::pair<long, long>> out;
        for (const auto& p : mtc::divisibility_solutions(m_max)) out.emplace_back(p.m, p.s);
        return out;
      },
      py::arg("m_max") = 500);

  m.def("gcd_mod4_check", &mtc::gcd_mod4_check, py::arg("m_max"));

  m.def(
      "exception_pairs",
      [](long g_max) {
        std::vector<std::tuple<long, long, std::string>> out;
        for (const auto& e : mtc::exception_pairs(g_max))
          out.emplace_back(e.g, e.r, std::string(mtc::to_string(e.source)));
        return out;
      },
      py::arg("g_max"));

  m.def("is_exception_pair", &mtc::is_exception_pair, py::arg("g"), py::arg("r"));

  m.def(
      "check_invariants",
      [](int g, int r, std::uint64_t seed) {
        py::dict out;
        for (const auto& [name, ok] : mtc::report_fields(mtc::check_invariants(mtc::build_instance(g, r, seed))))
          out[py::str(std::string(name))] = ok;
        return out;
      },
      py::arg("g"), py::arg("r"), py::arg("seed"));

  m.def(
      "decide", [](const std::string& line) { return verdict_dict(mtc::decide(mtc::parse_descriptor_line(line))); },
      py::arg("flags"), "Verdict for a descriptor written as CLI flags, e.g. '--g 5 --endo Q --toric-rank 3 ...'.");

  m.def(
      "decide_batch",
      [](const std::string& text) {
        std::istringstream in(text);
        py::list out;
        for (const auto& rec : mtc::run_batch(in)) out.append(verdict_dict(rec.verdict));
        return out;
      },
      py::arg("text"));
}
