#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ggk/classify.hpp"
#include "ggk/errors.hpp"
#include "ggk/genus.hpp"
#include "ggk/oracle.hpp"
#include "ggk/spectrum.hpp"

namespace py = pybind11;

namespace {

py::dict record_dict(const ggk::GenusRecord& r) {
  py::dict d;
  d["p"] = r.p;
  d["q"] = r.q;
  d["n"] = r.n;
  d["g0"] = r.g0;
  d["size_G2"] = r.size_G2;
  d["size_G3"] = r.size_G3;
  d["size_G"] = r.size_G;
  d["delta1"] = r.delta1;
  d["delta2"] = r.delta2;
  d["genus"] = r.genus;
  return d;
}

std::vector<py::dict> records(const std::vector<ggk::GenusRecord>& rs) {
  std::vector<py::dict> out;
  for (const auto& r : rs) out.push_back(record_dict(r));
  return out;
}

}  // namespace

PYBIND11_MODULE(_ggk, m) {
  m.doc() = "Genus spectra of Galois subfields of the GGK function fields";

  py::register_exception<ggk::ConsistencyError>(m, "ConsistencyError");
  py::register_exception<ggk::SearchBudgetExceeded>(m, "SearchBudgetExceeded");

  m.def(
      "genus",
      [](std::uint64_t q, unsigned n, std::uint64_t g0, std::uint64_t size_G2, std::uint64_t size_G3) {
        return ggk::genus_formula(ggk::make_params(q, n), g0, size_G2, size_G3).genus;
      },
      py::arg("q"), py::arg("n"), py::arg("g0"), py::arg("size_G2"), py::arg("size_G3"),
      "Genus of the fixed field for the cardinalities (g0, #G2, #G3).");

  m.def(
      "ambient_genus", [](std::uint64_t q, unsigned n) { return ggk::ambient_genus(ggk::make_params(q, n)); },
      py::arg("q"), py::arg("n"));

  m.def("hermitian_genus", &ggk::hermitian_genus, py::arg("q"), py::arg("g1"), py::arg("size_G2"), py::arg("size_G3"));

  m.def(
      "realizable_cardinalities",
      [](std::uint64_t q, unsigned n, std::uint64_t max_subspaces) {
        std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> out;
        for (const auto& c : ggk::realizable_cardinalities(ggk::make_params(q, n), max_subspaces)) {
          out.emplace_back(c.g0, c.size_G2, c.size_G3);
        }
        return out;
      },
      py::arg("q"), py::arg("n"), py::arg("max_subspaces") = 2'000'000);

  m.def(
      "spectrum",
      [](std::uint64_t q, unsigned n, std::uint64_t max_subspaces) {
        return records(ggk::run_spectrum({q, n, false, max_subspaces}));
      },
      py::arg("q"), py::arg("n"), py::arg("max_subspaces") = 2'000'000,
      "Records sorted by (genus, g0, size_G2, size_G3).");

  m.def(
      "genus_set",
      [](std::uint64_t q, unsigned n, std::uint64_t max_subspaces) {
        return ggk::genus_set(ggk::run_spectrum({q, n, true, max_subspaces}));
      },
      py::arg("q"), py::arg("n"), py::arg("max_subspaces") = 2'000'000);

  m.def(
      "factorizations",
      [](std::uint64_t ell) {
        std::vector<std::tuple<std::uint64_t, unsigned>> out;
        for (const auto& f : ggk::factorizations(ell)) out.emplace_back(f.q, f.n);
        return out;
      },
      py::arg("ell"));

  m.def(
      "field_spectrum",
      [](std::uint64_t ell, std::uint64_t max_subspaces) {
        const auto fs = ggk::field_spectrum(ell, max_subspaces);
        py::dict d;
        std::vector<std::tuple<std::uint64_t, unsigned>> searched, skipped;
        for (const auto& f : fs.searched) searched.emplace_back(f.q, f.n);
        for (const auto& f : fs.skipped) skipped.emplace_back(f.q, f.n);
        d["searched"] = searched;
        d["skipped"] = skipped;
        d["records"] = records(fs.records);
        d["genera"] = ggk::genus_set(fs.records);
        return d;
      },
      py::arg("ell"), py::arg("max_subspaces") = 2'000'000);

  m.def("compare_known", &ggk::compare_known, py::arg("spectrum"), py::arg("reference"));

  m.def(
      "verify",
      [](std::uint64_t q, unsigned n, std::uint64_t max_order) {
        ggk::VerifyOptions options;
        options.max_order = max_order;
        const auto report = ggk::verify_all(ggk::make_params(q, n), options);
        py::dict d;
        d["passed"] = report.passed();
        d["subgroups"] = report.subgroup_count;
        d["checks"] = report.results.size();
        d["failures"] = report.failures();
        d["text"] = report.to_text();
        return d;
      },
      py::arg("q"), py::arg("n"), py::arg("max_order") = 10000);

  m.def(
      "subgroup_count",
      [](std::uint64_t q, unsigned n, std::uint64_t max_order) {
        return ggk::enumerate_all_subgroups(ggk::make_params(q, n), max_order).size();
      },
      py::arg("q"), py::arg("n"), py::arg("max_order") = 10000);
}
