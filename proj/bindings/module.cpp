// python bindings over the text-line family format: every function takes and
// returns plain strings, ints, and lists, so no custom type casters are needed
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sedf/catalog.hpp"
#include "sedf/classify.hpp"
#include "sedf/constructions.hpp"
#include "sedf/io.hpp"
#include "sedf/params.hpp"
#include "sedf/search.hpp"
#include "sedf/tables.hpp"
#include "sedf/version.hpp"

namespace py = pybind11;
using namespace sedf;

namespace {

std::string line_of(const block_family& fam) { return family_to_text(fam); }

std::vector<std::string> lines_of(const std::vector<block_family>& fams) {
  std::vector<std::string> out;
  for (const auto& fam : fams) out.push_back(line_of(fam));
  return out;
}

} // namespace

PYBIND11_MODULE(_sedf, mod) {
  mod.doc() = "external difference family toolkit";
  mod.attr("__version__") = version;

  py::register_exception<error>(mod, "Error");

  mod.def(
      "enumerate_admissible",
      [](int max_order, bool include_trivial) {
        std::vector<std::tuple<int, int, int, int>> out;
        for (const auto& p : enumerate_admissible(max_order, include_trivial))
          out.emplace_back(p.n, p.m, p.k, p.lambda);
        return out;
      },
      py::arg("max_order"), py::arg("include_trivial") = false,
      "admissible (n, m, k, lambda) tuples sorted by (n, m, k)");

  mod.def(
      "is_admissible",
      [](int n, int m, int k, int lambda) { return is_admissible(n, m, k, lambda); },
      py::arg("n"), py::arg("m"), py::arg("k"), py::arg("lambda"));

  mod.def(
      "group_info",
      [](const std::string& spec) {
        auto g = group_from_spec(spec);
        py::dict d;
        d["name"] = g->name();
        d["order"] = g->order();
        d["abelian"] = g->abelian();
        d["labels"] = g->labels();
        return d;
      },
      py::arg("spec"), "name, order, abelian flag, and element labels");

  mod.def(
      "search_all",
      [](const std::string& spec, int m, int k, int lambda, int jobs, bool naive_check,
         bool allow_large) {
        search_options opts;
        opts.jobs = jobs;
        opts.naive_check = naive_check;
        opts.allow_large = allow_large;
        auto result = search_all(group_from_spec(spec), m, k, lambda, opts);
        py::dict d;
        d["families"] = lines_of(result.families);
        d["nodes"] = result.stats.nodes;
        return d;
      },
      py::arg("group"), py::arg("m"), py::arg("k"), py::arg("lambda"),
      py::arg("jobs") = 1, py::arg("naive_check") = false,
      py::arg("allow_large") = false,
      "all families with the identity in the first block, as text lines");

  mod.def(
      "classify",
      [](const std::vector<std::string>& lines) {
        std::vector<block_family> fams;
        for (const auto& line : lines) fams.push_back(family_from_text(line));
        std::vector<py::dict> out;
        for (const auto& cls : classify_families(fams)) {
          py::dict d;
          d["representative"] = line_of(cls.representative);
          d["members"] = cls.members;
          out.push_back(std::move(d));
        }
        return out;
      },
      py::arg("families"), "equivalence classes of same-group family text lines");

  mod.def(
      "equivalent",
      [](const std::string& x, const std::string& y, bool allow_block_permutation) {
        return equivalent(family_from_text(x), family_from_text(y),
                          allow_block_permutation)
            .has_value();
      },
      py::arg("x"), py::arg("y"), py::arg("allow_block_permutation") = true);

  mod.def(
      "verify",
      [](const std::string& line, const std::string& kind, int lambda) {
        auto fam = family_from_text(line);
        if (kind == "sedf") return verify_sedf(fam, lambda);
        if (kind == "edf") return verify_edf(fam, lambda);
        if (kind == "cosedf") return verify_cosedf(fam, lambda);
        throw parameter_error("kind must be sedf, edf, or cosedf");
      },
      py::arg("family"), py::arg("kind"), py::arg("lambda"));

  mod.def(
      "verify_gsedf",
      [](const std::string& line, const std::vector<int>& sizes,
         const std::vector<int>& lambdas) {
        return verify_gsedf(family_from_text(line), {sizes, lambdas});
      },
      py::arg("family"), py::arg("sizes"), py::arg("lambdas"));

  mod.def(
      "verify_pds",
      [](const std::string& line, int lam, int mu) {
        auto fam = family_from_text(line);
        if (fam.blocks.size() != 1)
          throw shape_error("difference-set checks take a single block");
        return verify_pds(fam.blocks[0], *fam.group,
                          static_cast<int>(fam.blocks[0].size()), lam, mu);
      },
      py::arg("set"), py::arg("lam"), py::arg("mu"));

  mod.def("pa_st", [](int k) { return line_of(construct_pa_st(k)); }, py::arg("k"));
  mod.def("paley", [](int q) { return line_of(construct_paley(q)); }, py::arg("q"));
  mod.def(
      "cyclotomic",
      [](int q, int e) { return lines_of(construct_cyclotomic(q, e)); }, py::arg("q"),
      py::arg("e"));
  mod.def("even_k", [](int a) { return line_of(construct_even_k(a)); }, py::arg("a"));
  mod.def(
      "dihedral_sedf", [](int k) { return line_of(construct_dihedral_sedf(k)); },
      py::arg("k"));
  mod.def(
      "trivial",
      [](const std::string& spec) {
        return line_of(construct_trivial(group_from_spec(spec)));
      },
      py::arg("group"));
  mod.def(
      "recursive_lambda1",
      [](const std::string& base, int a) {
        return line_of(recursive_lambda1(family_from_text(base), a));
      },
      py::arg("base"), py::arg("a"));
  mod.def(
      "recursive_gsedf",
      [](const std::string& base, int a, int b, int s, int t) {
        return line_of(recursive_gsedf(family_from_text(base), {a, b, s, t}));
      },
      py::arg("base"), py::arg("a"), py::arg("b"), py::arg("s"), py::arg("t"));
  mod.def(
      "composite_pair",
      [](int r, int a) {
        auto [one, two] = composite_pair(r, a);
        return std::make_pair(line_of(one), line_of(two));
      },
      py::arg("r"), py::arg("a"));
}
