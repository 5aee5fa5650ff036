#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cst/cover_suffix_tree.hpp"
#include "cst/ovocc_index.hpp"
#include "cst/partial_covers.hpp"
#include "cst/verify.hpp"

namespace py = pybind11;
using namespace cst;

namespace {

WrapRule rule_of(const std::string& name) {
  if (name == "exact") return WrapRule::exact;
  if (name == "literal") return WrapRule::literal_floor;
  throw std::invalid_argument("unknown cycle rule: " + name);
}

// Node ids are 1-based on this side, as in the dump.
py::dict node_dict(const CoverSuffixTree& cst, Index v) {
  const auto& c = cst.tree();
  py::dict d;
  d["id"] = v + 1;
  d["parent"] = v == CompactTrie::root() ? 0 : c.tree.parent(v) + 1;
  // Leaf labels drop the sentinel; the sentinel-only leaf has an empty label.
  const Fragment f = c.tree.label(v);
  const Index end = std::min(f.end, cst.text().size());
  d["label"] = v == CompactTrie::root() || end < f.start ? std::string() : cst.text().render({f.start, end});
  d["depth"] = c.tree.depth(v);
  d["leaf"] = c.tree.is_leaf(v);
  d["square_half"] = c.square_half[v] != 0;
  d["occ"] = c.occ[v];
  d["ov"] = c.ov[v];
  d["nov"] = c.nov[v];
  d["cv_ov"] = c.cv_ov[v];
  d["cv"] = c.cv[v];
  return d;
}

}  // namespace

PYBIND11_MODULE(_cstree, m) {
  m.doc() = "Cover suffix tree, partial covers and overlapping consecutive occurrences";

  py::class_<CoverSuffixTree>(m, "CoverSuffixTree")
      .def(py::init([](const std::string& text, const std::string& rule) {
             return CoverSuffixTree(load_text(text), rule_of(rule));
           }),
           py::arg("text"), py::arg("cycle_rule") = "exact")
      .def_property_readonly("n", [](const CoverSuffixTree& c) { return c.text().size(); })
      .def_property_readonly("node_count", [](const CoverSuffixTree& c) { return c.tree().size(); })
      .def("runs",
           [](const CoverSuffixTree& c) {
             std::vector<std::tuple<Index, Index, Index>> out;
             for (const Run& r : c.runs()) out.emplace_back(r.a, r.b, r.p);
             return out;
           })
      .def("squares",
           [](const CoverSuffixTree& c) {
             std::vector<std::string> out;
             for (const SquareOcc& q : c.squares()) out.push_back(c.text().render({q.i, q.i + q.d - 1}));
             return out;
           })
      .def("nodes",
           [](const CoverSuffixTree& c) {
             py::list out;
             for (Index v = 0; v < c.tree().size(); ++v) out.append(node_dict(c, v));
             return out;
           })
      .def(
          "node",
          [](const CoverSuffixTree& c, const std::string& label) -> py::object {
            auto locus = c.locate(std::string_view(label));
            if (!locus || c.tree().tree.depth(locus->node) != static_cast<Index>(label.size())) return py::none();
            return node_dict(c, locus->node);
          },
          py::arg("label"), "explicit node with this label, or None")
      .def(
          "coverage",
          [](const CoverSuffixTree& c, const std::string& pattern) -> std::int64_t {
            if (pattern.empty()) return 0;
            auto locus = c.locate(std::string_view(pattern));
            if (!locus) return 0;
            return c.cv_at_depth(locus->node, locus->length);
          },
          py::arg("pattern"))
      .def("dump",
           [](const CoverSuffixTree& c) {
             std::ostringstream os;
             write_dump(os, c);
             return os.str();
           })
      .def("all_partial_covers",
           [](const CoverSuffixTree& c) {
             auto table = all_partial_covers(c);
             std::vector<std::tuple<Index, Index, Index, Index>> out;
             for (Index a = 1; a <= table.size(); ++a) {
               const Fragment f = table.at(a);
               out.emplace_back(a, f.length(), f.start, f.end);
             }
             return out;
           })
      .def(
          "shortest_alpha_covers",
          [](const CoverSuffixTree& c, Index alpha) {
            std::vector<std::tuple<Index, Index, Index, std::int64_t>> out;
            for (const auto& cover : shortest_alpha_covers(c, alpha)) {
              out.emplace_back(cover.length, cover.witness.start, cover.witness.end, cover.coverage);
            }
            return out;
          },
          py::arg("alpha"), "(length, start, end, coverage) for every shortest alpha-partial cover");

  py::class_<OvOccIndex>(m, "OvOccIndex")
      .def(py::init([](const std::string& text) { return OvOccIndex(load_text(text)); }), py::arg("text"))
      .def(
          "query", [](const OvOccIndex& x, const std::string& p, Index beta) { return x.query(std::string_view(p), beta); },
          py::arg("pattern"), py::arg("beta"))
      .def(
          "query_fragment",
          [](const OvOccIndex& x, Index i, Index j, Index beta) { return x.query(Fragment{i, j}, beta); },
          py::arg("i"), py::arg("j"), py::arg("beta"));

  m.def(
      "verify",
      [](Index max_n, std::size_t iters, std::uint64_t seed, int sigma, const std::string& rule) {
        VerifyConfig cfg;
        cfg.max_n = max_n;
        cfg.iters = iters;
        cfg.seed = seed;
        cfg.sigma = sigma;
        cfg.check.rule = rule_of(rule);
        VerifyReport r;
        {
          py::gil_scoped_release release;
          r = run_verify(cfg);
        }
        py::dict d;
        d["texts"] = r.texts;
        d["failures"] = r.failures;
        d["queries"] = r.stats.queries;
        d["max_rmq_ratio"] = r.stats.max_rmq_ratio;
        if (r.first) {
          d["suite"] = r.first->mismatch.suite;
          d["detail"] = r.first->mismatch.detail;
          d["minimized"] = r.first->minimized;
        }
        return d;
      },
      py::arg("max_n") = 50, py::arg("iters") = 20, py::arg("seed") = 42, py::arg("sigma") = 2,
      py::arg("cycle_rule") = "exact");
}
