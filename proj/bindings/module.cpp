#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sgtree/sgtree.hpp"

namespace py = pybind11;

namespace {

sgtree::NodeState node_from(const std::vector<int>& gaps) {
  return sgtree::from_gaps(sgtree::GapSet(gaps));
}

py::dict node_info(const std::vector<int>& gaps) {
  sgtree::NodeState s = node_from(gaps);
  py::dict out;
  out["multiplicity"] = s.m;
  out["conductor"] = s.c;
  out["genus"] = s.g;
  out["jump"] = s.u;
  out["right_generators"] = sgtree::right_generators(s);
  out["chain"] = s.chain.str(s.m, true);
  const sgtree::Classification k = sgtree::classify(s);
  out["ordinary"] = k.ordinary;
  out["quasi_ordinary"] = k.quasi_ordinary;
  out["pseudo_ordinary"] = k.pseudo_ordinary;
  return out;
}

std::vector<std::vector<int>> children(const std::vector<int>& gaps) {
  sgtree::NodeState s = node_from(gaps);
  std::vector<std::vector<int>> out;
  for (int j = s.c - s.m; j < s.c; ++j)
    if (s.chain.test(j)) out.push_back(sgtree::to_gaps(sgtree::expand(s, j)).gaps());
  return out;
}

std::vector<std::vector<int>> list_genus(int gamma) {
  if (gamma < 1) throw std::invalid_argument("genus must be positive");
  std::vector<std::vector<int>> out;
  sgtree::Handler h = sgtree::Handler::with_callback(
      [gamma, &out](const sgtree::NodeView& view, int g) {
        if (g == gamma) out.push_back(view.gaps());
      });
  sgtree::explore(std::max(gamma, 2), h);
  return out;
}

std::uint64_t count_genus(int gamma, int threads) {
  return sgtree::count_genus(
      {gamma, threads, sgtree::ExploreConfig::Mode::single_genus});
}

std::vector<std::uint64_t> count_all(int gamma, int threads) {
  sgtree::CountTable t =
      sgtree::count_all({gamma, threads, sgtree::ExploreConfig::Mode::all_genera});
  return std::vector<std::uint64_t>(t.n.begin() + 1, t.n.end());
}

py::dict verify(int gamma) {
  sgtree::oracle::VerifyReport r = sgtree::oracle::cross_verify(gamma);
  py::dict out;
  out["ok"] = r.ok;
  out["gamma"] = r.gamma;
  out["node_mismatches"] = r.node_mismatches;
  out["edge_mismatches"] = r.edge_mismatches;
  out["summary"] = r.summary;
  return out;
}

}  // namespace

PYBIND11_MODULE(_sgtree, m) {
  m.doc() = "numerical semigroup tree enumeration via the RGD bit-chain encoding";

  m.def("count_genus", &count_genus, py::arg("gamma"), py::arg("threads") = 1,
        "Number of numerical semigroups of the given genus.");
  m.def("count_all", &count_all, py::arg("gamma"), py::arg("threads") = 1,
        "List [n_1, ..., n_gamma] of counts by genus.");
  m.def("list_genus", &list_genus, py::arg("gamma"),
        "Gap sets of every semigroup of the given genus, in visit order.");
  m.def("node_info", &node_info, py::arg("gaps"),
        "Structural data for the semigroup with the given gap set.");
  m.def("children", &children, py::arg("gaps"),
        "Gap sets of the tree children, by increasing removed generator.");
  m.def("verify", &verify, py::arg("gamma"),
        "Cross-check the tree walk against the brute-force oracle.");
  m.def("pseudo_grandchildren", &sgtree::pseudo_grandchildren, py::arg("m"),
        py::arg("u"), "Grandchild count of the pseudo-ordinary node Lambda_u.");
  m.def(
      "boundary_subtree_counts",
      [](int gamma) { return sgtree::boundary_subtree_counts(gamma); },
      py::arg("gamma"),
      "Genus-gamma counts in the two deepest multiplicity subtrees.");
}
