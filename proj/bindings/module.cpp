// Python bindings.  The surface is deliberately text-first: nets travel in
// the same text format the command-line tool reads, cycles as id lists, and
// counts come back as exact python integers.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "tnet/bijection.hpp"
#include "tnet/core.hpp"
#include "tnet/debruijn.hpp"
#include "tnet/euler.hpp"
#include "tnet/harness.hpp"
#include "tnet/io.hpp"
#include "tnet/splitting.hpp"

namespace py = pybind11;
using namespace tnet;

namespace {

py::int_ to_pyint(const mpz_class& z) {
    return py::module_::import("builtins").attr("int")(z.get_str());
}

euler::EulerCycle as_cycle(const std::vector<int>& ids) {
    return euler::EulerCycle{ids};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Doubling, splitting, and counting of Eulerian cycles in T-nets";

    m.def("debruijn", [](int n) { return io::format_tnet(core::debruijn_graph(n)); },
          py::arg("n"),
          "Text form of the order-n de Bruijn net (2^(n-1) nodes, 2^n edges).");

    m.def("double", [](const std::string& text) {
              return io::format_tnet(core::double_net(io::parse_tnet(text)));
          },
          py::arg("net"), "Text form of the doubled net (line-graph doubling).");

    m.def("count", [](const std::string& text) {
              return to_pyint(euler::count_cycles_best(io::parse_tnet(text)));
          },
          py::arg("net"),
          "Exact number of Eulerian cycles up to rotation, by determinant.");

    m.def("enumerate_cycles", [](const std::string& text) {
              std::vector<std::vector<int>> out;
              const auto g = core::as_multigraph(io::parse_tnet(text));
              for (auto& c : euler::enumerate_cycles(g)) out.push_back(std::move(c.ids));
              return out;
          },
          py::arg("net"),
          "All Eulerian cycles, one canonical rotation per class, sorted.");

    m.def("expand", [](const std::string& text, const std::vector<int>& cycle,
                       const std::vector<int>& bits) {
              const core::TNet n = io::parse_tnet(text);
              return bijection::expand_cycle(n, as_cycle(cycle), bits).ids;
          },
          py::arg("net"), py::arg("cycle"), py::arg("bits"),
          "Image of (cycle, bits) under the doubling bijection: a cycle of "
          "double(net).  bits has length m-1.");

    m.def("reduce", [](const std::string& text, const std::vector<int>& cycle) {
              const core::TNet n = io::parse_tnet(text);
              auto [p, bits] = bijection::reduce_cycle(n, as_cycle(cycle));
              return std::make_pair(std::move(p.ids), std::move(bits));
          },
          py::arg("net"), py::arg("cycle"),
          "Inverse of expand: (cycle of net, bits) for a cycle of double(net).");

    m.def("cycle_to_seq",
          [](int n, const std::vector<int>& c) {
              return debruijn::cycle_to_seq(n, as_cycle(c));
          },
          py::arg("n"), py::arg("cycle"),
          "Base-form de Bruijn sequence read off a cycle of the order-n net.");

    m.def("seq_to_cycle",
          [](int n, const std::string& b) { return debruijn::seq_to_cycle(n, b).ids; },
          py::arg("n"), py::arg("seq"), "Inverse of cycle_to_seq.");

    m.def("unrank", &debruijn::unrank, py::arg("n"), py::arg("bits"),
          "Base-form de Bruijn sequence of order n for a bit string of "
          "length 2^(n-1) - n.");
    m.def("rank", &debruijn::rank, py::arg("n"), py::arg("seq"),
          "Inverse of unrank.");

    m.def("rotate_to_base", &debruijn::rotate_to_base, py::arg("n"), py::arg("seq"),
          "(r, base) with base = seq rotated left by r in base form.");
    m.def("rotate_from_base", &debruijn::rotate_from_base, py::arg("n"), py::arg("r"),
          py::arg("base"), "Inverse of rotate_to_base.");

    m.def("stanley_encode", &debruijn::stanley_encode, py::arg("n"), py::arg("seq1"),
          py::arg("seq2"),
          "2^n bits encoding an ordered pair of de Bruijn sequences.");
    m.def("stanley_decode", &debruijn::stanley_decode, py::arg("n"), py::arg("bits"),
          "Inverse of stanley_encode.");

    m.def("is_debruijn", &debruijn::is_debruijn, py::arg("seq"), py::arg("n"));
    m.def("is_base_form", &debruijn::is_base_form, py::arg("seq"), py::arg("n"));

    m.def("random_net",
          [](int m_, std::uint64_t seed) {
              return io::format_tnet(harness::random_tnet(m_, seed));
          },
          py::arg("m"), py::arg("seed"),
          "Seeded balanced random net with m nodes (not necessarily connected).");

    m.def("verify", [](const std::string& text) {
              const core::TNet n = io::parse_tnet(text);
              std::string table;
              bool ok = true;
              for (const auto& rep : {harness::verify_doubling(n), harness::verify_bound(n),
                                      harness::verify_cascade(n)}) {
                  ok = ok && rep.all_pass();
                  table += harness::render_table(rep);
              }
              return std::make_pair(ok, std::move(table));
          },
          py::arg("net"),
          "(all_pass, table) for the doubling, bound, and cascade check suites.");
}
