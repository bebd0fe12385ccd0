#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rightsplit/groupspec.hpp"
#include "rightsplit/repalg.hpp"
#include "rightsplit/split.hpp"
#include "rightsplit/suites.hpp"
#include "rightsplit/induce.hpp"

namespace py = pybind11;
using namespace rsplit;

namespace {

struct PyGroup {
    GroupPtr g;
};

Subgroup subgroup_from(const PyGroup& g, const std::vector<Elem>& members) {
    return Subgroup(g.g, members);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite-group toolkit: right-split exact sequences, induced "
              "representations, twisted products";
    m.attr("__version__") = kToolkitVersion;

    py::register_exception<Error>(m, "ToolkitError");

    py::class_<PyGroup>(m, "Group")
        .def_static("from_spec",
                    [](const std::string& spec) { return PyGroup{parse_group_spec(spec)}; },
                    py::arg("spec"),
                    "Build a group from a spec string: gl2:q, sl2:q, pgl2:q, psl2:q, "
                    "cyclic:n, sym:n, table:FILE")
        .def("order", [](const PyGroup& s) { return s.g->order(); })
        .def("identity", [](const PyGroup& s) { return s.g->identity(); })
        .def("mul", [](const PyGroup& s, Elem a, Elem b) { return s.g->mul(a, b); })
        .def("inv", [](const PyGroup& s, Elem a) { return s.g->inv(a); })
        .def("label", [](const PyGroup& s, Elem a) { return s.g->label(a); })
        .def("element_order", [](const PyGroup& s, Elem a) { return s.g->element_order(a); })
        .def("export_table", [](const PyGroup& s) { return export_table(*s.g); })
        .def("derived_subgroup",
             [](const PyGroup& s) { return derived_subgroup(s.g).members; })
        .def("subgroup_generated",
             [](const PyGroup& s, const std::vector<Elem>& gens) {
                 return subgroup_generated(s.g, gens).members;
             })
        .def("unique_abelian_index_n",
             [](const PyGroup& s, std::int64_t n) {
                 return unique_abelian_index_n(s.g, n).members;
             })
        .def("det_power_subgroup",
             [](const PyGroup& s, std::int64_t n) {
                 auto gl2 = std::dynamic_pointer_cast<const Gl2Group>(s.g);
                 if (!gl2) throw Error("GroupMismatch", "det_power_subgroup needs a gl2 group");
                 return det_power_subgroup(gl2, n).members;
             })
        .def("cyclic_transversal_search",
             [](const PyGroup& s, const std::vector<Elem>& h) {
                 return split_report_json(cyclic_transversal_search(s.g, subgroup_from(s, h)))
                     .dump();
             })
        .def("multiplicative_transversal_search",
             [](const PyGroup& s, const std::vector<Elem>& h) -> py::object {
                 auto t = multiplicative_transversal_search(s.g, subgroup_from(s, h));
                 if (!t) return py::none();
                 return py::cast(t->reps);
             })
        .def("is_isomorphic_to", [](const PyGroup& s, const PyGroup& o) {
            const auto res = is_isomorphic(s.g, o.g);
            py::dict out;
            out["verdict"] = res.yes() ? "yes" : (res.no() ? "no" : "indeterminate");
            out["detail"] = res.detail;
            return out;
        });

    m.def("fq_make", [](std::int64_t p, int r) {
        const Field f = Field::make(p, r);
        py::dict out;
        out["p"] = f.p();
        out["r"] = f.r();
        out["q"] = f.q();
        out["modulus"] = f.spec().modulus;
        return out;
    });
    m.def("unit_generator", [](std::int64_t p, int r) {
        const Field f = Field::make(p, r);
        return py::make_tuple(f.unit_generator(), f.render(f.unit_generator()));
    });
    m.def("is_nth_power", [](std::int64_t p, int r, std::int64_t x, std::int64_t n) {
        return Field::make(p, r).is_nth_power(x, n);
    });

    m.def("dirichlet_condition_search", &dirichlet_condition_search, py::arg("n"), py::arg("r"),
          py::arg("limit"));

    m.def("_run_suite_json",
          [](const std::string& name, std::uint64_t seed, std::int64_t samples) {
              SuiteOptions opts;
              opts.seed = seed;
              opts.samples = samples;
              return run_suite(name, opts).to_json().dump();
          },
          py::arg("name"), py::arg("seed") = 42, py::arg("samples") = 10000);

    m.def("_induce_json",
          [](const PyGroup& g, const std::vector<Elem>& subgroup_members,
             const std::map<Elem, std::vector<std::vector<std::int64_t>>>& images,
             std::int64_t ell) {
              const auto [p, r] = split_prime_power(ell);
              const Field f = Field::make(p, r);
              Subgroup h(g.g, subgroup_members);
              auto hgrp = std::make_shared<SubgroupGroup>(h);
              Rep sigma = trivial_rep(hgrp, f, 1);
              if (!images.empty()) {
                  std::vector<std::pair<Elem, Mat>> gen_images;
                  int dim = -1;
                  for (const auto& [parent, rows] : images) {
                      if (!h.contains(parent))
                          throw Error("UsageError", "rep generator outside the subgroup");
                      Mat m(static_cast<int>(rows.size()));
                      for (size_t rr = 0; rr < rows.size(); ++rr)
                          for (size_t cc = 0; cc < rows[rr].size(); ++cc)
                              m.set(rr, cc, ((rows[rr][cc] % f.q()) + f.q()) % f.q());
                      if (dim < 0) dim = m.n;
                      gen_images.emplace_back(hgrp->to_local(parent), std::move(m));
                  }
                  sigma = rep_from_images(hgrp, f, dim, gen_images);
              }
              const Transversal t = transversal_identity_first(g.g, h);
              const BlockRep b = induce(sigma, g.g, t);
              const ExactSequence seq = exact_sequence_gamma(b);
              const InducedSplit sp = induced_split_check(b);
              json out;
              out["n"] = b.n;
              out["m"] = b.m;
              out["dim"] = b.rho.dim;
              out["image_orders"] = {{"rho_G", seq.rho_G.image->order()},
                                     {"rho_H", seq.rho_H.image->order()},
                                     {"quotient", seq.quotient->order()}};
              out["blocks"] = json::array();
              for (Elem rep : t.reps)
                  out["blocks"].push_back({{"representative", g.g->label(rep)},
                                           {"matrix", render_mat(f, b.rho.mats[rep])}});
              out["split"] = split_report_json(sp.report);
              return out.dump();
          },
          py::arg("group"), py::arg("subgroup_members"), py::arg("images"), py::arg("ell"));

    m.def("_pgl_psl_analysis_json", [](std::int64_t p) {
        const auto rep = pgl_psl_analysis(p);
        json out{{"pgl_order", rep.pgl_order},
                 {"psl_order", rep.psl_order},
                 {"complement_found", rep.complement_found},
                 {"witness", rep.witness_label},
                 {"no_complement_centralizes", rep.no_complement_centralizes},
                 {"witness_not_inner", rep.witness_not_inner},
                 {"no_complement_inner", rep.no_complement_inner},
                 {"pgl_not_psl_x_c2", rep.pgl_not_psl_x_c2}};
        return out.dump();
    });
}
