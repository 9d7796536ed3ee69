#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "boolattice/cases.hpp"
#include "boolattice/registry.hpp"

namespace py = pybind11;
using namespace boolattice;

namespace {

py::int_ to_pyint(const BigInt& v) {
    return py::cast<py::int_>(
        py::module_::import("builtins").attr("int")(to_decimal(v)));
}

py::dict totients_dict(const IntervalLattice& l) {
    TotientReport t = totients(l);
    py::dict d;
    d["phi"] = to_pyint(t.phi);
    d["phi_hat"] = to_pyint(t.phi_hat);
    d["chi"] = to_pyint(t.chi);
    return d;
}

py::dict certificate_dict(const IntervalLattice& l) {
    auto c = boolean_certificate(l);
    py::dict d;
    d["boolean"] = c.boolean;
    if (c.boolean) {
        d["rank"] = c.cert->rank;
        d["atoms"] = c.cert->atoms;
        d["coatoms"] = c.cert->coatoms;
        py::list ai;
        for (const BigInt& v : c.cert->atom_indices)
            ai.append(to_pyint(v));
        d["atom_indices"] = ai;
    } else {
        d["reason"] = c.reason;
    }
    return d;
}

py::dict bounds_dict(const BoundReport& b) {
    py::dict d;
    d["lattice_id"] = b.lattice_id;
    d["rank"] = b.rank;
    py::list ai, ci;
    for (const BigInt& v : b.atom_indices)
        ai.append(to_pyint(v));
    for (const BigInt& v : b.coatom_indices)
        ci.append(to_pyint(v));
    d["atom_indices"] = ai;
    d["coatom_indices"] = ci;
    d["group_complemented"] = b.group_complemented;
    d["phi"] = to_pyint(b.phi);
    d["phi_hat"] = to_pyint(b.phi_hat);
    d["chi"] = to_pyint(b.chi);
    d["audited"] = b.audited;
    d["verdict"] = b.verdict;
    return d;
}

Ambient parse_ambient(const std::string& s) {
    if (s == "sym")
        return Ambient::Sym;
    if (s == "alt")
        return Ambient::Alt;
    throw GroupError("ambient must be 'sym' or 'alt'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact overgroup-lattice computations in symmetric and alternating groups";

    py::register_exception<GroupError>(m, "GroupError");

    py::class_<Perm>(m, "Perm")
        .def(py::init([](const std::vector<int>& images) { return Perm(std::vector<int>(images)); }),
             py::arg("images"))
        .def_static("identity", [](int n) { return Perm(n); })
        .def_static("parse", &Perm::parse, py::arg("text"), py::arg("degree"))
        .def_property_readonly("degree", &Perm::degree)
        .def("images",
             [](const Perm& p) {
                 return std::vector<int>(p.images().begin(), p.images().end());
             })
        .def("then", &Perm::then)
        .def("inverse", &Perm::inverse)
        .def("sign", &Perm::sign)
        .def("is_identity", &Perm::is_identity)
        .def("cycle_string", &Perm::cycle_string)
        .def("image_string", &Perm::image_string)
        .def("__eq__", [](const Perm& a, const Perm& b) { return a == b; })
        .def("__repr__", [](const Perm& p) { return "Perm(" + p.cycle_string() + ")"; });

    m.def("induced_pair_action", &induced_pair_action);

    py::class_<GroupHandle>(m, "Group")
        .def_static("build", [](const std::vector<Perm>& gens) { return GroupHandle::build(gens); })
        .def_static("symmetric", &GroupHandle::symmetric)
        .def_static("alternating", &GroupHandle::alternating)
        .def_static("trivial", &GroupHandle::trivial)
        .def_property_readonly("degree", &GroupHandle::degree)
        .def_property_readonly("order", [](const GroupHandle& g) { return to_pyint(g.order()); })
        .def("generators", &GroupHandle::generators)
        .def("contains", &GroupHandle::contains)
        .def("is_subgroup_of", &GroupHandle::is_subgroup_of)
        .def("same_group_as", &GroupHandle::same_group_as)
        .def("is_transitive", &GroupHandle::is_transitive)
        .def("orbits", &GroupHandle::orbits)
        .def("point_stabilizer", &GroupHandle::point_stabilizer)
        .def("__repr__", [](const GroupHandle& g) {
            return "Group(degree=" + std::to_string(g.degree()) + ", order=" + to_decimal(g.order()) +
                   ")";
        });

    m.def("registry_group", &registry_group);
    m.def("group_from_json", &group_from_json_text);
    m.def("even_part", &even_part);
    m.def("join", &join);
    m.def("intersect", &intersect, py::arg("a"), py::arg("b"), py::arg("degree_cap") = 16);
    m.def("coset_representatives", &coset_representatives);
    m.def("coset_generation_count", &coset_generation_count);

    py::class_<IntervalLattice>(m, "IntervalLattice")
        .def_property_readonly("size", &IntervalLattice::size)
        .def_property_readonly("bottom", &IntervalLattice::bottom)
        .def_property_readonly("top", &IntervalLattice::top)
        .def_property_readonly("provenance", &IntervalLattice::provenance)
        .def("order_of", [](const IntervalLattice& l, int i) { return to_pyint(l.element(i).order); })
        .def("leq", &IntervalLattice::leq)
        .def("hasse_edges", &IntervalLattice::hasse_edges)
        .def("atoms", &IntervalLattice::atoms)
        .def("coatoms", &IntervalLattice::coatoms)
        .def("moebius",
             [](const IntervalLattice& l, int x, int y) { return to_pyint(l.moebius(x, y)); })
        .def("maximal_chain_lengths",
             [](const IntervalLattice& l) {
                 auto s = l.maximal_chain_lengths();
                 return std::vector<int>(s.begin(), s.end());
             })
        .def("group_at", [](const IntervalLattice& l, int i) -> std::optional<GroupHandle> {
            return l.element(i).group;
        })
        .def("certificate", &certificate_dict)
        .def("totients", &totients_dict)
        .def("to_json", [](const IntervalLattice& l) { return lattice_to_json(l, nullptr); });

    m.def(
        "enumerate_interval",
        [](const GroupHandle& g, const GroupHandle& h, long max_index) {
            Caps caps;
            caps.max_index = max_index;
            return enumerate_interval(g, h, caps);
        },
        py::arg("g"), py::arg("h"), py::arg("max_index") = 600000);
    m.def("lattice_from_json", &lattice_from_json);
    m.def("lattice_to_dot", &lattice_to_dot);

    m.def(
        "partition_chain",
        [](int n, const std::vector<int>& ladder, const std::string& ambient,
           const std::vector<int>& I) {
            return partition_chain_subgroup(PartitionChainSpec(n, ladder, parse_ambient(ambient)),
                                            I);
        },
        py::arg("n"), py::arg("ladder"), py::arg("ambient") = "sym",
        py::arg("I") = std::vector<int>{});
    m.def(
        "product_chain",
        [](long a, const std::vector<int>& bs, const std::vector<int>& I) {
            return product_chain_subgroup(ProductChainSpec(a, bs), I);
        },
        py::arg("a"), py::arg("bs"), py::arg("I") = std::vector<int>{});
    m.def(
        "constructed_partition_interval",
        [](int n, const std::vector<int>& ladder, const std::string& ambient, bool with_alt) {
            return constructed_partition_interval(PartitionChainSpec(n, ladder, parse_ambient(ambient)),
                                                  with_alt);
        },
        py::arg("n"), py::arg("ladder"), py::arg("ambient") = "sym", py::arg("with_alt") = false);
    m.def(
        "constructed_product_interval",
        [](long a, const std::vector<int>& bs) {
            return constructed_product_interval(ProductChainSpec(a, bs));
        },
        py::arg("a"), py::arg("bs"));
    m.def(
        "partition_atom_index",
        [](int n, const std::vector<int>& ladder, int j) {
            return to_pyint(partition_atom_index(PartitionChainSpec(n, ladder, Ambient::Sym), j));
        },
        py::arg("n"), py::arg("ladder"), py::arg("j"));
    m.def(
        "product_atom_index",
        [](long a, const std::vector<int>& bs, int j) {
            return to_pyint(product_atom_index(ProductChainSpec(a, bs), j));
        },
        py::arg("a"), py::arg("bs"), py::arg("j"));

    m.def("partition_stabilizer",
          [](int a, int b, const std::string& ambient) {
              return partition_stabilizer(RegularPartition::canonical(a, b), parse_ambient(ambient));
          });
    m.def("subset_stabilizer", [](const std::vector<int>& gamma, int n, const std::string& ambient) {
        return subset_stabilizer(gamma, n, parse_ambient(ambient));
    });
    m.def("product_structure_stabilizer", [](int mm, int kk, const std::string& ambient) {
        return product_stabilizer(ProductStructure::canonical(mm, kk), parse_ambient(ambient));
    });

    m.def("is_maximal_subgroup", [](const GroupHandle& g, const GroupHandle& mm) {
        return is_maximal_subgroup(g, mm);
    });
    m.def("structural_lemma_audit", [](const IntervalLattice& l, const std::string& id) {
        return bounds_dict(structural_lemma_audit(l, id));
    });
    m.def("verify_theorem_bound", [](const IntervalLattice& l, const std::string& id) {
        return bounds_dict(verify_theorem_bound(l, id));
    });

    m.def(
        "run_case",
        [](const std::string& name, int ell) {
            CaseReport r = run_case(name, Caps{}, ell);
            py::dict d;
            d["name"] = r.name;
            d["pass"] = r.pass;
            py::list checks;
            for (const auto& c : r.checks) {
                py::dict cd;
                cd["what"] = c.what;
                cd["expected"] = c.expected;
                cd["got"] = c.got;
                cd["ok"] = c.ok;
                checks.append(cd);
            }
            d["checks"] = checks;
            return d;
        },
        py::arg("name"), py::arg("ell") = 1);
    m.def("list_cases", &list_cases);
}
