#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolattice/cases.hpp"
#include "boolattice/registry.hpp"

using namespace boolattice;

namespace {

GroupHandle resolve_group(const std::string& spec) {
    if (spec.find('/') != std::string::npos || spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
        return group_from_json_file(spec);
    return registry_group(spec);
}

void print_lattice_summary(const IntervalLattice& l, std::ostream& os) {
    os << "elements: " << l.size() << " (provenance: " << l.provenance() << ")\n";
    os << "  id  order  |G:K|  |K:H|\n";
    for (int i = 0; i < l.size(); ++i) {
        os << "  " << i << (i == l.bottom() ? " [H]" : i == l.top() ? " [G]" : "") << "  "
           << to_decimal(l.element(i).order) << "  " << to_decimal(l.index_in_top(i)) << "  "
           << to_decimal(l.index_over_bottom(i)) << "\n";
    }
    auto cert = boolean_certificate(l);
    if (cert.boolean) {
        os << "boolean: yes, rank " << cert.cert->rank << "\n";
        os << "atom indices:";
        for (const BigInt& a : cert.cert->atom_indices)
            os << " " << to_decimal(a);
        os << "\n";
    } else {
        os << "boolean: no (" << cert.reason << ")\n";
    }
    TotientReport t = totients(l);
    os << "phi " << to_decimal(t.phi) << ", phi_hat " << to_decimal(t.phi_hat) << ", chi "
       << to_decimal(t.chi) << "\n";
    if (cert.boolean) {
        BoundReport b = structural_lemma_audit(l);
        os << "lemma audit: " << b.audited.size() << " checks passed; bound verdict "
           << (b.verdict ? "phi_hat >= 2^(rank-1) holds" : "FAILED") << "\n";
    }
}

int report_lattice(const IntervalLattice& l, bool as_json) {
    if (as_json) {
        auto cert = boolean_certificate(l);
        if (cert.boolean) {
            BoundReport b = structural_lemma_audit(l);
            std::cout << lattice_to_json(l, &b) << "\n";
        } else {
            std::cout << lattice_to_json(l) << "\n";
        }
    } else {
        print_lattice_summary(l, std::cout);
    }
    return 0;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stoi(tok));
    return out;
}

int compare_constructed_enumerated(const IntervalLattice& constructed,
                                   const IntervalLattice& enumerated) {
    bool equal = constructed.size() == enumerated.size();
    if (equal) {
        for (int i = 0; i < constructed.size() && equal; ++i) {
            bool found = false;
            for (int j = 0; j < enumerated.size() && !found; ++j)
                found = constructed.element(i).group->same_group_as(*enumerated.element(j).group);
            equal = found;
        }
    }
    std::cout << "enumeration cross-check: constructed " << constructed.size()
              << " subgroups, enumerated " << enumerated.size() << ", element sets "
              << (equal ? "EQUAL" : "DIFFER") << "\n";
    return equal ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact overgroup-lattice toolkit for symmetric and alternating groups"};
    app.require_subcommand(1);

    long max_index = 600000;
    int max_backtrack = 16;
    bool as_json = false;
    app.add_option("--max-index", max_index, "coset enumeration cap (default 600000)");
    app.add_option("--max-degree-backtrack", max_backtrack,
                   "degree cap for backtrack intersection (default 16)");
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string group_spec, subgroup_spec, load_path;

    auto add_pair_opts = [&](CLI::App* cmd, bool with_load) {
        cmd->add_option("--group", group_spec, "ambient group (registry name or JSON file)");
        cmd->add_option("--subgroup", subgroup_spec, "bottom subgroup (registry name or JSON file)");
        if (with_load)
            cmd->add_option("--load", load_path, "reload a lattice dump instead of computing");
    };

    auto* cmd_interval = app.add_subcommand("interval", "enumerate O_G(H) and report it");
    add_pair_opts(cmd_interval, true);

    auto* cmd_bool = app.add_subcommand("boolean-check", "certify whether O_G(H) is Boolean");
    add_pair_opts(cmd_bool, true);

    auto* cmd_tot = app.add_subcommand("totient", "Euler totient, dual totient, and chi of O_G(H)");
    add_pair_opts(cmd_tot, true);

    auto* cmd_construct = app.add_subcommand("construct", "build chain lattices");
    auto* cmd_pc = cmd_construct->add_subcommand("partition-chain", "stabilizers of a partition chain");
    int pc_n = 0;
    std::string pc_ladder, ambient_str = "sym", certify = "formula", spec_path;
    bool with_alt = false, do_enumerate = false;
    cmd_pc->add_option("--n", pc_n, "domain size");
    cmd_pc->add_option("--ladder", pc_ladder, "block counts n_1>n_2>... e.g. 6,2");
    cmd_pc->add_option("--spec", spec_path, "chain spec JSON file (alternative to --n/--ladder)");
    cmd_pc->add_option("--ambient", ambient_str, "sym or alt");
    cmd_pc->add_flag("--with-alt", with_alt, "append Alt as an extra coatom (Sym ambient)");
    cmd_pc->add_option("--certify", certify, "enumerate (complete) or formula (structure only)");
    cmd_pc->add_flag("--enumerate", do_enumerate, "alias for --certify enumerate");

    auto* cmd_prc = cmd_construct->add_subcommand("product-chain", "stabilizers of a product-structure chain");
    long prc_a = 0;
    std::string prc_bs;
    cmd_prc->add_option("--a", prc_a, "base size a");
    cmd_prc->add_option("--bs", prc_bs, "branching list b_1,b_2,... e.g. 2,2");
    cmd_prc->add_option("--spec", spec_path, "chain spec JSON file (alternative to --a/--bs)");
    cmd_prc->add_option("--certify", certify, "enumerate or formula (default formula)");
    cmd_prc->add_flag("--enumerate", do_enumerate, "alias for --certify enumerate");

    auto* cmd_case = app.add_subcommand("case", "run a named reproduction case");
    std::string case_name;
    int ell = 1;
    cmd_case->add_option("name", case_name, "case name (see list-cases)")->required();
    cmd_case->add_option("--ell", ell, "rank parameter for ore-family");

    auto* cmd_list = app.add_subcommand("list-cases", "list the named reproduction cases");

    auto* cmd_export = app.add_subcommand("export", "export the Hasse diagram");
    std::string dot_path;
    cmd_export->add_option("--dot", dot_path, "output DOT file")->required();
    add_pair_opts(cmd_export, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    Caps caps{max_index, max_backtrack};

    try {
        auto lattice_from_args = [&]() -> IntervalLattice {
            if (!load_path.empty()) {
                std::ifstream in(load_path);
                if (!in)
                    throw GroupError("cannot open " + load_path);
                std::stringstream ss;
                ss << in.rdbuf();
                return lattice_from_json(ss.str());
            }
            if (group_spec.empty() || subgroup_spec.empty())
                throw CLI::ValidationError("--group and --subgroup (or --load) are required");
            return enumerate_interval(resolve_group(group_spec), resolve_group(subgroup_spec), caps);
        };

        if (*cmd_interval)
            return report_lattice(lattice_from_args(), as_json);

        if (*cmd_bool) {
            IntervalLattice l = lattice_from_args();
            auto cert = boolean_certificate(l);
            if (as_json)
                return report_lattice(l, true);
            if (cert.boolean)
                std::cout << "boolean: yes, rank " << cert.cert->rank << "\n";
            else
                std::cout << "boolean: no (" << cert.reason << ")\n";
            return 0;
        }

        if (*cmd_tot) {
            IntervalLattice l = lattice_from_args();
            if (as_json)
                return report_lattice(l, true);
            TotientReport t = totients(l);
            std::cout << "phi " << to_decimal(t.phi) << "\nphi_hat " << to_decimal(t.phi_hat)
                      << "\nchi " << to_decimal(t.chi) << "\n";
            return 0;
        }

        auto read_file = [](const std::string& path) {
            std::ifstream in(path);
            if (!in)
                throw GroupError("cannot open " + path);
            std::stringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };

        auto finish_construct = [&](IntervalLattice built, const std::string& chain_json) -> int {
            int rc = 0;
            if (as_json) {
                nlohmann::json out;
                out["chain"] = nlohmann::json::parse(chain_json);
                auto cert = boolean_certificate(built);
                if (cert.boolean) {
                    BoundReport b = structural_lemma_audit(built);
                    out["lattice"] = nlohmann::json::parse(lattice_to_json(built, &b));
                } else {
                    out["lattice"] = nlohmann::json::parse(lattice_to_json(built));
                }
                std::cout << out.dump(2) << "\n";
            } else {
                print_lattice_summary(built, std::cout);
            }
            if (do_enumerate || certify == "enumerate") {
                IntervalLattice enumd =
                    enumerate_interval(*built.element(built.top()).group,
                                       *built.element(built.bottom()).group, caps);
                rc = std::max(rc, compare_constructed_enumerated(built, enumd));
            } else {
                std::cout << "certification: formula (completeness not enumeration-checked)\n";
            }
            return rc;
        };

        if (*cmd_pc) {
            PartitionChainSpec spec =
                !spec_path.empty()
                    ? partition_chain_from_json(read_file(spec_path))
                    : PartitionChainSpec(pc_n, parse_int_list(pc_ladder),
                                         ambient_str == "alt" ? Ambient::Alt : Ambient::Sym);
            return finish_construct(constructed_partition_interval(spec, with_alt, caps),
                                    partition_chain_to_json(spec));
        }

        if (*cmd_prc) {
            ProductChainSpec spec = !spec_path.empty()
                                        ? product_chain_from_json(read_file(spec_path))
                                        : ProductChainSpec(prc_a, parse_int_list(prc_bs));
            return finish_construct(constructed_product_interval(spec, caps),
                                    product_chain_to_json(spec));
        }

        if (*cmd_case) {
            CaseReport rep = run_case(case_name, caps, ell);
            if (as_json) {
                std::cout << "{\"name\":\"" << rep.name << "\",\"pass\":" << (rep.pass ? "true" : "false")
                          << ",\"checks\":[";
                for (size_t i = 0; i < rep.checks.size(); ++i) {
                    const auto& c = rep.checks[i];
                    std::cout << (i ? "," : "") << "{\"what\":\"" << c.what << "\",\"expected\":\""
                              << c.expected << "\",\"got\":\"" << c.got << "\",\"ok\":"
                              << (c.ok ? "true" : "false") << "}";
                }
                std::cout << "]}\n";
            } else {
                for (const auto& c : rep.checks)
                    std::cout << (c.ok ? "[ ok ] " : "[FAIL] ") << rep.name << ": " << c.what
                              << " (expected " << c.expected << ", got " << c.got << ")\n";
                std::cout << (rep.pass ? "PASS " : "FAIL ") << rep.name << "\n";
            }
            return rep.pass ? 0 : 1;
        }

        if (*cmd_list) {
            for (const auto& [name, desc] : list_cases())
                std::cout << name << "  -  " << desc << "\n";
            return 0;
        }

        if (*cmd_export) {
            IntervalLattice l = lattice_from_args();
            std::ofstream out(dot_path);
            if (!out)
                throw GroupError("cannot write " + dot_path);
            out << lattice_to_dot(l);
            std::cout << "wrote " << dot_path << "\n";
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownCase& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const GroupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
