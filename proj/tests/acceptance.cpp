// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// All numeric checks are exact integer comparisons.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "boolattice/cases.hpp"
#include "boolattice/registry.hpp"
#include "brute_force.hpp"

using namespace boolattice;

namespace {

struct Harness {
    int failures = 0;
    std::vector<std::pair<std::string, IntervalLattice>> boolean_lattices;

    void criterion(int num, const std::string& what, const std::function<void()>& fn) {
        auto t0 = std::chrono::steady_clock::now();
        std::string error;
        try {
            fn();
        } catch (const std::exception& e) {
            error = e.what();
        }
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();
        std::ostringstream line;
        line << (error.empty() ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << what
             << " (" << secs << "s)";
        if (!error.empty()) {
            line << "\n        " << error;
            ++failures;
        }
        std::cout << line.str() << std::endl;
    }

    void keep_boolean(const std::string& id, IntervalLattice l) {
        boolean_lattices.emplace_back(id, std::move(l));
    }
};

struct Expect {
    template <typename A, typename B>
    static void eq(const A& got, const B& want, const std::string& what) {
        std::ostringstream g, w;
        g << got;
        w << want;
        if (g.str() != w.str())
            throw std::runtime_error(what + ": expected " + w.str() + ", got " + g.str());
    }
    static void that(bool ok, const std::string& what) {
        if (!ok)
            throw std::runtime_error(what);
    }
};

std::string sorted_orders(const IntervalLattice& l, const std::vector<int>& ids) {
    std::vector<BigInt> v;
    for (int i : ids)
        v.push_back(l.element(i).order);
    std::sort(v.begin(), v.end());
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << to_decimal(v[i]);
    return os.str();
}

bool same_element_sets(const IntervalLattice& a, const IntervalLattice& b) {
    if (a.size() != b.size())
        return false;
    for (int i = 0; i < a.size(); ++i) {
        bool found = false;
        for (int j = 0; j < b.size() && !found; ++j)
            found = a.element(i).group->same_group_as(*b.element(j).group);
        if (!found)
            return false;
    }
    return true;
}

} // namespace

int main() {
    Harness h;
    Caps caps;

    h.criterion(1, "Figure-1 reproduction in Alt(8)", [&] {
        PartitionChainSpec spec(8, {4, 2}, Ambient::Alt);
        GroupHandle bottom = partition_chain_subgroup(spec, {1, 2});
        Expect::eq(bottom.order(), 64, "bottom order");
        IntervalLattice l = enumerate_interval(GroupHandle::alternating(8), bottom, caps);
        Expect::eq(l.size(), 8, "element count");
        auto cert = boolean_certificate(l);
        Expect::that(cert.boolean, "interval must be Boolean");
        Expect::eq(cert.cert->rank, 3, "rank");
        Expect::eq(sorted_orders(l, l.coatoms()), std::string("576,1344,1344"), "coatom orders");
        auto lens = l.maximal_chain_lengths();
        Expect::that(lens.size() == 1 && *lens.begin() == 4, "all maximal chains have 4 elements");
        Expect::that(dual_euler_totient(l) >= 4, "phi_hat >= 2^2");
        h.keep_boolean("fig1-alt8", std::move(l));
    });

    h.criterion(2, "O_Sym(12)(M12) via 5040 coset joins, Hall consistency", [&] {
        GroupHandle s12 = GroupHandle::symmetric(12);
        GroupHandle m12 = registry_group("m12");
        Expect::eq(exact_div(s12.order(), m12.order()), 5040, "coset count");
        IntervalLattice l = enumerate_interval(s12, m12, caps);
        Expect::eq(l.size(), 3, "element count");
        Expect::eq(sorted_orders(l, {0, 1, 2}), std::string("95040,239500800,479001600"),
                   "orders");
        BigInt phi = euler_totient(l);
        Expect::eq(phi, 2520, "euler totient");
        Expect::eq(coset_generation_count(s12, m12, caps.max_index), 2520,
                   "brute-force generating-coset count");
    });

    h.criterion(3, "witness family phi_hat = 2^l for l = 1,2,3", [&] {
        for (int ell = 1; ell <= 3; ++ell) {
            auto [g, hh] = ore_family_pair(ell);
            IntervalLattice l = enumerate_interval(g, hh, caps);
            auto cert = boolean_certificate(l);
            Expect::that(cert.boolean, "interval must be Boolean");
            Expect::eq(cert.cert->rank, ell + 1, "rank");
            Expect::eq(dual_euler_totient(l), big_pow(2, ell), "phi_hat");
            h.keep_boolean("ore-family-" + std::to_string(ell), std::move(l));
        }
    });

    h.criterion(4, "octal dichotomy at degree 8", [&] {
        GroupHandle octal = registry_group("psl27_deg8");
        IntervalLattice la = enumerate_interval(GroupHandle::alternating(8), octal, caps);
        auto certa = boolean_certificate(la);
        Expect::that(certa.boolean, "Alt(8) interval must be Boolean");
        Expect::eq(certa.cert->rank, 2, "Alt(8) rank");
        IntervalLattice ls = enumerate_interval(GroupHandle::symmetric(8), octal, caps);
        Expect::eq(ls.size(), 6, "Sym(8) interval size");
        Expect::that(!boolean_certificate(ls).boolean, "Sym(8) interval must fail the certificate");
        h.keep_boolean("octal-alt8", std::move(la));
    });

    h.criterion(5, "Fact-2 exception at the (2,4)-partition", [&] {
        RegularPartition p24 = RegularPartition::canonical(2, 4);
        GroupHandle stab_alt = partition_stabilizer(p24, Ambient::Alt);
        Expect::that(!is_maximal_subgroup(GroupHandle::alternating(8), stab_alt, caps),
                     "must be non-maximal in Alt(8)");
        IntervalLattice l = enumerate_interval(GroupHandle::alternating(8), stab_alt, caps);
        bool has1344 = false;
        for (int i = 0; i < l.size(); ++i)
            has1344 |= l.element(i).order == 1344;
        Expect::that(has1344, "an intermediate subgroup of order 1344 exists");
        GroupHandle stab_sym = partition_stabilizer(p24, Ambient::Sym);
        Expect::that(is_maximal_subgroup(GroupHandle::symmetric(8), stab_sym, caps),
                     "must be maximal in Sym(8)");
        auto cert = boolean_certificate(l);
        if (cert.boolean)
            h.keep_boolean("fact2-alt8-interval", std::move(l));
    });

    h.criterion(6, "partition-chain construction, enumeration-certified", [&] {
        // n=8 Sym: constructed equals enumerated, atom indices (9,3)
        PartitionChainSpec spec8(8, {4, 2}, Ambient::Sym);
        IntervalLattice built8 = constructed_partition_interval(spec8, false, caps);
        IntervalLattice enum8 = enumerate_interval(*built8.element(built8.top()).group,
                                                   *built8.element(built8.bottom()).group, caps);
        Expect::that(same_element_sets(built8, enum8), "n=8 Sym: constructed == enumerated");
        auto cert8 = boolean_certificate(enum8);
        Expect::that(cert8.boolean && cert8.cert->rank == 2, "n=8 Sym: Boolean rank 2");
        {
            std::vector<BigInt> ai = cert8.cert->atom_indices;
            std::sort(ai.begin(), ai.end());
            Expect::eq(ai[0], partition_atom_index(spec8, 2), "n=8 atom index j=2 (3)");
            Expect::eq(ai[1], partition_atom_index(spec8, 1), "n=8 atom index j=1 (9)");
            Expect::eq(ai[0], 3, "closed form j=2");
            Expect::eq(ai[1], 9, "closed form j=1");
        }
        h.keep_boolean("n8-ladder-sym", enum8);

        // n=8 Alt ambient: enumeration must expose the Figure-1 anomaly,
        // not the rank-2 family
        PartitionChainSpec spec8a(8, {4, 2}, Ambient::Alt);
        IntervalLattice built8a = constructed_partition_interval(spec8a, false, caps);
        Expect::eq(built8a.size(), 4, "n=8 Alt: constructed family has 4 subgroups");
        IntervalLattice enum8a = enumerate_interval(*built8a.element(built8a.top()).group,
                                                    *built8a.element(built8a.bottom()).group, caps);
        Expect::eq(enum8a.size(), 8, "n=8 Alt: full interval has 8 elements");
        Expect::that(!same_element_sets(built8a, enum8a),
                     "n=8 Alt: constructed family is strictly smaller (the anomaly)");
        auto cert8a = boolean_certificate(enum8a);
        Expect::that(cert8a.boolean && cert8a.cert->rank == 3,
                     "n=8 Alt: the true interval is the rank-3 picture");

        // n=12 ladder (6,2) with the alternating coatom appended
        PartitionChainSpec spec12(12, {6, 2}, Ambient::Sym);
        IntervalLattice built12 = constructed_partition_interval(spec12, true, caps);
        Expect::eq(built12.size(), 8, "n=12: constructed 2^3 family");
        IntervalLattice enum12 = enumerate_interval(*built12.element(built12.top()).group,
                                                    *built12.element(built12.bottom()).group, caps);
        Expect::that(same_element_sets(built12, enum12), "n=12: constructed == enumerated");
        auto cert12 = boolean_certificate(enum12);
        Expect::that(cert12.boolean && cert12.cert->rank == 3, "n=12: Boolean rank 3");
        {
            // the two partition atoms match the closed forms
            std::vector<BigInt> ai = cert12.cert->atom_indices;
            std::sort(ai.begin(), ai.end());
            std::vector<BigInt> expect = {2, partition_atom_index(spec12, 1),
                                          partition_atom_index(spec12, 2)};
            std::sort(expect.begin(), expect.end());
            Expect::eq(ai[0], expect[0], "n=12 smallest atom index");
            Expect::eq(ai[1], expect[1], "n=12 middle atom index");
            Expect::eq(ai[2], expect[2], "n=12 largest atom index");
        }
        h.keep_boolean("n12-ladder-alt", enum12);
    });

    h.criterion(7, "product-chain construction at 625 points, formula-certified", [&] {
        ProductChainSpec spec(5, {2, 2});
        IntervalLattice l = constructed_product_interval(spec, caps);
        Expect::eq(l.size(), 4, "all four chain subgroups");
        auto cert = boolean_certificate(l);
        Expect::that(cert.boolean && cert.cert->rank == 2, "Boolean rank 2");
        Expect::eq(l.element(l.bottom()).order, big_pow(big_factorial(5), 4) * 8, "bottom order");
        Expect::eq(l.element(l.top()).order, big_factorial(625), "top order 625!");
        std::vector<BigInt> ai = cert.cert->atom_indices;
        std::sort(ai.begin(), ai.end());
        Expect::eq(ai[0], product_atom_index(spec, 2), "atom index j=2");
        Expect::eq(ai[1], product_atom_index(spec, 1), "atom index j=1");
        Expect::eq(ai[0], 3, "closed form j=2 is 3");
        BigInt big = big_pow(exact_div(big_factorial(25), big_pow(big_factorial(5), 2) * 2), 2);
        Expect::eq(ai[1], big, "closed form j=1 is (25!/(120^2*2))^2");
        BigInt ph = dual_euler_totient(l);
        Expect::that(ph >= 2, "phi_hat >= 2");
        h.keep_boolean("product-chain-625", std::move(l));
    });

    h.criterion(8, "structural lemma audit on every Boolean lattice above", [&] {
        Expect::that(!h.boolean_lattices.empty(), "need lattices from criteria 1-7");
        for (auto& [id, l] : h.boolean_lattices) {
            BoundReport audit = structural_lemma_audit(l, id);
            Expect::that(audit.verdict, id + ": phi_hat >= 2^(rank-1)");
            BoundReport bound = verify_theorem_bound(l, id);
            Expect::that(bound.verdict, id + ": bound verdict");
        }
    });

    h.criterion(9, "group-complemented formula across all intervals of Sym(4)", [&] {
        GroupHandle s4 = GroupHandle::symmetric(4);
        brute::GroupTable table(s4);
        auto subs = brute::all_subgroups(table);
        Expect::eq(subs.members.size(), 30u, "subgroup count of Sym(4)");
        int booleans = 0, rank2 = 0;
        for (size_t gi = 0; gi < subs.members.size(); ++gi) {
            const auto& gb = subs.members[gi];
            GroupHandle g = brute::handle_of(table, subs.gens[gi], 4);
            for (size_t hi = 0; hi < subs.members.size(); ++hi) {
                const auto& hb = subs.members[hi];
                if (!brute::bit_subset(hb, gb))
                    continue;
                GroupHandle hh = brute::handle_of(table, subs.gens[hi], 4);
                IntervalLattice l = enumerate_interval(g, hh, caps);
                auto cert = boolean_certificate(l);
                if (!cert.boolean)
                    continue;
                ++booleans;
                Expect::that(is_group_complemented(l, *cert.cert),
                             "Boolean intervals in a solvable group are group-complemented");
                Expect::eq(dual_euler_totient(l), group_complemented_value(l, *cert.cert),
                           "phi_hat equals the coatom-index product");
                if (cert.cert->rank == 2) {
                    ++rank2;
                    BigInt i1 = l.index_over_bottom(cert.cert->coatoms[0]);
                    BigInt i2 = l.index_over_bottom(cert.cert->coatoms[1]);
                    Expect::that(!(i1 == 2 && i2 == 2), "no rank-2 interval with indices (2,2)");
                }
            }
        }
        Expect::that(booleans > 0 && rank2 > 0, "sweep found Boolean and rank-2 intervals");
    });

    h.criterion(10, "Borel interval of PSL(3,2)", [&] {
        GroupHandle g = registry_group("psl27");
        GroupHandle b = borel_of_psl32();
        IntervalLattice l = enumerate_interval(g, b, caps);
        auto cert = boolean_certificate(l);
        Expect::that(cert.boolean && cert.cert->rank == 2, "Boolean rank 2");
        std::vector<BigInt> ci;
        for (int m : cert.cert->coatoms)
            ci.push_back(l.index_in_top(m));
        std::sort(ci.begin(), ci.end());
        Expect::eq(ci[0], 7, "coatom index");
        Expect::eq(ci[1], 7, "coatom index");
        BigInt ph = dual_euler_totient(l);
        Expect::eq(ph, 8, "phi_hat");
        BigInt two_part = 1, go = g.order();
        while (go % 2 == 0) {
            two_part *= 2;
            go /= 2;
        }
        Expect::eq(ph, two_part, "phi_hat equals the 2-part of |G|");
        h.keep_boolean("borel-psl32", std::move(l));
    });

    h.criterion(11, "oracle completeness over every subgroup pair of Sym(6)", [&] {
        GroupHandle s6 = GroupHandle::symmetric(6);
        brute::GroupTable table(s6);
        auto subs = brute::all_subgroups(table);
        Expect::eq(subs.members.size(), 1455u, "subgroup count of Sym(6)");
        std::vector<GroupHandle> handles;
        handles.reserve(subs.members.size());
        for (size_t i = 0; i < subs.members.size(); ++i)
            handles.push_back(brute::handle_of(table, subs.gens[i], 6));
        long pairs = 0;
        for (size_t gi = 0; gi < subs.members.size(); ++gi) {
            for (size_t hi = 0; hi < subs.members.size(); ++hi) {
                if (!brute::bit_subset(subs.members[hi], subs.members[gi]))
                    continue;
                ++pairs;
                IntervalLattice l = enumerate_interval(handles[gi], handles[hi], caps);
                // literal interval from the subgroup table
                std::vector<size_t> expected;
                for (size_t ki = 0; ki < subs.members.size(); ++ki)
                    if (brute::bit_subset(subs.members[hi], subs.members[ki]) &&
                        brute::bit_subset(subs.members[ki], subs.members[gi]))
                        expected.push_back(ki);
                if (l.size() != static_cast<int>(expected.size()))
                    throw std::runtime_error(
                        "interval size mismatch at pair |H|=" + to_decimal(handles[hi].order()) +
                        " |G|=" + to_decimal(handles[gi].order()) + ": enumerated " +
                        std::to_string(l.size()) + ", brute force " +
                        std::to_string(expected.size()));
                for (int i = 0; i < l.size(); ++i) {
                    brute::Bitset eb = brute::bitset_of_handle(table, *l.element(i).group);
                    bool found = false;
                    for (size_t ki : expected)
                        if (subs.members[ki] == eb) {
                            found = true;
                            break;
                        }
                    Expect::that(found, "enumerated element not among brute-force subgroups");
                }
            }
        }
        std::cout << "        (" << pairs << " subgroup pairs checked)\n";
    });

    std::cout << (h.failures == 0 ? "ACCEPTANCE: all criteria passed"
                                  : "ACCEPTANCE: " + std::to_string(h.failures) + " criteria FAILED")
              << std::endl;
    return h.failures == 0 ? 0 : 1;
}
