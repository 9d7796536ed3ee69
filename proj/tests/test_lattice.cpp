#include <doctest.h>

#include <algorithm>

#include "boolattice/registry.hpp"
#include "boolattice/totients.hpp"
#include "brute_force.hpp"

using namespace boolattice;

TEST_CASE("single-element interval") {
    GroupHandle g = GroupHandle::symmetric(4);
    IntervalLattice l = enumerate_interval(g, g);
    CHECK(l.size() == 1);
    CHECK(l.bottom() == l.top());
}

TEST_CASE("interval of Sym(4) over a point stabilizer") {
    GroupHandle g = GroupHandle::symmetric(4);
    GroupHandle h = g.point_stabilizer(0);
    IntervalLattice l = enumerate_interval(g, h);
    CHECK(l.size() == 2); // point stabilizers are maximal
    CHECK(is_maximal_subgroup(g, h));
}

TEST_CASE("enumeration matches literal subgroup enumeration up to degree 5") {
    for (int n = 3; n <= 5; ++n) {
        GroupHandle g = GroupHandle::symmetric(n);
        brute::GroupTable table(g);
        auto subs = brute::all_subgroups(table);
        // spot-check the subgroup counts for Sym(4) and Sym(5)
        if (n == 4)
            CHECK(subs.members.size() == 30);
        if (n == 5)
            CHECK(subs.members.size() == 156);
        for (size_t hi = 0; hi < subs.members.size(); ++hi) {
            const auto& hb = subs.members[hi];
            GroupHandle h = brute::handle_of(table, subs.gens[hi], n);
            IntervalLattice l = enumerate_interval(g, h);
            // literal interval: subgroups between h and g
            std::vector<brute::Bitset> expected;
            for (const auto& kb : subs.members)
                if (brute::bit_subset(hb, kb))
                    expected.push_back(kb);
            REQUIRE(l.size() == static_cast<int>(expected.size()));
            for (int i = 0; i < l.size(); ++i) {
                brute::Bitset eb = brute::bitset_of_handle(table, *l.element(i).group);
                CHECK(std::find(expected.begin(), expected.end(), eb) != expected.end());
            }
        }
    }
}

TEST_CASE("moebius values") {
    GroupHandle g = GroupHandle::symmetric(4);
    GroupHandle h = GroupHandle::build({Perm::parse("(1 2)(3 4)", 4), Perm::parse("(1 3)(2 4)", 4)});
    IntervalLattice l = enumerate_interval(g, h); // V4 < A4 < S4 plus D4
    CHECK(l.moebius(l.bottom(), l.bottom()) == 1);
    for (int i = 0; i < l.size(); ++i) {
        if (i == l.bottom() || i == l.top())
            continue;
        // chain H < K < G contributes mu(H,K) = -1
        CHECK(l.moebius(l.bottom(), i) == -1);
    }
}

TEST_CASE("three-element chain has moebius zero at the top") {
    GroupHandle s12 = GroupHandle::symmetric(12);
    GroupHandle m12 = registry_group("m12");
    IntervalLattice l = enumerate_interval(s12, m12);
    REQUIRE(l.size() == 3);
    CHECK(l.moebius(l.bottom(), l.top()) == 0);
    CHECK(l.maximal_chain_lengths() == std::set<int>{3});
}

TEST_CASE("boolean certificate on the trivial rank-1 interval") {
    GroupHandle g = GroupHandle::symmetric(5);
    GroupHandle h = GroupHandle::alternating(5);
    IntervalLattice l = enumerate_interval(g, h);
    auto cert = boolean_certificate(l);
    REQUIRE(cert.boolean);
    CHECK(cert.cert->rank == 1);
    CHECK(l.moebius(l.bottom(), l.top()) == -1);
}

TEST_CASE("boolean certificate rejects chains") {
    GroupHandle g = GroupHandle::symmetric(12);
    IntervalLattice l = enumerate_interval(g, registry_group("m12"));
    auto cert = boolean_certificate(l);
    CHECK(!cert.boolean);
}

TEST_CASE("boolean moebius alternates with rank") {
    // rank-2 instance: the Sylow-2 interval in Alt(6)
    GroupHandle g = GroupHandle::alternating(6);
    GroupHandle h = GroupHandle::build({Perm::parse("(1 2 3 4)(5 6)", 6), Perm::parse("(1 3)(5 6)", 6)});
    REQUIRE(h.order() == 8);
    IntervalLattice l = enumerate_interval(g, h);
    auto cert = boolean_certificate(l);
    REQUIRE(cert.boolean);
    CHECK(cert.cert->rank == 2);
    CHECK(l.moebius(l.bottom(), l.top()) == 1);
    for (int a : cert.cert->atoms)
        CHECK(l.moebius(l.bottom(), a) == -1);
}

TEST_CASE("constructed partition interval at n=8 certifies") {
    PartitionChainSpec spec(8, {4, 2}, Ambient::Sym);
    IntervalLattice built = constructed_partition_interval(spec, false);
    CHECK(built.size() == 4);
    auto cert = boolean_certificate(built);
    REQUIRE(cert.boolean);
    CHECK(cert.cert->rank == 2);
    // enumeration agreement (index 315 over the 128-element bottom)
    IntervalLattice enumd =
        enumerate_interval(*built.element(built.top()).group, *built.element(built.bottom()).group);
    REQUIRE(enumd.size() == 4);
    for (int i = 0; i < built.size(); ++i) {
        bool found = false;
        for (int j = 0; j < enumd.size(); ++j)
            found |= built.element(i).group->same_group_as(*enumd.element(j).group);
        CHECK(found);
    }
    // atom indices from the closed form match the lattice
    auto atoms = cert.cert->atom_indices;
    std::sort(atoms.begin(), atoms.end());
    CHECK(atoms[0] == partition_atom_index(spec, 2)); // 3
    CHECK(atoms[1] == partition_atom_index(spec, 1)); // 9
}

TEST_CASE("constructed product interval at degree 25 certifies and matches enumeration caps") {
    ProductChainSpec spec(5, {2});
    IntervalLattice built = constructed_product_interval(spec);
    CHECK(built.size() == 2);
    auto cert = boolean_certificate(built);
    REQUIRE(cert.boolean);
    CHECK(cert.cert->rank == 1);
    CHECK(built.element(built.top()).order == big_factorial(25));
}

TEST_CASE("is_maximal examples") {
    // subset stabilizer of a 2-set in Sym(6) is maximal
    GroupHandle g6 = GroupHandle::symmetric(6);
    GroupHandle st = subset_stabilizer({0, 1}, 6, Ambient::Sym);
    CHECK(is_maximal_subgroup(g6, st));
    // Alt(n) in Sym(n) is maximal
    CHECK(is_maximal_subgroup(GroupHandle::symmetric(7), GroupHandle::alternating(7)));
}

TEST_CASE("lattice re-load from orders keeps structure") {
    GroupHandle g = GroupHandle::symmetric(4);
    GroupHandle h = GroupHandle::trivial(4);
    IntervalLattice l = enumerate_interval(g, h);
    CHECK(l.size() == 30);
    l.check_lattice();
    std::vector<BigInt> orders;
    std::vector<std::vector<bool>> leq;
    for (int i = 0; i < l.size(); ++i) {
        orders.push_back(l.element(i).order);
        std::vector<bool> row;
        for (int j = 0; j < l.size(); ++j)
            row.push_back(l.leq(i, j));
        leq.push_back(row);
    }
    IntervalLattice l2 = IntervalLattice::from_orders(orders, leq, "loaded");
    CHECK(l2.size() == l.size());
    CHECK(euler_totient(l2) == euler_totient(l));
}
