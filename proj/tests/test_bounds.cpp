#include <doctest.h>

#include "boolattice/cases.hpp"
#include "boolattice/registry.hpp"
#include "brute_force.hpp"

using namespace boolattice;

TEST_CASE("group complemented checks") {
    GroupHandle c6 = GroupHandle::build({Perm::parse("(1 2 3 4 5 6)", 6)});
    IntervalLattice l = enumerate_interval(c6, GroupHandle::trivial(6));
    auto cert = boolean_certificate(l);
    REQUIRE(cert.boolean);
    CHECK(is_group_complemented(l, *cert.cert));
    CHECK(group_complemented_value(l, *cert.cert) == 2);
    CHECK(dual_euler_totient(l) == 2);

    // the n=8 rank-2 partition-chain lattice is NOT group-complemented
    PartitionChainSpec spec(8, {4, 2}, Ambient::Sym);
    IntervalLattice built = constructed_partition_interval(spec, false);
    auto cert2 = boolean_certificate(built);
    REQUIRE(cert2.boolean);
    CHECK(!is_group_complemented(built, *cert2.cert));
    CHECK_THROWS_AS(group_complemented_value(built, *cert2.cert), GroupError);

    // rank-1 lattices are trivially group-complemented
    IntervalLattice rank1 =
        enumerate_interval(GroupHandle::symmetric(5), GroupHandle::alternating(5));
    auto cert3 = boolean_certificate(rank1);
    REQUIRE(cert3.boolean);
    CHECK(is_group_complemented(rank1, *cert3.cert));
}

TEST_CASE("atom bound values") {
    CHECK(atom_bound_value({BigInt(3), BigInt(9)}) == BigRational(15));
    CHECK(atom_bound_value({BigInt(2), BigInt(2)}) == BigRational(0));
    // indices 2^1, 2^2, 2^3 push the bound past 2^(l-1)
    BigRational b = atom_bound_value({BigInt(2), BigInt(4), BigInt(8)});
    CHECK(b >= BigRational(4));
    CHECK_THROWS_AS(atom_bound_value({BigInt(0)}), GroupError);
}

TEST_CASE("structural audit passes on the catalog boolean lattices") {
    // rank 2: Alt(6) over a Sylow-2
    GroupHandle d4 =
        GroupHandle::build({Perm::parse("(1 2 3 4)(5 6)", 6), Perm::parse("(1 3)(5 6)", 6)});
    IntervalLattice l1 = enumerate_interval(GroupHandle::alternating(6), d4);
    BoundReport r1 = structural_lemma_audit(l1, "alt6");
    CHECK(r1.rank == 2);
    CHECK(r1.verdict);
    CHECK(r1.phi_hat == 16);

    // rank 2 via construction
    PartitionChainSpec spec(8, {4, 2}, Ambient::Sym);
    IntervalLattice l2 = constructed_partition_interval(spec, false);
    BoundReport r2 = structural_lemma_audit(l2, "n8-ladder");
    CHECK(r2.verdict);
    std::vector<BigInt> ai = r2.atom_indices;
    std::sort(ai.begin(), ai.end());
    CHECK(ai == std::vector<BigInt>{3, 9});

    // rank 3 with an alternating coatom appended
    IntervalLattice l3 = constructed_partition_interval(spec, true);
    BoundReport r3 = structural_lemma_audit(l3, "n8-ladder-alt");
    CHECK(r3.rank == 3);
    CHECK(r3.verdict);
}

TEST_CASE("audit rejects non-boolean lattices") {
    IntervalLattice ls = enumerate_interval(GroupHandle::symmetric(8), registry_group("psl27_deg8"));
    CHECK_THROWS_AS(structural_lemma_audit(ls), LatticeNotBoolean);
    CHECK_THROWS_AS(verify_theorem_bound(ls), LatticeNotBoolean);
}

TEST_CASE("verify_theorem_bound on the witness family") {
    for (int ell = 1; ell <= 3; ++ell) {
        auto [g, h] = ore_family_pair(ell);
        IntervalLattice l = enumerate_interval(g, h);
        BoundReport r = verify_theorem_bound(l, "ore-" + std::to_string(ell));
        CHECK(r.verdict);
        CHECK(r.phi_hat == big_pow(2, ell)); // 2^l = 2^(rank-1) exactly: the bound is tight
    }
}

TEST_CASE("exhaustive boolean interval sweep inside Sym(4)") {
    // every boolean interval O_G(H) with H <= G <= Sym(4): the
    // group-complemented product formula and the rank-2 (2,2) exclusion
    GroupHandle s4 = GroupHandle::symmetric(4);
    brute::GroupTable table(s4);
    auto subs = brute::all_subgroups(table);
    int boolean_count = 0, gc_count = 0, rank2_count = 0;
    for (size_t gi = 0; gi < subs.members.size(); ++gi) {
        const auto& gb = subs.members[gi];
        GroupHandle g = brute::handle_of(table, subs.gens[gi], 4);
        for (size_t hi = 0; hi < subs.members.size(); ++hi) {
            const auto& hb = subs.members[hi];
            if (!brute::bit_subset(hb, gb))
                continue;
            GroupHandle h = brute::handle_of(table, subs.gens[hi], 4);
            IntervalLattice l = enumerate_interval(g, h);
            auto cert = boolean_certificate(l);
            if (!cert.boolean)
                continue;
            ++boolean_count;
            if (is_group_complemented(l, *cert.cert)) {
                ++gc_count;
                CHECK(dual_euler_totient(l) == group_complemented_value(l, *cert.cert));
            }
            if (cert.cert->rank == 2) {
                ++rank2_count;
                std::vector<BigInt> mi;
                for (int m : cert.cert->coatoms)
                    mi.push_back(l.index_over_bottom(m));
                CHECK(!(mi[0] == 2 && mi[1] == 2));
            }
            // every boolean interval in a solvable ambient is group-complemented
            CHECK(is_group_complemented(l, *cert.cert));
            structural_lemma_audit(l);
        }
    }
    CHECK(boolean_count > 0);
    CHECK(gc_count == boolean_count);
    CHECK(rank2_count > 0);
}

TEST_CASE("product formula inequality on an enumerated lattice") {
    IntervalLattice l = enumerate_interval(GroupHandle::symmetric(4), GroupHandle::trivial(4));
    for (int i = 0; i < l.size(); ++i)
        for (int j = 0; j < l.size(); ++j) {
            BigInt lhs = l.element(i).order * l.element(j).order;
            BigInt rhs =
                l.element(l.join_of(i, j)).order * l.element(l.meet_of(i, j)).order;
            CHECK(lhs <= rhs);
        }
}
