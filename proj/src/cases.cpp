#include "boolattice/cases.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "boolattice/registry.hpp"

namespace boolattice {

namespace {

struct Recorder {
    CaseReport rep;

    template <typename T, typename U>
    void expect(const std::string& what, const T& expected, const U& got, const std::string& note) {
        std::ostringstream e, g;
        e << expected;
        g << got;
        CaseCheck c{what, e.str(), g.str(), e.str() == g.str(), note};
        rep.checks.push_back(std::move(c));
    }

    void expect_true(const std::string& what, bool got, const std::string& note) {
        expect(what, true, got, note);
    }

    void audit_boolean(const IntervalLattice& l, const std::string& id) {
        try {
            BoundReport b = structural_lemma_audit(l, id);
            expect_true(id + ": structural lemma audit", true, "all applicable lemma checks");
            expect_true(id + ": phi_hat >= 2^(rank-1)",
                        verify_theorem_bound(l, id).verdict, "dual totient lower bound");
            rep.lattice_dumps.push_back(lattice_to_json(l, &b));
        } catch (const GroupError& e) {
            expect(id + ": structural lemma audit", std::string("pass"), std::string(e.what()),
                   "audit must not fail");
        }
    }

    CaseReport finish(const std::string& name) {
        rep.name = name;
        rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const CaseCheck& c) { return c.ok; });
        return rep;
    }
};

std::string orders_string(const IntervalLattice& l) {
    std::vector<BigInt> v;
    for (int i = 0; i < l.size(); ++i)
        v.push_back(l.element(i).order);
    std::sort(v.begin(), v.end());
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << to_decimal(v[i]);
    return os.str();
}

std::string coatom_orders_string(const IntervalLattice& l) {
    std::vector<BigInt> v;
    for (int m : l.coatoms())
        v.push_back(l.element(m).order);
    std::sort(v.begin(), v.end());
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << to_decimal(v[i]);
    return os.str();
}

std::string chain_lengths_string(const IntervalLattice& l) {
    std::ostringstream os;
    bool first = true;
    for (int x : l.maximal_chain_lengths()) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    return os.str();
}

CaseReport case_fig1(const Caps& caps) {
    Recorder r;
    PartitionChainSpec spec(8, {4, 2}, Ambient::Alt);
    GroupHandle h = partition_chain_subgroup(spec, {1, 2});
    r.expect("bottom order", 64, h.order(), "even part of the 2-2-2 tower");
    IntervalLattice l = enumerate_interval(GroupHandle::alternating(8), h, caps);
    r.expect("element count", 8, l.size(), "largest Boolean interval in Alt(8)");
    auto cert = boolean_certificate(l);
    r.expect_true("boolean", cert.boolean, "must certify");
    if (cert.boolean)
        r.expect("rank", 3, cert.cert->rank, "rank-3 picture");
    r.expect("coatom orders", std::string("576,1344,1344"), coatom_orders_string(l),
             "two affine groups and the even part of the 4-2 tower");
    r.expect("maximal chain lengths", std::string("4"), chain_lengths_string(l),
             "all maximal chains pass 4 elements");
    r.expect("phi_hat", 64, dual_euler_totient(l), "exact dual totient; >= 4 required");
    r.audit_boolean(l, "fig1-alt8");
    return r.finish("fig1-alt8");
}

CaseReport case_m12_chain(const Caps& caps) {
    Recorder r;
    GroupHandle m12 = registry_group("m12");
    GroupHandle s12 = GroupHandle::symmetric(12);
    IntervalLattice l = enumerate_interval(s12, m12, caps);
    r.expect("element count", 3, l.size(), "M12 < Alt(12) < Sym(12) and nothing else");
    r.expect("orders", std::string("95040,239500800,479001600"), orders_string(l), "the chain");
    BigInt phi = euler_totient(l);
    r.expect("euler totient", 2520, phi, "5040 - 2520 + 0");
    long gen_count = coset_generation_count(s12, m12, caps.max_index);
    r.expect("generating coset count", to_decimal(phi), std::to_string(gen_count),
             "Hall's formula equals the literal coset sweep");
    r.expect_true("a generating coset exists", phi > 0, "distributive interval");
    r.expect_true("distributive", l.is_distributive(), "chains are distributive");
    r.rep.lattice_dumps.push_back(lattice_to_json(l));
    return r.finish("m12-chain");
}

CaseReport case_fact2(const Caps& caps) {
    Recorder r;
    RegularPartition p24 = RegularPartition::canonical(2, 4);
    GroupHandle stab_alt = partition_stabilizer(p24, Ambient::Alt);
    r.expect("Alt stabilizer order", 192, stab_alt.order(), "half of 2^4 * 4!");
    IntervalLattice l = enumerate_interval(GroupHandle::alternating(8), stab_alt, caps);
    r.expect_true("not maximal in Alt(8)",
                  !is_maximal_subgroup(GroupHandle::alternating(8), stab_alt, caps),
                  "a strictly intermediate subgroup exists");
    bool has1344 = false;
    for (int i = 0; i < l.size(); ++i)
        has1344 |= l.element(i).order == 1344;
    r.expect_true("intermediate subgroup of order 1344", has1344, "affine overgroup");
    GroupHandle stab_sym = partition_stabilizer(p24, Ambient::Sym);
    r.expect("Sym stabilizer order", 384, stab_sym.order(), "2^4 * 4!");
    r.expect_true("maximal in Sym(8)",
                  is_maximal_subgroup(GroupHandle::symmetric(8), stab_sym, caps),
                  "imprimitive stabilizers are maximal in Sym");
    r.rep.lattice_dumps.push_back(lattice_to_json(l));
    return r.finish("fact2-exception");
}

CaseReport case_alt6(const Caps& caps) {
    Recorder r;
    std::vector<Perm> d4gens = {Perm::parse("(1 2 3 4)(5 6)", 6), Perm::parse("(1 3)(5 6)", 6)};
    GroupHandle d4 = GroupHandle::build(d4gens);
    r.expect("Sylow-2 order", 8, d4.order(), "dihedral of order 8");
    IntervalLattice l = enumerate_interval(GroupHandle::alternating(6), d4, caps);
    r.expect("element count", 4, l.size(), "rank-2 interval");
    auto cert = boolean_certificate(l);
    r.expect_true("boolean", cert.boolean, "must certify");
    if (cert.boolean)
        r.expect("rank", 2, cert.cert->rank, "two coatoms");
    r.expect("coatom orders", std::string("24,24"), coatom_orders_string(l),
             "two symmetric groups of degree 4");
    r.audit_boolean(l, "alt6-rank2");
    return r.finish("alt6-rank2");
}

CaseReport case_octal(const Caps& caps) {
    Recorder r;
    GroupHandle h = registry_group("psl27_deg8");
    IntervalLattice la = enumerate_interval(GroupHandle::alternating(8), h, caps);
    r.expect("Alt(8) interval size", 4, la.size(), "Boolean of rank 2");
    auto certa = boolean_certificate(la);
    r.expect_true("Alt(8) interval boolean", certa.boolean, "must certify");
    if (certa.boolean)
        r.expect("Alt(8) rank", 2, certa.cert->rank, "two affine coatoms");
    r.expect("Alt(8) coatom orders", std::string("1344,1344"), coatom_orders_string(la),
             "two affine overgroups");
    r.audit_boolean(la, "octal-alt8");

    IntervalLattice ls = enumerate_interval(GroupHandle::symmetric(8), h, caps);
    r.expect("Sym(8) interval size", 6, ls.size(), "six overgroups");
    auto certs = boolean_certificate(ls);
    r.expect_true("Sym(8) interval not boolean", !certs.boolean, "6 is not a power of 2");
    std::set<int> lens = ls.maximal_chain_lengths();
    r.expect_true("Sym(8) chain lengths not uniform rank+1",
                  lens.size() > 1 || *lens.begin() != 4, "chain-length obstruction");
    r.rep.lattice_dumps.push_back(lattice_to_json(ls));
    return r.finish("octal");
}

CaseReport case_borel(const Caps& caps) {
    Recorder r;
    GroupHandle g = registry_group("psl27");
    GroupHandle b = borel_of_psl32();
    r.expect("Borel order", 8, b.order(), "Sylow-2 of PSL(3,2)");
    IntervalLattice l = enumerate_interval(g, b, caps);
    r.expect("element count", 4, l.size(), "two parabolic coatoms");
    auto cert = boolean_certificate(l);
    r.expect_true("boolean", cert.boolean, "parabolic interval");
    if (cert.boolean) {
        r.expect("rank", 2, cert.cert->rank, "two maximal parabolics");
        std::vector<std::string> ci;
        for (int m : cert.cert->coatoms)
            ci.push_back(to_decimal(l.index_in_top(m)));
        std::sort(ci.begin(), ci.end());
        r.expect("coatom indices", std::string("7,7"), ci[0] + "," + ci[1],
                 "point and line stabilizers");
    }
    BigInt ph = dual_euler_totient(l);
    r.expect("phi_hat", 8, ph, "equals the 2-part of 168");
    BigInt two_part = 1;
    BigInt go = g.order();
    while (go % 2 == 0) {
        two_part *= 2;
        go /= 2;
    }
    r.expect("2-part of |G|", to_decimal(two_part), to_decimal(ph), "p-contribution identity");
    r.audit_boolean(l, "borel-psl32");
    return r.finish("borel-psl32");
}

CaseReport case_ore_family(const Caps& caps, int ell) {
    Recorder r;
    if (ell < 1 || ell > 3)
        throw UnknownCase("ore-family supports ell in {1,2,3}");
    auto [g, h] = ore_family_pair(ell);
    IntervalLattice l = enumerate_interval(g, h, caps);
    r.expect("element count", 1 << (ell + 1), l.size(), "Boolean of rank ell+1");
    auto cert = boolean_certificate(l);
    r.expect_true("boolean", cert.boolean, "product of rank-1 intervals");
    if (cert.boolean)
        r.expect("rank", ell + 1, cert.cert->rank, "one factor per direct factor");
    r.expect("phi_hat", big_pow(2, ell), dual_euler_totient(l),
             "the optimal witness value 2^ell");
    r.audit_boolean(l, "ore-family-" + std::to_string(ell));
    return r.finish("ore-family");
}

} // namespace

GroupHandle borel_of_psl32() {
    GroupHandle g = registry_group("psl27");
    std::vector<Perm> two_power;
    for_each_element(g, 200, [&](const Perm& e) {
        if (e.is_identity())
            return;
        // keep elements of 2-power order
        Perm p = e;
        int ord = 1;
        while (!p.is_identity()) {
            p = p.then(e);
            ++ord;
        }
        if ((ord & (ord - 1)) == 0)
            two_power.push_back(e);
    });
    std::sort(two_power.begin(), two_power.end());
    for (size_t i = 0; i < two_power.size(); ++i)
        for (size_t j = i + 1; j < two_power.size(); ++j) {
            GroupHandle k = GroupHandle::build({two_power[i], two_power[j]});
            if (k.order() == 8)
                return k;
        }
    throw GroupError("no Sylow-2 subgroup found");
}

std::pair<GroupHandle, GroupHandle> ore_family_pair(int ell) {
    int n = 2 + 3 * ell;
    std::vector<Perm> ggens, hgens;
    auto transposition = [&](int a, int b) {
        std::vector<int> img(static_cast<size_t>(n));
        std::iota(img.begin(), img.end(), 0);
        std::swap(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]);
        return Perm(std::move(img));
    };
    auto three_cycle = [&](int a) {
        std::vector<int> img(static_cast<size_t>(n));
        std::iota(img.begin(), img.end(), 0);
        img[static_cast<size_t>(a)] = a + 1;
        img[static_cast<size_t>(a + 1)] = a + 2;
        img[static_cast<size_t>(a + 2)] = a;
        return Perm(std::move(img));
    };
    ggens.push_back(transposition(0, 1));
    for (int i = 0; i < ell; ++i) {
        int base = 2 + 3 * i;
        ggens.push_back(transposition(base, base + 1));
        ggens.push_back(three_cycle(base));
        hgens.push_back(transposition(base + 1, base + 2));
    }
    return {GroupHandle::build(ggens), GroupHandle::build(hgens)};
}

CaseReport run_case(const std::string& name, const Caps& caps, int ell) {
    if (name == "fig1-alt8")
        return case_fig1(caps);
    if (name == "m12-chain")
        return case_m12_chain(caps);
    if (name == "fact2-exception")
        return case_fact2(caps);
    if (name == "alt6-rank2")
        return case_alt6(caps);
    if (name == "octal")
        return case_octal(caps);
    if (name == "borel-psl32")
        return case_borel(caps);
    if (name == "ore-family")
        return case_ore_family(caps, ell);
    throw UnknownCase("unknown case '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> list_cases() {
    return {
        {"fig1-alt8", "the largest Boolean interval in Alt(8), above a group of order 64"},
        {"m12-chain", "O_Sym(12)(M12) is the 3-chain M12 < Alt(12) < Sym(12)"},
        {"fact2-exception", "the (2,4)-partition stabilizer: non-maximal in Alt(8), maximal in Sym(8)"},
        {"alt6-rank2", "O_Alt(6)(D4) is Boolean of rank 2 with two Sym(4) coatoms"},
        {"octal", "degree-8 PSL(2,7): Boolean rank 2 over Alt(8), a 6-element non-Boolean lattice over Sym(8)"},
        {"borel-psl32", "the Borel subgroup of PSL(3,2): phi_hat = 8, the 2-part of 168"},
        {"ore-family", "phi_hat(S1 x S2^ell, S2 x S3^ell) = 2^ell (use --ell 1..3)"},
    };
}

} // namespace boolattice
