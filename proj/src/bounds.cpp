#include "boolattice/bounds.hpp"

#include <algorithm>

namespace boolattice {

namespace {

void fail(const std::string& what) {
    throw GroupError("lemma audit failed: " + what);
}

bool normal_in(const GroupHandle& h, const GroupHandle& m) {
    for (const Perm& g : m.generators())
        for (const Perm& x : h.generators())
            if (!h.contains(x.conjugated_by(g)))
                return false;
    return true;
}

bool groups_attached(const IntervalLattice& l) {
    for (int i = 0; i < l.size(); ++i)
        if (!l.element(i).group)
            return false;
    return true;
}

} // namespace

bool is_group_complemented(const IntervalLattice& l, const BooleanCertificate& cert) {
    const BigInt gh = l.element(l.top()).order * l.element(l.bottom()).order;
    for (int k = 0; k < l.size(); ++k) {
        int c = cert.complement[static_cast<size_t>(k)];
        if (l.element(k).order * l.element(c).order != gh)
            return false;
    }
    return true;
}

BigInt group_complemented_value(const IntervalLattice& l, const BooleanCertificate& cert) {
    if (!is_group_complemented(l, cert))
        throw GroupError("group_complemented_value: lattice is not group-complemented");
    BigInt prod = 1;
    for (int m : cert.coatoms)
        prod *= l.index_in_top(m) - 1;
    return prod;
}

BigRational atom_bound_value(const std::vector<BigInt>& atom_lower_bounds) {
    BigRational prod = 1, sum = 0;
    for (const BigInt& a : atom_lower_bounds) {
        if (a < 1)
            throw GroupError("atom_bound_value: bounds must be >= 1");
        prod *= BigRational(a);
        sum += BigRational(1) / BigRational(a);
    }
    return (BigRational(1) - sum) * prod;
}

namespace {

struct AuditCtx {
    const IntervalLattice& l;
    const BooleanCertificate& cert;
    TotientReport tot;
    BoundReport rep;
    bool attached;

    AuditCtx(const IntervalLattice& l_, const BooleanCertificate& c_) : l(l_), cert(c_) {
        tot = totients(l);
        attached = groups_attached(l);
    }

    void product_formula() {
        for (int b = 0; b < l.size(); ++b)
            for (int c = b; c < l.size(); ++c) {
                const BigInt& ob = l.element(b).order;
                const BigInt& oc = l.element(c).order;
                if (ob * oc >
                    l.element(l.join_of(b, c)).order * l.element(l.meet_of(b, c)).order)
                    fail("product formula |B||C| <= |BvC||B^C|");
            }
        rep.audited.push_back("product-formula");
    }

    void ind2sub() {
        for (int b = 0; b < l.size(); ++b)
            for (int c = 0; c < l.size(); ++c) {
                if (l.leq(b, c))
                    continue;
                int a = l.join_of(b, c);
                if (exact_div(l.element(a).order, l.element(c).order) != 2)
                    continue;
                int m = l.meet_of(b, c);
                if (exact_div(l.element(b).order, l.element(m).order) != 2)
                    fail("|A:C|=2 with B not below C forces |B:B^C|=2");
            }
        rep.audited.push_back("index2-subgroup");
    }

    void rank2_family() {
        if (cert.rank != 2)
            return;
        int m1 = cert.coatoms[0], m2 = cert.coatoms[1];
        BigInt i1 = l.index_over_bottom(m1);
        BigInt i2 = l.index_over_bottom(m2);
        if (i1 == 2 && i2 == 2)
            fail("rank-2 coatom indices (2,2) are impossible");
        rep.audited.push_back("no-(2,2)");
        if ((i1 == 2) != (l.index_in_top(m2) == 2) || (i2 == 2) != (l.index_in_top(m1) == 2))
            fail("rank-2: |M1:H|=2 iff |G:M2|=2");
        rep.audited.push_back("two-iff-two");
        if (attached) {
            const GroupHandle& h = *l.element(l.bottom()).group;
            if (normal_in(h, *l.element(m1).group) && normal_in(h, *l.element(m2).group)) {
                if (i1 == i2)
                    fail("rank-2 with H normal in both coatoms forces distinct indices");
                rep.audited.push_back("normal-distinct-indices");
            }
        }
    }

    void top2() {
        for (int k = 0; k < l.size(); ++k)
            for (int t = 0; t < l.size(); ++t) {
                if (!l.covers(k, t))
                    continue;
                if (exact_div(l.element(t).order, l.element(k).order) != 2)
                    continue;
                bool found = false;
                for (size_t ai = 0; ai < cert.atoms.size(); ++ai) {
                    int a = cert.atoms[ai];
                    if (l.join_of(k, a) == t &&
                        l.index_in_top(cert.complement[static_cast<size_t>(a)]) == 2) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    fail("an index-2 cover must come from an atom with |G:A^c|=2");
            }
        rep.audited.push_back("index2-cover-atom");
    }

    void decre() {
        for (int a : cert.atoms) {
            int ac = cert.complement[static_cast<size_t>(a)];
            bool top_index2 = l.index_in_top(ac) == 2;
            for (int k1 = 0; k1 < l.size(); ++k1) {
                if (!l.leq(k1, ac))
                    continue;
                BigInt r1 = exact_div(l.element(l.join_of(k1, a)).order, l.element(k1).order);
                if (top_index2 && r1 != 2)
                    fail("|G:A^c|=2 forces |K v A : K| = 2 below A^c");
                for (int k2 = 0; k2 < l.size(); ++k2) {
                    if (k1 == k2 || !l.leq(k1, k2) || !l.leq(k2, ac))
                        continue;
                    BigInt r2 = exact_div(l.element(l.join_of(k2, a)).order, l.element(k2).order);
                    if (r1 > r2)
                        fail("|K v A : K| must be non-decreasing along O_{A^c}(H)");
                }
            }
        }
        rep.audited.push_back("join-index-monotone");
    }

    void split_family() {
        for (size_t i = 0; i < cert.atoms.size(); ++i) {
            int a = cert.atoms[i];
            int m = cert.complement[static_cast<size_t>(a)];
            BigInt ai = l.index_over_bottom(a);
            bool hyp = true;
            for (int k = 0; k < l.size(); ++k) {
                if (!l.leq(k, m))
                    continue;
                if (exact_div(l.element(l.join_of(k, a)).order, l.element(k).order) != ai) {
                    hyp = false;
                    break;
                }
            }
            BigInt sub = dual_euler_totient(l.sublattice_below(m));
            if (hyp) {
                if (tot.phi_hat != (ai - 1) * sub)
                    fail("split identity phi_hat = (|A:H|-1) phi_hat(H,M)");
                rep.audited.push_back("split");
            }
            if (ai == 2) {
                if (tot.phi_hat != sub)
                    fail("split identity phi_hat = phi_hat(H,M) when |A:H| = 2");
                rep.audited.push_back("split-index2");
            }
        }
    }

    void moebius_signs() {
        for (int k = 0; k < l.size(); ++k) {
            // rank of K = number of atoms below it
            int rk = 0;
            for (int a : cert.atoms)
                if (l.leq(a, k))
                    ++rk;
            BigInt expect = (rk % 2 == 0) ? 1 : -1;
            if (l.moebius(l.bottom(), k) != expect)
                fail("Boolean Moebius values must be (-1)^rank");
        }
        BigInt pa = tot.phi_hat < 0 ? -tot.phi_hat : tot.phi_hat;
        BigInt ca = tot.chi < 0 ? -tot.chi : tot.chi;
        if (pa != ca)
            fail("|chi| must equal |phi_hat| on Boolean intervals");
        rep.audited.push_back("moebius-signs");
    }

    void complemented_formula() {
        rep.group_complemented = is_group_complemented(l, cert);
        if (rep.group_complemented) {
            if (tot.phi_hat != group_complemented_value(l, cert))
                fail("group-complemented phi_hat = prod(|G:M_i|-1)");
            rep.audited.push_back("group-complemented-product");
        }
    }

    void atom_power_bounds() {
        std::vector<BigInt> sorted = rep.atom_indices;
        std::sort(sorted.begin(), sorted.end());
        bool pow2 = true;
        BigInt need = 2;
        for (const BigInt& a : sorted) {
            if (a < need) {
                pow2 = false;
                break;
            }
            need *= 2;
        }
        BigInt threshold = big_pow(2, cert.rank - 1);
        if (pow2 && tot.phi_hat < threshold)
            fail("atom indices >= 2^i force phi_hat >= 2^(rank-1)");
        rep.atom_bound = atom_bound_value(rep.atom_indices);
        if (BigRational(tot.phi_hat) < rep.atom_bound)
            fail("phi_hat >= (1 - sum 1/a_i) prod a_i");
        rep.audited.push_back("atom-index-bounds");
    }

    void intransitive_shape() {
        if (!attached || l.size() < 2)
            return;
        const GroupHandle& h = *l.element(l.bottom()).group;
        bool all_coatoms_transitive = true;
        for (int m : cert.coatoms)
            if (!l.element(m).group->is_transitive())
                all_coatoms_transitive = false;
        if (!all_coatoms_transitive || h.is_transitive())
            return;
        auto orbs = h.orbits();
        if (orbs.size() != 2 || orbs[0].size() != orbs[1].size())
            fail("intransitive bottom under transitive coatoms must have two half orbits");
        // the stabilizer of the half-split partition is then an element of
        // the interval: it is the largest element whose generators preserve it
        int n = h.degree();
        RegularPartition half(n, {orbs[0], orbs[1]});
        int best = -1;
        for (int k = 0; k < l.size(); ++k) {
            const GroupHandle& grp = *l.element(k).group;
            bool stab_all = true;
            for (const Perm& gen : grp.generators())
                stab_all &= stabilizes(gen, half);
            if (stab_all && (best < 0 || l.leq(best, k)))
                best = k;
        }
        if (best < 0)
            fail("half-orbit partition stabilizer missing from the lattice");
        rep.audited.push_back("half-orbit-stabilizer");
    }

    void ore_positive() {
        if (l.size() <= 64 && l.is_distributive()) {
            if (tot.phi <= 0)
                fail("distributive interval must have a generating coset");
            rep.audited.push_back("ore-positivity");
        }
    }
};

BoundReport make_report(const IntervalLattice& l, const BooleanCertificate& cert,
                        const std::string& id) {
    BoundReport rep;
    rep.lattice_id = id;
    rep.rank = cert.rank;
    for (int a : cert.atoms)
        rep.atom_indices.push_back(l.index_over_bottom(a));
    for (int m : cert.coatoms)
        rep.coatom_indices.push_back(l.index_in_top(m));
    return rep;
}

} // namespace

BoundReport structural_lemma_audit(const IntervalLattice& l, const std::string& lattice_id) {
    auto check = boolean_certificate(l);
    if (!check.boolean)
        throw LatticeNotBoolean("structural_lemma_audit: " + check.reason);
    const BooleanCertificate& cert = *check.cert;
    AuditCtx ctx(l, cert);
    ctx.rep = make_report(l, cert, lattice_id);
    ctx.product_formula();
    ctx.ind2sub();
    ctx.rank2_family();
    ctx.top2();
    ctx.decre();
    ctx.split_family();
    ctx.moebius_signs();
    ctx.complemented_formula();
    ctx.atom_power_bounds();
    ctx.intransitive_shape();
    ctx.ore_positive();
    ctx.rep.phi = ctx.tot.phi;
    ctx.rep.phi_hat = ctx.tot.phi_hat;
    ctx.rep.chi = ctx.tot.chi;
    ctx.rep.verdict = ctx.tot.phi_hat >= big_pow(2, cert.rank - 1);
    if (!ctx.rep.verdict)
        fail("phi_hat >= 2^(rank-1)");
    return ctx.rep;
}

BoundReport verify_theorem_bound(const IntervalLattice& l, const std::string& lattice_id) {
    auto check = boolean_certificate(l);
    if (!check.boolean)
        throw LatticeNotBoolean("verify_theorem_bound: " + check.reason);
    const BooleanCertificate& cert = *check.cert;
    BoundReport rep = make_report(l, cert, lattice_id);
    TotientReport tot = totients(l);
    rep.phi = tot.phi;
    rep.phi_hat = tot.phi_hat;
    rep.chi = tot.chi;
    rep.atom_bound = atom_bound_value(rep.atom_indices);
    BigInt threshold = big_pow(2, cert.rank - 1);
    rep.verdict = tot.phi_hat >= threshold;

    // low-rank case split replayed on the index data
    if (cert.rank == 1) {
        if (tot.phi_hat != l.index_in_top(l.bottom()) - 1)
            throw GroupError("rank-1 phi_hat must be |G:H| - 1");
        rep.audited.push_back("rank1-direct");
    } else if (cert.rank == 2) {
        BigInt m1 = l.index_over_bottom(cert.coatoms[0]);
        BigInt m2 = l.index_over_bottom(cert.coatoms[1]);
        if (m1 == 2 && m2 == 2)
            throw GroupError("rank-2 case split: impossible coatom indices (2,2)");
        rep.audited.push_back(std::max(m1, m2) >= 3 ? "rank2-one-index-at-least-3"
                                                    : "rank2");
    } else if (cert.rank == 3) {
        bool has2 = false;
        for (const BigInt& a : rep.atom_indices)
            has2 |= (a == 2);
        rep.audited.push_back(has2 ? "rank3-split-off-index2-atom" : "rank3-all-atoms-at-least-3");
    }
    if (!rep.verdict)
        throw GroupError("dual totient bound phi_hat >= 2^(rank-1) failed");
    return rep;
}

} // namespace boolattice
