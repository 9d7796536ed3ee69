#include "boolattice/totients.hpp"

namespace boolattice {

TotientReport totients(const IntervalLattice& l) {
    TotientReport r;
    r.phi = 0;
    r.phi_hat = 0;
    r.chi = 0;
    auto mu_bot = l.moebius_from_bottom();
    auto mu_top = l.moebius_to_top();
    for (int k = 0; k < l.size(); ++k) {
        TotientReport::Row row;
        row.element = k;
        row.mu_bottom = mu_bot[static_cast<size_t>(k)];
        row.mu_top = mu_top[static_cast<size_t>(k)];
        row.index_in_top = l.index_in_top(k);
        row.index_over_bottom = l.index_over_bottom(k);
        r.phi += row.mu_top * row.index_over_bottom;
        r.phi_hat += row.mu_bottom * row.index_in_top;
        r.chi -= row.mu_top * row.index_in_top;
        r.rows.push_back(std::move(row));
    }
    return r;
}

BigInt euler_totient(const IntervalLattice& l) {
    BigInt s = 0;
    auto mu_top = l.moebius_to_top();
    for (int k = 0; k < l.size(); ++k)
        s += mu_top[static_cast<size_t>(k)] * l.index_over_bottom(k);
    return s;
}

BigInt dual_euler_totient(const IntervalLattice& l) {
    BigInt s = 0;
    auto mu_bot = l.moebius_from_bottom();
    for (int k = 0; k < l.size(); ++k)
        s += mu_bot[static_cast<size_t>(k)] * l.index_in_top(k);
    return s;
}

BigInt reduced_euler_characteristic(const IntervalLattice& l) {
    BigInt s = 0;
    auto mu_top = l.moebius_to_top();
    for (int k = 0; k < l.size(); ++k)
        s += mu_top[static_cast<size_t>(k)] * l.index_in_top(k);
    return -s;
}

long coset_generation_count(const GroupHandle& g, const GroupHandle& h, long cap) {
    auto reps = coset_representatives(g, h, cap);
    long count = 0;
    for (const Perm& rep : reps) {
        std::vector<Perm> gens;
        for (const Perm& hg : h.generators())
            gens.push_back(hg.then(rep));
        gens.push_back(rep);
        GroupHandle k = GroupHandle::build(std::move(gens));
        if (k.order() == g.order())
            ++count;
    }
    return count;
}

long coset_generation_count_literal(const GroupHandle& g, const GroupHandle& h, long cap,
                                    long max_h_order) {
    auto reps = coset_representatives(g, h, cap);
    long count = 0;
    for (const Perm& rep : reps) {
        std::vector<Perm> coset;
        for_each_element(h, max_h_order,
                         [&](const Perm& e) { coset.push_back(e.then(rep)); });
        GroupHandle k = GroupHandle::build(std::move(coset));
        if (k.order() == g.order())
            ++count;
    }
    return count;
}

} // namespace boolattice
