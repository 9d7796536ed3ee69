#pragma once

#include "boolattice/lattice.hpp"

namespace boolattice {

/// Exact totient data over an interval lattice.
struct TotientReport {
    BigInt phi;     // sum over K of mu(K,G) |K:H|
    BigInt phi_hat; // sum over K of mu(H,K) |G:K|
    BigInt chi;     // -sum over K of mu(K,G) |G:K|
    struct Row {
        int element;
        BigInt mu_bottom; // mu(H,K)
        BigInt mu_top;    // mu(K,G)
        BigInt index_in_top;
        BigInt index_over_bottom;
    };
    std::vector<Row> rows;
};

TotientReport totients(const IntervalLattice& l);

BigInt euler_totient(const IntervalLattice& l);
BigInt dual_euler_totient(const IntervalLattice& l);
BigInt reduced_euler_characteristic(const IntervalLattice& l);

/// Number of cosets Hg whose elements generate G, i.e. <Hg> = <H,g> = G
/// (the subgroup generated by {h*g} together with g). Exact, by sweeping
/// the coset representatives.
long coset_generation_count(const GroupHandle& g, const GroupHandle& h, long cap);

/// Test-oracle variant: generates from the literal element set {h*g : h in H};
/// requires |H| within the element-enumeration guard.
long coset_generation_count_literal(const GroupHandle& g, const GroupHandle& h, long cap,
                                    long max_h_order = 200);

} // namespace boolattice
