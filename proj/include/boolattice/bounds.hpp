#pragma once

#include "boolattice/totients.hpp"

namespace boolattice {

struct LatticeNotBoolean : GroupError {
    using GroupError::GroupError;
};

/// Result of the structural audit and bound verification on a Boolean
/// interval. Every audited identity is a hard check: a violation throws,
/// since it would disprove either the mathematics or the engine.
struct BoundReport {
    std::string lattice_id;
    int rank = 0;
    std::vector<BigInt> atom_indices;   // |A_i : H|
    std::vector<BigInt> coatom_indices; // |G : M_i|
    bool group_complemented = false;
    BigInt phi;
    BigInt phi_hat;
    BigInt chi;
    BigRational atom_bound;       // (1 - sum 1/a_i) * prod a_i on the actual atom indices
    std::vector<std::string> audited; // names of the checks that ran
    bool verdict = false;             // phi_hat >= 2^(rank-1)
};

/// KK^c = K^cK for every K, checked through the order identity
/// |K| * |K^c| = |G| * |H|.
bool is_group_complemented(const IntervalLattice& l, const BooleanCertificate& cert);

/// prod over coatoms of (|G:M_i| - 1); requires group-complemented.
BigInt group_complemented_value(const IntervalLattice& l, const BooleanCertificate& cert);

/// (1 - sum a_i^-1) * prod a_i as an exact rational.
BigRational atom_bound_value(const std::vector<BigInt>& atom_lower_bounds);

/// Runs every applicable structural lemma on a Boolean interval; throws on
/// the first violation. Also computes totients and the bound verdict.
BoundReport structural_lemma_audit(const IntervalLattice& l, const std::string& lattice_id = "");

/// The bound verdict phi_hat >= 2^(rank-1), with the low-rank case split
/// replayed on the index data.
BoundReport verify_theorem_bound(const IntervalLattice& l, const std::string& lattice_id = "");

} // namespace boolattice
