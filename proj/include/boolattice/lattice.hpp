#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "boolattice/structures.hpp"

namespace boolattice {

struct Caps {
    long max_index = 600000;
    int max_degree_backtrack = 16;
};

/// The overgroup lattice O_G(H): all subgroups between H and G, with exact
/// orders. Elements may carry live group handles ("attached") or only their
/// orders and the containment relation (when re-loaded from a dump).
class IntervalLattice {
public:
    struct Element {
        BigInt order;
        std::optional<GroupHandle> group;
    };

    IntervalLattice() = default;

    static IntervalLattice from_groups(std::vector<GroupHandle> groups, const std::string& provenance);
    static IntervalLattice from_orders(std::vector<BigInt> orders,
                                       std::vector<std::vector<bool>> leq,
                                       const std::string& provenance);

    int size() const { return static_cast<int>(elems_.size()); }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    const Element& element(int i) const { return elems_[static_cast<size_t>(i)]; }
    const std::string& provenance() const { return provenance_; }

    bool leq(int i, int j) const {
        return (up_[static_cast<size_t>(i)][static_cast<size_t>(j) / 64] >> (j % 64)) & 1ull;
    }
    bool covers(int i, int j) const; // j covers i
    std::vector<std::pair<int, int>> hasse_edges() const;

    int join_of(int i, int j) const;
    int meet_of(int i, int j) const;
    std::vector<int> atoms() const;
    std::vector<int> coatoms() const;

    BigInt index_in_top(int i) const;      // |G : K|
    BigInt index_over_bottom(int i) const; // |K : H|

    BigInt moebius(int x, int y) const;
    /// mu(bottom, k) and mu(k, top) for every k, in one pass each.
    std::vector<BigInt> moebius_from_bottom() const;
    std::vector<BigInt> moebius_to_top() const;

    /// Element counts of maximal chains from bottom to top.
    std::set<int> maximal_chain_lengths() const;

    /// Checks the partial order axioms and that every pair has a unique
    /// meet and join inside the element set; throws on violation.
    void check_lattice() const;

    bool is_distributive() const;

    /// Restriction to {K : K <= elems[i]} with the same bottom.
    IntervalLattice sublattice_below(int i) const;

private:
    std::vector<Element> elems_;
    std::vector<std::vector<std::uint64_t>> up_, down_; // up_[i]: bitset of j with i <= j
    int bottom_ = -1, top_ = -1;
    std::string provenance_;
    size_t words_ = 0;

    void build_order(const std::vector<std::vector<bool>>& leq);
    void finish();
    std::vector<int> members(const std::vector<std::uint64_t>& bits) const;
};

struct BooleanCertificate {
    int rank = 0;
    std::vector<int> atoms;         // element ids
    std::vector<int> coatoms;       // element ids; coatoms[i] is the complement of atoms[i]
    std::vector<int> complement;    // element id -> complement id
    std::vector<BigInt> atom_indices; // |A_i : H|
};

struct BooleanCheck {
    bool boolean = false;
    std::string reason; // when not boolean
    std::optional<BooleanCertificate> cert;
};

BooleanCheck boolean_certificate(const IntervalLattice& l);

/// O_G(H) by join-irreducible closure over coset representatives.
IntervalLattice enumerate_interval(const GroupHandle& g, const GroupHandle& h, const Caps& caps = {});

/// The 2^l (or 2^(l+1) with an alternating coatom appended) constructed
/// subgroups M_I of a chain spec, with joins certified by generated-group
/// order and meets by the closed-form orders (plus backtrack intersection
/// at small degree). Completeness as the full overgroup lattice is claimed
/// only by the separate enumeration cross-check.
IntervalLattice constructed_partition_interval(const PartitionChainSpec& spec, bool with_alt,
                                               const Caps& caps = {});
IntervalLattice constructed_product_interval(const ProductChainSpec& spec, const Caps& caps = {});

/// True iff O_G(M) = {M, G}.
bool is_maximal_subgroup(const GroupHandle& g, const GroupHandle& m, const Caps& caps = {});

} // namespace boolattice
