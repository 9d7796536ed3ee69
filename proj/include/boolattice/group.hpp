#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boolattice/bigint.hpp"
#include "boolattice/perm.hpp"

namespace boolattice {

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegreeMismatch : GroupError {
    using GroupError::GroupError;
};
struct NotASubgroup : GroupError {
    using GroupError::GroupError;
};
struct IndexCapExceeded : GroupError {
    using GroupError::GroupError;
};
struct DegreeCapExceeded : GroupError {
    using GroupError::GroupError;
};
struct CertificationError : GroupError {
    using GroupError::GroupError;
};

namespace detail {
struct StabChain;
}

/// Immutable generated permutation group with a base and strong generating
/// set. Orders are exact arbitrary-precision integers.
///
/// Two construction paths produce a complete chain:
///  - build(): deterministic Schreier-Sims, self-verifying;
///  - build_with_order(): randomized completion against a proven upper
///    bound on the order; the chain is complete exactly when the product
///    of the orbit sizes reaches that bound.
class GroupHandle {
public:
    static GroupHandle build(std::vector<Perm> generators);
    static GroupHandle build(std::vector<Perm> generators, const std::vector<int>& base_hint);

    /// `order_bound` must be a proven upper bound for the generated group
    /// (e.g. the ambient degree's factorial, or the order of a group known
    /// to contain every generator). Throws CertificationError if the chain
    /// cannot be completed to that order, and GroupError if the bound is
    /// exceeded (which disproves the claimed containment).
    static GroupHandle build_with_order(std::vector<Perm> generators, const BigInt& order_bound);

    static GroupHandle symmetric(int n);
    static GroupHandle alternating(int n);
    static GroupHandle trivial(int n);

    int degree() const;
    const BigInt& order() const;
    const std::vector<Perm>& generators() const;

    bool contains(const Perm& p) const;
    bool is_subgroup_of(const GroupHandle& super) const; // every generator contained
    bool same_group_as(const GroupHandle& other) const;  // equal order + containment

    bool is_transitive() const;
    std::vector<std::vector<int>> orbits() const;

    /// Stabilizer of a point (the group fixing pt), via a chain rebased at pt.
    GroupHandle point_stabilizer(int pt) const;

    /// All points fixed by every generator.
    std::vector<int> fixed_points() const;

    bool all_generators_even() const;

    const detail::StabChain& chain() const { return *chain_; }

private:
    std::shared_ptr<const detail::StabChain> chain_;
};

/// Kernel of the sign map: the whole group if every element is even,
/// otherwise the index-2 subgroup of even elements.
GroupHandle even_part(const GroupHandle& g);

/// Group generated by the union of the generator sets.
GroupHandle join(const GroupHandle& a, const GroupHandle& b);
/// Join certified against a proven upper bound on the result's order.
GroupHandle join_with_order(const GroupHandle& a, const GroupHandle& b, const BigInt& order_bound);

/// Exactly |G:H| right-coset representatives, breadth-first over generator
/// words with lexicographic tie-breaking; each representative is the
/// lexicographically least element of its coset. Throws IndexCapExceeded
/// or NotASubgroup.
std::vector<Perm> coset_representatives(const GroupHandle& g, const GroupHandle& h, long cap);

/// Exact intersection by backtrack search over stabilizer chains on the
/// common base 0..n-1. Capped by degree (default 16): DegreeCapExceeded.
GroupHandle intersect(const GroupHandle& a, const GroupHandle& b, int degree_cap = 16);

/// Smallest normal subgroup of g containing seed.
GroupHandle normal_closure(const GroupHandle& g, const std::vector<Perm>& seed);

/// Calls fn for every element; requires order <= max_order (guard against
/// accidental enumeration of huge groups).
void for_each_element(const GroupHandle& g, long max_order, const std::function<void(const Perm&)>& fn);

/// Minimal block of imprimitivity containing {a, b} for a transitive group.
std::vector<int> minimal_block(const GroupHandle& g, int a, int b);

/// All non-trivial systems of imprimitivity of a transitive group, each as
/// a sorted partition of the domain.
std::vector<std::vector<std::vector<int>>> all_block_systems(const GroupHandle& g);

/// True iff the orbit of the set under the group is a partition-like family
/// (pairwise equal-or-disjoint images), i.e. the set is a block.
bool is_block(const GroupHandle& g, const std::vector<int>& block);

} // namespace boolattice
