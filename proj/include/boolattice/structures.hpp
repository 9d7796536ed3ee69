#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boolattice/group.hpp"

namespace boolattice {

enum class Ambient { Sym, Alt };

std::string ambient_name(Ambient a);
GroupHandle ambient_group(Ambient a, int n);

/// Partition of {0,...,n-1} into disjoint blocks. Blocks are sorted and
/// listed by minimum element; block sizes may differ (the refinement order
/// below is defined for arbitrary partitions).
struct Partition {
    int n = 0;
    std::vector<std::vector<int>> blocks;

    Partition() = default;
    Partition(int n_, std::vector<std::vector<int>> blocks_);

    bool is_regular() const; // all blocks the same size
    int block_size() const;  // requires regular
    int block_count() const { return static_cast<int>(blocks.size()); }
    bool is_trivial() const; // one block, or all singletons
    int block_of(int point) const;

    bool operator==(const Partition& o) const { return n == o.n && blocks == o.blocks; }
};

/// The paper's order: S1 <= S2 when every block of S1 is a union of blocks
/// of S2 (S2 refines S1).
bool refines(const Partition& s1, const Partition& s2);

/// (a,b)-regular partition: b blocks of size a.
struct RegularPartition : Partition {
    RegularPartition(int n_, std::vector<std::vector<int>> blocks_);
    int a() const { return block_size(); }
    int b() const { return block_count(); }

    /// Canonical partition with consecutive blocks {0..a-1},{a..2a-1},...
    static RegularPartition canonical(int a, int b);
};

/// Whether g maps every block of the partition onto a block.
bool stabilizes(const Perm& g, const Partition& p);

/// N_G(Sigma) = G cap (Sym(a) wr Sym(b)) for the given partition.
GroupHandle partition_stabilizer(const RegularPartition& p, Ambient ambient);
BigInt partition_stabilizer_sym_order(int a, int b);

/// Setwise stabilizer of a subset: G cap (Sym(Gamma) x Sym(complement)).
GroupHandle subset_stabilizer(const std::vector<int>& gamma, int n, Ambient ambient);

/// Regular (m,k)-product structure: k partitions of m^k points into m blocks
/// of size m^(k-1), with injective chamber map.
struct ProductStructure {
    int m = 0, k = 0;
    std::vector<RegularPartition> components;

    ProductStructure(int m_, int k_, std::vector<RegularPartition> comps);

    int n() const { return components.front().n; }

    /// Canonical structure from the base-m digit encoding of points.
    static ProductStructure canonical(int m, int k);

    bool operator==(const ProductStructure& o) const;
};

bool stabilizes(const Perm& g, const ProductStructure& f);

/// N_G(F) = G cap (Sym(m) wr Sym(k)) in product action.
GroupHandle product_stabilizer(const ProductStructure& f, Ambient ambient);
BigInt product_stabilizer_sym_order(int m, int k);

/// Kernel of the action of N_Sym(F) on the component partitions: the
/// coordinate-preserving base group of order (m!)^k.
GroupHandle product_stabilizer_kernel(const ProductStructure& f);

/// The paper's partial order on product structures: F <= F2 iff the index
/// set of F2 splits into |F| groups of equal size whose partitions each
/// coarsen to the matching component of F.
bool product_order_leq(const ProductStructure& f, const ProductStructure& f2);

/// Chain of regular partitions given by a divisor ladder
/// n = n_0 > n_1 > ... > n_l > 1, each dividing the previous; Sigma_j is the
/// canonical partition into n_j consecutive blocks of size n/n_j.
struct PartitionChainSpec {
    int n = 0;
    std::vector<int> ladder; // n_1 > n_2 > ... > n_l
    Ambient ambient = Ambient::Sym;

    PartitionChainSpec(int n_, std::vector<int> ladder_, Ambient ambient_);
    int rank() const { return static_cast<int>(ladder.size()); }
    RegularPartition sigma(int j) const; // 1-based
};

/// Chain of product structures: degree a^b with b = b_1*...*b_l; the j-th
/// structure groups base-a digit positions into consecutive runs of length
/// b_1*...*b_(j-1).
struct ProductChainSpec {
    long a = 0;
    std::vector<int> bs; // b_1, ..., b_l, each >= 2
    bool paper_scale = true; // a odd and >= 5 (the construction's own bounds)

    ProductChainSpec(long a_, std::vector<int> bs_);
    int rank() const { return static_cast<int>(bs.size()); }
    long b() const;
    long n() const; // a^b
    long digit_run(int j) const; // b_1*...*b_(j-1)
    ProductStructure structure(int j) const; // 1-based; requires the m >= 5 bound
    /// Component partitions of the j-th structure, without the size bound.
    std::vector<Partition> component_partitions(int j) const;
};

/// Stabilizer of the sub-chain {Sigma_i : i in I}: the iterated imprimitive
/// wreath product Sym(n/n_i1) wr Sym(n_i1/n_i2) wr ... wr Sym(n_ik)
/// (even part for Alt ambient). I is 1-based; empty I gives the ambient.
GroupHandle partition_chain_subgroup(const PartitionChainSpec& spec, const std::vector<int>& I);
BigInt partition_chain_order(const PartitionChainSpec& spec, const std::vector<int>& I);

/// Product-action analogue over the product-structure chain.
GroupHandle product_chain_subgroup(const ProductChainSpec& spec, const std::vector<int>& I);
BigInt product_chain_order(const ProductChainSpec& spec, const std::vector<int>& I);

/// Exact atom index |A_j : H| for the rank-l chain lattice, from the closed
/// forms for the two chain flavours.
BigInt partition_atom_index(const PartitionChainSpec& spec, int j);
BigInt product_atom_index(const ProductChainSpec& spec, int j);

/// AGL-bottomed tower: AGL_{d'*run}(p) wr Sym(...) wr ... in product action,
/// realizing the intersection of AGL_d(p) with the Sym-side tower M_I.
/// Requires a = p^{d'} and p^d <= 81.
GroupHandle agl_chain_subgroup(const ProductChainSpec& spec, long p, int dprime,
                               const std::vector<int>& I);
BigInt agl_chain_order(const ProductChainSpec& spec, long p, int dprime, const std::vector<int>& I);

struct UnsupportedParameters : GroupError {
    using GroupError::GroupError;
};

} // namespace boolattice
