#pragma once

#include <string>

#include "boolattice/bounds.hpp"

namespace boolattice {

/// Lattice dump: elements (id, order, generators, provenance), leq pairs,
/// hasse edges, certificate, totients, and optionally a bound report.
std::string lattice_to_json(const IntervalLattice& l, const BoundReport* bounds = nullptr);

/// Reload a dump. Group handles are not reconstructed; orders and the
/// containment relation are, which determines totients and certificates.
IntervalLattice lattice_from_json(const std::string& text);

/// Hasse diagram in DOT, orders as node labels.
std::string lattice_to_dot(const IntervalLattice& l);

/// Chain-spec JSON:
///   {"type":"partition-chain","n":8,"ladder":[4,2],"ambient":"sym"}
///   {"type":"product-chain","a":5,"bs":[2,2]}
/// The emitted form also carries the chain's partitions (lists of blocks),
/// respectively its product structures (lists of partitions).
std::string partition_chain_to_json(const PartitionChainSpec& spec);
std::string product_chain_to_json(const ProductChainSpec& spec);
PartitionChainSpec partition_chain_from_json(const std::string& text);
ProductChainSpec product_chain_from_json(const std::string& text);

} // namespace boolattice
