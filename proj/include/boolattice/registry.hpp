#pragma once

#include <string>
#include <vector>

#include "boolattice/group.hpp"

namespace boolattice {

/// Named group registry backing the CLI and the reproduction cases.
///
/// Accepted names: "sym:n", "alt:n", "trivial:n", "agl:d:p", and the shipped
/// generator sets "m12", "m11", "psl27" (degree 7), "psl27_deg8" (the
/// transitive degree-8 action), "psl2_11" (degree 12). Shipped sets carry an
/// expected order which is checked at load. The environment variable
/// BOOLATTICE_DATA_DIR points to a directory of <name>.json files overriding
/// the built-in data (':' in names maps to '_' in file names).
GroupHandle registry_group(const std::string& name);

/// Group from a JSON spec {"degree": n, "generators": [...], "order": "..."?}
/// where generators use cycle notation (1-indexed) or image lists (0-indexed).
GroupHandle group_from_json_text(const std::string& json_text);
GroupHandle group_from_json_file(const std::string& path);

/// Affine group AGL_d(p) acting on the p^d vectors over GF(p); point x
/// encodes the vector whose k-th coordinate is the k-th base-p digit of x.
GroupHandle build_agl(int d, long p);

BigInt agl_order(int d, long p);

std::vector<std::string> registry_names();

} // namespace boolattice
