#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boolattice/json_io.hpp"

namespace boolattice {

/// One expectation of a named case: what was checked, against what, and the
/// outcome. `note` records where the expected value comes from.
struct CaseCheck {
    std::string what;
    std::string expected;
    std::string got;
    bool ok = false;
    std::string note;
};

struct CaseReport {
    std::string name;
    bool pass = false;
    std::vector<CaseCheck> checks;
    std::vector<std::string> lattice_dumps; // JSON per lattice the case built
};

struct UnknownCase : GroupError {
    using GroupError::GroupError;
};

/// Named reproduction cases. "ore-family" takes the rank parameter ell.
CaseReport run_case(const std::string& name, const Caps& caps = {}, int ell = 1);

std::vector<std::pair<std::string, std::string>> list_cases();

/// The Sylow-2 subgroup of the degree-7 PSL(3,2) used by the Borel case,
/// found deterministically.
GroupHandle borel_of_psl32();

/// G = Sym(2) x Sym(3)^ell and H = Sym(1) x Sym(2)^ell on 2+3*ell points.
std::pair<GroupHandle, GroupHandle> ore_family_pair(int ell);

} // namespace boolattice
