#pragma once

#include "unitons/canonical.hpp"

#include <string>
#include <vector>

namespace unitons {

/// One published table row: a representative element plus the cell it is
/// printed in (|I| column; symmetric tables also carry the target k).
struct GoldenRow {
    int n = 0;
    int support_size = 0;
    int k = 0; // 0 for the plain table
    std::vector<long> coeffs;
};

/// Non-trivial canonical elements for SU(4) and SU(5), up to symmetry.
const std::vector<GoldenRow>& golden_table1();

/// Non-trivial symmetric canonical elements for SU(n), n <= 5, up to symmetry.
const std::vector<GoldenRow>& golden_table2();

struct TableCellResult {
    std::string cell;    // e.g. "n=5 |I|=3" or "Gr(2,5) |I|=2"
    bool pass = false;
    std::vector<std::string> missing; // golden orbits not found
};

struct TableCheck {
    std::vector<TableCellResult> cells;
    std::vector<std::string> extra_orbits; // computed orbits not in the table
    bool pass = false;
};

/// Recomputes the table and compares orbit sets (representative choice does
/// not matter). `which` is 1 or 2.
TableCheck check_table(int which);

/// Comparison core, exposed so the negative control (a row removed) can be
/// exercised directly.
TableCheck compare_orbits(const std::vector<GoldenRow>& golden,
                          const std::vector<CanonicalSet>& computed);

} // namespace unitons
