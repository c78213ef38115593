#include "unitons/golden_tables.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace unitons {

const std::vector<GoldenRow>& golden_table1() {
    static const std::vector<GoldenRow> rows = {
        {4, 3, 0, {1, 2, 1}},
        {4, 3, 0, {3, 1, 1}},
        {4, 2, 0, {2, 1, 0}},
        {4, 2, 0, {1, 0, 1}},
        {4, 1, 0, {4, 0, 0}},
        {4, 1, 0, {0, 2, 0}},
        {5, 4, 0, {1, 1, 1, 1}},
        {5, 3, 0, {1, 1, 4, 0}},
        {5, 3, 0, {1, 3, 1, 0}},
        {5, 3, 0, {2, 1, 2, 0}},
        {5, 3, 0, {3, 2, 1, 0}},
        {5, 3, 0, {5, 1, 1, 0}},
        {5, 2, 0, {1, 2, 0, 0}},
        {5, 2, 0, {3, 1, 0, 0}},
        {5, 2, 0, {1, 0, 0, 1}},
        {5, 1, 0, {5, 0, 0, 0}},
    };
    return rows;
}

const std::vector<GoldenRow>& golden_table2() {
    static const std::vector<GoldenRow> rows = {
        {3, 2, 1, {1, 1}},
        {3, 2, 1, {4, 1}},
        {3, 1, 1, {3, 0}},
        {4, 3, 2, {3, 1, 1}},
        {4, 2, 2, {2, 1, 0}},
        {4, 2, 2, {1, 0, 1}},
        {5, 4, 1, {4, 2, 1, 1}},
        {5, 3, 1, {1, 1, 4, 0}},
        {5, 2, 1, {1, 2, 0, 0}},
        {5, 2, 1, {1, 7, 0, 0}},
        {5, 2, 1, {3, 1, 0, 0}},
        {5, 2, 1, {1, 0, 0, 6}},
        {5, 1, 1, {5, 0, 0, 0}},
        {5, 4, 2, {1, 1, 1, 1}},
        {5, 4, 2, {2, 3, 1, 1}},
        {5, 4, 2, {1, 1, 1, 6}},
        {5, 3, 2, {1, 1, 9, 0}},
        {5, 3, 2, {1, 3, 1, 0}},
        {5, 3, 2, {1, 8, 1, 0}},
        {5, 3, 2, {2, 1, 2, 0}},
        {5, 3, 2, {3, 1, 5, 0}},
        {5, 3, 2, {3, 2, 1, 0}},
        {5, 3, 2, {5, 1, 1, 0}},
        {5, 2, 2, {4, 3, 0, 0}},
        {5, 2, 2, {8, 1, 0, 0}},
        {5, 2, 2, {1, 0, 0, 1}},
    };
    return rows;
}

namespace {

std::string orbit_key(const std::vector<LatticeElement>& orbit) {
    std::string key;
    for (const auto& e : orbit)
        key += e.csv() + ";";
    return key;
}

std::string cell_name(const GoldenRow& row) {
    std::string name = row.k > 0 ? "Gr(" + std::to_string(row.k) + "," + std::to_string(row.n) +
                                       ")"
                                 : "n=" + std::to_string(row.n);
    return name + " |I|=" + std::to_string(row.support_size);
}

} // namespace

TableCheck compare_orbits(const std::vector<GoldenRow>& golden,
                          const std::vector<CanonicalSet>& computed) {
    // index computed orbits by key
    std::map<std::string, const std::vector<LatticeElement>*> orbit_by_key;
    for (const auto& set : computed)
        for (const auto& orbit : set.orbits)
            orbit_by_key[orbit_key(orbit)] = &orbit;

    std::set<std::string> matched;
    std::map<std::string, TableCellResult> cells;
    for (const auto& row : golden) {
        LatticeElement rep{row.n, row.coeffs};
        std::vector<LatticeElement> expected = symmetry_orbit(rep);
        // restrict to orbit members that are themselves canonical: the
        // computed orbit is the full symmetry closure inside the set
        std::string cell = cell_name(row);
        auto& result = cells[cell];
        result.cell = cell;
        bool found = false;
        for (const auto& member : expected) {
            auto it = orbit_by_key.end();
            for (auto jt = orbit_by_key.begin(); jt != orbit_by_key.end(); ++jt) {
                if (std::find(jt->second->begin(), jt->second->end(), member) !=
                    jt->second->end()) {
                    it = jt;
                    break;
                }
            }
            if (it != orbit_by_key.end()) {
                found = true;
                matched.insert(it->first);
                break;
            }
        }
        if (!found)
            result.missing.push_back(rep.csv());
    }

    TableCheck check;
    for (auto& [name, cell] : cells) {
        cell.pass = cell.missing.empty();
        check.cells.push_back(cell);
    }
    for (const auto& set : computed)
        for (const auto& orbit : set.orbits)
            if (!matched.count(orbit_key(orbit)))
                check.extra_orbits.push_back("n=" + std::to_string(set.n) + ": " +
                                             orbit.front().csv());
    check.pass = check.extra_orbits.empty() &&
                 std::all_of(check.cells.begin(), check.cells.end(),
                             [](const TableCellResult& c) { return c.pass; });
    return check;
}

TableCheck check_table(int which) {
    std::vector<CanonicalSet> computed;
    if (which == 1) {
        for (int n : {4, 5})
            computed.push_back(
                quotient_by_symmetry(make_canonical_set(n, CanonicalMode::plain,
                                                        enumerate_all_canonical(n))));
        return compare_orbits(golden_table1(), computed);
    }
    if (which == 2) {
        for (int n : {3, 4, 5})
            computed.push_back(
                quotient_by_symmetry(make_canonical_set(n, CanonicalMode::symmetric,
                                                        enumerate_symmetric_canonical(n))));
        return compare_orbits(golden_table2(), computed);
    }
    throw std::invalid_argument("check_table: which must be 1 or 2");
}

} // namespace unitons
