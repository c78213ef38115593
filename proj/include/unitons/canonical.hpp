#pragma once

#include "unitons/lattice.hpp"

#include <vector>

namespace unitons {

enum class CanonicalMode { plain, symmetric };

/// Canonical elements for one n, with their orbits under the coefficient
/// symmetries (chi1 for even n, chi1 and chi2 for odd n). Orbits are sorted
/// by representative; the representative is the lexicographically least
/// member and comes first inside each orbit.
struct CanonicalSet {
    int n = 0;
    CanonicalMode mode = CanonicalMode::plain;
    std::vector<LatticeElement> elements;
    std::vector<std::vector<LatticeElement>> orbits;
};

/// All maximal elements of the order restricted to support exactly I, i.e.
/// all componentwise-minimal lattice elements with n_i in {1..m_i} on I.
/// Output is lexicographically sorted.
std::vector<LatticeElement> enumerate_I_canonical(int n, const std::vector<int>& I);

/// Union of enumerate_I_canonical over every non-empty support.
std::vector<LatticeElement> enumerate_all_canonical(int n);

/// All non-trivial maximal elements of the parity-refined order: nonzero,
/// in the lattice, not all-even, with no smaller lattice element of the same
/// parity vector below them. Search box n_i in {0..2m_i-1}.
std::vector<LatticeElement> enumerate_symmetric_canonical(int n);

/// Independent brute-force maximality check by scanning the full down-set of
/// xi (same support for plain mode, same parity vector for symmetric mode).
bool maximality_oracle(const LatticeElement& xi, CanonicalMode mode);

/// Orbit of xi under the symmetry group, sorted lexicographically.
std::vector<LatticeElement> symmetry_orbit(const LatticeElement& xi);

CanonicalSet make_canonical_set(int n, CanonicalMode mode,
                                std::vector<LatticeElement> elements);
CanonicalSet quotient_by_symmetry(CanonicalSet set);

std::vector<int> support(const LatticeElement& xi);

} // namespace unitons
