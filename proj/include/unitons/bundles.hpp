#pragma once

#include "unitons/lattice.hpp"
#include "unitons/polymat.hpp"

#include <cstdint>
#include <vector>

namespace unitons {

/// Holomorphic subbundle of the trivial rank-n bundle over the sphere,
/// represented by a polynomial frame of generic full column rank. The zero
/// bundle (no columns) is valid. Two frames represent the same bundle iff
/// their columns are mutually in span over the function field.
struct MeromorphicBundle {
    int n = 0;
    PolyMatrix frame; // n x rank

    int rank() const { return frame.cols; }
    bool is_zero() const { return frame.cols == 0; }

    static MeromorphicBundle zero(int n) { return {n, PolyMatrix(n, 0)}; }
    static MeromorphicBundle full(int n) { return {n, PolyMatrix::identity(n)}; }
    static MeromorphicBundle from_sections(int n, const std::vector<PolyVec>& sections);
};

/// g = rank E^(1) - rank E, and rank E = q*g + r with 0 <= r < g. A constant
/// bundle has g = 0; then q = 0 and r = rank E by convention.
struct OsculationStats {
    int g = 0;
    int q = 0;
    int r = 0;
};

/// Nested list of bundles A_{lo}, A_{lo+1}, ..., consecutive ranks weakly
/// increasing; equal consecutive members represent zero jumps.
struct HoloFlag {
    int n = 0;
    int lo = 0; // index of members.front()
    std::vector<MeromorphicBundle> members;

    int hi() const { return lo + static_cast<int>(members.size()) - 1; }
    const MeromorphicBundle& at(int i) const {
        return members.at(static_cast<std::size_t>(i - lo));
    }
};

bool bundle_contains(const MeromorphicBundle& outer, const MeromorphicBundle& inner);
bool bundle_equal(const MeromorphicBundle& a, const MeromorphicBundle& b);
bool bundle_is_constant(const MeromorphicBundle& e);

/// Largest constant subbundle: all constant vectors lying in the generic
/// fibre span, computed from the z-coefficients of the frame's left kernel.
MeromorphicBundle constant_part(const MeromorphicBundle& e);

/// E^(i): span of the frame columns and their derivatives up to order i.
MeromorphicBundle osculate_up(const MeromorphicBundle& e, int i);

/// E^(-i): sections of E whose derivatives up to order i stay in E. Computed
/// iteratively from the kernel of [E' | E] — a section E f has (E f)_z in
/// span(E) iff E' f does, so no hermitian projection is needed.
MeromorphicBundle osculate_down(const MeromorphicBundle& e, int i);

/// Signed convenience: osc(E, i) = E^(i), osc(E, -i) = E^(-i), osc(E, 0) = E.
MeromorphicBundle osc(const MeromorphicBundle& e, int i);

OsculationStats osculation_stats(const MeromorphicBundle& e);

/// Derivative of every member lands in the next member (the last member's
/// derivative may leave the flag only through the ambient bundle).
bool is_superhorizontal(const HoloFlag& flag);

/// Flag E_{-q} < ... < E_0 = E with rank E_{-i} = rank E - i*g, built by
/// repeatedly choosing random corank subbundles of down-osculations. g >= 1
/// required unless E is constant, in which case the one-member flag returns.
HoloFlag build_subflag(const MeromorphicBundle& e, int g, std::uint64_t seed);

struct InterpolationResult {
    MeromorphicBundle f;
    HoloFlag internal; // F_{-k0} < ... < F_0 = f
};

/// Interpolates a bundle F with T^(j) <= F <= E^(-i), rank F = d, g_F <= g,
/// via the bottom-up osculating construction. Sections are drawn T-first from
/// the prescribed osculating spaces; postconditions are checked, not trusted,
/// and degenerate draws retry with derived seeds (bounded).
InterpolationResult interpolate_flag(const MeromorphicBundle& t, const MeromorphicBundle& e,
                                     int i, int j, int d, int g, std::uint64_t seed,
                                     int section_degree = -1);

/// Super-horizontal flag with rank vector flag_type(xi).d, constructed by
/// locating the minimal jump, building that member, then recursing left and
/// right with interpolation between the built anchors.
HoloFlag build_canonical_flag(const LatticeElement& xi, std::uint64_t seed,
                              int section_degree = -1);

} // namespace unitons
