#include "unitons/bundles.hpp"

#include "unitons/errors.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace unitons {

namespace {

// Internal signal: a random draw produced degenerate data; the caller retries
// with a fresh seed.
struct Degenerate : std::runtime_error {
    explicit Degenerate(const std::string& what) : std::runtime_error(what) {}
};

EchelonSpan echelon_of(const MeromorphicBundle& e) {
    EchelonSpan sp(e.n);
    for (int c = 0; c < e.frame.cols; ++c)
        sp.insert(e.frame.column(c));
    return sp;
}

PolyVec frame_times(const PolyMatrix& frame, const PolyVec& f) {
    PolyVec out(static_cast<std::size_t>(frame.rows));
    for (int r = 0; r < frame.rows; ++r) {
        Poly acc;
        for (int c = 0; c < frame.cols; ++c)
            acc += frame.at(r, c) * f[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

} // namespace

MeromorphicBundle MeromorphicBundle::from_sections(int n, const std::vector<PolyVec>& sections) {
    EchelonSpan sp(n);
    std::vector<PolyVec> kept;
    for (const auto& s : sections) {
        if (static_cast<int>(s.size()) != n)
            throw std::invalid_argument("bundle section has wrong ambient rank");
        if (sp.insert(s))
            kept.push_back(strip_content(s));
    }
    return {n, PolyMatrix::from_columns(n, kept)};
}

bool bundle_contains(const MeromorphicBundle& outer, const MeromorphicBundle& inner) {
    if (outer.n != inner.n)
        throw std::invalid_argument("bundle_contains: ambient rank mismatch");
    EchelonSpan sp = echelon_of(outer);
    for (int c = 0; c < inner.frame.cols; ++c)
        if (!sp.contains(inner.frame.column(c)))
            return false;
    return true;
}

bool bundle_equal(const MeromorphicBundle& a, const MeromorphicBundle& b) {
    return a.rank() == b.rank() && bundle_contains(a, b) && bundle_contains(b, a);
}

MeromorphicBundle constant_part(const MeromorphicBundle& e) {
    // v constant lies in the generic fibre span iff every left-kernel row of
    // the frame kills it; splitting the rows into z-coefficients makes that a
    // constant-coefficient kernel problem.
    PolyMatrix left = kernel_ff(e.frame.transpose()); // columns w with w^T frame = 0
    std::vector<PolyVec> rows;
    for (int c = 0; c < left.cols; ++c) {
        PolyVec w = left.column(c);
        int maxdeg = 0;
        for (const auto& p : w)
            maxdeg = std::max(maxdeg, p.degree());
        for (int t = 0; t <= maxdeg; ++t) {
            PolyVec row(static_cast<std::size_t>(e.n));
            for (int r = 0; r < e.n; ++r)
                row[static_cast<std::size_t>(r)] = Poly(w[static_cast<std::size_t>(r)].coeff(t));
            if (!vec_is_zero(row))
                rows.push_back(std::move(row));
        }
    }
    PolyMatrix constraints(static_cast<int>(rows.size()), e.n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < e.n; ++c)
            constraints.at(static_cast<int>(r), c) = rows[r][static_cast<std::size_t>(c)];
    PolyMatrix basis = kernel_ff(constraints);
    return {e.n, basis};
}

bool bundle_is_constant(const MeromorphicBundle& e) {
    return constant_part(e).rank() == e.rank();
}

MeromorphicBundle osculate_up(const MeromorphicBundle& e, int i) {
    if (i < 0)
        throw std::invalid_argument("osculate_up: negative order");
    MeromorphicBundle cur = e;
    for (int step = 0; step < i; ++step) {
        std::vector<PolyVec> sections;
        for (int c = 0; c < cur.frame.cols; ++c) {
            PolyVec col = cur.frame.column(c);
            sections.push_back(col);
            sections.push_back(ddz(col));
        }
        MeromorphicBundle next = MeromorphicBundle::from_sections(e.n, sections);
        if (next.rank() == cur.rank())
            return next; // stabilized
        cur = std::move(next);
    }
    return cur;
}

MeromorphicBundle osculate_down(const MeromorphicBundle& e, int i) {
    if (i < 0)
        throw std::invalid_argument("osculate_down: negative order");
    MeromorphicBundle cur = e;
    for (int step = 0; step < i; ++step) {
        if (cur.is_zero())
            return cur;
        PolyMatrix dframe(cur.n, cur.frame.cols);
        for (int c = 0; c < cur.frame.cols; ++c)
            dframe.set_column(c, ddz(cur.frame.column(c)));
        // E f has derivative in span(E) iff E' f does; solve E' f + E g = 0.
        PolyMatrix system = PolyMatrix::hcat(dframe, cur.frame);
        PolyMatrix ker = kernel_ff(system);
        std::vector<PolyVec> sections;
        for (int c = 0; c < ker.cols; ++c) {
            PolyVec f(static_cast<std::size_t>(cur.frame.cols));
            for (int r = 0; r < cur.frame.cols; ++r)
                f[static_cast<std::size_t>(r)] = ker.at(r, c);
            sections.push_back(frame_times(cur.frame, f));
        }
        MeromorphicBundle next = MeromorphicBundle::from_sections(e.n, sections);
        if (next.rank() == cur.rank())
            return next; // stabilized
        cur = std::move(next);
    }
    return cur;
}

MeromorphicBundle osc(const MeromorphicBundle& e, int i) {
    return i >= 0 ? osculate_up(e, i) : osculate_down(e, -i);
}

OsculationStats osculation_stats(const MeromorphicBundle& e) {
    OsculationStats st;
    st.g = osculate_up(e, 1).rank() - e.rank();
    if (st.g == 0) {
        st.q = 0;
        st.r = e.rank();
    } else {
        st.q = e.rank() / st.g;
        st.r = e.rank() % st.g;
    }
    return st;
}

bool is_superhorizontal(const HoloFlag& flag) {
    for (std::size_t t = 0; t + 1 < flag.members.size(); ++t) {
        const auto& cur = flag.members[t];
        const auto& next = flag.members[t + 1];
        EchelonSpan sp = echelon_of(next);
        for (int c = 0; c < cur.frame.cols; ++c) {
            if (!sp.contains(cur.frame.column(c)))
                return false; // nesting
            if (!sp.contains(ddz(cur.frame.column(c))))
                return false;
        }
    }
    return true;
}

namespace {

int default_degree(int n, int requested) { return requested >= 0 ? requested : std::max(1, n - 1); }

// Draws sections from the sources in priority order until the echelon span of
// `f` reaches `target` columns. Every accepted section increases the rank.
void grow_to_rank(MeromorphicBundle& f, int target,
                  const std::vector<const MeromorphicBundle*>& sources, int degree,
                  std::mt19937_64& rng) {
    EchelonSpan sp = echelon_of(f);
    if (sp.rank() > target)
        throw Degenerate("seed span exceeds target rank");
    std::vector<PolyVec> cols;
    for (int c = 0; c < f.frame.cols; ++c)
        cols.push_back(f.frame.column(c));
    for (const MeromorphicBundle* src : sources) {
        if (sp.rank() == target)
            break;
        if (src->is_zero())
            continue;
        int misses = 0;
        while (sp.rank() < target && misses < 12) {
            PolyVec coeffs = random_poly_vector(src->frame.cols, degree, rng());
            PolyVec section = strip_content(frame_times(src->frame, coeffs));
            if (sp.insert(section)) {
                cols.push_back(section);
                misses = 0;
            } else {
                ++misses;
            }
        }
    }
    if (sp.rank() != target)
        throw Degenerate("could not reach rank " + std::to_string(target));
    f.frame = PolyMatrix::from_columns(f.n, cols);
}

InterpolationResult interpolate_attempt(const MeromorphicBundle& t, const MeromorphicBundle& e,
                                        int i, int j, int d, int g, int degree,
                                        std::mt19937_64& rng) {
    // k0 = max{k : d - k g > rank T^(j-k)}; the predicate is down-closed.
    int k0 = 0;
    while (d - (k0 + 1) * g > osc(t, j - (k0 + 1)).rank())
        ++k0;

    const MeromorphicBundle ei = osc(e, -i);
    HoloFlag internal;
    internal.n = t.n;
    internal.lo = -k0;

    MeromorphicBundle f = osc(t, j - k0);
    for (int level = 0; level <= k0; ++level) {
        if (level > 0) {
            MeromorphicBundle lifted = osculate_up(f, 1);
            MeromorphicBundle tpart = osc(t, j - k0 + level);
            std::vector<PolyVec> seed;
            for (int c = 0; c < lifted.frame.cols; ++c)
                seed.push_back(lifted.frame.column(c));
            for (int c = 0; c < tpart.frame.cols; ++c)
                seed.push_back(tpart.frame.column(c));
            f = MeromorphicBundle::from_sections(t.n, seed);
        }
        int target = d - (k0 - level) * g;
        // Fresh sections come T-first: deeper osculations of T are legal
        // sections of E^(-i-k0+level) whenever the containment holds.
        const MeromorphicBundle esrc = osc(e, -(i + k0 - level));
        std::vector<MeromorphicBundle> owned;
        for (int m = j - k0 + level + 1; m <= j; ++m) {
            MeromorphicBundle cand = osc(t, m);
            if (!cand.is_zero() && bundle_contains(esrc, cand))
                owned.push_back(std::move(cand));
        }
        owned.push_back(esrc);
        std::vector<const MeromorphicBundle*> sources;
        for (const auto& b : owned)
            sources.push_back(&b);
        grow_to_rank(f, target, sources, degree, rng);
        internal.members.push_back(f);
    }

    // postconditions are checked, not trusted
    const MeromorphicBundle tj = osc(t, j);
    if (f.rank() != d)
        throw Degenerate("final rank off");
    if (!bundle_contains(f, tj))
        throw Degenerate("T^(j) not inside F");
    if (!bundle_contains(ei, f))
        throw Degenerate("F not inside E^(-i)");
    if (osculation_stats(f).g > g)
        throw Degenerate("g_F exceeds bound");
    if (!is_superhorizontal(internal))
        throw Degenerate("internal flag not super-horizontal");
    return {std::move(f), std::move(internal)};
}

constexpr int kMaxAttempts = 10;

} // namespace

HoloFlag build_subflag(const MeromorphicBundle& e, int g, std::uint64_t seed) {
    OsculationStats st = osculation_stats(e);
    if (g < st.g)
        throw std::invalid_argument("build_subflag: g must be >= g_E");
    if (g < 1) {
        if (st.g == 0)
            return {e.n, 0, {e}}; // constant bundle, trivial one-member flag
        throw std::invalid_argument("build_subflag: g must be positive");
    }
    const int q = e.rank() / g;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt));
        try {
            HoloFlag flag;
            flag.n = e.n;
            flag.lo = -q;
            flag.members.assign(static_cast<std::size_t>(q) + 1, MeromorphicBundle::zero(e.n));
            flag.members.back() = e;
            MeromorphicBundle cur = e;
            for (int step = 1; step <= q; ++step) {
                MeromorphicBundle down = osculate_down(cur, 1);
                int target = e.rank() - step * g;
                MeromorphicBundle sub = MeromorphicBundle::zero(e.n);
                std::vector<const MeromorphicBundle*> sources{&down};
                grow_to_rank(sub, target, sources, default_degree(e.n, -1), rng);
                flag.members[static_cast<std::size_t>(q - step)] = sub;
                cur = std::move(sub);
            }
            if (!is_superhorizontal(flag))
                throw Degenerate("subflag not super-horizontal");
            return flag;
        } catch (const Degenerate&) {
            continue;
        }
    }
    throw RetryExhausted("build_subflag: degenerate draws persisted");
}

InterpolationResult interpolate_flag(const MeromorphicBundle& t, const MeromorphicBundle& e,
                                     int i, int j, int d, int g, std::uint64_t seed,
                                     int section_degree) {
    if (t.n != e.n)
        throw std::invalid_argument("interpolate_flag: ambient rank mismatch");
    if (i < 0 || j < 0)
        throw std::invalid_argument("interpolate_flag: i, j must be >= 0");
    if (g < 1 || g < osculation_stats(t).g || g < osculation_stats(e).g)
        throw std::invalid_argument("interpolate_flag: need g >= max(g_T, g_E), g >= 1");
    if (!bundle_contains(e, t))
        throw std::invalid_argument("interpolate_flag: T must sit inside E");
    const MeromorphicBundle tj = osc(t, j);
    const MeromorphicBundle ei = osc(e, -i);
    if (!bundle_contains(ei, tj))
        throw std::invalid_argument("interpolate_flag: T^(j) must sit inside E^(-i)");
    if (!(tj.rank() < d && d < ei.rank()))
        throw std::invalid_argument("interpolate_flag: need rank T^(j) < d < rank E^(-i)");

    const int degree = default_degree(t.n, section_degree);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt));
        try {
            return interpolate_attempt(t, e, i, j, d, g, degree, rng);
        } catch (const Degenerate&) {
            continue;
        }
    }
    throw RetryExhausted("interpolate_flag: degenerate draws persisted");
}

namespace {

struct FlagBuilder {
    const FlagType& ft;
    int degree;
    std::mt19937_64 rng;
    std::vector<MeromorphicBundle> members; // index i + s + 1, i in [-s-1, r]
    int current_step = 0;

    MeromorphicBundle& at(int i) { return members.at(static_cast<std::size_t>(i + ft.s + 1)); }

    MeromorphicBundle build_member(int lo, int m, int hi, int g) {
        const MeromorphicBundle& t = at(lo);
        const MeromorphicBundle& e = at(hi);
        const int j = m - lo;
        const int i = hi - m;
        const int d = ft.at(m);
        MeromorphicBundle tj = osc(t, j);
        if (tj.rank() == d)
            return tj;
        MeromorphicBundle ei = osc(e, -i);
        if (ei.rank() == d)
            return ei;
        if (g == 0) {
            // zero jump: the member must be constant
            MeromorphicBundle cpart = constant_part(ei);
            if (constant_part(tj).rank() != tj.rank())
                throw Degenerate("constant member over non-constant T-part");
            MeromorphicBundle f = tj;
            std::vector<const MeromorphicBundle*> sources{&cpart};
            grow_to_rank(f, d, sources, 0, rng);
            return f;
        }
        return interpolate_attempt(t, e, i, j, d, g, degree, rng).f;
    }

    void solve(int lo, int hi) {
        if (hi - lo < 2)
            return;
        auto argmin = [&](int from, int to) {
            int best = from;
            for (int i = from; i <= to; ++i)
                if (ft.jump(i) <= ft.jump(best))
                    best = i;
            return best;
        };
        int m = argmin(lo, hi - 1);
        if (m == lo)
            m = argmin(lo + 1, hi - 1); // the anchor jump names no member
        ++current_step;
        at(m) = build_member(lo, m, hi, ft.jump(m));
        solve(lo, m);
        solve(m, hi);
    }
};

} // namespace

HoloFlag build_canonical_flag(const LatticeElement& xi, std::uint64_t seed, int section_degree) {
    if (is_zero(xi))
        throw std::invalid_argument("build_canonical_flag: zero element");
    const FlagType ft = flag_type(xi);
    const int degree = default_degree(xi.n, section_degree);
    int failing_step = 0;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        FlagBuilder builder{ft, degree,
                            std::mt19937_64(seed + 0x9e3779b97f4a7c15ULL *
                                                       static_cast<std::uint64_t>(attempt)),
                            {}, 0};
        builder.members.assign(static_cast<std::size_t>(ft.s + ft.r + 2),
                               MeromorphicBundle::zero(xi.n));
        builder.at(ft.r) = MeromorphicBundle::full(xi.n);
        try {
            builder.solve(-ft.s - 1, ft.r);
            HoloFlag flag;
            flag.n = xi.n;
            flag.lo = -ft.s;
            for (int i = -ft.s; i <= ft.r - 1; ++i)
                flag.members.push_back(builder.at(i));
            for (int i = -ft.s; i <= ft.r - 1; ++i)
                if (flag.at(i).rank() != ft.at(i))
                    throw Degenerate("rank vector mismatch");
            if (!is_superhorizontal(flag))
                throw Degenerate("flag not super-horizontal");
            return flag;
        } catch (const Degenerate&) {
            failing_step = builder.current_step;
            continue;
        } catch (const RetryExhausted&) {
            failing_step = builder.current_step;
            continue;
        }
    }
    throw RetryExhausted("build_canonical_flag: degenerate seeds at step " +
                         std::to_string(failing_step));
}

} // namespace unitons
