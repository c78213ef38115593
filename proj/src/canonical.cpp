#include "unitons/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace unitons {

namespace {

// Odometer scan over the box [lo_1, hi_1] x ... x [lo_k, hi_k] with a fixed
// per-slot stride. Calls fn on every point.
template <class Fn>
void scan_box(const std::vector<long>& lo, const std::vector<long>& hi, long stride, Fn&& fn) {
    std::vector<long> cur = lo;
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i])
            return;
    while (true) {
        fn(cur);
        std::size_t slot = 0;
        while (slot < cur.size()) {
            cur[slot] += stride;
            if (cur[slot] <= hi[slot])
                break;
            cur[slot] = lo[slot];
            ++slot;
        }
        if (slot == cur.size())
            return;
    }
}

long sum_of(const std::vector<long>& v) {
    long s = 0;
    for (long x : v)
        s += x;
    return s;
}

bool componentwise_leq(const std::vector<long>& a, const std::vector<long>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

// Keeps only the componentwise-minimal vectors. Candidates are processed in
// ascending coefficient-sum order so every dominator of an element is seen
// before the element itself; comparisons run against the (small) antichain.
std::vector<std::vector<long>> minimal_elements(std::vector<std::vector<long>> cands) {
    std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
        long sa = sum_of(a), sb = sum_of(b);
        if (sa != sb)
            return sa < sb;
        return a < b;
    });
    std::vector<std::vector<long>> minimal;
    for (auto& c : cands) {
        bool dominated = false;
        for (const auto& m : minimal) {
            if (componentwise_leq(m, c)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            minimal.push_back(std::move(c));
    }
    return minimal;
}

std::vector<LatticeElement> to_elements(int n, std::vector<std::vector<long>> vecs) {
    std::vector<LatticeElement> out;
    out.reserve(vecs.size());
    for (auto& v : vecs)
        out.push_back(LatticeElement{n, std::move(v)});
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<int> support(const LatticeElement& xi) {
    std::vector<int> I;
    for (int i = 1; i < xi.n; ++i)
        if (xi.coeffs[static_cast<std::size_t>(i - 1)] != 0)
            I.push_back(i);
    return I;
}

// Box completeness: if n_i >= m_i + 1 for some i in I, then xi - m_i H_i is
// still a lattice element (m_i H_i is one), keeps support I since
// n_i - m_i >= 1, and strictly dominates xi in the order. So every maximal
// element lives in the box {1..m_i}^I.
std::vector<LatticeElement> enumerate_I_canonical(int n, const std::vector<int>& I) {
    if (I.empty())
        throw std::invalid_argument("enumerate_I_canonical: empty support");
    for (int i : I)
        if (i < 1 || i > n - 1)
            throw std::invalid_argument("enumerate_I_canonical: bad support index");

    std::vector<long> lo(I.size(), 1), hi;
    hi.reserve(I.size());
    for (int i : I)
        hi.push_back(min_multiple(n, i));

    std::vector<std::vector<long>> cands;
    scan_box(lo, hi, 1, [&](const std::vector<long>& point) {
        LatticeElement xi;
        xi.n = n;
        xi.coeffs.assign(static_cast<std::size_t>(n - 1), 0);
        for (std::size_t t = 0; t < I.size(); ++t)
            xi.coeffs[static_cast<std::size_t>(I[t] - 1)] = point[t];
        if (in_lattice(xi))
            cands.push_back(point);
    });

    std::vector<std::vector<long>> minimal = minimal_elements(std::move(cands));
    std::vector<std::vector<long>> full;
    full.reserve(minimal.size());
    for (const auto& point : minimal) {
        std::vector<long> coeffs(static_cast<std::size_t>(n - 1), 0);
        for (std::size_t t = 0; t < I.size(); ++t)
            coeffs[static_cast<std::size_t>(I[t] - 1)] = point[t];
        full.push_back(std::move(coeffs));
    }
    return to_elements(n, std::move(full));
}

std::vector<LatticeElement> enumerate_all_canonical(int n) {
    std::vector<LatticeElement> out;
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> I;
        for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1)))
                I.push_back(i);
        auto part = enumerate_I_canonical(n, I);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Box completeness: subtracting 2 m_i H_i preserves the lattice condition,
// the parity vector and dominance (n_i - 2m_i >= 0 when n_i >= 2m_i), so
// parity-minimal elements have n_i <= 2m_i - 1. Enumeration is split over
// first-coordinate slices (disjoint sub-boxes, one worker each); the reducer
// merges the per-parity-class candidate lists and keeps the minimal ones.
std::vector<LatticeElement> enumerate_symmetric_canonical(int n) {
    if (n < 2)
        throw std::invalid_argument("enumerate_symmetric_canonical: n >= 2");
    const int k = n - 1;
    std::vector<long> lo(static_cast<std::size_t>(k), 0), hi;
    hi.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
        hi.push_back(2 * min_multiple(n, i) - 1);

    double box = 1;
    for (long h : hi)
        box *= static_cast<double>(h + 1);
    unsigned workers = 1;
    if (box > 1e6) {
        workers = std::max(1u, std::min(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(hi[0] + 1)));
    }

    using ParityClasses = std::map<std::vector<int>, std::vector<std::vector<long>>>;
    std::vector<ParityClasses> partials(workers);

    auto run_slice = [&](unsigned w, ParityClasses& sink) {
        std::vector<long> slo = lo, shi = hi;
        for (long first = lo[0] + static_cast<long>(w); first <= hi[0];
             first += static_cast<long>(workers)) {
            slo[0] = shi[0] = first;
            scan_box(slo, shi, 1, [&](const std::vector<long>& point) {
                LatticeElement xi{n, point};
                if (is_zero(xi) || !in_lattice(xi))
                    return;
                std::vector<int> parity(point.size());
                for (std::size_t t = 0; t < point.size(); ++t)
                    parity[t] = static_cast<int>(point[t] % 2);
                sink[parity].push_back(point);
            });
        }
    };

    if (workers == 1) {
        run_slice(0, partials[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run_slice, w, std::ref(partials[w]));
        for (auto& t : pool)
            t.join();
    }

    ParityClasses classes;
    for (auto& part : partials)
        for (auto& [parity, vecs] : part) {
            auto& dst = classes[parity];
            dst.insert(dst.end(), std::make_move_iterator(vecs.begin()),
                       std::make_move_iterator(vecs.end()));
        }

    std::vector<std::vector<long>> result;
    for (auto& [parity, vecs] : classes) {
        bool all_even = std::all_of(parity.begin(), parity.end(), [](int p) { return p == 0; });
        if (all_even)
            continue; // trivial class: gamma_xi(-1) central, dominated by 0
        auto minimal = minimal_elements(std::move(vecs));
        result.insert(result.end(), std::make_move_iterator(minimal.begin()),
                      std::make_move_iterator(minimal.end()));
    }
    return to_elements(n, std::move(result));
}

bool maximality_oracle(const LatticeElement& xi, CanonicalMode mode) {
    validate(xi);
    if (!is_dominant(xi))
        throw std::invalid_argument("maximality_oracle: non-dominant input");
    const std::size_t k = xi.coeffs.size();
    bool found_dominator = false;
    if (mode == CanonicalMode::plain) {
        std::vector<long> lo(k), hi(k);
        for (std::size_t i = 0; i < k; ++i) {
            lo[i] = xi.coeffs[i] > 0 ? 1 : 0;
            hi[i] = xi.coeffs[i];
        }
        scan_box(lo, hi, 1, [&](const std::vector<long>& point) {
            if (found_dominator || point == xi.coeffs)
                return;
            bool same_support = true;
            for (std::size_t i = 0; i < k; ++i)
                if ((point[i] == 0) != (xi.coeffs[i] == 0))
                    same_support = false;
            if (same_support && in_lattice(LatticeElement{xi.n, point}))
                found_dominator = true;
        });
    } else {
        std::vector<long> lo(k), hi(k);
        for (std::size_t i = 0; i < k; ++i) {
            lo[i] = xi.coeffs[i] % 2;
            hi[i] = xi.coeffs[i];
        }
        scan_box(lo, hi, 2, [&](const std::vector<long>& point) {
            if (found_dominator || point == xi.coeffs)
                return;
            if (in_lattice(LatticeElement{xi.n, point}))
                found_dominator = true;
        });
        if (symmetric_trivial(xi))
            found_dominator = true; // dominated by the zero element
    }
    return !found_dominator;
}

std::vector<LatticeElement> symmetry_orbit(const LatticeElement& xi) {
    validate(xi);
    std::set<LatticeElement> seen;
    std::vector<LatticeElement> queue{xi};
    seen.insert(xi);
    while (!queue.empty()) {
        LatticeElement cur = queue.back();
        queue.pop_back();
        std::vector<LatticeElement> next{chi1(cur)};
        if (xi.n % 2 == 1)
            next.push_back(chi2(cur));
        for (auto& e : next)
            if (seen.insert(e).second)
                queue.push_back(e);
    }
    return {seen.begin(), seen.end()};
}

CanonicalSet make_canonical_set(int n, CanonicalMode mode, std::vector<LatticeElement> elements) {
    CanonicalSet set;
    set.n = n;
    set.mode = mode;
    std::sort(elements.begin(), elements.end());
    set.elements = std::move(elements);
    return set;
}

CanonicalSet quotient_by_symmetry(CanonicalSet set) {
    std::set<LatticeElement> remaining(set.elements.begin(), set.elements.end());
    set.orbits.clear();
    while (!remaining.empty()) {
        LatticeElement seed = *remaining.begin();
        std::vector<LatticeElement> orbit = symmetry_orbit(seed);
        std::vector<LatticeElement> members;
        for (const auto& e : orbit) {
            auto it = remaining.find(e);
            if (it != remaining.end()) {
                members.push_back(e);
                remaining.erase(it);
            }
        }
        std::sort(members.begin(), members.end()); // representative first
        set.orbits.push_back(std::move(members));
    }
    std::sort(set.orbits.begin(), set.orbits.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return set;
}

} // namespace unitons
