#include "unitons/polymat.hpp"

#include <random>
#include <stdexcept>

namespace unitons {

PolyVec PolyMatrix::column(int c) const {
    PolyVec v(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        v[static_cast<std::size_t>(r)] = at(r, c);
    return v;
}

void PolyMatrix::set_column(int c, const PolyVec& v) {
    for (int r = 0; r < rows; ++r)
        at(r, c) = v[static_cast<std::size_t>(r)];
}

PolyMatrix PolyMatrix::from_columns(int rows, const std::vector<PolyVec>& cols) {
    PolyMatrix m(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols; ++c) {
        if (static_cast<int>(cols[static_cast<std::size_t>(c)].size()) != rows)
            throw std::invalid_argument("from_columns: ragged column");
        m.set_column(c, cols[static_cast<std::size_t>(c)]);
    }
    return m;
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = Poly::one();
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

PolyMatrix PolyMatrix::hcat(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows != b.rows)
        throw std::invalid_argument("hcat: row mismatch");
    PolyMatrix m(a.rows, a.cols + b.cols);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c)
            m.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols; ++c)
            m.at(r, a.cols + c) = b.at(r, c);
    }
    return m;
}

PolyVec ddz(const PolyVec& v) {
    PolyVec d(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        d[k] = v[k].derivative();
    return d;
}

bool vec_is_zero(const PolyVec& v) {
    for (const auto& p : v)
        if (!p.is_zero())
            return false;
    return true;
}

PolyVec vec_add(const PolyVec& a, const PolyVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vec_add: size mismatch");
    PolyVec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        r[k] = a[k] + b[k];
    return r;
}

PolyVec vec_scale(const Poly& s, const PolyVec& v) {
    PolyVec r(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        r[k] = s * v[k];
    return r;
}

PolyVec strip_content(PolyVec v) {
    Poly g;
    for (const auto& p : v) {
        g = poly_gcd(g, p);
        if (g.degree() == 0)
            break;
    }
    if (g.is_zero())
        return v;
    if (g.degree() > 0)
        for (auto& p : v)
            p = exact_div(p, g);
    for (const auto& p : v) {
        if (!p.is_zero()) {
            ExactScalar inv = p.leading().inverse();
            for (auto& q : v)
                q = inv * q;
            break;
        }
    }
    return v;
}

PolyVec random_poly_vector(int dim, int max_degree, std::uint64_t seed) {
    if (dim < 1 || max_degree < 0)
        throw std::invalid_argument("random_poly_vector: bad shape");
    std::mt19937_64 rng(seed);
    PolyVec v(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        std::vector<ExactScalar> coeffs(static_cast<std::size_t>(max_degree) + 1);
        for (int k = 0; k <= max_degree; ++k)
            coeffs[static_cast<std::size_t>(k)] =
                ExactScalar(static_cast<long>(rng() % 19) - 9);
        v[static_cast<std::size_t>(i)] = Poly(std::move(coeffs));
    }
    return v;
}

namespace {

int top_row(const PolyVec& v) {
    for (std::size_t r = 0; r < v.size(); ++r)
        if (!v[r].is_zero())
            return static_cast<int>(r);
    return -1;
}

} // namespace

PolyVec EchelonSpan::reduce(PolyVec v) const {
    if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("EchelonSpan: dimension mismatch");
    std::size_t ci = 0;
    while (true) {
        int t = top_row(v);
        if (t < 0)
            return v;
        while (ci < cols_.size() && cols_[ci].first < t)
            ++ci;
        if (ci == cols_.size() || cols_[ci].first != t)
            return strip_content(std::move(v));
        const PolyVec& piv = cols_[ci].second;
        const Poly pv = piv[static_cast<std::size_t>(t)];
        const Poly vt = v[static_cast<std::size_t>(t)];
        for (std::size_t r = static_cast<std::size_t>(t); r < v.size(); ++r)
            v[r] = pv * v[r] - vt * piv[r];
        v = strip_content(std::move(v));
        ++ci;
    }
}

bool EchelonSpan::insert(PolyVec v) {
    PolyVec r = reduce(std::move(v));
    int t = top_row(r);
    if (t < 0)
        return false;
    auto it = cols_.begin();
    while (it != cols_.end() && it->first < t)
        ++it;
    cols_.insert(it, {t, std::move(r)});
    return true;
}

std::vector<int> EchelonSpan::pivot_rows() const {
    std::vector<int> p;
    p.reserve(cols_.size());
    for (const auto& [row, col] : cols_)
        p.push_back(row);
    return p;
}

int rank_ff(const PolyMatrix& m) {
    EchelonSpan sp(m.rows);
    for (int c = 0; c < m.cols; ++c)
        sp.insert(m.column(c));
    return sp.rank();
}

// Right kernel via column reduction of [M-part ; identity-part]: whenever a
// column's M-part reduces to zero, its identity-part records a polynomial
// kernel combination.
PolyMatrix kernel_ff(const PolyMatrix& m) {
    std::vector<std::pair<int, PolyVec>> ech; // pivots within the M-part only
    std::vector<PolyVec> kernel;
    for (int j = 0; j < m.cols; ++j) {
        PolyVec v(static_cast<std::size_t>(m.rows + m.cols));
        for (int r = 0; r < m.rows; ++r)
            v[static_cast<std::size_t>(r)] = m.at(r, j);
        v[static_cast<std::size_t>(m.rows + j)] = Poly::one();

        auto m_top = [&](const PolyVec& w) {
            for (int r = 0; r < m.rows; ++r)
                if (!w[static_cast<std::size_t>(r)].is_zero())
                    return r;
            return -1;
        };

        std::size_t ci = 0;
        while (true) {
            int t = m_top(v);
            if (t < 0)
                break;
            while (ci < ech.size() && ech[ci].first < t)
                ++ci;
            if (ci == ech.size() || ech[ci].first != t)
                break;
            const PolyVec& piv = ech[ci].second;
            const Poly pv = piv[static_cast<std::size_t>(t)];
            const Poly vt = v[static_cast<std::size_t>(t)];
            for (std::size_t r = 0; r < v.size(); ++r)
                v[r] = pv * v[r] - vt * piv[r];
            v = strip_content(std::move(v));
            ++ci;
        }

        int t = m_top(v);
        if (t >= 0) {
            auto it = ech.begin();
            while (it != ech.end() && it->first < t)
                ++it;
            ech.insert(it, {t, std::move(v)});
        } else {
            PolyVec comb(v.begin() + m.rows, v.end());
            kernel.push_back(strip_content(std::move(comb)));
        }
    }
    return PolyMatrix::from_columns(m.cols, kernel);
}

bool in_span(const PolyVec& v, const PolyMatrix& m) {
    if (static_cast<int>(v.size()) != m.rows)
        throw std::invalid_argument("in_span: dimension mismatch");
    EchelonSpan sp(m.rows);
    for (int c = 0; c < m.cols; ++c)
        sp.insert(m.column(c));
    return sp.contains(v);
}

std::vector<int> pivot_columns(const PolyMatrix& m) {
    EchelonSpan sp(m.rows);
    std::vector<int> picked;
    for (int c = 0; c < m.cols; ++c)
        if (sp.insert(m.column(c)))
            picked.push_back(c);
    return picked;
}

} // namespace unitons
