#pragma once

#include "unitons/poly.hpp"

#include <cstdint>
#include <vector>

namespace unitons {

using PolyVec = std::vector<Poly>;

/// Rectangular matrix of polynomials; linear algebra over the field of
/// rational functions is done by fraction-free cross-multiplication, so no
/// rational function ever materializes.
struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Poly> e; // row-major

    PolyMatrix() = default;
    PolyMatrix(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c) {}

    Poly& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
    const Poly& at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }

    PolyVec column(int c) const;
    void set_column(int c, const PolyVec& v);

    static PolyMatrix from_columns(int rows, const std::vector<PolyVec>& cols);
    static PolyMatrix identity(int n);
    PolyMatrix transpose() const;
    /// [A | B] side by side.
    static PolyMatrix hcat(const PolyMatrix& a, const PolyMatrix& b);

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
    }
};

// -- vector helpers -----------------------------------------------------------

PolyVec ddz(const PolyVec& v);
bool vec_is_zero(const PolyVec& v);
PolyVec vec_add(const PolyVec& a, const PolyVec& b);
PolyVec vec_scale(const Poly& s, const PolyVec& v);

/// Divides out the polynomial gcd of the entries and rescales so the first
/// nonzero entry is monic. Span is unchanged; output is deterministic.
PolyVec strip_content(PolyVec v);

/// Deterministic small-integer random vector; coefficients in [-9, 9].
PolyVec random_poly_vector(int dim, int max_degree, std::uint64_t seed);

// -- echelon span -------------------------------------------------------------

/// Incrementally built column echelon of a subspace of rational-function
/// column vectors, kept with polynomial entries (content-stripped after every
/// reduction). Supports rank, membership with an exact residual, and the
/// pivot-row profile used for graded dimension counts.
class EchelonSpan {
public:
    explicit EchelonSpan(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(cols_.size()); }

    /// Reduces v against the echelon; returns the (content-stripped) residual,
    /// which is empty-equivalent (all zero) iff v lies in the span.
    PolyVec reduce(PolyVec v) const;
    bool contains(const PolyVec& v) const { return vec_is_zero(reduce(v)); }

    /// Inserts v if independent of the current span; true iff the rank grew.
    bool insert(PolyVec v);

    /// Pivot rows, strictly increasing.
    std::vector<int> pivot_rows() const;
    /// Echelon columns (pivot row, column vector), sorted by pivot row.
    const std::vector<std::pair<int, PolyVec>>& columns() const { return cols_; }

private:
    int dim_;
    std::vector<std::pair<int, PolyVec>> cols_;
};

// -- module operations --------------------------------------------------------

/// Generic rank over the field of rational functions.
int rank_ff(const PolyMatrix& m);

/// Basis of the right kernel over the function field, cleared to polynomial
/// columns with content removed. M * kernel_ff(M) == 0 identically.
PolyMatrix kernel_ff(const PolyMatrix& m);

/// True iff v is a rational-function combination of the columns of m.
bool in_span(const PolyVec& v, const PolyMatrix& m);

/// Indices of a maximal independent subset of columns, scanned left to right.
std::vector<int> pivot_columns(const PolyMatrix& m);

} // namespace unitons
