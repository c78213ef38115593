#include "unitons/errors.hpp"
#include "unitons/extsol.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace unitons {

namespace {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

// Numeric fibre of the model at z0 inside the window [-s, k]: columns are the
// evaluated generators plus the lambda^k block of the tail. The inner product
// is block-orthogonal, so plain Euclidean geometry on the tall vectors is the
// H-geometry.
struct Fibre {
    int n = 0;
    int blocks = 0; // powers -s .. k
    Mat w;          // basis-ish columns of W(z0) within the window
    Mat lw;         // columns of lambda W(z0) within the window
};

Fibre evaluate_fibre(const GradedModel& w, const ExactScalar& z0) {
    const int n = w.n;
    const int blocks = w.s + w.k + 1;
    const int rows = n * blocks;
    Mat gens(rows, static_cast<int>(w.gens.size()));
    gens.setZero();
    for (int c = 0; c < gens.cols(); ++c) {
        for (const auto& [p, vec] : w.gens[static_cast<std::size_t>(c)].terms) {
            int base = (p + w.s) * n;
            for (int r = 0; r < n; ++r)
                gens(base + r, c) += vec[static_cast<std::size_t>(r)].eval(z0).to_complex();
        }
    }
    Fibre f;
    f.n = n;
    f.blocks = blocks;
    f.w = Mat(rows, gens.cols() + n);
    f.w.setZero();
    f.w.leftCols(gens.cols()) = gens;
    for (int j = 0; j < n; ++j)
        f.w((w.k + w.s) * n + j, gens.cols() + j) = 1.0; // lambda^k tail block
    // lambda W: generators shifted one block up (no truncation: powers <= k-1
    // move to <= k); the shifted tail leaves the window entirely.
    f.lw = Mat(rows, gens.cols());
    f.lw.setZero();
    f.lw.bottomRows(rows - n) = gens.topRows(rows - n);
    return f;
}

Mat orthonormal_basis(const Mat& m, double tol) {
    if (m.cols() == 0)
        return Mat(m.rows(), 0);
    Eigen::ColPivHouseholderQR<Mat> qr(m);
    qr.setThreshold(tol);
    int r = static_cast<int>(qr.rank());
    Mat q = qr.householderQ() * Mat::Identity(m.rows(), r);
    return q;
}

} // namespace

PhiResult evaluate_phi(const GradedModel& w, const ExactScalar& z0, double tol,
                       bool check_involution) {
    if (tol <= 0)
        throw std::invalid_argument("evaluate_phi: tol must be positive");
    // expected generic dimension of the windowed fibre
    EchelonSpan symbolic(w.n * (w.s + w.k));
    for (const auto& g : w.gens) {
        LaurentVec t = g.truncated(-w.s, w.k - 1);
        PolyVec flat(static_cast<std::size_t>(w.n) * static_cast<std::size_t>(w.s + w.k));
        for (const auto& [p, vec] : t.terms)
            for (int r = 0; r < w.n; ++r)
                flat[static_cast<std::size_t>((p + w.s) * w.n + r)] = vec[static_cast<std::size_t>(r)];
        symbolic.insert(flat);
    }
    const int expected = symbolic.rank() + w.n;

    Fibre f = evaluate_fibre(w, z0);
    const double rank_tol = 1e-9;
    Mat qw = orthonormal_basis(f.w, rank_tol);
    Mat qlw = orthonormal_basis(f.lw, rank_tol);
    if (qw.cols() != expected)
        throw EvaluationRankDrop("evaluate_phi: fibre rank " + std::to_string(qw.cols()) +
                                 " below generic " + std::to_string(expected) +
                                 " at this point; choose another point");
    if (qw.cols() - qlw.cols() != f.n)
        throw EvaluationRankDrop("evaluate_phi: lambda W fibre degenerate at this point");

    // W(z0) minus lambda W(z0): kernel of Q_lw^* Q_w pulled back through Q_w
    Mat overlap = qlw.adjoint() * qw;
    Eigen::JacobiSVD<Mat> svd(overlap, Eigen::ComputeFullV);
    Mat basis = qw * svd.matrixV().rightCols(f.n); // orthonormal, spans W - lambda W

    auto eval_at = [&](Cplx lambda) {
        // lambda on the unit circle: lambda^{-1} = conj(lambda)
        Cplx lowest(1, 0);
        for (int t = 0; t < w.s; ++t)
            lowest *= std::conj(lambda);
        Mat u(f.n, f.n);
        for (int c = 0; c < f.n; ++c) {
            Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(f.n);
            Cplx lp = lowest;
            for (int b = 0; b < f.blocks; ++b) {
                acc += lp * basis.block(b * f.n, c, f.n, 1);
                lp *= lambda;
            }
            u.col(c) = acc;
        }
        return u;
    };

    Mat u1 = eval_at(Cplx(1, 0));
    Mat uminus = eval_at(Cplx(-1, 0));
    Mat u1_inv = u1.inverse();
    Mat phi = uminus * u1_inv;

    PhiResult out;
    out.n = f.n;
    out.phi.resize(static_cast<std::size_t>(f.n) * static_cast<std::size_t>(f.n));
    for (int r = 0; r < f.n; ++r)
        for (int c = 0; c < f.n; ++c)
            out.phi[static_cast<std::size_t>(r * f.n + c)] = phi(r, c);
    out.unitarity_residual = (phi.adjoint() * phi - Mat::Identity(f.n, f.n)).norm();
    out.det_residual = std::abs(phi.determinant() - Cplx(1, 0));
    out.loop_at_one_residual = (u1 * u1_inv - Mat::Identity(f.n, f.n)).norm();
    if (check_involution)
        out.involution_residual = (phi * phi - Mat::Identity(f.n, f.n)).norm();

    if (out.unitarity_residual >= tol)
        throw ToleranceFailure("evaluate_phi: unitarity residual " +
                               std::to_string(out.unitarity_residual));
    if (out.det_residual >= tol)
        throw ToleranceFailure("evaluate_phi: determinant residual " +
                               std::to_string(out.det_residual));
    if (check_involution && out.involution_residual >= tol)
        throw ToleranceFailure("evaluate_phi: involution residual " +
                               std::to_string(out.involution_residual));
    return out;
}

int plus_one_eigenspace_dim(const PhiResult& phi, double tol) {
    const int n = phi.n;
    Mat m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            m(r, c) = phi.phi[static_cast<std::size_t>(r * n + c)];
    Mat herm = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Mat> eig(herm);
    int count = 0;
    for (int i = 0; i < n; ++i)
        if (eig.eigenvalues()(i) > 1.0 - tol)
            ++count;
    return count;
}

} // namespace unitons
