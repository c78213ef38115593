#pragma once

#include "unitons/bundles.hpp"
#include "unitons/lattice.hpp"
#include "unitons/polymat.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace unitons {

/// Vector of Laurent polynomials in lambda whose coefficients are polynomial
/// vectors in z. Terms are kept sorted by power with zero terms dropped.
struct LaurentVec {
    int n = 0;
    std::vector<std::pair<int, PolyVec>> terms;

    static LaurentVec single(int n, int power, PolyVec v);
    void normalize();

    LaurentVec shifted(int by) const;              // lambda^by * this
    LaurentVec dz() const;                         // d/dz, lambda untouched
    LaurentVec substituted_minus_lambda() const;   // lambda -> -lambda
    LaurentVec truncated(int below, int above) const; // keep powers in [below, above]
    bool is_zero() const { return terms.empty(); }
    int min_power() const;

    friend LaurentVec operator+(const LaurentVec& a, const LaurentVec& b);
    bool operator==(const LaurentVec& o) const { return n == o.n && terms == o.terms; }
};

/// lambda-graded model W = span{generators} + lambda^k H+ with
/// lambda^k H+ <= W <= lambda^{-s} H+; generator powers lie in [-s, k-1].
struct GradedModel {
    int n = 0;
    int s = 0;
    int k = 1;
    std::vector<LaurentVec> gens;

    static GradedModel h_plus(int n); // W = H+
};

struct FrenetFrame {
    int n = 0;
    int r = 0; // lowest lambda power of the window
    int k = 1; // tail power
    std::vector<LaurentVec> gens;
};

struct VerifyOptions {
    bool check_involution = false;
};

struct CheckWitness {
    int generator = -1;
    LaurentVec residual;
};

struct CheckResult {
    bool ok = true;
    std::optional<CheckWitness> witness;
};

struct VerificationReport {
    CheckResult lambda_module;
    CheckResult pseudo_horizontal;
    CheckResult su_condition;
    std::optional<CheckResult> involution;
    bool holomorphic_structural = true; // generators polynomial in z
    FlagType graded_type;

    bool passed() const {
        return lambda_module.ok && pseudo_horizontal.ok && su_condition.ok &&
               (!involution || involution->ok);
    }
};

// -- model builders -----------------------------------------------------------

/// W = lambda^{-s}A_{-s} + ... + lambda^{r-1}A_{r-1} + lambda^r H+ from a
/// super-horizontal flag with rank vector ft.d.
GradedModel s1_invariant_model(const HoloFlag& flag, const FlagType& ft);

/// W = X + lambda X^(1) + ... + lambda^{k-r-1} X^(k-r-1) + lambda^k H+.
GradedModel frenet_generate(const FrenetFrame& x);

/// Frenet frame assembled from an adapted meromorphic frame of the flag:
/// bottom sections at lambda^{-s} with w-tails one power up, then at each
/// level the sections completing A_i^(1) to A_{i+1}. No constraint solving;
/// the result is validated by verify.
FrenetFrame assemble_frenet_frame(const HoloFlag& flag, const FlagType& ft,
                                  const std::vector<LaurentVec>& w, std::uint64_t seed);

// -- queries ------------------------------------------------------------------

/// True iff v lies in span{gens} + lambda^k H+ over the function field.
bool model_contains(const GradedModel& w, const LaurentVec& v);

/// Spaces equal (mutual containment, tails included).
bool model_equal(const GradedModel& a, const GradedModel& b);

/// Graded dimensions d_i = dim p_i(W cap lambda^i H+).
FlagType graded_type(const GradedModel& w);

/// S^1-invariant model built from A_i = p_i(W cap lambda^i H+); idempotent.
GradedModel u_xi(const GradedModel& w);

VerificationReport verify(const GradedModel& w, const VerifyOptions& options = {});

// -- numeric extraction -------------------------------------------------------

struct PhiResult {
    int n = 0;
    std::vector<std::complex<double>> phi; // row-major n x n, phi = gamma(-1)
    double unitarity_residual = 0;         // ||phi* phi - I||_F
    double det_residual = 0;               // |det phi - 1|
    double involution_residual = 0;        // ||phi^2 - I||_F (when requested)
    double loop_at_one_residual = 0;       // ||gamma(1) - I||_F
};

/// Orthonormalizes W(z0) - lambda W(z0) in the finite window with the
/// block-orthogonal inner product, anchors the loop at gamma(1) = I and
/// evaluates at lambda = -1. Throws EvaluationRankDrop if z0 is in the bad
/// set and ToleranceFailure if a guarantee misses tol.
PhiResult evaluate_phi(const GradedModel& w, const ExactScalar& z0, double tol,
                       bool check_involution = false);

/// Multiplicity of the +1 eigenvalue of an involutive unitary phi.
int plus_one_eigenspace_dim(const PhiResult& phi, double tol);

} // namespace unitons
