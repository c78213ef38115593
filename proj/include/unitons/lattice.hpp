#pragma once

#include "unitons/exact.hpp"

#include <map>
#include <string>
#include <vector>

namespace unitons {

/// Element xi = sum n_i H_i of the integer span of the fundamental coweights
/// H_1..H_{n-1} of su(n). Membership in the integer lattice of SU(n) is a
/// separate predicate (in_lattice), not an invariant of the type.
struct LatticeElement {
    int n = 0;                // matrix size, n >= 2
    std::vector<long> coeffs; // (n_1, ..., n_{n-1})

    bool operator==(const LatticeElement& o) const { return n == o.n && coeffs == o.coeffs; }
    bool operator<(const LatticeElement& o) const; // lexicographic, n first

    std::string csv() const; // "1,2,1"
    static LatticeElement parse_csv(int n, const std::string& text);
};

/// Expansion of xi in the basis E_1..E_n of the diagonal torus; entries are
/// exact rationals summing to zero, and any two entries differ by an integer.
struct EExpansion {
    int n = 0;
    std::vector<Rational> e;

    bool all_integer() const;
};

/// Integer exponents of the torus homomorphism gamma_xi = diag(lambda^{c_j});
/// weakly decreasing with zero sum.
struct LoopExponents {
    int n = 0;
    std::vector<long> c;
};

/// Graded dimension vector of gamma_xi H+: d_i for i in [-s, r], with
/// 0 < d_{-s} <= ... <= d_{r-1} < d_r = n. The trivial type (s = r = 0,
/// d = {n}) stands for H+ itself.
struct FlagType {
    int n = 0;
    int s = 0;
    int r = 0;
    std::vector<int> d; // d[i + s] = d_i

    int at(int i) const { return d.at(static_cast<std::size_t>(i + s)); }
    int jump(int i) const; // h_i = d_{i+1} - d_i, defined for i in [-s-1, r-1]
    bool is_trivial() const { return s == 0 && r == 0; }

    bool operator==(const FlagType& o) const {
        return n == o.n && s == o.s && r == o.r && d == o.d;
    }
};

struct EigenspaceDims {
    std::map<int, int> dim; // i -> dim g_i^xi (only nonzero entries)
    int r = 0;              // r(xi) = max of the support
};

/// Inner symmetric space N_xi; k == 0 encodes the one-point case (central
/// gamma_xi(-1)), otherwise Gr(k, n) with 1 <= k <= n/2.
struct SymmetricSpaceTarget {
    int k = 0;
    int n = 0;

    bool is_point() const { return k == 0; }
    std::string str() const;
    bool operator==(const SymmetricSpaceTarget& o) const { return k == o.k && n == o.n; }
};

// -- operations ---------------------------------------------------------------

void validate(const LatticeElement& xi); // shape only
bool is_dominant(const LatticeElement& xi);
bool is_zero(const LatticeElement& xi);

/// Expansion in the E-basis: H_i = E_1 + ... + E_i - (i/n)(E_1 + ... + E_n).
EExpansion h_to_e(const LatticeElement& xi);

/// True iff sum_i i*n_i == 0 (mod n); agrees with integrality of h_to_e.
bool in_lattice(const LatticeElement& xi);

/// Least m with m*H_i in the lattice: n / gcd(i, n).
long min_multiple(int n, int i);

/// Partial order on dominant elements: xi <= xi2 iff xi2's coefficients are
/// componentwise <= xi's (larger in the order means smaller coefficients).
bool leq(const LatticeElement& xi, const LatticeElement& xi2);

/// Same order recomputed at root level: alpha(xi2) <= max(alpha(xi), 0) for
/// every root alpha = L_a - L_b. Independent oracle for leq.
bool leq_root_oracle(const LatticeElement& xi, const LatticeElement& xi2);

/// Order for the symmetric-space setting: leq plus xi - xi2 exponentiating
/// into the center, i.e. componentwise parity congruence. With
/// strict_identity set, the literal exp(pi(xi-xi2)) = e reading is used
/// instead (all E-coordinates of the difference even).
bool symmetric_leq(const LatticeElement& xi, const LatticeElement& xi2,
                   bool strict_identity = false);

LatticeElement chi1(const LatticeElement& xi);
LatticeElement chi2(const LatticeElement& xi); // n odd only

LoopExponents loop_exponents(const LatticeElement& xi);
FlagType flag_type(const LatticeElement& xi); // xi nonzero dominant lattice
EigenspaceDims eigenspace_dims(const LatticeElement& xi);
SymmetricSpaceTarget grassmannian_target(const LatticeElement& xi);

/// Determinant condition on a graded type: sum_{i<0} d_i == sum_{i>=0} (n - d_i).
bool su_balance(const FlagType& ft);

/// All coefficients even <=> gamma_xi(-1) central <=> N_xi is a point.
bool symmetric_trivial(const LatticeElement& xi);

} // namespace unitons
