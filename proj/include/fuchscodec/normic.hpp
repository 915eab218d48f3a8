#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "fuchscodec/quaternion.hpp"

namespace fuchscodec {

/// Homogeneous quadratic form with integer coefficients in nvars variables.
/// Coefficients are stored per monomial v_i v_j with i <= j.
struct QuadraticForm {
    int nvars = 0;
    std::map<std::pair<int, int>, mpz_class> coeff;

    void add(int i, int j, const mpz_class& c);
    mpz_class eval(const std::vector<mpz_class>& vals) const;
    /// Canonical monomial order (lexicographic in the index pairs) with the
    /// variable names x1..xn, y1..yn, z1..zn, t1..tn.
    std::string str(int n) const;
};

/// Expansion of the normic equation x^2 - a y^2 - b z^2 + a b t^2 over a
/// Z-basis {theta_1 = 1, ..., theta_n} of the ring of integers:
/// N(q) = sum_k g_k(x1..tn) theta_k with g_k quadratic homogeneous over Z.
struct NormicSystem {
    int n = 1;                        // field degree (1 or 2)
    std::vector<QuadraticForm> polys; // g_1 .. g_n in 4n variables

    /// Evaluate (g_1, ..., g_n) at an integer 4n-tuple.
    std::vector<mpz_class> eval(const std::vector<mpz_class>& vals) const;
    std::string pretty() const;
};

/// Builds the system for the natural order R[1, I, J, K]. Requires the
/// algebra parameters to be integral in the basis {1, theta}.
NormicSystem normic_system(const AlgebraParams& algebra);

/// Code-rate lower bound 3n = 4n - n for a degree-n totally real base field.
int rate_lower_bound(int n);

/// [Q(zeta_p + zeta_p^-1) : Q] = (p-1)/2 for an odd prime p.
int cyclo_degree(long p);
/// Rate bound 3(p-1)/2 for cyclotomic constructions.
int cyclo_rate_bound(long p);

bool is_prime(long n);

/// Smallest prime q with q = 1 (mod p) and q = 3 (mod 4), for p = 1 (mod 4).
/// The search is capped at 10^8 and reports overflow distinctly.
long admissible_prime(long p);

}  // namespace fuchscodec
