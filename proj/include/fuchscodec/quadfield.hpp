#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "fuchscodec/rational.hpp"

namespace fuchscodec {

/// Thrown when two elements over different quadratic fields are combined.
struct FieldMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

enum class EmbeddingSign { plus, minus };

/// Element u + v*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// d == 0 encodes a plain rational (v must be zero then); it combines freely
/// with elements over any d. d > 1 must be squarefree. Arithmetic between
/// two elements with distinct nonzero d throws FieldMismatch.
class QuadElement {
public:
    QuadElement() : d_(0) {}
    QuadElement(long d, Rational u, Rational v);
    static QuadElement from_rational(Rational u) { return QuadElement(0, std::move(u), Rational(0)); }
    static QuadElement integer(long n) { return from_rational(Rational(n)); }

    long d() const { return d_; }
    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    bool is_rational() const { return v_.is_zero(); }
    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

    QuadElement conj() const { return QuadElement(d_, u_, -v_); }
    /// Field norm u^2 - d v^2 (multiplicative, exact).
    Rational norm() const { return u_ * u_ - Rational(d_) * v_ * v_; }

    QuadElement operator-() const { return QuadElement(d_, -u_, -v_); }
    QuadElement operator+(const QuadElement& o) const;
    QuadElement operator-(const QuadElement& o) const;
    QuadElement operator*(const QuadElement& o) const;
    QuadElement operator/(const QuadElement& o) const;

    bool operator==(const QuadElement& o) const;
    bool operator!=(const QuadElement& o) const { return !(*this == o); }

    /// Galois embedding u ± v*sqrt(d) into R.
    double embed(EmbeddingSign sign = EmbeddingSign::plus) const;
    /// Extended-precision embedding for the geometry core.
    long double embed_ext(EmbeddingSign sign = EmbeddingSign::plus) const;

    /// Coordinates (c1, c2) with value = c1 + c2*theta in the integral basis
    /// {1, theta} of Q(sqrt(d)); the trivial basis {1} when d == 0.
    std::pair<Rational, Rational> integral_coords() const;
    /// True iff the element lies in the ring of integers.
    bool is_integral() const;

    std::string str() const;

private:
    long d_;
    Rational u_, v_;
};

enum class BasisRule { sqrt_d, half_one_plus_sqrt_d };

struct IntegralBasis {
    QuadElement theta;   // sqrt(d) or (1+sqrt(d))/2
    BasisRule rule;
    std::string description;
};

/// {1, theta} Z-basis of the ring of integers of Q(sqrt(d)).
/// theta = sqrt(d) for d = 2,3 (mod 4), theta = (1+sqrt(d))/2 for d = 1 (mod 4).
IntegralBasis integral_basis(long d);

bool is_squarefree(long d);

}  // namespace fuchscodec
