#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace fuchscodec {

using Complex = std::complex<double>;

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};
struct DegeneratePolygon : std::domain_error {
    using std::domain_error::domain_error;
};

/// Real 2x2 matrix of determinant 1, acting on the upper half-plane by
/// fractional linear transformations. Group elements are identified up to
/// sign (PSL); use canonical() or eq_mod_sign for comparisons.
///
/// The determinant check at construction is scale-aware: for entries of
/// magnitude M the product a*d - b*c cannot be verified in binary64 below
/// ~M^2 * eps, so the 1e-9 gate widens accordingly for large words.
struct UnimodularMap {
    double a, b, c, d;

    UnimodularMap(double a_, double b_, double c_, double d_);
    static UnimodularMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

    /// Exact inverse of a determinant-1 matrix (adjugate, no division).
    UnimodularMap inverse() const { return {d, -b, -c, a}; }
    UnimodularMap operator-() const { return {-a, -b, -c, -d}; }

    double trace() const { return a + d; }
    double det() const;
    double max_abs() const;

    /// Sign-normal form: the first entry of (c, d, a, b) with magnitude
    /// above 1e-9 is made positive, so m and -m compare equal.
    UnimodularMap canonical() const;

    /// gamma(z) = (az+b)/(cz+d). Throws PoleError when cz+d vanishes.
    /// (A member rather than a free function: an unqualified apply(m, z)
    /// would collide with std::apply through ADL on std::complex.)
    Complex apply(Complex z) const;
};

/// Group law with determinant renormalization. The internal product is
/// evaluated in extended precision; the sqrt(det) correction is applied only
/// while the computed determinant is still trustworthy at the entry scale.
UnimodularMap compose(const UnimodularMap& m1, const UnimodularMap& m2);

/// PSL equality: min(|m1-m2|, |m1+m2|)_inf <= tol * max(1, |m1|, |m2|).
bool eq_mod_sign(const UnimodularMap& m1, const UnimodularMap& m2, double tol = 1e-9);

/// Isometric circle |cz+d| = 1 of a half-plane map with c != 0.
struct IsometricCircle {
    double center;  // -d/c, on the real axis
    double radius;  // 1/|c|
};

IsometricCircle isometric_circle(const UnimodularMap& m);

/// Circle with complex center; geodesic walls in the disk model live here.
struct GeodesicCircle {
    Complex center;
    double radius;
};

enum class Side { interior, boundary, exterior };

Side side(Complex z, const IsometricCircle& circle, double tol);
Side side(Complex z, const GeodesicCircle& circle, double tol);

enum class CayleyDirection { to_disk, to_half };

/// w = (z-i)/(z+i) and its inverse z = i(1+w)/(1-w).
Complex cayley(Complex z, CayleyDirection dir);

/// Hyperbolic distance in the upper half-plane,
/// cosh d = 1 + |z1-z2|^2 / (2 Im z1 Im z2).
double hyp_distance(Complex z1, Complex z2);

/// Gauss-Bonnet area (k-2)pi - sum of interior angles of a hyperbolic
/// polygon. edges[k] is the circle carrying the side from vertices[k] to
/// vertices[k+1]; the angle at a vertex is measured between the tangents of
/// the two incident circles. Throws DegeneratePolygon when the value is not
/// positive.
double polygon_area(const std::vector<Complex>& vertices,
                    const std::vector<GeodesicCircle>& edges);

}  // namespace fuchscodec
