#include "fuchscodec/mobius.hpp"

#include <algorithm>
#include <cmath>

namespace fuchscodec {

namespace {
using LC = std::complex<long double>;

double det_slack(double a, double b, double c, double d) {
    // binary64 resolution of a*d - b*c at this entry scale
    double scale = std::abs(a * d) + std::abs(b * c) + 1.0;
    return 64.0 * 2.2e-16 * scale;
}
}  // namespace

UnimodularMap::UnimodularMap(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
    long double det = (long double)a * d - (long double)b * c;
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) && std::isfinite(d)))
        throw std::domain_error("UnimodularMap: non-finite entry");
    double tol = std::max(1e-9, det_slack(a, b, c, d));
    if (std::abs((double)det - 1.0) > tol)
        throw std::domain_error("UnimodularMap: determinant " +
                                std::to_string((double)det) + " is not 1");
}

double UnimodularMap::det() const {
    return (double)((long double)a * d - (long double)b * c);
}

double UnimodularMap::max_abs() const {
    return std::max(std::max(std::abs(a), std::abs(b)),
                    std::max(std::abs(c), std::abs(d)));
}

UnimodularMap UnimodularMap::canonical() const {
    for (double lead : {c, d, a, b}) {
        if (std::abs(lead) > 1e-9) return lead > 0 ? *this : -*this;
    }
    return *this;
}

Complex UnimodularMap::apply(Complex z) const {
    LC zl(z.real(), z.imag());
    LC den = (long double)c * zl + (long double)d;
    long double scale = std::max(1.0L, std::max(std::abs((long double)c) * std::abs(zl),
                                                std::abs((long double)d)));
    if (std::abs(den) <= 1e-12L * scale)
        throw PoleError("apply: cz+d vanishes; z is a pole of the map");
    LC num = (long double)a * zl + (long double)b;
    LC w = num / den;
    return Complex((double)w.real(), (double)w.imag());
}

UnimodularMap compose(const UnimodularMap& m1, const UnimodularMap& m2) {
    long double a = (long double)m1.a * m2.a + (long double)m1.b * m2.c;
    long double b = (long double)m1.a * m2.b + (long double)m1.b * m2.d;
    long double c = (long double)m1.c * m2.a + (long double)m1.d * m2.c;
    long double d = (long double)m1.c * m2.b + (long double)m1.d * m2.d;
    long double det = a * d - b * c;
    long double scale = std::abs(a * d) + std::abs(b * c) + 1.0L;
    // Renormalize while the computed determinant still resolves the drift;
    // beyond that scale the product of det-1 matrices is left untouched.
    if (std::abs(det - 1.0L) < 0.5L && scale * 1e-14L < 0.1L) {
        long double s = sqrtl(det);
        a /= s; b /= s; c /= s; d /= s;
    }
    return UnimodularMap((double)a, (double)b, (double)c, (double)d);
}

bool eq_mod_sign(const UnimodularMap& m1, const UnimodularMap& m2, double tol) {
    double dm = std::max({std::abs(m1.a - m2.a), std::abs(m1.b - m2.b),
                          std::abs(m1.c - m2.c), std::abs(m1.d - m2.d)});
    double dp = std::max({std::abs(m1.a + m2.a), std::abs(m1.b + m2.b),
                          std::abs(m1.c + m2.c), std::abs(m1.d + m2.d)});
    double scale = std::max(1.0, std::max(m1.max_abs(), m2.max_abs()));
    return std::min(dm, dp) <= tol * scale;
}

IsometricCircle isometric_circle(const UnimodularMap& m) {
    if (std::abs(m.c) <= 1e-9)
        throw std::domain_error("isometric_circle: map fixes infinity (c = 0)");
    return {-m.d / m.c, 1.0 / std::abs(m.c)};
}

namespace {
Side classify(double dist, double radius, double tol) {
    if (std::abs(dist - radius) <= tol) return Side::boundary;
    return dist < radius ? Side::interior : Side::exterior;
}
}  // namespace

Side side(Complex z, const IsometricCircle& circle, double tol) {
    if (tol <= 0) throw std::domain_error("side: tolerance must be positive");
    return classify(std::abs(z - Complex(circle.center, 0.0)), circle.radius, tol);
}

Side side(Complex z, const GeodesicCircle& circle, double tol) {
    if (tol <= 0) throw std::domain_error("side: tolerance must be positive");
    return classify(std::abs(z - circle.center), circle.radius, tol);
}

Complex cayley(Complex z, CayleyDirection dir) {
    if (dir == CayleyDirection::to_disk) {
        if (!(z.imag() > 0))
            throw std::domain_error("cayley: input not in the open upper half-plane");
        LC zl(z.real(), z.imag());
        LC w = (zl - LC(0, 1)) / (zl + LC(0, 1));
        return Complex((double)w.real(), (double)w.imag());
    }
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("cayley: input not in the open unit disk");
    LC wl(z.real(), z.imag());
    LC zz = LC(0, 1) * (LC(1, 0) + wl) / (LC(1, 0) - wl);
    return Complex((double)zz.real(), (double)zz.imag());
}

double hyp_distance(Complex z1, Complex z2) {
    if (!(z1.imag() > 0) || !(z2.imag() > 0))
        throw std::domain_error("hyp_distance: points must have positive imaginary part");
    long double n = std::norm(LC(z1.real(), z1.imag()) - LC(z2.real(), z2.imag()));
    long double ch = 1.0L + n / (2.0L * z1.imag() * z2.imag());
    return (double)acoshl(std::max(ch, 1.0L));
}

namespace {
// Unit tangent of the arc of `circle` at point p, pointed along the chord
// direction. Valid for arcs spanning less than a half-turn.
Complex arc_tangent(const GeodesicCircle& circle, Complex p, Complex chord) {
    Complex radial = (p - circle.center) / std::abs(p - circle.center);
    Complex t(-radial.imag(), radial.real());
    double along = t.real() * chord.real() + t.imag() * chord.imag();
    return along >= 0 ? t : -t;
}
}  // namespace

double polygon_area(const std::vector<Complex>& vertices,
                    const std::vector<GeodesicCircle>& edges) {
    size_t k = vertices.size();
    if (k < 3 || edges.size() != k)
        throw std::domain_error("polygon_area: need k >= 3 vertices and k edge circles");
    for (size_t i = 0; i < k; ++i) {
        // vertex i must sit on edges i-1 and i
        const GeodesicCircle& e0 = edges[(i + k - 1) % k];
        const GeodesicCircle& e1 = edges[i];
        double d0 = std::abs(std::abs(vertices[i] - e0.center) - e0.radius);
        double d1 = std::abs(std::abs(vertices[i] - e1.center) - e1.radius);
        if (d0 > 1e-6 * std::max(1.0, e0.radius) || d1 > 1e-6 * std::max(1.0, e1.radius))
            throw std::domain_error("polygon_area: vertex off its edge circles");
    }
    // Gauss-Bonnet via signed turning angles of the geodesic boundary:
    // area = sum of turns - 2 pi, orientation-normalized. The interior angle
    // at vertex i is pi minus the turn there, whichever side the polygon
    // lies on relative to each edge circle.
    double shoelace = 0.0;
    for (size_t i = 0; i < k; ++i) {
        Complex p = vertices[i], q = vertices[(i + 1) % k];
        shoelace += p.real() * q.imag() - q.real() * p.imag();
    }
    double orient = shoelace >= 0 ? 1.0 : -1.0;
    double turn_sum = 0.0;
    for (size_t i = 0; i < k; ++i) {
        size_t prev = (i + k - 1) % k;
        Complex t_in = arc_tangent(edges[prev], vertices[i], vertices[i] - vertices[prev]);
        Complex t_out =
            arc_tangent(edges[i], vertices[i], vertices[(i + 1) % k] - vertices[i]);
        double cross = t_in.real() * t_out.imag() - t_in.imag() * t_out.real();
        double dot = t_in.real() * t_out.real() + t_in.imag() * t_out.imag();
        double turn = std::atan2(cross, dot);
        // an ideal vertex turns by exactly pi; keep its sign with the
        // traversal orientation rather than the atan2 branch cut
        if (std::abs(std::abs(turn) - M_PI) < 0.05) turn = orient * std::abs(turn);
        turn_sum += turn;
    }
    double area = std::abs(turn_sum) - 2.0 * M_PI;
    if (area <= 1e-9)
        throw DegeneratePolygon("polygon_area: angle sum admits no hyperbolic polygon");
    return area;
}

}  // namespace fuchscodec
