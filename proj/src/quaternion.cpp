#include "fuchscodec/quaternion.hpp"

#include <cmath>

namespace fuchscodec {

namespace {
void check_field(long d, const QuadElement& e, const char* what) {
    if (!e.is_rational() && e.d() != d)
        throw FieldMismatch(std::string("AlgebraParams: ") + what +
                            " lies outside the base field");
}
}  // namespace

AlgebraParams::AlgebraParams(long d_, QuadElement a_, QuadElement b_)
    : d(d_), a(std::move(a_)), b(std::move(b_)) {
    if (a.is_zero() || b.is_zero())
        throw std::domain_error("AlgebraParams: a and b must be nonzero");
    check_field(d, a, "a");
    check_field(d, b, "b");
}

QuaternionElement::QuaternionElement(AlgebraParams alg, QuadElement x_,
                                     QuadElement y_, QuadElement z_, QuadElement t_)
    : algebra(std::move(alg)), x(std::move(x_)), y(std::move(y_)),
      z(std::move(z_)), t(std::move(t_)) {
    for (const QuadElement* e : {&x, &y, &z, &t}) {
        if (!e->is_rational() && e->d() != algebra.d)
            throw FieldMismatch("QuaternionElement: coordinate outside the base field");
    }
}

QuadElement reduced_trace(const QuaternionElement& q) {
    return q.x * QuadElement::integer(2);
}

QuadElement reduced_norm(const QuaternionElement& q) {
    const QuadElement& a = q.algebra.a;
    const QuadElement& b = q.algebra.b;
    return q.x * q.x - a * q.y * q.y - b * q.z * q.z + a * b * q.t * q.t;
}

QuaternionElement qmul(const QuaternionElement& p, const QuaternionElement& q) {
    if (p.algebra.d != q.algebra.d || !(p.algebra.a == q.algebra.a) ||
        !(p.algebra.b == q.algebra.b))
        throw FieldMismatch("qmul: operands live in different algebras");
    const QuadElement& a = p.algebra.a;
    const QuadElement& b = p.algebra.b;
    // (x1 + y1 I + z1 J + t1 K)(x2 + y2 I + z2 J + t2 K) with
    // I^2 = a, J^2 = b, K = IJ = -JI, K^2 = -ab, IK = aJ, KI = -aJ,
    // JK = -bI, KJ = bI.
    QuadElement x = p.x * q.x + a * p.y * q.y + b * p.z * q.z - a * b * p.t * q.t;
    QuadElement y = p.x * q.y + p.y * q.x - b * p.z * q.t + b * p.t * q.z;
    QuadElement z = p.x * q.z + p.z * q.x + a * p.y * q.t - a * p.t * q.y;
    QuadElement t = p.x * q.t + p.t * q.x + p.y * q.z - p.z * q.y;
    return QuaternionElement(p.algebra, x, y, z, t);
}

RealMat2 represent(const QuaternionElement& q) {
    double a_emb = q.algebra.a.embed(EmbeddingSign::plus);
    if (!(a_emb > 0))
        throw std::domain_error("represent: embed(a) must be positive");
    long double ra = sqrtl((long double)a_emb);
    long double x = q.x.embed(), y = q.y.embed(), z = q.z.embed(), t = q.t.embed();
    long double b = q.algebra.b.embed();
    return RealMat2{(double)(x + y * ra), (double)(z + t * ra),
                    (double)(b * (z - t * ra)), (double)(x - y * ra)};
}

}  // namespace fuchscodec
