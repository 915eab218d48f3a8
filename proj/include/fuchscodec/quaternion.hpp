#pragma once

#include <array>

#include "fuchscodec/quadfield.hpp"

namespace fuchscodec {

/// Parameters (a, b) of the quaternion algebra (a,b / F) over F = Q(sqrt(d))
/// (F = Q when d == 0). The regular representation into real matrices needs
/// a to embed positively.
struct AlgebraParams {
    long d;
    QuadElement a, b;

    AlgebraParams(long d_, QuadElement a_, QuadElement b_);
};

/// x + yI + zJ + tK with I^2 = a, J^2 = b, K = IJ = -JI.
struct QuaternionElement {
    AlgebraParams algebra;
    QuadElement x, y, z, t;

    QuaternionElement(AlgebraParams alg, QuadElement x_, QuadElement y_,
                      QuadElement z_, QuadElement t_);

    QuaternionElement conj() const {
        return QuaternionElement(algebra, x, -y, -z, -t);
    }
};

/// Tr(w) = 2x.
QuadElement reduced_trace(const QuaternionElement& q);
/// N(w) = x^2 - a y^2 - b z^2 + a b t^2.
QuadElement reduced_norm(const QuaternionElement& q);

QuaternionElement qmul(const QuaternionElement& p, const QuaternionElement& q);

/// Plain 2x2 real matrix; the image of the regular representation has
/// determinant N(q), which is not forced to 1.
struct RealMat2 {
    double a, b, c, d;
    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
};

/// Left regular representation
///   x + yI + zJ + tK  ->  [ x + y sqrt(a)      z + t sqrt(a) ]
///                         [ b (z - t sqrt(a))  x - y sqrt(a) ]
/// Requires embed(a) > 0.
RealMat2 represent(const QuaternionElement& q);

}  // namespace fuchscodec
