#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fuchscodec/ext.hpp"
#include "fuchscodec/mobius.hpp"
#include "fuchscodec/quadfield.hpp"
#include "fuchscodec/quaternion.hpp"

namespace fuchscodec {

/// One row of the sample-group table: the trace triple is stored through its
/// exact radicands x^2, y^2, z^2 (each a QuadElement over the base field),
/// the elliptic order e, and the registry algebra parameters (a, b).
///
/// z2_printed keeps the value exactly as tabulated. For T2 that value fails
/// the Fricke consistency check while x^2 y^2 / 4 passes; corrected_z2()
/// returns the consistent radicand and the report layer shows both.
struct TraceTriple {
    std::string label;
    QuadElement x2, y2, z2_printed;
    int e = 2;
    long d = 0;  // base field Q(sqrt(d)), 0 for Q
    QuadElement a, b;

    QuadElement corrected_z2() const {
        return x2 * y2 * QuadElement(0, Rational(1, 4), Rational(0));
    }
    AlgebraParams algebra() const { return AlgebraParams(d, a, b); }
};

/// The seven sample groups T1..T7.
const std::vector<TraceTriple>& registry();
const TraceTriple& registry_row(const std::string& label);

enum class ZReading { printed, corrected };

/// 2 cos(pi/e) as an exact field element when it lies in Q(sqrt(d))
/// (e = 2 always; e = 5 over d = 5; e = 6 over d = 3), otherwise empty.
std::optional<QuadElement> two_cos_pi_over(int e, long d);

/// x^2 + y^2 + z^2 - xyz - 2 + 2cos(pi/e). Zero iff the triple is realizable
/// with Tr(gamma) = 2cos(pi/e).
double fricke_residual(const TraceTriple& triple, ZReading reading);

/// Exact-arithmetic residual for the corrected z = xy/2, where
/// xyz = 2 z^2 collapses to a field element. Empty when 2cos(pi/e) is not in
/// the base field.
std::optional<QuadElement> fricke_residual_corrected_exact(const TraceTriple& triple);

/// Generators in the normal form: alpha diagonal, beta symmetric, and
/// gamma = -beta alpha beta^-1 alpha^-1, satisfying
/// alpha beta alpha^-1 beta^-1 gamma = -Id and gamma^e = -Id.
struct GroupPresentation {
    std::string label;
    UnimodularMap alpha, beta, gamma;
    int e;
    /// <alpha^2, beta^2, gamma, alpha gamma alpha^-1, beta gamma beta^-1,
    ///  alpha beta gamma beta^-1 alpha^-1> generate the squared subgroup.
    std::array<UnimodularMap, 6> squared;
};

/// Extended-precision presentation; the tessellation core works from this
/// and the binary64 GroupPresentation is its rounding.
struct PresentationExt {
    std::string label;
    Mat2L alpha, beta, gamma;
    int e;
    std::array<Mat2L, 6> squared;
};

/// Builds the presentation from a trace triple. Throws std::domain_error
/// when the Fricke residual of the corrected triple exceeds tol.
GroupPresentation synthesize(const TraceTriple& triple, double tol = 1e-9);
PresentationExt synthesize_ext(const TraceTriple& triple, double tol = 1e-9);

std::array<UnimodularMap, 6> squared_generators(const UnimodularMap& alpha,
                                                const UnimodularMap& beta,
                                                const UnimodularMap& gamma);

}  // namespace fuchscodec
