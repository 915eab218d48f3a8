#include "fuchscodec/takeuchi.hpp"

#include <cmath>

namespace fuchscodec {

namespace {

QuadElement quad(long d, Rational u, Rational v) { return QuadElement(d, u, v); }
Rational rat(long n) { return Rational(n); }
Rational rat(long n, long m) { return Rational(n, m); }

std::vector<TraceTriple> build_registry() {
    std::vector<TraceTriple> rows;
    // label, x^2, y^2, z^2 (printed), e, d, a, b
    rows.push_back({"T1", QuadElement::integer(5), QuadElement::integer(12),
                    QuadElement::integer(15), 2, 0,
                    QuadElement::integer(5), QuadElement::integer(-30)});
    rows.push_back({"T2", quad(5, rat(3), rat(1)), quad(5, rat(9), rat(3)),
                    quad(5, rat(6), rat(9, 2)), 5, 5,
                    quad(5, rat(2), rat(2)), quad(5, rat(-150), rat(-66))});
    rows.push_back({"T3", quad(3, rat(3), rat(1)), quad(3, rat(8), rat(4)),
                    quad(3, rat(9), rat(5)), 2, 3,
                    quad(3, rat(0), rat(2)), quad(3, rat(-3), rat(-2))});
    rows.push_back({"T4", quad(5, rat(3), rat(1)), quad(5, rat(6), rat(2)),
                    quad(5, rat(7), rat(3)), 2, 5,
                    quad(5, rat(2), rat(2)), quad(5, rat(-14), rat(-6))});
    rows.push_back({"T5", quad(13, rat(5, 2), rat(1, 2)), quad(13, rat(16), rat(4)),
                    quad(13, rat(33, 2), rat(9, 2)), 2, 13,
                    quad(13, rat(-1, 2), rat(1, 2)), quad(13, rat(-33), rat(-9))});
    rows.push_back({"T6", quad(5, rat(7, 2), rat(1, 2)), quad(5, rat(14), rat(6)),
                    quad(5, rat(16), rat(7)), 5, 5,
                    quad(5, rat(-1), rat(3)), quad(5, rat(-230), rat(-102))});
    rows.push_back({"T7", quad(3, rat(3), rat(1)), quad(3, rat(14), rat(6)),
                    quad(3, rat(15), rat(8)), 6, 3,
                    quad(3, rat(24), rat(6)), quad(3, rat(-93), rat(-54))});
    return rows;
}

}  // namespace

const std::vector<TraceTriple>& registry() {
    static const std::vector<TraceTriple> rows = build_registry();
    return rows;
}

const TraceTriple& registry_row(const std::string& label) {
    for (const auto& row : registry())
        if (row.label == label) return row;
    throw std::out_of_range("registry_row: unknown group label '" + label + "'");
}

std::optional<QuadElement> two_cos_pi_over(int e, long d) {
    switch (e) {
        case 2:
            return QuadElement::integer(0);
        case 3:
            return QuadElement::integer(1);
        case 4:
            if (d == 2) return quad(2, rat(0), rat(1));  // sqrt(2)
            return std::nullopt;
        case 5:
            if (d == 5) return quad(5, rat(1, 2), rat(1, 2));  // golden ratio
            return std::nullopt;
        case 6:
            if (d == 3) return quad(3, rat(0), rat(1));  // sqrt(3)
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

double fricke_residual(const TraceTriple& triple, ZReading reading) {
    const QuadElement z2 = reading == ZReading::printed ? triple.z2_printed
                                                        : triple.corrected_z2();
    if (reading == ZReading::corrected) {
        if (auto exact = fricke_residual_corrected_exact(triple))
            return exact->embed();
    }
    long double x2 = triple.x2.embed(), y2 = triple.y2.embed(), zz = z2.embed();
    long double xyz = sqrtl(x2 * y2 * zz);
    long double c = 2.0L * cosl((long double)M_PI / triple.e);
    return (double)(x2 + y2 + zz - xyz - 2.0L + c);
}

std::optional<QuadElement> fricke_residual_corrected_exact(const TraceTriple& triple) {
    auto c = two_cos_pi_over(triple.e, triple.d);
    if (!c) return std::nullopt;
    // with z = xy/2, xyz = 2 z^2 and the residual is x^2 + y^2 - z^2 - 2 + 2cos(pi/e)
    QuadElement z2 = triple.corrected_z2();
    return triple.x2 + triple.y2 - z2 - QuadElement::integer(2) + *c;
}

std::array<UnimodularMap, 6> squared_generators(const UnimodularMap& alpha,
                                                const UnimodularMap& beta,
                                                const UnimodularMap& gamma) {
    UnimodularMap ai = alpha.inverse(), bi = beta.inverse();
    return {compose(alpha, alpha),
            compose(beta, beta),
            gamma,
            compose(alpha, compose(gamma, ai)),
            compose(beta, compose(gamma, bi)),
            compose(alpha, compose(beta, compose(gamma, compose(bi, ai))))};
}

PresentationExt synthesize_ext(const TraceTriple& triple, double tol) {
    if (auto exact = fricke_residual_corrected_exact(triple)) {
        if (std::abs(exact->embed()) > tol)
            throw std::domain_error("synthesize: trace triple fails the Fricke check");
    } else if (std::abs(fricke_residual(triple, ZReading::corrected)) > tol) {
        throw std::domain_error("synthesize: trace triple fails the Fricke check");
    }

    long double x = sqrtl(triple.x2.embed_ext());
    long double y = sqrtl(triple.y2.embed_ext());
    if (!(x > 2.0L && y > 2.0L))
        throw std::domain_error("synthesize: hyperbolic generators need traces > 2");

    // alpha = diag(lambda, 1/lambda), lambda + 1/lambda = x, smaller root
    long double lam = (x - sqrtl(x * x - 4.0L)) / 2.0L;
    Mat2L alpha{lam, 0.0L, 0.0L, 1.0L / lam};
    // beta = [[y/2, -sqrt(y^2-4)/2], [-sqrt(y^2-4)/2, y/2]]
    long double off = -sqrtl(y * y - 4.0L) / 2.0L;
    Mat2L beta{y / 2.0L, off, off, y / 2.0L};
    // relation alpha beta alpha^-1 beta^-1 gamma = -Id
    Mat2L gamma = -compose_ext(
        beta, compose_ext(alpha, compose_ext(beta.inverse(), alpha.inverse())));

    Mat2L ai = alpha.inverse(), bi = beta.inverse();
    std::array<Mat2L, 6> squared = {
        compose_ext(alpha, alpha),
        compose_ext(beta, beta),
        gamma,
        compose_ext(alpha, compose_ext(gamma, ai)),
        compose_ext(beta, compose_ext(gamma, bi)),
        compose_ext(alpha, compose_ext(beta, compose_ext(gamma, compose_ext(bi, ai))))};
    return PresentationExt{triple.label, alpha, beta, gamma, triple.e, squared};
}

GroupPresentation synthesize(const TraceTriple& triple, double tol) {
    PresentationExt ext = synthesize_ext(triple, tol);
    std::array<UnimodularMap, 6> squared = {
        ext.squared[0].round(), ext.squared[1].round(), ext.squared[2].round(),
        ext.squared[3].round(), ext.squared[4].round(), ext.squared[5].round()};
    return GroupPresentation{ext.label, ext.alpha.round(), ext.beta.round(),
                             ext.gamma.round(), ext.e, squared};
}

}  // namespace fuchscodec
