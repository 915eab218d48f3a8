#include "fuchscodec/quadfield.hpp"

#include <cmath>
#include <sstream>

namespace fuchscodec {

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    mpq_class q;
    if (slash == std::string::npos) {
        q = mpq_class(mpz_class(s));
    } else {
        mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("Rational::parse: zero denominator");
        q = mpq_class(num) / mpq_class(den);
    }
    return Rational(q);
}

bool is_squarefree(long d) {
    if (d < 1) return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

QuadElement::QuadElement(long d, Rational u, Rational v)
    : d_(d), u_(std::move(u)), v_(std::move(v)) {
    if (d_ == 0) {
        if (!v_.is_zero())
            throw std::domain_error("QuadElement: nonzero sqrt coefficient over Q");
    } else if (d_ <= 1 || !is_squarefree(d_)) {
        throw std::domain_error("QuadElement: d must be squarefree and > 1");
    }
}

namespace {
// Resolve the common field of two elements, promoting rationals (d == 0).
long common_d(const QuadElement& a, const QuadElement& b) {
    if (a.d() == b.d()) return a.d();
    if (a.d() == 0) return b.d();
    if (b.d() == 0) return a.d();
    throw FieldMismatch("QuadElement: mixed quadratic fields d=" +
                        std::to_string(a.d()) + " and d=" + std::to_string(b.d()));
}
}  // namespace

QuadElement QuadElement::operator+(const QuadElement& o) const {
    return QuadElement(common_d(*this, o), u_ + o.u_, v_ + o.v_);
}

QuadElement QuadElement::operator-(const QuadElement& o) const {
    return QuadElement(common_d(*this, o), u_ - o.u_, v_ - o.v_);
}

QuadElement QuadElement::operator*(const QuadElement& o) const {
    long d = common_d(*this, o);
    return QuadElement(d, u_ * o.u_ + Rational(d) * v_ * o.v_,
                       u_ * o.v_ + v_ * o.u_);
}

QuadElement QuadElement::operator/(const QuadElement& o) const {
    if (o.is_zero()) throw std::domain_error("QuadElement: division by zero");
    long d = common_d(*this, o);
    Rational n = o.norm();
    // (u + v sqrt d) * (ou - ov sqrt d) / (ou^2 - d ov^2)
    QuadElement prod = *this * o.conj();
    return QuadElement(d, prod.u_ / n, prod.v_ / n);
}

bool QuadElement::operator==(const QuadElement& o) const {
    if (u_ != o.u_ || v_ != o.v_) return false;
    return d_ == o.d_ || v_.is_zero();
}

long double QuadElement::embed_ext(EmbeddingSign sign) const {
    long double u = static_cast<long double>(u_.num().get_d()) / u_.den().get_d();
    if (v_.is_zero()) return u;
    long double v = static_cast<long double>(v_.num().get_d()) / v_.den().get_d();
    long double r = sqrtl(static_cast<long double>(d_));
    return sign == EmbeddingSign::plus ? u + v * r : u - v * r;
}

double QuadElement::embed(EmbeddingSign sign) const {
    return static_cast<double>(embed_ext(sign));
}

std::pair<Rational, Rational> QuadElement::integral_coords() const {
    if (d_ == 0) return {u_, Rational(0)};
    if (d_ % 4 == 1) {
        // u + v sqrt(d) = (u - v) + 2v * (1+sqrt(d))/2
        return {u_ - v_, v_ * Rational(2)};
    }
    return {u_, v_};
}

bool QuadElement::is_integral() const {
    auto [c1, c2] = integral_coords();
    return c1.is_integer() && c2.is_integer();
}

std::string QuadElement::str() const {
    if (is_rational()) return u_.str();
    std::ostringstream os;
    os << u_.str() << (v_.sign() < 0 ? " - " : " + ");
    Rational av = v_.sign() < 0 ? -v_ : v_;
    if (!(av == Rational(1))) os << av.str() << "*";
    os << "sqrt(" << d_ << ")";
    return os.str();
}

IntegralBasis integral_basis(long d) {
    if (d <= 1 || !is_squarefree(d))
        throw std::domain_error("integral_basis: d must be squarefree and > 1");
    if (d % 4 == 1) {
        return {QuadElement(d, Rational(1, 2), Rational(1, 2)),
                BasisRule::half_one_plus_sqrt_d, "(1+sqrt(d))/2"};
    }
    return {QuadElement(d, Rational(0), Rational(1)), BasisRule::sqrt_d, "sqrt(d)"};
}

}  // namespace fuchscodec
