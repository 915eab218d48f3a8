#include "fuchscodec/normic.hpp"

#include <sstream>

namespace fuchscodec {

void QuadraticForm::add(int i, int j, const mpz_class& c) {
    if (c == 0) return;
    auto key = i <= j ? std::make_pair(i, j) : std::make_pair(j, i);
    auto it = coeff.find(key);
    if (it == coeff.end()) {
        coeff.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) coeff.erase(it);
    }
}

mpz_class QuadraticForm::eval(const std::vector<mpz_class>& vals) const {
    if ((int)vals.size() != nvars)
        throw std::invalid_argument("QuadraticForm::eval: wrong tuple size");
    mpz_class acc = 0;
    for (const auto& [ij, c] : coeff) acc += c * vals[ij.first] * vals[ij.second];
    return acc;
}

namespace {
std::string var_name(int idx, int n) {
    static const char* blocks = "xyzt";
    return std::string(1, blocks[idx / n]) + std::to_string(idx % n + 1);
}
}  // namespace

std::string QuadraticForm::str(int n) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, c] : coeff) {
        mpz_class ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono = ij.first == ij.second
                               ? var_name(ij.first, n) + "^2"
                               : var_name(ij.first, n) + "*" + var_name(ij.second, n);
        if (ac == 1) {
            os << mono;
        } else {
            os << ac.get_str() << "*" << mono;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::vector<mpz_class> NormicSystem::eval(const std::vector<mpz_class>& vals) const {
    std::vector<mpz_class> out;
    out.reserve(polys.size());
    for (const auto& g : polys) out.push_back(g.eval(vals));
    return out;
}

std::string NormicSystem::pretty() const {
    std::ostringstream os;
    for (size_t k = 0; k < polys.size(); ++k)
        os << "g" << k + 1 << " = " << polys[k].str(n) << "\n";
    return os.str();
}

namespace {

// Pair (f0, f1) of quadratic forms representing f0 * 1 + f1 * theta.
struct FormPair {
    QuadraticForm f0, f1;
};

// Square of the block variable (v1 + v2 theta), with theta^2 = c + s theta.
FormPair square_block(int nvars, int base, int n, const mpz_class& c, const mpz_class& s) {
    FormPair p;
    p.f0.nvars = p.f1.nvars = nvars;
    if (n == 1) {
        p.f0.add(base, base, 1);
        return p;
    }
    int v1 = base, v2 = base + 1;
    // (v1 + v2 theta)^2 = v1^2 + c v2^2 + (2 v1 v2 + s v2^2) theta
    p.f0.add(v1, v1, 1);
    p.f0.add(v2, v2, c);
    p.f1.add(v1, v2, 2);
    p.f1.add(v2, v2, s);
    return p;
}

// Multiply a FormPair by the field constant k1 + k2 theta.
FormPair scale(const FormPair& p, const mpz_class& k1, const mpz_class& k2,
               const mpz_class& c, const mpz_class& s) {
    FormPair out;
    out.f0.nvars = out.f1.nvars = p.f0.nvars;
    // (k1 + k2 theta)(P + Q theta) = (k1 P + k2 c Q) + (k2 P + (k1 + k2 s) Q) theta
    for (const auto& [ij, v] : p.f0.coeff) {
        out.f0.add(ij.first, ij.second, k1 * v);
        out.f1.add(ij.first, ij.second, k2 * v);
    }
    for (const auto& [ij, v] : p.f1.coeff) {
        out.f0.add(ij.first, ij.second, k2 * c * v);
        out.f1.add(ij.first, ij.second, (k1 + k2 * s) * v);
    }
    return out;
}

void accumulate(QuadraticForm& dst, const QuadraticForm& src, int sign) {
    for (const auto& [ij, v] : src.coeff) dst.add(ij.first, ij.second, sign * v);
}

std::pair<mpz_class, mpz_class> integral_coords_z(const QuadElement& e) {
    auto [c1, c2] = e.integral_coords();
    if (!c1.is_integer() || !c2.is_integer())
        throw std::domain_error("normic_system: algebra parameter is not integral");
    return {c1.num(), c2.num()};
}

}  // namespace

NormicSystem normic_system(const AlgebraParams& algebra) {
    int n = algebra.d == 0 ? 1 : 2;
    if (algebra.d != 0 && !is_squarefree(algebra.d))
        throw std::domain_error("normic_system: unsupported field");
    int nvars = 4 * n;

    // theta^2 = c + s theta
    mpz_class c = 0, s = 0;
    if (n == 2) {
        if (algebra.d % 4 == 1) {
            c = (algebra.d - 1) / 4;
            s = 1;
        } else {
            c = algebra.d;
            s = 0;
        }
    }

    auto [a1, a2] = integral_coords_z(algebra.a);
    auto [b1, b2] = integral_coords_z(algebra.b);
    auto [ab1, ab2] = integral_coords_z(algebra.a * algebra.b);

    FormPair x2 = square_block(nvars, 0 * n, n, c, s);
    FormPair y2 = square_block(nvars, 1 * n, n, c, s);
    FormPair z2 = square_block(nvars, 2 * n, n, c, s);
    FormPair t2 = square_block(nvars, 3 * n, n, c, s);

    FormPair ay2 = scale(y2, a1, a2, c, s);
    FormPair bz2 = scale(z2, b1, b2, c, s);
    FormPair abt2 = scale(t2, ab1, ab2, c, s);

    NormicSystem sys;
    sys.n = n;
    sys.polys.assign(n, QuadraticForm{});
    for (auto& g : sys.polys) g.nvars = nvars;
    accumulate(sys.polys[0], x2.f0, +1);
    accumulate(sys.polys[0], ay2.f0, -1);
    accumulate(sys.polys[0], bz2.f0, -1);
    accumulate(sys.polys[0], abt2.f0, +1);
    if (n == 2) {
        accumulate(sys.polys[1], x2.f1, +1);
        accumulate(sys.polys[1], ay2.f1, -1);
        accumulate(sys.polys[1], bz2.f1, -1);
        accumulate(sys.polys[1], abt2.f1, +1);
    }
    return sys;
}

int rate_lower_bound(int n) {
    if (n < 1) throw std::domain_error("rate_lower_bound: degree must be >= 1");
    return 3 * n;
}

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

namespace {
void require_odd_prime(long p, const char* who) {
    if (p < 3 || !is_prime(p))
        throw std::domain_error(std::string(who) + ": p must be an odd prime");
}
}  // namespace

int cyclo_degree(long p) {
    require_odd_prime(p, "cyclo_degree");
    return (int)((p - 1) / 2);
}

int cyclo_rate_bound(long p) {
    require_odd_prime(p, "cyclo_rate_bound");
    return (int)(3 * (p - 1) / 2);
}

long admissible_prime(long p) {
    require_odd_prime(p, "admissible_prime");
    if (p % 4 != 1)
        throw std::domain_error("admissible_prime: requires p = 1 (mod 4)");
    for (long q = 3; q <= 100000000L; q += 2) {
        if (q % p == 1 && q % 4 == 3 && is_prime(q)) return q;
    }
    throw std::runtime_error("admissible_prime: no admissible prime below 10^8");
}

}  // namespace fuchscodec
