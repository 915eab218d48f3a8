#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "fuchscodec/mobius.hpp"

namespace fuchscodec {

/// Extended-precision 2x2 real matrix used by the geometry core. Long words
/// condition the point-reduction roundtrip like e^d (d the hyperbolic
/// distance moved), so the tessellation pipeline carries 64-bit-mantissa
/// matrices internally and rounds to the binary64 public types at the API
/// boundary.
struct Mat2L {
    long double a = 1, b = 0, c = 0, d = 1;

    static Mat2L identity() { return {}; }
    static Mat2L from(const UnimodularMap& m) { return {m.a, m.b, m.c, m.d}; }

    Mat2L inverse() const { return {d, -b, -c, a}; }
    Mat2L operator-() const { return {-a, -b, -c, -d}; }
    long double trace() const { return a + d; }
    long double max_abs() const {
        return std::max(std::max(fabsl(a), fabsl(b)), std::max(fabsl(c), fabsl(d)));
    }
    UnimodularMap round() const {
        return UnimodularMap((double)a, (double)b, (double)c, (double)d);
    }
};

inline Mat2L compose_ext(const Mat2L& m1, const Mat2L& m2) {
    Mat2L m{m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
            m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
    long double det = m.a * m.d - m.b * m.c;
    long double scale = fabsl(m.a * m.d) + fabsl(m.b * m.c) + 1.0L;
    if (fabsl(det - 1.0L) < 0.5L && scale * 1e-17L < 0.1L) {
        long double s = sqrtl(det);
        m.a /= s; m.b /= s; m.c /= s; m.d /= s;
    }
    return m;
}

inline std::complex<long double> apply_ext(const Mat2L& m, std::complex<long double> z) {
    return (m.a * z + m.b) / (m.c * z + m.d);
}

inline Mat2L canonical_ext(const Mat2L& m) {
    for (long double lead : {m.c, m.d, m.a, m.b}) {
        if (fabsl(lead) > 1e-9L) return lead > 0 ? m : -m;
    }
    return m;
}

/// Deduplication table for group elements modulo sign. Buckets on relatively
/// quantized canonical entries; bucket mates are compared through
/// q = m2^-1 m1, merged when q is within merge_tol of +-Id. The group test
/// is scale-free: entry-wise comparisons would either miss duplicates
/// computed along different word paths (their drift grows with depth) or
/// merge distinct near-parallel deep elements.
class ElementTable {
public:
    explicit ElementTable(long double merge_tol = 1e-4L) : merge_tol_(merge_tol) {}

    bool insert(const Mat2L& m) {
        Mat2L c = canonical_ext(m);
        long double s = std::max(1.0L, c.max_abs());
        const long double grid = 1e-6L;
        std::array<long long, 4> k0 = {llroundl(c.a / (s * grid)), llroundl(c.b / (s * grid)),
                                       llroundl(c.c / (s * grid)), llroundl(c.d / (s * grid))};
        for (long long da = -1; da <= 1; ++da)
            for (long long db = -1; db <= 1; ++db)
                for (long long dc = -1; dc <= 1; ++dc)
                    for (long long dd = -1; dd <= 1; ++dd) {
                        auto it = table_.find(hash_key({k0[0] + da, k0[1] + db,
                                                        k0[2] + dc, k0[3] + dd}));
                        if (it == table_.end()) continue;
                        for (int idx : it->second)
                            if (same_element(items_[idx], c)) return false;
                    }
        items_.push_back(c);
        table_[hash_key(k0)].push_back((int)items_.size() - 1);
        return true;
    }

    size_t size() const { return items_.size(); }

private:
    bool same_element(const Mat2L& a, const Mat2L& b) const {
        Mat2L q = compose_ext(a.inverse(), b);
        long double dp = std::max(std::max(fabsl(q.a - 1), fabsl(q.b)),
                                  std::max(fabsl(q.c), fabsl(q.d - 1)));
        long double dm = std::max(std::max(fabsl(q.a + 1), fabsl(q.b)),
                                  std::max(fabsl(q.c), fabsl(q.d + 1)));
        return std::min(dp, dm) <= merge_tol_;
    }
    static uint64_t hash_key(const std::array<long long, 4>& k) {
        uint64_t h = 1469598103934665603ULL;
        for (long long v : k) {
            h ^= (uint64_t)v;
            h *= 1099511628211ULL;
        }
        return h;
    }
    long double merge_tol_;
    std::unordered_map<uint64_t, std::vector<int>> table_;
    std::vector<Mat2L> items_;
};

}  // namespace fuchscodec
