#include "fuchscodec/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

namespace fuchscodec {

namespace {

const std::vector<WordSpec> k4nuf_default = {{"a^2", "aa"}, {"a*g*a^-1", "agA"}};
const std::vector<WordSpec> k4nuf_t5 = {{"Id", ""}, {"a^2", "aa"}};

const std::map<std::string, std::vector<WordSpec>> k16nuf = {
    {"T1",
     {{"a^4", "aaaa"}, {"a^2*g", "aag"}, {"a^2*b^2", "aabb"}, {"a*g*a^-1*g", "agAg"},
      {"a^3*g*a^-1", "aaagA"}, {"a^2*b*g*b^-1", "aabgB"},
      {"a*g*b*g*b^-1*a^-1", "agbgBA"}, {"a^3*b*g*b^-1*a^-1", "aaabgBA"}}},
    {"T2",
     {{"a^2", "aa"}, {"a^4", "aaaa"}, {"a^2*g", "aag"}, {"a^2*b^2", "aabb"},
      {"a*g*a^-1", "agA"}, {"a*g*a", "aga"}, {"a*g*a^-1*b^2", "agAbb"},
      {"a^3*b*g*b^-1*a^-1", "aaabgBA"}}},
    {"T3",
     {{"a^2", "aa"}, {"a^4", "aaaa"}, {"a^2*g", "aag"}, {"a^3*g*a^-1", "aaagA"},
      {"a^2*b*g*b^-1", "aabgB"}, {"a*g*a^-1*b^2", "agAbb"},
      {"a*g*b*a^-1*b^-1", "agbAB"}, {"a^3*b*g*b^-1*a^-1", "aaabgBA"}}},
    {"T4",
     {{"a^2", "aa"}, {"a^4", "aaaa"}, {"a^2*g", "aag"}, {"a*g*a", "aga"},
      {"a^3*g*a^-1", "aaagA"}, {"g*b*g*b^-1", "gbgB"}, {"a*g*a^-1*b^2", "agAbb"},
      {"a^3*b*g*b^-1*a^-1", "aaabgBA"}}},
    {"T5",
     {{"a^2", "aa"}, {"a^4", "aaaa"}, {"a^2*g", "aag"}, {"a*g*a^-1", "agA"},
      {"a^3*g*a^-1", "aaagA"}, {"a*g*a^-1*b^2", "agAbb"}, {"a*g*a^-1*g", "agAg"},
      {"b*g*b^-1*a^2", "bgBaa"}}},
    {"T6",
     {{"a^2", "aa"}, {"a^4", "aaaa"}, {"a^2*g", "aag"}, {"a*g*a^-1", "agA"},
      {"a^3*g*a^-1", "aaagA"}, {"a*g*a^-1*g", "agAg"}, {"a^2*b*g*b^-1", "aabgB"},
      {"a^3*b*g*b^-1*a^-1", "aaabgBA"}}},
    {"T7",
     {{"a^2", "aa"}, {"a^4", "aaaa"}, {"a*g*a^-1", "agA"}, {"a^2*g", "aag"},
      {"a*g*a^-1*g", "agAg"}, {"a^3*g*a^-1", "aaagA"}, {"a^2*b*g*b^-1", "aabgB"},
      {"a^3*b*g*b^-1*a^-1", "aaabgBA"}}},
};

Mat2L letter(const PresentationExt& p, char ch) {
    switch (ch) {
        case 'a': return p.alpha;
        case 'A': return p.alpha.inverse();
        case 'b': return p.beta;
        case 'B': return p.beta.inverse();
        case 'g': return p.gamma;
        case 'G': return p.gamma.inverse();
        default: throw std::invalid_argument("word letters must be one of aAbBgG");
    }
}

Mat2L word_matrix(const PresentationExt& p, const std::string& letters) {
    Mat2L m = Mat2L::identity();
    for (char ch : letters) m = compose_ext(m, letter(p, ch));
    return m;
}

PresentationExt ext_of(const GroupPresentation& group) {
    for (const TraceTriple& row : registry())
        if (row.label == group.label) return synthesize_ext(row);
    // non-registry presentation: carry the binary64 matrices
    PresentationExt p;
    p.label = group.label;
    p.alpha = Mat2L::from(group.alpha);
    p.beta = Mat2L::from(group.beta);
    p.gamma = Mat2L::from(group.gamma);
    p.e = group.e;
    for (int i = 0; i < 6; ++i) p.squared[i] = Mat2L::from(group.squared[i]);
    return p;
}

}  // namespace

const std::vector<WordSpec>& preset_words(const std::string& group_label, Preset preset) {
    if (preset == Preset::four_nuf)
        return group_label == "T5" ? k4nuf_t5 : k4nuf_default;
    auto it = k16nuf.find(group_label);
    if (it == k16nuf.end())
        throw std::out_of_range("preset_words: unknown group label '" + group_label + "'");
    return it->second;
}

Codebook build_codebook(const GroupPresentation& group,
                        std::shared_ptr<const FundamentalDomain> domain,
                        const std::vector<WordSpec>& words, Complex tau,
                        std::string preset_name) {
    if (!domain) throw std::invalid_argument("build_codebook: missing domain");
    if (!contains(*domain, tau, -1e-6))
        throw std::domain_error("build_codebook: tau is not interior to the domain");
    if (words.empty()) throw std::invalid_argument("build_codebook: empty word list");

    PresentationExt ext = ext_of(group);
    const int n = (int)words.size();
    Codebook cb;
    cb.group = group.label;
    cb.preset = std::move(preset_name);
    cb.tau = tau;
    cb.domain = std::move(domain);
    cb.entries.resize(2 * n);

    std::complex<long double> tl(tau.real(), tau.imag());
    for (int m = 0; m < n; ++m) {
        Mat2L wm = word_matrix(ext, words[m].letters);
        std::complex<long double> cw = apply_ext(wm, tl);
        cb.entries[m] = {m, words[m].label, wm.round(),
                         Complex((double)cw.real(), (double)cw.imag())};
        cb.entries[m + n] = {m + n, "-" + words[m].label, wm.round(),
                             Complex(-(double)cw.real(), -(double)cw.imag())};
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (eq_mod_sign(cb.entries[i].map, cb.entries[j].map, 1e-9))
                throw std::domain_error("build_codebook: words '" + words[i].label +
                                        "' and '" + words[j].label +
                                        "' coincide modulo sign");
    for (int i = 0; i < 2 * n; ++i)
        for (int j = i + 1; j < 2 * n; ++j)
            if (std::abs(cb.entries[i].codeword - cb.entries[j].codeword) <= 1e-9)
                throw std::domain_error("build_codebook: duplicate codewords");
    return cb;
}

Codebook build_codebook(const GroupPresentation& group,
                        std::shared_ptr<const FundamentalDomain> domain, Preset preset,
                        Complex tau) {
    return build_codebook(group, std::move(domain), preset_words(group.label, preset),
                          tau, preset == Preset::four_nuf ? "4nuf" : "16nuf");
}

Complex encode(const Codebook& cb, int message) {
    if (message < 0 || message >= cb.size())
        throw std::out_of_range("encode: message index out of range");
    return cb.entries[message].codeword;
}

DecodeResult decode(const Codebook& cb, Complex y, const DecodeOptions& options) {
    DecodeResult res;
    if (y.imag() == 0.0) {
        res.status = DecodeStatus::erasure;
        return res;
    }
    const bool upper = y.imag() > 0;
    Complex folded = upper ? y : -y;

    UnimodularMap inv = UnimodularMap::identity();
    try {
        ReductionResult red = reduce(*cb.domain, folded);
        res.iterations = red.iterations;
        inv = red.map.inverse();
    } catch (const ReductionFailure&) {
        res.status = DecodeStatus::reduction_failure;
        return res;
    }

    const int n = cb.half();
    for (int m = 0; m < n; ++m) {
        if (eq_mod_sign(cb.entries[m].map, inv, options.match_tol)) {
            res.message = upper ? m : m + n;
            return res;
        }
    }
    if (options.ml_fallback) {
        int best = 0;
        double bd = std::abs(y - cb.entries[0].codeword);
        for (int m = 1; m < cb.size(); ++m) {
            double d = std::abs(y - cb.entries[m].codeword);
            if (d < bd) {
                bd = d;
                best = m;
            }
        }
        res.message = best;
        res.used_fallback = true;
        return res;
    }
    res.status = DecodeStatus::erasure;
    return res;
}

CodebookMetrics metrics(const Codebook& cb) {
    CodebookMetrics out;
    double mind = std::numeric_limits<double>::infinity();
    for (int i = 0; i < cb.size(); ++i)
        for (int j = i + 1; j < cb.size(); ++j)
            mind = std::min(mind, std::abs(cb.entries[i].codeword - cb.entries[j].codeword));
    out.min_distance = mind;
    double energy = 0.0;
    for (int m = 0; m < cb.half(); ++m) energy += std::norm(cb.entries[m].codeword);
    out.avg_energy = energy / cb.half();
    int dmax = 0;
    for (int m = 0; m < cb.half(); ++m)
        dmax = std::max(dmax, depth(*cb.domain, cb.entries[m].map, cb.tau));
    out.code_depth = dmax;
    return out;
}

namespace {

// Enumeration order: breadth-first closure over the six squared generators
// and their inverses (duplicates removed modulo sign), stopping exactly at
// the requested count.
std::vector<Mat2L> closure(const PresentationExt& ext, int count) {
    std::vector<Mat2L> alphabet;
    {
        std::vector<Mat2L> raw;
        for (const Mat2L& g : ext.squared) raw.push_back(g);
        for (const Mat2L& g : ext.squared) raw.push_back(g.inverse());
        for (const Mat2L& g : raw) {
            bool dup = false;
            for (const Mat2L& o : alphabet) {
                Mat2L cg = canonical_ext(g), co = canonical_ext(o);
                long double dm = std::max(std::max(fabsl(cg.a - co.a), fabsl(cg.b - co.b)),
                                          std::max(fabsl(cg.c - co.c), fabsl(cg.d - co.d)));
                if (dm < 1e-9L) {
                    dup = true;
                    break;
                }
            }
            if (!dup) alphabet.push_back(g);
        }
    }

    ElementTable table;
    table.insert(Mat2L::identity());
    std::vector<Mat2L> elems;
    std::vector<Mat2L> frontier{Mat2L::identity()};
    while ((int)elems.size() < count && !frontier.empty()) {
        std::vector<Mat2L> next;
        for (const Mat2L& m : frontier) {
            for (const Mat2L& g : alphabet) {
                if ((int)elems.size() >= count) break;
                Mat2L nm = compose_ext(m, g);
                if (table.insert(nm)) {
                    next.push_back(nm);
                    elems.push_back(nm);
                }
            }
            if ((int)elems.size() >= count) break;
        }
        frontier = std::move(next);
    }
    return elems;
}

}  // namespace

std::vector<UnimodularMap> enumerate_elements(const GroupPresentation& group, int count) {
    std::vector<UnimodularMap> out;
    for (const Mat2L& m : closure(ext_of(group), count)) out.push_back(m.round());
    return out;
}

CensusReport ball_census(const GroupPresentation& group, int budget,
                         const std::vector<double>& radii) {
    if (budget < 6) throw std::invalid_argument("ball_census: budget must be >= 6");
    for (double r : radii)
        if (!(r > 0)) throw std::invalid_argument("ball_census: radii must be positive");

    std::vector<Mat2L> elems = closure(ext_of(group), budget);
    std::complex<long double> tau(0.0L, 1.0L);
    std::vector<Complex> points;
    points.reserve(2 * elems.size());
    for (const Mat2L& m : elems) {
        std::complex<long double> p = apply_ext(m, tau);
        points.emplace_back((double)p.real(), (double)p.imag());
        points.emplace_back(-(double)p.real(), -(double)p.imag());
    }

    CensusReport rep;
    rep.group = group.label;
    rep.budget = budget;
    for (double r : radii) {
        long cnt = 0;
        for (const Complex& p : points)
            if (std::abs(p) <= r) ++cnt;
        rep.counts.emplace_back(r, cnt);
    }

    std::vector<Complex> ball1;
    for (const Complex& p : points)
        if (std::abs(p) <= 1.0) ball1.push_back(p);
    double mind = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < ball1.size(); ++i)
        for (size_t j = i + 1; j < ball1.size(); ++j)
            mind = std::min(mind, std::abs(ball1[i] - ball1[j]));
    rep.min_distance_exact = ball1.size() > 1 ? mind : 0.0;

    // four-decimal tabulation accuracy: round, collapse coincident points
    std::set<std::pair<long, long>> rounded;
    for (const Complex& p : ball1)
        rounded.emplace(llround(p.real() * 1e4), llround(p.imag() * 1e4));
    double mind4 = std::numeric_limits<double>::infinity();
    for (auto it = rounded.begin(); it != rounded.end(); ++it)
        for (auto jt = std::next(it); jt != rounded.end(); ++jt) {
            double dx = (it->first - jt->first) * 1e-4;
            double dy = (it->second - jt->second) * 1e-4;
            mind4 = std::min(mind4, std::hypot(dx, dy));
        }
    rep.min_distance = rounded.size() > 1 ? mind4 : 0.0;
    return rep;
}

}  // namespace fuchscodec
