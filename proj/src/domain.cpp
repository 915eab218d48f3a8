#include "fuchscodec/domain.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_map>

namespace fuchscodec {

namespace {

using CL = std::complex<long double>;

// Half-plane map sending center to i: z -> (z - p) / q for center = p + qi.
Mat2L conjugator_for(Complex center) {
    if (!(center.imag() > 0))
        throw DomainBuildError("build_domain: center must lie in the upper half-plane");
    long double q = center.imag(), p = center.real();
    long double s = sqrtl(q);
    return Mat2L{1.0L / s, -p / s, 0.0L, s};
}

// SU(1,1) entries of (cayley . n . g . n^-1 . cayley^-1).
struct DiskMat {
    CL A, B;
};

DiskMat to_disk_mat(const Mat2L& n, const Mat2L& ninv, const Mat2L& g) {
    Mat2L m = compose_ext(n, compose_ext(g, ninv));
    CL A((m.a + m.d) / 2.0L, (m.b - m.c) / 2.0L);
    CL B((m.a - m.d) / 2.0L, -(m.b + m.c) / 2.0L);
    return {A, B};
}

CL disk_apply(const CL& A, const CL& B, const CL& w) {
    return (A * w + B) / (std::conj(B) * w + std::conj(A));
}

struct Candidate {
    Mat2L mat;
    DiskMat disk;
    CL center;
    long double radius;
};

bool is_identity_ext(const Mat2L& m) {
    Mat2L c = canonical_ext(m);
    return std::max(std::max(fabsl(c.a - 1), fabsl(c.b)),
                    std::max(fabsl(c.c), fabsl(c.d - 1))) < 1e-9L;
}

struct EnumResult {
    std::vector<Candidate> candidates;
    bool center_fixed = false;  // a non-identity word fixes the center
};

// BFS over the alphabet; parity[i] marks the (alpha, beta) exponent parity of
// letter i, and only words with even parity become candidates. With an empty
// parity vector every non-identity word is kept.
EnumResult enumerate_candidates(const std::vector<Mat2L>& alphabet,
                                const std::vector<std::array<int, 2>>& parity,
                                int depth, const Mat2L& conj, const Mat2L& conj_inv) {
    EnumResult out;
    ElementTable seen;
    seen.insert(Mat2L::identity());
    struct Node {
        Mat2L m;
        std::array<int, 2> par;
    };
    std::vector<Node> frontier{{Mat2L::identity(), {0, 0}}};
    for (int level = 0; level < depth; ++level) {
        std::vector<Node> next;
        for (const Node& node : frontier) {
            for (size_t gi = 0; gi < alphabet.size(); ++gi) {
                Mat2L nm = compose_ext(node.m, alphabet[gi]);
                if (!seen.insert(nm)) continue;
                std::array<int, 2> par{0, 0};
                if (!parity.empty())
                    par = {(node.par[0] + parity[gi][0]) % 2,
                           (node.par[1] + parity[gi][1]) % 2};
                next.push_back({nm, par});
                if (par[0] != 0 || par[1] != 0) continue;
                DiskMat dm = to_disk_mat(conj, conj_inv, nm);
                if (std::abs(dm.B) < 1e-9L) {
                    if (!is_identity_ext(nm)) out.center_fixed = true;
                    continue;  // rotation about the center, no isometric circle
                }
                CL c = -std::conj(dm.A) / std::conj(dm.B);
                out.candidates.push_back({nm, dm, c, 1.0L / std::abs(dm.B)});
            }
        }
        frontier = std::move(next);
    }
    return out;
}

struct SweepResult {
    std::vector<int> order;   // wall candidate indices in boundary order
    bool closed = true;
};

SweepResult sweep_walls(const std::vector<Candidate>& cands, int rays) {
    SweepResult res;
    std::vector<int> hit(rays, -1);
    const size_t n = cands.size();
    std::vector<double> cx(n), cy(n), q(n);
    for (size_t j = 0; j < n; ++j) {
        cx[j] = (double)cands[j].center.real();
        cy[j] = (double)cands[j].center.imag();
        q[j] = cx[j] * cx[j] + cy[j] * cy[j] -
               (double)(cands[j].radius * cands[j].radius);
    }
    for (int i = 0; i < rays; ++i) {
        double phi = 2.0 * M_PI * (i + 0.5) / rays;
        double ux = std::cos(phi), uy = std::sin(phi);
        double best = 1.0;
        int bj = -1;
        for (size_t j = 0; j < n; ++j) {
            double dot = ux * cx[j] + uy * cy[j];
            if (dot <= 0) continue;
            double disc = dot * dot - q[j];
            if (disc <= 0) continue;
            double t = dot - std::sqrt(disc);
            if (t < best) {
                best = t;
                bj = (int)j;
            }
        }
        hit[i] = bj;
        if (bj < 0) res.closed = false;
    }
    // boundary order, consecutive duplicates collapsed
    std::vector<int> seq;
    for (int j : hit) {
        if (j >= 0 && (seq.empty() || seq.back() != j)) seq.push_back(j);
    }
    while (seq.size() > 1 && seq.front() == seq.back()) seq.pop_back();
    res.order = std::move(seq);
    return res;
}

Complex vertex_between(const GeodesicCircle& c1, const GeodesicCircle& c2) {
    Complex delta = c2.center - c1.center;
    double dd = std::abs(delta);
    if (dd < 1e-14 || dd > c1.radius + c2.radius || dd < std::abs(c1.radius - c2.radius))
        throw DomainBuildError("build_domain: consecutive walls do not meet");
    double aa = (c1.radius * c1.radius - c2.radius * c2.radius + dd * dd) / (2 * dd);
    double hh = std::sqrt(std::max(c1.radius * c1.radius - aa * aa, 0.0));
    Complex base = c1.center + aa * delta / dd;
    Complex off = Complex(0, 1) * (hh / dd) * delta;
    Complex p1 = base + off, p2 = base - off;
    return std::abs(p1) < std::abs(p2) ? p1 : p2;  // the intersection inside the disk
}

FundamentalDomain assemble(const std::vector<Candidate>& cands, const SweepResult& sweep,
                           const Mat2L& conj, Complex center, int depth,
                           const BuildOptions& options, std::string notes) {
    FundamentalDomain fd;
    fd.model = DomainModel::disk;
    fd.conjugator = conj.round();
    fd.center = center;
    fd.tol = options.tol;
    fd.search_depth = depth;
    fd.max_iter = 64 + 4 * depth;
    fd.notes = std::move(notes);

    std::vector<int> order = sweep.order;
    // one boundary arc per wall expected; re-entries would corrupt the
    // vertex chain
    {
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw DomainBuildError("build_domain: a wall contributes several arcs");
    }

    for (int idx : order) {
        const Candidate& c = cands[idx];
        Wall w;
        w.circle = GeodesicCircle{Complex((double)c.center.real(), (double)c.center.imag()),
                                  (double)c.radius};
        w.side = WallSide::keep_exterior;
        w.pairing = c.mat.round();
        w.disk_a = Complex((double)c.disk.A.real(), (double)c.disk.A.imag());
        w.disk_b = Complex((double)c.disk.B.real(), (double)c.disk.B.imag());
        fd.walls.push_back(w);
        fd.walls_ext.push_back(
            WallExt{c.center, c.radius, c.disk.A, c.disk.B, c.mat, w.side});
    }

    fd.finite_area = sweep.closed && fd.walls.size() >= 3;
    if (fd.finite_area) {
        size_t k = fd.walls.size();
        std::vector<Complex> verts(k);
        std::vector<GeodesicCircle> edges(k);
        // vertex j joins wall j and wall j+1; the edge from vertex j to
        // vertex j+1 is carried by wall j+1
        for (size_t j = 0; j < k; ++j)
            verts[j] = vertex_between(fd.walls[j].circle, fd.walls[(j + 1) % k].circle);
        for (size_t j = 0; j < k; ++j) edges[j] = fd.walls[(j + 1) % k].circle;
        fd.vertices = verts;
        fd.area = polygon_area(verts, edges);
    }
    return fd;
}

FundamentalDomain build_impl(const std::vector<Mat2L>& alphabet,
                             const std::vector<std::array<int, 2>>& parity,
                             int search_depth, Complex center,
                             const BuildOptions& options) {
    if (search_depth < 1)
        throw DomainBuildError("build_domain: search_depth must be >= 1");
    std::string notes;
    Complex c = center;
    for (int attempt = 0;; ++attempt) {
        Mat2L conj = conjugator_for(c);
        Mat2L conj_inv = conj.inverse();
        EnumResult en = enumerate_candidates(alphabet, parity, search_depth, conj, conj_inv);
        if (en.center_fixed) {
            if (attempt >= options.max_center_retries)
                throw DomainBuildError(
                    "build_domain: center is fixed by a group element after retries");
            notes += "center fixed by a candidate; perturbed; ";
            c += Complex(3.7e-3 * (attempt + 1), 2.3e-3 * (attempt + 1));
            continue;
        }
        if (en.candidates.empty())
            throw DomainBuildError("build_domain: no candidate isometric circles");
        SweepResult sweep = sweep_walls(en.candidates, options.rays);
        return assemble(en.candidates, sweep, conj, c, search_depth, options, notes);
    }
}

std::pair<int, long double> most_violated(const std::vector<WallExt>& walls, const CL& w) {
    int best = -1;
    long double viol = -1e30L;
    for (size_t j = 0; j < walls.size(); ++j) {
        long double v = walls[j].radius - std::abs(w - walls[j].center);
        if (walls[j].side == WallSide::keep_interior) v = -v;
        if (v > viol) {
            viol = v;
            best = (int)j;
        }
    }
    return {best, viol};
}

std::vector<WallExt> ext_walls_of(const FundamentalDomain& fd) {
    if (!fd.walls_ext.empty()) return fd.walls_ext;
    std::vector<WallExt> out;
    out.reserve(fd.walls.size());
    for (const Wall& w : fd.walls)
        out.push_back(WallExt{CL(w.circle.center.real(), w.circle.center.imag()),
                              w.circle.radius, CL(w.disk_a.real(), w.disk_a.imag()),
                              CL(w.disk_b.real(), w.disk_b.imag()),
                              Mat2L::from(w.pairing), w.side});
    return out;
}

CL to_disk_ext(const FundamentalDomain& fd, CL z) {
    Mat2L n = Mat2L::from(fd.conjugator);
    CL zn = apply_ext(n, z);
    return (zn - CL(0, 1)) / (zn + CL(0, 1));
}

}  // namespace

Complex FundamentalDomain::to_disk(Complex z) const {
    CL w = to_disk_ext(*this, CL(z.real(), z.imag()));
    return Complex((double)w.real(), (double)w.imag());
}

Complex FundamentalDomain::to_half(Complex w) const {
    CL wl(w.real(), w.imag());
    CL zn = CL(0, 1) * (CL(1, 0) + wl) / (CL(1, 0) - wl);
    CL z = apply_ext(Mat2L::from(conjugator).inverse(), zn);
    return Complex((double)z.real(), (double)z.imag());
}

FundamentalDomain build_domain(const GroupPresentation& group, int search_depth,
                               Complex center, const BuildOptions& options) {
    // Re-synthesize at extended precision when the presentation is one of the
    // registry groups; otherwise work from the given binary64 matrices.
    Mat2L alpha, beta, gamma;
    bool from_registry = false;
    for (const TraceTriple& row : registry()) {
        if (row.label == group.label) {
            PresentationExt ext = synthesize_ext(row);
            alpha = ext.alpha;
            beta = ext.beta;
            gamma = ext.gamma;
            from_registry = true;
            break;
        }
    }
    if (!from_registry) {
        alpha = Mat2L::from(group.alpha);
        beta = Mat2L::from(group.beta);
        gamma = Mat2L::from(group.gamma);
    }
    std::vector<Mat2L> alphabet = {alpha, alpha.inverse(), beta,
                                   beta.inverse(), gamma, gamma.inverse()};
    std::vector<std::array<int, 2>> parity = {{1, 0}, {1, 0}, {0, 1},
                                              {0, 1}, {0, 0}, {0, 0}};
    return build_impl(alphabet, parity, search_depth, center, options);
}

FundamentalDomain build_domain_from_generators(const std::vector<UnimodularMap>& generators,
                                               int search_depth, Complex center,
                                               const BuildOptions& options) {
    if (generators.empty())
        throw DomainBuildError("build_domain: need at least one generator");
    std::vector<Mat2L> alphabet;
    for (const UnimodularMap& g : generators) {
        alphabet.push_back(Mat2L::from(g));
        alphabet.push_back(Mat2L::from(g).inverse());
    }
    return build_impl(alphabet, {}, search_depth, center, options);
}

bool contains_disk(const FundamentalDomain& domain, Complex w, double tol) {
    CL wl(w.real(), w.imag());
    for (const Wall& wall : domain.walls) {
        long double v = (long double)wall.circle.radius -
                        std::abs(wl - CL(wall.circle.center.real(), wall.circle.center.imag()));
        if (wall.side == WallSide::keep_interior) v = -v;
        if (v > tol) return false;
    }
    return true;
}

bool contains(const FundamentalDomain& domain, Complex z, double tol) {
    if (!(z.imag() > 0)) return false;
    return contains_disk(domain, domain.to_disk(z), tol);
}

ReductionResult reduce(const FundamentalDomain& domain, std::complex<long double> z,
                       const ReduceOptions& options, Mat2L* map_out) {
    if (!(z.imag() > 0))
        throw std::domain_error("reduce: point must lie in the upper half-plane");
    const std::vector<WallExt> walls = ext_walls_of(domain);
    if (walls.empty()) throw ReductionFailure("reduce: domain has no walls");
    const double tol = options.tol > 0 ? options.tol : domain.tol;
    const int max_iter = options.max_iter > 0 ? options.max_iter : domain.max_iter;

    CL w = to_disk_ext(domain, z);
    Mat2L acc = Mat2L::identity();
    int it = 0;
    while (true) {
        auto [j, viol] = most_violated(walls, w);
        if (j < 0 || viol <= (long double)tol) break;
        if (it >= max_iter)
            throw ReductionFailure("reduce: no convergence after " +
                                   std::to_string(max_iter) + " iterations");
        const WallExt& wall = walls[j];
        w = disk_apply(wall.disk_a, wall.disk_b, w);
        acc = compose_ext(wall.pairing, acc);
        ++it;
    }
    ReductionResult res;
    CL pt = apply_ext(acc, z);
    res.point = Complex((double)pt.real(), (double)pt.imag());
    res.map = acc.round();
    res.iterations = it;
    if (map_out) *map_out = acc;
    return res;
}

ReductionResult reduce(const FundamentalDomain& domain, Complex z,
                       const ReduceOptions& options) {
    return reduce(domain, std::complex<long double>(z.real(), z.imag()), options);
}

int depth(const FundamentalDomain& domain, const UnimodularMap& g, Complex tau) {
    if (!contains(domain, tau, domain.tol))
        throw std::domain_error("depth: tau must lie in the domain");
    return reduce(domain, g.apply(tau)).iterations;
}

}  // namespace fuchscodec
