#pragma once

#include <complex>
#include <string>
#include <vector>

#include "fuchscodec/mobius.hpp"
#include "fuchscodec/takeuchi.hpp"

namespace fuchscodec {

struct ReductionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainBuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class WallSide { keep_exterior, keep_interior };

/// One bounding isometric circle of the fundamental domain, in the working
/// (disk) model, together with the group element it belongs to. disk_a /
/// disk_b are the SU(1,1) entries of the conjugated pairing, cached for the
/// reduction loop: w -> (A w + B) / (conj(B) w + conj(A)).
struct Wall {
    GeodesicCircle circle;
    WallSide side = WallSide::keep_exterior;
    UnimodularMap pairing = UnimodularMap::identity();
    Complex disk_a, disk_b;
};

/// Extended-precision mirror of a Wall, carried alongside for the reduction
/// loop (see ext.hpp for why).
struct WallExt {
    std::complex<long double> center;
    long double radius = 1;
    std::complex<long double> disk_a, disk_b;
    Mat2L pairing;
    WallSide side = WallSide::keep_exterior;
};

enum class DomainModel { half_plane, disk };

/// Fundamental domain as an arrangement of walls in the unit-disk model
/// centered at the image of `center`. `conjugator` is the half-plane map
/// sending center to i (identity when center == i); the fixed Cayley
/// transform then carries i to 0.
struct FundamentalDomain {
    DomainModel model = DomainModel::disk;
    UnimodularMap conjugator = UnimodularMap::identity();
    Complex center{0.0, 1.0};
    std::vector<Wall> walls;
    std::vector<WallExt> walls_ext;  // same order as walls
    double tol = 1e-9;
    int search_depth = 0;
    int max_iter = 64;

    bool finite_area = false;
    double area = 0.0;                  // Gauss-Bonnet value when finite
    std::vector<Complex> vertices;      // disk coordinates, in boundary order
    std::string notes;                  // construction diagnostics

    /// Disk coordinates of a half-plane point.
    Complex to_disk(Complex z) const;
    /// Half-plane coordinates of a disk point.
    Complex to_half(Complex w) const;
};

struct BuildOptions {
    double tol = 1e-9;
    int rays = 16384;
    int max_center_retries = 5;
};

/// Dirichlet/Ford construction for the squared subgroup of a (1;e) group.
/// Candidate pairings are the even-parity words of length <= search_depth
/// over {alpha, beta, gamma} and inverses (exactly the elements of
/// {+-Id} T^(2) within that ball); every non-identity candidate acquires an
/// isometric circle after conjugating the action to the disk about `center`,
/// and the walls are the circles that bound the intersection of exteriors.
/// A candidate fixing the center triggers a perturb-and-retry, recorded in
/// notes; a region reaching the disk boundary is flagged infinite-area.
FundamentalDomain build_domain(const GroupPresentation& group, int search_depth = 4,
                               Complex center = Complex(0.0, 1.0),
                               const BuildOptions& options = {});

/// Same construction from an explicit generator list (words over the given
/// maps and their inverses, no parity filter). Used for generic subgroups,
/// e.g. a single hyperbolic generator, where the region may be unbounded.
FundamentalDomain build_domain_from_generators(const std::vector<UnimodularMap>& generators,
                                               int search_depth,
                                               Complex center = Complex(0.0, 1.0),
                                               const BuildOptions& options = {});

/// Closure membership: every wall constraint within tol (boundary inside).
bool contains(const FundamentalDomain& domain, Complex z, double tol);
bool contains_disk(const FundamentalDomain& domain, Complex w, double tol);

struct ReductionResult {
    Complex point;              // reduced point, half-plane coordinates
    UnimodularMap map = UnimodularMap::identity();  // map(input) = point
    int iterations = 0;
};

struct ReduceOptions {
    double tol = 1e-9;
    int max_iter = 0;  // 0: use the domain default 64 + 4 * search_depth
};

/// Point reduction: repeatedly applies the most-violated wall's pairing
/// until the tracked disk point satisfies every constraint. Throws
/// ReductionFailure past max_iter.
ReductionResult reduce(const FundamentalDomain& domain, Complex z,
                       const ReduceOptions& options = {});

/// Extended-precision entry point; `map_out`, when given, receives the
/// unrounded reduction map.
ReductionResult reduce(const FundamentalDomain& domain, std::complex<long double> z,
                       const ReduceOptions& options = {}, Mat2L* map_out = nullptr);

/// PRA iteration count for g, measured at the interior point tau.
int depth(const FundamentalDomain& domain, const UnimodularMap& g, Complex tau);

}  // namespace fuchscodec
