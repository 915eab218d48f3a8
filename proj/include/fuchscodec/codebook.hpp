#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fuchscodec/domain.hpp"
#include "fuchscodec/takeuchi.hpp"

namespace fuchscodec {

enum class Preset { four_nuf, sixteen_nuf };

/// A selected group element: a display label plus its letters over the
/// alphabet a/A = alpha^±1, b/B = beta^±1, g/G = gamma^±1.
struct WordSpec {
    std::string label;
    std::string letters;
};

/// The table rows behind the 4-NUF / 16-NUF constellations.
const std::vector<WordSpec>& preset_words(const std::string& group_label, Preset preset);

struct CodebookEntry {
    int index = 0;
    std::string word;     // display label; the lower-half twin gets a '-' prefix
    UnimodularMap map = UnimodularMap::identity();
    Complex codeword;     // +-map(tau)
};

/// Constellation {±gamma(tau) : gamma in S}. Entry m < N carries +, entry
/// m + N the negative of entry m.
struct Codebook {
    std::string group;
    std::string preset;
    Complex tau{0.0, 1.0};
    std::vector<CodebookEntry> entries;  // size 2N
    std::shared_ptr<const FundamentalDomain> domain;

    int size() const { return (int)entries.size(); }
    int half() const { return (int)entries.size() / 2; }
};

/// Builds the 2N-point codebook; requires tau interior, words distinct
/// modulo sign, and pairwise-distinct codewords.
Codebook build_codebook(const GroupPresentation& group,
                        std::shared_ptr<const FundamentalDomain> domain,
                        const std::vector<WordSpec>& words,
                        Complex tau = Complex(0.0, 1.0),
                        std::string preset_name = "custom");
Codebook build_codebook(const GroupPresentation& group,
                        std::shared_ptr<const FundamentalDomain> domain, Preset preset,
                        Complex tau = Complex(0.0, 1.0));

Complex encode(const Codebook& cb, int message);

enum class DecodeStatus { ok, erasure, reduction_failure };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::ok;
    int message = -1;        // valid when status == ok or a fallback resolved it
    int iterations = 0;      // PRA iterations spent
    bool used_fallback = false;
};

struct DecodeOptions {
    /// Resolve out-of-codebook tiles by nearest codeword instead of erasing.
    bool ml_fallback = false;
    double match_tol = 1e-6;
};

/// Sign-fold to the upper half-plane, point-reduce, invert the returned map
/// and match it against the word set modulo sign, then re-apply the sign.
DecodeResult decode(const Codebook& cb, Complex y, const DecodeOptions& options = {});

struct CodebookMetrics {
    double min_distance = 0.0;  // Euclidean, over all 2N points
    double avg_energy = 0.0;    // mean |codeword|^2 over the N upper points
    int code_depth = 0;         // max PRA depth over the word set
};

CodebookMetrics metrics(const Codebook& cb);

/// Breadth-first closure of the six squared-subgroup generators, counting
/// codewords ±gamma(i) in closed Euclidean balls around the origin.
struct CensusReport {
    std::string group;
    int budget = 0;
    std::vector<std::pair<double, long>> counts;  // (radius, count), input order
    /// Min pairwise distance within the radius-1 set at the tabulated
    /// four-decimal accuracy (coincident rounded points collapsed), plus the
    /// raw binary64 value.
    double min_distance = 0.0;
    double min_distance_exact = 0.0;
};

CensusReport ball_census(const GroupPresentation& group, int budget,
                         const std::vector<double>& radii);

/// First `count` elements of the same closure, in enumeration order; used
/// for the decoding-cost growth experiment.
std::vector<UnimodularMap> enumerate_elements(const GroupPresentation& group, int count);

}  // namespace fuchscodec
