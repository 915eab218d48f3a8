#pragma once

#include <cstdint>

#include "fuchscodec/codebook.hpp"

namespace fuchscodec {

/// Deterministic counter-based random stream: every (seed, trial) pair owns
/// an independent substream, so parallel and serial runs agree bit for bit.
class TrialRng {
public:
    TrialRng(uint64_t seed, uint64_t trial);
    uint64_t next_u64();
    /// Uniform in (0, 1].
    double next_unit();
    /// Standard normal pair via Box-Muller.
    void next_gaussian_pair(double& g1, double& g2);
    /// Uniform integer in [0, n).
    int next_below(int n);

private:
    uint64_t state_;
};

struct ChannelConfig {
    double sigma = 0.0;   // noise standard deviation per real dimension
    uint64_t seed = 0;
    int trials = 1;
};

/// y = x + (g1 + i g2) sigma, deterministic per (seed, trial_index).
Complex transmit(Complex x, const ChannelConfig& config, uint64_t trial_index);

/// Brute-force maximum-likelihood reference: argmin |y - codeword|, ties to
/// the lowest index.
int ml_decode(const Codebook& cb, Complex y);

struct TrialReport {
    long trials = 0;
    long correct = 0;
    long errors = 0;     // decoded to a wrong message
    long erasures = 0;   // PRA left the codebook (or failed to converge)
    double ser = 0.0;    // errors / trials
    /// Agreement between the PRA decision and ML over the trials the PRA
    /// resolved (erasures excluded).
    double ml_agreement = 0.0;
    double mean_iterations = 0.0;
};

struct TrialOptions {
    bool ml_fallback = false;  // forwarded to decode()
};

/// Uniform random message per trial, transmit, PRA-decode, ML-decode for the
/// agreement statistic. Reproducible from the seed.
TrialReport run_trials(const Codebook& cb, const ChannelConfig& config,
                       const TrialOptions& options = {});

}  // namespace fuchscodec
