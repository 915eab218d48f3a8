#include "fuchscodec/channel.hpp"

#include <cmath>

namespace fuchscodec {

namespace {
uint64_t splitmix64(uint64_t& s) {
    uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace

TrialRng::TrialRng(uint64_t seed, uint64_t trial) {
    // mix the pair into one state
    state_ = seed;
    uint64_t a = splitmix64(state_);
    state_ ^= trial * 0xD1342543DE82EF95ULL + a;
    splitmix64(state_);
}

uint64_t TrialRng::next_u64() { return splitmix64(state_); }

double TrialRng::next_unit() {
    return ((next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

void TrialRng::next_gaussian_pair(double& g1, double& g2) {
    double u1 = next_unit();
    double u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    g1 = r * std::cos(2.0 * M_PI * u2);
    g2 = r * std::sin(2.0 * M_PI * u2);
}

int TrialRng::next_below(int n) {
    return (int)(next_u64() % (uint64_t)n);  // n << 2^64, bias negligible
}

Complex transmit(Complex x, const ChannelConfig& config, uint64_t trial_index) {
    if (config.sigma == 0.0) return x;
    TrialRng rng(config.seed, trial_index);
    rng.next_u64();  // the message draw slot; keeps transmit aligned with run_trials
    double g1, g2;
    rng.next_gaussian_pair(g1, g2);
    return x + Complex(g1 * config.sigma, g2 * config.sigma);
}

int ml_decode(const Codebook& cb, Complex y) {
    int best = 0;
    double bd = std::abs(y - cb.entries[0].codeword);
    for (int m = 1; m < cb.size(); ++m) {
        double d = std::abs(y - cb.entries[m].codeword);
        if (d < bd) {
            bd = d;
            best = m;
        }
    }
    return best;
}

TrialReport run_trials(const Codebook& cb, const ChannelConfig& config,
                       const TrialOptions& options) {
    if (config.trials < 1)
        throw std::invalid_argument("run_trials: trials must be >= 1");
    TrialReport rep;
    rep.trials = config.trials;
    long agree = 0, resolved = 0;
    long iter_sum = 0;
    DecodeOptions dopt;
    dopt.ml_fallback = options.ml_fallback;
    for (long i = 0; i < config.trials; ++i) {
        TrialRng rng(config.seed, (uint64_t)i);
        int message = (int)(rng.next_u64() % (uint64_t)cb.size());
        Complex x = encode(cb, message);
        Complex y = x;
        if (config.sigma != 0.0) {
            double g1, g2;
            rng.next_gaussian_pair(g1, g2);
            y += Complex(g1 * config.sigma, g2 * config.sigma);
        }
        DecodeResult dec = decode(cb, y, dopt);
        iter_sum += dec.iterations;
        int ml = ml_decode(cb, y);
        if (dec.status == DecodeStatus::ok) {
            if (!dec.used_fallback) {
                // agreement statistic covers genuine PRA decisions only
                ++resolved;
                if (dec.message == ml) ++agree;
            }
            if (dec.message == message) {
                ++rep.correct;
            } else {
                ++rep.errors;
            }
        } else {
            ++rep.erasures;
        }
    }
    rep.ser = (double)rep.errors / rep.trials;
    rep.ml_agreement = resolved > 0 ? (double)agree / resolved : 1.0;
    rep.mean_iterations = (double)iter_sum / rep.trials;
    return rep;
}

}  // namespace fuchscodec
