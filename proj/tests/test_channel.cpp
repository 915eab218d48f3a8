#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <memory>

#include "doctest.h"
#include "fuchscodec/channel.hpp"

using namespace fuchscodec;

namespace {
Codebook make_codebook(const std::string& label, Preset preset) {
    GroupPresentation g = synthesize(registry_row(label));
    auto fd = std::make_shared<FundamentalDomain>(build_domain(g, 4));
    return build_codebook(g, fd, preset);
}
}  // namespace

TEST_CASE("transmit: zero sigma is the identity channel") {
    ChannelConfig cfg{0.0, 42, 1};
    Complex x(0.3, 0.7);
    CHECK(transmit(x, cfg, 0) == x);
}

TEST_CASE("transmit noise statistics match sigma (statistical oracle)") {
    ChannelConfig cfg{0.25, 987, 1};
    const int n = 100000;
    double sum_re = 0, sum_im = 0, sq_re = 0, sq_im = 0;
    for (int i = 0; i < n; ++i) {
        Complex eps = transmit(Complex(0, 0), cfg, (uint64_t)i);
        sum_re += eps.real();
        sum_im += eps.imag();
        sq_re += eps.real() * eps.real();
        sq_im += eps.imag() * eps.imag();
    }
    double se = cfg.sigma / std::sqrt((double)n);
    CHECK(std::abs(sum_re / n) < 5 * se);
    CHECK(std::abs(sum_im / n) < 5 * se);
    CHECK(sq_re / n == doctest::Approx(cfg.sigma * cfg.sigma).epsilon(0.03));
    CHECK(sq_im / n == doctest::Approx(cfg.sigma * cfg.sigma).epsilon(0.03));
}

TEST_CASE("per-trial streams are independent of enumeration order") {
    ChannelConfig cfg{0.1, 555, 1};
    Complex a = transmit(Complex(1, 1), cfg, 7);
    Complex b = transmit(Complex(1, 1), cfg, 8);
    CHECK(a != b);
    CHECK(transmit(Complex(1, 1), cfg, 7) == a);  // replayable
}

TEST_CASE("ml_decode: exact codewords and the symmetric tie") {
    Codebook cb = make_codebook("T1", Preset::four_nuf);
    for (int m = 0; m < cb.size(); ++m) CHECK(ml_decode(cb, encode(cb, m)) == m);
    // the origin is equidistant from every +- pair: lowest index wins
    CHECK(ml_decode(cb, Complex(0.0, 0.0)) == 0);
}

TEST_CASE("run_trials: zero noise has no errors and no erasures") {
    Codebook cb = make_codebook("T2", Preset::sixteen_nuf);
    ChannelConfig cfg{0.0, 31337, 500};
    TrialReport rep = run_trials(cb, cfg);
    CHECK(rep.errors == 0);
    CHECK(rep.erasures == 0);
    CHECK(rep.correct == rep.trials);
    CHECK(rep.ser == 0.0);
}

TEST_CASE("run_trials is deterministic in the seed") {
    Codebook cb = make_codebook("T3", Preset::four_nuf);
    ChannelConfig cfg{0.05, 777, 2000};
    TrialReport a = run_trials(cb, cfg);
    TrialReport b = run_trials(cb, cfg);
    CHECK(a.errors == b.errors);
    CHECK(a.erasures == b.erasures);
    CHECK(a.ser == b.ser);
    CHECK(a.ml_agreement == b.ml_agreement);
    CHECK(a.mean_iterations == b.mean_iterations);
}

TEST_CASE("SER grows with sigma (same seed)") {
    Codebook cb = make_codebook("T1", Preset::four_nuf);
    double last = -1.0;
    for (double sigma : {0.001, 0.01, 0.1}) {
        ChannelConfig cfg{sigma, 123456, 4000};
        TrialReport rep = run_trials(cb, cfg);
        double failure = (double)(rep.errors + rep.erasures) / rep.trials;
        CHECK(failure >= last);
        last = failure;
    }
}

TEST_CASE("erasure rate decays as sigma shrinks") {
    // the deepest 16-NUF tiles are ~1e-5 across, so erasures only die out
    // when sigma drops well below that
    Codebook cb = make_codebook("T2", Preset::sixteen_nuf);
    long last = 3001;
    for (double sigma : {1e-2, 1e-5, 1e-8}) {
        ChannelConfig cfg{sigma, 999, 3000};
        TrialReport rep = run_trials(cb, cfg);
        CHECK(rep.erasures <= last);
        last = rep.erasures;
    }
    CHECK(last == 0);  // sigma = 1e-8 sits far inside every tile
}

TEST_CASE("mean iteration count stays near the code depth at low noise") {
    Codebook cb = make_codebook("T1", Preset::four_nuf);
    CodebookMetrics met = metrics(cb);
    ChannelConfig cfg{0.001, 2024, 4000};
    TrialReport rep = run_trials(cb, cfg);
    CHECK(rep.mean_iterations <= met.code_depth + 2.0);
}

TEST_CASE("PRA agrees with ML when it resolves, across every preset") {
    for (const TraceTriple& t : registry()) {
        for (Preset preset : {Preset::four_nuf, Preset::sixteen_nuf}) {
            Codebook cb = make_codebook(t.label, preset);
            ChannelConfig cfg{1e-4, 4242, 2000};
            TrialReport rep = run_trials(cb, cfg);
            CHECK(rep.ml_agreement >= 0.99);
        }
    }
}

TEST_CASE("agreement at sigma = 1e-5 on T2 16-NUF is essentially total") {
    Codebook cb = make_codebook("T2", Preset::sixteen_nuf);
    ChannelConfig cfg{1e-5, 20240915, 10000};
    TrialReport rep = run_trials(cb, cfg);
    CHECK(rep.ml_agreement >= 0.999);
}

TEST_CASE("input validation") {
    Codebook cb = make_codebook("T1", Preset::four_nuf);
    ChannelConfig cfg{0.0, 1, 0};
    CHECK_THROWS_AS(run_trials(cb, cfg), std::invalid_argument);
}
