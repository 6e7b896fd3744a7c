#include "dqpt/errors.hpp"
#include "dqpt/zeros.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace dqpt;

namespace {

constexpr double pi = std::numbers::pi;

// Independent brute-force reference for the matched field, on plain radians.
double matched_field(double gi, double k) {
    return -(1.0 + gi * std::cos(k)) / (gi + std::cos(k));
}

} // namespace

TEST(HfForMode, ZeroPrequenchField) {
    for (const Momentum& k : momentum_grid(40, Sector::EvenAPBC)) {
        EXPECT_DOUBLE_EQ(hf_for_mode(0.0, k).value(), -1.0 / k.cos());
    }
}

TEST(HfForMode, CriticalPrequenchGivesMinusOne) {
    for (const Momentum& k : momentum_grid(40, Sector::EvenAPBC)) {
        EXPECT_DOUBLE_EQ(hf_for_mode(1.0, k).value(), -1.0);
    }
}

TEST(HfForMode, HalfPi) {
    for (double g : {0.25, -0.5, 3.0}) {
        EXPECT_DOUBLE_EQ(hf_for_mode(g, Momentum(1, 2)).value(), -1.0 / g);
    }
    EXPECT_TRUE(hf_for_mode(0.0, Momentum(1, 2)).is_unbounded());
    EXPECT_TRUE(hf_for_mode(0.5, Momentum(2, 3)).is_unbounded());
}

TEST(HfForMode, AgreesWithRadiansReference) {
    for (const Momentum& k : momentum_grid(100, Sector::EvenAPBC)) {
        for (double g : {-2.0, -0.4, 0.3, 1.7}) {
            const double ref = matched_field(g, k.radians());
            EXPECT_NEAR(hf_for_mode(g, k).value(), ref, 1e-10 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST(HfForMode, IsAnInvolution) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> field(-4.0, 4.0);
    for (int trial = 0; trial < 5000; ++trial) {
        const Momentum k(2 * (trial % 100) + 1, 200);
        const double g = field(rng);
        const ExtendedReal gf = hf_for_mode(g, k);
        if (gf.is_unbounded() || std::abs(gf.value()) > 1e4) continue;
        const ExtendedReal back = hf_for_mode(gf.value(), k);
        ASSERT_TRUE(back.is_finite());
        // conditioning of the Mobius map grows with |gf|, |g| and 1/sin^2 k
        const double scale = std::max(1.0, gf.value() * gf.value()) * std::max(1.0, g * g) / (k.sin() * k.sin());
        ASSERT_NEAR(back.value(), g, 1e-14 * scale);
    }
}

TEST(HfForMode, CrossesToTheOtherPhase) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> inside(-0.999, 0.999);
    std::uniform_real_distribution<double> outside(1.001, 8.0);
    for (int trial = 0; trial < 4000; ++trial) {
        const Momentum k(trial % 499 + 1, 500);
        const ExtendedReal a = hf_for_mode(inside(rng), k);
        if (a.is_finite()) ASSERT_GT(std::abs(a.value()), 1.0);
        const double g = trial % 2 ? outside(rng) : -outside(rng);
        ASSERT_LT(std::abs(hf_for_mode(g, k).value()), 1.0);
    }
}

TEST(HfForMode, MatchedFieldSaturatesOverlap) {
    for (const Momentum& k : momentum_grid(60, Sector::EvenAPBC)) {
        for (double g : {-2.5, -0.3, 0.2, 0.9, 1.6}) {
            const ExtendedReal gf = hf_for_mode(g, k);
            EXPECT_NEAR(overlap_factor(k, g, gf.value()), 1.0, 1e-12);
        }
    }
}

TEST(ZeroSet, FourteenSitesApbc) {
    const auto zs = zero_set(0.5, 14, Sector::EvenAPBC);
    ASSERT_EQ(zs.size(), 7u);
    for (const ZeroSolution& z : zs) {
        ASSERT_TRUE(z.h_f.is_finite());
        EXPECT_GT(std::abs(z.h_f.value()), 1.0);
        const double c = z.k.cos();
        EXPECT_NEAR(z.gamma_f().value(), -(1 + 0.5 * c) / (0.5 + c), 1e-14 * std::abs(z.gamma_f().value()));
    }
    for (std::size_t i = 0; i + 1 < zs.size(); ++i) EXPECT_LT(zs[i].k, zs[i + 1].k);
}

TEST(ZeroSet, FourteenSitesPbc) {
    EXPECT_EQ(zero_set(0.5, 14, Sector::OddPBC).size(), 6u);
}

TEST(ZeroSet, SixSitesZeroFieldHasUnboundedHalfPi) {
    const auto zs = zero_set(0.0, 6, Sector::EvenAPBC);
    ASSERT_EQ(zs.size(), 3u);
    EXPECT_EQ(zs[0].k, Momentum(1, 6));
    EXPECT_EQ(zs[1].k, Momentum(1, 2));
    EXPECT_EQ(zs[2].k, Momentum(5, 6));
    EXPECT_TRUE(zs[1].unbounded());
    EXPECT_TRUE(zs[1].E_kf.is_unbounded());
    EXPECT_FALSE(zs[0].unbounded());
    EXPECT_THROW((void)zs[1].quench(), DomainError);
}

TEST(ZeroSet, EnergyFromPostquenchDispersion) {
    for (const ZeroSolution& z : zero_set(-0.7, 30, Sector::OddPBC, 2.0)) {
        const ModeData d = dispersion(z.k, {2.0, z.h_f.value()});
        EXPECT_NEAR(z.E_kf.value(), d.energy, 1e-12 * d.energy);
    }
}

TEST(CriticalTimes, Ladder) {
    const auto zs = zero_set(0.3, 22, Sector::EvenAPBC);
    for (const ZeroSolution& z : zs) {
        const CriticalTimes ct0 = critical_times(z, 0);
        ASSERT_EQ(ct0.times.size(), 1u);
        EXPECT_DOUBLE_EQ(ct0.times[0], pi / (4 * z.E_kf.value()));
        const CriticalTimes ct = critical_times(z, 12);
        for (std::size_t n = 0; n + 1 < ct.times.size(); ++n) {
            EXPECT_GT(ct.times[n + 1], ct.times[n]);
            EXPECT_NEAR(ct.times[n + 1] - ct.times[n], pi / (2 * z.E_kf.value()), 1e-12);
        }
    }
}

TEST(CriticalTimes, Errors) {
    const auto zs = zero_set(0.0, 6, Sector::EvenAPBC);
    try {
        (void)critical_times(zs[1], 3);
        FAIL() << "expected DomainError";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("degenerates to 0"), std::string::npos);
    }
    EXPECT_THROW((void)critical_times(zs[0], -1), ArgumentError);
}

TEST(MeanSpacing, TenSitesBruteForce) {
    // Brute-force sum of four neighbour gaps (tests/oracles/freeze_values.py).
    const MeanSpacing s = mean_spacing(1.5, 10);
    EXPECT_EQ(s.pairs, 4);
    EXPECT_EQ(s.unbounded_modes, 0);
    EXPECT_NEAR(s.value, 0.4417793211194236, 1e-14);
}

TEST(MeanSpacing, ApproachesFourOverL) {
    double previous = 1e300;
    double scaled = 0.0;
    for (int L : {100, 400, 1000, 4000}) {
        scaled = mean_spacing(1.5, L).value * L;
        EXPECT_LT(std::abs(scaled - 4.0), previous);
        previous = std::abs(scaled - 4.0);
    }
    EXPECT_NEAR(scaled, 4.0, 0.08);
}

TEST(MeanSpacing, ExcludesUnboundedModes) {
    const MeanSpacing s = mean_spacing(0.0, 10);  // pi/2 on grid
    EXPECT_EQ(s.unbounded_modes, 1);
    EXPECT_EQ(s.pairs, 2);
}

TEST(MeanSpacing, TooFewSolutions) {
    EXPECT_THROW(mean_spacing(0.0, 6), DomainError);  // {pi/6 | inf | 5pi/6}
}

TEST(CriticalGap, HundredSitesBruteForce) {
    EXPECT_NEAR(critical_gap(0.6, 100, GapSide::Plus1).gap, 0.0019761963711100172, 1e-15);
    EXPECT_NEAR(critical_gap(0.6, 100, GapSide::Minus1).gap, 0.00012339796447125018, 1e-15);
}

TEST(CriticalGap, OppositeCriticalPointClosesGap) {
    EXPECT_EQ(critical_gap(-1.0, 50, GapSide::Plus1).gap, 0.0);
    EXPECT_EQ(critical_gap(1.0, 50, GapSide::Minus1).gap, 0.0);
}

TEST(CriticalGap, SingularCoefficient) {
    const CriticalGap g = critical_gap(1.0, 50, GapSide::Plus1);
    EXPECT_FALSE(g.alpha.has_value());
    EXPECT_FALSE(g.asymptote.has_value());
    EXPECT_DOUBLE_EQ(g.gap, 2.0);
}

TEST(CriticalGap, AsymptoticLaw) {
    for (double g : {-1.5, -0.2, 0.6, 2.0}) {
        const CriticalGap c = critical_gap(g, 4000, GapSide::Plus1);
        ASSERT_TRUE(c.alpha.has_value());
        EXPECT_NEAR(c.gap * 4000.0 * 4000.0 / std::abs(*c.alpha), 1.0, 0.02) << g;
    }
}

TEST(CriticalGap, MinusSideMirrorsPlusSide) {
    for (double g : {-1.5, -0.2, 0.6, 2.0}) {
        for (int L : {50, 400, 4000}) {
            const CriticalGap minus = critical_gap(g, L, GapSide::Minus1);
            const CriticalGap plus = critical_gap(-g, L, GapSide::Plus1);
            EXPECT_NEAR(minus.gap, plus.gap, 1e-13 * plus.gap);
            EXPECT_DOUBLE_EQ(*minus.alpha, *plus.alpha);
            if (L == 4000) EXPECT_NEAR(minus.gap * L * L / std::abs(*minus.alpha), 1.0, 0.02);
        }
    }
}

TEST(NoZeroWindow, ReciprocalEndpoints) {
    for (int L = 4; L <= 5000; L += 2) {
        const NoZeroWindow w = no_zero_window(L);
        ASSERT_NEAR(w.lo * w.hi, 1.0, 1e-14);
        ASSERT_LT(w.lo, 1.0);
        ASSERT_GT(w.hi, 1.0);
    }
}

TEST(NoZeroWindow, CollapsesToCriticalPoint) {
    const NoZeroWindow w = no_zero_window(100000);
    EXPECT_NEAR(w.lo, 1.0, 1e-9);
    EXPECT_NEAR(w.hi, 1.0, 1e-9);
    const NoZeroWindow m = no_zero_window(200);
    const double x4 = std::pow(pi / 200.0, 4);
    EXPECT_NEAR(m.lo, m.approx_lo, x4);
    EXPECT_NEAR(m.hi, m.approx_hi, x4);
}

TEST(NoZeroWindow, FourteenSiteScan) {
    const NoZeroWindow w = no_zero_window(14);
    for (int i = 0; i <= 3000; ++i) {
        const double gi = i * 1e-3;
        for (const ZeroSolution& z : zero_set(gi, 14, Sector::EvenAPBC)) {
            if (z.unbounded()) continue;
            const double gf = z.gamma_f().value();
            if (gf < 0.0) continue;
            ASSERT_FALSE(w.contains(gf)) << "gamma_i=" << gi << " gamma_f=" << gf;
            // a prequench field inside the window has no non-negative partner
            ASSERT_FALSE(w.contains(gi)) << "gamma_i=" << gi << " gamma_f=" << gf;
        }
    }
}
