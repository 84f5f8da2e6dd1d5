// Copyright 2026 The wernet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wernet/critical.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "wernet/protocol.h"
#include "wernet/spp.h"
#include "wernet/test_support.h"

namespace wernet {
namespace {

using testing::for_all;
using testing::Gen;

const double kPhi = (std::sqrt(5.0) - 1.0) / 4.0;

// Composite Simpson rule, independent of the library quadrature.
template <typename F>
double simpson(F &&f, double a, double b, int n) {
    double h = (b - a) / n, s = f(a) + f(b);
    for (int k = 1; k < n; k++) s += f(a + k * h) * (k % 2 ? 4 : 2);
    return s * h / 3;
}

// Brute-force midpoint sum of (1 - a) max(0, gain) over the unit square.
double midpoint_f(double y, int n) {
    double h = 1.0 / n, sum = 0;
    for (int i = 0; i < n; i++) {
        double a = (i + 0.5) * h;
        for (int j = 0; j < n; j++) {
            double b = (j + 0.5) * h;
            double v = delta_c_spp_unclamped(y, a, b);
            if (v > 0) sum += (1 - a) * v;
        }
    }
    return sum * h * h;
}

TEST(FOfY, SupportIsTheGoodWindow) {
    for (double y : {0.05, 0.2, 0.3, kPhi - 1e-9, kPhi, 0.5, 0.5 + 1e-9, 0.7, 0.95}) {
        EXPECT_EQ(f_of_y(y), 0.0) << y;
    }
    for_all(61, 100, [](Gen &g) {
        double y = g.uniform(kPhi + 1e-4, 0.5 - 1e-4);
        EXPECT_GT(f_of_y(y), 0) << y;
    });
    EXPECT_THROW(f_of_y(0.0), std::invalid_argument);
    EXPECT_THROW(f_of_y(1.0), std::invalid_argument);
}

TEST(FOfY, MatchesMidpointOracle) {
    EXPECT_NEAR(f_of_y(1.0 / 3.0), 5.6073194e-4, 1e-11);
    for (double y : {1.0 / 3.0, 0.32, 0.4}) {
        double oracle = midpoint_f(y, 1500);
        EXPECT_NEAR(f_of_y(y) / oracle, 1.0, 2e-3) << y;
    }
}

TEST(FOfY, InnerIntegralMatchesSimpson) {
    for_all(62, 40, [](Gen &g) {
        double y = g.uniform(kPhi + 1e-3, 0.5 - 1e-3);
        auto r = spp_roots_a(y);
        double a_lo = std::max(r[0], 1e-9);
        // Integrate over b by Simpson, then over a by Simpson.
        auto over_b = [&](double a) {
            double B = spp_b_factor(y, a), gy = threshold_g(y);
            if (!(B > gy)) return 0.0;
            double bm = std::log(gy / B) / std::log(y);
            return simpson([&](double b) { return delta_c_spp_unclamped(y, a, b); }, 0.0, bm, 200);
        };
        double want = simpson([&](double a) { return (1 - a) * over_b(a); }, a_lo, r[1], 400);
        EXPECT_NEAR(f_of_y(y), want, 1e-6 * std::abs(want) + 1e-13);
    });
}

TEST(HOfS, ChangeOfVariable) {
    for (double s : {0.7, 0.9, 1.0, 1.1}) EXPECT_EQ(h_of_s(s), f_of_y(std::exp(-s)));
}

TEST(HOfS, VanishesAsPowerAtEndpoints) {
    const CriticalConstants &c = critical_constants();
    EXPECT_NEAR(c.s_lo, std::log(2.0), 1e-15);
    EXPECT_NEAR(c.s_hi, 1.17435900562, 1e-10);
    for (double edge : {c.s_lo, c.s_hi}) {
        double dir = edge == c.s_lo ? 1 : -1;
        double h1 = h_of_s(edge + dir * 1e-3), h2 = h_of_s(edge + dir * 2e-3);
        double power = std::log(h2 / h1) / std::log(2.0);
        EXPECT_GT(power, 1.0) << edge;
        EXPECT_LT(power, 5.0) << edge;
    }
}

TEST(BigA, ValueAndStepHalving) {
    double adaptive = critical_constants().A;
    EXPECT_GT(adaptive, 6.0e-5);
    EXPECT_LT(adaptive, 7.0e-5);
    EXPECT_NEAR(adaptive, 6.57035466e-5, 1e-13);
    double p4 = big_a_constant({4, 1e-12});
    double p8 = big_a_constant({8, 1e-12});
    EXPECT_LT(std::abs(p8 - p4) / p8, 5e-3);
    EXPECT_NEAR(p8, adaptive, 1e-9 * adaptive);
}

TEST(AsymptoticGain, Scalings) {
    double A = critical_constants().A;
    AsymptoticGain g = asymptotic_gain(1000, 0.02);
    EXPECT_NEAR(asymptotic_gain(2000, 0.02).value / g.value, 0.25, 1e-14);
    EXPECT_NEAR(asymptotic_gain(1000, 0.01).value / g.value, 16.0, 1e-12);
    EXPECT_NEAR(g.value, A / (1e6 * 1.6e-7), 1e-12 * g.value);
    EXPECT_NEAR(g.ceiling, 81 * A * std::pow(1000.0, -2.0 / 3.0), 1e-18);
    EXPECT_NEAR(asymptotic_gain(1000, 0.02, 2).ceiling, 16 * A * 0.01, 1e-18);
    EXPECT_THROW(asymptotic_gain(1000, 0.0), std::invalid_argument);
}

TEST(DiscreteGainSum, MatchesUnbrokenLoop) {
    for (double x : {0.7, 0.75, 0.9, 0.95, 0.99}) {
        const int L_max = 60;
        double want = 0;
        for (int L = 3; L <= L_max; L++)
            for (int n = 2; n <= L - 1; n++)
                for (int m = 0; m <= n - 1; m++) {
                    double d = std::max(0.0, spp_delta_concurrence(WernerState(x), L, n, m));
                    want += (m == 0 ? 0.5 : 1.0) * (L - n + 1) * d;
                }
        EXPECT_NEAR(discrete_gain_sum(1.0, x, L_max), want, 1e-14 * std::max(1.0, want)) << x;
    }
}

TEST(DiscreteGainSum, ZeroBelowThreshold) {
    EXPECT_EQ(discrete_gain_sum(1e6, std::cbrt(kPhi) - 1e-6, 300), 0.0);
    EXPECT_GT(discrete_gain_sum(1e6, 0.75, 300), 0.0);
    EXPECT_THROW(discrete_gain_sum(1e6, 0.9, 2), std::invalid_argument);
}

TEST(DiscreteGainSum, ShortestSppAtLargestEpsilon) {
    // Scan up from the threshold to the first x with any gain.
    double x = 0;
    for (int k = 0; k < 100000; k++) {
        x = std::cbrt(kPhi) + 1e-5 * k;
        if (discrete_gain_sum(1.0, x, 300) > 0) break;
    }
    double only = 0.5 * 2 * std::max(0.0, spp_delta_concurrence(WernerState(x), 3, 2, 0));
    EXPECT_GT(only, 0);
    EXPECT_NEAR(discrete_gain_sum(1.0, x, 300), only, 1e-15);
}

TEST(DiscreteGainSum, ApproachesAsymptote) {
    const double N = 1e6;
    std::vector<double> eps{0.01, 0.02, 0.03, 0.04, 0.05}, ly, lx;
    for (double e : eps) {
        lx.push_back(std::log(e));
        ly.push_back(std::log(N * N * discrete_gain_sum(N, 1 - e, 300)));
    }
    double mx = 0, my = 0;
    for (size_t k = 0; k < eps.size(); k++) mx += lx[k] / eps.size(), my += ly[k] / eps.size();
    double sxy = 0, sxx = 0;
    for (size_t k = 0; k < eps.size(); k++) sxy += (lx[k] - mx) * (ly[k] - my), sxx += (lx[k] - mx) * (lx[k] - mx);
    EXPECT_NEAR(sxy / sxx, -4.0, 0.2);
    double ratio = discrete_gain_sum(N, 0.99, 300) / asymptotic_gain(N, 0.01).value;
    EXPECT_NEAR(ratio, 1.0, 0.25);
}

}  // namespace
}  // namespace wernet
