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

#include "wernet/protocol.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "wernet/errors.h"
#include "wernet/test_support.h"

namespace wernet {
namespace {

using testing::for_all;
using testing::Gen;

// Plain-arithmetic gain for one segment, written out without the library.
double hand_gain(double y, double a, double b) {
    double u = std::pow(y, a);
    double v = std::pow(y, a + b);
    double xp = (u + v + 4 * u * v) / (3 + 3 * u * v);
    double p = (1 + u * v) / 2;
    double end = xp * std::pow(y, 1 - a);
    double c_end = end > 1.0 / 3.0 ? (3 * end - 1) / 2 : 0.0;
    double c_dir = y > 1.0 / 3.0 ? (3 * y - 1) / 2 : 0.0;
    return p * c_end - c_dir;
}

TEST(SegmentPlan, Validation) {
    EXPECT_THROW(SegmentPlan(0.0, {}), std::invalid_argument);
    EXPECT_THROW(SegmentPlan(1.1, {}), std::invalid_argument);
    EXPECT_THROW(SegmentPlan(0.5, {{0.0, 0.1}}), std::invalid_argument);
    EXPECT_THROW(SegmentPlan(0.5, {{0.5, 1.0}}), std::invalid_argument);
    EXPECT_THROW(SegmentPlan(0.5, {{0.6, 0.0}, {0.5, 0.0}}), std::invalid_argument);
    SegmentPlan p(0.5, {{0.25, 0.0}, {0.5, 0.1}});
    EXPECT_DOUBLE_EQ(p.unpurified_fraction(), 0.25);
    EXPECT_EQ(SegmentPlan(0.5, {{0.5, 0}, {0.5, 0}}).unpurified_fraction(), 0.0);
}

TEST(Protocol, PipelineMatchesHandComputation) {
    for_all(31, 300, [](Gen &g) {
        double y = g.uniform(0.05, 1.0);
        double a = g.uniform(0.01, 1.0);
        double b = g.uniform(0.0, 0.99);
        EXPECT_NEAR(delta_concurrence(SegmentPlan(y, {{a, b}})), hand_gain(y, a, b), 1e-14);
    });
}

TEST(Protocol, IntegerGeometryMatchesRescaled) {
    for_all(32, 200, [](Gen &g) {
        int L = g.integer(2, 40);
        int n = g.integer(1, L);
        int m = g.integer(0, n - 1);
        double x = g.uniform(0.9, 1.0);
        double y = std::pow(x, L);
        double want = delta_concurrence(SegmentPlan(y, {{double(n) / L, double(m) / L}}));
        EXPECT_NEAR(spp_delta_concurrence(WernerState(x), L, n, m), want, 1e-13);
    });
    EXPECT_THROW(spp_delta_concurrence(WernerState(0.9), 3, 4, 0), std::invalid_argument);
}

TEST(Protocol, DirectConcurrence) {
    EXPECT_NEAR(direct_concurrence(WernerState(0.9), 2), (3 * 0.81 - 1) / 2, 1e-15);
    EXPECT_EQ(direct_concurrence(WernerState(0.5), 2), 0.0);
    EXPECT_THROW(direct_concurrence(WernerState(0.5), 0), std::invalid_argument);
}

TEST(Protocol, LongerAlternateNeverHelps) {
    for_all(33, 300, [](Gen &g) {
        double y = g.uniform(0.2, 0.6);
        double a = g.uniform(0.05, 1.0);
        double b1 = g.uniform(0.0, 0.9);
        double b2 = g.uniform(b1, 0.99);
        EXPECT_GE(delta_concurrence(SegmentPlan(y, {{a, b1}})) + 1e-15,
                  delta_concurrence(SegmentPlan(y, {{a, b2}})));
    });
}

TEST(Protocol, SingleSegmentMaximumOnGrid) {
    double best = -1, best_y = 0, best_a = 0;
    // The y grid contains 1/3 exactly (i = 100).
    for (int i = 1; i < 600; i++) {
        double y = 0.3 + 0.2 * i / 600;
        for (int j = 1; j <= 400; j++) {
            double a = double(j) / 400;
            double v = delta_concurrence(SegmentPlan(y, {{a, 0}}));
            if (v > best) {
                best = v;
                best_y = y;
                best_a = a;
            }
        }
    }
    EXPECT_NEAR(best, 1.0 / 36.0, 2e-5);
    EXPECT_NEAR(best_y, 1.0 / 3.0, 2e-3);
    // y^a = 2y at the peak.
    EXPECT_NEAR(std::pow(best_y, best_a), 2 * best_y, 5e-3);
}

TEST(ConstraintCheck, Examples) {
    EXPECT_TRUE(check_constraints(SegmentPlan(1.0 / 3.0, {{0.369, 0}})).good());
    EXPECT_FALSE(check_constraints(SegmentPlan(0.25, {{0.409, 0}})).positive_concurrence);
    EXPECT_FALSE(check_constraints(SegmentPlan(0.55, {{0.3, 0}})).beats_direct);

    ConstraintCheck in = check_constraints(SegmentPlan(0.35, {{0.369, 0}}));
    EXPECT_TRUE(in.good());
    ASSERT_EQ(in.purification_improves.size(), 1u);
    EXPECT_TRUE(in.purification_improves[0]);

    // Far above the window the direct strategy wins.
    ConstraintCheck above = check_constraints(SegmentPlan(0.8, {{0.369, 0}}));
    EXPECT_TRUE(above.positive_concurrence);
    EXPECT_FALSE(above.beats_direct);
    EXPECT_FALSE(above.good());

    // Far below, nothing is entangled.
    ConstraintCheck below = check_constraints(SegmentPlan(0.1, {{0.369, 0}}));
    EXPECT_FALSE(below.positive_concurrence);
    EXPECT_FALSE(below.good());
}

TEST(GoodInterval, OrderedAroundThird) {
    for_all(34, 60, [](Gen &g) {
        double a = g.uniform(0.2, 0.6);
        std::vector<Segment> shape{{a, 0.0}};
        GoodInterval iv = good_interval(shape);
        EXPECT_LE(iv.y_lo, 1.0 / 3.0);
        EXPECT_GE(iv.y_hi, 1.0 / 3.0);
        // Strictly inside is good; just outside is not.
        double mid_lo = 0.5 * (iv.y_lo + 1.0 / 3.0);
        double mid_hi = 0.5 * (iv.y_hi + 1.0 / 3.0);
        EXPECT_TRUE(check_constraints(SegmentPlan(mid_lo, shape)).good());
        EXPECT_TRUE(check_constraints(SegmentPlan(mid_hi, shape)).good());
        EXPECT_FALSE(check_constraints(SegmentPlan(iv.y_lo - 1e-6, shape)).positive_concurrence);
        EXPECT_FALSE(check_constraints(SegmentPlan(iv.y_hi + 1e-6, shape)).beats_direct);
    });
}

TEST(GoodInterval, GoldenLowerEdge) {
    // The smallest lower edge over a is (sqrt 5 - 1) / 4.
    std::vector<Segment> shape{{0.409765516982, 0.0}};
    EXPECT_NEAR(good_interval(shape).y_lo, (std::sqrt(5.0) - 1) / 4, 1e-9);
}

TEST(GoodInterval, DegenerateAndEmpty) {
    std::vector<Segment> full{{1.0, 0.0}};
    GoodInterval iv = good_interval(full);
    EXPECT_DOUBLE_EQ(iv.y_lo, 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(iv.y_hi, 1.0 / 3.0);
    std::vector<Segment> past_b_max{{0.3, 0.2}};
    EXPECT_THROW(good_interval(past_b_max), NoGoodIntervalError);
    std::vector<Segment> far{{0.3, 0.6}};
    EXPECT_THROW(good_interval(far), NoGoodIntervalError);
}

TEST(GoodInterval, ShortSubpathUpperEdge) {
    double prev = 0;
    for (double a : {0.1, 0.01, 0.001}) {
        std::vector<Segment> shape{{a, 0.0}};
        double hi = good_interval(shape).y_hi;
        EXPECT_GT(hi, prev);
        EXPECT_LT(hi, 0.5);
        prev = hi;
    }
    EXPECT_NEAR(prev, 0.5, 2e-3);
}

TEST(UnscaleRoot, Inverse) {
    EXPECT_NEAR(unscale_root(0.25, 2), 0.5, 1e-15);
    EXPECT_THROW(unscale_root(0.0, 2), std::invalid_argument);
    EXPECT_THROW(unscale_root(0.5, 0), std::invalid_argument);
}

TEST(ConstraintPolynomial, EvaluatesTerms) {
    for_all(35, 100, [](Gen &g) {
        int k = g.integer(1, 4);
        int params = g.integer(0, 3);
        std::vector<ConstraintPolynomial::Term> terms;
        for (int j = 0; j < k; j++) {
            ConstraintPolynomial::Term t{g.uniform(-3, 3), g.uniform(0, 3), {}};
            for (int i = 0; i < params; i++) t.weights.push_back(g.uniform(-2, 2));
            terms.push_back(t);
        }
        ConstraintPolynomial poly(terms);
        std::vector<double> d;
        for (int i = 0; i < params; i++) d.push_back(g.uniform(-0.1, 0.1));
        double y = g.uniform(0.1, 1);
        double want = 0, want0 = 0;
        for (const auto &t : terms) {
            double e = t.offset;
            for (int i = 0; i < params; i++) e += t.weights[i] * d[i];
            want += t.coefficient * std::pow(y, e);
            want0 += t.coefficient * std::pow(y, t.offset);
        }
        EXPECT_NEAR(poly.evaluate(y, d), want, 1e-13);
        EXPECT_NEAR(poly.evaluate_unperturbed(y), want0, 1e-13);
    });
    EXPECT_THROW(ConstraintPolynomial({{1, 0, {1}}, {1, 0, {}}}), std::invalid_argument);
}

}  // namespace
}  // namespace wernet
