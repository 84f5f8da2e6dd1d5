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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wernet/errors.h"
#include "wernet/numeric.h"

namespace wernet {

namespace {

constexpr double kThird = 1.0 / 3.0;
constexpr double kSumTolerance = 1e-12;
constexpr double kYFloor = 1e-12;
constexpr double kYCeiling = 1.0 - 1e-6;
constexpr int kScanSamples = 512;
// Excess parameters this small at y = 1/3 mean both roots sit at 1/3.
constexpr double kDegenerateGain = 1e-15;

double concurrence_of(double x) {
    return std::max(0.0, (3.0 * x - 1.0) / 2.0);
}

// Werner parameter at the end of the plan when every purification succeeds.
double final_parameter(const SegmentPlan &plan, double *success) {
    double y = plan.y();
    double x = std::pow(y, plan.unpurified_fraction());
    double prob = 1;
    for (const Segment &s : plan.segments()) {
        PurificationResult r = swap_purify_rescaled(y, s);
        x *= r.state.x();
        prob *= r.success_probability;
    }
    *success = prob;
    return x;
}

}  // namespace

SegmentPlan::SegmentPlan(double y, std::vector<Segment> segments) : y_(y), segments_(std::move(segments)) {
    if (!(y > 0 && y <= 1)) {
        throw std::invalid_argument("SegmentPlan: y must lie in (0, 1]");
    }
    double sum = 0;
    for (const Segment &s : segments_) {
        if (!(s.a > 0 && s.a <= 1)) {
            throw std::invalid_argument("SegmentPlan: a must lie in (0, 1]");
        }
        if (!(s.b >= 0 && s.b < 1)) {
            throw std::invalid_argument("SegmentPlan: b must lie in [0, 1)");
        }
        sum += s.a;
    }
    if (sum > 1 + kSumTolerance) {
        throw std::invalid_argument("SegmentPlan: subpath fractions sum to " + std::to_string(sum) + " > 1");
    }
}

double SegmentPlan::unpurified_fraction() const {
    double sum = 0;
    for (const Segment &s : segments_) {
        sum += s.a;
    }
    return std::max(0.0, 1.0 - sum);
}

PurificationResult swap_purify_segment(WernerState x, int n, int m) {
    if (n < 1 || m < 0) {
        throw std::invalid_argument("swap_purify_segment: requires n >= 1 and m >= 0");
    }
    WernerState sub(std::pow(x.x(), n));
    WernerState alt(std::pow(x.x(), n + m));
    return purify_bbpssw(sub, alt);
}

PurificationResult swap_purify_rescaled(double y, Segment s) {
    WernerState sub(std::pow(y, s.a));
    WernerState alt(std::pow(y, s.a + s.b));
    return purify_bbpssw(sub, alt);
}

double spp_delta_concurrence(WernerState x, int L, int n, int m) {
    if (n < 1 || n > L) {
        throw std::invalid_argument("spp_delta_concurrence: requires 1 <= n <= L");
    }
    PurificationResult r = swap_purify_segment(x, n, m);
    double end = r.state.x() * std::pow(x.x(), L - n);
    return r.success_probability * concurrence_of(end) - direct_concurrence(x, L);
}

double direct_concurrence(WernerState x, int L) {
    if (L < 1) {
        throw std::invalid_argument("direct_concurrence: L must be >= 1");
    }
    return concurrence_of(std::pow(x.x(), L));
}

double qm_expected_concurrence(const SegmentPlan &plan) {
    double success = 0;
    double x = final_parameter(plan, &success);
    return success * concurrence_of(x);
}

double delta_concurrence(const SegmentPlan &plan) {
    return qm_expected_concurrence(plan) - concurrence_of(plan.y());
}

bool ConstraintCheck::good() const {
    return positive_concurrence && beats_direct &&
           std::all_of(purification_improves.begin(), purification_improves.end(), [](bool b) { return b; });
}

ConstraintCheck check_constraints(const SegmentPlan &plan) {
    ConstraintCheck out;
    double y = plan.y();
    for (const Segment &s : plan.segments()) {
        out.purification_improves.push_back(swap_purify_rescaled(y, s).state.x() > std::pow(y, s.a));
    }
    double success = 0;
    out.positive_concurrence = final_parameter(plan, &success) > kThird;
    out.beats_direct = delta_concurrence(plan) > 0;
    return out;
}

GoodInterval good_interval(std::span<const Segment> segments) {
    std::vector<Segment> shape(segments.begin(), segments.end());
    auto plan_at = [&](double y) { return SegmentPlan(y, shape); };
    auto excess = [&](double y) {
        double success = 0;
        return final_parameter(plan_at(y), &success) - kThird;
    };
    // At y = 1/3 the direct concurrence is zero, so the gain there has the
    // sign of the excess (clamping hides a negative one).
    double center = excess(kThird);
    if (std::abs(center) <= kDegenerateGain) {
        return {kThird, kThird};
    }
    if (center < 0) {
        throw NoGoodIntervalError("good_interval: no gain at y = 1/3");
    }

    auto gain = [&](double y) { return delta_concurrence(plan_at(y)); };

    auto lo = first_root(excess, kThird, kYFloor, kScanSamples);
    auto hi = first_root(gain, kThird, kYCeiling, kScanSamples);
    if (!lo || !hi) {
        throw NumericalError("good_interval: constraint root not bracketed");
    }
    return {*lo, *hi};
}

double unscale_root(double y, int L) {
    if (!(y > 0 && y <= 1) || L < 1) {
        throw std::invalid_argument("unscale_root: requires 0 < y <= 1 and L >= 1");
    }
    return std::pow(y, 1.0 / L);
}

ConstraintPolynomial::ConstraintPolynomial(std::vector<Term> terms) : terms_(std::move(terms)) {
    num_parameters_ = terms_.empty() ? 0 : terms_.front().weights.size();
    for (const Term &t : terms_) {
        if (t.weights.size() != num_parameters_) {
            throw std::invalid_argument("ConstraintPolynomial: inconsistent parameter count");
        }
    }
}

double ConstraintPolynomial::evaluate(double y, std::span<const double> d) const {
    if (d.size() != num_parameters_) {
        throw std::invalid_argument("ConstraintPolynomial::evaluate: wrong parameter count");
    }
    double sum = 0;
    for (const Term &t : terms_) {
        double e = t.offset;
        for (size_t i = 0; i < d.size(); i++) {
            e += t.weights[i] * d[i];
        }
        sum += t.coefficient * std::pow(y, e);
    }
    return sum;
}

double ConstraintPolynomial::evaluate_unperturbed(double y) const {
    double sum = 0;
    for (const Term &t : terms_) {
        sum += t.coefficient * std::pow(y, t.offset);
    }
    return sum;
}

}  // namespace wernet
