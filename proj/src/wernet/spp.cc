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

#include "wernet/spp.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wernet/errors.h"
#include "wernet/numeric.h"

namespace wernet {

namespace {

constexpr double kThird = 1.0 / 3.0;
constexpr double kYFloor = 1e-12;
constexpr double kYCeiling = 1.0 - 1e-6;
constexpr int kScanSamples = 512;
// Residuals at 1/3 below this are rounding of an exact zero.
constexpr double kResidualFloor = 1e-14;

double golden_ratio_conjugate_half() {
    return (std::sqrt(5.0) - 1.0) / 4.0;
}

void require_rescaled(double y, double a) {
    if (!(y > 0 && y <= 1) || !(a > 0 && a <= 1)) {
        throw std::invalid_argument("spp: requires 0 < y <= 1 and 0 < a <= 1");
    }
}

double concurrence_of(double x) {
    return std::max(0.0, (3.0 * x - 1.0) / 2.0);
}

}  // namespace

double threshold_g(double y) {
    return y < kThird ? 1.0 - y : 5.0 * y - 1.0;
}

double spp_b_factor(double y, double a) {
    double t = std::pow(y, a) - 2.0 * y;
    return 4.0 * y * y + y - t * t;
}

double delta_c_spp_unclamped(double y, double a, double b) {
    return 0.25 * (std::pow(y, b) * spp_b_factor(y, a) - threshold_g(y));
}

double delta_c_spp(double y, double a, double b) {
    require_rescaled(y, a);
    if (!(b >= 0 && b < 1)) {
        throw std::invalid_argument("delta_c_spp: requires 0 <= b < 1");
    }
    double raw = delta_c_spp_unclamped(y, a, b);
    if (y < kThird) {
        return std::max(0.0, raw);
    }
    return std::max(raw, -(3.0 * y - 1.0) / 2.0);
}

std::vector<double> spp_roots_a(double y) {
    double phi = golden_ratio_conjugate_half();
    if (!(y >= phi && y <= 0.5)) {
        return {};
    }
    double ln_y = std::log(y);
    if (y >= kThird) {
        return {0.0, std::log(4.0 * y - 1.0) / ln_y};
    }
    // Round-off can leave the discriminant a few ulps negative at y = phi.
    double disc = std::max(0.0, 4.0 * y * y + 2.0 * y - 1.0);
    double s = std::sqrt(disc);
    double r1 = std::log(2.0 * y + s) / ln_y;
    double r2 = std::log(2.0 * y - s) / ln_y;
    return {std::min(r1, r2), std::max(r1, r2)};
}

double spp_boundary_b(double y, double a) {
    require_rescaled(y, a);
    double g = threshold_g(y);
    double big_b = spp_b_factor(y, a);
    if (!(big_b > g) || y == 1) {
        throw std::domain_error("spp_boundary_b: no gain at b = 0");
    }
    return std::log(g / big_b) / std::log(y);
}

double threshold_c(double z) {
    if (!(z >= kThird && z <= 1)) {
        throw std::domain_error("threshold_c: requires 1/3 <= z <= 1");
    }
    if (z == 1) {
        return 1.0;
    }
    double t = 1.0 - z;
    return -std::log1p(t - 1.5 * t * t) / std::log1p(-t);
}

double delta_p_stationarity(double z) {
    double z2 = z * z;
    return 3.0 * z2 * z2 + 8.0 * z2 - 8.0 * z + 1.0;
}

PurificationPeak delta_p_max() {
    double z = bisect_root(delta_p_stationarity, kThird, 1.0);
    WernerState s(z);
    return {z, purify_bbpssw(s, s).state.x() - z};
}

SppExtremals spp_extremals() {
    double phi = golden_ratio_conjugate_half();
    return {
        phi,
        1.0 + std::log(2.0) / std::log(phi),
        0.5,
        1.0 / 36.0,
        std::log(1.5) / std::log(3.0),
        std::log(7.0 / 6.0) / std::log(3.0),
    };
}

double multipur_lo_residual(double y, int n, double alpha) {
    double u = std::pow(y, alpha / n);
    return std::log(3.0) + n * std::log(2.0 / 3.0) + std::log(y) + n * std::log1p(2.0 * u) -
           n * std::log1p(u * u);
}

double multipur_hi_residual(double y, int n, double alpha) {
    double u = std::pow(y, alpha / n);
    return 3.0 * y * std::pow((1.0 + 2.0 * u) / 3.0, n) - std::pow((1.0 + u * u) / 2.0, n) - 3.0 * y + 1.0;
}

double multipur_hi_residual_inf(double y, double alpha) {
    return 3.0 * std::pow(y, 2.0 * alpha / 3.0 + 1.0) - std::pow(y, alpha) - 3.0 * y + 1.0;
}

GoodInterval multipur_bounds(int n, double alpha) {
    if (n < 1 || !(alpha > 0 && alpha <= 1)) {
        throw std::invalid_argument("multipur_bounds: requires n >= 1 and 0 < alpha <= 1");
    }
    auto lo_f = [&](double y) { return multipur_lo_residual(y, n, alpha); };
    auto hi_f = [&](double y) { return multipur_hi_residual(y, n, alpha); };
    // Both residuals are nonnegative at 1/3 and vanish there only for a
    // single full-length segment.
    std::optional<double> lo = kThird;
    std::optional<double> hi = kThird;
    if (lo_f(kThird) > kResidualFloor) {
        lo = first_root(lo_f, kThird, kYFloor, kScanSamples);
    }
    if (hi_f(kThird) > kResidualFloor) {
        hi = first_root(hi_f, kThird, kYCeiling, kScanSamples);
    }
    if (!lo || !hi) {
        throw NoGoodIntervalError("multipur_bounds: constraint roots not found in (0, 1)");
    }
    return {*lo, *hi};
}

GoodInterval multipur_bounds_inf(double alpha) {
    if (!(alpha >= 0 && alpha <= 1)) {
        throw std::invalid_argument("multipur_bounds_inf: requires 0 < alpha <= 1");
    }
    if (alpha < kDegenerateAlpha) {
        throw DegenerateEquationError("multipur_bounds_inf: equation vanishes identically as alpha -> 0");
    }
    double lo = std::pow(kThird, 3.0 / (3.0 - alpha));
    auto hi_f = [&](double y) { return multipur_hi_residual_inf(y, alpha); };
    auto hi = first_root(hi_f, kThird, kYCeiling, kScanSamples);
    if (!hi) {
        throw NoGoodIntervalError("multipur_bounds_inf: upper root not found");
    }
    return {lo, *hi};
}

AsymptoticRoot asymptotic_root(
    const ConstraintPolynomial &poly, std::span<const int> counts, int L, Bracket search) {
    if (counts.size() != poly.num_parameters()) {
        throw std::invalid_argument("asymptotic_root: one count per parameter required");
    }
    if (L < 1) {
        throw std::invalid_argument("asymptotic_root: L must be >= 1");
    }
    auto f = [&](double y) { return poly.evaluate_unperturbed(y); };
    auto root = first_root(f, search.lo, search.hi, kScanSamples);
    if (!root) {
        throw NumericalError("asymptotic_root: unperturbed root not found");
    }
    double y = *root;
    double num = 0;
    double den = 0;
    double scale = 0;
    for (const auto &t : poly.terms()) {
        double v = t.coefficient * std::pow(y, t.offset);
        double w = 0;
        for (size_t i = 0; i < counts.size(); i++) {
            w += counts[i] * t.weights[i];
        }
        num += v * w;
        den += v * t.offset;
        scale += std::abs(v) * (1.0 + std::abs(t.offset));
    }
    if (std::abs(den) <= 1e-12 * scale) {
        throw HigherOrderError("asymptotic_root: first-order coefficient vanishes");
    }
    double x = std::pow(y, 1.0 / L) - std::log(y) * num / (static_cast<double>(L) * L * den);
    return {y, x};
}

ConstraintPolynomial spp_constraint_polynomial(GainBranch branch) {
    // y^b (y + 4 y^(1+a) - y^(2a)) - g(y), parameters (a, b).
    std::vector<ConstraintPolynomial::Term> terms{
        {1.0, 1.0, {0.0, 1.0}},
        {4.0, 1.0, {1.0, 1.0}},
        {-1.0, 0.0, {2.0, 1.0}},
    };
    if (branch == GainBranch::kHigh) {
        terms.push_back({-5.0, 1.0, {0.0, 0.0}});
        terms.push_back({1.0, 0.0, {0.0, 0.0}});
    } else {
        terms.push_back({1.0, 1.0, {0.0, 0.0}});
        terms.push_back({-1.0, 0.0, {0.0, 0.0}});
    }
    return ConstraintPolynomial(std::move(terms));
}

ConstraintPolynomial near_full_length_polynomial(GainBranch branch) {
    // Same form with a = 1 - d1, b = d1 - d2.
    std::vector<ConstraintPolynomial::Term> terms{
        {1.0, 1.0, {1.0, -1.0}},
        {4.0, 2.0, {0.0, -1.0}},
        {-1.0, 2.0, {-1.0, -1.0}},
    };
    if (branch == GainBranch::kHigh) {
        terms.push_back({-5.0, 1.0, {0.0, 0.0}});
        terms.push_back({1.0, 0.0, {0.0, 0.0}});
    } else {
        terms.push_back({1.0, 1.0, {0.0, 0.0}});
        terms.push_back({-1.0, 0.0, {0.0, 0.0}});
    }
    return ConstraintPolynomial(std::move(terms));
}

std::optional<XInterval> near_full_length_interval(int q, int r, int L) {
    if (q < 0 || r < q || r >= L) {
        throw std::invalid_argument("near_full_length_interval: requires 0 <= q <= r < L");
    }
    if (3 * q <= 2 * r) {
        return std::nullopt;
    }
    int counts[2] = {r, q};
    double lo = asymptotic_root(near_full_length_polynomial(GainBranch::kLow), counts, L).x_star;
    double hi = asymptotic_root(near_full_length_polynomial(GainBranch::kHigh), counts, L).x_star;
    return XInterval{lo, hi};
}

ShiftedRoot small_b_shift(int m, double a, int L, double y_hat) {
    require_rescaled(y_hat, a);
    if (L < 1 || y_hat == 1) {
        throw std::invalid_argument("small_b_shift: requires L >= 1 and y_hat < 1");
    }
    if (std::abs(delta_c_spp_unclamped(y_hat, a, 0)) > 1e-9) {
        throw std::invalid_argument("small_b_shift: y_hat is not a b = 0 root");
    }
    double y = y_hat;
    double y1a = std::pow(y, 1.0 + a);
    double y2a = std::pow(y, 2.0 * a);
    double db = std::log(y) * (y + 4.0 * y1a - y2a);
    double g_term = y >= kThird ? -5.0 * y : y;
    double y_dy = y + 4.0 * (1.0 + a) * y1a - 2.0 * a * y2a + g_term;
    if (std::abs(y_dy) < 1e-14) {
        throw HigherOrderError("small_b_shift: root is stationary in y");
    }
    double ratio = static_cast<double>(m) / L;
    double y_star = y - ratio * db * y / y_dy;
    double x_star = std::pow(y, 1.0 / L) - ratio * db / (L * y_dy);
    return {y_star, x_star};
}

double noisy_delta_c_spp(double y, double a, const NoiseModel &noise) {
    require_rescaled(y, a);
    double c = noise.swap_attenuation();
    double u = c * std::pow(y, a);
    if (u > 1.0 + 1e-15) {
        throw std::domain_error("noisy_delta_c_spp: c y^a exceeds 1");
    }
    PurificationResult pur = noisy_purify_equal(WernerState(std::min(1.0, u)), noise);
    double qm = pur.success_probability * concurrence_of(pur.state.x() * std::pow(y, 1.0 - a));
    return qm - concurrence_of(c * y);
}

double noisy_delta_c_spp_closed_form(double y, double a, const NoiseModel &noise, LowBranchSlope slope) {
    double c = noise.swap_attenuation();
    double d = noise.delta();
    double al = noise.alpha();
    double w = c * y;
    double g = w <= kThird ? 1.0 - static_cast<int>(slope) * w : 4.0 * w - 1.0;
    double shift = std::pow(y, a) - 2.0 * (1.0 - d) / (1.0 - 2.0 * d) * y;
    return 0.25 * (4.0 * c * c * (1.0 - d) * (1.0 - d) / (1.0 - 2.0 * d) * y * y - g - 2.0 * c * d * y - al -
                   c * c * (1.0 - 2.0 * d) * shift * shift);
}

double noisy_delta_c_max(const NoiseModel &noise) {
    double d = noise.delta();
    return 0.25 * (4.0 * (1.0 - d) * (1.0 - d) / (9.0 * (1.0 - 2.0 * d)) - (1.0 + 2.0 * d) / 3.0 - noise.alpha());
}

NoisyPeak noisy_peak_location(const NoiseModel &noise) {
    double d = noise.delta();
    double y = 1.0 / (3.0 * noise.swap_attenuation());
    double a = std::log(2.0 * (1.0 - d) / (1.0 - 2.0 * d) * y) / std::log(y);
    if (!(a > 0 && a <= 1)) {
        throw std::domain_error("noisy_peak_location: optimal subpath fraction outside (0, 1]");
    }
    return {y, a};
}

NoisyFormComparison compare_noisy_forms(const NoiseModel &noise, int grid) {
    if (grid < 2) {
        throw std::invalid_argument("compare_noisy_forms: grid must be >= 2");
    }
    double c = noise.swap_attenuation();
    NoisyFormComparison out{0, 0, 0, 0};
    for (int i = 1; i < grid; i++) {
        double y = static_cast<double>(i) / grid / c;
        for (int j = 1; j < grid; j++) {
            double a = static_cast<double>(j) / grid;
            double u = c * std::pow(y, a);
            if (u > 1) {
                continue;
            }
            PurificationResult pur = noisy_purify_equal(WernerState(u), noise);
            if (!(pur.state.x() * std::pow(y, 1.0 - a) > kThird)) {
                continue;
            }
            double derived = noisy_delta_c_spp(y, a, noise);
            double one = std::abs(derived - noisy_delta_c_spp_closed_form(y, a, noise, LowBranchSlope::kOne));
            double two = std::abs(derived - noisy_delta_c_spp_closed_form(y, a, noise, LowBranchSlope::kTwo));
            out.points++;
            if (c * y > kThird) {
                out.max_diff_high = std::max(out.max_diff_high, two);
            } else {
                out.max_diff_low_slope_one = std::max(out.max_diff_low_slope_one, one);
                out.max_diff_low_slope_two = std::max(out.max_diff_low_slope_two, two);
            }
        }
    }
    return out;
}

}  // namespace wernet
