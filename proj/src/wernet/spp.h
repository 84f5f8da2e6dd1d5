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

#ifndef WERNET_SPP_H
#define WERNET_SPP_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wernet/noise.h"
#include "wernet/numeric.h"
#include "wernet/protocol.h"

namespace wernet {

// Single purification protocol (one segment) in rescaled variables y = x^L,
// a = n / L, b = m / L.

/// 1 - y below 1/3, 5 y - 1 from 1/3 on.
double threshold_g(double y);

/// Closed-form gain of the single purification protocol. Clamped the same way
/// as the protocol pipeline: the expected concurrence is never negative.
/// Requires 0 < y <= 1, 0 < a <= 1, 0 <= b < 1.
double delta_c_spp(double y, double a, double b);

/// The unclamped quadratic form, 4 * gain = y^b B(y, a) - g(y).
double delta_c_spp_unclamped(double y, double a, double b);

/// B(y, a) = 4 y^2 + y - (y^a - 2 y)^2.
double spp_b_factor(double y, double a);

/// Zeros in a of the b = 0 gain, ascending. Empty unless
/// (sqrt(5) - 1) / 4 <= y <= 1/2.
std::vector<double> spp_roots_a(double y);

/// The b at which the gain vanishes for fixed (y, a). Throws std::domain_error
/// when the b = 0 gain is not positive.
double spp_boundary_b(double y, double a);

/// ln(2 / (1 + 4 z - 3 z^2)) / ln z on [1/3, 1], with the limit 1 at z = 1.
/// Throws std::domain_error outside [1/3, 1].
double threshold_c(double z);

struct PurificationPeak {
    double z_star;
    double gain;
};

/// Largest single-round gain x'(z, z) - z and where it occurs.
PurificationPeak delta_p_max();

/// 3 z^4 + 8 z^2 - 8 z + 1; its root in (1/3, 1) is the peak location.
double delta_p_stationarity(double z);

struct SppExtremals {
    double y_lo_min;
    double a_at_y_lo_min;
    double y_hi_max;
    double max_gain;
    double a_at_max_gain;
    double b_max;
};

SppExtremals spp_extremals();

// Multiple purifications: n equal segments a_i = alpha / n with b_i = 0.

/// Root residual of the positive-concurrence equality, in log form.
double multipur_lo_residual(double y, int n, double alpha);
/// Twice the gain over the direct strategy, before clamping.
double multipur_hi_residual(double y, int n, double alpha);
/// 3 y^(2 alpha / 3 + 1) - y^alpha - 3 y + 1, the gain sign as n grows.
double multipur_hi_residual_inf(double y, double alpha);

/// Throws std::invalid_argument unless n >= 1 and 0 < alpha <= 1.
GoodInterval multipur_bounds(int n, double alpha);

/// The n -> infinity limit. Throws DegenerateEquationError for alpha below
/// kDegenerateAlpha, where the upper-bound equation vanishes identically.
GoodInterval multipur_bounds_inf(double alpha);
inline constexpr double kDegenerateAlpha = 1e-8;

// Large-L expansions.

struct AsymptoticRoot {
    double y_hat;
    double x_star;
};

/// Second-order root x* of a constraint whose exponents are perturbed by
/// d_i = counts_i / L. The unperturbed root y_hat is the first sign change of
/// the unperturbed polynomial scanning up from `search.lo`.
/// Throws HigherOrderError when the first-order coefficient vanishes.
AsymptoticRoot asymptotic_root(
    const ConstraintPolynomial &poly,
    std::span<const int> counts,
    int L,
    Bracket search = {1e-9, 1.0 - 1e-6});

enum class GainBranch { kLow, kHigh };

/// 4 * gain as a polynomial in parameters (a, b).
ConstraintPolynomial spp_constraint_polynomial(GainBranch branch);

/// 4 * gain with a = 1 - d1 and b = d1 - d2: a subpath of L - r links
/// purified against an alternate path of L - q links, d = (r, q) / L.
ConstraintPolynomial near_full_length_polynomial(GainBranch branch);

struct XInterval {
    double x_lo;
    double x_hi;
};

/// Second-order good interval in x for the near-full-length geometry above.
/// Empty unless 3 q > 2 r. Requires 0 <= q <= r < L.
std::optional<XInterval> near_full_length_interval(int q, int r, int L);

struct ShiftedRoot {
    double y_star;
    double x_star;
};

/// First-order move of the b = 0 root y_hat (fixed a) when the alternate path
/// is m links longer than the subpath. Throws std::invalid_argument if y_hat
/// is not a b = 0 root and HigherOrderError if the slope in y vanishes.
ShiftedRoot small_b_shift(int m, double a, int L, double y_hat);

// Noisy operations, b = 0.

/// Gain with noisy swaps and purification, composed from the noisy
/// primitives. Throws std::domain_error if c y^a > 1.
double noisy_delta_c_spp(double y, double a, const NoiseModel &noise);

/// Coefficient of w in the low branch of the threshold 1 - k w.
enum class LowBranchSlope { kOne = 1, kTwo = 2 };

/// The quadratic closed form of the noisy gain, unclamped.
double noisy_delta_c_spp_closed_form(double y, double a, const NoiseModel &noise, LowBranchSlope slope);

/// Maximum of the noisy gain over (y, a); independent of p1.
double noisy_delta_c_max(const NoiseModel &noise);

/// y = 1 / (3 c) and the a with y^a = 2 (1 - delta) y / (1 - 2 delta).
struct NoisyPeak {
    double y;
    double a;
};
NoisyPeak noisy_peak_location(const NoiseModel &noise);

struct NoisyFormComparison {
    int points;
    double max_diff_high;
    double max_diff_low_slope_one;
    double max_diff_low_slope_two;
};

/// Compares the composed noisy gain against both closed forms on a regular
/// (y, a) grid, restricted to points where the protocol concurrence is
/// positive.
NoisyFormComparison compare_noisy_forms(const NoiseModel &noise, int grid);

}  // namespace wernet

#endif
