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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "wernet/numeric.h"
#include "wernet/protocol.h"
#include "wernet/spp.h"

namespace wernet {

namespace {

double phi() {
    return (std::sqrt(5.0) - 1.0) / 4.0;
}

// Integral over b in [0, b_m(y, a)] of the gain, in closed form:
// g (t - ln(1 + t)) / (4 ln(1/y)) with t = B / g - 1.
double inner_b_integral(double y, double a) {
    double g = threshold_g(y);
    double t = spp_b_factor(y, a) / g - 1.0;
    if (!(t > 0)) {
        return 0.0;
    }
    double excess;
    if (t < 1e-3) {
        excess = t * t * (0.5 - t * (1.0 / 3.0 - t * (0.25 - t * (0.2 - t / 6.0))));
    } else {
        excess = t - std::log1p(t);
    }
    return g * excess / (-4.0 * std::log(y));
}

}  // namespace

double f_of_y(double y, double tolerance) {
    if (!(y > 0 && y < 1)) {
        throw std::invalid_argument("f_of_y: requires 0 < y < 1");
    }
    std::vector<double> roots = spp_roots_a(y);
    if (roots.size() != 2 || !(roots[1] > roots[0])) {
        return 0.0;
    }
    auto integrand = [y](double a) { return (1.0 - a) * inner_b_integral(y, a); };
    return integrate_adaptive(integrand, roots[0], roots[1], tolerance);
}

double h_of_s(double s, double tolerance) {
    return f_of_y(std::exp(-s), tolerance);
}

double big_a_constant(const QuadratureOptions &options) {
    double s_lo = std::log(2.0);
    double s_mid = std::log(3.0);
    double s_hi = -std::log(phi());
    auto integrand = [&](double s) { return s * s * s * h_of_s(s, options.tolerance); };
    // h has a kink at s = ln 3, where the threshold switches branch.
    if (options.panels > 0) {
        return integrate_panels(integrand, s_lo, s_mid, options.panels) +
               integrate_panels(integrand, s_mid, s_hi, options.panels);
    }
    return integrate_adaptive(integrand, s_lo, s_mid, options.tolerance) +
           integrate_adaptive(integrand, s_mid, s_hi, options.tolerance);
}

const CriticalConstants &critical_constants() {
    static const CriticalConstants constants{std::log(2.0), -std::log(phi()), big_a_constant()};
    return constants;
}

AsymptoticGain asymptotic_gain(double N, double epsilon, double radius_prefactor) {
    if (!(N > 0) || !(epsilon > 0 && epsilon < 1) || !(radius_prefactor > 0)) {
        throw std::invalid_argument("asymptotic_gain: requires N > 0, 0 < epsilon < 1, prefactor > 0");
    }
    double A = critical_constants().A;
    double r2 = radius_prefactor * radius_prefactor;
    return {A / (N * N * std::pow(epsilon, 4)), r2 * r2 * A * std::pow(N, -2.0 / 3.0)};
}

double discrete_gain_sum(double N, double x, int L_max) {
    if (L_max < 3 || !(N > 0)) {
        throw std::invalid_argument("discrete_gain_sum: requires L_max >= 3 and N > 0");
    }
    WernerState s(x);
    double total = 0;
    for (int L = 3; L <= L_max; L++) {
        for (int n = 2; n <= L - 1; n++) {
            double row = 0;
            for (int m = 0; m <= n - 1; m++) {
                double gain = spp_delta_concurrence(s, L, n, m);
                // The gain only falls as the alternate path grows.
                if (!(gain > 0)) {
                    break;
                }
                row += m == 0 ? 0.5 * gain : gain;
            }
            total += (L - n + 1) * row;
        }
    }
    return total / (N * N);
}

}  // namespace wernet
