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

#ifndef WERNET_CRITICAL_H
#define WERNET_CRITICAL_H

namespace wernet {

// Erdos-Renyi networks at the critical point N p = 1, where every SPP
// geometry has density g(L, n) / N^2.

/// Density of gain at rescaled parameter y: the integral of (1 - a) times the
/// single-purification gain over the (a, b) region where it is positive.
/// Zero outside ((sqrt(5) - 1) / 4, 1/2).
/// `tolerance` is absolute.
double f_of_y(double y, double tolerance = 1e-12);

/// f(exp(-s)).
double h_of_s(double s, double tolerance = 1e-12);

struct QuadratureOptions {
    /// 0 selects adaptive quadrature; otherwise a fixed composite rule with
    /// this many panels on each side of s = ln 3.
    int panels = 0;
    /// Absolute, for both the outer integral and each f(y).
    double tolerance = 1e-12;
};

/// The integral of s^3 h(s) over [ln 2, -ln((sqrt(5) - 1) / 4)].
double big_a_constant(const QuadratureOptions &options = {});

struct CriticalConstants {
    double s_lo;
    double s_hi;
    double A;
};

/// Integration limits and A, computed once.
const CriticalConstants &critical_constants();

struct AsymptoticGain {
    double value;
    double ceiling;
};

/// value = A / (N^2 eps^4); ceiling = (prefactor^4) A N^(-2/3), where the
/// largest cluster has radius prefactor * N^(1/3).
AsymptoticGain asymptotic_gain(double N, double epsilon, double radius_prefactor = 3.0);

/// Sum over geometries 3 <= L <= L_max, 2 <= n <= L - 1, 0 <= m <= n - 1 of
/// g(L, n) / N^2 times the clamped gain at x.
double discrete_gain_sum(double N, double x, int L_max);

}  // namespace wernet

#endif
