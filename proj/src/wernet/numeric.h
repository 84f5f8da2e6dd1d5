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

#ifndef WERNET_NUMERIC_H
#define WERNET_NUMERIC_H

// Thin wrappers over Boost.Math root finding and quadrature with the
// tolerances used throughout the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "wernet/errors.h"

namespace wernet {

/// Bracket width at which bisection stops. Tighter than the 1e-12 argument
/// tolerance the analysis routines promise.
inline constexpr double kBisectionWidth = 1e-14;

struct Bracket {
    double lo;
    double hi;
};

/// Root of `f` in [lo, hi] by bisection. Requires f(lo) and f(hi) to differ in
/// sign (a zero at either end is returned directly).
template <typename F>
double bisect_root(F &&f, double lo, double hi, double width = kBisectionWidth) {
    double f_lo = f(lo);
    double f_hi = f(hi);
    if (f_lo == 0) {
        return lo;
    }
    if (f_hi == 0) {
        return hi;
    }
    if (!(std::signbit(f_lo) != std::signbit(f_hi))) {
        throw NumericalError(
            "bisect_root: no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    std::uintmax_t max_iter = 400;
    auto done = [width](double a, double b) { return std::abs(b - a) <= width; };
    auto [a, b] = boost::math::tools::bisect(f, lo, hi, done, max_iter);
    if (!done(a, b)) {
        throw NumericalError("bisect_root: iteration limit reached");
    }
    return 0.5 * (a + b);
}

/// Scans `samples` equal steps from lo to hi and returns the first
/// sub-interval over which `f` changes sign (or touches zero).
template <typename F>
std::optional<Bracket> first_sign_change(F &&f, double lo, double hi, int samples) {
    double prev_x = lo;
    double prev_f = f(lo);
    if (prev_f == 0) {
        return Bracket{lo, lo};
    }
    for (int k = 1; k <= samples; k++) {
        double x = (k == samples) ? hi : lo + (hi - lo) * k / samples;
        double fx = f(x);
        if (fx == 0 || std::signbit(fx) != std::signbit(prev_f)) {
            return Bracket{prev_x, x};
        }
        prev_x = x;
        prev_f = fx;
    }
    return std::nullopt;
}

/// Finds the root of `f` nearest `lo` by scanning towards `hi` then
/// bisecting. `hi < lo` scans downwards.
template <typename F>
std::optional<double> first_root(F &&f, double lo, double hi, int samples = 256) {
    auto bracket = first_sign_change(f, lo, hi, samples);
    if (!bracket) {
        return std::nullopt;
    }
    if (bracket->lo == bracket->hi) {
        return bracket->lo;
    }
    double a = std::min(bracket->lo, bracket->hi);
    double b = std::max(bracket->lo, bracket->hi);
    return bisect_root(f, a, b);
}

namespace detail {

template <typename F>
double integrate_bisecting(F &f, double a, double b, double abs_tol, int depth) {
    double error = 0;
    double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &error);
    if (error <= abs_tol || depth == 0) {
        return value;
    }
    double m = 0.5 * (a + b);
    return integrate_bisecting(f, a, m, 0.5 * abs_tol, depth - 1) +
           integrate_bisecting(f, m, b, 0.5 * abs_tol, depth - 1);
}

}  // namespace detail

/// Adaptive 15-point Gauss-Kronrod quadrature to an absolute error bound:
/// each panel is halved until its Kronrod error estimate falls below its
/// share of `abs_tolerance`.
template <typename F>
double integrate_adaptive(F &&f, double a, double b, double abs_tolerance, int max_depth = 30) {
    if (b <= a) {
        return 0.0;
    }
    double value = detail::integrate_bisecting(f, a, b, abs_tolerance, max_depth);
    if (!std::isfinite(value)) {
        throw NumericalError("integrate_adaptive: non-finite result");
    }
    return value;
}

/// Fixed composite rule: `panels` equal sub-intervals, one 15-point Kronrod
/// evaluation each. Used for step-halving checks.
template <typename F>
double integrate_panels(F &&f, double a, double b, int panels) {
    if (b <= a) {
        return 0.0;
    }
    double sum = 0;
    double h = (b - a) / panels;
    for (int k = 0; k < panels; k++) {
        double lo = a + h * k;
        double hi = (k + 1 == panels) ? b : lo + h;
        sum += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, lo, hi, 0, 0.0);
    }
    return sum;
}

}  // namespace wernet

#endif
