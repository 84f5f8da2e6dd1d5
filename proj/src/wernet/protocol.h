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

#ifndef WERNET_PROTOCOL_H
#define WERNET_PROTOCOL_H

#include <span>
#include <vector>

#include "wernet/werner.h"

namespace wernet {

/// A purified segment in rescaled units: the subpath covers a fraction `a` of
/// the shortest path and the alternate path is longer by a fraction `b`.
struct Segment {
    double a;
    double b;
};

/// A protocol instance in rescaled variables y = x^L.
class SegmentPlan {
   public:
    /// Throws std::invalid_argument unless 0 < y <= 1, every a in (0, 1],
    /// every b in [0, 1) and the a values sum to at most 1.
    SegmentPlan(double y, std::vector<Segment> segments);

    double y() const {
        return y_;
    }
    const std::vector<Segment> &segments() const {
        return segments_;
    }
    /// 1 - sum(a), clamped at 0.
    double unpurified_fraction() const;

   private:
    double y_;
    std::vector<Segment> segments_;
};

/// Swap n links into one, swap n + m links into another, purify the pair.
/// Requires n >= 1 and m >= 0.
PurificationResult swap_purify_segment(WernerState x, int n, int m);

/// swap_purify_segment in rescaled variables: purify(y^a, y^(a+b)).
PurificationResult swap_purify_rescaled(double y, Segment s);

/// Gain of one purification on an integer geometry: subpath of n links
/// against an alternate of n + m links, on a shortest path of L links.
/// Requires 1 <= n <= L and m >= 0.
double spp_delta_concurrence(WernerState x, int L, int n, int m);

/// Concurrence after swapping along all L links.
double direct_concurrence(WernerState x, int L);

/// Expected concurrence of the protocol: all purifications must succeed and a
/// failed run contributes zero.
double qm_expected_concurrence(const SegmentPlan &plan);

/// qm_expected_concurrence minus the direct concurrence at y.
double delta_concurrence(const SegmentPlan &plan);

struct ConstraintCheck {
    std::vector<bool> purification_improves;
    bool positive_concurrence;
    bool beats_direct;

    bool good() const;
};

ConstraintCheck check_constraints(const SegmentPlan &plan);

struct GoodInterval {
    double y_lo;
    double y_hi;
};

/// The connected range of y around 1/3 where the plan shape strictly beats
/// the direct strategy. Both ends are 1/3 when the gain vanishes there.
/// Throws NoGoodIntervalError when the final parameter at y = 1/3 is below 1/3.
GoodInterval good_interval(std::span<const Segment> segments);

/// y^(1/L). Requires 0 < y <= 1 and L >= 1.
double unscale_root(double y, int L);

/// Sum of K_j y^(c_j0 + sum_i c_ji d_i).
class ConstraintPolynomial {
   public:
    struct Term {
        double coefficient;
        double offset;
        std::vector<double> weights;
    };

    /// All terms must carry the same number of weights.
    explicit ConstraintPolynomial(std::vector<Term> terms);

    const std::vector<Term> &terms() const {
        return terms_;
    }
    size_t num_parameters() const {
        return num_parameters_;
    }
    double evaluate(double y, std::span<const double> d) const;
    /// Value with every d_i = 0.
    double evaluate_unperturbed(double y) const;

   private:
    std::vector<Term> terms_;
    size_t num_parameters_;
};

}  // namespace wernet

#endif
