// Copyright 2026 The combinfer Authors.
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

#ifndef COMBINFER_MATH_HPP
#define COMBINFER_MATH_HPP

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace combinfer {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();
inline constexpr double kLogTwoPi = 1.8378770664093454835606594728112;

/// log(sum(exp(x))) over a span; -inf for an empty span or all -inf inputs.
double log_sum_exp(std::span<const double> xs);

/// log(mean(exp(x))); -inf when all inputs are -inf.
double log_mean_exp(std::span<const double> xs);

/// softmax of log-weights computed through log_sum_exp; entries sum to 1.
std::vector<double> softmax_from_log(std::span<const double> log_w);

/// digamma via argument-shift recurrence plus the asymptotic tail.
double digamma(double x);

inline bool all_finite(std::span<const double> xs) {
  for (double x : xs) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace combinfer

#endif  // COMBINFER_MATH_HPP
