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

#ifndef COMBINFER_DISTRIBUTIONS_HPP
#define COMBINFER_DISTRIBUTIONS_HPP

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "combinfer/rng.hpp"
#include "combinfer/value.hpp"

namespace combinfer {

enum class Family { NormalDiag, Categorical, Dirichlet };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// A distribution in its natural (constrained) parameter space.
///
/// NormalDiag: a = mean vector, b = scale vector (componentwise sigma > 0).
/// Categorical: a = probability vector on the simplex; values are indices.
/// Dirichlet: a = concentration vector (componentwise alpha > 0).
struct DistDescriptor {
  Family family = Family::NormalDiag;
  std::vector<double> a;
  std::vector<double> b;

  static DistDescriptor normal_diag(std::vector<double> mean, std::vector<double> scale);
  static DistDescriptor normal(double mean, double sd);  // 1-d convenience
  static DistDescriptor categorical(std::vector<double> probs);
  static DistDescriptor dirichlet(std::vector<double> concentration);

  /// Constrained dimension: d for NormalDiag, K for Categorical/Dirichlet.
  std::size_t dim() const { return a.size(); }

  nlohmann::json to_json() const;
  static DistDescriptor from_json(const nlohmann::json& j);
};

/// Throws InvalidParams unless the descriptor is inside the family's space.
void validate(const DistDescriptor& d);

/// Draw a value in the support; deterministic given the stream state.
Value sample(const DistDescriptor& d, RngStream& rng);

/// Exact log-density; -inf off support. NaN or wrong-kind values raise
/// InvalidValue.
double log_prob(const DistDescriptor& d, const Value& v);

/// Gradient of log_prob with respect to the unconstrained parameters (the
/// constraining bijection's chain rule included). Requires finite log_prob.
std::vector<double> score_grad(const DistDescriptor& d, const Value& v);

/// Length of the unconstrained vector for a family at a given constrained
/// dimension: 2d (mean, log sigma) / K-1 (free logits, last pinned to 0) / K
/// (log concentration).
std::size_t unconstrained_size(Family f, std::size_t dim);

std::vector<double> unconstrain(const DistDescriptor& d);
DistDescriptor constrain(Family f, std::span<const double> u, std::size_t dim);

}  // namespace combinfer

#endif  // COMBINFER_DISTRIBUTIONS_HPP
