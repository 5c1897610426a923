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

#ifndef COMBINFER_PARAM_STORE_HPP
#define COMBINFER_PARAM_STORE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "combinfer/distributions.hpp"
#include "combinfer/errors.hpp"

namespace combinfer {

enum class ParamRole { Theta, Phi };

/// Named unconstrained parameter vectors with gradient accumulators.
/// Entries iterate in insertion order, which fixes the reduction order for
/// every deterministic gradient merge.
class ParameterStore {
 public:
  struct Entry {
    std::string name;
    ParamRole role;
    std::vector<double> value;
    std::vector<double> grad;
  };

  void add(std::string name, ParamRole role, std::vector<double> init);
  bool contains(std::string_view name) const;

  std::span<const double> values(std::string_view name) const;
  std::span<double> values_mut(std::string_view name);
  std::span<const double> grad(std::string_view name) const;
  ParamRole role(std::string_view name) const;

  void accumulate_grad(std::string_view name, std::size_t index, double v);
  void zero_grad();
  double grad_norm(ParamRole role) const;

  std::span<const Entry> entries() const { return entries_; }
  std::span<Entry> entries_mut() { return entries_; }
  std::size_t size() const { return entries_.size(); }

  nlohmann::json to_json() const;
  static ParameterStore from_json(const nlohmann::json& j);

 private:
  const Entry& find(std::string_view name) const;
  Entry& find_mut(std::string_view name);

  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Per-worker gradient sink merged into a store in entry order.
class GradBuffer {
 public:
  explicit GradBuffer(const ParameterStore& store);
  void accumulate(std::string_view name, std::size_t index, double v);
  void add_scaled_to(ParameterStore& store, double scale) const;
  void add_scaled(const GradBuffer& other, double scale);

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<double>> grads_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Linear map from store entries to a distribution's unconstrained
/// parameters, recorded alongside a trace site so the site can be rebuilt and
/// scored under the *current* parameter values:
///
///   u[target] = fixed_u[target] + sum over terms of coeff * store[entry][index]
///
/// Term coefficients are data (for example the observation a proposal's
/// logits are linear in), frozen when the site is recorded; because the map
/// is linear, the frozen Jacobian stays exact for any later parameter values.
struct ParamBinding {
  struct Term {
    std::string entry;
    std::uint32_t index = 0;
    std::uint32_t target = 0;
    double coeff = 1.0;
  };

  Family family = Family::NormalDiag;
  std::size_t dim = 0;
  std::vector<double> fixed_u;
  std::vector<Term> terms;

  DistDescriptor build(const ParameterStore& store) const;
  std::vector<double> unconstrained(const ParameterStore& store) const;
  /// Common role of every term's entry; throws InvalidValue when mixed.
  ParamRole role(const ParameterStore& store) const;
};

/// Identity binding: the distribution's whole unconstrained vector is the
/// slice store[entry][offset .. offset+len).
ParamBinding bind_full(Family f, std::string entry, std::size_t dim, std::size_t offset = 0);

/// NormalDiag with a fixed (non-learned) scale; the entry slice supplies the
/// mean vector only.
ParamBinding bind_normal_mean(std::string entry, std::size_t offset,
                              std::span<const double> fixed_scale);

}  // namespace combinfer

#endif  // COMBINFER_PARAM_STORE_HPP
