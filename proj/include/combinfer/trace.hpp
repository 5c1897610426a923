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

#ifndef COMBINFER_TRACE_HPP
#define COMBINFER_TRACE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "combinfer/param_store.hpp"

namespace combinfer {

/// Hierarchical random-variable name: non-empty segments joined by '/'.
/// Rendering is injective because segments may not contain '/'.
class Address {
 public:
  explicit Address(std::string rendered);
  static Address join(std::string_view prefix, std::string_view rest);

  const std::string& str() const { return s_; }
  std::vector<std::string_view> segments() const;

  bool operator==(const Address& o) const { return s_ == o.s_; }

 private:
  struct Unchecked {};
  Address(std::string s, Unchecked) : s_(std::move(s)) {}

  std::string s_;
};

/// Throws InvalidValue unless `addr` renders a valid address.
void validate_address(std::string_view addr);
/// Throws InvalidValue unless `segment` is a valid single segment.
void validate_segment(std::string_view segment);

enum class Role { Sampled, Observed, Replayed };

std::string role_name(Role r);

/// One random-variable record. Observed sites contribute to the likelihood
/// weight; Sampled/Replayed sites contribute to the trace density. log_prob
/// always equals log_prob(dist, value), recomputable bitwise.
struct RVRecord {
  Address address;
  DistDescriptor dist;
  Value value;
  double log_prob = 0.0;
  Role role = Role::Sampled;
  std::optional<ParamBinding> binding;
};

/// Insertion-ordered map from addresses to records.
class Trace {
 public:
  void add(RVRecord rec);  // DuplicateAddress on repeats
  bool contains(std::string_view address) const;
  const RVRecord* find(std::string_view address) const;
  const RVRecord& at(std::string_view address) const;

  std::span<const RVRecord> records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  void reserve(std::size_t n) { records_.reserve(n); }

  /// Sum of all record log-densities in record order; 0 for an empty trace,
  /// -inf as soon as any record is -inf.
  double log_joint() const;

  /// Copy with one record's value swapped and its log_prob recomputed under
  /// the record's stored distribution (transition kernels propose this way).
  Trace with_value(std::string_view address, Value v) const;

  nlohmann::json to_json() const;

 private:
  std::vector<RVRecord> records_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Concatenation preserving a-then-b record order; AddressCollision names the
/// first offending address.
Trace merge(const Trace& a, const Trace& b);

/// Every address gains `segment` as a new head; order and densities intact.
Trace prefix(const Trace& t, std::string_view segment);

/// A model evaluation's result: the (x, w) pair plus the trace behind it.
/// log_weight is -inf or finite, never +inf.
struct WeightedSample {
  Value output;
  Trace trace;
  double log_weight = 0.0;
};

}  // namespace combinfer

#endif  // COMBINFER_TRACE_HPP
