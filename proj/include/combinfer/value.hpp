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

#ifndef COMBINFER_VALUE_HPP
#define COMBINFER_VALUE_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "combinfer/errors.hpp"

namespace combinfer {

/// Runtime value flowing through models: a real scalar, an integer index, a
/// fixed-length real vector, or a list of values. Trace records only ever
/// hold the first three kinds; lists exist for model outputs and carries.
class Value {
 public:
  using List = std::vector<Value>;

  Value() : v_(0.0) {}
  Value(double x) : v_(x) {}                            // NOLINT(google-explicit-constructor)
  Value(std::int64_t i) : v_(i) {}                      // NOLINT(google-explicit-constructor)
  Value(int i) : v_(static_cast<std::int64_t>(i)) {}    // NOLINT(google-explicit-constructor)
  Value(std::vector<double> v) : v_(std::move(v)) {}    // NOLINT(google-explicit-constructor)
  Value(List xs) : v_(std::move(xs)) {}                 // NOLINT(google-explicit-constructor)

  bool is_real() const { return std::holds_alternative<double>(v_); }
  bool is_index() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_vector() const { return std::holds_alternative<std::vector<double>>(v_); }
  bool is_list() const { return std::holds_alternative<List>(v_); }

  double real() const {
    if (!is_real()) throw InvalidValue("value is not a real scalar");
    return std::get<double>(v_);
  }
  std::int64_t index() const {
    if (!is_index()) throw InvalidValue("value is not an integer index");
    return std::get<std::int64_t>(v_);
  }
  const std::vector<double>& vec() const {
    if (!is_vector()) throw InvalidValue("value is not a real vector");
    return std::get<std::vector<double>>(v_);
  }
  const List& list() const {
    if (!is_list()) throw InvalidValue("value is not a list");
    return std::get<List>(v_);
  }
  List& list_mut() {
    if (!is_list()) throw InvalidValue("value is not a list");
    return std::get<List>(v_);
  }

  bool operator==(const Value& other) const { return v_ == other.v_; }
  bool operator!=(const Value& other) const { return !(*this == other); }

 private:
  std::variant<double, std::int64_t, std::vector<double>, List> v_;
};

}  // namespace combinfer

#endif  // COMBINFER_VALUE_HPP
