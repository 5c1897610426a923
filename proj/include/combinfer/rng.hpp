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

#ifndef COMBINFER_RNG_HPP
#define COMBINFER_RNG_HPP

#include <cmath>
#include <cstdint>

namespace combinfer {

/// Counter-based random stream (a keyed SplitMix64 sequence).
///
/// Streams are cheap values: 16 bytes, copyable, and splittable without
/// touching shared state. `substream(i)` derives a stream that depends only
/// on (key, i), which is what makes particle/item evaluation deterministic
/// regardless of scheduling: worker threads never share a stream, they each
/// get the substream of their index.
class RngStream {
 public:
  RngStream() : RngStream(0) {}
  explicit RngStream(std::uint64_t seed) : key_(mix(seed ^ 0x9E3779B97F4A7C15ull)), ctr_(0) {}

  std::uint64_t next_u64() { return mix(key_ + (++ctr_) * 0x9E3779B97F4A7C15ull); }

  /// Independent child stream indexed by position; does not advance this stream.
  RngStream substream(std::uint64_t index) const {
    RngStream child;
    child.key_ = mix(mix(key_ ^ 0xD1B54A32D192ED03ull) + (index + 1) * 0x9E3779B97F4A7C15ull);
    child.ctr_ = 0;
    return child;
  }

  /// Independent child stream drawn from this stream (advances it).
  RngStream fork() {
    RngStream child;
    child.key_ = mix(next_u64() ^ 0xEB44ACCAB455D165ull);
    child.ctr_ = 0;
    return child;
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1]; safe to take logs of.
  double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (two uniforms per draw, no cached spare).
  double normal() {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Gamma(shape, 1) via Marsaglia-Tsang; shape < 1 handled by boosting.
  double gamma(double shape) {
    if (shape < 1.0) {
      return gamma(shape + 1.0) * std::pow(uniform_pos(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x;
      double v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform_pos();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  std::uint64_t key() const { return key_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t ctr_;
};

}  // namespace combinfer

#endif  // COMBINFER_RNG_HPP
