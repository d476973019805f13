// Copyright 2026 The pipround Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PIPROUND_RANDOM_H_
#define PIPROUND_RANDOM_H_

#include <cstdint>
#include <limits>

namespace pipround {

// Counter-based random stream. The i-th draw of a stream is a pure function
// of (key, i), so a stream keyed by (seed, trial) yields the same values no
// matter which thread runs the trial or in which order trials execute.
//
// Satisfies UniformRandomBitGenerator, but library code only uses Uniform()
// and Next() so results do not depend on the standard library's
// distribution implementations.
class RandomStream {
 public:
  using result_type = uint64_t;

  explicit RandomStream(uint64_t key) : key_(Mix(key)) {}

  // Independent substream for one trial of an experiment seeded by `seed`.
  static RandomStream ForTrial(uint64_t seed, uint64_t trial) {
    return RandomStream(Mix(seed) ^ Mix(trial + 0x632be59bd9b4e019ULL));
  }

  // Derives a child seed; used to give sweep cells and generator calls
  // their own streams from one master seed.
  static uint64_t DeriveSeed(uint64_t seed, uint64_t index) {
    return Mix(Mix(seed) + index * 0x9e3779b97f4a7c15ULL);
  }

  uint64_t Next() { return Mix(key_ + (counter_++) * 0x9e3779b97f4a7c15ULL); }

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  // True with probability p (p <= 0 never, p >= 1 always).
  bool Bernoulli(double p) { return Uniform() < p; }

  // Uniform integer in [0, bound). bound must be positive.
  uint64_t Below(uint64_t bound) {
    // Lemire's multiply-shift with rejection keeps the result unbiased.
    for (;;) {
      const unsigned __int128 product =
          static_cast<unsigned __int128>(Next()) * bound;
      const uint64_t low = static_cast<uint64_t>(product);
      if (low >= (-bound) % bound) return static_cast<uint64_t>(product >> 64);
    }
  }

  uint64_t counter() const { return counter_; }

  result_type operator()() { return Next(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

 private:
  // SplitMix64 finalizer.
  static constexpr uint64_t Mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace pipround

#endif  // PIPROUND_RANDOM_H_
