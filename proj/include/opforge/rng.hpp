// Copyright 2026 The opinion-forge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

namespace opforge {

// splitmix64 finalizer. Used both as the generator step and to derive
// independent streams from (master_seed, stream index). Self-contained so
// results are bit-identical across standard libraries and platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based generator: state advances by the splitmix64 increment, output
// is the finalizer. Streams derived from distinct (master, index) pairs are
// effectively independent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Stream `index` of a master seed. Documented derivation (provenance
  // contract): state = splitmix64(splitmix64(master) ^ (index + 1)).
  static Rng stream(std::uint64_t master, std::uint64_t index) {
    return Rng(splitmix64(splitmix64(master) ^ (index + 1)));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Uniform in [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

  bool fair_coin() { return (next_u64() & 1ULL) != 0; }

  // Uniform integer in [0, bound). Rejection-free multiply-shift would bias
  // for huge bounds; bounds here are < 2^32 so 64-bit multiply is exact
  // enough, but we keep rejection sampling for exact uniformity.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t threshold = (0ULL - bound) % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace opforge
