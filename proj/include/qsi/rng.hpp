// Copyright 2026 The qsi Authors
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

#ifndef QSI_RNG_HPP_
#define QSI_RNG_HPP_

#include <cstdint>

namespace qsi {

/**
 * Splittable, explicitly seeded 64-bit generator (SplitMix64).
 *
 * The standard library engines are portable but the distributions are not;
 * every random quantity in this project is derived from this generator so
 * that a seed reproduces the same run on any platform.
 */
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d4bd49d2b5fb85ULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 bits of precision.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). Lemire multiply-shift; bound > 0.
  uint64_t next_below(uint64_t bound) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  /// Child generator with a stream id; children are independent of the
  /// parent's future output and of each other.
  SplitMix64 split(uint64_t stream) const {
    SplitMix64 mixer(state_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    return SplitMix64(mixer.next_u64());
  }

 private:
  uint64_t state_;
};

/// Deterministic per-stream seed derivation (e.g. one stream per batch run).
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
  return SplitMix64(seed).split(stream).next_u64();
}

}  // namespace qsi

#endif  // QSI_RNG_HPP_
