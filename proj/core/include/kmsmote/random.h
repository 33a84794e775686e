// Copyright 2026 The kmsmote Authors.
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

#ifndef KMSMOTE_RANDOM_H_
#define KMSMOTE_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace kmsmote {

// Seeded generator with platform-independent output.
//
// std::mt19937_64 has a fully specified output sequence, but the standard
// distributions do not, so the draws below are derived from raw engine
// output by fixed formulas. Results are bit-identical across standard
// libraries for equal seeds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double NextUnit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on {0, ..., n-1}; n must be positive. Unbiased (rejection).
  std::size_t UniformIndex(std::size_t n);

  // Standard normal draw (Box-Muller, one variate per call).
  double NextNormal();

 private:
  std::mt19937_64 engine_;
};

// Stable 64-bit FNV-1a hash, used to key substreams by name.
std::uint64_t HashString(std::string_view text);

// Derives an independent substream seed from a base seed and a path of
// identifiers, via SplitMix64 finalization. Order of ids matters.
std::uint64_t DeriveSeed(std::uint64_t seed,
                         std::initializer_list<std::uint64_t> ids);

// Stream tags shared between modules. Every randomized operation draws from
// DeriveSeed(seed, {tag, ...}); the generation tag is the shared draw-order
// contract between SMOTE and k-means SMOTE.
namespace streams {
inline constexpr std::uint64_t kGeneration = 0x67656e;   // "gen"
inline constexpr std::uint64_t kClustering = 0x6b6d;     // "km"
inline constexpr std::uint64_t kUndersample = 0x7573;    // "us"
inline constexpr std::uint64_t kFolds = 0x666f6c64;      // "fold"
inline constexpr std::uint64_t kBlobs = 0x626c6f62;      // "blob"
inline constexpr std::uint64_t kResample = 0x72736d70;   // "rsmp"
}  // namespace streams

}  // namespace kmsmote

#endif  // KMSMOTE_RANDOM_H_
