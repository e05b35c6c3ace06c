// Copyright 2026 The htdp Authors
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

#ifndef HTDP_RANDOM_STREAM_H_
#define HTDP_RANDOM_STREAM_H_

#include <cstdint>
#include <optional>
#include <random>

namespace htdp {

// Bumped whenever the draw sequence produced for a given (seed, stream_id)
// changes. Results files record it so old runs can be told apart.
inline constexpr int kRandomStreamVersion = 1;

// Deterministic source of randomness identified by (seed, stream_id).
//
// The engine is std::mt19937_64 seeded through std::seed_seq, both of which
// have a sequence fixed by the C++ standard. All continuous variates are
// produced by the transforms below rather than by <random> distributions,
// whose algorithms are implementation-defined, so a stream yields the same
// values with every conforming standard library.
class RandomStream {
 public:
  RandomStream(uint64_t seed, uint64_t stream_id);

  uint64_t seed() const { return seed_; }
  uint64_t stream_id() const { return stream_id_; }

  // Returns a fresh stream keyed by this stream's identity and `child`.
  // Does not advance this stream.
  RandomStream Derive(uint64_t child) const;

  uint64_t NextBits() { return engine_(); }

  // Uniform on the open interval (0, 1); never returns 0 or 1.
  double Uniform();

  // Uniform integer in [0, n). Requires n > 0.
  uint64_t UniformIndex(uint64_t n);

  // +1 or -1 with equal probability.
  double RandomSign();

  double StandardNormal();

  // Exponential with rate 1.
  double StandardExponential();

  // Gamma(shape, 1). Requires shape > 0.
  double Gamma(double shape);

  // log of a Gamma(shape, 1) variate, accurate for small shapes where the
  // variate itself underflows.
  double LogGamma(double shape);

 private:
  uint64_t seed_;
  uint64_t stream_id_;
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

// SplitMix64 finalizer; used to derive stream identities.
uint64_t MixBits(uint64_t x);

}  // namespace htdp

#endif  // HTDP_RANDOM_STREAM_H_
