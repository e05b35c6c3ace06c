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

#include "htdp/random_stream.h"

#include <cmath>

#include "absl/base/macros.h"

namespace htdp {

uint64_t MixBits(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream::RandomStream(uint64_t seed, uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(stream_id),
                    static_cast<uint32_t>(stream_id >> 32),
                    static_cast<uint32_t>(kRandomStreamVersion)};
  engine_.seed(seq);
}

RandomStream RandomStream::Derive(uint64_t child) const {
  return RandomStream(seed_, MixBits(stream_id_ ^ MixBits(child)));
}

double RandomStream::Uniform() {
  // 53 random mantissa bits, centred in their cell.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

uint64_t RandomStream::UniformIndex(uint64_t n) {
  ABSL_ASSERT(n > 0);
  // Rejection on the largest multiple of n keeps the draw unbiased.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t bits;
  do {
    bits = engine_();
  } while (bits >= limit);
  return bits % n;
}

double RandomStream::RandomSign() { return (engine_() >> 63) ? 1.0 : -1.0; }

double RandomStream::StandardNormal() {
  if (spare_normal_.has_value()) {
    const double z = *spare_normal_;
    spare_normal_.reset();
    return z;
  }
  // Marsaglia polar method.
  double u, v, s;
  do {
    u = 2.0 * Uniform() - 1.0;
    v = 2.0 * Uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * factor;
  return u * factor;
}

double RandomStream::StandardExponential() { return -std::log(Uniform()); }

double RandomStream::Gamma(double shape) {
  ABSL_ASSERT(shape > 0);
  if (shape < 1.0) {
    return Gamma(shape + 1.0) * std::pow(Uniform(), 1.0 / shape);
  }
  // Marsaglia & Tsang (2000).
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    double x, v;
    do {
      x = StandardNormal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = Uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double RandomStream::LogGamma(double shape) {
  ABSL_ASSERT(shape > 0);
  if (shape < 1.0) {
    return std::log(Gamma(shape + 1.0)) + std::log(Uniform()) / shape;
  }
  return std::log(Gamma(shape));
}

}  // namespace htdp
