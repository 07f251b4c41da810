// privkd/rng.h

// Copyright 2026  privkd authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVKD_RNG_H_
#define PRIVKD_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace privkd {

// Derives a child seed from a parent seed and a stream tag (splitmix64).
// Streams derived with distinct tags are independent of draw order, so
// generation stays reproducible no matter how work is scheduled.
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t tag);
std::uint64_t MixSeed(std::uint64_t seed, std::string_view tag);

// Deterministic random source. Distributions are implemented by hand on top
// of std::mt19937_64 so generated streams are identical across standard
// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double Uniform();

  // Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  int UniformInt(int lo, int hi);

  // Standard normal via Box-Muller.
  double Gaussian();

  // Poisson via Knuth's multiplication method; fine for small rates.
  int Poisson(double lambda);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace privkd

#endif  // PRIVKD_RNG_H_
