// Copyright 2026 The svrgeg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SVRGEG_RNG_H_
#define SVRGEG_RNG_H_

#include <cstdint>

namespace svrgeg {

// SplitMix64 (Steele, Lea & Flood 2014). The output of every method below is
// fully specified here, so a given seed reproduces bit-identical streams on
// every platform with IEEE-754 doubles:
//
//   Next():      state += 0x9e3779b97f4a7c15; z = state;
//                z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9;
//                z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
//                return z ^ (z >> 31);
//   Uniform():   (Next() >> 11) * 2^-53, in [0, 1).
//   Normal():    Box-Muller, cosine branch only:
//                u1 = 1 - Uniform() (in (0, 1]), u2 = Uniform(),
//                sqrt(-2 ln u1) * cos(2 pi u2). Two Next() calls per draw.
//   Below(n):    rejection sampling on the top of the 64-bit range, so the
//                result is exactly uniform on {0, ..., n-1}.
//   Split():     a child generator seeded with Next() of the parent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double Uniform() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

  double Normal();

  std::uint64_t Below(std::uint64_t n);

  Rng Split() { return Rng(Next()); }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace svrgeg

#endif  // SVRGEG_RNG_H_
