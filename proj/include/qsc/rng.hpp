// Copyright 2026 qsc developers
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

#ifndef QSC_RNG_HPP
#define QSC_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace qsc {

// Every stochastic operation takes an explicit seed. Child streams are
// derived by mixing the parent seed with a stream tag, so independent parts
// of a run (init, SPSA perturbations, shot noise per sentence) never share a
// generator.

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t seed, std::string_view tag) {
  uint64_t h = splitmix64(seed);
  for (char c : tag) {
    h = splitmix64(h ^ static_cast<uint64_t>(static_cast<unsigned char>(c)));
  }
  return h;
}

inline uint64_t derive_seed(uint64_t seed, std::string_view tag, uint64_t a,
                            uint64_t b = 0) {
  return splitmix64(splitmix64(derive_seed(seed, tag) ^ a) ^ b);
}

inline std::mt19937_64 make_rng(uint64_t seed) {
  return std::mt19937_64(splitmix64(seed));
}

}  // namespace qsc

#endif
