#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

namespace obstructor {

inline constexpr std::uint64_t kDefaultSeed = 42;

using Rng = boost::random::mt19937_64;

// splitmix64 finalizer; gives each (seed, stream) its own generator so that
// trial results do not depend on which worker ran them.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t master, std::uint64_t stream = 0) {
  return Rng(derive_seed(master, stream));
}

// Uniform in [0, bound). bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  boost::random::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  return dist(rng);
}

template <class T>
void shuffle_in_place(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = uniform_below(rng, i);
    std::swap(items[i - 1], items[j]);
  }
}

// count distinct indices from [0, population), in draw order.
inline std::vector<std::uint64_t> sample_indices(std::uint64_t population, std::uint64_t count,
                                                 Rng& rng) {
  if (count > population) count = population;
  std::vector<std::uint64_t> out;
  out.reserve(count);
  if (count * 4 >= population) {
    std::vector<std::uint64_t> all(population);
    std::iota(all.begin(), all.end(), std::uint64_t{0});
    for (std::uint64_t i = 0; i < count; ++i) {
      std::uint64_t j = i + uniform_below(rng, population - i);
      std::swap(all[i], all[j]);
      out.push_back(all[i]);
    }
    return out;
  }
  // Sparse case: Floyd's algorithm keeps memory proportional to count.
  std::vector<std::uint64_t> chosen;
  chosen.reserve(count);
  auto contains = [&](std::uint64_t v) {
    for (auto c : chosen)
      if (c == v) return true;
    return false;
  };
  if (count <= 4096) {
    for (std::uint64_t j = population - count; j < population; ++j) {
      std::uint64_t t = uniform_below(rng, j + 1);
      chosen.push_back(contains(t) ? j : t);
    }
    return chosen;
  }
  std::vector<bool> seen(population, false);
  for (std::uint64_t j = population - count; j < population; ++j) {
    std::uint64_t t = uniform_below(rng, j + 1);
    std::uint64_t pick = seen[t] ? j : t;
    seen[pick] = true;
    out.push_back(pick);
  }
  return out;
}

}  // namespace obstructor
