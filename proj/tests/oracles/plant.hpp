#pragma once

// Node sequences with cycle traversals planted between filler notes.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

struct Plant {
  std::size_t start;
  std::size_t length;
  bool closed;
};

struct PlantedSequence {
  std::vector<std::size_t> loop;  // cycle order
  std::vector<std::size_t> sequence;
  std::vector<Plant> plants;
};

inline PlantedSequence plant_sequence(std::mt19937_64& rng, std::size_t node_pool = 20) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  PlantedSequence p;
  std::vector<std::size_t> ids(node_pool);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  const std::size_t m = pick(3, 8);
  p.loop.assign(ids.begin(), ids.begin() + static_cast<long>(m));
  std::vector<std::size_t> fillers(ids.begin() + static_cast<long>(m), ids.end());

  auto filler_run = [&](std::size_t min_len) {
    for (std::size_t k = pick(min_len, 3); k > 0; --k) p.sequence.push_back(fillers[pick(0, fillers.size() - 1)]);
  };
  auto traversal = [&](std::size_t from, bool forward, std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      std::size_t idx = forward ? (from + k) % m : (from + m - k % m) % m;
      p.sequence.push_back(p.loop[idx]);
    }
  };

  filler_run(0);
  for (std::size_t round = pick(1, 4); round > 0; --round) {
    const std::size_t from = pick(0, m - 1);
    const bool forward = pick(0, 1) == 1;
    if (pick(0, 1) == 1) {
      // One or more closed laps; consecutive laps share their turning note.
      const std::size_t laps = pick(1, 3);
      for (std::size_t lap = 0; lap < laps; ++lap) {
        const std::size_t start = p.sequence.size() - (lap > 0 ? 1 : 0);
        if (lap > 0) p.sequence.pop_back();
        traversal(from, forward, m + 1);
        p.plants.push_back({start, m + 1, true});
      }
    } else {
      p.plants.push_back({p.sequence.size(), m, false});
      traversal(from, forward, m);
    }
    filler_run(1);
  }
  return p;
}

}  // namespace oracle
