#pragma once

#include <cstdint>
#include <vector>

#include "satroute/tvg.hpp"

namespace satroute {

struct RandomTvgParams {
  int satellites = 4;
  int snapshots = 2;
  double density = 0.5;  // probability of each directed intra arc
  int min_capacity = 1;
  int max_capacity = 3;
  std::uint64_t seed = 0;
  Rational cache_capacity = 1;
};

/// Independent random links per snapshot; same seed, same graph.
TimeVaryingGraph generate_random_tvg(const RandomTvgParams& params);

struct RingParams {
  int planes = 1;
  int sats_per_plane = 4;
  int snapshots = 1;
  Rational intra_capacity = 1;
  Rational cross_capacity = 1;
  int cross_shift = 1;
  Rational cache_capacity = 1;
};

/// Satellite j of plane p is p * sats_per_plane + j + 1. Each plane is a
/// bidirectional ring in every snapshot. Satellite j of plane p links both
/// ways to satellite (j + cross_shift * (k - 1)) mod S of plane p + 1 in
/// snapshot k.
TimeVaryingGraph generate_ring_constellation(const RingParams& params);

}  // namespace satroute
