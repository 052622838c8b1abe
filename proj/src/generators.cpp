#include "satroute/generators.hpp"

#include <random>
#include <set>

#include "satroute/errors.hpp"
#include "satroute/random.hpp"

namespace satroute {

TimeVaryingGraph generate_random_tvg(const RandomTvgParams& p) {
  if (p.satellites < 1 || p.snapshots < 1) throw InvalidArgument("satellites and snapshots must be positive");
  if (!(p.density >= 0.0 && p.density <= 1.0)) throw InvalidArgument("density must lie in [0, 1]");
  if (p.min_capacity < 0 || p.max_capacity < p.min_capacity) {
    throw InvalidArgument("capacity range must satisfy 0 <= min <= max");
  }
  if (sgn(p.cache_capacity) < 0) throw InvalidArgument("cache capacity must be non-negative");

  constexpr std::int64_t kScale = std::int64_t{1} << 30;
  const auto threshold = static_cast<std::int64_t>(p.density * static_cast<double>(kScale));
  std::mt19937_64 rng(p.seed);
  std::vector<IntraArc> arcs;
  for (int k = 1; k <= p.snapshots; ++k) {
    for (int i = 1; i <= p.satellites; ++i) {
      for (int j = 1; j <= p.satellites; ++j) {
        if (i == j) continue;
        if (uniform_int(rng, 0, kScale - 1) >= threshold) continue;
        arcs.push_back({SatNode::at(i, k), SatNode::at(j, k),
                        Rational(uniform_int(rng, p.min_capacity, p.max_capacity))});
      }
    }
  }
  return TimeVaryingGraph(p.satellites, p.snapshots, std::move(arcs), CachePolicy{p.cache_capacity, {}});
}

TimeVaryingGraph generate_ring_constellation(const RingParams& p) {
  if (p.planes < 1 || p.sats_per_plane < 1 || p.snapshots < 1) {
    throw InvalidArgument("planes, satellites per plane and snapshots must be positive");
  }
  if (sgn(p.intra_capacity) < 0 || sgn(p.cross_capacity) < 0 || sgn(p.cache_capacity) < 0) {
    throw InvalidArgument("capacities must be non-negative");
  }
  const int S = p.sats_per_plane;
  auto id = [S](int plane, int j) { return plane * S + j + 1; };
  std::vector<IntraArc> arcs;
  for (int k = 1; k <= p.snapshots; ++k) {
    std::set<std::pair<int, int>> seen;
    auto link = [&](int u, int v, const Rational& cap) {
      if (u == v) return;
      for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
        if (seen.insert({a, b}).second) arcs.push_back({SatNode::at(a, k), SatNode::at(b, k), cap});
      }
    };
    for (int plane = 0; plane < p.planes; ++plane) {
      for (int j = 0; j < S; ++j) link(id(plane, j), id(plane, (j + 1) % S), p.intra_capacity);
    }
    const long offset = static_cast<long>(p.cross_shift) * (k - 1);
    for (int plane = 0; plane + 1 < p.planes; ++plane) {
      for (int j = 0; j < S; ++j) {
        const int partner = static_cast<int>(((j + offset) % S + S) % S);
        link(id(plane, j), id(plane + 1, partner), p.cross_capacity);
      }
    }
  }
  return TimeVaryingGraph(p.planes * S, p.snapshots, std::move(arcs), CachePolicy{p.cache_capacity, {}});
}

}  // namespace satroute
