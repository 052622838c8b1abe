#pragma once

#include "satroute/flow.hpp"
#include "satroute/instance.hpp"
#include "satroute/limits.hpp"

namespace satroute {

enum class MmSearch { kLinear, kBisection };

struct DownloadOptions {
  MmSearch mm_search = MmSearch::kLinear;
  LpBackend backend = LpBackend::kAuto;
};

/// One model, unsplittable, weighted sum: min-cost flow on the expanded graph.
RoutingSolution solve_1ufws(const RoutingInstance& instance);
/// One model, unsplittable, min-max: smallest prefix admitting unit delivery.
RoutingSolution solve_1ufmm(const RoutingInstance& instance, const DownloadOptions& options = {});
/// One model, splittable, min-max.
RoutingSolution solve_1sfmm(const RoutingInstance& instance, const DownloadOptions& options = {});
/// Two models, splittable, min-max; separate servers use two commodities.
RoutingSolution solve_2sfmm(const RoutingInstance& instance, const DownloadOptions& options = {});
/// One model, multicast, min-max: capacity-filtered graph search.
RoutingSolution solve_mul1mm(const RoutingInstance& instance);
/// One model, multicast, weighted sum: min-cost arborescence on G^M, pruned.
RoutingSolution solve_mul1ws(const RoutingInstance& instance);

/// Provably optimal solution for any download variant by exhaustive search.
/// Throws BudgetExceeded when the instance is beyond `limits`.
RoutingSolution solve_exact_download(const Variant& variant, const RoutingInstance& instance,
                                     const SearchLimits& limits = {});

}  // namespace satroute
