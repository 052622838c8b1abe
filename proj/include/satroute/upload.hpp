#pragma once

#include "satroute/flow.hpp"
#include "satroute/instance.hpp"
#include "satroute/limits.hpp"

namespace satroute {

/// One model, splittable, no selection: zero-slack fractional feasibility.
RoutingSolution solve_1sfncs(const RoutingInstance& instance, LpBackend backend = LpBackend::kAuto);
/// Two models, splittable, no selection; separate servers use two commodities.
RoutingSolution solve_2sfncs(const RoutingInstance& instance, LpBackend backend = LpBackend::kAuto);
/// One model, unsplittable, no selection: min-cost flow with unit-cost bypass arcs.
RoutingSolution solve_1ufncs(const RoutingInstance& instance);
/// One model, unsplittable, client selection: min-cost flow with selector
/// arcs of cost -u_c.
RoutingSolution solve_1ufcs(const RoutingInstance& instance);

/// Exact verdict or optimum for any upload variant. Throws BudgetExceeded.
RoutingSolution solve_exact_upload(const Variant& variant, const RoutingInstance& instance,
                                   const SearchLimits& limits = {});

}  // namespace satroute
