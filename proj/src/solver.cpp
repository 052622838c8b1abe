#include "satroute/solver.hpp"

#include "satroute/errors.hpp"

namespace satroute {

RoutingSolution solve(const RoutingInstance& instance, const SolveOptions& options) {
  return solve(instance, instance.variant, options);
}

RoutingSolution solve(const RoutingInstance& instance, const Variant& v,
                      const SolveOptions& options) {
  const int n = instance.model_count();
  const bool uf = v.flow == FlowKind::kUnsplittable;
  if (v.multicast && !uf) throw UnsupportedVariant("splittable multicast is not supported");
  if (instance.phase == Phase::kDownload) {
    if (v.client_selection) throw UnsupportedVariant("client selection applies to uploads only");
    if (!options.force_exact && is_polynomial_variant(instance.phase, v, n)) {
      const bool ws = v.objective == Objective::kWeightedSum;
      if (v.multicast) return ws ? solve_mul1ws(instance) : solve_mul1mm(instance);
      if (uf) return ws ? solve_1ufws(instance) : solve_1ufmm(instance, options.download);
      return n == 1 ? solve_1sfmm(instance, options.download)
                    : solve_2sfmm(instance, options.download);
    }
    return solve_exact_download(v, instance, options.limits);
  }
  if (v.multicast) throw UnsupportedVariant("multicast applies to downloads only");
  if (!options.force_exact && is_polynomial_variant(instance.phase, v, n)) {
    if (!uf) {
      return n == 1 ? solve_1sfncs(instance, options.download.backend)
                    : solve_2sfncs(instance, options.download.backend);
    }
    return v.client_selection ? solve_1ufcs(instance) : solve_1ufncs(instance);
  }
  return solve_exact_upload(v, instance, options.limits);
}

}  // namespace satroute
