#pragma once

#include "satroute/download.hpp"
#include "satroute/instance.hpp"
#include "satroute/limits.hpp"
#include "satroute/upload.hpp"

namespace satroute {

struct SolveOptions {
  bool force_exact = false;  // use exhaustive search even where a polynomial solver exists
  SearchLimits limits;
  DownloadOptions download;
};

/// Solves the instance under its own variant: polynomial construction when
/// one exists, exact search otherwise.
RoutingSolution solve(const RoutingInstance& instance, const SolveOptions& options = {});

/// Same, under an explicitly chosen variant (phase must match the instance).
RoutingSolution solve(const RoutingInstance& instance, const Variant& variant,
                      const SolveOptions& options = {});

}  // namespace satroute
