#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "satroute/errors.hpp"
#include "satroute/generators.hpp"
#include "satroute/io.hpp"
#include "satroute/reductions.hpp"
#include "satroute/segment_stack.hpp"
#include "satroute/solver.hpp"
#include "satroute/validate.hpp"

namespace py = pybind11;
using namespace satroute;

namespace {

std::vector<Model> models_from(const std::vector<std::string>& specs) {
  std::vector<Model> models;
  for (const auto& s : specs) models.push_back(parse_model_spec(s));
  return models;
}

CacheSetting cache_from(const std::string& cache) {
  CacheSetting setting;
  if (cache != "auto") setting.capacity = parse_rational(cache);
  return setting;
}

std::string solve_json(const std::string& instance, const std::string& variant, bool exact,
                       const std::optional<std::string>& budget, const std::string& mm_search) {
  const auto inst = parse_instance(instance);
  SolveOptions options;
  options.force_exact = exact;
  options.limits = budget ? SearchLimits::parse(*budget) : SearchLimits::from_env();
  if (mm_search != "linear" && mm_search != "bisection") {
    throw InvalidArgument("mm_search must be 'linear' or 'bisection'");
  }
  options.download.mm_search = mm_search == "bisection" ? MmSearch::kBisection : MmSearch::kLinear;
  Variant chosen = inst.variant;
  if (variant != "auto") {
    const auto parsed = parse_variant_name(variant);
    if (parsed.phase != inst.phase || parsed.model_count != inst.model_count()) {
      throw InvalidArgument("variant " + variant + " does not fit this instance");
    }
    chosen = parsed.variant;
  }
  py::gil_scoped_release release;
  return serialize_solution(solve(inst, chosen, options));
}

std::vector<std::string> validate_json(const std::string& instance, const std::string& solution) {
  return validate_solution(parse_instance(instance), parse_solution(solution)).problems;
}

std::string reduce_json(const std::string& family, const std::string& source,
                        std::optional<int> cover_size, std::optional<int> target,
                        const std::string& hub) {
  ReduceOptions options;
  options.cover_size = cover_size;
  options.target = target;
  options.hub = parse_hub_setting(hub);
  return format_json(artifact_to_json(reduce_text(parse_family(family), source, options)));
}

std::string verify_json(const std::string& family, int trials, std::uint64_t seed, bool exhaustive,
                        int max_variables, int max_clauses, int max_vertices,
                        const std::string& hub, bool timings) {
  EquivalenceParams params;
  params.exhaustive = exhaustive;
  params.max_variables = max_variables;
  params.max_clauses = max_clauses;
  params.max_vertices = max_vertices;
  params.hub = parse_hub_setting(hub);
  const Family f = parse_family(family);
  py::gil_scoped_release release;
  return format_json(report_to_json(verify_reduction_equivalence(f, params, trials, seed), timings));
}

std::string random_json(int satellites, int snapshots, double density, int min_capacity,
                        int max_capacity, std::uint64_t seed, const std::string& variant,
                        const std::vector<std::string>& models, const std::string& cache) {
  RandomTvgParams p;
  p.satellites = satellites;
  p.snapshots = snapshots;
  p.density = density;
  p.min_capacity = min_capacity;
  p.max_capacity = max_capacity;
  p.seed = seed;
  return serialize_instance(
      instance_on(generate_random_tvg(p), variant, models_from(models), cache_from(cache)));
}

std::string ring_json(int planes, int per_plane, int snapshots, const std::string& intra_capacity,
                      const std::string& cross_capacity, int shift, const std::string& variant,
                      const std::vector<std::string>& models, const std::string& cache) {
  RingParams r;
  r.planes = planes;
  r.sats_per_plane = per_plane;
  r.snapshots = snapshots;
  r.intra_capacity = parse_rational(intra_capacity);
  r.cross_capacity = parse_rational(cross_capacity);
  r.cross_shift = shift;
  return serialize_instance(
      instance_on(generate_ring_constellation(r), variant, models_from(models), cache_from(cache)));
}

std::vector<std::string> stacks_json(const std::string& solution,
                                     const std::optional<std::string>& instance) {
  std::map<int, std::string> labels;
  if (instance) labels = parse_instance(*instance).labels;
  std::vector<std::string> out;
  for (const auto& s : render_segment_stacks(parse_solution(solution), labels)) out.push_back(to_string(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Model routing over time-varying satellite graphs (JSON in, JSON out)";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base);
  py::register_exception<SchemaError>(m, "SchemaError", base);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base);
  py::register_exception<NegativeCycle>(m, "NegativeCycle", base);
  py::register_exception<UnreachableNode>(m, "UnreachableNode", base);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
  py::register_exception<UnsupportedVariant>(m, "UnsupportedVariant", base);

  m.def("solve", &solve_json, py::arg("instance"), py::arg("variant") = "auto",
        py::arg("exact") = false, py::arg("budget") = std::nullopt,
        py::arg("mm_search") = "linear");
  m.def("validate", &validate_json, py::arg("instance"), py::arg("solution"),
        "Problems found replaying the solution; empty when valid.");
  m.def("reduce", &reduce_json, py::arg("family"), py::arg("source"),
        py::arg("cover_size") = std::nullopt, py::arg("target") = std::nullopt,
        py::arg("hub") = "spare");
  m.def("verify", &verify_json, py::arg("family"), py::arg("trials") = 100, py::arg("seed") = 0,
        py::arg("exhaustive") = false, py::arg("max_variables") = 3, py::arg("max_clauses") = 3,
        py::arg("max_vertices") = 4, py::arg("hub") = "spare", py::arg("timings") = false);
  m.def("generate_random", &random_json, py::arg("satellites"), py::arg("snapshots"),
        py::arg("density") = 0.5, py::arg("min_capacity") = 1, py::arg("max_capacity") = 3,
        py::arg("seed") = 0, py::arg("variant") = "1-UF-WS",
        py::arg("models") = std::vector<std::string>{}, py::arg("cache") = "auto");
  m.def("generate_ring", &ring_json, py::arg("planes"), py::arg("per_plane"), py::arg("snapshots"),
        py::arg("intra_capacity") = "1", py::arg("cross_capacity") = "1", py::arg("shift") = 1,
        py::arg("variant") = "1-UF-WS", py::arg("models") = std::vector<std::string>{},
        py::arg("cache") = "auto");
  m.def("segment_stacks", &stacks_json, py::arg("solution"), py::arg("instance") = std::nullopt);
  m.def("variant_name", [](const std::string& instance) { return variant_name(parse_instance(instance)); });
}
