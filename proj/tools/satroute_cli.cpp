#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "satroute/errors.hpp"
#include "satroute/generators.hpp"
#include "satroute/io.hpp"
#include "satroute/reductions.hpp"
#include "satroute/segment_stack.hpp"
#include "satroute/solver.hpp"

using namespace satroute;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kBudget = 3, kInternal = 4 };

void diagnose(const char* kind, const std::string& message) {
  Json j{{"error", kind}, {"message", message}};
  std::cerr << j.dump() << "\n";
}

void note(const Json& j) { std::cerr << j.dump() << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"Model routing over time-varying satellite graphs"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve a routing instance");
  std::string instance_file, variant = "auto", search = "linear";
  bool force_exact = false;
  solve_cmd->add_option("instance", instance_file, "Instance file (JSON)")->required();
  solve_cmd->add_option("--variant", variant, "auto, or a variant name such as 1-UF-WS");
  solve_cmd->add_flag("--exact", force_exact, "Use exhaustive search even when polynomial");
  solve_cmd->add_option("--mm-search", search, "Deadline search for SF-MM")
      ->check(CLI::IsMember({"linear", "bisection"}));

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "Generate an instance");
  gen_cmd->require_subcommand(1);
  std::string gen_variant = "1-UF-WS";
  std::vector<std::string> model_specs;
  std::optional<std::string> cache;
  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--variant", gen_variant, "Variant name of the generated instance");
    cmd->add_option("--model", model_specs,
                    "size:server:c1,c2,... (repeat for two models; client@weight sets a weight)");
    cmd->add_option("--cache", cache, "Cache capacity, 'auto' = total demand");
  };
  auto* random_cmd = gen_cmd->add_subcommand("random", "Random links per snapshot");
  RandomTvgParams rp;
  random_cmd->add_option("--satellites", rp.satellites)->check(CLI::PositiveNumber);
  random_cmd->add_option("--snapshots", rp.snapshots)->check(CLI::PositiveNumber);
  random_cmd->add_option("--density", rp.density)->check(CLI::Range(0.0, 1.0));
  random_cmd->add_option("--min-cap", rp.min_capacity);
  random_cmd->add_option("--max-cap", rp.max_capacity);
  random_cmd->add_option("--seed", rp.seed);
  common(random_cmd);
  auto* ring_cmd = gen_cmd->add_subcommand("ring", "Ring constellation with rotating cross links");
  RingParams ring;
  std::string intra_cap = "1", cross_cap = "1";
  ring_cmd->add_option("--planes", ring.planes)->check(CLI::PositiveNumber);
  ring_cmd->add_option("--per-plane", ring.sats_per_plane)->check(CLI::PositiveNumber);
  ring_cmd->add_option("--snapshots", ring.snapshots)->check(CLI::PositiveNumber);
  ring_cmd->add_option("--intra-cap", intra_cap);
  ring_cmd->add_option("--cross-cap", cross_cap);
  ring_cmd->add_option("--shift", ring.cross_shift);
  common(ring_cmd);

  // reduce
  auto* reduce_cmd = app.add_subcommand("reduce", "Build a gadget instance from a source problem");
  std::string family_name, source_file, hub = "spare";
  std::optional<int> cover_size, target;
  std::vector<std::string> family_names;
  for (auto f : {Family::k3SatTo1SfWs, Family::k3SatTo2UfMm, Family::k3SatTo2UfNcs,
                 Family::kMax3SatTo2UfCs, Family::kMvcTo1SfCs, Family::k2EdpToMul2Mm}) {
    family_names.push_back(to_string(f));
  }
  reduce_cmd->add_option("family", family_name)->required()->check(CLI::IsMember(family_names));
  reduce_cmd->add_option("source", source_file, "DIMACS cnf, DIMACS edge, or 2edp file")->required();
  reduce_cmd->add_option("--cover-size", cover_size, "Cover size for mvc-1sfcs");
  reduce_cmd->add_option("--target", target, "Clause target for max3sat-2ufcs");
  reduce_cmd->add_option("--hub", hub, "Hub capacity for 3sat-1sfws: spare = 1+n/(n+1), narrow = 1+1/n")
      ->check(CLI::IsMember({"spare", "narrow"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check gadget answers against source oracles");
  std::string verify_family;
  int trials = 100;
  std::uint64_t seed = 0;
  EquivalenceParams vp;
  std::string verify_hub = "spare";
  bool timings = false;
  verify_cmd->add_option("family", verify_family)->required()->check(CLI::IsMember(family_names));
  verify_cmd->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_flag("--exhaustive", vp.exhaustive, "Enumerate all small sources instead of sampling");
  verify_cmd->add_option("--max-variables", vp.max_variables)->check(CLI::Range(1, 4));
  verify_cmd->add_option("--max-clauses", vp.max_clauses)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-vertices", vp.max_vertices)->check(CLI::Range(1, 6));
  verify_cmd->add_option("--hub", verify_hub)->check(CLI::IsMember({"spare", "narrow"}));
  verify_cmd->add_flag("--timings", timings, "Include per-case runtimes");

  // render-sr
  auto* render_cmd = app.add_subcommand("render-sr", "Print segment stacks of a solution");
  std::string solution_file;
  std::optional<std::string> labels_from;
  render_cmd->add_option("solution", solution_file)->required();
  render_cmd->add_option("--instance", labels_from, "Instance file whose labels name the satellites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    diagnose("usage", e.what());
    return kUsage;
  }

  if (*solve_cmd) {
    const auto inst = parse_instance(read_text_file(instance_file));
    SolveOptions options;
    options.force_exact = force_exact;
    options.limits = SearchLimits::from_env();
    options.download.mm_search = search == "bisection" ? MmSearch::kBisection : MmSearch::kLinear;
    Variant chosen = inst.variant;
    if (variant != "auto") {
      const auto parsed = parse_variant_name(variant);
      if (parsed.phase != inst.phase || parsed.model_count != inst.model_count()) {
        throw InvalidArgument("variant " + variant + " does not fit a " + to_string(inst.phase) +
                              " instance with " + std::to_string(inst.model_count()) + " model(s)");
      }
      if (!(parsed.variant == inst.variant)) {
        note({{"note", "variant override"}, {"instance", variant_name(inst)}, {"solving", variant}});
      }
      chosen = parsed.variant;
    }
    std::cout << serialize_solution(solve(inst, chosen, options));
  } else if (*gen_cmd) {
    TimeVaryingGraph tvg;
    if (*random_cmd) {
      tvg = generate_random_tvg(rp);
    } else {
      ring.intra_capacity = parse_rational(intra_cap);
      ring.cross_capacity = parse_rational(cross_cap);
      tvg = generate_ring_constellation(ring);
    }
    std::vector<Model> models;
    for (const auto& spec : model_specs) models.push_back(parse_model_spec(spec));
    CacheSetting setting;
    if (cache && *cache != "auto") setting.capacity = parse_rational(*cache);
    std::cout << serialize_instance(instance_on(tvg, gen_variant, std::move(models), setting));
  } else if (*reduce_cmd) {
    const Family family = parse_family(family_name);
    if (family == Family::kMvcTo1SfCs && !cover_size) throw InvalidArgument("mvc-1sfcs needs --cover-size");
    ReduceOptions ro;
    ro.cover_size = cover_size;
    ro.target = target;
    ro.hub = parse_hub_setting(hub);
    const auto art = reduce_text(family, read_text_file(source_file), ro);
    std::cout << format_json(artifact_to_json(art));
  } else if (*verify_cmd) {
    vp.hub = parse_hub_setting(verify_hub);
    const auto report = verify_reduction_equivalence(parse_family(verify_family), vp, trials, seed);
    std::cout << format_json(report_to_json(report, timings));
  } else if (*render_cmd) {
    const auto sol = parse_solution(read_text_file(solution_file));
    std::map<int, std::string> labels;
    if (labels_from) labels = parse_instance(read_text_file(*labels_from)).labels;
    for (const auto& stack : render_segment_stacks(sol, labels)) std::cout << to_string(stack) << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetExceeded& e) {
    diagnose(e.kind(), e.what());
    return kBudget;
  } catch (const Error& e) {
    diagnose(e.kind(), e.what());
    return kInput;
  } catch (const std::exception& e) {
    diagnose("internal", e.what());
    return kInternal;
  }
}
