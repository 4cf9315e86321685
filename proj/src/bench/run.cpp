#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "common.hpp"
#include "msetord/lex.hpp"

namespace msetord::bench {

using nlohmann::json;

std::optional<Symmetry> parse_symmetry(const std::string& s) {
  Symmetry sym;
  if (s == "none") return sym;
  static const std::pair<const char*, Ordering> kinds[] = {
      {"revlex", Ordering::LexGeq}, {"lex", Ordering::LexLeq},   {"smset", Ordering::MsetLess},
      {"mset", Ordering::MsetLeq},  {"geqm", Ordering::MsetGeq},
  };
  size_t start = 0;
  while (start <= s.size()) {
    size_t end = s.find('-', start);
    if (end == std::string::npos) end = s.size();
    std::string part = s.substr(start, end - start);
    bool matched = false;
    for (const auto& [name, ord] : kinds) {
      std::string_view prefix(name);
      if (part.rfind(prefix, 0) != 0) continue;
      std::string axes = part.substr(prefix.size());
      if (axes != "R" && axes != "C" && axes != "RC") return std::nullopt;
      for (char a : axes) {
        Ordering& slot = a == 'R' ? sym.rows : sym.cols;
        if (slot != Ordering::None) return std::nullopt;
        slot = ord;
      }
      matched = true;
      break;
    }
    if (!matched) return std::nullopt;
    start = end + 1;
  }
  return sym;
}

Symmetry symmetry_or_throw(const RunConfig& cfg) {
  auto sym = parse_symmetry(cfg.symmetry);
  if (!sym) throw SchemaError("unknown symmetry '" + cfg.symmetry + "'");
  return *sym;
}

void post_orderings(Model& m, const std::vector<std::vector<VarId>>& vectors,
                    const std::vector<std::pair<size_t, size_t>>& pairs, Ordering ord,
                    const RunConfig& cfg) {
  if (ord == Ordering::None || pairs.empty()) return;
  if (ord == Ordering::LexLeq || ord == Ordering::LexGeq) {
    for (auto [i, j] : pairs) {
      if (ord == Ordering::LexGeq) std::swap(i, j);
      m.emplace<LexPropagator>(vectors[i], vectors[j], false);
    }
    return;
  }
  MsetFamily fam(m, vectors, cfg.encoding, cfg.entailment);
  for (auto [i, j] : pairs) {
    if (ord == Ordering::MsetGeq) std::swap(i, j);
    fam.order(i, j, ord == Ordering::MsetLess ? MsetOrder::Less : MsetOrder::Leq);
  }
}

json config_json(const RunConfig& cfg) {
  json j{{"symmetry", cfg.symmetry},
         {"encoding", to_string(cfg.encoding)},
         {"entailment", cfg.entailment},
         {"timeout_s", cfg.timeout_s},
         {"seed", cfg.seed}};
  if (cfg.labelling)
    j["labelling"] = *cfg.labelling == Labelling::RowWise ? "row-wise" : "column-wise";
  return j;
}

void to_json(json& j, const StatsRecord& r) {
  j = json{{"problem", r.problem},         {"config", r.config},
           {"fails", r.fails},             {"choice_points", r.choice_points},
           {"wall_time_s", r.wall_time_s}, {"status", r.status}};
  if (r.objective) j["objective"] = *r.objective;
}

void from_json(const json& j, StatsRecord& r) {
  j.at("problem").get_to(r.problem);
  r.config = j.at("config");
  j.at("fails").get_to(r.fails);
  j.at("choice_points").get_to(r.choice_points);
  j.at("wall_time_s").get_to(r.wall_time_s);
  j.at("status").get_to(r.status);
  if (j.contains("objective"))
    r.objective = j.at("objective").get<long>();
  else
    r.objective.reset();
}

StatsRecord run(const RunConfig& cfg, const ProblemInstance& inst) {
  BuiltModel built = std::visit(
      [&](const auto& p) -> BuiltModel {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, PartyInstance>)
          return build_progressive_party(p, cfg);
        else if constexpr (std::is_same_v<T, RackInstance>)
          return build_rack(p, cfg);
        else
          return build_sport(p, cfg);
      },
      inst.payload);

  Solver solver(*built.model);
  Limits limits{cfg.timeout_s};
  SearchResult res = built.optimise ? solver.solve_optimal(built.branching, limits)
                                    : solver.solve_first(built.branching, limits);
  StatsRecord r;
  r.problem = inst.problem();
  r.config = config_json(cfg);
  r.fails = res.stats.fails;
  r.choice_points = res.stats.choice_points;
  r.wall_time_s = res.stats.wall_time;
  switch (res.status) {
    case SearchStatus::Solved: r.status = "solved"; break;
    case SearchStatus::Unsat: r.status = "unsat"; break;
    case SearchStatus::Timeout: r.status = "timeout"; break;
  }
  if (built.optimise) r.objective = res.stats.best_objective;
  return r;
}

int bench_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Runs one benchmark instance and prints its search statistics as a JSON line."};
  std::string problem, instance_path, encoding = "algorithm", labelling, stats_path;
  RunConfig cfg;
  app.add_option("--problem", problem, "party | rack | sport")
      ->required()
      ->check(CLI::IsMember({"party", "rack", "sport"}));
  app.add_option("--instance", instance_path, "JSON instance file")->required();
  app.add_option("--symmetry", cfg.symmetry, "none, lexRC, msetR, msetR-geqmC, smsetC, ...")
      ->capture_default_str();
  app.add_option("--encoding", encoding,
                 "algorithm | algorithm-sorted | gcc | sort | arith")
      ->capture_default_str();
  app.add_flag("--entailment", cfg.entailment, "detect entailment in the multiset propagators");
  app.add_option("--labelling", labelling, "row-wise | column-wise")
      ->check(CLI::IsMember({"row-wise", "column-wise"}));
  app.add_option("--timeout", cfg.timeout_s, "seconds, 0 for none")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "recorded with the run; the search itself is deterministic");
  app.add_option("--stats-json", stats_path, "also append the JSON line to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    auto enc = parse_encoding(encoding);
    if (!enc) throw SchemaError("unknown encoding '" + encoding + "'");
    cfg.encoding = *enc;
    if (!labelling.empty())
      cfg.labelling = labelling == "row-wise" ? Labelling::RowWise : Labelling::ColumnWise;

    ProblemInstance inst = load_instance(instance_path);
    const std::string expected = problem == "party" ? "progressive_party" : problem;
    if (inst.problem() != expected)
      throw SchemaError("instance is a " + inst.problem() + " instance, not " + expected);
    for (const auto& w : inst.warnings) err << "warning: " << w << "\n";

    std::ofstream stats_file;
    if (!stats_path.empty()) {
      stats_file.open(stats_path, std::ios::app);
      if (!stats_file) throw SchemaError("cannot open " + stats_path);
    }

    StatsRecord r = run(cfg, inst);
    const std::string line = json(r).dump();
    out << line << "\n";
    if (stats_file) stats_file << line << "\n";
    err << r.problem << " " << r.status << " fails=" << r.fails
        << " choice_points=" << r.choice_points << " time=" << r.wall_time_s << "s";
    if (r.objective) err << " objective=" << *r.objective;
    err << "\n";
    return r.status == "timeout" ? 1 : 0;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace msetord::bench
