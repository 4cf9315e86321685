#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "msetord/encodings.hpp"
#include "msetord/engine.hpp"

namespace msetord::bench {

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PartyHost {
  int id = 0;
  int crew = 0;
  int capacity = 0;
  int spare() const { return capacity - crew; }
};
struct PartyGuest {
  int id = 0;
  int crew = 0;
};
struct PartyInstance {
  int periods = 0;
  std::vector<PartyHost> hosts;
  std::vector<PartyGuest> guests;
};

struct RackModel {
  int power = 0;
  int connectors = 0;
  int price = 0;
};
struct CardType {
  int power = 0;
  int demand = 0;
};
struct RackInstance {
  int racks = 0;
  std::vector<RackModel> models;  // the dummy model is added by the builder
  std::vector<CardType> cards;
};

struct SportInstance {
  int teams = 0;
};

struct ProblemInstance {
  std::variant<PartyInstance, RackInstance, SportInstance> payload;
  std::vector<std::string> warnings;
  std::string problem() const;
};

ProblemInstance parse_instance(const nlohmann::json& j);
ProblemInstance load_instance(const std::string& path);

enum class Ordering { None, LexLeq, LexGeq, MsetLeq, MsetGeq, MsetLess };

struct Symmetry {
  Ordering rows = Ordering::None;
  Ordering cols = Ordering::None;
};

// "none", or parts joined by '-', each an ordering followed by the axes it
// applies to (R, C or RC). Orderings: lex (<=lex), revlex (>=lex), mset (<=m),
// geqm (>=m), smset (<m). Examples: "lexRC", "msetR-geqmC", "smsetC".
std::optional<Symmetry> parse_symmetry(const std::string& s);

enum class Labelling { RowWise, ColumnWise };

struct RunConfig {
  std::string symmetry = "none";
  Encoding encoding = Encoding::Algorithm;
  bool entailment = false;
  std::optional<Labelling> labelling;  // problem default when unset
  double timeout_s = 0.0;
  uint64_t seed = 0;
};

struct BuiltModel {
  std::unique_ptr<Model> model = std::make_unique<Model>();
  Branching branching;
  bool optimise = false;
};

BuiltModel build_progressive_party(const PartyInstance& inst, const RunConfig& cfg);
BuiltModel build_rack(const RackInstance& inst, const RunConfig& cfg);
BuiltModel build_sport(const SportInstance& inst, const RunConfig& cfg);

struct StatsRecord {
  std::string problem;
  nlohmann::json config;
  long fails = 0;
  long choice_points = 0;
  double wall_time_s = 0.0;
  std::string status;  // solved | unsat | timeout
  std::optional<long> objective;
  friend bool operator==(const StatsRecord&, const StatsRecord&) = default;
};

void to_json(nlohmann::json& j, const StatsRecord& r);
void from_json(const nlohmann::json& j, StatsRecord& r);

nlohmann::json config_json(const RunConfig& cfg);

// Throws SchemaError for a configuration the problem does not support.
StatsRecord run(const RunConfig& cfg, const ProblemInstance& inst);

// The command-line entry point; returns the process exit code.
int bench_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace msetord::bench
