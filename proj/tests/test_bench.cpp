#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "msetord/bench.hpp"

using namespace msetord;
using namespace msetord::bench;
using nlohmann::json;

namespace {

const std::string kData = MSETORD_DATA_DIR;

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string(MSETORD_TEST_TMP) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

int cli(std::vector<std::string> args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  args.insert(args.begin(), "bench");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = bench_main(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

StatsRecord run_json(const json& instance, RunConfig cfg) {
  return run(cfg, parse_instance(instance));
}

json toy_party() {
  return json::parse(R"({"problem":"progressive_party","periods":2,
    "hosts":[{"id":1,"crew":1,"capacity":3},{"id":2,"crew":1,"capacity":3}],
    "guests":[{"id":3,"crew":2},{"id":4,"crew":2}]})");
}

json rack(int racks, std::vector<int> demands) {
  json j{{"problem", "rack"},
         {"racks", racks},
         {"rack_models",
          {{{"power", 150}, {"connectors", 8}, {"price", 150}},
           {{"power", 200}, {"connectors", 16}, {"price", 200}}}}};
  const int power[] = {20, 40, 50, 75};
  for (size_t i = 0; i < demands.size(); ++i)
    j["card_types"].push_back({{"power", power[i]}, {"demand", demands[i]}});
  return j;
}

RunConfig config(std::string symmetry, Encoding enc = Encoding::Algorithm, bool entail = false) {
  RunConfig c;
  c.symmetry = std::move(symmetry);
  c.encoding = enc;
  c.entailment = entail;
  return c;
}

}  // namespace

TEST_SUITE("bench") {
  TEST_CASE("symmetry names") {
    auto s = parse_symmetry("msetR-geqmC");
    REQUIRE(s);
    CHECK(s->rows == Ordering::MsetLeq);
    CHECK(s->cols == Ordering::MsetGeq);
    s = parse_symmetry("lexRC");
    REQUIRE(s);
    CHECK(s->rows == Ordering::LexLeq);
    CHECK(s->cols == Ordering::LexLeq);
    CHECK(parse_symmetry("msetR-revlexC")->cols == Ordering::LexGeq);
    CHECK(parse_symmetry("smsetC")->cols == Ordering::MsetLess);
    CHECK(parse_symmetry("none")->rows == Ordering::None);
    CHECK_FALSE(parse_symmetry("msetR-lexR"));
    CHECK_FALSE(parse_symmetry("msetX"));
    CHECK_FALSE(parse_symmetry(""));
    CHECK_FALSE(parse_symmetry("lexRC-"));
  }

  TEST_CASE("schema validation") {
    CHECK_THROWS_AS(parse_instance(json::parse(R"({"teams":5})")), SchemaError);
    CHECK_THROWS_AS(parse_instance(json::parse(R"({"problem":"golf"})")), SchemaError);
    CHECK_THROWS_AS(parse_instance(json::parse(R"({"problem":"sport","teams":"5"})")), SchemaError);
    CHECK_THROWS_AS(parse_instance(json::parse(R"({"problem":"sport","teams":0})")), SchemaError);
    CHECK_THROWS_AS(parse_instance(json::parse(R"({"problem":"rack","racks":2,"rack_models":[]})")),
                    SchemaError);
    json bad = toy_party();
    bad["hosts"][0]["crew"] = 9;
    CHECK_THROWS_AS(parse_instance(bad), SchemaError);
    CHECK(parse_instance(toy_party()).warnings.empty());
  }

  TEST_CASE("infeasible demands are warned about, never altered") {
    ProblemInstance p = parse_instance(rack(1, {20}));
    CHECK(p.warnings.size() == 1);
    CHECK(std::get<RackInstance>(p.payload).cards[0].demand == 20);
  }

  TEST_CASE("stats records round-trip through JSON") {
    StatsRecord a{"rack", config_json(config("msetR")), 12, 34, 0.123456789, "solved", 650};
    StatsRecord b{"sport", config_json(config("smsetC", Encoding::Arith, true)), 0, 1, 1e-7,
                  "timeout", std::nullopt};
    for (const StatsRecord& r : {a, b}) {
      json j = r;
      CHECK(json::parse(j.dump()).get<StatsRecord>() == r);
    }
    CHECK_FALSE(json(b).contains("objective"));
  }

  TEST_CASE("toy party is satisfiable with and without row ordering") {
    for (const char* sym : {"none", "msetR", "lexR", "msetRC"}) {
      StatsRecord r = run_json(toy_party(), config(sym));
      CHECK(r.status == "solved");
    }
  }

  TEST_CASE("a forced revisit is unsatisfiable") {
    json one_host = toy_party();
    one_host["hosts"].erase(1);
    one_host["guests"].erase(1);
    ProblemInstance p = parse_instance(one_host);
    CHECK_FALSE(p.warnings.empty());
    CHECK(run(config("none"), p).status == "unsat");
  }

  TEST_CASE("the nine party host selections") {
    const int spare[] = {102, 100, 101, 101, 99, 100, 100, 100, 98};
    const int size[] = {92, 90, 91, 92, 90, 91, 92, 92, 90};
    for (int k = 1; k <= 9; ++k) {
      ProblemInstance p = load_instance(kData + "/party-" + std::to_string(k) + ".json");
      const auto& party = std::get<PartyInstance>(p.payload);
      int s = 0, g = 0;
      for (const auto& h : party.hosts) s += h.spare();
      for (const auto& x : party.guests) g += x.crew;
      CHECK(s == spare[k - 1]);
      CHECK(g == size[k - 1]);
      CHECK(party.hosts.size() + party.guests.size() == 42);
    }
    ProblemInstance first = load_instance(kData + "/party-1.json");
    BuiltModel b = build_progressive_party(std::get<PartyInstance>(first.payload), config("msetR"));
    CHECK(b.model->store().size(b.branching.order.front()) == 13);
  }

  TEST_CASE("rack edge cases") {
    StatsRecord zero = run_json(rack(3, {0, 0, 0, 0}), config("none"));
    CHECK(zero.status == "solved");
    CHECK(zero.objective == 0);
    StatsRecord over = run_json(rack(1, {17}), config("msetR"));
    CHECK(over.status == "unsat");
    CHECK_FALSE(over.objective);
    StatsRecord small = run_json(rack(2, {4, 2}), config("none"));
    StatsRecord small_m = run_json(rack(2, {4, 2}), config("msetR"));
    CHECK(small.objective == 200);  // 160 W needs the larger model
    CHECK(small_m.objective == 200);
  }

  TEST_CASE("sport smoke test and encoding-independent search") {
    CHECK(run_json({{"problem", "sport"}, {"teams", 3}}, config("none")).status == "solved");
    json five{{"problem", "sport"}, {"teams", 5}};
    StatsRecord algo = run_json(five, config("smsetC"));
    StatsRecord arith = run_json(five, config("smsetC", Encoding::Arith));
    CHECK(algo.status == "solved");
    CHECK(algo.fails == arith.fails);
    CHECK(algo.choice_points == arith.choice_points);
    CHECK_THROWS_AS(run_json({{"problem", "sport"}, {"teams", 6}}, config("smsetC")), SchemaError);
  }

  TEST_CASE("entailment detection leaves the search tree unchanged") {
    json five{{"problem", "sport"}, {"teams", 5}};
    for (Encoding e : {Encoding::Algorithm, Encoding::AlgorithmSorted}) {
      StatsRecord off = run_json(five, config("smsetC", e, false));
      StatsRecord on = run_json(five, config("smsetC", e, true));
      CHECK(off.fails == on.fails);
      CHECK(off.choice_points == on.choice_points);
    }
    StatsRecord off = run_json(rack(3, {6, 2, 2}), config("msetR", Encoding::Algorithm, false));
    StatsRecord on = run_json(rack(3, {6, 2, 2}), config("msetR", Encoding::Algorithm, true));
    CHECK(off.fails == on.fails);
    CHECK(off.choice_points == on.choice_points);
    CHECK(off.objective == on.objective);
  }

  TEST_CASE("the global constraint never fails more than the gcc decomposition") {
    struct Case {
      json inst;
      const char* sym;
    };
    std::vector<Case> cases{{{{"problem", "sport"}, {"teams", 5}}, "smsetC"},
                            {toy_party(), "msetR"},
                            {rack(3, {6, 2, 2}), "msetR"}};
    for (const auto& c : cases) {
      StatsRecord algo = run_json(c.inst, config(c.sym));
      StatsRecord gcc = run_json(c.inst, config(c.sym, Encoding::Gcc));
      CHECK(algo.fails <= gcc.fails);
    }
  }

  TEST_CASE("command line exit codes and output") {
    std::string out, err;
    std::string sport = temp_file("sport5.json", R"({"problem":"sport","teams":5})");
    CHECK(cli({"--problem", "sport", "--instance", sport, "--symmetry", "smsetC"}, &out) == 0);
    json line = json::parse(out);
    CHECK(line["status"] == "solved");
    CHECK(line["config"]["symmetry"] == "smsetC");
    CHECK(out.find('\n') == out.size() - 1);

    std::string broken = temp_file("broken.json", "{\"problem\": \"sport\", ");
    CHECK(cli({"--problem", "sport", "--instance", broken}, &out, &err) == 2);
    CHECK(out.empty());
    CHECK(err.find("invalid JSON") != std::string::npos);

    CHECK(cli({"--problem", "rack", "--instance", sport}, &out) == 2);
    CHECK(out.empty());
    CHECK(cli({"--problem", "sport", "--instance", sport, "--symmetry", "bogus"}, &out) == 2);
    CHECK(cli({"--problem", "sport", "--instance", sport, "--encoding", "bogus"}, &out) == 2);
    CHECK(cli({"--problem", "sport", "--instance", "/nonexistent.json"}, &out) == 2);
    CHECK(cli({"--problem", "sport"}, &out) == 2);

    std::string stats = std::string(MSETORD_TEST_TMP) + "/stats.jsonl";
    std::remove(stats.c_str());
    std::string party = kData + "/party-1.json";
    CHECK(cli({"--problem", "party", "--instance", party, "--symmetry", "msetRC", "--timeout",
               "0.2", "--stats-json", stats},
              &out) == 1);
    std::ifstream in(stats);
    std::string recorded;
    std::getline(in, recorded);
    CHECK(json::parse(recorded)["status"] == "timeout");
    CHECK(recorded + "\n" == out);
  }
}
