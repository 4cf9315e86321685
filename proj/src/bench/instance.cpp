#include <algorithm>
#include <fstream>
#include <sstream>

#include "msetord/bench.hpp"

namespace msetord::bench {

using nlohmann::json;

namespace {

int get_int(const json& j, const char* key, int min_value) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
  long x = v.get<long>();
  if (x < min_value || x > 1'000'000)
    throw SchemaError(std::string("field '") + key + "' out of range");
  return static_cast<int>(x);
}

const json& get_array(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array() || j.at(key).empty())
    throw SchemaError(std::string("field '") + key + "' must be a non-empty array");
  return j.at(key);
}

PartyInstance parse_party(const json& j, std::vector<std::string>& warnings) {
  PartyInstance p;
  p.periods = get_int(j, "periods", 1);
  for (const json& h : get_array(j, "hosts"))
    p.hosts.push_back({get_int(h, "id", 0), get_int(h, "crew", 0), get_int(h, "capacity", 0)});
  for (const json& g : get_array(j, "guests")) p.guests.push_back({get_int(g, "id", 0), get_int(g, "crew", 1)});
  long spare = 0, crews = 0;
  for (const auto& h : p.hosts) {
    if (h.spare() < 0) throw SchemaError("host " + std::to_string(h.id) + " has crew above capacity");
    spare += h.spare();
  }
  for (const auto& g : p.guests) crews += g.crew;
  if (crews > spare) warnings.push_back("total guest crew exceeds total spare capacity");
  if (p.periods > static_cast<int>(p.hosts.size()))
    warnings.push_back("more periods than hosts: no guest can avoid a revisit");
  return p;
}

RackInstance parse_rack(const json& j, std::vector<std::string>& warnings) {
  RackInstance r;
  r.racks = get_int(j, "racks", 1);
  for (const json& m : get_array(j, "rack_models"))
    r.models.push_back({get_int(m, "power", 0), get_int(m, "connectors", 0), get_int(m, "price", 0)});
  for (const json& c : get_array(j, "card_types"))
    r.cards.push_back({get_int(c, "power", 0), get_int(c, "demand", 0)});
  long demand = 0;
  int most = 0;
  for (const auto& c : r.cards) demand += c.demand;
  for (const auto& m : r.models) most = std::max(most, m.connectors);
  if (demand > static_cast<long>(most) * r.racks)
    warnings.push_back("demand exceeds the connectors of all racks");
  return r;
}

SportInstance parse_sport(const json& j) {
  SportInstance s;
  s.teams = get_int(j, "teams", 2);
  return s;
}

}  // namespace

std::string ProblemInstance::problem() const {
  switch (payload.index()) {
    case 0: return "progressive_party";
    case 1: return "rack";
    default: return "sport";
  }
}

ProblemInstance parse_instance(const json& j) {
  if (!j.is_object() || !j.contains("problem") || !j.at("problem").is_string())
    throw SchemaError("missing field 'problem'");
  ProblemInstance out;
  std::string p = j.at("problem").get<std::string>();
  if (p == "progressive_party")
    out.payload = parse_party(j, out.warnings);
  else if (p == "rack")
    out.payload = parse_rack(j, out.warnings);
  else if (p == "sport")
    out.payload = parse_sport(j);
  else
    throw SchemaError("unknown problem '" + p + "'");
  return out;
}

ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw SchemaError(path + ": invalid JSON");
  return parse_instance(j);
}

}  // namespace msetord::bench
