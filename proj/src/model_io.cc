#include <fstream>
#include <sstream>

#include "hyperign/errors.h"
#include "hyperign/model.h"

namespace hyperign {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw FormatError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> as_strings(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_string(e, what));
  return out;
}

Topics topics_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("\"topics\" must be an object");
  if (j.contains("grasped")) {
    GraspSet g;
    for (auto& a : as_strings(j["grasped"], "grasped")) g.grasped.insert(std::move(a));
    return g;
  }
  auto elements = as_strings(field(j, "elements"), "elements");
  const json& fj = field(j, "fusion");
  if (!fj.is_array()) throw FormatError("fusion must be an array of rows");
  std::vector<std::vector<TopicId>> fusion;
  for (const auto& row : fj) fusion.push_back(as_strings(row, "fusion row"));
  auto kappa = as_string(field(j, "kappa"), "kappa");
  std::map<std::string, TopicId> assign;
  if (j.contains("assign")) {
    const json& aj = j["assign"];
    if (!aj.is_object()) throw FormatError("assign must be an object");
    for (auto it = aj.begin(); it != aj.end(); ++it) assign[it.key()] = as_string(it.value(), "assign value");
  }
  TopicModel tm(std::move(elements), fusion, std::move(kappa), std::move(assign));
  auto violations = validate(tm);
  if (!violations.empty()) {
    std::string msg = "topic fusion is not a semilattice: " + violations.front().describe();
    if (violations.size() > 1) msg += " (+" + std::to_string(violations.size() - 1) + " more)";
    throw ValidationError(msg);
  }
  return tm;
}

json topics_to_json(const Topics& t) {
  if (const auto* g = std::get_if<GraspSet>(&t)) {
    return json{{"grasped", std::vector<std::string>(g->grasped.begin(), g->grasped.end())}};
  }
  const auto& tm = std::get<TopicModel>(t);
  return json{{"elements", tm.elements()},
              {"fusion", tm.fusion_table()},
              {"kappa", tm.element(tm.kappa())},
              {"assign", tm.assignment()}};
}

}  // namespace

Model model_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("model must be a JSON object");
  auto worlds = as_strings(field(j, "worlds"), "worlds");
  std::vector<std::pair<WorldId, WorldId>> relation;
  if (j.contains("relation")) {
    const json& rj = j["relation"];
    if (!rj.is_array()) throw FormatError("relation must be an array of pairs");
    for (const auto& pair : rj) {
      auto p = as_strings(pair, "relation pair");
      if (p.size() != 2) throw FormatError("relation entries must be [from, to] pairs");
      relation.emplace_back(p[0], p[1]);
    }
  }
  std::map<std::string, std::vector<WorldId>> valuation;
  if (j.contains("valuation")) {
    const json& vj = j["valuation"];
    if (!vj.is_object()) throw FormatError("valuation must be an object");
    for (auto it = vj.begin(); it != vj.end(); ++it) valuation[it.key()] = as_strings(it.value(), "valuation entry");
  }
  KripkeModel base(std::move(worlds), relation, valuation);
  if (!j.contains("topics")) return base;
  Topics topics = topics_from_json(j["topics"]);
  if (const auto* tm = std::get_if<TopicModel>(&topics)) {
    for (const auto& [atom, ext] : base.valuation()) {
      if (!tm->topic_index(atom)) throw ValidationError("unassigned atom '" + atom + "'");
    }
  }
  return TopicSensitiveModel{std::move(base), std::move(topics)};
}

json model_to_json(const Model& m) {
  const KripkeModel& k = frame_of(m);
  json val = json::object();
  for (const auto& [atom, ext] : k.valuation()) {
    json ws = json::array();
    for (std::size_t i = 0; i < k.size(); ++i) {
      if ((ext >> i) & 1U) ws.push_back(k.world(i));
    }
    val[atom] = std::move(ws);
  }
  json rel = json::array();
  for (const auto& [u, v] : k.relation_pairs()) rel.push_back({u, v});
  json j{{"worlds", k.worlds()}, {"relation", std::move(rel)}, {"valuation", std::move(val)}};
  if (const Topics* t = topics_of(m)) j["topics"] = topics_to_json(*t);
  return j;
}

Model load_model(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return model_from_json(j);
}

Model load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return load_model(ss.str());
}

std::string save_model(const Model& m) { return model_to_json(m).dump(2) + "\n"; }

}  // namespace hyperign
