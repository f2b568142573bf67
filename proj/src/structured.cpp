#include "syt/structured.hpp"

namespace syt {

using nlohmann::json;

json to_json(const StandardTableau& t) {
  return json{{"shape", t.shape().parts()}, {"rows", t.rows()}};
}

StandardTableau tableau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows")) throw ParseError("tableau record lacks 'rows'");
  std::vector<std::vector<int>> rows;
  try {
    rows = j.at("rows").get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed 'rows': ") + e.what());
  }
  auto t = validate(std::move(rows));
  if (j.contains("shape")) {
    std::vector<int> shape;
    try {
      shape = j.at("shape").get<std::vector<int>>();
    } catch (const json::exception& e) {
      throw ParseError(std::string("malformed 'shape': ") + e.what());
    }
    if (shape != t.shape().parts()) throw ShapeError("'shape' does not match the row lengths", 0);
  }
  return t;
}

json to_json(const Deck& d) {
  json members = json::array();
  for (const auto& t : d.members) members.push_back(to_json(t));
  return json{{"k", d.k}, {"n", d.n}, {"members", std::move(members)}};
}

json to_json(const DeckMultiset& d) {
  json cards = json::array();
  for (const auto& [t, c] : d.cards) cards.push_back(json{{"tableau", to_json(t)}, {"multiplicity", c}});
  return json{{"k", d.k}, {"n", d.n}, {"cards", std::move(cards)}};
}

json to_json(const CensusReport& r) {
  json classes = json::array();
  for (const auto& c : r.classes) {
    json members = json::array();
    for (const auto& t : c) members.push_back(to_json(t));
    classes.push_back(std::move(members));
  }
  return json{{"n", r.n},
              {"k", r.k},
              {"mode", std::string(to_string(r.mode))},
              {"total", r.total},
              {"classes", std::move(classes)}};
}

}  // namespace syt
