#include "nesto/json_io.hpp"

#include "nesto/errors.hpp"

namespace nesto {
namespace {

Json labels_json(Subset s) {
  Json a = Json::array();
  s.for_each_label([&](int l) { a.push_back(l); });
  return a;
}

Subset labels_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of labels");
  Subset s;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("labels must be integers");
    const auto l = x.get<long long>();
    if (l < 1 || l > kMaxLabel) throw ParseError("label " + std::to_string(l) + " outside 1..64");
    if (s.contains(static_cast<int>(l))) throw ParseError("repeated label " + std::to_string(l));
    s |= Subset::single(static_cast<int>(l));
  }
  return s;
}

}  // namespace

Json to_json(const IntPolynomial& p) { return Json(p.coeffs()); }

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
  std::vector<std::int64_t> c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("polynomial coefficients must be integers");
    c.push_back(x.get<std::int64_t>());
  }
  return IntPolynomial(std::move(c));
}

Json to_json(const BuildingSet& b) {
  Json els = Json::array();
  for (Subset e : b.elements()) els.push_back(labels_json(e));
  return Json{{"ground", labels_json(b.ground())}, {"elements", std::move(els)}};
}

BuildingSet building_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("elements"))
    throw ParseError("building set JSON needs \"ground\" and \"elements\"");
  const Subset ground = labels_from_json(j.at("ground"));
  if (!j.at("elements").is_array()) throw ParseError("\"elements\" must be an array");
  std::vector<Subset> els;
  for (const auto& e : j.at("elements")) {
    const Subset s = labels_from_json(e);
    if (s.empty()) throw ParseError("building set members must be nonempty");
    els.push_back(s);
  }
  if (!is_building_set(els, ground)) throw ParseError("elements do not form a building set on the given ground");
  return BuildingSet(ground, std::move(els));
}

Json to_json(const FaceCensus& c) { return Json(c.counts_by_size); }

Json to_json(const TreePoset& p) {
  Json nodes = Json::array();
  for (const auto& t : p.nodes)
    nodes.push_back(Json{{"code", t.code}, {"leaves", t.leaf_count}, {"gamma", to_json(t.gamma)}});
  auto edges = [](const std::vector<PosetEdge>& es) {
    Json a = Json::array();
    for (const auto& e : es) a.push_back(Json::array({e.from, e.to}));
    return a;
  };
  return Json{{"n", p.n}, {"nodes", std::move(nodes)}, {"shift_edges", edges(p.shift_edges)}, {"floss_edges", edges(p.floss_edges)}};
}

}  // namespace nesto
