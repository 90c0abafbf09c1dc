#include "vvjack/json_io.hpp"

#include <algorithm>

#include "vvjack/errors.hpp"

namespace vvjack {

Json partition_json(const Partition& tau) { return Json(tau.parts); }

Json composition_json(const Composition& a) { return Json(a); }

Json rsyt_json(const Rsyt& t) { return Json(t.rows); }

Json module_vector_json(const ShapeData& sd, const ModuleVector& v) {
  Json j = Json::object();
  for (const auto& [t, a] : v.coords()) j[sd.tabs[t].word()] = a.str();
  return j;
}

ModuleVector module_vector_parse(const ShapeData& sd, const Json& j) {
  ModuleVector v;
  for (const auto& [word, val] : j.items()) {
    const int t = sd.index_of_word(word);
    if (t < 0) throw ParseError("unknown tableau id: " + word);
    v.add(t, ScalarQk::parse(val.get<std::string>()));
  }
  return v;
}

Json vpoly_json(const ShapeData& sd, const VPoly& f) {
  std::vector<const Composition*> keys;
  keys.reserve(f.terms().size());
  for (const auto& [a, u] : f.terms()) keys.push_back(&a);
  std::sort(keys.begin(), keys.end(), [](const Composition* x, const Composition* y) {
    const int dx = degree_of(*x), dy = degree_of(*y);
    if (dx != dy) return dx < dy;
    return *x < *y;
  });
  Json out = Json::array();
  for (const Composition* a : keys) {
    Json term = Json::object();
    term["alpha"] = *a;
    term["coeff"] = module_vector_json(sd, f.terms().at(*a));
    out.push_back(std::move(term));
  }
  return out;
}

VPoly vpoly_parse(const ShapeData& sd, const Json& j) {
  VPoly f;
  for (const auto& term : j) {
    const Composition alpha = term.at("alpha").get<Composition>();
    if (static_cast<int>(alpha.size()) != sd.N)
      throw ParseError("alpha length mismatch");
    f.add_term(alpha, module_vector_parse(sd, term.at("coeff")));
  }
  return f;
}

}  // namespace vvjack
