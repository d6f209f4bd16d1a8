#include "json_io.hpp"

namespace marf {

void to_json(json& j, const Signature& s) { j = json{{"genus", s.genus}, {"orders", s.orders}}; }

void from_json(const json& j, Signature& s) {
  j.at("genus").get_to(s.genus);
  j.at("orders").get_to(s.orders);
}

void to_json(json& j, const ArfType& t) {
  j = t.signature;
  j["delta"] = t.delta;
}

void from_json(const json& j, ArfType& t) {
  from_json(j, t.signature);
  j.at("delta").get_to(t.delta);
}

void to_json(json& j, const ArfFunction& f) {
  j = json{{"signature", f.signature}, {"m", f.m}, {"alpha", f.alpha}, {"beta", f.beta}, {"gamma", f.gamma}};
}

void to_json(json& j, const Component& c) {
  j = json{{"delta", c.delta},
           {"teich_dimension", c.teich_dimension},
           {"representative", c.representative},
           {"normal_form", c.normal_form}};
  if (c.orbit_size) j["orbit_size"] = *c.orbit_size;
}

void to_json(json& j, const ComponentReport& r) {
  j = json{{"signature", r.signature}, {"m", r.m}, {"components", r.components}};
}

void to_json(json& j, const RuleCheck& c) {
  j = json{{"rule", c.rule},         {"name", c.name},         {"passed", c.failures == 0},
           {"samples", c.samples},   {"failures", c.failures}, {"skipped", c.skipped}};
  if (!c.first_failure.empty()) j["first_failure"] = c.first_failure;
}

json orbit_json(const OrbitInfo& o, int m) {
  return json{{"delta", o.type.delta},
              {"size", o.size},
              {"representative", o.representative},
              {"normal_form", normal_form_tuple(o.type.signature, m, o.type.delta)}};
}

}  // namespace marf
