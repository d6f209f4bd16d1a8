#pragma once

#include "json.hpp"

#include <marf/arf.hpp>
#include <marf/fuchsian.hpp>
#include <marf/mcg.hpp>
#include <marf/moduli.hpp>

namespace marf {

using json = nlohmann::json;

void to_json(json& j, const Signature& s);
void from_json(const json& j, Signature& s);
void to_json(json& j, const ArfType& t);
void from_json(const json& j, ArfType& t);
void to_json(json& j, const ArfFunction& f);
void to_json(json& j, const Component& c);
void to_json(json& j, const ComponentReport& r);
void to_json(json& j, const RuleCheck& c);

json orbit_json(const OrbitInfo& o, int m);

}  // namespace marf
