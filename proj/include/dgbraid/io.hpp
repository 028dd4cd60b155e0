#pragma once

#include <string>

#include "dgbraid/lie.hpp"
#include "dgbraid/parse.hpp"

#include <json.hpp>

namespace dgbraid {

using Json = nlohmann::json;

Json loadJsonFile(const std::string& path);

/// Algebra spec: {"generators":[{"name":"th3","degree":1},...],
///                "differential":{"th3":"-th+*th-", ...}}.
CdgaPtr cdgaFromJson(const Json& j);
Json cdgaToJson(const Cdga& A);

/// Module spec: {"basis":[{"name":"w1","degree":0},...],
///               "diff":{"w1":{"w2":"<expr>",...},...}}.
ModulePtr moduleFromJson(const Json& j, const CdgaPtr& A);

/// Map spec: {"degree":0,"entries":{"w1":{"w1'":"<expr>",...}}}.
ModMap mapFromJson(const Json& j, const ModulePtr& src, const ModulePtr& tgt);

/// Poisson candidate: {"shift":2,"components":{"2":"<expr>",...}}.
PoissonCandidate poissonFromJson(const Json& j, const CdgaPtr& A);
PoissonCandidate poissonFromJson(const Json& j, const PolAlgebraPtr& P);
Json poissonToJson(const PoissonCandidate& c);

/// Lie spec: {"N":1|2,"basis":["x+","x-","x3"],"f":{"(+,-)":{"3":"1"},...},
///            "kappa":{"(+,-,3)":"1"},"reps":{...}}.
LieNSpec lieFromJson(const Json& j);

}  // namespace dgbraid
