#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ttg/adelic.hpp"
#include "ttg/oracle.hpp"
#include "ttg/torsion.hpp"

namespace ttg {

using json = nlohmann::ordered_json;

/// Reads and parses a file; throws ParseError.
json load_json(const std::string& path);

/// {"elements":[{"id":"m","dim":0?},...], "relations":[["m","p1"],...]}; [a,b] means a <= b.
Poset poset_from_json(const json& j);
json to_json(const BalmerPoset& P);

/// {"subposet":[...], "alpha":{"p1":"x1",...}}; identities on the subposet may be omitted.
AssemblyData assembly_from_json(const Poset& P, const json& j);
json to_json(const AssemblyData& A);

/// {"world":"Int","degrees":{"0":2,"1":1},"diff":{"1":[[...]]}}. Mixed complexes replace
/// "world"/"degrees" by "terms":{"0":["Int","Rat"],...}. Entries are integers or scalar
/// strings ("x", "-2/5", "y^2*x"). Validated on load; throws ParseError, DomainError.
Complex complex_from_json(const json& j);
json to_json(const Complex& C);

json to_json(const ModuleClass& m);  // sorted piece list
json to_json(const Homology& h);     // degree -> piece list
json to_json(const IsoCertificate& c);
json to_json(const CheckResult& c);
json to_json(const OracleResult& r);
json to_json(const CousinLayer& c);
/// Vertex label -> {ring, homology, terms}, plus the arrow list.
json to_json(const CubeDiagram& D);

}  // namespace ttg
