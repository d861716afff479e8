#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "entcone/catalog.hpp"
#include "entcone/cone.hpp"
#include "entcone/dist.hpp"
#include "entcone/faces.hpp"
#include "entcone/set_function.hpp"

namespace entcone {

using json = nlohmann::ordered_json;

// SetFunction files: {"n": 4, "values": {"1": ..., "2": ..., ...}} with
// bitmask keys as decimal strings; rational values are strings ("p/q"),
// real values are numbers. Loading infers the backend from the value type.
json set_function_to_json(const RationalSetFunction& f);
json set_function_to_json(const RealSetFunction& f);
bool set_function_json_is_rational(const json& j);
RationalSetFunction rational_set_function_from_json(const json& j);
RealSetFunction real_set_function_from_json(const json& j);

// Inequality list. JSON: [{"index": 0, "n": 4, "coeffs": {"1": "1", ...}}].
// CSV: header "index,c1,...,c(2^n-1)" with cK = coefficient of bitmask K.
json inequalities_to_json(const std::vector<LinearInequality>& ineqs);
std::string inequalities_to_csv(const std::vector<LinearInequality>& ineqs);

// Ray list. JSON: array of SetFunction objects extended with "tight"
// (0-based facet indices) and "name". CSV: "name,v1,...,v(2^n-1)".
json rays_to_json(const std::vector<ExtremeRay>& rays,
                  const std::vector<RayName>& names);
std::string rays_to_csv(const std::vector<ExtremeRay>& rays,
                        const std::vector<RayName>& names);

// All ray pairs with the 2-face flag: "ray_i,ray_j,is_2face" (0-based).
std::string faces_to_csv(const std::vector<FacePair>& pairs);

// Face-type table: "type_id,ray1,ray2,count,status,theorem" plus a JSON
// mirror with the same fields.
std::string status_label(int theorem);
std::string table_to_csv(const std::vector<FaceType>& table);
json table_to_json(const std::vector<FaceType>& table);

// Joint distributions:
// {"n":4, "alphabets":[...], "pmf":[{"x":[0,1,2,0], "p":0.125}, ...]}.
// Loading validates normalization to 1e-9 (then renormalizes exactly).
json dist_to_json(const JointDist& d);
JointDist dist_from_json(const json& j);

// Membership verdicts:
// {"face": "...", "a": ..., "b": ..., "status": "...", "detail": {...}}.
json verdict_to_json(const FacePoint& fp, const Verdict& v);

// Witness verification report (max entropy-coordinate error vs a*r1+b*r2).
json witness_report(const FacePoint& fp, const Verdict& v, const JointDist& d,
                    double max_error);

// Region sample: "a,b,status" rows.
std::string region_to_csv(const std::vector<RegionRow>& rows);

// Deterministic float formatting shared by every CSV/JSON writer.
std::string format_double(double x);

void write_text_file(const std::string& path, const std::string& content);

} // namespace entcone
