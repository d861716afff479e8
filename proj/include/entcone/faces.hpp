#pragma once

#include "entcone/catalog.hpp"
#include "entcone/dist.hpp"

#include <optional>
#include <string>
#include <vector>

namespace entcone {

// A point a*r1 + b*r2 on a 2-face of the n = 4 cone, identified by a face
// id like "(U23^123,U12^12)".  Parsing normalizes the pair into catalog
// order (later family first), swapping a and b alongside if needed.
struct FacePoint {
    RayName r1; // printed first
    RayName r2;
    double a = 0;
    double b = 0;
};

FacePoint parse_face_point(const std::string& face_id, double a, double b);
std::string face_id_of(const FacePoint& fp);

// catalog record for the face's type; never null for a parsed FacePoint
const FaceTypeRecord& face_type_of(const FacePoint& fp);

enum class PointStatus { Entropic, NotEntropic, Uncharacterized };
const char* to_string(PointStatus s);
int exit_code(PointStatus s); // 0, 1, 2

struct Verdict {
    PointStatus status = PointStatus::Uncharacterized;
    int theorem = 0; // characterization consulted; 0 for open types
    std::optional<int> k;
    std::optional<int> k2;
    std::optional<std::vector<int>> partition;
};

// a*r1 + b*r2 as a real set function; works for every face type since the
// non-matroidal families carry fixed representative vectors.
RealSetFunction face_point_vector(const FacePoint& fp);

// Entropic / NotEntropic decision for the characterized types, with the
// matched parameters; Uncharacterized for the open types.
Verdict membership(const FacePoint& fp, double tol = 1e-9);

struct WitnessParams {
    std::optional<int> k;
    std::optional<int> k2;
    std::optional<std::vector<int>> partition;
    size_t max_support = 200000; // cap on constructed support size
};

// Joint distribution whose entropy vector equals face_point_vector(fp).
// Requires membership(fp) == Entropic.
JointDist witness(const FacePoint& fp, const WitnessParams& params = {}, double tol = 1e-9);

// Fill in (a, b) from exact parameters when the caller gave only those:
// k for the log-integer types, (k, k2) for the grid type, a partition for
// the partition type.
std::pair<double, double> point_from_params(const std::string& face_id,
                                            const WitnessParams& params);

struct RegionRow {
    double a = 0;
    double b = 0;
    PointStatus status = PointStatus::Uncharacterized;
};

// Membership swept over the grid {0, step, 2 step, ...} up to a_max/b_max
// inclusive, a-major.
std::vector<RegionRow> region_sample(const std::string& face_id, double a_max,
                                     double b_max, double step, double tol = 1e-9);

// number partitions of k, descending parts, descending lexicographic order
std::vector<std::vector<int>> partitions_of(int k);

// entropy in bits of (parts[0]/k, parts[1]/k, ...) where k = sum(parts)
double partition_entropy(const std::vector<int>& parts);

} // namespace entcone
