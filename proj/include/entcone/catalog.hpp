#pragma once

#include "entcone/cone.hpp"

#include <string>
#include <utility>
#include <vector>

namespace entcone {

// Extreme-ray families of the polymatroid cones, in catalog order.
// The first eleven live on n = 4; the *_3 and *_2 families on n = 3 and
// n = 2.  Uh25, Uh35 and V8 are the non-matroidal families.
enum class RayFamily {
    U11,
    U12,
    U13,
    U14,
    U23,
    W2,
    U24,
    U34,
    Uh25,
    Uh35,
    V8,
    U11_3,
    U12_3,
    U13_3,
    U23_3,
    U11_2,
    U12_2,
};

const char* family_token(RayFamily f);
int family_ground_size(RayFamily f);
int family_support_size(RayFamily f); // size of the support label
bool family_is_symmetric(RayFamily f); // support label is the whole ground set
bool family_is_matroidal(RayFamily f);
int family_order(RayFamily f); // position in catalog order within its n

struct RayName {
    RayFamily family = RayFamily::U11;
    unsigned support = 0; // bitmask; the full set for symmetric families

    bool operator==(const RayName&) const = default;
};

std::string to_string(const RayName& name);
RayName parse_ray_name(const std::string& s);

// Rank function of a named matroidal ray; throws for Uh25/Uh35/V8.
RationalSetFunction named_rank_function(const RayName& name);

// Representative vector for any named family, including the three
// non-matroidal ones (whose canonical vectors are fixed catalog data).
RationalSetFunction family_representative_vector(const RayName& name);

struct Orbit {
    std::vector<int> members; // ray indices, ascending
    int representative = 0;   // index of the lexicographically least member
};

// Orbits of the symmetric-group action f -> f . pi, sorted by the
// representative vector.
std::vector<Orbit> classify_orbits(const std::vector<ExtremeRay>& rays);

// Names aligned with rays.  Matroidal rays are matched against their rank
// functions; the non-matroidal n = 4 rays are identified and labeled via
// 2-face incidence fingerprints against the U23 and U13 rays.
std::vector<RayName> name_rays(const std::vector<ExtremeRay>& rays,
                               const std::vector<FacePair>& faces);
RayName name_ray(const RationalSetFunction& rep, const std::vector<ExtremeRay>& rays,
                 const std::vector<FacePair>& faces);

struct FaceTypeKey {
    RayFamily later;   // the family printed first (larger catalog order)
    RayFamily earlier; // printed second
    int overlap = 0;   // |support(later member) & support(earlier member)|

    bool operator==(const FaceTypeKey&) const = default;
};

struct FaceType {
    int type_id = 0;
    FaceTypeKey key;
    RayName rep_first;  // canonical printed representative pair
    RayName rep_second;
    int count = 0;   // member pairs among the 2-faces
    int theorem = 0; // characterization theorem 1..7, or 0 if open
    std::vector<std::pair<int, int>> members; // ray index pairs, ascending
};

std::string face_type_display(const FaceType& t); // "(U23^123,U12^12)"

// Orbit classification of the 2-faces.  Rows are sorted by (earlier
// family, later family, overlap descending); type_id is the 1-based row
// number.  For the n = 4 cone this reproduces the full 59-type catalog.
std::vector<FaceType> face_type_table(const std::vector<ExtremeRay>& rays,
                                      const std::vector<FacePair>& faces);

// Static catalog data: the 59 face types of the n = 4 cone with their
// printed representatives and characterization theorems.
struct FaceTypeRecord {
    FaceTypeKey key;
    const char* rep_first;
    const char* rep_second;
    int count;
    int theorem; // 0 = open
};
const std::vector<FaceTypeRecord>& face_type_records();

} // namespace entcone
