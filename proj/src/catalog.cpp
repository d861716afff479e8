#include "entcone/catalog.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

namespace entcone {

namespace {

struct FamilyInfo {
    RayFamily family;
    const char* token;
    int n;
    int support_size;
    bool matroidal;
    int order; // catalog position within its ground size
};

constexpr std::array<FamilyInfo, 17> kFamilies{{
    {RayFamily::U11, "U11", 4, 1, true, 0},
    {RayFamily::U12, "U12", 4, 2, true, 1},
    {RayFamily::U13, "U13", 4, 3, true, 2},
    {RayFamily::U14, "U14", 4, 4, true, 3},
    {RayFamily::U23, "U23", 4, 3, true, 4},
    {RayFamily::W2, "W2", 4, 2, true, 5},
    {RayFamily::U24, "U24", 4, 4, true, 6},
    {RayFamily::U34, "U34", 4, 4, true, 7},
    {RayFamily::Uh25, "Uh25", 4, 1, false, 8},
    {RayFamily::Uh35, "Uh35", 4, 1, false, 9},
    {RayFamily::V8, "V8", 4, 2, false, 10},
    {RayFamily::U11_3, "U11_3", 3, 1, true, 0},
    {RayFamily::U12_3, "U12_3", 3, 2, true, 1},
    {RayFamily::U13_3, "U13_3", 3, 3, true, 2},
    {RayFamily::U23_3, "U23_3", 3, 3, true, 3},
    {RayFamily::U11_2, "U11_2", 2, 1, true, 0},
    {RayFamily::U12_2, "U12_2", 2, 2, true, 1},
}};

const FamilyInfo& info(RayFamily f) {
    for (const auto& fi : kFamilies)
        if (fi.family == f)
            return fi;
    throw std::logic_error("unknown ray family");
}

RationalSetFunction uniform_rank(int k, unsigned support, GroundSet g) {
    RationalSetFunction out(g);
    for (unsigned m = 1; m <= static_cast<unsigned>(g.dim()); ++m) {
        const int hit = std::popcount(m & support);
        out.set_value(m, Rational(std::min(k, hit)));
    }
    return out;
}

// Rank 2 function whose parallel classes are the support pair plus each
// remaining element on its own: r(A) = min(2, number of classes meeting A).
RationalSetFunction wheel_rank(unsigned support, GroundSet g) {
    RationalSetFunction out(g);
    for (unsigned m = 1; m <= static_cast<unsigned>(g.dim()); ++m) {
        int classes = (m & support) ? 1 : 0;
        for (int i = 1; i <= g.n(); ++i) {
            const unsigned bit = 1u << (i - 1);
            if ((bit & support) == 0 && (m & bit))
                ++classes;
        }
        out.set_value(m, Rational(std::min(2, classes)));
    }
    return out;
}

// Canonical vectors of the non-matroidal families, indexed by mask-1.
// These are the double-description representatives for the labels Uh25^1,
// Uh35^1 and V8^12; other labels are reached by permuting.
constexpr std::array<int, 15> kUh25Canonical{2, 1, 2, 1, 2, 2, 2, 1, 2, 2, 2, 2, 2, 2, 2};
constexpr std::array<int, 15> kUh35Canonical{2, 1, 3, 1, 3, 2, 3, 1, 3, 2, 3, 2, 3, 3, 3};
constexpr std::array<int, 15> kV8Canonical{2, 2, 4, 2, 3, 3, 4, 2, 3, 3, 4, 3, 4, 4, 4};

RationalSetFunction from_array(const std::array<int, 15>& a) {
    RationalSetFunction out((GroundSet(4)));
    for (size_t t = 0; t < a.size(); ++t)
        out.raw()[t] = Rational(a[t]);
    return out;
}

} // namespace

const char* family_token(RayFamily f) { return info(f).token; }
int family_ground_size(RayFamily f) { return info(f).n; }
int family_support_size(RayFamily f) { return info(f).support_size; }
bool family_is_symmetric(RayFamily f) { return info(f).support_size == info(f).n; }
bool family_is_matroidal(RayFamily f) { return info(f).matroidal; }
int family_order(RayFamily f) { return info(f).order; }

std::string to_string(const RayName& name) {
    std::string out = family_token(name.family);
    if (!family_is_symmetric(name.family))
        out += "^" + subset_to_string(name.support);
    return out;
}

RayName parse_ray_name(const std::string& s) {
    const auto caret = s.find('^');
    const std::string token = s.substr(0, caret == std::string::npos ? s.size() : caret);
    std::optional<FamilyInfo> found;
    for (const auto& fi : kFamilies)
        if (token == fi.token)
            found = fi;
    if (!found)
        throw std::invalid_argument("unknown ray family: " + s);
    RayName name;
    name.family = found->family;
    if (family_is_symmetric(name.family)) {
        if (caret != std::string::npos)
            throw std::invalid_argument("family " + token + " takes no support label");
        name.support = GroundSet(found->n).full_mask();
        return name;
    }
    if (caret == std::string::npos)
        throw std::invalid_argument("family " + token + " needs a support label");
    name.support = subset_from_string(s.substr(caret + 1), found->n);
    if (std::popcount(name.support) != found->support_size)
        throw std::invalid_argument("support label of wrong size: " + s);
    return name;
}

RationalSetFunction named_rank_function(const RayName& name) {
    const GroundSet g(family_ground_size(name.family));
    switch (name.family) {
    case RayFamily::U11:
    case RayFamily::U12:
    case RayFamily::U13:
    case RayFamily::U14:
    case RayFamily::U11_3:
    case RayFamily::U12_3:
    case RayFamily::U13_3:
    case RayFamily::U11_2:
    case RayFamily::U12_2:
        return uniform_rank(1, name.support, g);
    case RayFamily::U23:
    case RayFamily::U24:
    case RayFamily::U23_3:
        return uniform_rank(2, name.support, g);
    case RayFamily::U34:
        return uniform_rank(3, name.support, g);
    case RayFamily::W2:
        return wheel_rank(name.support, g);
    case RayFamily::Uh25:
    case RayFamily::Uh35:
    case RayFamily::V8:
        throw std::invalid_argument("family " + std::string(family_token(name.family)) +
                                    " is not matroidal and has no closed-form rank function");
    }
    throw std::logic_error("unknown ray family");
}

RationalSetFunction family_representative_vector(const RayName& name) {
    if (family_is_matroidal(name.family))
        return named_rank_function(name);
    const RationalSetFunction canonical = name.family == RayFamily::Uh25 ? from_array(kUh25Canonical)
                                        : name.family == RayFamily::Uh35 ? from_array(kUh35Canonical)
                                                                         : from_array(kV8Canonical);
    const unsigned canonical_support = name.family == RayFamily::V8 ? 0b11u : 0b1u;
    for (const auto& p : Permutation::all(4))
        if (p.apply(name.support) == canonical_support)
            return apply_permutation(canonical, p);
    throw std::logic_error("no permutation reaches the canonical support");
}

std::vector<Orbit> classify_orbits(const std::vector<ExtremeRay>& rays) {
    if (rays.empty())
        return {};
    const GroundSet g = rays[0].rep.ground();
    const auto perms = Permutation::all(g.n());

    std::map<std::vector<Rational>, int> index_of;
    for (size_t i = 0; i < rays.size(); ++i)
        index_of[rays[i].rep.raw()] = static_cast<int>(i);

    std::vector<bool> done(rays.size(), false);
    std::vector<Orbit> orbits;
    for (size_t i = 0; i < rays.size(); ++i) {
        if (done[i])
            continue;
        std::set<int> members;
        for (const auto& p : perms) {
            const auto img = apply_permutation(rays[i].rep, p);
            const auto it = index_of.find(img.raw());
            if (it == index_of.end())
                throw std::invalid_argument("ray set is not closed under permutations");
            members.insert(it->second);
        }
        Orbit o;
        o.members.assign(members.begin(), members.end());
        o.representative = *std::min_element(
            o.members.begin(), o.members.end(), [&](int a, int b) {
                return rays[static_cast<size_t>(a)].rep.raw() < rays[static_cast<size_t>(b)].rep.raw();
            });
        for (int idx : o.members)
            done[static_cast<size_t>(idx)] = true;
        orbits.push_back(std::move(o));
    }
    std::sort(orbits.begin(), orbits.end(), [&](const Orbit& a, const Orbit& b) {
        return rays[static_cast<size_t>(a.representative)].rep.raw() <
               rays[static_cast<size_t>(b.representative)].rep.raw();
    });
    return orbits;
}

namespace {

std::vector<RayName> matroidal_names(int n) {
    std::vector<RayName> out;
    const GroundSet g(n);
    auto supports_of = [&](int size) {
        std::vector<unsigned> s;
        for (unsigned m = 1; m <= g.full_mask(); ++m)
            if (std::popcount(m) == size)
                s.push_back(m);
        return s;
    };
    for (const auto& fi : kFamilies) {
        if (fi.n != n || !fi.matroidal)
            continue;
        for (unsigned s : supports_of(fi.support_size))
            out.push_back(RayName{fi.family, s});
    }
    return out;
}

} // namespace

std::vector<RayName> name_rays(const std::vector<ExtremeRay>& rays,
                               const std::vector<FacePair>& faces) {
    if (rays.empty())
        return {};
    const GroundSet g = rays[0].rep.ground();
    const int n = g.n();

    std::map<std::vector<Rational>, int> index_of;
    for (size_t i = 0; i < rays.size(); ++i)
        index_of[rays[i].rep.raw()] = static_cast<int>(i);

    std::vector<std::optional<RayName>> names(rays.size());
    for (const auto& name : matroidal_names(n)) {
        const auto it = index_of.find(named_rank_function(name).raw());
        if (it != index_of.end())
            names[static_cast<size_t>(it->second)] = name;
    }

    std::set<std::pair<int, int>> face_set;
    for (const auto& fp : faces)
        if (fp.is_2face)
            face_set.insert({std::min(fp.i, fp.j), std::max(fp.i, fp.j)});
    auto joined = [&](int i, int j) {
        return face_set.count({std::min(i, j), std::max(i, j)}) > 0;
    };

    for (size_t i = 0; i < rays.size(); ++i) {
        if (names[i])
            continue;
        if (n != 4)
            throw std::invalid_argument("unnamed ray outside the n = 4 catalog");
        // fingerprint against the U23 rays
        std::vector<unsigned> partners;
        for (unsigned s = 1; s <= g.full_mask(); ++s) {
            if (std::popcount(s) != 3)
                continue;
            const auto it = index_of.find(named_rank_function(RayName{RayFamily::U23, s}).raw());
            if (it != index_of.end() && joined(static_cast<int>(i), it->second))
                partners.push_back(s);
        }
        RayName name;
        if (partners.size() == 1) {
            // Uh25^e joins exactly the one U23 whose support misses e
            name.family = RayFamily::Uh25;
            name.support = g.full_mask() & ~partners[0];
        } else if (partners.size() == 3) {
            // Uh35^e joins exactly the U23 rays whose supports contain e
            unsigned common = g.full_mask();
            for (unsigned s : partners)
                common &= s;
            name.family = RayFamily::Uh35;
            name.support = common;
        } else if (partners.size() == 2) {
            // V8^ab joins exactly the U13 rays whose supports miss a or b
            unsigned pair = 0;
            for (int e = 1; e <= 4; ++e) {
                const unsigned triple = g.full_mask() & ~(1u << (e - 1));
                const auto it =
                    index_of.find(named_rank_function(RayName{RayFamily::U13, triple}).raw());
                if (it != index_of.end() && joined(static_cast<int>(i), it->second))
                    pair |= 1u << (e - 1);
            }
            if (std::popcount(pair) != 2)
                throw std::invalid_argument("ray does not fit any catalog family");
            name.family = RayFamily::V8;
            name.support = pair;
        } else {
            throw std::invalid_argument("ray does not fit any catalog family");
        }
        if (std::popcount(name.support) != family_support_size(name.family))
            throw std::invalid_argument("ray does not fit any catalog family");
        names[i] = name;
    }

    std::vector<RayName> out;
    out.reserve(names.size());
    for (const auto& nm : names)
        out.push_back(*nm);
    return out;
}

RayName name_ray(const RationalSetFunction& rep, const std::vector<ExtremeRay>& rays,
                 const std::vector<FacePair>& faces) {
    for (size_t i = 0; i < rays.size(); ++i)
        if (rays[i].rep.raw() == rep.raw())
            return name_rays(rays, faces)[i];
    throw std::invalid_argument("vector is not among the given extreme rays");
}

const std::vector<FaceTypeRecord>& face_type_records() {
    using F = RayFamily;
    static const std::vector<FaceTypeRecord> records = {
        {{F::U11, F::U11, 0}, "U11^1", "U11^2", 6, 1},
        {{F::U12, F::U11, 1}, "U12^12", "U11^1", 12, 1},
        {{F::U12, F::U11, 0}, "U12^12", "U11^3", 12, 1},
        {{F::U13, F::U11, 1}, "U13^123", "U11^1", 12, 1},
        {{F::U13, F::U11, 0}, "U13^123", "U11^4", 4, 1},
        {{F::U14, F::U11, 1}, "U14", "U11^1", 4, 1},
        {{F::U23, F::U11, 1}, "U23^123", "U11^1", 12, 3},
        {{F::U23, F::U11, 0}, "U23^123", "U11^4", 4, 3},
        {{F::W2, F::U11, 1}, "W2^14", "U11^1", 12, 3},
        {{F::W2, F::U11, 0}, "W2^34", "U11^1", 12, 3},
        {{F::U24, F::U11, 1}, "U24", "U11^1", 4, 0},
        {{F::U34, F::U11, 1}, "U34", "U11^1", 4, 0},
        {{F::Uh25, F::U11, 1}, "Uh25^1", "U11^1", 4, 0},
        {{F::Uh25, F::U11, 0}, "Uh25^1", "U11^2", 12, 0},
        {{F::Uh35, F::U11, 1}, "Uh35^1", "U11^1", 4, 0},
        {{F::Uh35, F::U11, 0}, "Uh35^1", "U11^2", 12, 0},
        {{F::V8, F::U11, 1}, "V8^12", "U11^1", 12, 0},
        {{F::V8, F::U11, 0}, "V8^12", "U11^3", 12, 0},
        {{F::U12, F::U12, 1}, "U12^12", "U12^13", 12, 1},
        {{F::U12, F::U12, 0}, "U12^12", "U12^34", 3, 1},
        {{F::U13, F::U12, 2}, "U13^123", "U12^12", 12, 1},
        {{F::U13, F::U12, 1}, "U13^123", "U12^14", 12, 1},
        {{F::U14, F::U12, 2}, "U14", "U12^12", 6, 1},
        {{F::U23, F::U12, 2}, "U23^123", "U12^12", 12, 2},
        {{F::U23, F::U12, 1}, "U23^123", "U12^14", 12, 3},
        {{F::W2, F::U12, 2}, "W2^14", "U12^14", 6, 3},
        {{F::W2, F::U12, 1}, "W2^24", "U12^14", 24, 3},
        {{F::W2, F::U12, 0}, "W2^34", "U12^12", 6, 2},
        {{F::U24, F::U12, 2}, "U24", "U12^12", 6, 0},
        {{F::U34, F::U12, 2}, "U34", "U12^12", 6, 0},
        {{F::Uh25, F::U12, 1}, "Uh25^1", "U12^12", 12, 0},
        {{F::Uh35, F::U12, 1}, "Uh35^1", "U12^12", 12, 0},
        {{F::V8, F::U12, 1}, "V8^12", "U12^13", 24, 0},
        {{F::U13, F::U13, 2}, "U13^123", "U13^124", 6, 1},
        {{F::U14, F::U13, 3}, "U14", "U13^123", 4, 1},
        {{F::U23, F::U13, 2}, "U23^123", "U13^124", 12, 4},
        {{F::W2, F::U13, 2}, "W2^14", "U13^124", 12, 2},
        {{F::U24, F::U13, 3}, "U24", "U13^123", 4, 0},
        {{F::U34, F::U13, 3}, "U34", "U13^123", 4, 0},
        {{F::Uh25, F::U13, 1}, "Uh25^1", "U13^123", 12, 0},
        {{F::Uh35, F::U13, 0}, "Uh35^1", "U13^234", 4, 0},
        {{F::V8, F::U13, 1}, "V8^12", "U13^134", 12, 0},
        {{F::U23, F::U14, 3}, "U23^123", "U14", 4, 7},
        {{F::U34, F::U14, 4}, "U34", "U14", 1, 0},
        {{F::V8, F::U14, 2}, "V8^12", "U14", 6, 0},
        {{F::U23, F::U23, 2}, "U23^123", "U23^124", 6, 5},
        {{F::W2, F::U23, 1}, "W2^12", "U23^134", 12, 6},
        {{F::U24, F::U23, 3}, "U24", "U23^123", 4, 0},
        {{F::U34, F::U23, 3}, "U34", "U23^123", 4, 0},
        {{F::Uh25, F::U23, 0}, "Uh25^1", "U23^234", 4, 0},
        {{F::Uh35, F::U23, 1}, "Uh35^1", "U23^123", 12, 0},
        {{F::V8, F::U23, 2}, "V8^12", "U23^123", 12, 0},
        {{F::W2, F::W2, 1}, "W2^12", "W2^13", 12, 0},
        {{F::U24, F::W2, 2}, "U24", "W2^12", 6, 0},
        {{F::Uh25, F::W2, 1}, "Uh25^1", "W2^12", 12, 0},
        {{F::Uh35, F::W2, 0}, "Uh35^1", "W2^23", 12, 0},
        {{F::Uh25, F::U24, 1}, "Uh25^1", "U24", 4, 0},
        {{F::Uh35, F::U24, 1}, "Uh35^1", "U24", 4, 0},
        {{F::V8, F::U34, 2}, "V8^12", "U34", 6, 0},
    };
    return records;
}

std::string face_type_display(const FaceType& t) {
    return "(" + to_string(t.rep_first) + "," + to_string(t.rep_second) + ")";
}

std::vector<FaceType> face_type_table(const std::vector<ExtremeRay>& rays,
                                      const std::vector<FacePair>& faces) {
    const auto names = name_rays(rays, faces);

    struct KeyLess {
        bool operator()(const FaceTypeKey& a, const FaceTypeKey& b) const {
            return std::tuple(family_order(a.earlier), family_order(a.later), -a.overlap) <
                   std::tuple(family_order(b.earlier), family_order(b.later), -b.overlap);
        }
    };

    std::map<FaceTypeKey, std::vector<std::pair<int, int>>, KeyLess> groups;
    for (const auto& fp : faces) {
        if (!fp.is_2face)
            continue;
        const RayName& ni = names[static_cast<size_t>(fp.i)];
        const RayName& nj = names[static_cast<size_t>(fp.j)];
        const int overlap = std::popcount(ni.support & nj.support);
        FaceTypeKey key;
        if (family_order(ni.family) >= family_order(nj.family))
            key = {ni.family, nj.family, overlap};
        else
            key = {nj.family, ni.family, overlap};
        groups[key].push_back({std::min(fp.i, fp.j), std::max(fp.i, fp.j)});
    }

    std::vector<FaceType> out;
    int id = 1;
    for (auto& [key, members] : groups) {
        std::sort(members.begin(), members.end());
        FaceType t;
        t.type_id = id++;
        t.key = key;
        t.count = static_cast<int>(members.size());
        t.members = members;
        const FaceTypeRecord* rec = nullptr;
        for (const auto& r : face_type_records())
            if (r.key == key)
                rec = &r;
        if (rec) {
            t.rep_first = parse_ray_name(rec->rep_first);
            t.rep_second = parse_ray_name(rec->rep_second);
            t.theorem = rec->theorem;
        } else {
            // outside the n = 4 catalog: synthesize from the least member
            const auto [i, j] = members.front();
            RayName a = names[static_cast<size_t>(i)], b = names[static_cast<size_t>(j)];
            if (family_order(a.family) < family_order(b.family))
                std::swap(a, b);
            t.rep_first = a;
            t.rep_second = b;
            t.theorem = 0;
        }
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace entcone
