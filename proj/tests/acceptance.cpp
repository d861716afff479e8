// Acceptance gate: one line per criterion, PASS or FAIL, with timings.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "entcone/catalog.hpp"
#include "entcone/cone.hpp"
#include "entcone/dist.hpp"
#include "entcone/faces.hpp"
#include "entcone/set_function.hpp"

#include "oracle.hpp"

using namespace entcone;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int id, const std::string& title, const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    std::printf("[%s] criterion %d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", id,
                title.c_str(), static_cast<long long>(ms), detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok)
        ++failures;
}

struct Cone {
    std::vector<LinearInequality> ineqs;
    std::vector<ExtremeRay> rays;
    std::vector<FacePair> faces;
    std::vector<RayName> names;
};

Cone build(int n) {
    Cone c;
    c.ineqs = elemental_inequalities(GroundSet(n));
    c.rays = double_description(c.ineqs);
    c.faces = enumerate_2faces(c.rays, c.ineqs);
    c.names = name_rays(c.rays, c.faces);
    return c;
}

double max_witness_error(const FacePoint& fp, const WitnessParams& params = {}) {
    const JointDist d = witness(fp, params);
    const auto got = entropy_vector(d);
    const auto want = face_point_vector(fp);
    double err = 0;
    for (size_t t = 0; t < got.raw().size(); ++t)
        err = std::max(err, std::abs(got.raw()[t] - want.raw()[t]));
    return err;
}

int table_count(const std::vector<FaceType>& table, const std::string& r1,
                const std::string& r2) {
    for (const auto& t : table)
        if (to_string(t.rep_first) == r1 && to_string(t.rep_second) == r2)
            return t.count;
    return -1;
}

bool face_exists(const std::string& id) {
    try {
        parse_face_point(id, 0, 0);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

} // namespace

int main() {
    Cone c4, c3, c2;
    std::vector<FaceType> table;

    criterion(1, "facet counts 28/9/3 for n=4/3/2", [&](std::string&) {
        return elemental_inequalities(GroundSet(4)).size() == 28 &&
               elemental_inequalities(GroundSet(3)).size() == 9 &&
               elemental_inequalities(GroundSet(2)).size() == 3;
    });

    criterion(2, "ray counts and orbit families: 41 rays in 11 families (n=4), 8 in 4 (n=3)",
              [&](std::string& detail) {
        c4 = build(4);
        c3 = build(3);
        c2 = build(2);
        if (c4.rays.size() != 41 || c3.rays.size() != 8 || c2.rays.size() != 3) {
            detail = "ray counts " + std::to_string(c4.rays.size()) + "/" +
                     std::to_string(c3.rays.size()) + "/" + std::to_string(c2.rays.size());
            return false;
        }
        const auto orbits4 = classify_orbits(c4.rays);
        std::map<RayFamily, size_t> fam;
        for (const auto& nm : c4.names)
            ++fam[nm.family];
        const std::vector<std::pair<RayFamily, size_t>> expected = {
            {RayFamily::U11, 4},  {RayFamily::U12, 6},  {RayFamily::U13, 4},
            {RayFamily::U14, 1},  {RayFamily::U23, 4},  {RayFamily::W2, 6},
            {RayFamily::U24, 1},  {RayFamily::U34, 1},  {RayFamily::Uh25, 4},
            {RayFamily::Uh35, 4}, {RayFamily::V8, 6}};
        if (orbits4.size() != 11 || fam.size() != 11)
            return false;
        for (const auto& [f, cnt] : expected)
            if (fam[f] != cnt) {
                detail = std::string("family ") + family_token(f) + " has " +
                         std::to_string(fam[f]) + " members";
                return false;
            }
        return classify_orbits(c3.rays).size() == 4;
    });

    criterion(3, "extremeness audit and dual round-trip of the facet normals",
              [&](std::string& detail) {
        for (const auto& r : c4.rays)
            if (!verify_extreme(r, c4.ineqs)) {
                detail = "a computed ray fails verify_extreme";
                return false;
            }
        std::vector<LinearInequality> dual;
        int idx = 0;
        for (const auto& r : c4.rays)
            dual.push_back(LinearInequality(r.rep, idx++));
        const auto normals = double_description(dual);
        if (normals.size() != 28) {
            detail = "dual cone has " + std::to_string(normals.size()) + " rays";
            return false;
        }
        std::set<std::vector<Int>> got, want;
        for (const auto& r : normals) {
            std::vector<Rational> v(r.rep.raw().begin(), r.rep.raw().end());
            got.insert(primitive_vector(v));
        }
        for (const auto& iq : c4.ineqs) {
            std::vector<Rational> v(iq.coeffs.raw().begin(), iq.coeffs.raw().end());
            want.insert(primitive_vector(v));
        }
        return got == want;
    });

    criterion(4, "two-face catalog: 59 types, pinned counts, absent zero cells",
              [&](std::string& detail) {
        table = face_type_table(c4.rays, c4.faces);
        if (table.size() != 59) {
            detail = std::to_string(table.size()) + " types";
            return false;
        }
        const std::vector<std::tuple<std::string, std::string, int>> pinned = {
            {"U11^1", "U11^2", 6},    {"U12^12", "U12^34", 3},
            {"W2^24", "U12^14", 24},  {"U34", "U14", 1},
            {"Uh25^1", "U23^234", 4}, {"Uh35^1", "U23^123", 12},
        };
        for (const auto& [r1, r2, cnt] : pinned)
            if (table_count(table, r1, r2) != cnt) {
                detail = "(" + r1 + "," + r2 + ") count " +
                         std::to_string(table_count(table, r1, r2)) + " != " +
                         std::to_string(cnt);
                return false;
            }
        // zero cells of the catalog grid must not appear as faces
        for (const char* id : {"(U24,U34)", "(U14,W2^12)", "(U14,W2^34)",
                               "(Uh25^1,Uh35^1)", "(Uh25^1,Uh35^2)", "(V8^12,V8^34)"})
            if (face_exists(id)) {
                detail = std::string("unexpected face ") + id;
                return false;
            }
        int total = 0;
        for (const auto& t : table)
            total += t.count;
        if (total != 510) {
            detail = "total face count " + std::to_string(total);
            return false;
        }
        return true;
    });

    criterion(5, "theorem statuses: exactly 27 characterized, split 13/3/7/1/1/1/1",
              [&](std::string& detail) {
        std::map<int, int> hist;
        for (const auto& t : table)
            ++hist[t.theorem];
        const std::map<int, int> expected = {{0, 32}, {1, 13}, {2, 3}, {3, 7},
                                             {4, 1},  {5, 1},  {6, 1}, {7, 1}};
        if (hist != expected) {
            std::ostringstream os;
            for (const auto& [thm, cnt] : hist)
                os << thm << ":" << cnt << " ";
            detail = os.str();
            return false;
        }
        return true;
    });

    criterion(6, "witness suite: every constructed distribution hits a*r1+b*r2 to 1e-9",
              [&](std::string& detail) {
        int built = 0;
        double worst = 0;
        auto check = [&](const FacePoint& fp, const WitnessParams& p = {}) {
            const double err = max_witness_error(fp, p);
            worst = std::max(worst, err);
            ++built;
            if (err > 1e-9)
                throw std::runtime_error("error " + std::to_string(err) + " at " +
                                         face_id_of(fp));
        };
        const double l5 = std::log2(5.0);

        // log-integer faces, k = 1..5, mixed second coordinates
        for (const char* id :
             {"(U23^123,U11^1)", "(U23^123,U11^4)", "(U23^123,U12^14)",
              "(W2^14,U11^1)", "(W2^34,U11^1)", "(W2^14,U12^14)", "(W2^24,U12^14)",
              "(U23^123,U13^124)"})
            for (int k = 1; k <= 5; ++k)
                for (double b : {0.0, 0.8})
                    check(parse_face_point(id, std::log2(double(k)), b));

        // lattice-grid face: all k1, k2 <= 5
        for (int k1 = 1; k1 <= 5; ++k1)
            for (int k2 = 1; k2 <= 5; ++k2) {
                WitnessParams p;
                p.k = k1;
                p.k2 = k2;
                check(parse_face_point("(U23^123,U23^124)", std::log2(double(k1)),
                                       std::log2(double(k2))), p);
            }

        // sawtooth faces: boundary and interior samples
        for (const char* id :
             {"(U23^123,U12^12)", "(W2^34,U12^12)", "(W2^14,U13^124)"})
            for (double a : {0.0, 0.5, 1.0, 1.5, 2.2, l5 - 0.05}) {
                const double thr = std::log2(std::ceil(std::exp2(a) - 1e-9));
                check(parse_face_point(id, a, std::max(0.0, thr - a)));
                check(parse_face_point(id, a, std::max(0.0, thr - a) + 0.6));
            }

        // partition face: every partition of every k <= 6
        for (int k = 1; k <= 6; ++k)
            for (const auto& parts : partitions_of(k)) {
                WitnessParams p;
                p.partition = parts;
                const double a = partition_entropy(parts);
                check(parse_face_point("(W2^12,U23^134)", a,
                                       std::log2(double(k)) - a), p);
            }

        // half-open face: lattice and non-lattice regimes
        for (int k = 1; k <= 4; ++k)
            for (double b : {0.0, 0.5, 1.3})
                check(parse_face_point("(U23^123,U14)", std::log2(double(k)), b));
        for (double a : {0.5, 1.5, 2.3})
            for (double b : {0.7, 1.5})
                check(parse_face_point("(U23^123,U14)", a, b));

        // all-entropic faces at a generic point
        for (const auto& rec : face_type_records())
            if (rec.theorem == 1)
                check(parse_face_point("(" + std::string(rec.rep_first) + "," +
                                           rec.rep_second + ")",
                                       0.9, 1.4));

        std::ostringstream os;
        os << built << " witnesses, max error " << worst;
        detail = os.str();
        return worst <= 1e-9;
    });

    criterion(7, "membership region shapes on all five characterized geometries",
              [&](std::string& detail) {
        const double l3 = std::log2(3.0);
        auto expect = [&](const char* id, double a, double b, PointStatus want) {
            const auto got = membership(parse_face_point(id, a, b)).status;
            if (got != want)
                throw std::runtime_error(std::string(id) + " at (" +
                                         std::to_string(a) + "," + std::to_string(b) +
                                         ")");
        };
        // sawtooth: corners at log2 2, log2 3, log2 4 touch b = 0
        for (double corner : {0.0, 1.0, l3, 2.0})
            expect("(U23^123,U12^12)", corner, 0.0, PointStatus::Entropic);
        for (double a : {0.5, 1.2, 1.8})
            expect("(U23^123,U12^12)", a, 0.0, PointStatus::NotEntropic);
        for (double a : {0.5, 1.2, 1.8}) {
            const double thr = std::log2(std::ceil(std::exp2(a)));
            expect("(U23^123,U12^12)", a, thr - a - 1e-4, PointStatus::NotEntropic);
            expect("(U23^123,U12^12)", a, thr - a + 1e-4, PointStatus::Entropic);
        }
        // vertical lines at a = log2 k for the log-integer faces
        for (const char* id : {"(U23^123,U11^1)", "(U23^123,U13^124)"}) {
            for (double a : {0.0, 1.0, l3, 2.0})
                for (double b : {0.0, 0.6, 1.9})
                    expect(id, a, b, PointStatus::Entropic);
            for (double a : {0.3, 1.2, 1.9})
                expect(id, a, 0.7, PointStatus::NotEntropic);
        }
        // lattice grid
        for (int k1 : {1, 2, 3, 4})
            for (int k2 : {1, 2, 3, 4})
                expect("(U23^123,U23^124)", std::log2(double(k1)),
                       std::log2(double(k2)), PointStatus::Entropic);
        expect("(U23^123,U23^124)", 1.2, 1.0, PointStatus::NotEntropic);
        expect("(U23^123,U23^124)", 1.0, 0.8, PointStatus::NotEntropic);
        // partition face: for k = 4 exactly five entropic a-values on the line
        const double h31 = 2.0 - 0.75 * l3;
        int hits = 0;
        for (int i = 0; i <= 2000; ++i) {
            const double a = i * 0.001;
            if (membership(parse_face_point("(W2^12,U23^134)", a, 2.0 - a)).status ==
                PointStatus::Entropic)
                ++hits;
        }
        if (hits != 4) { // 0, 1, 1.5, 2 lie on the 0.001 grid; H(3/4,1/4) does not
            detail = "grid hits " + std::to_string(hits);
            return false;
        }
        for (double a : {0.0, h31, 1.0, 1.5, 2.0})
            expect("(W2^12,U23^134)", a, 2.0 - a, PointStatus::Entropic);
        expect("(W2^12,U23^134)", 0.5, 1.5, PointStatus::NotEntropic);
        // half-open: open half-plane b > 0 plus isolated lattice points on b = 0
        for (double a : {0.2, 0.9, 1.7})
            for (double b : {0.1, 0.9})
                expect("(U23^123,U14)", a, b, PointStatus::Entropic);
        for (double a : {0.0, 1.0, l3, 2.0})
            expect("(U23^123,U14)", a, 0.0, PointStatus::Entropic);
        for (double a : {0.5, 1.2, 1.9})
            expect("(U23^123,U14)", a, 0.0, PointStatus::NotEntropic);
        return true;
    });

    criterion(8, "property suites: random distributions, commutation, additivity, monotone region",
              [&](std::string& detail) {
        std::mt19937_64 rng(20260814);
        for (int n = 2; n <= 4; ++n) {
            const int max_alpha = n == 4 ? 3 : 4;
            for (int trial = 0; trial < 1000; ++trial) {
                const auto d = oracle::random_dist(rng, n, max_alpha);
                const auto h = entropy_vector(d);
                if (!is_polymatroid(h, 1e-9) ||
                    !oracle::direct_polymatroid_check(h, 1e-9)) {
                    detail = "non-polymatroidal entropy vector at n=" + std::to_string(n);
                    return false;
                }
            }
        }
        for (int trial = 0; trial < 200; ++trial) {
            const auto d = oracle::random_dist(rng, 4, 3);
            const auto h = entropy_vector(d);
            for (unsigned s = 1; s <= 15; ++s) {
                const auto hm = entropy_vector(marginalize(d, s));
                const auto hr = restrict_to(h, s);
                for (size_t t = 0; t < hm.raw().size(); ++t)
                    if (std::abs(hm.raw()[t] - hr.raw()[t]) > 1e-9) {
                        detail = "marginalize/restrict mismatch";
                        return false;
                    }
            }
        }
        for (int trial = 0; trial < 200; ++trial) {
            const auto d1 = oracle::random_dist(rng, 3, 3);
            const auto d2 = oracle::random_dist(rng, 3, 3);
            const auto h = entropy_vector(product_combine(d1, d2));
            const auto h1 = entropy_vector(d1);
            const auto h2 = entropy_vector(d2);
            for (size_t t = 0; t < h.raw().size(); ++t)
                if (std::abs(h.raw()[t] - h1.raw()[t] - h2.raw()[t]) > 1e-9) {
                    detail = "product_combine not additive";
                    return false;
                }
        }
        std::uniform_real_distribution<double> ua(0.0, 2.6), ub(0.0, 2.0);
        for (int trial = 0; trial < 1000; ++trial) {
            const double a = ua(rng), b = ub(rng);
            const auto low = membership(parse_face_point("(U23^123,U12^12)", a, b));
            if (low.status != PointStatus::Entropic)
                continue;
            for (double delta : {0.1, 0.5})
                if (membership(parse_face_point("(U23^123,U12^12)", a, b + delta))
                        .status != PointStatus::Entropic) {
                    detail = "region not upward-closed in b";
                    return false;
                }
        }
        return true;
    });

    if (failures == 0)
        std::printf("all 8 criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
