#include "entcone/faces.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace entcone {

namespace {

constexpr double kCoordCap = 40.0; // keeps 2^x inside long range

// x == log2 k for an integer k >= 1, within tol
std::optional<long> lattice_k(double x, double tol) {
    if (x < -tol)
        return std::nullopt;
    if (x > kCoordCap)
        throw std::invalid_argument("coordinate too large for lattice matching");
    long k = std::llround(std::exp2(std::max(x, 0.0)));
    if (k < 1)
        k = 1;
    if (std::abs(x - std::log2(static_cast<double>(k))) <= tol)
        return k;
    return std::nullopt;
}

// ceil(2^a), guarded so a within tol of log2 k resolves to k
long sawtooth_k(double a, double tol) {
    if (a > kCoordCap)
        throw std::invalid_argument("coordinate too large for lattice matching");
    if (const auto k = lattice_k(a, tol))
        return *k;
    const long k = static_cast<long>(std::ceil(std::exp2(a) - tol));
    return std::max(k, 1L);
}

const FaceTypeRecord* find_record(const FaceTypeKey& key) {
    for (const auto& r : face_type_records())
        if (r.key == key)
            return &r;
    return nullptr;
}

int small_alphabet(double target, double tol) {
    if (target > kCoordCap)
        throw std::invalid_argument("entropy target too large");
    if (const auto k = lattice_k(target, tol))
        return static_cast<int>(*k);
    return static_cast<int>(std::floor(std::exp2(target))) + 1;
}

// pmf with entropy target on the smallest workable alphabet; a target that
// matches log2 k within tol is snapped onto exactly log2 k
std::vector<double> entropy_pmf(double target, double tol) {
    const int m = small_alphabet(target, tol);
    return dist_with_entropy(std::min(target, std::log2(static_cast<double>(m))), m);
}

} // namespace

const char* to_string(PointStatus s) {
    switch (s) {
    case PointStatus::Entropic:
        return "Entropic";
    case PointStatus::NotEntropic:
        return "NotEntropic";
    case PointStatus::Uncharacterized:
        return "Uncharacterized";
    }
    return "?";
}

int exit_code(PointStatus s) {
    switch (s) {
    case PointStatus::Entropic:
        return 0;
    case PointStatus::NotEntropic:
        return 1;
    case PointStatus::Uncharacterized:
        return 2;
    }
    return 2;
}

FacePoint parse_face_point(const std::string& face_id, double a, double b) {
    if (face_id.size() < 5 || face_id.front() != '(' || face_id.back() != ')')
        throw std::invalid_argument("face id must look like \"(U23^123,U12^12)\"");
    const std::string inner = face_id.substr(1, face_id.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("face id must name two rays");
    FacePoint fp;
    fp.r1 = parse_ray_name(inner.substr(0, comma));
    fp.r2 = parse_ray_name(inner.substr(comma + 1));
    fp.a = a;
    fp.b = b;
    if (family_ground_size(fp.r1.family) != 4 || family_ground_size(fp.r2.family) != 4)
        throw std::invalid_argument("face ids are defined for the n = 4 catalog");
    if (family_order(fp.r1.family) < family_order(fp.r2.family)) {
        std::swap(fp.r1, fp.r2);
        std::swap(fp.a, fp.b);
    }
    const FaceTypeKey key{fp.r1.family, fp.r2.family,
                          std::popcount(fp.r1.support & fp.r2.support)};
    if (!find_record(key))
        throw std::invalid_argument("unknown face id: " + face_id +
                                    " (the pair does not span a 2-face)");
    return fp;
}

std::string face_id_of(const FacePoint& fp) {
    return "(" + to_string(fp.r1) + "," + to_string(fp.r2) + ")";
}

const FaceTypeRecord& face_type_of(const FacePoint& fp) {
    const FaceTypeKey key{fp.r1.family, fp.r2.family,
                          std::popcount(fp.r1.support & fp.r2.support)};
    const auto* rec = find_record(key);
    if (!rec)
        throw std::logic_error("face point without a catalog record");
    return *rec;
}

RealSetFunction face_point_vector(const FacePoint& fp) {
    return combine_real(fp.a, family_representative_vector(fp.r1), fp.b,
                        family_representative_vector(fp.r2));
}

std::vector<std::vector<int>> partitions_of(int k) {
    if (k < 1 || k > 50)
        throw std::invalid_argument("partition enumeration supports 1 <= k <= 50");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(max_part, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

double partition_entropy(const std::vector<int>& parts) {
    long k = 0;
    for (int p : parts) {
        if (p < 1)
            throw std::invalid_argument("partition parts must be positive");
        k += p;
    }
    double h = 0;
    for (int p : parts) {
        const double q = static_cast<double>(p) / static_cast<double>(k);
        h -= q * std::log2(q);
    }
    return h;
}

Verdict membership(const FacePoint& fp, double tol) {
    if (fp.a < -tol || fp.b < -tol)
        throw std::invalid_argument("face coordinates must be nonnegative");
    const double a = std::max(fp.a, 0.0);
    const double b = std::max(fp.b, 0.0);
    const auto& rec = face_type_of(fp);

    Verdict v;
    v.theorem = rec.theorem;
    switch (rec.theorem) {
    case 0:
        v.status = PointStatus::Uncharacterized;
        return v;
    case 1:
        v.status = PointStatus::Entropic;
        return v;
    case 2: {
        const long k = sawtooth_k(a, tol);
        v.k = static_cast<int>(k);
        v.status = (a + b >= std::log2(static_cast<double>(k)) - tol)
                       ? PointStatus::Entropic
                       : PointStatus::NotEntropic;
        return v;
    }
    case 3:
    case 4: {
        const auto k = lattice_k(a, tol);
        if (k) {
            v.k = static_cast<int>(*k);
            v.status = PointStatus::Entropic;
        } else {
            v.status = PointStatus::NotEntropic;
        }
        return v;
    }
    case 5: {
        const auto k1 = lattice_k(a, tol);
        const auto k2 = lattice_k(b, tol);
        if (k1 && k2) {
            v.k = static_cast<int>(*k1);
            v.k2 = static_cast<int>(*k2);
            v.status = PointStatus::Entropic;
        } else {
            v.status = PointStatus::NotEntropic;
        }
        return v;
    }
    case 6: {
        const auto k = lattice_k(a + b, tol);
        if (!k) {
            v.status = PointStatus::NotEntropic;
            return v;
        }
        if (*k > 40)
            throw std::runtime_error("partition enumeration cap exceeded (k > 40)");
        v.k = static_cast<int>(*k);
        for (const auto& parts : partitions_of(static_cast<int>(*k))) {
            if (std::abs(a - partition_entropy(parts)) <= tol) {
                v.partition = parts;
                v.status = PointStatus::Entropic;
                return v;
            }
        }
        v.status = PointStatus::NotEntropic;
        return v;
    }
    case 7: {
        if (b > tol) {
            v.status = PointStatus::Entropic;
            if (const auto k = lattice_k(a, tol))
                v.k = static_cast<int>(*k);
            return v;
        }
        const auto k = lattice_k(a, tol);
        if (k) {
            v.k = static_cast<int>(*k);
            v.status = PointStatus::Entropic;
        } else {
            v.status = PointStatus::NotEntropic;
        }
        return v;
    }
    default:
        throw std::logic_error("unknown theorem tag in catalog");
    }
}

namespace {

struct Thm23Recipe {
    int copy_src;      // cyclic/skew coordinate copied onto X4; 0 = none
    unsigned pad_mask; // support of the independent padding variable
};

Thm23Recipe thm2_recipe(const FaceTypeKey& key) {
    using F = RayFamily;
    if (key == FaceTypeKey{F::U23, F::U12, 2})
        return {0, 0b0011};
    if (key == FaceTypeKey{F::W2, F::U12, 0})
        return {3, 0b0011};
    if (key == FaceTypeKey{F::W2, F::U13, 2})
        return {1, 0b0011};
    throw std::logic_error("face type is not in the sawtooth class");
}

Thm23Recipe thm3_recipe(const FaceTypeKey& key) {
    using F = RayFamily;
    if (key == FaceTypeKey{F::U23, F::U11, 1})
        return {0, 0b0001};
    if (key == FaceTypeKey{F::U23, F::U11, 0})
        return {0, 0b1000};
    if (key == FaceTypeKey{F::U23, F::U12, 1})
        return {0, 0b1001};
    if (key == FaceTypeKey{F::W2, F::U11, 1})
        return {1, 0b0001};
    if (key == FaceTypeKey{F::W2, F::U11, 0})
        return {3, 0b0001};
    if (key == FaceTypeKey{F::W2, F::U12, 2})
        return {1, 0b1001};
    if (key == FaceTypeKey{F::W2, F::U12, 1})
        return {2, 0b1001};
    throw std::logic_error("face type is not in the log-integer class");
}

long pinned_lattice_k(double x, std::optional<int> pin, double tol, const char* what) {
    if (pin) {
        if (*pin < 1)
            throw std::invalid_argument(std::string(what) + " must be a positive integer");
        if (std::abs(x - std::log2(static_cast<double>(*pin))) > tol)
            throw std::invalid_argument(std::string(what) + " does not match the point");
        return *pin;
    }
    const auto k = lattice_k(x, tol);
    if (!k)
        throw std::invalid_argument("point is not entropic on this face");
    return *k;
}

JointDist blocks_construction(const std::vector<std::pair<int, double>>& blocks,
                              size_t max_support) {
    // X1, X2 uniform within a shared block, X3 their in-block sum, X4 the
    // block index; block j has (size, mass) as given.
    size_t support = 0;
    int alpha = 0;
    for (const auto& [size, mass] : blocks) {
        (void)mass;
        support += static_cast<size_t>(size) * static_cast<size_t>(size);
        alpha += size;
    }
    if (support > max_support)
        throw std::runtime_error("witness support cap exceeded");
    std::map<std::vector<int>, double> pmf;
    int offset = 0;
    int j = 0;
    for (const auto& [size, mass] : blocks) {
        if (mass > 0) {
            const double cell = mass / (static_cast<double>(size) * size);
            for (int u = 0; u < size; ++u)
                for (int v = 0; v < size; ++v)
                    pmf[{offset + u, offset + v, offset + (u + v) % size, j}] += cell;
        }
        offset += size;
        ++j;
    }
    return JointDist(4, {alpha, alpha, alpha, static_cast<int>(blocks.size())},
                     std::move(pmf), 1e-9);
}

JointDist canonical_witness(const FaceTypeRecord& rec, double a, double b,
                            const WitnessParams& params, double tol) {
    switch (rec.theorem) {
    case 1: {
        const RayName c1 = parse_ray_name(rec.rep_first);
        const RayName c2 = parse_ray_name(rec.rep_second);
        const auto da = entropy_pmf(a, tol);
        const auto db = entropy_pmf(b, tol);
        return product_combine(replicated_variable(da, c1.support, 4),
                               replicated_variable(db, c2.support, 4));
    }
    case 2: {
        long k = params.k ? *params.k : sawtooth_k(a, tol);
        if (k < 1)
            throw std::invalid_argument("k must be a positive integer");
        const double logk = std::log2(static_cast<double>(k));
        if (a > logk + tol)
            throw std::invalid_argument("k too small for the first coordinate");
        if (a + b < logk - tol)
            throw std::invalid_argument("point is not entropic on this face");
        const double pad = std::max(0.0, a + b - logk);
        const auto recipe = thm2_recipe(rec.key);
        const auto p = dist_with_entropy(std::min(a, logk), static_cast<int>(k));
        auto base = product_combine(
            skewed_cyclic(static_cast<int>(k), p, {3, 1, 2}, 4),
            replicated_variable(entropy_pmf(pad, tol), recipe.pad_mask, 4));
        return recipe.copy_src ? copy_variable(base, recipe.copy_src, 4) : base;
    }
    case 3:
    case 4: {
        const long k = pinned_lattice_k(a, params.k, tol, "k");
        const auto recipe = rec.theorem == 3 ? thm3_recipe(rec.key)
                                             : Thm23Recipe{0, 0b1011};
        auto base = cyclic_construction(static_cast<int>(k), {1, 2, 3}, 4);
        if (recipe.copy_src)
            base = copy_variable(base, recipe.copy_src, 4);
        return product_combine(
            base, replicated_variable(entropy_pmf(b, tol), recipe.pad_mask, 4));
    }
    case 5: {
        const long k1 = pinned_lattice_k(a, params.k, tol, "k");
        const long k2 = pinned_lattice_k(b, params.k2, tol, "k2");
        return product_combine(cyclic_construction(static_cast<int>(k1), {1, 2, 3}, 4),
                               cyclic_construction(static_cast<int>(k2), {1, 2, 4}, 4));
    }
    case 6: {
        std::vector<int> parts;
        if (params.partition) {
            parts = *params.partition;
            std::sort(parts.rbegin(), parts.rend());
            long sum = 0;
            for (int p : parts) {
                if (p < 1)
                    throw std::invalid_argument("partition parts must be positive");
                sum += p;
            }
            if (params.k && *params.k != sum)
                throw std::invalid_argument("k does not match the partition total");
            if (std::abs(a + b - std::log2(static_cast<double>(sum))) > tol ||
                std::abs(a - partition_entropy(parts)) > tol)
                throw std::invalid_argument("partition does not match the point");
        } else {
            FacePoint canonical;
            canonical.r1 = parse_ray_name(rec.rep_first);
            canonical.r2 = parse_ray_name(rec.rep_second);
            canonical.a = a;
            canonical.b = b;
            const Verdict v = membership(canonical, tol);
            if (v.status != PointStatus::Entropic)
                throw std::invalid_argument("point is not entropic on this face");
            parts = *v.partition;
        }
        long k = 0;
        for (int p : parts)
            k += p;
        // X1, X3 independent uniforms, X4 their sum, X2 the partition block of X1
        std::vector<int> block(static_cast<size_t>(k));
        int idx = 0;
        size_t filled = 0;
        for (int p : parts) {
            for (int t = 0; t < p; ++t)
                block[filled++] = idx;
            ++idx;
        }
        std::map<std::vector<int>, double> pmf;
        const double cell = 1.0 / (static_cast<double>(k) * static_cast<double>(k));
        for (int x1 = 0; x1 < k; ++x1)
            for (int x3 = 0; x3 < k; ++x3)
                pmf[{x1, block[static_cast<size_t>(x1)], x3,
                     static_cast<int>((x1 + x3) % k)}] = cell;
        return JointDist(4,
                         {static_cast<int>(k), static_cast<int>(parts.size()),
                          static_cast<int>(k), static_cast<int>(k)},
                         std::move(pmf), 1e-9);
    }
    case 7: {
        if (b <= tol) {
            const long k = pinned_lattice_k(a, params.k, tol, "k");
            return cyclic_construction(static_cast<int>(k), {1, 2, 3}, 4);
        }
        const auto klat = params.k ? std::optional<long>(*params.k) : lattice_k(a, tol);
        if (klat) {
            if (std::abs(a - std::log2(static_cast<double>(*klat))) > tol)
                throw std::invalid_argument("k does not match the point");
            const int k = static_cast<int>(*klat);
            const auto weights = entropy_pmf(b, tol);
            const int t = static_cast<int>(weights.size());
            std::vector<std::pair<int, double>> blocks;
            for (int j = 0; j < t; ++j)
                blocks.push_back({k, weights[static_cast<size_t>(j)]});
            return blocks_construction(blocks, params.max_support);
        }
        // non-lattice a: blocks of size c and one of size c+l, the last
        // block's mass pinned by a, the rest shaped to hit entropy b
        const long c = static_cast<long>(std::floor(std::exp2(a)));
        const double logc = std::log2(static_cast<double>(c));
        for (long l = 1; (c + l) * (c + l) <= static_cast<long>(params.max_support); ++l) {
            const double logcl = std::log2(static_cast<double>(c + l));
            const double pt = (a - logc) / (logcl - logc);
            if (pt >= 1.0 - 1e-12)
                continue;
            const double M = 1.0 - pt;
            const double target_w =
                (b + pt * std::log2(pt) + M * std::log2(M)) / M;
            if (target_w < -1e-9)
                continue;
            const double tw = std::max(target_w, 0.0);
            if (tw > 20)
                continue;
            const long t = 1 + std::max(1L, static_cast<long>(std::ceil(std::exp2(tw) - 1e-12)));
            const size_t support = static_cast<size_t>(t - 1) * c * c +
                                   static_cast<size_t>(c + l) * (c + l);
            if (support > params.max_support)
                continue;
            const auto w = dist_with_entropy(
                std::min(tw, std::log2(static_cast<double>(t - 1))),
                static_cast<int>(t - 1));
            std::vector<std::pair<int, double>> blocks;
            for (long j = 0; j < t - 1; ++j)
                blocks.push_back({static_cast<int>(c), w[static_cast<size_t>(j)] * M});
            blocks.push_back({static_cast<int>(c + l), pt});
            return blocks_construction(blocks, params.max_support);
        }
        throw std::runtime_error(
            "witness support cap exceeded: this point needs impractically large alphabets");
    }
    default:
        throw std::invalid_argument("face type has no characterization; cannot build a witness");
    }
}

} // namespace

JointDist witness(const FacePoint& fp, const WitnessParams& params, double tol) {
    if (fp.a < -tol || fp.b < -tol)
        throw std::invalid_argument("face coordinates must be nonnegative");
    double a = std::max(fp.a, 0.0);
    double b = std::max(fp.b, 0.0);
    const auto& rec = face_type_of(fp);
    if (rec.theorem == 0)
        throw std::invalid_argument("face type has no characterization; cannot build a witness");

    const RayName c1 = parse_ray_name(rec.rep_first);
    const RayName c2 = parse_ray_name(rec.rep_second);
    std::optional<Permutation> sigma;
    bool swapped = false;
    for (const auto& p : Permutation::all(4)) {
        if (p.apply(c1.support) == fp.r1.support && p.apply(c2.support) == fp.r2.support) {
            sigma = p;
            break;
        }
    }
    if (!sigma) {
        for (const auto& p : Permutation::all(4)) {
            if (p.apply(c1.support) == fp.r2.support && p.apply(c2.support) == fp.r1.support) {
                sigma = p;
                swapped = true;
                break;
            }
        }
    }
    if (!sigma)
        throw std::logic_error("no permutation maps the canonical representative onto this face");
    if (swapped)
        std::swap(a, b);

    JointDist w = canonical_witness(rec, a, b, params, tol);
    if (!(*sigma == Permutation::identity(4)))
        w = relabel_variables(w, *sigma);

    // construction sanity: the entropy vector must land on the target point
    const auto got = entropy_vector(w);
    const auto want = face_point_vector(fp);
    double err = 0;
    for (size_t t = 0; t < got.raw().size(); ++t)
        err = std::max(err, std::abs(got.raw()[t] - want.raw()[t]));
    if (err > std::max(tol, 1e-9))
        throw std::logic_error("internal witness construction error");
    return w;
}

std::pair<double, double> point_from_params(const std::string& face_id,
                                            const WitnessParams& params) {
    const FacePoint probe = parse_face_point(face_id, 0, 0);
    const auto& rec = face_type_of(probe);
    switch (rec.theorem) {
    case 5: {
        if (!params.k || !params.k2)
            throw std::invalid_argument("this face needs k and k2 (or explicit a and b)");
        if (*params.k < 1 || *params.k2 < 1)
            throw std::invalid_argument("k and k2 must be positive integers");
        return {std::log2(static_cast<double>(*params.k)),
                std::log2(static_cast<double>(*params.k2))};
    }
    case 6: {
        if (!params.partition)
            throw std::invalid_argument("this face needs a partition (or explicit a and b)");
        auto parts = *params.partition;
        long k = 0;
        for (int p : parts) {
            if (p < 1)
                throw std::invalid_argument("partition parts must be positive");
            k += p;
        }
        if (params.k && *params.k != k)
            throw std::invalid_argument("k does not match the partition total");
        const double a = partition_entropy(parts);
        return {a, std::log2(static_cast<double>(k)) - a};
    }
    default:
        throw std::invalid_argument("a and b are required for this face");
    }
}

std::vector<RegionRow> region_sample(const std::string& face_id, double a_max,
                                     double b_max, double step, double tol) {
    if (step <= 0 || a_max < 0 || b_max < 0)
        throw std::invalid_argument("grid needs positive step and nonnegative bounds");
    std::vector<RegionRow> out;
    for (int ia = 0;; ++ia) {
        const double a = ia * step;
        if (a > a_max + 1e-12)
            break;
        for (int ib = 0;; ++ib) {
            const double b = ib * step;
            if (b > b_max + 1e-12)
                break;
            const FacePoint fp = parse_face_point(face_id, a, b);
            out.push_back({a, b, membership(fp, tol).status});
        }
    }
    return out;
}

} // namespace entcone
