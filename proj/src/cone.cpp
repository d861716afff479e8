#include "entcone/cone.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace entcone {

namespace {

using Bitset = boost::dynamic_bitset<>;

std::vector<std::vector<Rational>> coefficient_rows(const std::vector<LinearInequality>& ineqs) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(ineqs.size());
    for (const auto& q : ineqs)
        rows.push_back(q.coeffs.raw());
    return rows;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Int>& v) {
    Rational acc(0);
    for (size_t t = 0; t < a.size(); ++t)
        if (a[t] != 0)
            acc += a[t] * Rational(v[t]);
    return acc;
}

// Gauss-Jordan inverse of a square rational matrix; nullopt-like throw if singular.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
    const size_t d = m.size();
    for (size_t i = 0; i < d; ++i) {
        m[i].resize(2 * d, Rational(0));
        m[i][d + i] = 1;
    }
    for (size_t col = 0; col < d; ++col) {
        size_t piv = col;
        while (piv < d && m[piv][col] == 0)
            ++piv;
        if (piv == d)
            throw std::logic_error("singular matrix in double description setup");
        std::swap(m[col], m[piv]);
        const Rational pv = m[col][col];
        for (auto& x : m[col])
            x /= pv;
        for (size_t i = 0; i < d; ++i) {
            if (i == col || m[i][col] == 0)
                continue;
            const Rational f = m[i][col];
            for (size_t t = col; t < 2 * d; ++t)
                m[i][t] -= f * m[col][t];
        }
    }
    std::vector<std::vector<Rational>> inv(d, std::vector<Rational>(d));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            inv[i][j] = m[i][d + j];
    return inv;
}

struct WorkRay {
    std::vector<Int> v;
    Bitset tight; // over all inequalities
};

Bitset tight_bits(const std::vector<std::vector<Rational>>& rows, const std::vector<Int>& v) {
    Bitset out(rows.size());
    for (size_t k = 0; k < rows.size(); ++k)
        if (dot(rows[k], v) == 0)
            out.set(k);
    return out;
}

} // namespace

int rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty())
        return 0;
    const size_t cols = rows[0].size();
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows.size(); ++col) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[r], rows[piv]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0)
                continue;
            const Rational f = rows[i][col] / rows[r][col];
            for (size_t t = col; t < cols; ++t)
                rows[i][t] -= f * rows[r][t];
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<Int> primitive_vector(const std::vector<Rational>& v) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    Int L = 1;
    for (const auto& x : v)
        L = lcm(L, denominator(x));
    std::vector<Int> out(v.size());
    Int g = 0;
    for (size_t t = 0; t < v.size(); ++t) {
        const Rational scaled = v[t] * Rational(L);
        out[t] = numerator(scaled);
        g = gcd(g, out[t]);
    }
    if (g == 0)
        throw std::invalid_argument("zero vector has no primitive representative");
    if (g > 1)
        for (auto& x : out)
            x /= g;
    return out;
}

std::vector<ExtremeRay> double_description(const std::vector<LinearInequality>& ineqs) {
    if (ineqs.empty())
        throw std::invalid_argument("double description needs at least one inequality");
    const GroundSet g = ineqs[0].coeffs.ground();
    for (const auto& q : ineqs)
        if (!(q.coeffs.ground() == g))
            throw std::invalid_argument("inequalities live on different ground sets");
    const size_t d = static_cast<size_t>(g.dim());
    const size_t m = ineqs.size();
    const auto rows = coefficient_rows(ineqs);

    if (rational_rank(rows) < static_cast<int>(d))
        throw std::runtime_error("cone is not pointed: coefficient matrix is rank deficient");

    // greedy independent subset, in canonical order
    std::vector<size_t> chosen;
    std::vector<std::vector<Rational>> basis;
    for (size_t k = 0; k < m && basis.size() < d; ++k) {
        basis.push_back(rows[k]);
        if (rational_rank(basis) == static_cast<int>(basis.size()))
            chosen.push_back(k);
        else
            basis.pop_back();
    }
    const auto inv = invert(basis);

    std::vector<WorkRay> rays;
    for (size_t j = 0; j < d; ++j) {
        std::vector<Rational> col(d);
        for (size_t i = 0; i < d; ++i)
            col[i] = inv[i][j];
        WorkRay r;
        r.v = primitive_vector(col);
        r.tight = tight_bits(rows, r.v);
        rays.push_back(std::move(r));
    }

    Bitset processed(m);
    for (size_t k : chosen)
        processed.set(k);

    for (size_t k = 0; k < m; ++k) {
        if (processed.test(k))
            continue;
        std::vector<Rational> vals(rays.size());
        std::vector<size_t> pos, neg;
        for (size_t i = 0; i < rays.size(); ++i) {
            vals[i] = dot(rows[k], rays[i].v);
            if (vals[i] > 0)
                pos.push_back(i);
            else if (vals[i] < 0)
                neg.push_back(i);
        }
        std::vector<WorkRay> next;
        std::set<std::vector<Int>> seen;
        for (size_t p : pos) {
            for (size_t q : neg) {
                // adjacency: the facets tight on both must cut a (d-2)-space
                const Bitset T = rays[p].tight & rays[q].tight & processed;
                if (T.count() < d - 2)
                    continue;
                std::vector<std::vector<Rational>> sub;
                for (size_t t = T.find_first(); t != Bitset::npos; t = T.find_next(t))
                    sub.push_back(rows[t]);
                if (rational_rank(sub) != static_cast<int>(d) - 2)
                    continue;
                std::vector<Rational> w(d);
                for (size_t t = 0; t < d; ++t)
                    w[t] = vals[p] * Rational(rays[q].v[t]) - vals[q] * Rational(rays[p].v[t]);
                WorkRay nr;
                nr.v = primitive_vector(w);
                if (!seen.insert(nr.v).second)
                    continue;
                nr.tight = tight_bits(rows, nr.v);
                next.push_back(std::move(nr));
            }
        }
        for (size_t i = 0; i < rays.size(); ++i) {
            if (vals[i] >= 0 && seen.insert(rays[i].v).second)
                next.push_back(std::move(rays[i]));
        }
        rays = std::move(next);
        processed.set(k);
    }

    // final validation: pointedness and extremality of every survivor
    std::set<std::vector<Int>> reps;
    for (const auto& r : rays)
        reps.insert(r.v);
    for (const auto& r : rays) {
        std::vector<Int> negated(r.v.size());
        for (size_t t = 0; t < r.v.size(); ++t)
            negated[t] = -r.v[t];
        if (reps.count(negated))
            throw std::runtime_error("cone is not pointed: opposite generators found");
        std::vector<std::vector<Rational>> sub;
        for (size_t t = r.tight.find_first(); t != Bitset::npos; t = r.tight.find_next(t))
            sub.push_back(rows[t]);
        if (rational_rank(sub) != static_cast<int>(d) - 1)
            throw std::logic_error("double description produced a non-extreme generator");
    }

    std::sort(rays.begin(), rays.end(),
              [](const WorkRay& a, const WorkRay& b) { return a.v < b.v; });

    std::vector<ExtremeRay> out;
    out.reserve(rays.size());
    for (const auto& r : rays) {
        RationalSetFunction rep(g);
        for (size_t t = 0; t < d; ++t)
            rep.raw()[t] = Rational(r.v[t]);
        std::vector<int> tight;
        for (size_t t = r.tight.find_first(); t != Bitset::npos; t = r.tight.find_next(t))
            tight.push_back(static_cast<int>(t));
        out.emplace_back(std::move(rep), std::move(tight));
    }
    return out;
}

std::vector<int> tight_facets(const RationalSetFunction& rep,
                              const std::vector<LinearInequality>& ineqs) {
    std::vector<int> out;
    for (size_t k = 0; k < ineqs.size(); ++k)
        if (evaluate(ineqs[k], rep) == 0)
            out.push_back(static_cast<int>(k));
    return out;
}

bool verify_extreme(const ExtremeRay& ray, const std::vector<LinearInequality>& ineqs) {
    const GroundSet g = ray.rep.ground();
    bool nonzero = false;
    for (const auto& x : ray.rep.raw())
        if (x != 0)
            nonzero = true;
    if (!nonzero)
        return false;
    std::vector<std::vector<Rational>> sub;
    for (const auto& q : ineqs) {
        const Rational v = evaluate(q, ray.rep);
        if (v < 0)
            return false;
        if (v == 0)
            sub.push_back(q.coeffs.raw());
    }
    return rational_rank(sub) == g.dim() - 1;
}

std::vector<FacePair> enumerate_2faces(const std::vector<ExtremeRay>& rays,
                                       const std::vector<LinearInequality>& ineqs) {
    const size_t m = ineqs.size();
    const size_t N = rays.size();
    std::vector<Bitset> tight(N, Bitset(m));
    for (size_t i = 0; i < N; ++i)
        for (int k : rays[i].tight) {
            if (k < 0 || static_cast<size_t>(k) >= m)
                throw std::invalid_argument("ray tight set references an unknown inequality");
            tight[i].set(static_cast<size_t>(k));
        }
    std::vector<FacePair> out;
    out.reserve(N * (N - 1) / 2);
    for (size_t i = 0; i < N; ++i) {
        for (size_t j = i + 1; j < N; ++j) {
            const Bitset T = tight[i] & tight[j];
            bool is2 = true;
            for (size_t k = 0; k < N && is2; ++k) {
                if (k == i || k == j)
                    continue;
                if (T.is_subset_of(tight[k]))
                    is2 = false;
            }
            out.push_back({static_cast<int>(i), static_cast<int>(j), is2});
        }
    }
    return out;
}

} // namespace entcone
