#include "entcone/dist.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entcone {

namespace {

double xlog2x(double p) { return p > 0 ? p * std::log2(p) : 0.0; }

double entropy_of(const std::vector<double>& pmf) {
    double h = 0;
    for (double p : pmf)
        h -= xlog2x(p);
    return h;
}

} // namespace

JointDist::JointDist(int n, std::vector<int> alphabet_sizes,
                     std::map<std::vector<int>, double> pmf, double sum_tol)
    : n_(n), alphabet_sizes_(std::move(alphabet_sizes)) {
    if (n < 1 || n > 5)
        throw std::invalid_argument("number of variables must be in [1,5]");
    if (alphabet_sizes_.size() != static_cast<size_t>(n))
        throw std::invalid_argument("alphabet list size does not match n");
    for (int a : alphabet_sizes_)
        if (a < 1)
            throw std::invalid_argument("alphabet sizes must be positive");
    double sum = 0;
    for (const auto& [x, p] : pmf) {
        if (x.size() != static_cast<size_t>(n))
            throw std::invalid_argument("outcome tuple of wrong length");
        for (int i = 0; i < n; ++i)
            if (x[static_cast<size_t>(i)] < 0 ||
                x[static_cast<size_t>(i)] >= alphabet_sizes_[static_cast<size_t>(i)])
                throw std::invalid_argument("outcome symbol outside its alphabet");
        if (p < 0)
            throw std::invalid_argument("negative probability mass");
        if (p > 0) {
            pmf_[x] = p;
            sum += p;
        }
    }
    if (std::abs(sum - 1.0) > sum_tol)
        throw std::invalid_argument("probability masses do not sum to 1");
    for (auto& [x, p] : pmf_)
        p /= sum;
}

RealSetFunction entropy_vector(const JointDist& d) {
    RealSetFunction out((GroundSet(d.n())));
    for (unsigned mask = 1; mask <= out.ground().full_mask(); ++mask) {
        std::map<std::vector<int>, double> marg;
        for (const auto& [x, p] : d.pmf()) {
            std::vector<int> key;
            for (int i = 0; i < d.n(); ++i)
                if (mask & (1u << i))
                    key.push_back(x[static_cast<size_t>(i)]);
            marg[key] += p;
        }
        double h = 0;
        for (const auto& [key, p] : marg)
            h -= xlog2x(p);
        out.set_value(mask, h);
    }
    return out;
}

JointDist marginalize(const JointDist& d, unsigned subset) {
    const unsigned full = (1u << d.n()) - 1;
    if (subset == 0 || subset > full)
        throw std::invalid_argument("marginal subset must be nonempty and inside the ground set");
    std::vector<int> kept;
    for (int i = 0; i < d.n(); ++i)
        if (subset & (1u << i))
            kept.push_back(i);
    std::vector<int> sizes;
    for (int i : kept)
        sizes.push_back(d.alphabet_sizes()[static_cast<size_t>(i)]);
    std::map<std::vector<int>, double> pmf;
    for (const auto& [x, p] : d.pmf()) {
        std::vector<int> key;
        for (int i : kept)
            key.push_back(x[static_cast<size_t>(i)]);
        pmf[key] += p;
    }
    return JointDist(static_cast<int>(kept.size()), std::move(sizes), std::move(pmf), 1e-9);
}

JointDist product_combine(const JointDist& d1, const JointDist& d2) {
    if (d1.n() != d2.n())
        throw std::invalid_argument("product requires the same number of variables");
    const int n = d1.n();
    std::vector<int> sizes(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        sizes[static_cast<size_t>(i)] = d1.alphabet_sizes()[static_cast<size_t>(i)] *
                                        d2.alphabet_sizes()[static_cast<size_t>(i)];
    std::map<std::vector<int>, double> pmf;
    for (const auto& [x1, p1] : d1.pmf()) {
        for (const auto& [x2, p2] : d2.pmf()) {
            std::vector<int> x(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                x[static_cast<size_t>(i)] =
                    x1[static_cast<size_t>(i)] * d2.alphabet_sizes()[static_cast<size_t>(i)] +
                    x2[static_cast<size_t>(i)];
            pmf[x] += p1 * p2;
        }
    }
    return JointDist(n, std::move(sizes), std::move(pmf), 1e-9);
}

std::vector<double> dist_with_entropy(double target, int m) {
    if (m < 1)
        throw std::invalid_argument("alphabet size must be positive");
    const double hmax = std::log2(static_cast<double>(m));
    if (target < -1e-12 || target > hmax + 1e-12)
        throw std::invalid_argument("entropy target outside [0, log2 m]");
    target = std::clamp(target, 0.0, hmax);
    if (m == 1)
        return {1.0};
    auto mixture = [&](double t) {
        std::vector<double> pmf(static_cast<size_t>(m), t / m);
        pmf[0] = 1.0 - t + t / m;
        return pmf;
    };
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (entropy_of(mixture(mid)) < target)
            lo = mid;
        else
            hi = mid;
    }
    return mixture(0.5 * (lo + hi));
}

JointDist replicated_variable(const std::vector<double>& pmf, unsigned support, int n) {
    const unsigned full = (1u << n) - 1;
    if (support == 0 || support > full)
        throw std::invalid_argument("support must be nonempty and inside the ground set");
    const int m = static_cast<int>(pmf.size());
    std::vector<int> sizes(static_cast<size_t>(n), 1);
    for (int i = 0; i < n; ++i)
        if (support & (1u << i))
            sizes[static_cast<size_t>(i)] = m;
    std::map<std::vector<int>, double> out;
    for (int s = 0; s < m; ++s) {
        if (pmf[static_cast<size_t>(s)] <= 0)
            continue;
        std::vector<int> x(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            if (support & (1u << i))
                x[static_cast<size_t>(i)] = s;
        out[x] = pmf[static_cast<size_t>(s)];
    }
    return JointDist(n, std::move(sizes), std::move(out), 1e-9);
}

namespace {

void check_roles(const std::array<int, 3>& roles, int n) {
    for (int r : roles)
        if (r < 1 || r > n)
            throw std::invalid_argument("role index outside the ground set");
    if (roles[0] == roles[1] || roles[0] == roles[2] || roles[1] == roles[2])
        throw std::invalid_argument("role indices must be distinct");
}

} // namespace

JointDist cyclic_construction(int k, const std::array<int, 3>& roles, int n) {
    if (k < 1)
        throw std::invalid_argument("cycle size must be positive");
    check_roles(roles, n);
    std::vector<int> sizes(static_cast<size_t>(n), 1);
    for (int r : roles)
        sizes[static_cast<size_t>(r - 1)] = k;
    std::map<std::vector<int>, double> pmf;
    const double mass = 1.0 / (static_cast<double>(k) * k);
    for (int u = 0; u < k; ++u) {
        for (int v = 0; v < k; ++v) {
            std::vector<int> x(static_cast<size_t>(n), 0);
            x[static_cast<size_t>(roles[0] - 1)] = u;
            x[static_cast<size_t>(roles[1] - 1)] = v;
            x[static_cast<size_t>(roles[2] - 1)] = (u + v) % k;
            pmf[x] = mass;
        }
    }
    return JointDist(n, std::move(sizes), std::move(pmf), 1e-9);
}

JointDist skewed_cyclic(int k, const std::vector<double>& p,
                        const std::array<int, 3>& roles, int n) {
    if (k < 1)
        throw std::invalid_argument("cycle size must be positive");
    if (p.size() != static_cast<size_t>(k))
        throw std::invalid_argument("weight vector must have k entries");
    check_roles(roles, n);
    const int low = roles[0], high1 = roles[1], high2 = roles[2];
    std::vector<int> sizes(static_cast<size_t>(n), 1);
    sizes[static_cast<size_t>(low - 1)] = k;
    sizes[static_cast<size_t>(high1 - 1)] = k;
    sizes[static_cast<size_t>(high2 - 1)] = k;
    std::map<std::vector<int>, double> pmf;
    for (int w = 0; w < k; ++w) {
        if (p[static_cast<size_t>(w)] <= 0)
            continue;
        for (int u = 0; u < k; ++u) {
            std::vector<int> x(static_cast<size_t>(n), 0);
            x[static_cast<size_t>(low - 1)] = w;
            x[static_cast<size_t>(high2 - 1)] = u;
            x[static_cast<size_t>(high1 - 1)] = (w + u) % k;
            pmf[x] = p[static_cast<size_t>(w)] / k;
        }
    }
    return JointDist(n, std::move(sizes), std::move(pmf), 1e-9);
}

JointDist copy_variable(const JointDist& d, int src, int dst) {
    if (src < 1 || src > d.n() || dst < 1 || dst > d.n() || src == dst)
        throw std::invalid_argument("bad variable indices for copy");
    std::vector<int> sizes = d.alphabet_sizes();
    sizes[static_cast<size_t>(dst - 1)] = sizes[static_cast<size_t>(src - 1)];
    std::map<std::vector<int>, double> pmf;
    for (const auto& [x, p] : d.pmf()) {
        std::vector<int> y = x;
        y[static_cast<size_t>(dst - 1)] = x[static_cast<size_t>(src - 1)];
        pmf[y] += p;
    }
    return JointDist(d.n(), std::move(sizes), std::move(pmf), 1e-9);
}

JointDist relabel_variables(const JointDist& d, const Permutation& p) {
    if (p.n() != d.n())
        throw std::invalid_argument("permutation size does not match variable count");
    std::vector<int> sizes(static_cast<size_t>(d.n()));
    for (int i = 1; i <= d.n(); ++i)
        sizes[static_cast<size_t>(p.image(i) - 1)] = d.alphabet_sizes()[static_cast<size_t>(i - 1)];
    std::map<std::vector<int>, double> pmf;
    for (const auto& [x, mass] : d.pmf()) {
        std::vector<int> y(static_cast<size_t>(d.n()));
        for (int i = 1; i <= d.n(); ++i)
            y[static_cast<size_t>(p.image(i) - 1)] = x[static_cast<size_t>(i - 1)];
        pmf[y] = mass;
    }
    return JointDist(d.n(), std::move(sizes), std::move(pmf), 1e-9);
}

} // namespace entcone
