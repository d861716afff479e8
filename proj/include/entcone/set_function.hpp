#pragma once

#include "entcone/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace entcone {

// Ground set {1,...,n}.  Subsets travel as bitmasks with element i on bit
// i-1, so 0b0101 is {1,3}.  The empty set is never stored: every set
// function here is normalized to vanish on it.
class GroundSet {
public:
    explicit GroundSet(int n) : n_(n) {
        if (n < 1 || n > 5)
            throw std::invalid_argument("ground set size must be in [1,5]");
    }
    int n() const { return n_; }
    int dim() const { return (1 << n_) - 1; }
    unsigned full_mask() const { return (1u << n_) - 1; }
    bool operator==(const GroundSet&) const = default;

private:
    int n_;
};

// "{1,3}" is written as "13"; elements are single digits since n <= 5.
std::string subset_to_string(unsigned mask);
unsigned subset_from_string(const std::string& s, int n);

// Permutation of {1,...,n}, stored as the image of each element.
class Permutation {
public:
    explicit Permutation(std::vector<int> image);
    static Permutation identity(int n);
    static std::vector<Permutation> all(int n); // lexicographic by image vector

    int n() const { return static_cast<int>(image_.size()); }
    int image(int i) const { return image_.at(i - 1); }
    unsigned apply(unsigned mask) const;
    Permutation inverse() const;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

// i -> p(q(i)); acting by q then by p on a set function equals acting once
// by compose(p, q).
Permutation compose(const Permutation& p, const Permutation& q);

template <typename Scalar>
class SetFunction {
public:
    explicit SetFunction(GroundSet g)
        : ground_(g), values_(static_cast<size_t>(g.dim()), Scalar(0)) {}

    GroundSet ground() const { return ground_; }

    Scalar value(unsigned mask) const {
        if (mask == 0)
            return Scalar(0);
        check(mask);
        return values_[mask - 1];
    }

    void set_value(unsigned mask, const Scalar& v) {
        if (mask == 0) {
            if (!(v == Scalar(0)))
                throw std::invalid_argument("value on the empty set is pinned to 0");
            return;
        }
        check(mask);
        values_[mask - 1] = v;
    }

    // values indexed by mask-1, for bulk access
    const std::vector<Scalar>& raw() const { return values_; }
    std::vector<Scalar>& raw() { return values_; }

    bool operator==(const SetFunction&) const = default;

private:
    void check(unsigned mask) const {
        if (mask > static_cast<unsigned>(ground_.dim()))
            throw std::out_of_range("subset mask outside ground set");
    }

    GroundSet ground_;
    std::vector<Scalar> values_;
};

using RationalSetFunction = SetFunction<Rational>;
using RealSetFunction = SetFunction<double>;

RealSetFunction to_real(const RationalSetFunction& f);

// f restricted to a subset, with the surviving elements relabeled onto
// {1,...,|subset|} in increasing order.
template <typename Scalar>
SetFunction<Scalar> restrict_to(const SetFunction<Scalar>& f, unsigned subset) {
    const GroundSet g = f.ground();
    if (subset == 0 || subset > g.full_mask())
        throw std::invalid_argument("restriction subset must be nonempty and inside the ground set");
    std::vector<int> kept; // original elements, increasing
    for (int i = 1; i <= g.n(); ++i)
        if (subset & (1u << (i - 1)))
            kept.push_back(i);
    GroundSet h(static_cast<int>(kept.size()));
    SetFunction<Scalar> out(h);
    for (unsigned m = 1; m <= static_cast<unsigned>(h.dim()); ++m) {
        unsigned orig = 0;
        for (size_t t = 0; t < kept.size(); ++t)
            if (m & (1u << t))
                orig |= 1u << (kept[t] - 1);
        out.set_value(m, f.value(orig));
    }
    return out;
}

// g with g(A) = f(p(A)).  Chaining: acting by p then q equals acting by
// compose(p, q).
template <typename Scalar>
SetFunction<Scalar> apply_permutation(const SetFunction<Scalar>& f, const Permutation& p) {
    const GroundSet g = f.ground();
    if (p.n() != g.n())
        throw std::invalid_argument("permutation size does not match ground set");
    SetFunction<Scalar> out(g);
    for (unsigned m = 1; m <= static_cast<unsigned>(g.dim()); ++m)
        out.set_value(m, f.value(p.apply(m)));
    return out;
}

template <typename Scalar>
SetFunction<Scalar> combine(const Scalar& c1, const SetFunction<Scalar>& f1,
                            const Scalar& c2, const SetFunction<Scalar>& f2) {
    if (!(f1.ground() == f2.ground()))
        throw std::invalid_argument("combine requires a common ground set");
    SetFunction<Scalar> out(f1.ground());
    for (size_t t = 0; t < out.raw().size(); ++t)
        out.raw()[t] = c1 * f1.raw()[t] + c2 * f2.raw()[t];
    return out;
}

// real combination of two exact functions, used for face coordinates
RealSetFunction combine_real(double c1, const RationalSetFunction& f1,
                             double c2, const RationalSetFunction& f2);

struct LinearInequality {
    RationalSetFunction coeffs; // normal vector; the inequality is coeffs.h >= 0
    int index = 0;              // position in the canonical ordering

    explicit LinearInequality(GroundSet g) : coeffs(g) {}
    LinearInequality(RationalSetFunction c, int idx) : coeffs(std::move(c)), index(idx) {}
};

// The elemental polymatroid inequalities in canonical order: first
// h(N) - h(N\{i}) >= 0 with i ascending, then the submodularity
// inequalities h(K+i) + h(K+j) - h(K) - h(K+ij) >= 0 ordered by
// (i, j, K) with K running over submasks of N\{i,j} in ascending
// bitmask order.  Counts: n + C(n,2) 2^(n-2), i.e. 3, 9, 28 for n = 2, 3, 4.
std::vector<LinearInequality> elemental_inequalities(GroundSet g);

Rational evaluate(const LinearInequality& q, const RationalSetFunction& f);
double evaluate(const LinearInequality& q, const RealSetFunction& f);

// Nonnegativity on all elemental inequalities; equivalent to h being
// normalized, nondecreasing and submodular.
bool is_polymatroid(const RationalSetFunction& f);
bool is_polymatroid(const RealSetFunction& f, double tol = 1e-9);

} // namespace entcone
