#pragma once

#include "entcone/set_function.hpp"

#include <array>
#include <map>
#include <vector>

namespace entcone {

// Discrete joint distribution of n variables on finite alphabets
// {0,...,size-1}.  Only strictly positive masses are stored; the total is
// validated against 1 and then renormalized exactly.
class JointDist {
public:
    JointDist(int n, std::vector<int> alphabet_sizes,
              std::map<std::vector<int>, double> pmf, double sum_tol = 1e-12);

    int n() const { return n_; }
    const std::vector<int>& alphabet_sizes() const { return alphabet_sizes_; }
    const std::map<std::vector<int>, double>& pmf() const { return pmf_; }
    size_t support_size() const { return pmf_.size(); }

private:
    int n_;
    std::vector<int> alphabet_sizes_;
    std::map<std::vector<int>, double> pmf_;
};

// Entropy of every nonempty marginal, in bits.
RealSetFunction entropy_vector(const JointDist& d);

// Marginal on the variables in subset, relabeled onto {1,...,|subset|}.
// Satisfies entropy_vector(marginalize(d, s)) == restrict_to(entropy_vector(d), s).
JointDist marginalize(const JointDist& d, unsigned subset);

// Independent pairing: each variable becomes the pair of its two inputs,
// so the entropy vectors add.
JointDist product_combine(const JointDist& d1, const JointDist& d2);

// Single-variable pmf on m symbols with entropy target bits, found by
// bisecting mixtures of a point mass and the uniform distribution.
// Requires 0 <= target <= log2(m).
std::vector<double> dist_with_entropy(double target, int m);

// One variable distributed by pmf, copied onto every coordinate of
// support; the other coordinates are constant.
JointDist replicated_variable(const std::vector<double>& pmf, unsigned support, int n);

// Two independent uniforms on Z_k and their mod-k sum, placed on the
// three role coordinates (1-based); other coordinates constant.
JointDist cyclic_construction(int k, const std::array<int, 3>& roles, int n);

// X_low ~ p on Z_k, U uniform on Z_k independent, X_high2 = U and
// X_high1 = X_low + U mod k.  Entropies: low -> H(p), highs -> log2 k,
// every pair and the triple -> log2 k + H(p).
JointDist skewed_cyclic(int k, const std::vector<double>& p,
                        const std::array<int, 3>& roles, int n);

// X_dst := X_src (alphabet copied as well)
JointDist copy_variable(const JointDist& d, int src, int dst);

// X'_{p(i)} = X_i
JointDist relabel_variables(const JointDist& d, const Permutation& p);

} // namespace entcone
