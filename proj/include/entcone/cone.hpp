#pragma once

#include "entcone/set_function.hpp"

#include <vector>

namespace entcone {

struct ExtremeRay {
    RationalSetFunction rep; // minimal integer representative (coprime entries)
    std::vector<int> tight;  // inequality indices tight on rep, ascending

    explicit ExtremeRay(GroundSet g) : rep(g) {}
    ExtremeRay(RationalSetFunction r, std::vector<int> t)
        : rep(std::move(r)), tight(std::move(t)) {}
};

struct FacePair {
    int i = 0;
    int j = 0; // ray indices with i < j
    bool is_2face = false;
};

// exact rank of a list of rational row vectors
int rational_rank(std::vector<std::vector<Rational>> rows);

// scale a rational vector to its minimal integer representative
std::vector<Int> primitive_vector(const std::vector<Rational>& v);

// Extreme rays of {h : q.h >= 0 for all q} by incremental double
// description over exact rationals.  Requires a pointed cone (the
// coefficient matrix must have full column rank); throws otherwise.
// Output is sorted lexicographically by representative.
std::vector<ExtremeRay> double_description(const std::vector<LinearInequality>& ineqs);

// indices of inequalities satisfied with equality, ascending
std::vector<int> tight_facets(const RationalSetFunction& rep,
                              const std::vector<LinearInequality>& ineqs);

// True iff rep is feasible, nonzero, and its tight-set coefficient matrix
// has rank exactly dim-1.  The stored tight set is ignored; everything is
// recomputed from rep.
bool verify_extreme(const ExtremeRay& ray, const std::vector<LinearInequality>& ineqs);

// For every pair i < j, decide whether the two rays span a 2-dimensional
// face: they do iff no third ray lies on every facet containing both.
// Uses the tight sets stored on the rays.
std::vector<FacePair> enumerate_2faces(const std::vector<ExtremeRay>& rays,
                                       const std::vector<LinearInequality>& ineqs);

} // namespace entcone
