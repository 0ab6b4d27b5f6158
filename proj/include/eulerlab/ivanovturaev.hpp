#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "eulerlab/errors.hpp"

namespace eulerlab {

using VecN = std::vector<double>;
using MatN = std::vector<VecN>; // rows

VecN mat_apply(const MatN& m, const VecN& v);
double mat_det(const MatN& m);

// Tuple of k vectors in R^{n+1}; k = n+2 for cocycle arguments.
struct VectorTuple {
    int dim; // n+1
    std::vector<VecN> vectors;
    double genericity_eps = 1e-9;
};

// {0, v_0, ..., v_{k-1}} in general position at the eps threshold
// (determinants normalized by column norms).
bool general_position_with_origin(const std::vector<VecN>& v, double eps = 1e-9);

// General position of {0, e_0 v_0, ...} for every sign pattern e.
bool is_generic(const std::vector<VecN>& v, double eps = 1e-9);

// Origin-containment sign of the affine simplex on v_0..v_{n+1}:
// +1 / -1 by orientation when 0 lies inside, 0 when outside or when the
// tuple is not in general position at the threshold. `degenerate`, when
// given, reports the latter case.
int t_value(const std::vector<VecN>& v, double eps = 1e-9,
            bool* degenerate = nullptr);
int t_value(const VectorTuple& v, bool* degenerate = nullptr);

// The two sign patterns I with t_I != 0, from the one-dimensional linear
// dependence sum alpha_i v_i = 0; I2 = -I1. Throws Degenerate when the
// nullspace is not one-dimensional at the threshold.
std::pair<std::vector<int>, std::vector<int>>
smillie_sign_patterns(const std::vector<VecN>& v, double eps = 1e-9);

struct EulEstimate {
    double mean = 0;
    double half_width = 0; // Hoeffding at confidence 1 - delta, range [-1,1]
    long samples = 0;
    long discarded = 0;
    std::uint64_t seed = 0;
};

// Monte-Carlo mean of t(g_0 v_0, ..., g_{n+1} v_{n+1}) over the unit ball,
// antisymmetrized over the first two slots so equal matrices give 0 exactly.
// Deterministic given seed; honors EULERLAB_THREADS via `threads` <= 0.
EulEstimate eul_estimate(const std::vector<MatN>& g, long samples, double delta,
                         std::uint64_t seed, double eps = 1e-9, int threads = 0);

// T(w) = sum_i (-1)^i t(w_0,...,w_i omitted,...,w_{n+2}); 0 for tuples all
// of whose faces are in general position. Throws Degenerate otherwise.
int it_coboundary_check(const std::vector<VecN>& w, double eps = 1e-9);

// t(g v) == t(v) for det(g) > 0; both tuples must be nondegenerate.
bool it_invariance_check(const MatN& g, const std::vector<VecN>& v,
                         double eps = 1e-9);

} // namespace eulerlab
