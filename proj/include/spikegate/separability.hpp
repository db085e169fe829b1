// Linear separability of feature-vector classes via the homogeneous
// convex-hull criterion.
//
// Classes A and B are linearly separable (some decoder D and threshold
// with <v,D> >= thr on A and < thr on B) iff the origin is NOT contained
// in the convex hull of the homogenized points (v_a, -1) and -(v_b, -1).
// Containment is decided by a phase-1 simplex on
//
//   P x = 0,  sum x = 1,  x >= 0,
//
// where P holds the points as columns. The feasible case yields the convex
// combination x as certificate; the infeasible case yields a Farkas
// functional that strictly separates all columns from the origin and
// converts directly into the decoder witness. Origin in the CLOSED hull
// counts as not separable; instances where the LP optimum sits within
// tolerance of that boundary carry boundary = true.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "spikegate/spike_train.hpp"

namespace spikegate {

using FeatureVector = std::vector<double>;

// Per-pattern channel sums: v_k = signed sum of amplitudes of train k.
FeatureVector features(const std::vector<SpikeTrain>& outputs);

struct SeparabilityInstance {
    std::vector<FeatureVector> class_a;
    std::vector<FeatureVector> class_b;

    void validate() const;  // same dimension, both classes non-empty
};

// Small dense column-major matrix, just enough for the LP plumbing.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;  // column-major

    double at(int r, int c) const { return data[static_cast<std::size_t>(c) * rows + r]; }
    double& at(int r, int c) { return data[static_cast<std::size_t>(c) * rows + r]; }
};

// Columns (v_a, -1) for class A and (-v_b, +1) for class B; rows = dim + 1.
Mat homogenize(const SeparabilityInstance& instance);

struct LpResult {
    bool contains_origin = false;
    double objective = 0.0;  // phase-1 optimum, 0 when feasible
    // Certificates, exactly one of which is populated:
    std::vector<double> combination;  // x >= 0, sum 1, Px = 0
    std::vector<double> separator;    // d with <d, P_col> > 0 for all columns
};

struct LpError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// True iff 0 lies in the convex hull of P's columns. Columns are max-norm
// rescaled before the solve; the returned certificate is re-verified
// against the original columns to 1e-7 (throws LpError when that fails or
// the simplex hits its iteration cap).
LpResult lp_contains_origin(const Mat& p);

struct Witness {
    std::vector<double> decoder;  // normalized to unit max-norm
    double threshold = 0.0;       // midpoint of the two class margins
};

struct SeparabilityVerdict {
    bool separable = false;
    bool boundary = false;  // LP optimum within tolerance of the decision edge
    std::optional<Witness> witness;          // present iff separable
    std::vector<double> hull_combination;    // present iff not separable
};

// Decides the instance and validates the emitted certificate before return.
SeparabilityVerdict is_separable(const SeparabilityInstance& instance);

// Independent brute-force check: exhaustive decoder search over the grid
// [-bound, bound]^dim with the given step (thresholds are implied by the
// projections). Intentionally shares no code with the LP path. Desk scale
// only: dim <= 5 and at most 8 points.
bool oracle_separable(const SeparabilityInstance& instance, double grid,
                      double bound);

}  // namespace spikegate
