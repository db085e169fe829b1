#include "spikegate/separability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace spikegate {

namespace {

constexpr double kFeasTol = 1e-9;      // phase-1 objective feasibility cut
constexpr double kBoundaryLow = 1e-12; // below this the call is numerically clean
constexpr double kPivotTol = 1e-9;
constexpr double kVerifyTol = 1e-7;
constexpr int kMaxIterations = 100000;

}  // namespace

FeatureVector features(const std::vector<SpikeTrain>& outputs) {
    FeatureVector v(outputs.size());
    for (std::size_t k = 0; k < outputs.size(); ++k) {
        v[k] = signed_sum(outputs[k]);
    }
    return v;
}

void SeparabilityInstance::validate() const {
    if (class_a.empty() || class_b.empty()) {
        throw std::invalid_argument("both classes must be non-empty");
    }
    const std::size_t dim = class_a.front().size();
    auto check = [dim](const std::vector<FeatureVector>& cls) {
        for (const auto& v : cls) {
            if (v.size() != dim) {
                throw std::invalid_argument("feature dimension mismatch");
            }
            for (double x : v) {
                if (!std::isfinite(x)) {
                    throw std::invalid_argument("non-finite feature value");
                }
            }
        }
    };
    check(class_a);
    check(class_b);
}

Mat homogenize(const SeparabilityInstance& instance) {
    instance.validate();
    const int dim = static_cast<int>(instance.class_a.front().size());
    Mat p;
    p.rows = dim + 1;
    p.cols = static_cast<int>(instance.class_a.size() + instance.class_b.size());
    p.data.resize(static_cast<std::size_t>(p.rows) * p.cols);
    int c = 0;
    for (const auto& v : instance.class_a) {
        for (int r = 0; r < dim; ++r) {
            p.at(r, c) = v[r];
        }
        p.at(dim, c) = -1.0;
        ++c;
    }
    for (const auto& v : instance.class_b) {
        for (int r = 0; r < dim; ++r) {
            p.at(r, c) = -v[r];
        }
        p.at(dim, c) = 1.0;
        ++c;
    }
    return p;
}

namespace {

// Phase-1 simplex on  A x = b, x >= 0  with A = [P; 1...1], b = (0,..,0,1).
// Bland's rule; artificial columns double as a record of the basis inverse,
// so the infeasible case reads the Farkas functional off the cost row.
struct Phase1 {
    int m;  // constraint rows = p.rows + 1
    int n;  // structural columns
    std::vector<std::vector<double>> t;  // m rows, n + m columns + rhs
    std::vector<double> cost;            // reduced costs + (-objective)
    std::vector<int> basis;

    explicit Phase1(const Mat& p)
        : m(p.rows + 1), n(p.cols), t(m, std::vector<double>(n + m + 1, 0.0)),
          cost(n + m + 1, 0.0), basis(m) {
        for (int i = 0; i < m - 1; ++i) {
            for (int j = 0; j < n; ++j) {
                t[i][j] = p.at(i, j);
            }
        }
        for (int j = 0; j < n; ++j) {
            t[m - 1][j] = 1.0;
        }
        for (int i = 0; i < m; ++i) {
            t[i][n + i] = 1.0;
            basis[i] = n + i;
        }
        t[m - 1][n + m] = 1.0;  // rhs
        // Reduced costs r_j = c_j - sum_i A_ij (artificial basis, costs 1).
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < m; ++i) {
                cost[j] -= t[i][j];
            }
        }
        cost[n + m] = -1.0;  // -objective
    }

    void pivot(int row, int col) {
        const double inv = 1.0 / t[row][col];
        for (auto& v : t[row]) {
            v *= inv;
        }
        t[row][col] = 1.0;  // squash roundoff on the pivot itself
        for (int i = 0; i < m; ++i) {
            if (i == row || t[i][col] == 0.0) {
                continue;
            }
            const double f = t[i][col];
            for (int j = 0; j <= n + m; ++j) {
                t[i][j] -= f * t[row][j];
            }
            t[i][col] = 0.0;
        }
        if (cost[col] != 0.0) {
            const double f = cost[col];
            for (int j = 0; j <= n + m; ++j) {
                cost[j] -= f * t[row][j];
            }
            cost[col] = 0.0;
        }
        basis[row] = col;
    }

    // Returns the phase-1 optimum.
    double solve() {
        for (int iter = 0; iter < kMaxIterations; ++iter) {
            int entering = -1;  // Bland: first structural column that improves
            for (int j = 0; j < n; ++j) {
                if (cost[j] < -kPivotTol) {
                    entering = j;
                    break;
                }
            }
            if (entering < 0) {
                return -cost[n + m];
            }
            int leaving = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m; ++i) {
                if (t[i][entering] > kPivotTol) {
                    const double ratio = t[i][n + m] / t[i][entering];
                    if (ratio < best - 1e-15 ||
                        (ratio < best + 1e-15 &&
                         (leaving < 0 || basis[i] < basis[leaving]))) {
                        best = ratio;
                        leaving = i;
                    }
                }
            }
            if (leaving < 0) {
                throw LpError("phase-1 column unbounded");
            }
            pivot(leaving, entering);
        }
        throw LpError("simplex iteration cap reached");
    }

    std::vector<double> extract_x() const {
        std::vector<double> x(n, 0.0);
        for (int i = 0; i < m; ++i) {
            if (basis[i] < n) {
                x[basis[i]] = std::max(0.0, t[i][n + m]);
            }
        }
        return x;
    }

    // Dual values lambda_i = 1 - r_{artificial i}; the separating
    // functional for the P-rows is -lambda[0..m-2].
    std::vector<double> extract_separator() const {
        std::vector<double> d(m - 1);
        for (int i = 0; i < m - 1; ++i) {
            d[i] = cost[n + i] - 1.0;
        }
        return d;
    }
};

double column_max_norm(const Mat& p, int c) {
    double norm = 0.0;
    for (int r = 0; r < p.rows; ++r) {
        norm = std::max(norm, std::abs(p.at(r, c)));
    }
    return norm;
}

}  // namespace

LpResult lp_contains_origin(const Mat& p) {
    if (p.rows < 1 || p.cols < 1) {
        throw std::invalid_argument("empty point matrix");
    }
    for (double v : p.data) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("non-finite point matrix");
        }
    }

    LpResult result;

    // Column max-norm rescaling; an exactly-zero column is the origin.
    Mat scaled = p;
    std::vector<double> scale(p.cols, 1.0);
    for (int c = 0; c < p.cols; ++c) {
        const double norm = column_max_norm(p, c);
        if (norm == 0.0) {
            result.contains_origin = true;
            result.combination.assign(p.cols, 0.0);
            result.combination[c] = 1.0;
            return result;
        }
        scale[c] = norm;
        for (int r = 0; r < p.rows; ++r) {
            scaled.at(r, c) /= norm;
        }
    }

    Phase1 simplex(scaled);
    result.objective = simplex.solve();
    result.contains_origin = result.objective <= kFeasTol;

    const double feature_scale = *std::max_element(scale.begin(), scale.end());
    if (result.contains_origin) {
        // Undo the column scaling and renormalize to a convex combination.
        auto x = simplex.extract_x();
        double total = 0.0;
        for (int j = 0; j < p.cols; ++j) {
            x[j] /= scale[j];
            total += x[j];
        }
        if (total <= 0.0) {
            throw LpError("degenerate convex combination");
        }
        for (auto& v : x) {
            v /= total;
        }
        for (int r = 0; r < p.rows; ++r) {
            double residual = 0.0;
            for (int j = 0; j < p.cols; ++j) {
                residual += p.at(r, j) * x[j];
            }
            if (std::abs(residual) > kVerifyTol * std::max(1.0, feature_scale)) {
                throw LpError("hull combination failed re-verification");
            }
        }
        result.combination = std::move(x);
    } else {
        auto d = simplex.extract_separator();
        // Strict separation must re-verify on the original columns; the
        // scaled margin is at least the phase-1 objective.
        for (int c = 0; c < p.cols; ++c) {
            double proj = 0.0;
            for (int r = 0; r < p.rows; ++r) {
                proj += d[r] * p.at(r, c);
            }
            if (proj / scale[c] < result.objective - kVerifyTol) {
                throw LpError("separating functional failed re-verification");
            }
            if (proj <= 0.0) {
                throw LpError("separating functional is not strict");
            }
        }
        result.separator = std::move(d);
    }
    return result;
}

SeparabilityVerdict is_separable(const SeparabilityInstance& instance) {
    const Mat p = homogenize(instance);
    const LpResult lp = lp_contains_origin(p);

    SeparabilityVerdict verdict;
    verdict.separable = !lp.contains_origin;

    if (!verdict.separable) {
        verdict.boundary = lp.objective > kBoundaryLow;  // tolerance made the call
        verdict.hull_combination = lp.combination;
        return verdict;
    }

    // The separating functional is (D, c); project the original features
    // and shift the threshold to the midpoint of the two class margins.
    const int dim = p.rows - 1;
    std::vector<double> d(lp.separator.begin(), lp.separator.begin() + dim);
    auto project = [&d](const FeatureVector& v) {
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            s += d[i] * v[i];
        }
        return s;
    };
    double min_a = std::numeric_limits<double>::infinity();
    double max_b = -std::numeric_limits<double>::infinity();
    double max_feature = 1.0;
    for (const auto& v : instance.class_a) {
        min_a = std::min(min_a, project(v));
        for (double x : v) max_feature = std::max(max_feature, std::abs(x));
    }
    for (const auto& v : instance.class_b) {
        max_b = std::max(max_b, project(v));
        for (double x : v) max_feature = std::max(max_feature, std::abs(x));
    }
    if (!(min_a > max_b)) {
        throw LpError("witness failed the margin check");
    }

    double norm = 0.0;
    for (double x : d) {
        norm = std::max(norm, std::abs(x));
    }
    if (norm == 0.0) {
        throw LpError("witness decoder is zero");
    }
    Witness witness;
    witness.decoder.resize(dim);
    for (int i = 0; i < dim; ++i) {
        witness.decoder[i] = d[i] / norm;
    }
    witness.threshold = (min_a + max_b) / (2.0 * norm);
    verdict.boundary = (min_a - max_b) / norm <= 2.0 * kFeasTol * max_feature;
    verdict.witness = std::move(witness);
    return verdict;
}

bool oracle_separable(const SeparabilityInstance& instance, double grid,
                      double bound) {
    instance.validate();
    const int dim = static_cast<int>(instance.class_a.front().size());
    const std::size_t points = instance.class_a.size() + instance.class_b.size();
    if (dim > 5 || points > 8) {
        throw std::invalid_argument("oracle is desk-scale only");
    }
    if (!(grid > 0.0) || !(bound > 0.0)) {
        throw std::invalid_argument("grid and bound must be positive");
    }

    const int steps = static_cast<int>(std::floor(2.0 * bound / grid)) + 1;
    std::vector<int> idx(dim, 0);
    std::vector<double> d(dim);
    while (true) {
        for (int i = 0; i < dim; ++i) {
            d[i] = -bound + grid * idx[i];
        }
        double min_a = std::numeric_limits<double>::infinity();
        for (const auto& v : instance.class_a) {
            double s = 0.0;
            for (int i = 0; i < dim; ++i) {
                s += d[i] * v[i];
            }
            min_a = std::min(min_a, s);
        }
        double max_b = -std::numeric_limits<double>::infinity();
        for (const auto& v : instance.class_b) {
            double s = 0.0;
            for (int i = 0; i < dim; ++i) {
                s += d[i] * v[i];
            }
            max_b = std::max(max_b, s);
        }
        // Any threshold in (max_b, min_a] separates strictly.
        if (min_a > max_b) {
            return true;
        }
        int i = 0;
        while (i < dim && ++idx[i] == steps) {
            idx[i++] = 0;
        }
        if (i == dim) {
            return false;
        }
    }
}

}  // namespace spikegate
