#pragma once

#include <functional>
#include <vector>

namespace fraudsim {

using ObjectiveFn = std::function<double(const std::vector<double>&)>;
using GradientFn = std::function<std::vector<double>(const std::vector<double>&)>;

struct OptimResult {
    std::vector<double> x;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Derivative-free simplex minimizer. step gives the initial per-dimension
/// simplex displacement. Converges when the relative objective spread across
/// the simplex falls below rel_tol.
OptimResult nelder_mead(const ObjectiveFn& f, const std::vector<double>& x0,
                        const std::vector<double>& step, int max_iterations, double rel_tol,
                        const std::function<void(int, double, const std::vector<double>&)>&
                            on_improvement = nullptr);

/// Quasi-Newton (BFGS) minimizer with backtracking line search. Converges when
/// the relative objective change falls below rel_tol.
OptimResult bfgs_minimize(const ObjectiveFn& f, const GradientFn& grad,
                          const std::vector<double>& x0, int max_iterations = 500,
                          double rel_tol = 1.0e-10);

/// Central finite-difference gradient.
std::vector<double> fd_gradient(const ObjectiveFn& f, const std::vector<double>& x,
                                double h = 1.0e-6);

/// Inverts a small dense row-major matrix in place via Gauss-Jordan with
/// partial pivoting. Returns false when the matrix is numerically singular.
bool invert_matrix(std::vector<double>& a, int n);

}  // namespace fraudsim
