#pragma once

#include <optional>
#include <string>

#include "rbtensor/rb_tensor.hpp"

namespace rbt {

struct SolveReport {
    RBTensor solution;
    bool consistent = false;
    double residual = 0.0;  ///< ||A *Ht X - B||_F (or ||X *Ht A - B||_F)
    bool min_norm = false;
    double solution_norm = 0.0;
    /// Threshold the consistency test used: consistency_tol * max(1, ||B||_F).
    double tolerance = 0.0;
    /// Residual of the solvability condition that decided `consistent`
    /// (||R_A *Ht B||_F for the general solver).
    double condition_residual = 0.0;
    /// Empty when solvable; otherwise names the failing condition.
    std::string failed_condition;
};

struct SolveOptions {
    /// Relative singular-value cut-off for the pseudo-inverses; default per slice shape.
    std::optional<double> rtol;
    double consistency_tol = 1e-8;
};

/// X = A^+ B + L_A Y for A *Ht X = B. Inconsistent systems are reported with
/// consistent = false and still carry the least-squares particular solution.
SolveReport solve_general(const RBTensor& a, const RBTensor& b, const std::optional<RBTensor>& y = std::nullopt,
                          const SolveOptions& opt = {});

/// Hermitian solution of A *Ht X = B, solvable iff A B^* = B A^* and R_A B = O.
/// `u_free` must be Hermitian (checked to 1e-10 relative); default O.
SolveReport solve_hermitian(const RBTensor& a, const RBTensor& b, const std::optional<RBTensor>& u_free = std::nullopt,
                            const SolveOptions& opt = {});

/// Least-squares solutions X = A^+ B + (I - A^+ A) W of A *Ht X = B.
/// Without W the minimal-norm solution is returned and min_norm is set.
SolveReport lstsq_axb(const RBTensor& a, const RBTensor& b, const std::optional<RBTensor>& w = std::nullopt,
                      const SolveOptions& opt = {});

/// Least-squares solutions X = B A^+ + W (I - A A^+) of X *Ht A = B.
SolveReport lstsq_xab(const RBTensor& a, const RBTensor& b, const std::optional<RBTensor>& w = std::nullopt,
                      const SolveOptions& opt = {});

}  // namespace rbt
