// Copyright 2026 The mirrorchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Lindblad master equations  d rho/dt = -i[H, rho] + sum_k r_k L(c_k) rho  with
 * L(A) rho = 2 A rho A^dag - {A^dag A, rho}, integrated by fixed-step RK4.
 */
#pragma once

#include "core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>

#include <functional>
#include <string>
#include <vector>

namespace mirrorchain::lindblad {

using SparseC = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

struct CollapseOp {
    double rate = 0.0;
    SparseC op;
    std::string name;
};

struct LindbladModel {
    SparseC hamiltonian;
    std::vector<CollapseOp> collapse_ops;
    /// Subsystem dimensions, first factor most significant.
    std::vector<int> dims;
    /// Evolve with +i[H, rho] instead of -i[H, rho].
    bool flip_commutator_sign = false;

    [[nodiscard]] Eigen::Index dim() const { return hamiltonian.rows(); }
};

inline SparseC to_sparse(const CMatrix &m, double drop = 0.0) {
    SparseC s = m.sparseView(1.0, drop);
    s.makeCompressed();
    return s;
}

inline SparseC sparse_identity(Eigen::Index n) {
    SparseC s(n, n);
    s.setIdentity();
    return s;
}

inline SparseC sparse_kron(const SparseC &a, const SparseC &b) {
    SparseC out(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<Eigen::Triplet<Complex>> trips;
    trips.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
    for (Eigen::Index i = 0; i < a.outerSize(); ++i) {
        for (SparseC::InnerIterator ia(a, i); ia; ++ia) {
            for (Eigen::Index k = 0; k < b.outerSize(); ++k) {
                for (SparseC::InnerIterator ib(b, k); ib; ++ib) {
                    trips.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                                       ia.value() * ib.value());
                }
            }
        }
    }
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

/// Truncated annihilation operator on n Fock levels.
inline SparseC destroy(int n) {
    SparseC a(n, n);
    std::vector<Eigen::Triplet<Complex>> trips;
    for (int k = 1; k < n; ++k) {
        trips.emplace_back(k - 1, k, std::sqrt(static_cast<double>(k)));
    }
    a.setFromTriplets(trips.begin(), trips.end());
    return a;
}

/// `op` acting on factor `which` (0-based) of a tensor product with `dims`.
inline SparseC embed(const SparseC &op, std::size_t which, const std::vector<int> &dims) {
    SparseC out = sparse_identity(1);
    for (std::size_t k = 0; k < dims.size(); ++k) {
        out = sparse_kron(out, k == which ? op : sparse_identity(dims[k]));
    }
    return out;
}

inline bool is_hermitian(const SparseC &h, double tol) {
    const SparseC diff = h - SparseC(h.adjoint());
    for (Eigen::Index i = 0; i < diff.outerSize(); ++i) {
        for (SparseC::InnerIterator it(diff, i); it; ++it) {
            if (std::abs(it.value()) > tol) {
                return false;
            }
        }
    }
    return true;
}

/// Tr(A rho) for sparse A.
inline Complex expect(const SparseC &a, const CMatrix &rho) {
    Complex acc{0.0, 0.0};
    for (Eigen::Index i = 0; i < a.outerSize(); ++i) {
        for (SparseC::InnerIterator it(a, i); it; ++it) {
            acc += it.value() * rho(it.col(), it.row());
        }
    }
    return acc;
}

inline double purity(const CMatrix &rho) { return rho.cwiseAbs2().sum(); }

/// (1/2) sum |eig(rho - sigma)|
inline double trace_distance(const CMatrix &rho, const CMatrix &sigma) {
    require(rho.rows() == sigma.rows(), "trace_distance: dimension mismatch");
    const CMatrix diff = 0.5 * ((rho - sigma) + (rho - sigma).adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(diff, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

inline double min_eigenvalue(const CMatrix &rho) {
    const CMatrix h = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

/// Trace out the last tensor factor (dimension `traced`).
inline CMatrix partial_trace_last(const CMatrix &rho, Eigen::Index traced) {
    const Eigen::Index keep = rho.rows() / traced;
    CMatrix out = CMatrix::Zero(keep, keep);
    for (Eigen::Index i = 0; i < keep; ++i) {
        for (Eigen::Index j = 0; j < keep; ++j) {
            Complex acc{0.0, 0.0};
            for (Eigen::Index k = 0; k < traced; ++k) {
                acc += rho(i * traced + k, j * traced + k);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

/// Row-major storage makes sparse * dense products stream contiguously.
using RowMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Precomputed pieces of the Liouvillian for repeated evaluation.
class Liouvillian {
  public:
    explicit Liouvillian(const LindbladModel &m) {
        require(m.hamiltonian.rows() == m.hamiltonian.cols(), "Liouvillian: H must be square");
        // K = +-H - i sum r c^dag c; then L(rho) = -iK rho + (-iK rho)^dag + sum 2 r c rho c^dag.
        const double hs = m.flip_commutator_sign ? -1.0 : 1.0;
        SparseC k = hs * m.hamiltonian;
        for (const auto &c : m.collapse_ops) {
            require(c.rate >= 0.0, "Liouvillian: collapse rates must be >= 0");
            require(c.op.rows() == m.dim() && c.op.cols() == m.dim(), "Liouvillian: collapse op dimension mismatch");
            if (c.rate == 0.0) {
                continue;
            }
            k -= kI * c.rate * SparseC(SparseC(c.op.adjoint()) * c.op);
            jumps_.push_back({2.0 * c.rate, c.op});
        }
        minus_i_k_ = -kI * k;
        minus_i_k_.makeCompressed();
    }

    /// Writes L(rho) into out; rho must be Hermitian.
    void apply(const RowMatrix &rho, RowMatrix &out) const {
        tmp_.noalias() = minus_i_k_ * rho;
        out = tmp_ + tmp_.adjoint();
        for (const auto &[w, c] : jumps_) {
            tmp_.noalias() = c * rho;
            tmp2_ = tmp_.adjoint();
            tmp_.noalias() = c * tmp2_;
            out += w * tmp_;
        }
    }

  private:
    struct Jump {
        double weight;
        SparseC op;
    };
    SparseC minus_i_k_;
    std::vector<Jump> jumps_;
    mutable RowMatrix tmp_;
    mutable RowMatrix tmp2_;
};

enum class Method {
    /// Classical fourth-order Runge-Kutta.
    RK4,
    /// Truncated Taylor series of exp(h L), summed until the terms fall below taylor_tol.
    Taylor,
};

struct IntegratorOptions {
    Method method = Method::RK4;
    /// Upper bound on the step.
    double max_step = 1e-2;
    /// Abort when |Tr rho - 1| exceeds this.
    double trace_abort = 1e-6;
    double taylor_tol = 1e-14;
    int taylor_max_terms = 150;
};

/// Called with (grid index, time, rho) at every grid point including t_grid[0].
using Observer = std::function<void(std::size_t, double, const CMatrix &)>;

inline void validate_density(const CMatrix &rho, Eigen::Index dim) {
    require(rho.rows() == dim && rho.cols() == dim, "integrate_lindblad: rho0 has wrong dimension");
    require(max_abs_diff(rho, CMatrix(rho.adjoint())) <= 1e-10, "integrate_lindblad: rho0 must be Hermitian");
    require(std::abs(rho.trace() - Complex{1.0, 0.0}) <= 1e-10, "integrate_lindblad: rho0 must have unit trace");
    require(min_eigenvalue(rho) >= -1e-10, "integrate_lindblad: rho0 must be positive");
}

namespace detail {
class Stepper {
  public:
    Stepper(const Liouvillian &lv, const IntegratorOptions &opts, Eigen::Index n)
        : lv_(lv), opts_(opts), k1_(n, n), k2_(n, n), k3_(n, n), k4_(n, n), stage_(n, n) {}

    void step(RowMatrix &rho, double h) {
        if (opts_.method == Method::RK4) {
            lv_.apply(rho, k1_);
            stage_ = rho + (0.5 * h) * k1_;
            lv_.apply(stage_, k2_);
            stage_ = rho + (0.5 * h) * k2_;
            lv_.apply(stage_, k3_);
            stage_ = rho + h * k3_;
            lv_.apply(stage_, k4_);
            rho += (h / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
        } else {
            // k1 holds the current term h^k L^k rho / k!, stage the partial sum.
            k1_ = rho;
            stage_ = rho;
            int small = 0;
            int k = 1;
            for (; k <= opts_.taylor_max_terms && small < 2; ++k) {
                lv_.apply(k1_, k2_);
                k1_ = (h / k) * k2_;
                stage_ += k1_;
                small = k1_.cwiseAbs().maxCoeff() < opts_.taylor_tol ? small + 1 : 0;
            }
            if (small < 2) {
                throw NumericalError("integrate_lindblad: Taylor series did not converge; reduce max_step");
            }
            rho.swap(stage_);
        }
        stage_ = 0.5 * (rho + rho.adjoint());
        rho.swap(stage_);
    }

  private:
    const Liouvillian &lv_;
    const IntegratorOptions &opts_;
    RowMatrix k1_, k2_, k3_, k4_, stage_;
};
} // namespace detail

/**
 * Fixed-step integration (RK4 or truncated Taylor). Each grid interval is
 * split into equal steps no longer than opts.max_step; rho is re-symmetrized
 * after every step.
 */
inline void integrate_lindblad(const LindbladModel &model, const CMatrix &rho0, const std::vector<double> &t_grid,
                               const IntegratorOptions &opts, const Observer &observe) {
    require(!t_grid.empty(), "integrate_lindblad: empty time grid");
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        require(t_grid[i] > t_grid[i - 1], "integrate_lindblad: t_grid must be increasing");
    }
    require(opts.max_step > 0.0, "integrate_lindblad: max_step must be positive");
    validate_density(rho0, model.dim());

    const Liouvillian lv(model);
    RowMatrix rho = rho0;
    detail::Stepper stepper(lv, opts, rho.rows());
    observe(0, t_grid[0], rho0);
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        const double span = t_grid[i] - t_grid[i - 1];
        const auto steps = static_cast<long>(std::ceil(span / opts.max_step - 1e-9));
        const double h = span / static_cast<double>(steps);
        for (long s = 0; s < steps; ++s) {
            stepper.step(rho, h);
        }
        // Written so that a NaN drift or an overflowed state also aborts.
        const double drift = std::abs(rho.trace() - Complex{1.0, 0.0});
        if (!(drift <= opts.trace_abort) || !std::isfinite(rho.cwiseAbs().maxCoeff())) {
            throw NumericalError("integrate_lindblad: trace drifted by " + std::to_string(drift) +
                                 " or the state diverged; reduce the step size");
        }
        observe(i, t_grid[i], CMatrix(rho));
    }
}

/// Convenience overload returning rho at every grid point.
inline std::vector<CMatrix> integrate_lindblad(const LindbladModel &model, const CMatrix &rho0,
                                               const std::vector<double> &t_grid, const IntegratorOptions &opts = {}) {
    std::vector<CMatrix> out;
    out.reserve(t_grid.size());
    integrate_lindblad(model, rho0, t_grid, opts, [&](std::size_t, double, const CMatrix &r) { out.push_back(r); });
    return out;
}

} // namespace mirrorchain::lindblad
