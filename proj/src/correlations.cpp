// Copyright 2026 The jcd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jcd/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "jcd/error.hpp"
#include "jcd/simd.hpp"

namespace jcd {

namespace {

int field_dim_of(const CMatrix &rho) {
    if (rho.rows() != rho.cols() || rho.rows() < 4 || rho.rows() % 2 != 0)
        throw DimensionMismatch("expected a square 2N x 2N matrix with N >= 2, got " +
                                std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()));
    return static_cast<int>(rho.rows() / 2);
}

RVector hermitian_eigenvalues(const CMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double discord_from_bloch(const BlochDecomposition &d, int field_dim) {
    const double N = field_dim;
    const Eigen::Matrix3d m = d.x * d.x.transpose() + (2.0 / N) * (d.T * d.T.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(m, Eigen::EigenvaluesOnly);
    const Eigen::Vector3d xi = solver.eigenvalues(); // ascending
    return std::max(0.0, (xi(0) + xi(1)) / (2.0 * N));
}

double negative_mass(const CMatrix &hermitian) {
    const RVector mu = hermitian_eigenvalues(hermitian);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < mu.size(); ++i)
        if (mu(i) < 0.0)
            sum -= mu(i);
    return sum;
}

} // namespace

StateDiagnostics state_diagnostics(const CMatrix &rho) {
    StateDiagnostics d{};
    d.trace_error = std::abs(rho.trace() - 1.0);
    d.hermiticity_residual = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    const CMatrix h = 0.5 * (rho + rho.adjoint());
    // Tr(h^2) = sum |h_ij|^2 for Hermitian h
    d.purity = simd::sqnorm(simd::flat(h));
    d.min_eigenvalue = hermitian_eigenvalues(h).minCoeff();
    return d;
}

void validate_density(const CMatrix &rho, const DensityTolerance &tol) {
    if (rho.rows() != rho.cols())
        throw DimensionMismatch("density matrix must be square");
    const StateDiagnostics d = state_diagnostics(rho);
    if (!(d.hermiticity_residual <= tol.hermiticity))
        throw ValidationError("not Hermitian: residual " + std::to_string(d.hermiticity_residual));
    if (!(d.trace_error <= tol.trace))
        throw ValidationError("trace deviates from 1 by " + std::to_string(d.trace_error));
    if (!(d.min_eigenvalue >= tol.min_eigenvalue))
        throw ValidationError("not positive semidefinite: min eigenvalue " +
                              std::to_string(d.min_eigenvalue));
}

double geometric_discord(const CMatrix &rho, const GeneratorBasis &basis) {
    validate_density(rho);
    return discord_from_bloch(bloch_decompose(rho, basis), basis.dim());
}

double geometric_discord(const CMatrix &rho, int field_dim) {
    return geometric_discord(rho, *cached_basis(field_dim));
}

namespace {

// ||rho - Pi(rho)||^2 for the measurement with Bloch direction (theta, phi).
class MeasurementDistance {
  public:
    MeasurementDistance(const CMatrix &rho, int n) : rho_(rho), n_(n), projected_(rho.rows(), rho.cols()) {}

    double operator()(double theta, double phi) {
        const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
        const cplx phase = std::polar(1.0, phi);
        const Eigen::Vector2cd up(c, phase * s);
        const Eigen::Vector2cd down(-std::conj(phase) * s, c);
        projected_.setZero();
        add_projection(up * up.adjoint());
        add_projection(down * down.adjoint());
        return simd::sqdist(simd::flat(rho_), simd::flat(projected_));
    }

  private:
    // projected += (P (x) I) rho (P (x) I), expanded block by block
    void add_projection(const Eigen::Matrix2cd &P) {
        const Eigen::Index n = n_;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c)
                    for (int d = 0; d < 2; ++d) {
                        const cplx w = P(a, c) * P(d, b);
                        if (w == cplx(0.0))
                            continue;
                        projected_.block(a * n, b * n, n, n) += w * rho_.block(c * n, d * n, n, n);
                    }
    }

    const CMatrix &rho_;
    int n_;
    CMatrix projected_;
};

template <class F>
std::pair<double, double> golden_minimize(F &&f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

} // namespace

double geometric_discord_oracle(const CMatrix &rho, int field_dim, const OracleGrid &grid) {
    if (grid.theta_points < 64 || grid.phi_points < 64)
        throw ConfigError("oracle grid needs at least 64 points per angle");
    if (field_dim_of(rho) != field_dim)
        throw DimensionMismatch("oracle: state dimension does not match field_dim");
    validate_density(rho);

    constexpr double pi = std::numbers::pi;
    const double dtheta = pi / (grid.theta_points - 1);
    const double dphi = 2.0 * pi / grid.phi_points;
    MeasurementDistance dist(rho, field_dim);

    double best = dist(0.0, 0.0);
    double best_theta = 0.0, best_phi = 0.0;
    for (int i = 0; i < grid.theta_points; ++i)
        for (int j = 0; j < grid.phi_points; ++j) {
            const double theta = i * dtheta, phi = j * dphi;
            const double v = dist(theta, phi);
            if (v < best) {
                best = v;
                best_theta = theta;
                best_phi = phi;
            }
        }

    // Alternate the per-angle refinement until neither angle improves.
    constexpr double tol = 1e-10;
    for (int cycle = 0; cycle < 16; ++cycle) {
        const double before = best;
        const auto [t, ft] = golden_minimize([&](double th) { return dist(th, best_phi); },
                                             std::max(0.0, best_theta - dtheta),
                                             std::min(pi, best_theta + dtheta), tol);
        if (ft < best) {
            best = ft;
            best_theta = t;
        }
        const auto [p, fp] = golden_minimize([&](double ph) { return dist(best_theta, ph); },
                                             best_phi - dphi, best_phi + dphi, tol);
        if (fp < best) {
            best = fp;
            best_phi = p;
        }
        if (before - best < 1e-15)
            break;
    }
    return std::max(0.0, best);
}

CMatrix partial_transpose_atom(const CMatrix &rho, int field_dim) {
    if (field_dim_of(rho) != field_dim)
        throw DimensionMismatch("partial transpose: state dimension does not match field_dim");
    const Eigen::Index n = field_dim;
    CMatrix pt = rho;
    pt.topRightCorner(n, n) = rho.bottomLeftCorner(n, n);
    pt.bottomLeftCorner(n, n) = rho.topRightCorner(n, n);
    return pt;
}

double negativity(const CMatrix &rho, int field_dim) {
    validate_density(rho);
    return negative_mass(partial_transpose_atom(rho, field_dim));
}

SchmidtSpectrum schmidt_spectrum(const CVector &psi, int field_dim) {
    if (psi.size() != 2 * field_dim)
        throw DimensionMismatch("state vector length must be 2N");
    // coefficient matrix: rows atom, columns field
    Eigen::MatrixXcd coeff(2, field_dim);
    for (int a = 0; a < 2; ++a)
        for (int n = 0; n < field_dim; ++n)
            coeff(a, n) = psi(a * field_dim + n);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coeff);
    SchmidtSpectrum s;
    const double norm = psi.squaredNorm();
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        const double sv = svd.singularValues()(i);
        s.weights.push_back(sv * sv / norm);
    }
    return s;
}

double pure_state_discord(const SchmidtSpectrum &spectrum) {
    double total = 0.0, squares = 0.0;
    for (double w : spectrum.weights) {
        if (!(w >= 0.0))
            throw ValidationError("Schmidt weights must be non-negative");
        total += w;
        squares += w * w;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw ValidationError("Schmidt weights sum to " + std::to_string(total) + ", not 1");
    return 1.0 - squares;
}

CorrelationReport correlation_report(const CMatrix &rho, const GeneratorBasis &basis,
                                     const DensityTolerance &tol) {
    const int n = field_dim_of(rho);
    if (n != basis.dim())
        throw DimensionMismatch("correlation_report: basis dimension does not match state");
    validate_density(rho, tol);
    CorrelationReport r{};
    const StateDiagnostics d = state_diagnostics(rho);
    r.purity = d.purity;
    r.trace_error = d.trace_error;
    r.geometric_discord = discord_from_bloch(bloch_decompose(rho, basis), n);
    r.negativity = negative_mass(partial_transpose_atom(rho, n));
    return r;
}

} // namespace jcd
