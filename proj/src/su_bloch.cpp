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

#include "jcd/su_bloch.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "jcd/error.hpp"
#include "jcd/simd.hpp"

namespace jcd {

namespace {

constexpr double kHermiticityTol = 1e-10;
constexpr double kImagResidueTol = 1e-12;

// Mirror the upper triangle so the result is exactly Hermitian.
void hermitize_from_upper(CMatrix &m) {
    const Eigen::Index n = m.rows();
    for (Eigen::Index j = 0; j < n; ++j) {
        m(j, j) = m(j, j).real();
        for (Eigen::Index i = j + 1; i < n; ++i)
            m(i, j) = std::conj(m(j, i));
    }
}

double real_checked(cplx v, const char *what) {
    if (std::abs(v.imag()) > kImagResidueTol)
        throw std::logic_error(std::string("bloch_decompose: imaginary residue in ") + what + ": " +
                               std::to_string(v.imag()));
    return v.real();
}

} // namespace

GeneratorBasis::GeneratorBasis(int dim) : dim_(dim) {
    if (dim < 2)
        throw InvalidDimension("SU(N) generators need N >= 2, got " + std::to_string(dim));
    const auto n = static_cast<Eigen::Index>(dim);
    generators_.reserve(static_cast<std::size_t>(dim * dim - 1));

    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = j + 1; k < n; ++k) {
            CMatrix g = CMatrix::Zero(n, n);
            g(j, k) = 1.0;
            g(k, j) = 1.0;
            generators_.push_back(std::move(g));
        }
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = j + 1; k < n; ++k) {
            CMatrix g = CMatrix::Zero(n, n);
            g(j, k) = cplx(0.0, -1.0);
            g(k, j) = cplx(0.0, 1.0);
            generators_.push_back(std::move(g));
        }
    for (Eigen::Index l = 1; l < n; ++l) {
        const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
        CMatrix g = CMatrix::Zero(n, n);
        for (Eigen::Index m = 0; m < l; ++m)
            g(m, m) = scale;
        g(l, l) = -static_cast<double>(l) * scale;
        generators_.push_back(std::move(g));
    }
}

std::shared_ptr<const GeneratorBasis> cached_basis(int dim) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const GeneratorBasis>> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[dim];
    if (!slot)
        slot = std::make_shared<const GeneratorBasis>(dim);
    return slot;
}

const std::array<Eigen::Matrix2cd, 3> &pauli() {
    static const std::array<Eigen::Matrix2cd, 3> sigma = [] {
        std::array<Eigen::Matrix2cd, 3> s;
        s[0] << 0.0, 1.0, 1.0, 0.0;
        s[1] << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
        s[2] << 1.0, 0.0, 0.0, -1.0;
        return s;
    }();
    return sigma;
}

AtomMoments atom_moments(const CMatrix &rho, int field_dim) {
    const auto n = static_cast<Eigen::Index>(field_dim);
    if (rho.rows() != 2 * n || rho.cols() != 2 * n)
        throw DimensionMismatch("expected a " + std::to_string(2 * n) + "x" + std::to_string(2 * n) +
                                " matrix, got " + std::to_string(rho.rows()) + "x" +
                                std::to_string(rho.cols()));
    const auto A = rho.topLeftCorner(n, n);
    const auto B = rho.bottomRightCorner(n, n);
    const auto C = rho.topRightCorner(n, n);
    const auto Cd = rho.bottomLeftCorner(n, n);
    const cplx i(0.0, 1.0);
    AtomMoments m;
    m.identity = A + B;
    m.pauli[0] = C + Cd;
    m.pauli[1] = i * (C - Cd);
    m.pauli[2] = A - B;
    return m;
}

BlochDecomposition bloch_decompose(const CMatrix &rho, const GeneratorBasis &basis) {
    const int N = basis.dim();
    if (rho.rows() != 2 * N || rho.cols() != 2 * N)
        throw DimensionMismatch("bloch_decompose: state is " + std::to_string(rho.rows()) + "x" +
                                std::to_string(rho.cols()) + " but basis has N = " +
                                std::to_string(N));
    const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermiticityTol)
        throw ValidationError("bloch_decompose: non-Hermitian input (residual " +
                              std::to_string(herm) + ")");

    const CMatrix h = 0.5 * (rho + rho.adjoint());
    const AtomMoments m = atom_moments(h, N);
    const double half_n = 0.5 * N;
    const std::size_t count = basis.size();

    BlochDecomposition d;
    for (int i = 0; i < 3; ++i)
        d.x(i) = real_checked(m.pauli[static_cast<std::size_t>(i)].trace(), "x");

    d.y.resize(static_cast<Eigen::Index>(count));
    d.T.resize(3, static_cast<Eigen::Index>(count));
    for (std::size_t j = 0; j < count; ++j) {
        const auto g = simd::flat(basis[j]);
        const auto col = static_cast<Eigen::Index>(j);
        // G Hermitian: Tr(G R) = sum conj(G_ab) R_ab
        d.y(col) = half_n * real_checked(simd::dotc(g, simd::flat(m.identity)), "y");
        for (std::size_t i = 0; i < 3; ++i)
            d.T(static_cast<Eigen::Index>(i), col) =
                half_n * real_checked(simd::dotc(g, simd::flat(m.pauli[i])), "T");
    }
    return d;
}

CMatrix bloch_reconstruct(const BlochDecomposition &decomp, const GeneratorBasis &basis) {
    const int N = basis.dim();
    const auto count = static_cast<Eigen::Index>(basis.size());
    if (decomp.y.size() != count || decomp.T.cols() != count)
        throw DimensionMismatch("bloch_reconstruct: decomposition has " +
                                std::to_string(decomp.y.size()) + " field components, basis has " +
                                std::to_string(count));

    const auto n = static_cast<Eigen::Index>(N);
    CMatrix Y = CMatrix::Zero(n, n);
    std::array<CMatrix, 3> Tm{CMatrix::Zero(n, n), CMatrix::Zero(n, n), CMatrix::Zero(n, n)};
    for (Eigen::Index j = 0; j < count; ++j) {
        const auto g = simd::flat(basis[static_cast<std::size_t>(j)]);
        simd::axpy(decomp.y(j), g, simd::flat(Y));
        for (int i = 0; i < 3; ++i)
            simd::axpy(decomp.T(i, j), g, simd::flat(Tm[static_cast<std::size_t>(i)]));
    }

    const cplx i(0.0, 1.0);
    const CMatrix id = CMatrix::Identity(n, n);
    const double x1 = decomp.x(0), x2 = decomp.x(1), x3 = decomp.x(2);

    CMatrix ee = (1.0 + x3) * id + Y + Tm[2];
    CMatrix gg = (1.0 - x3) * id + Y - Tm[2];
    const CMatrix eg = cplx(x1, -x2) * id + Tm[0] - i * Tm[1];
    hermitize_from_upper(ee);
    hermitize_from_upper(gg);

    CMatrix rho(2 * n, 2 * n);
    rho.topLeftCorner(n, n) = ee;
    rho.bottomRightCorner(n, n) = gg;
    rho.topRightCorner(n, n) = eg;
    rho.bottomLeftCorner(n, n) = eg.adjoint();
    return rho / (2.0 * N);
}

} // namespace jcd
