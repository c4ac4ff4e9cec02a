/**************************************************************************
 * geometry.hpp
 *
 * Copyright 2026 The nisp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

// Principal angles between row spaces and the two pairwise distances
//   lambda  = m * prod sin^2(theta_i)
//   chordal = sum sin^2(theta_i)
// computed from orthonormal bases, so generators need not be unitary.

#include "lift.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>

namespace nisp {

using ComplexMatrix = Eigen::MatrixXcd;

struct AngleReport {
    std::size_t nu = 0;
    std::vector<double> thetas;  // ascending, radians
    double lambda = 0.0;
    double chordal = 0.0;
};

inline ComplexMatrix to_numeric(const Matrix<SymbolC>& g, std::uint32_t n) {
    ComplexMatrix out(static_cast<Eigen::Index>(g.rows()), static_cast<Eigen::Index>(g.cols()));
    const double step = n == 0 ? 0.0 : 2.0 * std::numbers::pi / n;
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) {
            const SymbolC s = g(r, c);
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                s.is_zero() ? std::complex<double>{} : std::polar(1.0, step * s.exponent());
        }
    return out;
}

inline ComplexMatrix to_numeric(const SubspaceC& s, const Alphabet& a) { return to_numeric(s.gen, a.n); }

namespace detail {

/// Orthonormal basis of the row space as the columns of an m x rows matrix.
inline ComplexMatrix row_basis(const ComplexMatrix& a) {
    const ComplexMatrix t = a.adjoint();
    Eigen::ColPivHouseholderQR<ComplexMatrix> qr(t);
    qr.setThreshold(1e-10);
    if (qr.rank() != a.rows())
        throw Error(Errc::RankDeficient, "generator does not have full row rank");
    const ComplexMatrix q = qr.householderQ();
    return q.leftCols(a.rows());
}

}  // namespace detail

inline AngleReport principal_angles(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.cols())
        throw Error(Errc::InvalidArgument, "subspaces live in spaces of different dimension");
    if (!a.allFinite() || !b.allFinite())
        throw Error(Errc::InvalidArgument, "non-finite generator entries");
    const ComplexMatrix qa = detail::row_basis(a);
    const ComplexMatrix qb = detail::row_basis(b);
    const ComplexMatrix cross = qa.adjoint() * qb;
    Eigen::JacobiSVD<ComplexMatrix> svd(cross);
    const auto& sv = svd.singularValues();

    AngleReport rep;
    rep.nu = static_cast<std::size_t>(std::min(a.rows(), b.rows()));
    for (std::size_t i = 0; i < rep.nu; ++i) {
        const double s = std::clamp(sv(static_cast<Eigen::Index>(i)), 0.0, 1.0);
        rep.thetas.push_back(std::acos(s));
    }
    std::sort(rep.thetas.begin(), rep.thetas.end());
    double prod = 1.0, sum = 0.0;
    for (double t : rep.thetas) {
        const double s2 = std::sin(t) * std::sin(t);
        prod *= s2;
        sum += s2;
    }
    rep.lambda = static_cast<double>(a.cols()) * prod;
    rep.chordal = sum;
    return rep;
}

struct Distribution {
    double min = 0.0, mean = 0.0, max = 0.0;
};

struct DistanceSummary {
    std::size_t pairs = 0;  // zero means "no pairs"
    Distribution lambda;
    Distribution chordal;
    IndexPair argmin_lambda{0, 0};
};

namespace detail {

inline Distribution summarize(const std::vector<double>& v) {
    Distribution d;
    d.min = *std::min_element(v.begin(), v.end());
    d.max = *std::max_element(v.begin(), v.end());
    double s = 0.0;
    for (double x : v)
        s += x;
    d.mean = s / static_cast<double>(v.size());
    return d;
}

}  // namespace detail

/// Pairwise lambda / chordal statistics over a code assumed nonintersecting.
inline DistanceSummary min_distance(const CodeC& code) {
    if (code.subspaces.empty())
        throw Error(Errc::EmptyCode, "distance summary of an empty code");
    std::vector<ComplexMatrix> gens;
    for (const auto& s : code.subspaces)
        gens.push_back(to_numeric(s, code.alphabet));
    // Orthonormal bases once per subspace; the pair loop only needs products.
    std::vector<ComplexMatrix> bases;
    for (const auto& g : gens)
        bases.push_back(detail::row_basis(g));

    DistanceSummary sum;
    std::vector<double> lambdas, chordals;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const ComplexMatrix cross = bases[i].adjoint() * bases[j];
            Eigen::JacobiSVD<ComplexMatrix> svd(cross);
            double prod = 1.0, chord = 0.0;
            for (Eigen::Index t = 0; t < svd.singularValues().size(); ++t) {
                const double s = std::clamp(svd.singularValues()(t), 0.0, 1.0);
                const double s2 = 1.0 - s * s;
                prod *= s2;
                chord += s2;
            }
            const double lambda = static_cast<double>(code.m) * prod;
            lambdas.push_back(lambda);
            chordals.push_back(chord);
            if (lambda < best) {
                best = lambda;
                sum.argmin_lambda = {i, j};
            }
        }
    sum.pairs = lambdas.size();
    if (sum.pairs > 0) {
        sum.lambda = detail::summarize(lambdas);
        sum.chordal = detail::summarize(chordals);
    }
    return sum;
}

}  // namespace nisp
