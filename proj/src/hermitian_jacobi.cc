// Copyright 2026 The toric-entropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "toric/hermitian_jacobi.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "toric/errors.h"

namespace toric {

double ComplexMatrix::off_diagonal_norm() const {
    double sum = 0;
    for (size_t r = 0; r < n_; r++) {
        for (size_t c = 0; c < n_; c++) {
            if (r != c) {
                sum += std::norm((*this)(r, c));
            }
        }
    }
    return std::sqrt(sum);
}

namespace {

// Zeroes a(p,q) with the unitary U = diag(1, conj(phase)) * [[c, s], [-s, c]]
// acting on coordinates p and q: a <- U^H a U.
void rotate(ComplexMatrix &a, size_t p, size_t q) {
    using cd = std::complex<double>;
    size_t n = a.size();
    cd apq = a(p, q);
    double mag = std::abs(apq);
    cd phase = apq / mag;
    double app = a(p, p).real();
    double aqq = a(q, q).real();

    double theta = (aqq - app) / (2 * mag);
    double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
    double c = 1 / std::sqrt(t * t + 1);
    double s = t * c;

    cd u_pp = c;
    cd u_pq = s;
    cd u_qp = -s * std::conj(phase);
    cd u_qq = c * std::conj(phase);

    for (size_t k = 0; k < n; k++) {
        cd akp = a(k, p);
        cd akq = a(k, q);
        a(k, p) = akp * u_pp + akq * u_qp;
        a(k, q) = akp * u_pq + akq * u_qq;
    }
    for (size_t k = 0; k < n; k++) {
        cd apk = a(p, k);
        cd aqk = a(q, k);
        a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
        a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
    }
    a(p, q) = 0;
    a(q, p) = 0;
    a(p, p) = app - t * mag;
    a(q, q) = aqq + t * mag;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(ComplexMatrix a, const JacobiOptions &options) {
    size_t n = a.size();
    for (size_t r = 0; r < n; r++) {
        a(r, r) = a(r, r).real();
        for (size_t c = r + 1; c < n; c++) {
            a(c, r) = std::conj(a(r, c));
        }
    }
    size_t sweep = 0;
    while (a.off_diagonal_norm() > options.tolerance) {
        if (sweep++ == options.max_sweeps) {
            throw StructuralError(
                "Jacobi eigensolver did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                if (a(p, q) != std::complex<double>(0)) {
                    rotate(a, p, q);
                }
            }
        }
    }
    std::vector<double> out(n);
    for (size_t i = 0; i < n; i++) {
        out[i] = a(i, i).real();
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace toric
