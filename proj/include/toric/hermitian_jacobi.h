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

#ifndef TORIC_HERMITIAN_JACOBI_H
#define TORIC_HERMITIAN_JACOBI_H

#include <complex>
#include <cstddef>
#include <vector>

namespace toric {

/// Dense square complex matrix, row-major.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(size_t n) : n_(n), data_(n * n) {
    }

    size_t size() const {
        return n_;
    }
    std::complex<double> &operator()(size_t r, size_t c) {
        return data_[r * n_ + c];
    }
    const std::complex<double> &operator()(size_t r, size_t c) const {
        return data_[r * n_ + c];
    }
    /// Frobenius norm of the strictly off-diagonal part.
    double off_diagonal_norm() const;

   private:
    size_t n_ = 0;
    std::vector<std::complex<double>> data_;
};

struct JacobiOptions {
    /// Stop once the off-diagonal Frobenius norm drops below this (absolute) value.
    double tolerance = 1e-12;
    size_t max_sweeps = 100;
};

/// Eigenvalues of a Hermitian matrix by cyclic two-sided Jacobi rotations,
/// sorted descending. Only the upper triangle and the real part of the diagonal
/// are trusted. Throws StructuralError if max_sweeps is reached first.
std::vector<double> hermitian_eigenvalues(ComplexMatrix a, const JacobiOptions &options = {});

}  // namespace toric

#endif
