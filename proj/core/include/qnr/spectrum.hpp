// Copyright 2026 The qnumrange Authors.
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

#pragma once

#include <complex>
#include <vector>

#include "qnr/qmatrix.hpp"
#include "qnr/quaternion.hpp"

namespace qnr {

/// Eigenvalues of a general complex matrix: Householder reduction to upper
/// Hessenberg form followed by single-shift QR with Wilkinson shifts.
/// Throws NumericalError if an eigenvalue fails to converge.
std::vector<std::complex<double>> complex_eigenvalues(ComplexMatrix a);

/// Finite union of similarity spheres, sorted by (a, b).
struct SphereSet {
  std::vector<SimilaritySphere> spheres;
  /// min sigma_min(Delta_q(T)) bound actually observed at the representatives
  /// (max over spheres); filled by s_spectrum.
  double worst_singular_value = 0.0;

  bool contains(const SimilaritySphere& s, double tolerance) const;
};

struct SpectrumOptions {
  double merge_tolerance = 1e-6;
  /// Singularity threshold, relative: sigma_min(Delta_q) <= tol * (1 + |T|_F^2).
  double singular_tolerance = 1e-8;
};

/// S-spectrum {q : Delta_q(T) singular} of a square quaternionic matrix, as
/// spheres. Eigenvalues of the complex adjoint (or of the real representation
/// when T is Hermitian) give candidates; each is confirmed by the smallest
/// singular value of Delta_q(T). Throws NumericalError on a failed check.
SphereSet s_spectrum(const QMatrix& t, const SpectrumOptions& options = {});

}  // namespace qnr
