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

#include "qnr/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qnr/error.hpp"
#include "qnr/numerical_range.hpp"

namespace qnr {

namespace {

using C = std::complex<double>;

void to_hessenberg(ComplexMatrix& h) {
  const std::size_t n = h.size();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double alpha2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) alpha2 += std::norm(h[i][k]);
    const double alpha = std::sqrt(alpha2);
    if (alpha == 0.0) continue;
    std::vector<C> v(n);
    const C x0 = h[k + 1][k];
    const C phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : C{1.0};
    v[k + 1] = x0 + phase * alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = h[i][k];
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 == 0.0) continue;
    // H <- (I - 2 v v^H / |v|^2) H (I - 2 v v^H / |v|^2)
    for (std::size_t c = 0; c < n; ++c) {
      C s{};
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * h[i][c];
      s *= 2.0 / vnorm2;
      for (std::size_t i = k + 1; i < n; ++i) h[i][c] -= v[i] * s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      C s{};
      for (std::size_t i = k + 1; i < n; ++i) s += h[r][i] * v[i];
      s *= 2.0 / vnorm2;
      for (std::size_t i = k + 1; i < n; ++i) h[r][i] -= s * std::conj(v[i]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h[i][k] = 0.0;
  }
}

// Eigenvalue of [[a, b], [c, d]] closer to d.
C wilkinson_shift(C a, C b, C c, C d) {
  const C tr = a + d;
  const C det = a * d - b * c;
  const C disc = std::sqrt(tr * tr * 0.25 - det);
  const C l1 = tr * 0.5 + disc;
  const C l2 = tr * 0.5 - disc;
  return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

}  // namespace

std::vector<C> complex_eigenvalues(ComplexMatrix h) {
  const std::size_t n = h.size();
  for (const auto& row : h) {
    if (row.size() != n) throw DimensionError("complex_eigenvalues: matrix is not square");
  }
  std::vector<C> eig(n);
  if (n == 0) return eig;
  to_hessenberg(h);

  const double eps = std::numeric_limits<double>::epsilon();
  double scale = 0.0;
  for (const auto& row : h)
    for (const auto& v : row) scale = std::max(scale, std::abs(v));

  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
  int iterations = 0;
  const int max_iterations = 60 * static_cast<int>(n);
  int since_deflation = 0;
  while (hi >= 0) {
    // Find the start of the active unreduced block.
    std::ptrdiff_t lo = hi;
    while (lo > 0) {
      const double sub = std::abs(h[lo][lo - 1]);
      const double diag = std::abs(h[lo][lo]) + std::abs(h[lo - 1][lo - 1]);
      if (sub <= eps * (diag > 0.0 ? diag : scale)) {
        h[lo][lo - 1] = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig[hi] = h[hi][hi];
      --hi;
      since_deflation = 0;
      continue;
    }
    if (++iterations > max_iterations) {
      throw NumericalError("complex_eigenvalues: QR iteration did not converge");
    }
    ++since_deflation;

    C mu = wilkinson_shift(h[hi - 1][hi - 1], h[hi - 1][hi], h[hi][hi - 1], h[hi][hi]);
    if (since_deflation % 11 == 10) {
      // Exceptional shift to break cycles.
      mu = h[hi][hi] + C{std::abs(h[hi][hi - 1]) * 0.75, std::abs(h[hi][hi - 1]) * 0.25};
    }

    for (std::ptrdiff_t k = lo; k <= hi; ++k) h[k][k] -= mu;
    std::vector<double> cs(static_cast<std::size_t>(hi - lo));
    std::vector<C> sn(static_cast<std::size_t>(hi - lo));
    for (std::ptrdiff_t k = lo; k < hi; ++k) {
      const C a = h[k][k];
      const C b = h[k + 1][k];
      const double r = std::hypot(std::abs(a), std::abs(b));
      double c = 0.0;
      C s{1.0};
      if (r != 0.0) {
        if (std::abs(a) == 0.0) {
          c = 0.0;
          s = std::conj(b) / std::abs(b);
        } else {
          c = std::abs(a) / r;
          s = (a / std::abs(a)) * std::conj(b) / r;
        }
      }
      cs[k - lo] = c;
      sn[k - lo] = s;
      for (std::ptrdiff_t j = k; j <= hi; ++j) {
        const C x = h[k][j];
        const C y = h[k + 1][j];
        h[k][j] = c * x + s * y;
        h[k + 1][j] = -std::conj(s) * x + c * y;
      }
    }
    for (std::ptrdiff_t k = lo; k < hi; ++k) {
      const double c = cs[k - lo];
      const C s = sn[k - lo];
      const std::ptrdiff_t last = std::min(k + 2, hi);
      for (std::ptrdiff_t i = lo; i <= last; ++i) {
        const C x = h[i][k];
        const C y = h[i][k + 1];
        h[i][k] = x * c + y * std::conj(s);
        h[i][k + 1] = -x * s + y * c;
      }
    }
    for (std::ptrdiff_t k = lo; k <= hi; ++k) h[k][k] += mu;
  }
  return eig;
}

bool SphereSet::contains(const SimilaritySphere& s, double tolerance) const {
  return std::any_of(spheres.begin(), spheres.end(),
                     [&](const SimilaritySphere& t) { return distance(s, t) <= tolerance; });
}

SphereSet s_spectrum(const QMatrix& t, const SpectrumOptions& options) {
  const std::size_t n = t.size();
  if (n == 0) return {};
  const double tnorm = frobenius(t);

  std::vector<SimilaritySphere> candidates;
  double worst = 0.0;
  const std::vector<Component> comps = components(t);
  if (comps.size() > 1) {
    // Delta_q of a direct sum is singular iff some summand's is.
    for (const auto& c : comps) {
      const SphereSet part = s_spectrum(c.block, options);
      candidates.insert(candidates.end(), part.spheres.begin(), part.spheres.end());
      worst = std::max(worst, part.worst_singular_value);
    }
  } else if (is_hermitian(t, 1e-14 * std::max(1.0, tnorm))) {
    // Right eigenvalues are real; each appears with multiplicity four in the
    // real representation.
    const SymSpectrum s = sym_eig(real_rep(hermitian_part(t)), {.vectors = false});
    for (double v : s.eigenvalues) candidates.push_back({v, 0.0});
  } else {
    for (const C& lambda : complex_eigenvalues(complex_rep(t))) {
      candidates.push_back({lambda.real(), std::fabs(lambda.imag())});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& p, const auto& q) {
    return p.a != q.a ? p.a < q.a : p.b < q.b;
  });

  // Greedy clustering; candidates from one sphere sit within the merge
  // tolerance of each other.
  std::vector<std::vector<SimilaritySphere>> clusters;
  for (const auto& c : candidates) {
    bool placed = false;
    for (auto& cluster : clusters) {
      if (distance(cluster.front(), c) <= options.merge_tolerance) {
        cluster.push_back(c);
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({c});
  }

  SphereSet out;
  out.worst_singular_value = worst;
  if (comps.size() > 1) {
    for (const auto& cluster : clusters) out.spheres.push_back(cluster.front());
    return out;
  }
  const double threshold = options.singular_tolerance * (1.0 + tnorm * tnorm);
  for (const auto& cluster : clusters) {
    SimilaritySphere mean{};
    for (const auto& c : cluster) {
      mean.a += c.a;
      mean.b += c.b;
    }
    mean.a /= static_cast<double>(cluster.size());
    mean.b /= static_cast<double>(cluster.size());
    const double sigma = smallest_singular_value(delta(t, mean.representative()));
    if (sigma > threshold) {
      throw NumericalError("s_spectrum: Delta_q(T) is not singular at candidate (" +
                           format_double(mean.a) + ", " + format_double(mean.b) +
                           "), sigma_min = " + format_double(sigma));
    }
    out.worst_singular_value = std::max(out.worst_singular_value, sigma);
    out.spheres.push_back(mean);
  }
  std::sort(out.spheres.begin(), out.spheres.end(), [](const auto& p, const auto& q) {
    return p.a != q.a ? p.a < q.a : p.b < q.b;
  });
  return out;
}

}  // namespace qnr
