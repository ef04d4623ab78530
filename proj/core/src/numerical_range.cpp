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

#include "qnr/numerical_range.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>

#include "qnr/error.hpp"
#include "qnr/random.hpp"

namespace qnr {

namespace {

constexpr std::size_t kSampleChunk = 4096;

const Quaternion kBasis[4] = {Quaternion{1.0}, Quaternion::i(), Quaternion::j(),
                              Quaternion::k()};

}  // namespace

QuadraticForms QuadraticForms::of(const QMatrix& t) {
  const RealMatrix r = real_rep(t);
  const std::size_t d = r.rows();
  QuadraticForms out;
  for (int c = 0; c < 4; ++c) {
    // rho(s, p) = coordinate s of e_p e_c, i.e. right multiplication by e_c.
    double rho[4][4];
    for (int p = 0; p < 4; ++p) {
      const Quaternion col = kBasis[p] * kBasis[c];
      for (int s = 0; s < 4; ++s) rho[s][p] = col[s];
    }
    // Coordinate c of conj(a) b is (a e_c) . b, so the form is X^T P_c^T R X
    // with P_c = blockdiag(rho).
    RealMatrix g(d, d);
    for (std::size_t blk = 0; blk < d / 4; ++blk)
      for (int p = 0; p < 4; ++p)
        for (std::size_t col = 0; col < d; ++col) {
          double s = 0.0;
          for (int q = 0; q < 4; ++q) s += rho[q][p] * r(4 * blk + q, col);
          g(4 * blk + p, col) = s;
        }
    RealMatrix f(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) f(a, b) = 0.5 * (g(a, b) + g(b, a));
    out.f[c] = std::move(f);
  }
  return out;
}

Quaternion QuadraticForms::value(std::span<const double> x) const {
  double c[4];
  for (int k = 0; k < 4; ++k) {
    const std::vector<double> fx = multiply(f[k], x);
    c[k] = std::inner_product(fx.begin(), fx.end(), x.begin(), 0.0);
  }
  return {c[0], c[1], c[2], c[3]};
}

std::vector<double> to_real(std::span<const Quaternion> x) {
  std::vector<double> out(4 * x.size());
  for (std::size_t r = 0; r < x.size(); ++r) {
    out[4 * r] = x[r].w;
    out[4 * r + 1] = x[r].x;
    out[4 * r + 2] = x[r].y;
    out[4 * r + 3] = x[r].z;
  }
  return out;
}

QVector from_real(std::span<const double> x) {
  QVector out(x.size() / 4);
  for (std::size_t r = 0; r < out.size(); ++r) {
    out[r] = {x[4 * r], x[4 * r + 1], x[4 * r + 2], x[4 * r + 3]};
  }
  return out;
}

std::vector<Component> components(const QMatrix& t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      if (t(r, c) != Quaternion{} || t(c, r) != Quaternion{}) {
        const std::size_t a = find(r);
        const std::size_t b = find(c);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  std::vector<Component> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = find(v);
    if (slot[root] == n) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].indices.push_back(v);
  }
  for (auto& c : out) c.block = principal_submatrix(t, c.indices);
  return out;
}

std::vector<Quaternion> nr_sample(const QMatrix& t, std::size_t m, std::uint64_t seed) {
  if (m == 0) throw DomainError("nr_sample: sample count must be positive");
  const std::size_t n = t.size();
  if (n == 0) throw DimensionError("nr_sample: empty matrix");
  const std::vector<Component> comps = components(t);
  std::vector<Quaternion> out(m);
  const std::size_t chunks = (m + kSampleChunk - 1) / kSampleChunk;
  parallel_chunks(chunks, [&](std::size_t chunk) {
    Rng rng = make_rng(seed, "nr_sample", chunk);
    const std::size_t begin = chunk * kSampleChunk;
    const std::size_t end = std::min(m, begin + kSampleChunk);
    QVector part;
    for (std::size_t s = begin; s < end; ++s) {
      const QVector x = random_unit_vector(n, rng);
      Quaternion v;
      for (const auto& c : comps) {
        part.resize(c.indices.size());
        for (std::size_t r = 0; r < part.size(); ++r) part[r] = x[c.indices[r]];
        v += quadratic_value(c.block, part);
      }
      out[s] = v;
    }
  });
  return out;
}

std::vector<double> angle_grid(std::size_t k) {
  if (k < 1) throw DomainError("angle_grid: need at least one interval");
  std::vector<double> out(k + 1);
  for (std::size_t t = 0; t <= k; ++t) {
    out[t] = std::numbers::pi * static_cast<double>(t) / static_cast<double>(k);
  }
  out[k] = std::numbers::pi;
  return out;
}

Polygon diagonal_upper_bild(std::span<const Quaternion> d) {
  if (d.empty()) throw DimensionError("diagonal_upper_bild: empty diagonal");
  std::vector<Point2> pts;
  for (const auto& q : d) {
    const SimilaritySphere s = csim(q);
    pts.push_back({s.a, s.b});
  }
  std::sort(pts.begin(), pts.end(), [](Point2 p, Point2 q) {
    return p.a != q.a ? p.a < q.a : p.b < q.b;
  });
  // A repeated entry cancels against itself.
  const std::size_t count = pts.size();
  for (std::size_t u = 0; u + 1 < count; ++u) {
    if (pts[u] == pts[u + 1] && pts[u].b > 0.0) pts.push_back({pts[u].a, 0.0});
  }
  std::sort(pts.begin(), pts.end(), [](Point2 p, Point2 q) {
    return p.a != q.a ? p.a < q.a : p.b < q.b;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t base = pts.size();
  // t p + (1 - t) p' with antiparallel imaginary parts vanishes in the
  // imaginary coordinate at t = b' / (b + b').
  for (std::size_t u = 0; u < base; ++u)
    for (std::size_t v = u + 1; v < base; ++v) {
      const double bu = pts[u].b;
      const double bv = pts[v].b;
      if (bu + bv <= 0.0) continue;
      const double t = bv / (bu + bv);
      pts.push_back({t * pts[u].a + (1.0 - t) * pts[v].a, 0.0});
    }
  return convex_hull(pts);
}

namespace {

bool is_scalar(const Component& c) { return c.indices.size() == 1; }

struct DenseForms {
  std::size_t component = 0;
  QuadraticForms forms;
  double scale = 0.0;  // max Frobenius norm of the forms
};

double form_scale(const QuadraticForms& f) {
  double s = 0.0;
  for (const auto& m : f.f) s = std::max(s, m.frobenius());
  return s;
}

SupportPoint dense_support(const QuadraticForms& forms, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const RealMatrix m = c * forms.f[0] + s * forms.f[1];
  auto [lambda, vec] = sym_eig_max_vector(m);
  const Quaternion q = forms.value(vec);
  const SimilaritySphere sp = csim(q);
  return {theta, lambda, {sp.a, sp.b}};
}

SupportPoint scalar_support(const Quaternion& d, double theta) {
  const SimilaritySphere sp = csim(d);
  return {theta, std::cos(theta) * sp.a + std::sin(theta) * sp.b, {sp.a, sp.b}};
}

struct Context {
  std::vector<Component> comps;
  std::vector<DenseForms> dense;

  explicit Context(const QMatrix& t) : comps(components(t)) {
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (is_scalar(comps[c])) continue;
      DenseForms d{c, QuadraticForms::of(comps[c].block), 0.0};
      d.scale = form_scale(d.forms);
      dense.push_back(std::move(d));
    }
  }

  /// Support per component; entry c pairs with comps[c].
  std::vector<SupportPoint> component_supports(double theta) const {
    std::vector<SupportPoint> out(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (is_scalar(comps[c])) out[c] = scalar_support(comps[c].block(0, 0), theta);
    }
    for (const auto& d : dense) out[d.component] = dense_support(d.forms, theta);
    return out;
  }

  SupportPoint support(double theta) const {
    const std::vector<SupportPoint> per = component_supports(theta);
    SupportPoint best = per.front();
    for (const auto& s : per) {
      if (s.value > best.value) best = s;
    }
    return best;
  }
};

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw DomainError("upper_bild_support: angle must lie in [0, pi]");
  }
}

// Local ascent on the unit sphere of R^d for f(X) = ca a(X) + cb b(X) with
// a the real coordinate and b the imaginary modulus of the form value.
struct Ascent {
  const QuadraticForms& forms;
  double ca;
  double cb;

  struct Eval {
    double f = 0.0;
    Quaternion q;
    std::vector<double> grad;
  };

  Eval eval(const std::vector<double>& x, bool with_grad) const {
    Eval e;
    std::array<std::vector<double>, 4> fx;
    double c[4];
    for (int k = 0; k < 4; ++k) {
      fx[k] = multiply(forms.f[k], x);
      c[k] = std::inner_product(fx[k].begin(), fx[k].end(), x.begin(), 0.0);
    }
    e.q = {c[0], c[1], c[2], c[3]};
    const double b = abs_im(e.q);
    e.f = ca * c[0] + cb * b;
    if (!with_grad) return e;
    e.grad.assign(x.size(), 0.0);
    for (std::size_t r = 0; r < x.size(); ++r) e.grad[r] = 2.0 * ca * fx[0][r];
    if (b > 1e-14) {
      for (int k = 1; k < 4; ++k) {
        const double w = 2.0 * cb * c[k] / b;
        for (std::size_t r = 0; r < x.size(); ++r) e.grad[r] += w * fx[k][r];
      }
    }
    // Project onto the tangent space of the sphere.
    const double gx = std::inner_product(e.grad.begin(), e.grad.end(), x.begin(), 0.0);
    for (std::size_t r = 0; r < x.size(); ++r) e.grad[r] -= gx * x[r];
    return e;
  }

  std::vector<double> run(std::vector<double> x, std::size_t iterations, double scale) const {
    double eta = 0.5 / (1.0 + scale);
    Eval cur = eval(x, true);
    std::vector<double> trial(x.size());
    for (std::size_t it = 0; it < iterations; ++it) {
      const double g2 = std::inner_product(cur.grad.begin(), cur.grad.end(), cur.grad.begin(), 0.0);
      if (g2 < 1e-24) break;
      bool accepted = false;
      while (eta > 1e-14) {
        for (std::size_t r = 0; r < x.size(); ++r) trial[r] = x[r] + eta * cur.grad[r];
        const double nt = std::sqrt(std::inner_product(trial.begin(), trial.end(), trial.begin(), 0.0));
        for (auto& v : trial) v /= nt;
        const Eval next = eval(trial, false);
        if (next.f >= cur.f + 1e-4 * eta * g2) {
          x = trial;
          cur = eval(x, true);
          eta *= 1.5;
          accepted = true;
          break;
        }
        eta *= 0.5;
      }
      if (!accepted) break;
    }
    return x;
  }
};

// Gauss-Newton on the sphere driving the imaginary coordinates to zero.
std::optional<std::vector<double>> polish_real(const QuadraticForms& forms, std::vector<double> x,
                                               double tolerance) {
  for (int it = 0; it < 60; ++it) {
    std::array<std::vector<double>, 4> fx;
    double c[4];
    for (int k = 0; k < 4; ++k) {
      fx[k] = multiply(forms.f[k], x);
      c[k] = std::inner_product(fx[k].begin(), fx[k].end(), x.begin(), 0.0);
    }
    const double b = std::sqrt(c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
    if (b <= tolerance) return x;
    // Rows of J: tangent gradients 2 F_k x.
    std::array<std::vector<double>, 3> j;
    for (int k = 0; k < 3; ++k) {
      j[k] = fx[k + 1];
      for (auto& v : j[k]) v *= 2.0;
      const double p = std::inner_product(j[k].begin(), j[k].end(), x.begin(), 0.0);
      for (std::size_t r = 0; r < x.size(); ++r) j[k][r] -= p * x[r];
    }
    double g[3][3];
    for (int a = 0; a < 3; ++a)
      for (int bb = 0; bb < 3; ++bb)
        g[a][bb] = std::inner_product(j[a].begin(), j[a].end(), j[bb].begin(), 0.0);
    const double reg = 1e-14 * (1.0 + g[0][0] + g[1][1] + g[2][2]);
    for (int a = 0; a < 3; ++a) g[a][a] += reg;
    // Solve G y = v by Cramer's rule (3 x 3, SPD).
    const double v[3] = {c[1], c[2], c[3]};
    auto det3 = [](const double m[3][3]) {
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    const double det = det3(g);
    if (!(std::fabs(det) > 0.0)) return std::nullopt;
    double y[3];
    for (int col = 0; col < 3; ++col) {
      double m[3][3];
      for (int a = 0; a < 3; ++a)
        for (int bb = 0; bb < 3; ++bb) m[a][bb] = bb == col ? v[a] : g[a][bb];
      y[col] = det3(m) / det;
    }
    for (std::size_t r = 0; r < x.size(); ++r) {
      x[r] -= y[0] * j[0][r] + y[1] * j[1][r] + y[2] * j[2][r];
    }
    const double nx = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    for (auto& e : x) e /= nx;
  }
  return std::nullopt;
}

std::vector<double> random_real_unit(std::size_t d, Rng& rng) {
  return to_real(random_unit_vector(d / 4, rng));
}

// Refined points for one dense component and one objective direction.
std::vector<Point2> refine(const DenseForms& d, double ca, double cb, bool polish,
                           const BildOptions& options, std::uint64_t stream) {
  Rng rng = make_rng(options.seed, "refine", stream);
  const std::size_t dim = d.forms.f[0].rows();
  const Ascent ascent{d.forms, ca, cb};
  std::vector<std::pair<double, std::vector<double>>> starts;
  for (std::size_t s = 0; s < 4 * options.refine_starts; ++s) {
    std::vector<double> x = random_real_unit(dim, rng);
    const double f = ascent.eval(x, false).f;
    starts.emplace_back(f, std::move(x));
  }
  std::stable_sort(starts.begin(), starts.end(),
                   [](const auto& p, const auto& q) { return p.first > q.first; });
  starts.resize(std::min(starts.size(), options.refine_starts));
  std::vector<Point2> out;
  for (auto& [f, x0] : starts) {
    std::vector<double> x = ascent.run(std::move(x0), options.refine_iterations, d.scale);
    Quaternion q = d.forms.value(x);
    if (polish && abs_im(q) < 1e-2 * (1.0 + d.scale)) {
      if (auto p = polish_real(d.forms, x, 1e-12 * (1.0 + d.scale))) q = d.forms.value(*p);
    }
    const SimilaritySphere sp = csim(q);
    out.push_back({sp.a, sp.b});
  }
  return out;
}

std::vector<Point2> to_points(std::span<const Quaternion> values) {
  std::vector<Point2> out;
  out.reserve(values.size());
  for (const auto& q : values) {
    const SimilaritySphere s = csim(q);
    out.push_back({s.a, s.b});
  }
  return out;
}

}  // namespace

double upper_bild_support(const QMatrix& t, double theta) {
  return upper_bild_support_point(t, theta).value;
}

SupportPoint upper_bild_support_point(const QMatrix& t, double theta) {
  check_theta(theta);
  if (t.size() == 0) throw DimensionError("upper_bild_support: empty matrix");
  return Context(t).support(theta);
}

BildRegion upper_bild(const QMatrix& t, const BildOptions& options) {
  if (options.samples < 1) throw DomainError("upper_bild: sample count must be positive");
  if (options.angles < 3) throw DomainError("upper_bild: need at least 3 angles");
  if (t.size() == 0) throw DimensionError("upper_bild: empty matrix");
  const Context ctx(t);
  const double tnorm = frobenius(t);
  const std::vector<double> thetas = angle_grid(options.angles);

  BildRegion region;
  region.exact = ctx.dense.empty();

  // Support values and attaining points, per component.
  std::vector<std::vector<SupportPoint>> per_angle(thetas.size());
  parallel_chunks(thetas.size(),
                  [&](std::size_t a) { per_angle[a] = ctx.component_supports(thetas[a]); });
  std::vector<std::vector<Point2>> comp_points(ctx.comps.size());
  for (std::size_t a = 0; a < thetas.size(); ++a) {
    SupportPoint best = per_angle[a].front();
    for (std::size_t c = 0; c < ctx.comps.size(); ++c) {
      const SupportPoint& s = per_angle[a][c];
      comp_points[c].push_back(s.point);
      if (s.value > best.value) best = s;
    }
    region.supports.push_back(best);
  }

  // Uniform samples of the whole matrix.
  region.inner_points = to_points(nr_sample(t, options.samples, options.seed));

  // Dense components: extra per-component samples and local refinement toward
  // the lower boundary, which the supports cannot see.
  if (!ctx.dense.empty()) {
    if (ctx.comps.size() > 1) {
      const std::size_t per = std::max<std::size_t>(1, options.samples / ctx.dense.size());
      for (const auto& d : ctx.dense) {
        const auto pts = to_points(
            nr_sample(ctx.comps[d.component].block, per, child_seed(options.seed, "component", d.component)));
        comp_points[d.component].insert(comp_points[d.component].end(), pts.begin(), pts.end());
      }
    }
    struct Task {
      std::size_t dense;
      double ca;
      double cb;
      bool polish;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < ctx.dense.size(); ++i) {
      const std::size_t dirs = options.refine_directions;
      for (std::size_t s = 0; s < dirs; ++s) {
        const double phi = std::numbers::pi * (1.0 + (static_cast<double>(s) + 0.5) / static_cast<double>(dirs));
        tasks.push_back({i, std::cos(phi), std::sin(phi), false});
      }
      const double mu = 10.0 * (1.0 + ctx.dense[i].scale);
      tasks.push_back({i, 1.0, -mu, true});
      tasks.push_back({i, -1.0, -mu, true});
    }
    std::vector<std::vector<Point2>> refined(tasks.size());
    parallel_chunks(tasks.size(), [&](std::size_t k) {
      const Task& task = tasks[k];
      refined[k] = refine(ctx.dense[task.dense], task.ca, task.cb, task.polish, options,
                          ctx.dense[task.dense].component * 4096 + k);
    });
    for (std::size_t k = 0; k < tasks.size(); ++k) {
      auto& dst = comp_points[ctx.dense[tasks[k].dense].component];
      dst.insert(dst.end(), refined[k].begin(), refined[k].end());
    }
  }

  // Cancellation points between different components.
  std::vector<Polygon> comp_hulls(ctx.comps.size());
  for (std::size_t c = 0; c < ctx.comps.size(); ++c) {
    if (is_scalar(ctx.comps[c])) {
      const SimilaritySphere s = csim(ctx.comps[c].block(0, 0));
      comp_hulls[c] = {{s.a, s.b}};
    } else {
      comp_hulls[c] = convex_hull(comp_points[c]);
    }
  }
  if (region.exact) {
    std::vector<Quaternion> diag;
    for (const auto& c : ctx.comps) diag.push_back(c.block(0, 0));
    const Polygon exact = diagonal_upper_bild(diag);
    region.inner_points.insert(region.inner_points.end(), exact.begin(), exact.end());
  } else if (ctx.comps.size() > 1) {
    std::vector<Point2> verts;
    std::vector<std::size_t> owner;
    for (std::size_t c = 0; c < comp_hulls.size(); ++c) {
      for (const auto& p : comp_hulls[c]) {
        verts.push_back(p);
        owner.push_back(c);
      }
    }
    std::size_t stride = 1;
    while ((verts.size() / stride) * (verts.size() / stride) / 2 > options.max_pairs) ++stride;
    for (std::size_t u = 0; u < verts.size(); u += stride)
      for (std::size_t v = u + stride; v < verts.size(); v += stride) {
        if (owner[u] == owner[v]) continue;
        const double bu = verts[u].b;
        const double bv = verts[v].b;
        if (bu + bv <= 0.0) continue;
        const double w = bv / (bu + bv);
        region.inner_points.push_back({w * verts[u].a + (1.0 - w) * verts[v].a, 0.0});
      }
  }
  for (std::size_t c = 0; c < ctx.comps.size(); ++c) {
    region.inner_points.insert(region.inner_points.end(), comp_points[c].begin(), comp_points[c].end());
  }
  region.inner_hull = convex_hull(region.inner_points);

  // Outer polygon: supports on the grid, b >= 0 and |a| <= |T|_F.
  const double pad = 1e-12 * (1.0 + tnorm);
  std::vector<HalfPlane> planes;
  for (const auto& s : region.supports) {
    planes.push_back({{std::cos(s.theta), std::sin(s.theta)}, s.value + pad});
  }
  planes.push_back({{0.0, -1.0}, 0.0});
  planes.push_back({{1.0, 0.0}, tnorm + pad});
  planes.push_back({{-1.0, 0.0}, tnorm + pad});
  if (region.exact) {
    const Polygon& hull = region.inner_hull;
    if (hull.size() >= 3) {
      for (std::size_t e = 0; e < hull.size(); ++e) {
        const Point2 p = hull[e];
        const Point2 q = hull[(e + 1) % hull.size()];
        Point2 n{q.b - p.b, p.a - q.a};
        const double len = std::hypot(n.a, n.b);
        n = (1.0 / len) * n;
        planes.push_back({n, dot(n, p) + pad});
      }
    }
  }
  const double box = tnorm + 1.0;
  if (region.exact && region.inner_hull.size() < 3) {
    // A point or a segment: the exact region is its own outer bound.
    region.outer_polygon = region.inner_hull;
  } else {
    region.outer_polygon = intersect_halfplanes(planes, {-box, -1.0}, {box, box});
  }
  if (region.outer_polygon.empty()) {
    throw NumericalError("upper_bild: outer polygon is empty");
  }
  region.hausdorff_gap = hausdorff(region.inner_hull, region.outer_polygon);
  for (const auto& s : region.supports) {
    const double inner = support(region.inner_hull, {std::cos(s.theta), std::sin(s.theta)});
    region.support_gap = std::max(region.support_gap, s.value - inner);
  }
  return region;
}

Interval real_section(const BildRegion& region) {
  const Polygon axis = clip(region.inner_hull, {{0.0, 1.0}, 1e-6});
  if (axis.empty()) {
    throw NumericalError("real_section: no sampled value within 1e-6 of the real axis");
  }
  Interval out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& p : axis) {
    out.lo = std::min(out.lo, p.a);
    out.hi = std::max(out.hi, p.a);
  }
  return out;
}

Interval real_section(const QMatrix& t, const BildOptions& options) {
  return real_section(upper_bild(t, options));
}

}  // namespace qnr
