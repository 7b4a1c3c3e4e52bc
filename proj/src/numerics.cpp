// Quad-precision numerics; see numerics.hpp for the contracts.

#include "spectral/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

namespace spectral {

namespace {

const Quad kPi = M_PIq;
const Quad kTwoPi = 2.0q * M_PIq;

QComplex qc(Quad re, Quad im) {
  QComplex z;
  __real__ z = re;
  __imag__ z = im;
  return z;
}

QComplex eval_poly(const QPoly& p, QComplex z) {
  QComplex acc = qc(0, 0);
  for (int k = p.degree(); k >= 0; --k) acc = acc * z + qc(p[k].to_quad(), 0);
  return acc;
}

long round_to_long(Quad x) {
  return (long)llrintq(x);
}

// ---- dilogarithm ----

QComplex li2_series(QComplex z) {
  QComplex term = z, sum = z;
  for (long n = 2; n < 800; ++n) {
    term *= z;
    const QComplex add = term / qc((Quad)n * (Quad)n, 0);
    sum += add;
    if (cabsq(add) < 1e-40q * (cabsq(sum) + 1e-38q)) return sum;
  }
  throw NumericFailure("dilogarithm: series did not converge");
}

QComplex li2_rec(QComplex z, int depth) {
  if (depth > 24)
    throw NumericFailure("dilogarithm: reduction did not terminate");
  const Quad pi2_6 = kPi * kPi / 6.0q;
  const Quad r = cabsq(z);
  if (r < 1e-38q) return z;
  if (r > 1.1q) {
    const QComplex w = li2_rec(1.0q / z, depth + 1);
    const QComplex lz = clogq(-z);
    return -w - qc(pi2_6, 0) - 0.5q * lz * lz;
  }
  if (crealq(z) > 0.6q) {
    if (cabsq(1.0q - z) < 1e-38q) return qc(pi2_6, 0);
    const QComplex w = li2_rec(1.0q - z, depth + 1);
    return qc(pi2_6, 0) - clogq(z) * clogq(1.0q - z) - w;
  }
  if (r > 0.6q) {
    const QComplex zl = z / (z - 1.0q);
    if (cabsq(zl) < 0.85q) {
      const QComplex w = li2_rec(zl, depth + 1);
      const QComplex l1 = clogq(1.0q - z);
      return -w - 0.5q * l1 * l1;
    }
    // Near the hexagonal points |z| = |1 - z| = 1 no single step
    // contracts; split through the square.
    return 0.5q * li2_rec(z * z, depth + 1) - li2_rec(-z, depth + 1);
  }
  return li2_series(z);
}

// ---- Gauss-Legendre nodes ----

struct GaussRule {
  Quad x[16];
  Quad w[16];
};

void legendre_16(Quad x, Quad* p, Quad* dp) {
  Quad p0 = 1.0q, p1 = x;
  for (int k = 2; k <= 16; ++k) {
    const Quad p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  *p = p1;
  *dp = 16.0q * (x * p1 - p0) / (x * x - 1.0q);
}

const GaussRule& gauss16() {
  static const GaussRule rule = [] {
    GaussRule g;
    for (int i = 0; i < 8; ++i) {
      Quad x = cosq(kPi * (i + 0.75q) / 16.5q);
      Quad p, dp;
      for (int it = 0; it < 80; ++it) {
        legendre_16(x, &p, &dp);
        const Quad dx = p / dp;
        x -= dx;
        if (fabsq(dx) < 1e-36q) break;
      }
      legendre_16(x, &p, &dp);
      const Quad w = 2.0q / ((1.0q - x * x) * dp * dp);
      g.x[i] = x;
      g.w[i] = w;
      g.x[15 - i] = -x;
      g.w[15 - i] = w;
    }
    return g;
  }();
  return rule;
}

// ---- path segments and branch tracking ----

struct Segment {
  PathPlane plane;
  QComplex a, b;
  bool sqrt_start = false;  // local parameter runs as t = s^2
};

void segment_point(const Segment& seg, Quad s, QComplex* X, QComplex* du_ds) {
  const Quad t = seg.sqrt_start ? s * s : s;
  const Quad dt_ds = seg.sqrt_start ? 2.0q * s : 1.0q;
  const QComplex d = seg.b - seg.a;
  const QComplex z = seg.a + t * d;
  if (seg.plane == PathPlane::U) {
    *X = cexpq(2.0q * z);
    *du_ds = d * dt_ds;
  } else {
    *X = z;
    *du_ds = d * dt_ds / (2.0q * z);
  }
}

// Dense trace of (sqrt(S), ln l) along the whole path; arbitrary points are
// then resolved against the nearest traced sample, which keeps the branch
// choice well conditioned for the adaptive quadrature below.
class PhiTracer {
 public:
  PhiTracer(const ASpectralCurve& curve, std::vector<Segment> segs,
            int sheet, int steps)
      : curve_(curve), segs_(std::move(segs)), steps_(steps) {
    grid_.resize(segs_.size());
    bool seeded = false;
    QComplex rho_prev = qc(0, 0), v_prev = qc(0, 0);
    for (size_t si = 0; si < segs_.size(); ++si) {
      grid_[si].resize(steps_ + 1);
      for (int j = 0; j <= steps_; ++j) {
        const Quad s = (Quad)j / (Quad)steps_;
        QComplex X, du;
        segment_point(segs_[si], s, &X, &du);
        QComplex rho = csqrtq(eval_poly(curve_.S, X));
        const bool degenerate = cabsq(rho) < 1e-25q;
        if (degenerate && !(si == 0 && j == 0))
          throw NumericFailure(
              "integrate_phi: path runs through a ramification point");
        if (!seeded) {
          if (sheet < 0) rho = -rho;
          if (!degenerate) seeded = true;
        } else if (cabsq(rho - rho_prev) > cabsq(rho + rho_prev)) {
          rho = -rho;
        }
        QComplex v = clogq(branch_l(X, rho));
        if (!(si == 0 && j == 0))
          v += qc(0, kTwoPi) *
               (Quad)round_to_long(cimagq(v_prev - v) / kTwoPi);
        grid_[si][j] = {rho, v};
        rho_prev = rho;
        v_prev = v;
      }
    }
  }

  QComplex l_at(size_t si, int j) const {
    QComplex X, du;
    segment_point(segs_[si], (Quad)j / (Quad)steps_, &X, &du);
    return branch_l(X, grid_[si][j].rho);
  }

  // v at arbitrary local parameter s of segment si.
  QComplex v_of(size_t si, Quad s, QComplex X) const {
    int j = (int)(s * steps_);
    j = std::max(0, std::min(j, steps_));
    const Sample& ref = grid_[si][j];
    QComplex rho = csqrtq(eval_poly(curve_.S, X));
    QComplex rho_pred = ref.rho;
    if (si == 0 && j == 0 && segs_[0].sqrt_start) {
      // The traced sample at s = 0 sits on the ramification point where
      // both signs coincide; predict by the linear model rho ~ C s.
      rho_pred = grid_[0][1].rho * (s * steps_);
      if (cabsq(rho_pred) < 1e-30q) return grid_[0][0].v;
    }
    if (cabsq(rho - rho_pred) > cabsq(rho + rho_pred)) rho = -rho;
    QComplex v = clogq(branch_l(X, rho));
    v += qc(0, kTwoPi) * (Quad)round_to_long(cimagq(ref.v - v) / kTwoPi);
    return v;
  }

  const Segment& segment(size_t si) const { return segs_[si]; }
  size_t segment_count() const { return segs_.size(); }
  QComplex v_first() const { return grid_.front().front().v; }
  QComplex v_last() const { return grid_.back().back().v; }

 private:
  struct Sample {
    QComplex rho, v;
  };

  QComplex branch_l(QComplex X, QComplex rho) const {
    return (eval_poly(curve_.P1, X) + eval_poly(curve_.P2, X) * rho) /
           eval_poly(curve_.R, X);
  }

  const ASpectralCurve& curve_;
  std::vector<Segment> segs_;
  int steps_;
  std::vector<std::vector<Sample>> grid_;
};

QComplex gl_panel(const PhiTracer& tracer, size_t si, Quad a, Quad b) {
  const GaussRule& g = gauss16();
  const Quad mid = 0.5q * (a + b), half = 0.5q * (b - a);
  QComplex acc = qc(0, 0);
  for (int i = 0; i < 16; ++i) {
    const Quad s = mid + half * g.x[i];
    QComplex X, du;
    segment_point(tracer.segment(si), s, &X, &du);
    acc += g.w[i] * (tracer.v_of(si, s, X) * du);
  }
  return acc * half;
}

void adapt(const PhiTracer& tracer, size_t si, Quad a, Quad b,
           QComplex whole, int depth, const NumericConfig& cfg,
           QComplex* acc, Quad* err) {
  const Quad mid = 0.5q * (a + b);
  const QComplex left = gl_panel(tracer, si, a, mid);
  const QComplex right = gl_panel(tracer, si, mid, b);
  const Quad diff = cabsq(left + right - whole);
  const Quad target = cfg.tolerance * 1e-4q * (b - a);
  if (diff < target || depth >= cfg.max_depth) {
    *acc += left + right;
    *err += diff;
    return;
  }
  adapt(tracer, si, a, mid, left, depth + 1, cfg, acc, err);
  adapt(tracer, si, mid, b, right, depth + 1, cfg, acc, err);
}

std::vector<Segment> make_segments(PathPlane plane,
                                   const std::vector<QComplex>& pts,
                                   bool closed, const ASpectralCurve& curve) {
  if (pts.size() < 2)
    throw NumericFailure("integrate_phi: need at least two waypoints");
  std::vector<Segment> segs;
  const size_t n = closed ? pts.size() : pts.size() - 1;
  for (size_t i = 0; i < n; ++i) {
    Segment s;
    s.plane = plane;
    s.a = pts[i];
    s.b = pts[(i + 1) % pts.size()];
    segs.push_back(s);
  }
  QComplex X0, du;
  segment_point(segs[0], 0.0q, &X0, &du);
  if (cabsq(eval_poly(curve.S, X0)) < 1e-25q) {
    if (closed)
      throw NumericFailure(
          "period_checks: loop starts on a ramification point");
    segs[0].sqrt_start = true;
  }
  return segs;
}

PathResult run_path(const ASpectralCurve& curve, PathPlane plane,
                    const std::vector<QComplex>& pts, bool closed, int sheet,
                    const NumericConfig& cfg) {
  validate(cfg);
  PhiTracer tracer(curve, make_segments(plane, pts, closed, curve), sheet,
                   cfg.trace_steps);
  PathResult out;
  out.integral = qc(0, 0);
  out.error = 0;
  for (size_t si = 0; si < tracer.segment_count(); ++si) {
    const QComplex whole = gl_panel(tracer, si, 0.0q, 1.0q);
    adapt(tracer, si, 0.0q, 1.0q, whole, 0, cfg, &out.integral, &out.error);
  }
  if (out.error > cfg.tolerance * 1e-2q)
    throw NumericFailure("integrate_phi: quadrature failed to converge");
  out.l_start = tracer.l_at(0, 0);
  out.l_end = tracer.l_at(tracer.segment_count() - 1, cfg.trace_steps);
  out.v_start = tracer.v_first();
  out.v_end = tracer.v_last();
  return out;
}

}  // namespace

void validate(const NumericConfig& cfg) {
  if (cfg.digits < 10 || cfg.digits > 33)
    throw NumericFailure("numeric config: digits outside [10, 33]");
  if (cfg.tolerance < powq(10.0q, (Quad)(4 - cfg.digits)))
    throw NumericFailure("numeric config: tolerance below 10^(4-digits)");
  if (cfg.trace_steps < 64)
    throw NumericFailure("numeric config: trace_steps below 64");
  if (cfg.max_depth < 4)
    throw NumericFailure("numeric config: max_depth below 4");
}

QComplex dilogarithm(QComplex z) { return li2_rec(z, 0); }

Quad bloch_wigner(QComplex z) {
  // D vanishes identically on the real axis; shortcut it so the branch
  // cuts of the dilogarithm on [1, inf) never show.
  if (fabsq(cimagq(z)) < 1e-36q) return 0.0q;
  if (cabsq(z) < 1e-36q || cabsq(z - 1.0q) < 1e-36q) return 0.0q;
  return cimagq(dilogarithm(z)) + cargq(1.0q - z) * logq(cabsq(z));
}

Quad lobachevsky(Quad x) {
  // Reduce modulo pi: Lambda is pi-periodic and odd.
  const Quad r = x - kPi * (Quad)round_to_long(x / kPi);
  return 0.5q * bloch_wigner(cexpq(qc(0, 2.0q * r)));
}

PathResult integrate_phi(const ASpectralCurve& curve, PathPlane plane,
                         const std::vector<QComplex>& waypoints, int sheet,
                         const NumericConfig& cfg) {
  return run_path(curve, plane, waypoints, false, sheet, cfg);
}

QComplex leading_asymptotic(const ASpectralCurve& curve,
                            const std::vector<QComplex>& u_waypoints,
                            const NumericConfig& cfg) {
  const PathResult plus =
      run_path(curve, PathPlane::U, u_waypoints, false, +1, cfg);
  if (cimagq(plus.integral) > 0) return plus.integral;
  const PathResult minus =
      run_path(curve, PathPlane::U, u_waypoints, false, -1, cfg);
  if (cimagq(minus.integral) > 0) return minus.integral;
  throw NumericFailure(
      "leading_asymptotic: neither determination has positive volume");
}

PeriodReport period_checks(const ASpectralCurve& curve,
                           const std::vector<QComplex>& x_loop,
                           const NumericConfig& cfg) {
  const PathResult r = run_path(curve, PathPlane::X, x_loop, true, +1, cfg);
  PeriodReport rep;
  rep.closure_error = cabsq(r.l_end - r.l_start);
  if (rep.closure_error > 1e-15q)
    throw NumericFailure("period_checks: branch does not close up");

  const QComplex drift = (r.v_end - r.v_start) / qc(0, kTwoPi);
  const long k = round_to_long(crealq(drift));
  if (cabsq(drift - qc((Quad)k, 0)) > 1e-15q)
    throw NumericFailure("period_checks: ln l drift is not 2 pi i Z");
  rep.l_winding = k;

  const QComplex u0 = 0.5q * clogq(x_loop.front());
  rep.boutroux_residual =
      fabsq(cimagq(r.integral) - kTwoPi * (Quad)k * crealq(u0));

  bool crosses = false;
  for (size_t i = 0; i < x_loop.size(); ++i) {
    const QComplex a = x_loop[i], b = x_loop[(i + 1) % x_loop.size()];
    const Quad ia = cimagq(a), ib = cimagq(b);
    if ((ia <= 0 && ib >= 0) || (ia >= 0 && ib <= 0)) {
      const Quad span = ib - ia;
      const Quad t = fabsq(span) < 1e-30q ? 0.5q : -ia / span;
      if (crealq(a) + t * (crealq(b) - crealq(a)) > 0) crosses = true;
    }
  }
  rep.quantization_applies = (k % 2 == 0) || crosses;
  const Quad re_canon = crealq(r.integral) + kTwoPi * (Quad)k * cimagq(u0);
  const Quad lattice = 2.0q * kPi * kPi / (Quad)curve.component.torsion;
  rep.quantization_multiple = round_to_long(re_canon / lattice);
  rep.quantization_residual =
      fabsq(re_canon - (Quad)rep.quantization_multiple * lattice);
  return rep;
}

std::vector<QComplex> ellipse_loop(double cx, double cy, double rx,
                                   double ry, int vertices) {
  std::vector<QComplex> pts;
  for (int i = 0; i < vertices; ++i) {
    const Quad th = kTwoPi * (Quad)i / (Quad)vertices;
    pts.push_back(qc((Quad)cx + (Quad)rx * cosq(th),
                     (Quad)cy + (Quad)ry * sinq(th)));
  }
  return pts;
}

std::vector<std::vector<QComplex>> preset_period_loops(
    const ASpectralCurve& curve) {
  if (curve.component.label == "4_1")
    return {ellipse_loop(1.5, 0, 1.3, 1.3, 24),
            ellipse_loop(-0.5, 0, 0.4, 1.2, 32)};
  if (curve.component.label == "l2r")
    return {ellipse_loop(1.9, 0, 1.75, 1.75, 24),
            ellipse_loop(-0.91421356237309515, 0, 0.35, 0.65, 32)};
  throw std::invalid_argument("preset_period_loops: unknown component");
}

std::vector<QComplex> preset_volume_path(const ASpectralCurve& curve) {
  if (curve.component.label == "4_1") {
    // Ramification point X = e^{2 i pi / 3}; detour right of the second
    // complex ramification point and of the singular fibre X = -1.
    return {qc(0, kPi / 3.0q), qc(0.5q, kPi / 3.0q),
            qc(0.5q, kPi * 5.0q / 6.0q), qc(0, kPi)};
  }
  if (curve.component.label == "l2r") {
    // Ramification point on |X| = 1 in the upper half plane: the root of
    // X^2 - (1 - 2 sqrt(2)) X + 1 with positive imaginary part, at
    // argument theta = arccos((1 - 2 sqrt(2)) / 2).
    const Quad theta = acosq(0.5q * (1.0q - 2.0q * sqrtq(2.0q)));
    return {qc(0, theta / 2.0q), qc(0.4q, theta / 2.0q + 0.2q),
            qc(0.4q, 2.8q), qc(0, kPi)};
  }
  throw std::invalid_argument("preset_volume_path: unknown component");
}

Quad quadvalue_to_quad(const QuadValue& v) {
  if (v.discriminant() < 0)
    throw std::invalid_argument("quadvalue_to_quad: negative discriminant");
  return v.rational_coord().to_quad() +
         v.radical_coord().to_quad() * sqrtq((Quad)v.discriminant());
}

Quad cardano_value(const CardanoRealRoot& root) {
  const Quad a = root.ucube.rational_coord().to_quad();
  const Quad b = root.ucube.radical_coord().to_quad() *
                 sqrtq((Quad)(root.disc == 0 ? 1 : root.disc));
  return root.shift.to_quad() + cbrtq(a + b) + cbrtq(a - b);
}

Quad surd_imag_value(const ImaginaryCubicSurd& s) {
  const Quad radicand =
      ((Quad)s.cube_a + (Quad)s.cube_b * sqrtq((Quad)s.cube_d)) /
      (Quad)s.cube_den;
  const Quad A = cbrtq(radicand);
  return ((Quad)s.num / sqrtq((Quad)s.rad)) *
         (sqrtq(A) + (Quad)s.tail / sqrtq(A));
}

Quad fig8_state_sum_log(long N) {
  if (N < 1) throw std::invalid_argument("fig8_state_sum_log: N < 1");
  Quad sum = 1.0q, prod = 1.0q;
  for (long j = 1; j < N; ++j) {
    const Quad s = sinq(kPi * (Quad)j / (Quad)N);
    prod *= 4.0q * s * s;
    sum += prod;
  }
  return logq(sum);
}

}  // namespace spectral
