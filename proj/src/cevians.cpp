#include "ccg/cevians.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ccg/trig.hpp"

namespace ccg {

namespace {

template <PlaneGeometry Plane>
void require_inside(const typename Plane::Point& vertex, const typename Plane::Point& from,
                    const typename Plane::Point& to, const typename Plane::Point& O) {
  const auto edge = Plane::line(from, to);
  const double s_o = Plane::side(edge, O);
  const double s_v = Plane::side(edge, vertex);
  if (std::abs(s_o) <= kTolId) fail(ErrorKind::Degenerate, "O lies on a side of the triangle");
  if ((s_o > 0.0) != (s_v > 0.0)) {
    fail(ErrorKind::OutOfScope, "O lies outside the triangle; only interior cevians are supported");
  }
}

template <PlaneGeometry Plane>
typename Plane::Point foot(const typename Plane::Point& vertex, const typename Plane::Point& O,
                           const typename Plane::Point& from, const typename Plane::Point& to) {
  const auto hit = Plane::meet(Plane::line(vertex, O), Plane::line(from, to), O);
  if (!hit) fail(ErrorKind::Degenerate, "cevian does not meet the opposite side");
  return *hit;
}

template <PlaneGeometry Plane>
typename Plane::Point centroid_hint(const Triangle<Plane>& tri) {
  return Plane::combine({tri.A, tri.B, tri.C}, {1.0, 1.0, 1.0});
}

double relative_relation(double a, double b, double g) {
  const double prod = a * b * g;
  return (prod - (a + b + g + 2.0)) / (1.0 + std::abs(prod));
}

}  // namespace

template <PlaneGeometry Plane>
CevianFrame<Plane> cevian_frame(const Triangle<Plane>& tri, const typename Plane::Point& O) {
  check_triangle(tri);
  require_inside<Plane>(tri.A, tri.B, tri.C, O);
  require_inside<Plane>(tri.B, tri.C, tri.A, O);
  require_inside<Plane>(tri.C, tri.A, tri.B, O);

  CevianFrame<Plane> fr{tri, O, foot<Plane>(tri.A, O, tri.B, tri.C),
                        foot<Plane>(tri.B, O, tri.C, tri.A), foot<Plane>(tri.C, O, tri.A, tri.B), {}};
  RatioSumInput& len = fr.lengths;
  len.A_len = Plane::dist(tri.A, O);
  len.B_len = Plane::dist(tri.B, O);
  len.C_len = Plane::dist(tri.C, O);
  len.a_len = Plane::dist(O, fr.D);
  len.b_len = Plane::dist(O, fr.E);
  len.c_len = Plane::dist(O, fr.F);

  const auto f = [](double x) { return Plane::ratio_fn(x); };
  fr.alpha = f(len.A_len) / f(len.a_len);
  fr.beta = f(len.B_len) / f(len.b_len);
  fr.gamma = f(len.C_len) / f(len.c_len);

  fr.p = Plane::angle(O, tri.B, fr.F);
  fr.q = Plane::angle(O, tri.A, fr.F);
  fr.r = Plane::angle(O, tri.B, fr.D);
  fr.P = std::sin(fr.p) / f(len.A_len);
  fr.Q = std::sin(fr.q) / f(len.B_len);
  fr.R = std::sin(fr.r) / f(len.C_len);
  return fr;
}

template <PlaneGeometry Plane>
double containment_residual(const CevianFrame<Plane>& fr) {
  const auto& t = fr.tri;
  return std::max({std::abs(Plane::side(Plane::line(t.B, t.C), fr.D)),
                   std::abs(Plane::side(Plane::line(t.C, t.A), fr.E)),
                   std::abs(Plane::side(Plane::line(t.A, t.B), fr.F)),
                   std::abs(Plane::side(Plane::line(t.A, fr.D), fr.O)),
                   std::abs(Plane::side(Plane::line(t.B, fr.E), fr.O)),
                   std::abs(Plane::side(Plane::line(t.C, fr.F), fr.O))});
}

template <PlaneGeometry Plane>
EulerResidual euler_relation_residual(const CevianFrame<Plane>& fr) {
  const double prod = fr.alpha * fr.beta * fr.gamma;
  const auto f = [](double x) { return Plane::ratio_fn(x); };
  const RatioSumInput& l = fr.lengths;
  const double recip = f(l.a_len) / (f(l.A_len) + f(l.a_len)) +
                       f(l.b_len) / (f(l.B_len) + f(l.b_len)) +
                       f(l.c_len) / (f(l.C_len) + f(l.c_len));
  return EulerResidual{prod - (fr.alpha + fr.beta + fr.gamma + 2.0), recip - 1.0,
                       1.0 + std::abs(prod)};
}

double PqrReport::max_relative() const {
  return std::max({std::abs(gamma_eq), std::abs(alpha_eq), std::abs(beta_eq), std::abs(lemma)}) /
         scale;
}

template <PlaneGeometry Plane>
PqrReport pqr_system(const CevianFrame<Plane>& fr) {
  PqrReport out;
  out.P = fr.P;
  out.Q = fr.Q;
  out.R = fr.R;
  out.gamma_eq = fr.gamma * fr.R - (fr.P + fr.Q);
  out.alpha_eq = fr.alpha * fr.P - (fr.Q + fr.R);
  out.beta_eq = fr.beta * fr.Q - (fr.R + fr.P);
  out.lemma = std::sin(fr.r) - Plane::ratio_fn(fr.lengths.c_len) * (fr.P + fr.Q);
  out.scale = 1.0 + std::abs(fr.alpha * fr.P) + std::abs(fr.beta * fr.Q) +
              std::abs(fr.gamma * fr.R) + std::abs(fr.P) + std::abs(fr.Q) + std::abs(fr.R);
  return out;
}

template <PlaneGeometry Plane>
RatioTriple ratios_from_lengths(const RatioSumInput& in) {
  for (double len : {in.A_len, in.B_len, in.C_len, in.a_len, in.b_len, in.c_len}) {
    if (!(len > 0.0)) fail(ErrorKind::Range, "cevian lengths must be positive");
    if (len > Plane::max_length()) fail(ErrorKind::Range, "cevian length outside the working range");
  }
  const auto f = [](double x) { return Plane::ratio_fn(x); };
  RatioTriple t;
  t.alpha = f(in.A_len) / f(in.a_len);
  t.beta = f(in.B_len) / f(in.b_len);
  t.gamma = f(in.C_len) / f(in.c_len);
  t.relation = relative_relation(t.alpha, t.beta, t.gamma);
  return t;
}

template <PlaneGeometry Plane>
Construction<Plane> construct_from_ratios(const RatioSumInput& in) {
  Construction<Plane> out;
  out.ratios = ratios_from_lengths<Plane>(in);
  if (!(std::abs(out.ratios.relation) <= kTolConstruct)) {
    fail(ErrorKind::Infeasible,
         "relation residual " + std::to_string(out.ratios.relation) + " exceeds tolerance");
  }
  const auto f = [](double x) { return Plane::ratio_fn(x); };
  const double g = f(in.A_len) / (out.ratios.alpha + 1.0);
  const double h = f(in.B_len) / (out.ratios.beta + 1.0);
  const double i = f(in.C_len) / (out.ratios.gamma + 1.0);
  out.g = g;
  out.h = h;
  out.i = i;

  const double radicand = (g + h + i) * (g + h - i) * (i + g - h) * (h + i - g);
  if (!(radicand > 0.0)) {
    fail(ErrorKind::InfeasibleGeometry, "heron radicand is not positive");
  }
  out.delta = std::sqrt(radicand) / (2.0 * g * h * i);
  out.heron_area = out.delta * g * h * i / 2.0;

  const double two_m = 2.0 * out.heron_area;
  const double sin_p = two_m / (h * i);
  const double sin_q = two_m / (i * g);
  const double sin_r = two_m / (g * h);
  if (sin_p > 1.0 + kTolClamp || sin_q > 1.0 + kTolClamp || sin_r > 1.0 + kTolClamp) {
    fail(ErrorKind::InfeasibleGeometry, "sine bound: a recovered sine exceeds 1");
  }
  // The sines fix each angle up to its supplement; the cosine law of the
  // Euclidean triangle (g, h, i) picks the branch.
  out.p = std::atan2(sin_p, (h * h + i * i - g * g) / (2.0 * h * i));
  out.q = std::atan2(sin_q, (i * i + g * g - h * h) / (2.0 * i * g));
  out.r = std::atan2(sin_r, (g * g + h * h - i * i) / (2.0 * g * h));
  out.angle_sum_residual = out.p + out.q + out.r - kPi;

  out.O = Plane::origin();
  const typename Plane::Point A = Plane::polar(0.0, in.A_len);
  out.F = Plane::polar(out.q, in.c_len);
  const typename Plane::Point B = Plane::polar(out.q + out.p, in.B_len);
  out.D = Plane::polar(kPi, in.a_len);
  const typename Plane::Point C = Plane::polar(kPi + out.q, in.C_len);
  out.E = Plane::polar(kPi + out.q + out.p, in.b_len);
  out.tri = Triangle<Plane>{A, B, C};
  check_triangle(out.tri);

  out.containment = std::max({std::abs(Plane::side(Plane::line(B, C), out.D)),
                              std::abs(Plane::side(Plane::line(C, A), out.E)),
                              std::abs(Plane::side(Plane::line(A, B), out.F))});
  return out;
}

ProjectionReport projection_oracle(const CevianFrame<HyperbolicPlane>& fr) {
  ProjectionReport out;
  const HPoint& base = fr.O;
  const std::array<HPoint, 6> pts{fr.tri.A, fr.tri.B, fr.tri.C, fr.D, fr.E, fr.F};
  for (std::size_t k = 0; k < pts.size(); ++k) out.projected[k] = radial_project(base, pts[k]);

  const std::array<double, 3> hyper{fr.alpha, fr.beta, fr.gamma};
  for (std::size_t k = 0; k < 3; ++k) {
    const TangentPoint& vertex = out.projected[k];
    const TangentPoint& foot = out.projected[k + 3];
    out.euclid_ratios[k] = vertex.norm() / foot.norm();
    out.max_deviation = std::max(out.max_deviation, std::abs(out.euclid_ratios[k] - hyper[k]));
    // Vertex and foot must point in opposite directions from O.
    const double turn = (vertex.s * foot.t - vertex.t * foot.s) / (vertex.norm() * foot.norm());
    const double along = vertex.s * foot.s + vertex.t * foot.t;
    out.collinearity = std::max(out.collinearity, along < 0.0 ? std::abs(turn) : 1.0);
  }
  // Each projected foot lies on the projected opposite side.
  const auto on_line = [](const TangentPoint& a, const TangentPoint& b, const TangentPoint& x) {
    const double ux = b.s - a.s, uy = b.t - a.t;
    return std::abs(ux * (x.t - a.t) - uy * (x.s - a.s)) / std::hypot(ux, uy);
  };
  const auto& pr = out.projected;
  out.collinearity = std::max({out.collinearity, on_line(pr[1], pr[2], pr[3]),
                               on_line(pr[2], pr[0], pr[4]), on_line(pr[0], pr[1], pr[5])});
  out.euclid_relation =
      relative_relation(out.euclid_ratios[0], out.euclid_ratios[1], out.euclid_ratios[2]);
  return out;
}

template <PlaneGeometry Plane>
CevaReport ceva_product(const Triangle<Plane>& tri, const typename Plane::Point& D,
                        const typename Plane::Point& E, const typename Plane::Point& F) {
  check_triangle(tri);
  const auto on_segment = [](const auto& from, const auto& to, const auto& x, const char* name) {
    const double on_line = std::abs(Plane::side(Plane::line(from, to), x));
    const double detour = Plane::dist(from, x) + Plane::dist(x, to) - Plane::dist(from, to);
    if (on_line > kTolId || detour > kTolId) {
      fail(ErrorKind::Domain, std::string("foot ") + name + " is not on its side segment");
    }
  };
  on_segment(tri.B, tri.C, D, "D");
  on_segment(tri.C, tri.A, E, "E");
  on_segment(tri.A, tri.B, F, "F");

  const auto s = [](double x) { return Plane::sine_fn(x); };
  CevaReport out;
  out.product = s(Plane::dist(D, tri.B)) / s(Plane::dist(D, tri.C)) *
                (s(Plane::dist(E, tri.C)) / s(Plane::dist(E, tri.A))) *
                (s(Plane::dist(F, tri.A)) / s(Plane::dist(F, tri.B)));

  const auto hint = centroid_hint(tri);
  const auto ad = Plane::line(tri.A, D);
  const auto be = Plane::line(tri.B, E);
  const auto cf = Plane::line(tri.C, F);
  const auto x1 = Plane::meet(ad, be, hint);
  const auto x2 = Plane::meet(be, cf, hint);
  out.concurrency_gap =
      (x1 && x2) ? Plane::dist(*x1, *x2) : std::numeric_limits<double>::infinity();
  return out;
}

template <PlaneGeometry Plane>
LambertReport lambert_median_report(double side) {
  if (!(side > 0.0) || side > Plane::max_length()) {
    fail(ErrorKind::Range, "side outside the working range");
  }
  if (Plane::kind == Geometry::Spherical && !(side < kPi / 2)) {
    fail(ErrorKind::Range, "spherical side must be below pi/2");
  }
  const double apex = angle_from_sides(Plane::kind, side, side, side);
  const Triangle<Plane> tri{Plane::origin(), Plane::polar(0.0, side), Plane::polar(apex, side)};
  const auto D = Plane::midpoint(tri.B, tri.C);
  const auto E = Plane::midpoint(tri.C, tri.A);
  const auto F = Plane::midpoint(tri.A, tri.B);
  const auto O = Plane::meet(Plane::line(tri.A, D), Plane::line(tri.B, E), centroid_hint(tri));
  if (!O) fail(ErrorKind::Degenerate, "medians do not meet");

  const auto f = [](double x) { return Plane::ratio_fn(x); };
  const double alpha = f(Plane::dist(tri.A, *O)) / f(Plane::dist(*O, D));
  const double beta = f(Plane::dist(tri.B, *O)) / f(Plane::dist(*O, E));
  const double gamma = f(Plane::dist(tri.C, *O)) / f(Plane::dist(*O, F));

  LambertReport out;
  out.side = side;
  out.alpha = alpha;
  out.max_ratio_spread = std::max(std::abs(alpha - beta), std::abs(alpha - gamma));
  out.ad_over_od = Plane::dist(tri.A, D) / Plane::dist(*O, D);
  return out;
}

LambertReport lambert_median_report(double side, Geometry g) {
  switch (g) {
    case Geometry::Hyperbolic: return lambert_median_report<HyperbolicPlane>(side);
    case Geometry::Spherical: return lambert_median_report<SphericalPlane>(side);
    case Geometry::Euclidean: return lambert_median_report<EuclideanPlane>(side);
  }
  return {};
}

double lambert_margin(double x) { return 2.0 * std::tanh(x) - std::tanh(2.0 * x); }

#define CCG_INSTANTIATE_CEVIANS(Plane)                                                          \
  template CevianFrame<Plane> cevian_frame<Plane>(const Triangle<Plane>&,                       \
                                                  const Plane::Point&);                         \
  template double containment_residual<Plane>(const CevianFrame<Plane>&);                       \
  template EulerResidual euler_relation_residual<Plane>(const CevianFrame<Plane>&);             \
  template PqrReport pqr_system<Plane>(const CevianFrame<Plane>&);                              \
  template RatioTriple ratios_from_lengths<Plane>(const RatioSumInput&);                        \
  template Construction<Plane> construct_from_ratios<Plane>(const RatioSumInput&);              \
  template CevaReport ceva_product<Plane>(const Triangle<Plane>&, const Plane::Point&,          \
                                          const Plane::Point&, const Plane::Point&);            \
  template LambertReport lambert_median_report<Plane>(double);

CCG_INSTANTIATE_CEVIANS(HyperbolicPlane)
CCG_INSTANTIATE_CEVIANS(SphericalPlane)
CCG_INSTANTIATE_CEVIANS(EuclideanPlane)

#undef CCG_INSTANTIATE_CEVIANS

}  // namespace ccg
