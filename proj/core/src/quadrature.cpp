#include "contspec/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <limits>
#include <vector>

namespace contspec {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol))
    throw std::invalid_argument("QuadratureSpec: rel_tol must be > 0");
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol))
    throw std::invalid_argument("QuadratureSpec: abs_tol must be > 0");
  if (max_subdivisions < 1)
    throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
}

namespace {

// Gauss(7)-Kronrod(15) nodes and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

double norm_of(double x) { return std::fabs(x); }
double norm_of(const std::complex<double>& z) { return std::abs(z); }

template <class T>
struct PanelEval {
  T value{};
  double resabs = 0.0;
  double error = 0.0;
};

// One (G7, K15) pass over [a, b] with a QUADPACK-style error estimate.
template <class T, class F>
PanelEval<T> gk15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double halfwidth = 0.5 * (b - a);

  std::array<T, 15> fv{};
  fv[14] = f(center);
  T resk = kWgk[7] * fv[14];
  T resg = kWg[3] * fv[14];
  double resabs = kWgk[7] * norm_of(fv[14]);
  for (int j = 0; j < 7; ++j) {
    const double dx = halfwidth * kXgk[j];
    fv[2 * j] = f(center - dx);
    fv[2 * j + 1] = f(center + dx);
    const T fsum = fv[2 * j] + fv[2 * j + 1];
    resk += kWgk[j] * fsum;
    resabs += kWgk[j] * (norm_of(fv[2 * j]) + norm_of(fv[2 * j + 1]));
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }

  const T mean = resk * 0.5;
  double resasc = kWgk[7] * norm_of(fv[14] - mean);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (norm_of(fv[2 * j] - mean) + norm_of(fv[2 * j + 1] - mean));

  PanelEval<T> out;
  out.value = resk * halfwidth;
  out.resabs = resabs * std::fabs(halfwidth);
  resasc *= std::fabs(halfwidth);

  double err = norm_of(resk - resg) * std::fabs(halfwidth);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  err = std::max(err, 50.0 * DBL_EPSILON * out.resabs);
  out.error = err;
  return out;
}

template <class T>
struct Panel {
  double a = 0.0, b = 0.0;
  T value{};
  double error = 0.0;
};

template <class T>
struct PanelCmp {
  bool operator()(const Panel<T>& p, const Panel<T>& q) const {
    return p.error < q.error;
  }
};

// Global panel set with a running total; worst-error-first refinement.
template <class T>
class AdaptState {
 public:
  explicit AdaptState(const QuadratureSpec& spec) : spec_(spec) {}

  template <class F>
  void add_interval(const F& f, double a, double b) {
    if (!(b > a)) return;
    auto e = gk15<T>(f, a, b);
    push(Panel<T>{a, b, e.value, e.error});
  }

  T total() const { return heap_value_ + frozen_value_; }
  double total_error() const { return heap_error_ + frozen_error_; }

  double tolerance() const {
    return std::max(spec_.abs_tol, spec_.rel_tol * norm_of(total()));
  }

  // Last non-negligible contribution added; used by shell expansion.
  double last_contribution() const { return last_contribution_; }

  template <class F>
  void refine(const F& f) {
    while (total_error() > tolerance()) {
      if (splits_ >= spec_.max_subdivisions)
        throw NonConvergence("quadrature: subdivision budget exhausted",
                             norm_of(total()), total_error());
      if (heap_.empty()) {
        if (total_error() > tolerance())
          throw NonConvergence("quadrature: intervals at rounding limit",
                               norm_of(total()), total_error());
        return;
      }
      std::pop_heap(heap_.begin(), heap_.end(), PanelCmp<T>{});
      Panel<T> worst = heap_.back();
      heap_.pop_back();
      heap_value_ -= worst.value;
      heap_error_ -= worst.error;

      const double mid = 0.5 * (worst.a + worst.b);
      if (!(mid > worst.a) || !(mid < worst.b) || worst.error == 0.0) {
        frozen_value_ += worst.value;
        frozen_error_ += worst.error;
        continue;
      }
      auto left = gk15<T>(f, worst.a, mid);
      auto right = gk15<T>(f, mid, worst.b);
      push(Panel<T>{worst.a, mid, left.value, left.error});
      push(Panel<T>{mid, worst.b, right.value, right.error});
      ++splits_;
    }
  }

 private:
  void push(Panel<T> p) {
    heap_value_ += p.value;
    heap_error_ += p.error;
    last_contribution_ = norm_of(p.value) + p.error;
    heap_.push_back(p);
    std::push_heap(heap_.begin(), heap_.end(), PanelCmp<T>{});
  }

  QuadratureSpec spec_;
  std::vector<Panel<T>> heap_;
  T heap_value_{};
  T frozen_value_{};
  double heap_error_ = 0.0;
  double frozen_error_ = 0.0;
  double last_contribution_ = 0.0;
  int splits_ = 0;
};

// ---------------------------------------------------------------------------
// Peak location for single-envelope integrands.

struct PeakScan {
  double position = 0.0;
  double height = 0.0;
};

template <class F>
PeakScan scan_linear(const F& f, double lo, double hi, int n) {
  PeakScan best;
  for (int i = 0; i <= n; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / n;
    const double v = norm_of(f(x));
    if (v > best.height) {
      best.height = v;
      best.position = x;
    }
  }
  return best;
}

// Golden-section maximization of |f| on [lo, hi].
template <class F>
double golden_max(const F& f, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = norm_of(f(x1));
  double f2 = norm_of(f(x2));
  for (int it = 0; it < 80 && (b - a) > 1e-12 * (1.0 + std::fabs(a) + std::fabs(b)); ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = norm_of(f(x2));
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = norm_of(f(x1));
    }
  }
  return 0.5 * (a + b);
}

// Walk outward from the peak until |f| has decayed to a negligible
// fraction of the peak height (or a hard cap is reached).
template <class F>
double decay_edge(const F& f, double start, double direction, double floor_value,
                  double cap_distance) {
  double x = start;
  double step = 0.25;
  while (std::fabs(x - start) < cap_distance) {
    const double next = x + direction * step;
    if (norm_of(f(next)) <= floor_value) return next;
    x = next;
    step = std::min(step * 1.5, 4.0);
  }
  return x;
}

constexpr double kScanLo = -48.0;
constexpr double kScanHi = 48.0;
constexpr int kScanSteps = 768;

template <class T, class F>
void seed_window(AdaptState<T>& state, const F& f, double a, double b, int panels) {
  for (int i = 0; i < panels; ++i) {
    const double x0 = a + (b - a) * static_cast<double>(i) / panels;
    const double x1 = a + (b - a) * static_cast<double>(i + 1) / panels;
    state.add_interval(f, x0, x1);
  }
}

// Dyadic shells away from [base_lo, base_hi]; stops after two consecutive
// negligible shells on a side.
template <class T, class F>
void expand_shells(AdaptState<T>& state, const F& f, double base_lo, double base_hi,
                   bool grow_left, bool grow_right, double domain_lo) {
  const double w0 = std::max(1.0, 0.25 * (base_hi - base_lo));
  if (grow_right) {
    double x = base_hi, w = w0;
    int quiet = 0;
    for (int k = 0; k < 60 && quiet < 2; ++k) {
      state.add_interval(f, x, x + w);
      const double contribution = state.last_contribution();
      quiet = (contribution < 0.05 * state.tolerance()) ? quiet + 1 : 0;
      x += w;
      w *= 2.0;
    }
  }
  if (grow_left) {
    double x = base_lo, w = w0;
    int quiet = 0;
    for (int k = 0; k < 60 && quiet < 2; ++k) {
      double lo = x - w;
      bool clipped = false;
      if (lo < domain_lo) {
        lo = domain_lo;
        clipped = true;
      }
      if (lo >= x) break;
      state.add_interval(f, lo, x);
      const double contribution = state.last_contribution();
      quiet = (contribution < 0.05 * state.tolerance()) ? quiet + 1 : 0;
      x = lo;
      w *= 2.0;
      if (clipped) break;
    }
    // Approach a finite left endpoint (e.g. 0 on the half line) with
    // halving shells so bounded integrands contribute their full mass.
    if (std::isfinite(domain_lo) && x > domain_lo) {
      double hi = x;
      int quiet2 = 0;
      for (int k = 0; k < 80 && quiet2 < 2; ++k) {
        const double lo = domain_lo + 0.5 * (hi - domain_lo);
        if (!(lo < hi)) break;
        state.add_interval(f, lo, hi);
        quiet2 = (state.last_contribution() < 0.05 * state.tolerance()) ? quiet2 + 1 : 0;
        hi = lo;
      }
      state.add_interval(f, domain_lo, hi);
    }
  }
}

// Peak-centered driver for the real line or a half line starting at domain_lo.
template <class T, class F>
std::pair<T, double> integrate_centered(const F& f, const QuadratureSpec& spec,
                                        double domain_lo) {
  const bool half = std::isfinite(domain_lo);
  const double lo = half ? domain_lo : kScanLo;
  PeakScan peak = scan_linear(f, lo, kScanHi, kScanSteps);
  if (half) {
    // Geometric points catch envelopes concentrated near the endpoint.
    for (int j = 1; j <= 40; ++j) {
      const double x = domain_lo + std::ldexp(1.0, -j);
      const double v = norm_of(f(x));
      if (v > peak.height) peak = {x, v};
    }
  }
  if (peak.height == 0.0) return {T{}, 0.0};

  const double step = (kScanHi - lo) / kScanSteps;
  const double refined = golden_max(f, std::max(lo, peak.position - step),
                                    std::min(kScanHi, peak.position + step));
  if (norm_of(f(refined)) > peak.height) peak.position = refined;

  const double floor_value = peak.height * 1e-18;
  double wr = decay_edge(f, peak.position, +1.0, floor_value, 64.0);
  double wl = decay_edge(f, peak.position, -1.0, floor_value, 64.0);
  if (half) wl = std::max(wl, domain_lo);
  if (!(wr > wl)) {
    wr = peak.position + 0.5;
    wl = half ? std::max(domain_lo, peak.position - 0.5) : peak.position - 0.5;
  }

  AdaptState<T> state(spec);
  seed_window(state, f, wl, wr, 24);
  expand_shells(state, f, wl, wr, /*grow_left=*/!half || wl > domain_lo,
                /*grow_right=*/true, domain_lo);
  state.refine(f);
  return {state.total(), state.total_error()};
}

// Transform-free half-line sweep: dyadic shells over (0, 2^21] plus a
// refinement cascade toward 0.
template <class T, class F>
std::pair<T, double> integrate_shell_sweep(const F& f, const QuadratureSpec& spec) {
  AdaptState<T> state(spec);
  for (int k = -40; k <= 21; ++k) {
    const double a = std::ldexp(1.0, k - 1);
    const double b = std::ldexp(1.0, k);
    state.add_interval(f, a, b);
  }
  state.add_interval(f, 0.0, std::ldexp(1.0, -41));
  state.refine(f);
  return {state.total(), state.total_error()};
}

template <class T, class F>
std::pair<T, double> half_line_impl(const F& f, const QuadratureSpec& spec) {
  spec.validate();
  switch (spec.transform) {
    case QuadTransform::log_substitution: {
      auto g = [&f](double u) { return f(std::exp(u)) * std::exp(u); };
      return integrate_centered<T>(g, spec, -std::numeric_limits<double>::infinity());
    }
    case QuadTransform::gaussian_centering:
      return integrate_centered<T>(f, spec, 0.0);
    case QuadTransform::none:
      return integrate_shell_sweep<T>(f, spec);
  }
  throw std::invalid_argument("unknown transform");
}

template <class T, class F>
std::pair<T, double> real_line_impl(const F& f, const QuadratureSpec& spec) {
  spec.validate();
  if (spec.transform == QuadTransform::log_substitution)
    throw std::invalid_argument("log_substitution is undefined on the real line");
  return integrate_centered<T>(f, spec, -std::numeric_limits<double>::infinity());
}

template <class T, class F>
std::pair<T, double> interval_impl(const F& f, double a, double b,
                                   const QuadratureSpec& spec) {
  spec.validate();
  if (!(b >= a) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("integrate_interval: need finite a <= b");
  if (a == b) return {T{}, 0.0};
  AdaptState<T> state(spec);
  seed_window(state, f, a, b, 16);
  state.refine(f);
  return {state.total(), state.total_error()};
}

}  // namespace

QuadResult integrate_half_line(const RealIntegrand& f, const QuadratureSpec& spec) {
  auto [v, e] = half_line_impl<double>(f, spec);
  return {v, e};
}

QuadResultC integrate_half_line_c(const ComplexIntegrand& f, const QuadratureSpec& spec) {
  auto [v, e] = half_line_impl<std::complex<double>>(f, spec);
  return {v, e};
}

QuadResult integrate_real_line(const RealIntegrand& f, const QuadratureSpec& spec) {
  auto [v, e] = real_line_impl<double>(f, spec);
  return {v, e};
}

QuadResultC integrate_real_line_c(const ComplexIntegrand& f, const QuadratureSpec& spec) {
  auto [v, e] = real_line_impl<std::complex<double>>(f, spec);
  return {v, e};
}

QuadResult integrate_interval(const RealIntegrand& f, double a, double b,
                              const QuadratureSpec& spec) {
  auto [v, e] = interval_impl<double>(f, a, b, spec);
  return {v, e};
}

QuadResultC integrate_interval_c(const ComplexIntegrand& f, double a, double b,
                                 const QuadratureSpec& spec) {
  auto [v, e] = interval_impl<std::complex<double>>(f, a, b, spec);
  return {v, e};
}

}  // namespace contspec
