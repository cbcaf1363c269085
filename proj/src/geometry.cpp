#include "ddgeo/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "ddgeo/control.hpp"

namespace ddgeo {

namespace {
constexpr double kJunctionTol = 1e-9;

// reduce an angle difference to (-pi, pi]
double wrap_angle(double d) {
  d = std::fmod(d, 2 * M_PI);
  if (d > M_PI) d -= 2 * M_PI;
  if (d <= -M_PI) d += 2 * M_PI;
  return d;
}
}  // namespace

ScalarTrack ScalarTrack::constant(double value) {
  return ScalarTrack{Kind::Constant, value, 0.0, {}};
}
ScalarTrack ScalarTrack::linear(double from, double to) {
  return ScalarTrack{Kind::Linear, from, to - from, {}};
}
ScalarTrack ScalarTrack::cosine_ramp(double from, double to) {
  return ScalarTrack{Kind::CosineRamp, from, to - from, {}};
}
ScalarTrack ScalarTrack::sampled(std::vector<double> values) {
  if (values.size() < 2)
    throw std::invalid_argument("sampled track needs at least 2 values");
  ScalarTrack t{Kind::Sampled, values.front(), values.back() - values.front(),
                std::move(values)};
  return t;
}

double ScalarTrack::value(double s, double duration) const {
  const double u = std::clamp(s / duration, 0.0, 1.0);
  switch (kind) {
    case Kind::Constant: return a;
    case Kind::Linear: return a + b * u;
    case Kind::CosineRamp: return a + b * 0.5 * (1 - std::cos(M_PI * u));
    case Kind::Sampled: {
      const double x = u * (samples.size() - 1);
      const int i = std::min<int>(static_cast<int>(x), samples.size() - 2);
      const double w = x - i;
      return samples[i] * (1 - w) + samples[i + 1] * w;
    }
  }
  return a;
}

double ScalarTrack::derivative(double s, double duration) const {
  const double u = std::clamp(s / duration, 0.0, 1.0);
  switch (kind) {
    case Kind::Constant: return 0.0;
    case Kind::Linear: return b / duration;
    case Kind::CosineRamp:
      return b * M_PI / (2 * duration) * std::sin(M_PI * u);
    case Kind::Sampled: {
      // node derivatives by central differences, interpolated linearly
      const int n = static_cast<int>(samples.size());
      const double h = duration / (n - 1);
      auto node_deriv = [&](int i) {
        if (i == 0) return (samples[1] - samples[0]) / h;
        if (i == n - 1) return (samples[n - 1] - samples[n - 2]) / h;
        return (samples[i + 1] - samples[i - 1]) / (2 * h);
      };
      const double x = u * (n - 1);
      const int i = std::min<int>(static_cast<int>(x), n - 2);
      const double w = x - i;
      return node_deriv(i) * (1 - w) + node_deriv(i + 1) * w;
    }
  }
  return 0.0;
}

double PathSpec::tau() const {
  double t = 0;
  for (const auto& s : segments) t += s.duration;
  return t;
}

int PathSpec::segment_index(double t, double* local) const {
  const double total = tau();
  if (t < -1e-12 || t > total + 1e-12)
    throw std::out_of_range("PathSpec: t outside [0, tau]");
  double start = 0;
  for (size_t i = 0; i + 1 < segments.size(); ++i) {
    if (t < start + segments[i].duration) {
      *local = t - start;
      return static_cast<int>(i);
    }
    start += segments[i].duration;
  }
  *local = std::clamp(t - start, 0.0, segments.back().duration);
  return static_cast<int>(segments.size()) - 1;
}

double PathSpec::theta(double t) const {
  double s;
  const auto& seg = segments[segment_index(t, &s)];
  return seg.theta.value(s, seg.duration);
}
double PathSpec::phi(double t) const {
  double s;
  const auto& seg = segments[segment_index(t, &s)];
  return seg.phi.value(s, seg.duration);
}
double PathSpec::theta_dot(double t) const {
  double s;
  const auto& seg = segments[segment_index(t, &s)];
  return seg.theta.derivative(s, seg.duration);
}
double PathSpec::phi_dot(double t) const {
  double s;
  const auto& seg = segments[segment_index(t, &s)];
  return seg.phi.derivative(s, seg.duration);
}

void PathSpec::validate() const {
  if (segments.empty()) throw std::invalid_argument("PathSpec: empty");
  for (const auto& s : segments)
    if (s.duration <= 0)
      throw std::invalid_argument("PathSpec: nonpositive segment duration");

  auto at_pole = [](double th) {
    return std::abs(th) < kJunctionTol || std::abs(th - M_PI) < kJunctionTol;
  };

  // junctions (including the closing one)
  const int n = static_cast<int>(segments.size());
  for (int i = 0; i < n; ++i) {
    const auto& cur = segments[i];
    const auto& next = segments[(i + 1) % n];
    const double th_end = cur.theta.value(cur.duration, cur.duration);
    const double th_next = next.theta.value(0, next.duration);
    if (std::abs(th_end - th_next) > kJunctionTol)
      throw std::invalid_argument("PathSpec: theta discontinuity at junction");
    const double dphi = wrap_angle(next.phi.value(0, next.duration) -
                                   cur.phi.value(cur.duration, cur.duration));
    if (std::abs(dphi) > kJunctionTol && !at_pole(th_end))
      throw std::invalid_argument("PathSpec: phi jump away from a pole");
  }

  // theta range on a sampling grid
  for (const auto& s : segments) {
    for (int i = 0; i <= 64; ++i) {
      const double th = s.theta.value(s.duration * i / 64, s.duration);
      if (th < -kJunctionTol || th > M_PI + kJunctionTol)
        throw std::invalid_argument("PathSpec: theta outside [0, pi]");
    }
  }
}

PathSpec orange_slice(double phi_offset, double tau) {
  PathSpec p;
  p.segments.push_back({tau / 2, ScalarTrack::linear(0, M_PI),
                        ScalarTrack::constant(0)});
  p.segments.push_back({tau / 2, ScalarTrack::linear(M_PI, 0),
                        ScalarTrack::constant(phi_offset)});
  return p;
}

PathSpec circle_path(double theta0, double tau) {
  PathSpec p;
  p.segments.push_back({tau, ScalarTrack::constant(theta0),
                        ScalarTrack::linear(0, 2 * M_PI)});
  return p;
}

PathSpec static_path(double theta0, double phi0, double tau) {
  PathSpec p;
  p.segments.push_back({tau, ScalarTrack::constant(theta0),
                        ScalarTrack::constant(phi0)});
  return p;
}

std::vector<PathSpec> catalog_paths(double tau) {
  return {orange_slice(M_PI / 8, tau), orange_slice(M_PI / 3, tau),
          equatorial_loop(tau), circle_path(1.1, tau),
          circle_path(M_PI / 5, tau)};
}

std::pair<Vec, Vec> basis_states(const PathSpec& path, double t) {
  const double th = path.theta(t), ph = path.phi(t);
  Vec p1(2), p2(2);
  p1 << std::cos(th / 2), std::sin(th / 2) * std::exp(cplx(0, ph));
  p2 << std::sin(th / 2) * std::exp(cplx(0, -ph)), -std::cos(th / 2);
  return {p1, p2};
}

Mat effective_hamiltonian_1q(const PathSpec& path, double t) {
  const double th = path.theta(t), ph = path.phi(t);
  const double thd = path.theta_dot(t), phd = path.phi_dot(t);
  const double ox = -thd / 2 * std::sin(ph) - phd / 4 * std::sin(2 * th) * std::cos(ph);
  const double oy = thd / 2 * std::cos(ph) - phd / 4 * std::sin(2 * th) * std::sin(ph);
  const double oz = phd / 4 * (1 - std::cos(2 * th));
  return ox * sigma_x() + oy * sigma_y() + oz * sigma_z();
}

double geometric_phase(const PathSpec& path) {
  path.validate();
  double gamma = 0;

  // smooth contribution per segment
  double start = 0;
  for (const auto& seg : path.segments) {
    auto integrand = [&](double s) {
      const double th = seg.theta.value(s, seg.duration);
      const double phd = seg.phi.derivative(s, seg.duration);
      return 0.5 * (1 - std::cos(th)) * phd;
    };
    gamma += gauss_legendre2(integrand, 0, seg.duration, 2048);
    start += seg.duration;
  }

  // point contributions from phi jumps at the poles
  const int n = static_cast<int>(path.segments.size());
  for (int i = 0; i < n; ++i) {
    const auto& cur = path.segments[i];
    const auto& next = path.segments[(i + 1) % n];
    const double th = cur.theta.value(cur.duration, cur.duration);
    const double dphi = wrap_angle(next.phi.value(0, next.duration) -
                                   cur.phi.value(cur.duration, cur.duration));
    if (std::abs(dphi) < 1e-14) continue;
    if (std::abs(th) < kJunctionTol) continue;  // (1 - cos 0)/2 = 0
    if (std::abs(th - M_PI) < kJunctionTol) {
      gamma += dphi;  // (1 - cos pi)/2 = 1
    } else {
      throw std::invalid_argument("geometric_phase: phi jump away from a pole");
    }
  }
  return gamma;
}

double parallel_transport_residual(const PathSpec& path, int grid_points) {
  const double tau = path.tau();
  double worst = 0;
  for (int i = 0; i < grid_points; ++i) {
    const double t = tau * (i + 0.5) / grid_points;
    const Mat h = effective_hamiltonian_1q(path, t);
    auto [p1, p2] = basis_states(path, t);
    worst = std::max(worst, std::abs((p1.adjoint() * h * p1)(0, 0)));
    worst = std::max(worst, std::abs((p2.adjoint() * h * p2)(0, 0)));
  }
  return worst;
}

Mat target_gate_1q(const GateTarget1Q& g) {
  const Mat n_sigma = std::sin(g.theta0) * std::cos(g.phi0) * sigma_x() +
                      std::sin(g.theta0) * std::sin(g.phi0) * sigma_y() +
                      std::cos(g.theta0) * sigma_z();
  return expm_hermitian(n_sigma, g.gamma);
}

Mat holonomy_gate(const PathSpec& path) {
  const double gamma = geometric_phase(path);
  auto [p1, p2] = basis_states(path, 0);
  return std::exp(cplx(0, -gamma)) * (p1 * p1.adjoint()) +
         std::exp(cplx(0, gamma)) * (p2 * p2.adjoint());
}

}  // namespace ddgeo
