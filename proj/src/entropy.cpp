#include "volent/entropy.hpp"

#include <cmath>

namespace volent {

EntropySolution volume_entropy(const Graph& g, const MetricStructure& m,
                               const EntropyOptions& opts) {
  if (!m.usable()) {
    throw Error(ErrorKind::SingularStructure,
                "volume entropy needs a non-singular structure");
  }
  auto phi_at = [&](double s) { return phi(g, m, s, opts.spectral); };

  // phi is strictly decreasing with phi(0) > 1, so doubling finds a bracket
  double lo = 0.0;
  double phi_lo = phi_at(0.0);
  double hi = 1.0;
  double phi_hi = phi_at(hi);
  int doublings = 0;
  while (phi_hi >= 1.0) {
    if (++doublings > opts.max_doublings) {
      throw Error(ErrorKind::BracketFailure,
                  "phi(s) did not drop below 1 within the doubling cap");
    }
    lo = hi;
    phi_lo = phi_hi;
    hi *= 2.0;
    phi_hi = phi_at(hi);
  }

  EntropySolution sol;
  sol.bracket_lo = lo;
  sol.bracket_hi = hi;

  double h = hi;
  double phi_h = phi_hi;
  int bisections = 0;
  while (std::abs(phi_h - 1.0) > opts.tol && hi - lo > 1e-15 * hi) {
    double mid = 0.5 * (lo + hi);
    double phi_mid = phi_at(mid);
    if (phi_mid >= 1.0) {
      lo = mid;
      phi_lo = phi_mid;
    } else {
      hi = mid;
      phi_hi = phi_mid;
    }
    h = mid;
    phi_h = phi_mid;
    ++bisections;
  }
  // secant polish on the final bracket
  if (phi_hi != phi_lo) {
    double sec = lo + (1.0 - phi_lo) * (hi - lo) / (phi_hi - phi_lo);
    if (sec > 0.0 && std::isfinite(sec)) {
      double phi_sec = phi_at(sec);
      if (std::abs(phi_sec - 1.0) < std::abs(phi_h - 1.0)) {
        h = sec;
        phi_h = phi_sec;
      }
    }
  }
  if (std::abs(phi_h - 1.0) > 100.0 * opts.tol) {
    throw Error(ErrorKind::ToleranceNotReached,
                "|phi(h) - 1| = " + std::to_string(std::abs(phi_h - 1.0)));
  }

  SpectralData sd = spectral_radius(transfer_matrix(g, m, h).A, opts.spectral);
  sol.h = h;
  sol.Y = sd.right;
  sol.Z = sd.left;
  sol.w = sd.right;
  sol.lengths = m.lengths;
  sol.symmetric = m.symmetric();
  sol.phi_residual = std::abs(phi_h - 1.0);
  sol.bisections = bisections;

  double worst = 0.0;
  for (EdgeIndex e = 0; e < g.oriented_count(); ++e) {
    double sum = 0.0;
    for (EdgeIndex f : g.successors(e)) sum += sol.w(f);
    double resid = std::abs(sol.w(e) - std::exp(-h * m.lengths[e]) * sum) / sol.w(e);
    worst = std::max(worst, resid);
  }
  sol.system_residual = worst;
  return sol;
}

double uniform_entropy_closed_form(int m, int k) {
  if (m < 3 || k < 2) {
    throw Error(ErrorKind::DomainError, "need m >= 3 and k >= 2");
  }
  return static_cast<double>(m) * (k - 1) / (m - 2) * std::log(m - 1.0);
}

double rose2_entropy(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw Error(ErrorKind::DomainError, "x must lie in (0, 1)");
  }
  const double y = 1.0 - x;
  // g(s) = (e^{sx}-1)(e^{sy}-1) - 4 is strictly increasing with g(0+) = -4
  auto val = [&](double s) {
    return std::expm1(s * x) * std::expm1(s * y) - 4.0;
  };
  double lo = 0.0;
  double hi = 1.0;
  while (val(hi) < 0.0) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-16 * hi; ++i) {
    double mid = 0.5 * (lo + hi);
    (val(mid) < 0.0 ? lo : hi) = mid;
  }
  // one secant step sharpens the bisection result
  double flo = val(lo), fhi = val(hi);
  if (fhi != flo) {
    double sec = lo - flo * (hi - lo) / (fhi - flo);
    if (sec > 0.0 && std::isfinite(sec)) return sec;
  }
  return 0.5 * (lo + hi);
}

double ps_cylinder_weight(const EntropySolution& sol, EdgeIndex e) {
  if (e < 0 || e >= sol.w.size()) {
    throw Error(ErrorKind::UnknownEdge, "edge index out of range");
  }
  return sol.w(e);
}

std::vector<double> weights_sum_normalized(const EntropySolution& sol) {
  double sum = sol.w.sum();
  std::vector<double> out(sol.w.size());
  for (int i = 0; i < sol.w.size(); ++i) out[i] = sol.w(i) / sum;
  return out;
}

}  // namespace volent
