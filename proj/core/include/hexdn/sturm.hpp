#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hexdn::sturm {

// Symmetric edge potential q(z) = sum_m cosine_coeffs[m] * cos(2*pi*m*z) on
// (0,1). The parametrization enforces q(z) = q(1-z) exactly.
struct Potential {
  std::vector<double> cosine_coeffs;
  std::optional<int> background_ref;  // id of a shared background, if any

  double operator()(double z) const;
  bool is_zero() const;
  bool is_constant() const;
  double mean() const;            // a_0
  double oscillation_bound() const;  // sum |a_m|, m >= 1
  // derived sample cache: n+1 uniform grid values on [0,1]
  std::vector<double> samples(int n) const;

  friend bool operator==(const Potential& a, const Potential& b) {
    return a.cosine_coeffs == b.cosine_coeffs;
  }
};

// Endpoint data of the two normalized solutions at energy lambda:
//   phi(0) = 0, phi'(0) = 1;  theta(0) = 1, theta'(0) = 0
//   s = phi(1), a = phi'(1), c = theta'(1).
// For symmetric q the transfer matrix is [[a, s], [c, a]] with det = 1.
struct TransferData {
  double lambda = 0.0;
  double s = 0.0;
  double a = 0.0;
  double c = 0.0;
};

// All four endpoint values (theta1 differs from a only by integration error
// when q is symmetric; kept separate so the identity can be verified).
struct EndpointData {
  double phi1 = 0.0;
  double dphi1 = 0.0;
  double theta1 = 0.0;
  double dtheta1 = 0.0;
};

struct SpectrumList {
  std::vector<double> eigenvalues;  // ascending
};

struct Eigenfunction {
  std::vector<double> values;  // uniform samples on [0,1], L2-normalized
  double norm = 0.0;           // L2 norm before scaling
};

// Fixed-step high-order integration of both IVP solutions jointly.
// Deterministic; zero and constant potentials dispatch to closed forms.
EndpointData integrate_endpoints(const Potential& q, double lambda);

TransferData integrate_ivp(const Potential& q, double lambda);

double s_value(const Potential& q, double lambda);

// First M Dirichlet eigenvalues of -d^2/dz^2 + q on (0,1): zeros of s(.),
// bracketed near (n pi)^2 + a_0 and refined to 1e-10.
SpectrumList dirichlet_spectrum(const Potential& q, int M);

// Samples of phi(., lambda_n) scaled to unit L2 norm (grid of 2001 points).
Eigenfunction normalized_eigenfunction(const Potential& q, double lambda_n);

// Recover a band-limited symmetric potential from leading Dirichlet
// eigenvalues by damped Gauss-Newton on the eigenvalue misfit.
Potential borg_reconstruct(const SpectrumList& eigs, int M_modes);

// integrate_ivp for a shared background, memoized per (q0, lambda);
// repeated calls return bit-identical values. Thread-safe.
TransferData background_solutions(const Potential& q0, double lambda);

}  // namespace hexdn::sturm
