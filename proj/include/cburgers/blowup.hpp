#pragma once

#include <vector>

#include "cburgers/bigfloat.hpp"
#include "cburgers/burgers.hpp"
#include "cburgers/rational.hpp"

namespace cburgers {

// Threshold ladder from the blow-up induction: t_2 = (1/4) ln 3 and
// t_k = t_{k-1} + (1/k^2) ln((3k-3)/(2k-3)), scaled by 1/nu for general nu
// (the nu = 1 ladder rescales by t -> t/nu).
struct TLadder {
  Rational nu;
  int K = 0;
  std::vector<BigFloat> entries;  // entries[i] = t_{i+2}

  const BigFloat& t(int k) const { return entries.at(static_cast<size_t>(k) - 2); }
};

TLadder t_ladder(int K, const Rational& nu, mpfr_prec_t prec = kDefaultPrec);

// Certified enclosure of T_0 = sum_{k>=2} (1/k^2) ln((3k-3)/(2k-3)): the
// K-term partial sum rounded down, plus the tail bound ln(3)/K rounded up
// (ln((3k-3)/(2k-3)) <= ln 3 for k >= 2 and sum_{k>K} 1/k^2 <= 1/K).
struct T0Bound {
  int K = 0;
  BigFloat lower{128};
  BigFloat upper{128};
};

T0Bound T0_bound(int K, const Rational& nu, mpfr_prec_t prec = 128);

struct BoundCheck {
  int k = 0;
  BigFloat value{kDefaultPrec};      // computed |a_k(T)|
  BigFloat threshold{kDefaultPrec};  // A^k
  bool pass = false;
};

struct BlowupCertificate {
  BigFloat T{kDefaultPrec};
  Rational nu;
  BigFloat A{kDefaultPrec};
  BigFloat a{kDefaultPrec};  // A e^{nu T}
  int K_verified = 0;
  T0Bound t0;
  mpfr_prec_t precision_bits = kDefaultPrec;
  std::vector<BoundCheck> bounds;
  bool valid = false;
};

// Builds the exact Burgers rows for amplitude a = A e^{nu T} (computed by
// exact homogeneity a_k(t; a) = a^k a_k(t; 1)), evaluates |a_k(T)| at
// `precision` bits and records the comparison against A^k. Comparisons get a
// 2^{-64} slack for final rounding; marginal ones rerun at doubled precision.
// pre: A >= 1 and T >= T0_bound(max(K, 1000)).upper.
BlowupCertificate make_certificate(const BigFloat& T, const Rational& nu, const BigFloat& A,
                                   int K, mpfr_prec_t precision = kDefaultPrec, int threads = 1);

// Sign pattern a_k = i^{j-1} a^k b_k(t) with k = 4n + j and b_k > 0:
// checked exactly on the rotated coefficients (their imaginary parts vanish
// in exact arithmetic) plus pointwise positivity of b_k on the t grid.
struct SignPatternEntry {
  int k = 0;
  int j = 0;                  // k = 4n + j, j in 1..4
  bool rotation_real = false; // i^{-(j-1)} alpha_{k,m} real for every m
  double b_min = 0;           // min of b_k over the t samples
  bool b_positive_all = false;
  double max_arg_dev = 0;     // max |arg(a_k(t)) - (j-1) pi/2| over samples
  double min_abs = 0;         // min |a_k(t)| over samples
};

// Absolute-value recursion check: |a_k(t)| compared against
// 3k e^{-nu k^2 t} int_0^t e^{nu k^2 tau} sum |a_{k1}| |a_{k2}| dtau,
// with the integral done by composite Clenshaw-Curtis quadrature.
struct AbsoCheck {
  int k = 0;
  double t = 0;
  double rel_err = 0;
  bool pass = false;
};

struct SignPatternReport {
  std::vector<SignPatternEntry> entries;
  std::vector<AbsoCheck> abso;
  bool all_pass = false;
};

struct SignPatternOptions {
  mpfr_prec_t precision = kDefaultPrec;
  double arg_tol = 1e-20;
  int abso_max_k = 6;        // quadrature cross-check cap (0 disables)
  int abso_max_samples = 2;  // t samples per k for the quadrature check
  double abso_tol = 1e-20;
};

// pre: a > 0 real, nu > 0, all t samples > 0.
SignPatternReport verify_sign_pattern(int k_max, const Rational& a, const Rational& nu,
                                      const std::vector<BigFloat>& t_samples,
                                      const SignPatternOptions& opts = {});

// Log-spaced grid in (0, t_max] for pointwise checks.
std::vector<BigFloat> log_spaced_samples(double t_min, double t_max, int count,
                                         mpfr_prec_t prec = kDefaultPrec);

}  // namespace cburgers
