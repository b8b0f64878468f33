#include "cburgers/blowup.hpp"

#include <cmath>
#include <stdexcept>

#include "cburgers/evaluate.hpp"
#include "cburgers/util.hpp"

namespace cburgers {

namespace {

Rational ladder_ratio(int k) {
  // (3k-3)/(2k-3), the increment ratio of the induction thresholds.
  Rational r(3 * k - 3, 2 * k - 3);
  r.canonicalize();
  return r;
}

}  // namespace

TLadder t_ladder(int K, const Rational& nu, mpfr_prec_t prec) {
  if (K < 2) throw std::invalid_argument("t_ladder: K must be >= 2");
  if (nu <= 0) throw std::invalid_argument("t_ladder: nu must be > 0");
  TLadder ladder;
  ladder.nu = nu;
  ladder.K = K;
  BigFloat acc(0L, prec);
  for (int k = 2; k <= K; ++k) {
    BigFloat incr = log(BigFloat(ladder_ratio(k), prec)) / BigFloat(static_cast<long>(k) * k, prec);
    acc += incr;
    ladder.entries.push_back(acc / BigFloat(nu, prec));
  }
  return ladder;
}

T0Bound T0_bound(int K, const Rational& nu, mpfr_prec_t prec) {
  if (K < 2) throw std::invalid_argument("T0_bound: K must be >= 2");
  if (nu <= 0) throw std::invalid_argument("T0_bound: nu must be > 0");
  // Directed rounding throughout: lower rounds down at every operation,
  // upper rounds up, so T0 is certainly inside [lower, upper].
  mpfr_t lo, hi, term;
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  mpfr_init2(term, prec);
  mpfr_set_zero(lo, 1);
  mpfr_set_zero(hi, 1);
  for (int k = 2; k <= K; ++k) {
    Rational ratio = ladder_ratio(k);
    unsigned long k2 = static_cast<unsigned long>(k) * static_cast<unsigned long>(k);
    mpfr_set_q(term, ratio.get_mpq_t(), MPFR_RNDD);
    mpfr_log(term, term, MPFR_RNDD);
    mpfr_div_ui(term, term, k2, MPFR_RNDD);
    mpfr_add(lo, lo, term, MPFR_RNDD);
    mpfr_set_q(term, ratio.get_mpq_t(), MPFR_RNDU);
    mpfr_log(term, term, MPFR_RNDU);
    mpfr_div_ui(term, term, k2, MPFR_RNDU);
    mpfr_add(hi, hi, term, MPFR_RNDU);
  }
  // Tail: sum_{k>K} (1/k^2) ln((3k-3)/(2k-3)) <= ln(3) / K.
  mpfr_set_ui(term, 3, MPFR_RNDU);
  mpfr_log(term, term, MPFR_RNDU);
  mpfr_div_ui(term, term, static_cast<unsigned long>(K), MPFR_RNDU);
  mpfr_add(hi, hi, term, MPFR_RNDU);
  // General nu by time rescaling t -> t/nu.
  mpfr_div_q(lo, lo, nu.get_mpq_t(), MPFR_RNDD);
  mpfr_div_q(hi, hi, nu.get_mpq_t(), MPFR_RNDU);

  T0Bound out;
  out.K = K;
  out.lower = BigFloat(prec);
  out.upper = BigFloat(prec);
  mpfr_set(out.lower.raw(), lo, MPFR_RNDN);
  mpfr_set(out.upper.raw(), hi, MPFR_RNDN);
  mpfr_clear(lo);
  mpfr_clear(hi);
  mpfr_clear(term);
  return out;
}

BlowupCertificate make_certificate(const BigFloat& T, const Rational& nu, const BigFloat& A,
                                   int K, mpfr_prec_t precision, int threads) {
  if (K < 1) throw std::invalid_argument("make_certificate: K must be >= 1");
  if (precision < kMinPrec) throw std::invalid_argument("make_certificate: precision must be >= 53");
  if (A < BigFloat(1L, 64))
    throw std::invalid_argument("make_certificate: A must be >= 1 (A = a e^{-nu T} >= 1)");

  BlowupCertificate cert;
  cert.t0 = T0_bound(std::max(K, 1000), nu, 192);
  if (T < cert.t0.upper)
    throw std::invalid_argument(
        "make_certificate: T is below the verified T0 upper bound");

  cert.T = T;
  cert.nu = nu;
  cert.A = A;
  cert.precision_bits = precision;
  cert.K_verified = K;

  const mpfr_prec_t wp0 = precision + 64;
  cert.a = A.with_prec(wp0) * exp(BigFloat(nu, wp0) * T.with_prec(wp0));

  BurgersFamily family(GaussianRational(Rational(1)), nu);
  family.row(K);  // build rows serially; evaluations below are independent

  cert.bounds.assign(static_cast<size_t>(K), BoundCheck{});
  parallel_for(K, threads, [&](int idx) {
    const int k = idx + 1;
    BoundCheck check;
    check.k = k;
    mpfr_prec_t p = precision;
    for (int attempt = 0; attempt < 3; ++attempt) {
      const mpfr_prec_t wp = p + 64;
      BigFloat a_wp = A.with_prec(wp) * exp(BigFloat(nu, wp) * T.with_prec(wp));
      BigFloat scale = pow_ui(a_wp, static_cast<unsigned long>(k));
      EvalResult er = evaluate_mode(family.row(k), T, p);
      check.value = abs(er.value) * scale;
      check.threshold = pow_ui(A.with_prec(wp), static_cast<unsigned long>(k));
      BigFloat slack = check.threshold * BigFloat::pow2(-64, 64);
      BigFloat margin = check.value - (check.threshold - slack);
      // Guaranteed error of `value`: the evaluation bound scaled by a^k plus
      // a few ulp for the scale factor itself.
      BigFloat err = BigFloat(er.abs_err_bound, 64) * scale +
                     BigFloat::pow2(-static_cast<long>(wp) + 4, 64) * check.value;
      check.pass = margin.sign() >= 0;
      if (abs(margin) > err) break;  // comparison is decided at this precision
      p *= 2;                        // marginal: double the precision and retry
    }
    cert.bounds[static_cast<size_t>(idx)] = std::move(check);
  });

  cert.valid = true;
  for (const auto& b : cert.bounds) cert.valid = cert.valid && b.pass;
  return cert;
}

std::vector<BigFloat> log_spaced_samples(double t_min, double t_max, int count, mpfr_prec_t prec) {
  if (t_min <= 0 || t_max < t_min || count < 1)
    throw std::invalid_argument("log_spaced_samples: need 0 < t_min <= t_max, count >= 1");
  std::vector<BigFloat> out;
  out.reserve(static_cast<size_t>(count));
  if (count == 1) {
    out.emplace_back(t_max, prec);
    return out;
  }
  for (int i = 0; i < count; ++i) {
    double frac = static_cast<double>(count - 1 - i) / (count - 1);
    out.emplace_back(t_max * std::pow(t_min / t_max, frac), prec);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Clenshaw-Curtis quadrature at big-float precision (for the absolute-value
// recursion check).
// ---------------------------------------------------------------------------

namespace {

struct CcRule {
  std::vector<BigFloat> x;  // nodes on [-1, 1]
  std::vector<BigFloat> w;  // weights for integral over [-1, 1]
};

CcRule clenshaw_curtis(int n, mpfr_prec_t prec) {
  // Nodes x_j = cos(j pi / n); weights via the cosine expansion of 1/(1-x^2)
  // moments (Trefethen's clencurt).
  CcRule rule;
  std::vector<BigFloat> costab;
  costab.reserve(static_cast<size_t>(2 * n));
  BigFloat pi = BigFloat::pi(prec);
  for (int r = 0; r < 2 * n; ++r)
    costab.push_back(cos(pi * BigFloat(r, prec) / BigFloat(n, prec)));
  auto cs = [&](long r) { return costab[static_cast<size_t>(r % (2L * n))]; };

  rule.x.reserve(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) rule.x.push_back(j == n ? BigFloat(-1L, prec) : cs(j));

  rule.w.assign(static_cast<size_t>(n) + 1, BigFloat(0L, prec));
  const bool even = (n % 2 == 0);
  BigFloat end_w = even ? BigFloat(1L, prec) / BigFloat(static_cast<long>(n) * n - 1, prec)
                        : BigFloat(1L, prec) / BigFloat(static_cast<long>(n) * n, prec);
  rule.w.front() = end_w;
  rule.w.back() = end_w;
  for (int j = 1; j < n; ++j) {
    BigFloat v(1L, prec);
    int m_max = even ? n / 2 - 1 : (n - 1) / 2;
    for (int m = 1; m <= m_max; ++m) {
      v -= BigFloat(2L, prec) * cs(2L * m * j) / BigFloat(4L * m * m - 1, prec);
    }
    if (even) v -= cs(static_cast<long>(n) * j) / BigFloat(static_cast<long>(n) * n - 1, prec);
    rule.w[static_cast<size_t>(j)] = BigFloat(2L, prec) * v / BigFloat(n, prec);
  }
  return rule;
}

}  // namespace

SignPatternReport verify_sign_pattern(int k_max, const Rational& a, const Rational& nu,
                                      const std::vector<BigFloat>& t_samples,
                                      const SignPatternOptions& opts) {
  if (k_max < 1) throw std::invalid_argument("verify_sign_pattern: k_max must be >= 1");
  if (a <= 0) throw std::invalid_argument("verify_sign_pattern: a must be > 0 real");
  if (nu <= 0) throw std::invalid_argument("verify_sign_pattern: nu must be > 0");
  for (const auto& t : t_samples)
    if (t.sign() <= 0) throw std::invalid_argument("verify_sign_pattern: t samples must be > 0");

  const mpfr_prec_t prec = opts.precision;
  const mpfr_prec_t wp = prec + 64;
  BurgersFamily family(GaussianRational(a), nu);
  SignPatternReport report;
  report.all_pass = true;

  BigFloat pi = BigFloat::pi(wp);
  BigFloat two_pi = BigFloat(2L, wp) * pi;

  for (int k = 1; k <= k_max; ++k) {
    const CoeffTable& row = family.row(k);
    SignPatternEntry entry;
    entry.k = k;
    entry.j = ((k - 1) % 4) + 1;

    // Exact part: i^{-(j-1)} alpha_{k,m} must be real for every m.
    entry.rotation_real = true;
    for (const auto& [m, c] : row.entries)
      if (c.times_i(1 - entry.j).im != 0) entry.rotation_real = false;

    // Pointwise part: b_k(t) > 0 (evaluated as a^k b_k, same sign).
    entry.b_min = HUGE_VAL;
    entry.b_positive_all = true;
    entry.max_arg_dev = 0;
    entry.min_abs = HUGE_VAL;
    BigFloat expected_arg = BigFloat(entry.j - 1, wp) * pi / BigFloat(2L, wp);
    const BigFloat ak = pow_ui(BigFloat(a, wp), static_cast<unsigned long>(k));
    for (const auto& t : t_samples) {
      EvalResult er = evaluate_mode(row, t, prec);
      BigComplex rotated = er.value.times_i(1 - entry.j);
      BigFloat b = rotated.real() / ak;
      entry.b_min = std::min(entry.b_min, b.to_double());
      if (!(b > BigFloat(er.abs_err_bound, 64) / ak)) entry.b_positive_all = false;

      BigFloat dev = abs(arg(er.value) - expected_arg);
      // distance on the circle
      while (dev > pi) dev = abs(dev - two_pi);
      entry.max_arg_dev = std::max(entry.max_arg_dev, dev.to_double());
      entry.min_abs = std::min(entry.min_abs, abs(er.value).to_double());
    }
    bool pass = entry.rotation_real && entry.b_positive_all &&
                entry.max_arg_dev <= opts.arg_tol && entry.min_abs > 0;
    report.all_pass = report.all_pass && pass;
    report.entries.push_back(entry);
  }

  // Absolute-value recursion by quadrature for small k.
  const int abso_cap = std::min(opts.abso_max_k, k_max);
  for (int k = 2; k <= abso_cap; ++k) {
    const CoeffTable& row = family.row(k);
    size_t stride = t_samples.size() <= static_cast<size_t>(opts.abso_max_samples)
                        ? 1
                        : t_samples.size() / static_cast<size_t>(opts.abso_max_samples);
    for (size_t si = stride > 0 ? stride - 1 : 0; si < t_samples.size(); si += std::max<size_t>(stride, 1)) {
      const BigFloat& t = t_samples[si];
      const double nu_k2 = nu.get_d() * k * k;
      const int panels = std::max(4, static_cast<int>(std::ceil(nu_k2 * t.to_double() / 6.0)));
      const int n_cc = 48;
      CcRule rule = clenshaw_curtis(n_cc, wp);

      BigFloat integral(0L, wp);
      BigFloat nu_k2_b = BigFloat(nu, wp) * BigFloat(static_cast<long>(k) * k, wp);
      for (int p = 0; p < panels; ++p) {
        BigFloat lo = t * BigFloat(p, wp) / BigFloat(panels, wp);
        BigFloat hi = t * BigFloat(p + 1, wp) / BigFloat(panels, wp);
        BigFloat mid = (lo + hi) / BigFloat(2L, wp);
        BigFloat rad = (hi - lo) / BigFloat(2L, wp);
        for (int jn = 0; jn <= n_cc; ++jn) {
          BigFloat tau = mid + rad * rule.x[static_cast<size_t>(jn)];
          BigFloat conv(0L, wp);
          for (int k1 = 1; k1 < k; ++k1) {
            BigFloat m1 = abs(evaluate_mode(family.row(k1), tau, prec).value);
            BigFloat m2 = abs(evaluate_mode(family.row(k - k1), tau, prec).value);
            conv += m1 * m2;
          }
          integral += rule.w[static_cast<size_t>(jn)] * rad * exp(nu_k2_b * tau) * conv;
        }
      }
      BigFloat rhs = BigFloat(3L * k, wp) * exp(-(nu_k2_b * t)) * integral;
      BigFloat lhs = abs(evaluate_mode(row, t, prec).value);
      AbsoCheck check;
      check.k = k;
      check.t = t.to_double();
      check.rel_err = (abs(lhs - rhs) / lhs).to_double();
      check.pass = check.rel_err <= opts.abso_tol;
      report.all_pass = report.all_pass && check.pass;
      report.abso.push_back(check);
    }
  }
  return report;
}

}  // namespace cburgers
