#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cburgers/blowup.hpp"
#include "cburgers/evaluate.hpp"
#include "cburgers/partitions.hpp"
#include "cburgers/regularity.hpp"
#include "cburgers/spectral.hpp"
#include "cburgers/symbolic.hpp"

namespace py = pybind11;
using namespace cburgers;

namespace {

std::vector<GaussianRational> parse_init(const std::vector<std::pair<std::string, std::string>>& init) {
  std::vector<GaussianRational> out;
  out.reserve(init.size());
  for (const auto& [re, im] : init) out.push_back(GaussianRational::parse(re, im));
  return out;
}

py::list table_entries(const CoeffTable& table) {
  py::list out;
  for (const auto& [m, c] : table.entries)
    out.append(py::make_tuple(m, rational_str(c.re), rational_str(c.im)));
  return out;
}

py::list series_entries(const ExpSeriesQ& s) {
  py::list out;
  for (const auto& t : s.terms)
    out.append(py::make_tuple(t.h, t.l, rational_str(t.coeff.re), rational_str(t.coeff.im)));
  return out;
}

py::dict structural_dict(const StructuralReport& rep) {
  auto flag = [](const std::optional<bool>& f) {
    return f ? py::object(py::bool_(*f)) : py::object(py::none());
  };
  py::dict d;
  d["k"] = rep.k;
  d["zero_sum"] = flag(rep.zero_sum);
  d["leading_coeff"] = flag(rep.leading_coeff);
  d["k_plus_2"] = flag(rep.k_plus_2);
  d["odd_gap"] = flag(rep.odd_gap);
  d["u_gap"] = flag(rep.u_gap);
  d["v_gap"] = flag(rep.v_gap);
  d["ok"] = rep.ok();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact exponomial series, Galerkin spectral solver and certified checks "
            "for the complex Burgers / KdV-Burgers equations on the torus.";

  m.def(
      "burgers_table",
      [](int k, const std::string& a0, const std::string& nu) {
        CoeffTable table = burgers_table(k, GaussianRational(parse_rational(a0)), parse_rational(nu));
        return table_entries(table);
      },
      py::arg("k"), py::arg("a0") = "1", py::arg("nu") = "1",
      "Exact Burgers coefficients alpha_{k,m} as (m, re, im) rational strings.");

  m.def(
      "burgers_structural_check",
      [](int k, const std::string& a0, const std::string& nu) {
        CoeffTable table = burgers_table(k, GaussianRational(parse_rational(a0)), parse_rational(nu));
        return structural_dict(structural_check(table));
      },
      py::arg("k"), py::arg("a0") = "1", py::arg("nu") = "1");

  m.def(
      "kdvb_table",
      [](int k, const std::vector<std::pair<std::string, std::string>>& init,
         const std::string& nu, const std::string& alpha) {
        ModelParams params{parse_rational(nu), parse_rational(alpha), Rational(1)};
        ExpSeriesQ s = kdvb_table(k, parse_init(init), params);
        return series_entries(s);
      },
      py::arg("k"), py::arg("init"), py::arg("nu"), py::arg("alpha"),
      "Exact KdV-Burgers coefficients a_{k,h,l} as (h, l, re, im) rational strings.");

  m.def(
      "evaluate_mode",
      [](int k, const std::vector<std::pair<std::string, std::string>>& init,
         const std::string& nu, const std::string& alpha, double t, long precision) {
        ModelParams params{parse_rational(nu), parse_rational(alpha), Rational(1)};
        KdvbFamilyQ family(parse_init(init), params.nu, params.alpha);
        return evaluate_mode(family.row(k), BigFloat(t, 64), precision).value.to_complex();
      },
      py::arg("k"), py::arg("init"), py::arg("nu"), py::arg("alpha"), py::arg("t"),
      py::arg("precision") = 256, "a_k(t) for the exact series, rounded to a Python complex.");

  m.def(
      "evaluate_field",
      [](int K, const std::vector<std::pair<std::string, std::string>>& init,
         const std::string& nu, const std::string& alpha, double x, double t, long precision) {
        KdvbFamilyQ family(parse_init(init), parse_rational(nu), parse_rational(alpha));
        FieldEval fe = evaluate_field(family, K, x, BigFloat(t, 64), precision);
        return py::make_tuple(fe.value.to_complex(), fe.truncation_indicator);
      },
      py::arg("K"), py::arg("init"), py::arg("nu"), py::arg("alpha"), py::arg("x"), py::arg("t"),
      py::arg("precision") = 256,
      "Partial sum sum_{k<=K} a_k(t) e^{ikx} and |a_K(t)| as truncation indicator.");

  m.def(
      "partition_count",
      [](int k) { return py::cast(partition_count(k).count.get_str()); },
      py::arg("k"), "N_k as a decimal string (arbitrary size).");

  m.def(
      "hardy_ramanujan_report",
      [](int k_max) {
        HardyRamanujanReport rep = hardy_ramanujan_report(k_max);
        py::dict d;
        d["c1_estimate"] = rep.c1_estimate;
        d["min_ratio_asym"] = rep.min_ratio_asym;
        d["max_ratio_asym"] = rep.max_ratio_asym;
        py::list rows;
        for (const auto& r : rep.rows)
          rows.append(py::make_tuple(r.k, r.n_k.get_str(), r.ratio_asym, r.ratio_bound));
        d["rows"] = rows;
        return d;
      },
      py::arg("k_max"));

  m.def(
      "t_ladder",
      [](int K, const std::string& nu) {
        TLadder ladder = t_ladder(K, parse_rational(nu));
        std::vector<double> out;
        for (const auto& t : ladder.entries) out.push_back(t.to_double());
        return out;
      },
      py::arg("K"), py::arg("nu") = "1", "Induction thresholds t_2..t_K.");

  m.def(
      "t0_bound",
      [](int K, const std::string& nu) {
        T0Bound b = T0_bound(K, parse_rational(nu));
        return py::make_tuple(b.lower.to_double(), b.upper.to_double());
      },
      py::arg("K") = 1000, py::arg("nu") = "1", "Certified enclosure [lower, upper] of T0.");

  m.def(
      "make_certificate",
      [](const std::string& T, const std::string& nu, const std::string& A, int K,
         long precision) {
        Rational nu_q = parse_rational(nu);
        BigFloat Tb(precision);
        if (T == "auto") {
          T0Bound t0 = T0_bound(1000, nu_q, 192);
          Tb = t0.upper.with_prec(precision) + BigFloat(0.01, precision);
        } else {
          Tb = BigFloat::from_string(T, precision);
        }
        BlowupCertificate cert =
            make_certificate(Tb, nu_q, BigFloat::from_string(A, precision), K, precision);
        py::dict d;
        d["T"] = cert.T.to_double();
        d["A"] = cert.A.to_double();
        d["a"] = cert.a.to_double();
        d["K_verified"] = cert.K_verified;
        d["T0_lower"] = cert.t0.lower.to_double();
        d["T0_upper"] = cert.t0.upper.to_double();
        d["valid"] = cert.valid;
        py::list bounds;
        for (const auto& b : cert.bounds)
          bounds.append(py::make_tuple(b.k, b.value.to_double(), b.threshold.to_double(), b.pass));
        d["bounds"] = bounds;
        return d;
      },
      py::arg("T") = "auto", py::arg("nu") = "1", py::arg("A") = "1.05", py::arg("K") = 12,
      py::arg("precision") = 256);

  m.def(
      "verify_sign_pattern",
      [](int k_max, const std::string& a, const std::string& nu, std::vector<double> t_samples,
         long precision) {
        std::vector<BigFloat> ts;
        for (double t : t_samples) ts.emplace_back(t, 64);
        SignPatternOptions opts;
        opts.precision = precision;
        SignPatternReport rep = verify_sign_pattern(k_max, parse_rational(a), parse_rational(nu),
                                                    ts, opts);
        py::dict d;
        d["all_pass"] = rep.all_pass;
        py::list entries;
        for (const auto& e : rep.entries)
          entries.append(py::make_tuple(e.k, e.j, e.rotation_real, e.b_min, e.max_arg_dev));
        d["entries"] = entries;
        return d;
      },
      py::arg("k_max"), py::arg("a") = "1", py::arg("nu") = "1",
      py::arg("t_samples") = std::vector<double>{0.5, 1.0, 2.0}, py::arg("precision") = 256);

  m.def(
      "nonlinear_term",
      [](const std::vector<std::complex<double>>& a) {
        SpectralState state{0.0, a};
        return nonlinear_term(state);
      },
      py::arg("a"), "3ik sum_{k1+k2=k} a_{k1} a_{k2} for a 1-based mode vector.");

  m.def(
      "sobolev_norm",
      [](const std::vector<std::complex<double>>& a, double s, bool homogeneous) {
        return sobolev_norm(a, s, homogeneous);
      },
      py::arg("a"), py::arg("s") = 0.0, py::arg("homogeneous") = false);

  m.def(
      "simulate",
      [](const std::vector<std::complex<double>>& init, const std::string& nu,
         const std::string& alpha, const std::string& gamma, int N, double dt, double t_end,
         const std::string& scheme, double blowup_cap, int record_every, bool linear_only) {
        ModelParams params{parse_rational(nu), parse_rational(alpha), parse_rational(gamma)};
        SpectralState state;
        state.a.assign(static_cast<size_t>(N), {0.0, 0.0});
        for (size_t i = 0; i < init.size() && i < state.a.size(); ++i) state.a[i] = init[i];
        SolverConfig config;
        config.dt = dt;
        config.scheme = scheme == "ifeuler" ? Scheme::ifeuler : Scheme::ifrk4;
        config.blowup_cap = blowup_cap;
        config.record_every = record_every;
        config.linear_only = linear_only;
        Trajectory traj = integrate(state, params, config, t_end);
        py::dict d;
        d["status"] = to_string(traj.status);
        d["t_final"] = traj.t_final;
        d["l2_final"] = traj.samples.empty() ? 0.0 : traj.samples.back().l2;
        d["final"] = traj.samples.empty() ? std::vector<std::complex<double>>{}
                                          : traj.samples.back().a;
        return d;
      },
      py::arg("init"), py::arg("nu") = "1", py::arg("alpha") = "0", py::arg("gamma") = "1",
      py::arg("N") = 32, py::arg("dt") = 1e-3, py::arg("t_end") = 1.0,
      py::arg("scheme") = "ifrk4", py::arg("blowup_cap") = 1e8, py::arg("record_every") = 10,
      py::arg("linear_only") = false);

  m.def(
      "check_geometric_bound",
      [](const std::string& nu, const std::string& alpha, const std::string& a01, int k_max,
         double t0, double t1, int t_count) {
        GeometricBoundReport rep =
            check_geometric_bound(parse_rational(nu), parse_rational(alpha),
                                  GaussianRational(parse_rational(a01)), k_max,
                                  uniform_grid(t0, t1, t_count));
        py::dict d;
        d["outside_hypothesis"] = rep.outside_hypothesis;
        d["worst_ratio"] = rep.worst_ratio;
        d["worst_k"] = rep.worst_k;
        d["worst_t"] = rep.worst_t;
        d["pass"] = rep.pass;
        return d;
      },
      py::arg("nu") = "3", py::arg("alpha") = "0", py::arg("a01") = "1/2", py::arg("k_max") = 12,
      py::arg("t0") = 0.0, py::arg("t1") = 10.0, py::arg("t_count") = 51);

  m.attr("__version__") = "0.1.0";
}
