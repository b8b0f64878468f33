#include "cburgers/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "cburgers/evaluate.hpp"
#include "cburgers/util.hpp"

namespace cburgers {

namespace {

template <class T>
void read_key(const Json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw UsageError(std::string("config: bad value for key '") + key + "'");
  }
}

}  // namespace

RunConfig config_from_json(const Json& j) {
  RunConfig cfg;
  if (!j.is_object()) throw UsageError("config: top level must be a JSON object");
  read_key(j, "command", cfg.command);
  read_key(j, "threads", cfg.threads);
  if (j.contains("params")) {
    const Json& p = j.at("params");
    read_key(p, "nu", cfg.nu);
    read_key(p, "alpha", cfg.alpha);
    read_key(p, "gamma", cfg.gamma);
  }
  if (j.contains("init")) {
    const Json& p = j.at("init");
    read_key(p, "file", cfg.init_file);
    read_key(p, "inline", cfg.init_inline);
    read_key(p, "a0", cfg.a0);
  }
  if (j.contains("numeric")) {
    const Json& p = j.at("numeric");
    read_key(p, "precision", cfg.precision);
    read_key(p, "dt", cfg.dt);
    read_key(p, "N", cfg.N);
    read_key(p, "t_end", cfg.t_end);
    read_key(p, "k_max", cfg.k_max);
    if (p.contains("t_grid")) {
      const Json& g = p.at("t_grid");
      read_key(g, "t0", cfg.t0);
      read_key(g, "t1", cfg.t1);
      read_key(g, "count", cfg.t_count);
    }
  }
  if (j.contains("output")) {
    const Json& p = j.at("output");
    read_key(p, "directory", cfg.out_dir);
    if (p.contains("formats")) {
      std::vector<std::string> formats;
      read_key(p, "formats", formats);
      cfg.csv = cfg.json = false;
      for (const auto& f : formats) {
        if (f == "csv")
          cfg.csv = true;
        else if (f == "json")
          cfg.json = true;
        else
          throw UsageError("config: unknown entry in 'formats': " + f);
      }
    }
  }
  if (j.contains("series")) {
    const Json& p = j.at("series");
    read_key(p, "model", cfg.model);
    read_key(p, "eval_t", cfg.eval_t);
  }
  if (j.contains("blowup")) {
    const Json& p = j.at("blowup");
    read_key(p, "A", cfg.cert_A);
    read_key(p, "T", cfg.cert_T);
    read_key(p, "K", cfg.cert_K);
    read_key(p, "sign_k_max", cfg.sign_k_max);
  }
  if (j.contains("simulate")) {
    const Json& p = j.at("simulate");
    read_key(p, "scheme", cfg.scheme);
    read_key(p, "record_every", cfg.record_every);
    read_key(p, "blowup_cap", cfg.blowup_cap);
    read_key(p, "hs_order", cfg.hs_order);
  }
  if (j.contains("bounds")) {
    const Json& p = j.at("bounds");
    read_key(p, "check", cfg.check);
    read_key(p, "s", cfg.s_values);
    read_key(p, "c2", cfg.c2);
  }
  return cfg;
}

Json config_to_json(const RunConfig& c) {
  return Json{
      {"command", c.command},
      {"threads", c.threads},
      {"params", Json{{"nu", c.nu}, {"alpha", c.alpha}, {"gamma", c.gamma}}},
      {"init", Json{{"file", c.init_file}, {"inline", c.init_inline}, {"a0", c.a0}}},
      {"numeric",
       Json{{"precision", c.precision},
            {"dt", c.dt},
            {"N", c.N},
            {"t_end", c.t_end},
            {"k_max", c.k_max},
            {"t_grid", Json{{"t0", c.t0}, {"t1", c.t1}, {"count", c.t_count}}}}},
      {"output",
       Json{{"directory", c.out_dir},
            {"formats", [&] {
               std::vector<std::string> f;
               if (c.csv) f.push_back("csv");
               if (c.json) f.push_back("json");
               return f;
             }()}}},
      {"series", Json{{"model", c.model}, {"eval_t", c.eval_t}}},
      {"blowup",
       Json{{"A", c.cert_A}, {"T", c.cert_T}, {"K", c.cert_K}, {"sign_k_max", c.sign_k_max}}},
      {"simulate",
       Json{{"scheme", c.scheme},
            {"record_every", c.record_every},
            {"blowup_cap", c.blowup_cap},
            {"hs_order", c.hs_order}}},
      {"bounds", Json{{"check", c.check}, {"s", c.s_values}, {"c2", c.c2}}}};
}

void validate_config(const RunConfig& c) {
  static const std::vector<std::string> commands = {"series", "simulate", "blowup-cert",
                                                    "partitions", "bounds"};
  if (c.command.empty()) throw UsageError("config: missing required key 'command'");
  if (std::find(commands.begin(), commands.end(), c.command) == commands.end())
    throw UsageError("config: unknown 'command': " + c.command);
  if (c.precision < 53) throw UsageError("config: 'precision' must be >= 53");
  if (c.dt <= 0) throw UsageError("config: 'dt' must be > 0");
  if (c.N < 1) throw UsageError("config: 'N' must be >= 1");
  if (c.k_max < 1) throw UsageError("config: 'k_max' must be >= 1");
  if (c.t_count < 2) throw UsageError("config: 't_grid.count' must be >= 2");
  if (c.threads < 1) throw UsageError("config: 'threads' must be >= 1");
  if (!c.init_file.empty() && !std::filesystem::exists(c.init_file))
    throw UsageError("config: 'init.file' does not exist: " + c.init_file);
  if (c.check != "geometric" && c.check != "coefficients" && c.check != "envelope")
    throw UsageError("config: 'bounds.check' must be geometric|coefficients|envelope");
  if (c.scheme != "ifrk4" && c.scheme != "ifeuler")
    throw UsageError("config: 'simulate.scheme' must be ifrk4|ifeuler");
}

RunConfig parse_cli(int argc, const char* const* argv) {
  // Phase 1: config file, if any.
  RunConfig cfg;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--config") {
      if (i + 1 >= argc) throw UsageError("--config needs a file path");
      std::ifstream in(argv[i + 1]);
      if (!in) throw UsageError(std::string("config file not found: ") + argv[i + 1]);
      Json j;
      try {
        in >> j;
      } catch (const Json::exception& e) {
        throw UsageError(std::string("config file parse error: ") + e.what());
      }
      cfg = config_from_json(j);
    }
  }

  // Phase 2: flags override file values.
  CLI::App app{"cburgers: exact series, spectral solver and certified checks for the\n"
               "complex Burgers / KdV-Burgers equations on the torus"};
  app.fallthrough();
  app.set_version_flag("--version", kToolVersion);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (flags override file values)");
  app.add_option("--nu", cfg.nu, "viscosity nu (rational or decimal string)");
  app.add_option("--alpha", cfg.alpha, "dispersion alpha");
  app.add_option("--gamma", cfg.gamma, "fractal Laplacian exponent gamma");
  app.add_option("--precision", cfg.precision, "working precision in bits (>= 53)");
  app.add_option("--out", cfg.out_dir, "output directory (default $CBURGERS_OUT or .)");
  app.add_option("--threads", cfg.threads, "internal parallelism cap");
  app.add_option("--init", cfg.init_inline, "inline initial data: re[,im] per mode");
  app.add_option("--init-file", cfg.init_file, "initial data JSON file [{k,re,im},...]");
  app.add_option("--a0", cfg.a0, "single-mode amplitude a_{01}");
  app.add_option("--k-max", cfg.k_max, "highest mode for tables/bounds");

  auto* series = app.add_subcommand("series", "build exact exponomial tables");
  series->add_option("--model", cfg.model, "burgers | kdvb | auto");
  series->add_option("--eval-t", cfg.eval_t, "evaluation times for the CSV output");

  auto* simulate = app.add_subcommand("simulate", "integrate the truncated Galerkin system");
  simulate->add_option("--dt", cfg.dt, "time step");
  simulate->add_option("--N", cfg.N, "truncation size");
  simulate->add_option("--t-end", cfg.t_end, "final time");
  simulate->add_option("--scheme", cfg.scheme, "ifrk4 | ifeuler");
  simulate->add_option("--record-every", cfg.record_every, "sampling stride in steps");
  simulate->add_option("--blowup-cap", cfg.blowup_cap, "L2 threshold for suspected blow-up");
  simulate->add_option("--hs-order", cfg.hs_order, "H^s order recorded along the trajectory");

  auto* cert = app.add_subcommand("blowup-cert", "build and verify a blow-up certificate");
  cert->add_option("--A", cfg.cert_A, "amplitude ratio A = a e^{-nu T} (>= 1)");
  cert->add_option("--T", cfg.cert_T, "blow-up time (or 'auto' = T0 upper bound + 0.01)");
  cert->add_option("--K", cfg.cert_K, "modes to verify");
  cert->add_option("--sign-k-max", cfg.sign_k_max, "also check the sign pattern up to this k");

  auto* partitions = app.add_subcommand("partitions", "partition counts and asymptotics");

  auto* bounds = app.add_subcommand("bounds", "regularity bound checks");
  bounds->add_option("--check", cfg.check, "geometric | coefficients | envelope");
  bounds->add_option("--s", cfg.s_values, "Sobolev orders for the decay fit");
  bounds->add_option("--c2", cfg.c2, "given envelope constant (0 = fit)");
  bounds->add_option("--t0", cfg.t0, "t grid start");
  bounds->add_option("--t1", cfg.t1, "t grid end");
  bounds->add_option("--t-count", cfg.t_count, "t grid size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help() << std::endl;
    std::exit(0);
  } catch (const CLI::CallForVersion&) {
    std::cout << kToolVersion << std::endl;
    std::exit(0);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (auto* sub : {series, simulate, cert, partitions, bounds})
    if (sub->parsed()) cfg.command = sub->get_name();
  validate_config(cfg);
  return cfg;
}

namespace {

std::vector<GaussianRational> resolve_init(const RunConfig& cfg) {
  if (!cfg.init_file.empty()) return load_init_file(cfg.init_file);
  if (!cfg.init_inline.empty()) {
    std::vector<GaussianRational> init;
    for (const auto& item : cfg.init_inline) {
      auto comma = item.find(',');
      if (comma == std::string::npos)
        init.emplace_back(parse_rational(item));
      else
        init.emplace_back(parse_rational(item.substr(0, comma)),
                          parse_rational(item.substr(comma + 1)));
    }
    return init;
  }
  return {GaussianRational(parse_rational(cfg.a0))};
}

Json structural_to_json(const StructuralReport& rep) {
  auto flag = [](const std::optional<bool>& f) { return f ? Json(*f) : Json(nullptr); };
  return Json{{"k", rep.k},
              {"zero_sum", flag(rep.zero_sum)},
              {"leading_coeff", flag(rep.leading_coeff)},
              {"k_plus_2", flag(rep.k_plus_2)},
              {"odd_gap", flag(rep.odd_gap)},
              {"u_gap", flag(rep.u_gap)},
              {"v_gap", flag(rep.v_gap)},
              {"ok", rep.ok()}};
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

int run_series(const RunConfig& cfg, const std::string& dir, const std::string& hash) {
  ModelParams params{parse_rational(cfg.nu), parse_rational(cfg.alpha), parse_rational(cfg.gamma)};
  params.validate_for_exponomial();
  std::vector<GaussianRational> init = resolve_init(cfg);
  bool burgers = cfg.model == "burgers" ||
                 (cfg.model == "auto" && params.alpha == 0 && init.size() == 1);
  if (cfg.model == "burgers" && (params.alpha != 0 || init.size() != 1))
    throw UsageError("series: model=burgers needs alpha=0 and single-mode data");

  Json rows = Json::array();
  Json structural = Json::array();
  bool all_ok = true;
  if (burgers) {
    BurgersFamily family(init[0], params.nu);
    for (int k = 1; k <= cfg.k_max; ++k) {
      const CoeffTable& row = family.row(k);
      rows.push_back(table_to_json(row));
      StructuralReport rep = structural_check(row);
      all_ok = all_ok && rep.ok();
      structural.push_back(structural_to_json(rep));
    }
  } else {
    KdvbFamilyQ family(init, params.nu, params.alpha);
    const GaussianRational* a01 = init.size() == 1 ? &init[0] : nullptr;
    for (int k = 1; k <= cfg.k_max; ++k) {
      const ExpSeriesQ& row = family.row(k);
      rows.push_back(table_to_json(row));
      StructuralReport rep = structural_check(row, a01);
      all_ok = all_ok && rep.ok();
      structural.push_back(structural_to_json(rep));
    }
  }
  Json out{{"model", burgers ? "burgers" : "kdvb"},
           {"nu", cfg.nu},
           {"alpha", cfg.alpha},
           {"k_max", cfg.k_max},
           {"rows", rows},
           {"structural", structural},
           {"structural_ok", all_ok}};
  stamp_output(out, hash);
  if (cfg.json) write_json_atomic(join_path(dir, "series_tables.json"), out);

  if (cfg.csv && !cfg.eval_t.empty()) {
    BurgersFamily bf(init[0], params.nu);
    KdvbFamilyQ kf(init, params.nu, params.alpha);
    std::string csv = "t,k,re,im\n";
    char buf[96];
    for (double t : cfg.eval_t)
      for (int k = 1; k <= cfg.k_max; ++k) {
        EvalResult er = burgers ? evaluate_mode(bf.row(k), BigFloat(t, 64), cfg.precision)
                                : evaluate_mode(kf.row(k), BigFloat(t, 64), cfg.precision);
        std::complex<double> z = er.value.to_complex();
        std::snprintf(buf, sizeof(buf), "%.17g,%d,%.17g,%.17g\n", t, k, z.real(), z.imag());
        csv += buf;
      }
    write_text_atomic(join_path(dir, "series_eval.csv"), csv);
  }
  std::cout << "series: model=" << (burgers ? "burgers" : "kdvb") << " k_max=" << cfg.k_max
            << " structural_ok=" << (all_ok ? "true" : "false") << "\n";
  return all_ok ? 0 : 1;
}

int run_simulate(const RunConfig& cfg, const std::string& dir, const std::string& hash) {
  ModelParams params{parse_rational(cfg.nu), parse_rational(cfg.alpha), parse_rational(cfg.gamma)};
  params.validate();
  std::vector<GaussianRational> init = resolve_init(cfg);
  SpectralState state;
  state.t = 0;
  state.a.assign(static_cast<size_t>(cfg.N), {0.0, 0.0});
  for (size_t i = 0; i < init.size() && i < state.a.size(); ++i)
    state.a[i] = {init[i].re.get_d(), init[i].im.get_d()};

  SolverConfig solver;
  solver.dt = cfg.dt;
  solver.scheme = cfg.scheme == "ifeuler" ? Scheme::ifeuler : Scheme::ifrk4;
  solver.blowup_cap = cfg.blowup_cap;
  solver.record_every = cfg.record_every;
  solver.hs_order = cfg.hs_order;

  Trajectory traj = integrate(state, params, solver, cfg.t_end);
  Json summary = trajectory_summary_json(traj);
  stamp_output(summary, hash);
  if (cfg.json) write_json_atomic(join_path(dir, "simulate_summary.json"), summary);
  if (cfg.csv) write_text_atomic(join_path(dir, "trajectory.csv"), trajectory_to_csv(traj));
  std::cout << "simulate: status=" << to_string(traj.status) << " t_final=" << traj.t_final
            << " l2=" << (traj.samples.empty() ? 0.0 : traj.samples.back().l2) << "\n";
  return 0;
}

int run_blowup_cert(const RunConfig& cfg, const std::string& dir, const std::string& hash) {
  Rational nu = parse_rational(cfg.nu);
  BigFloat A = BigFloat::from_string(cfg.cert_A, cfg.precision);
  BigFloat T(cfg.precision);
  if (cfg.cert_T == "auto") {
    T0Bound t0 = T0_bound(1000, nu, 192);
    T = t0.upper.with_prec(cfg.precision) + BigFloat(0.01, cfg.precision);
  } else {
    T = BigFloat::from_string(cfg.cert_T, cfg.precision);
  }
  BlowupCertificate cert = make_certificate(T, nu, A, cfg.cert_K, cfg.precision, cfg.threads);
  Json out = certificate_to_json(cert);
  stamp_output(out, hash);
  if (cfg.json) write_json_atomic(join_path(dir, "certificate.json"), out);

  bool sign_ok = true;
  if (cfg.sign_k_max > 0) {
    // The sign-pattern check needs rational a > 0; round the certificate's a to a
    // rational with plenty of digits.
    SignPatternOptions opts;
    opts.precision = cfg.precision;
    SignPatternReport rep =
        verify_sign_pattern(cfg.sign_k_max, parse_rational(cert.a.str(40)), nu,
                            log_spaced_samples(1e-3, T.to_double(), 32, cfg.precision), opts);
    sign_ok = rep.all_pass;
    Json sj = sign_pattern_to_json(rep);
    stamp_output(sj, hash);
    if (cfg.json) write_json_atomic(join_path(dir, "sign_pattern.json"), sj);
  }

  std::cout << "blowup-cert: valid=" << (cert.valid ? "true" : "false") << " K=" << cert.K_verified
            << " T=" << cert.T.to_double() << " a=" << cert.a.to_double() << "\n";
  return (cert.valid && sign_ok) ? 0 : 1;
}

int run_partitions(const RunConfig& cfg, const std::string& dir, const std::string& hash) {
  HardyRamanujanReport rep = hardy_ramanujan_report(std::max(cfg.k_max, 10));
  if (cfg.csv) write_text_atomic(join_path(dir, "partitions.csv"), partitions_to_csv(rep));
  Json summary{{"k_max", rep.rows.back().k},
               {"N_k_max", rep.rows.back().n_k.get_str()},
               {"c1_estimate", rep.c1_estimate},
               {"min_ratio_asym", rep.min_ratio_asym},
               {"max_ratio_asym", rep.max_ratio_asym},
               {"bound_ratio_decreasing_tail", rep.bound_ratio_decreasing_tail}};
  stamp_output(summary, hash);
  if (cfg.json) write_json_atomic(join_path(dir, "partitions_summary.json"), summary);
  std::cout << "partitions: k_max=" << rep.rows.back().k << " N_k=" << rep.rows.back().n_k.get_str()
            << " c1_estimate=" << rep.c1_estimate << "\n";
  return 0;
}

int run_bounds(const RunConfig& cfg, const std::string& dir, const std::string& hash) {
  Rational nu = parse_rational(cfg.nu);
  Rational alpha = parse_rational(cfg.alpha);
  std::vector<GaussianRational> init = resolve_init(cfg);

  Json regime{{"nu", cfg.nu},
              {"alpha", cfg.alpha},
              {"k_max", cfg.k_max},
              {"t_grid", Json{{"t0", cfg.t0}, {"t1", cfg.t1}, {"count", cfg.t_count}}}};
  {
    Json data = Json::array();
    for (const auto& c : init) data.push_back(Json{{"re", rational_str(c.re)}, {"im", rational_str(c.im)}});
    regime["init"] = data;
  }

  if (cfg.check == "geometric") {
    std::vector<double> grid = uniform_grid(cfg.t0, cfg.t1, cfg.t_count);
    GeometricBoundReport rep =
        check_geometric_bound(nu, alpha, init[0], cfg.k_max, grid, cfg.precision);
    Json out = geometric_report_to_json(rep);
    out["regime"] = regime;
    stamp_output(out, hash);
    if (cfg.json) write_json_atomic(join_path(dir, "bounds_geometric.json"), out);
    std::cout << "bounds geometric: worst_ratio=" << rep.worst_ratio
              << " pass=" << (rep.pass ? "true" : "false")
              << (rep.outside_hypothesis ? " (outside-hypothesis)" : "") << "\n";
    if (rep.outside_hypothesis) return 0;  // informational, not a failure
    return rep.pass ? 0 : 1;
  }
  if (cfg.check == "coefficients") {
    CoeffBoundReport rep = check_coefficient_boundedness(nu, alpha, cfg.k_max);
    Json out = coeff_bound_report_to_json(rep);
    out["regime"] = regime;
    stamp_output(out, hash);
    if (cfg.json) write_json_atomic(join_path(dir, "bounds_coefficients.json"), out);
    std::cout << "bounds coefficients: all_le_one=" << (rep.all_le_one ? "true" : "false")
              << (rep.hypothesis_met ? "" : " (outside-hypothesis)") << "\n";
    if (!rep.hypothesis_met) return 0;
    return rep.all_le_one ? 0 : 1;
  }
  // envelope
  double t_start = cfg.t0 > 0 ? cfg.t0 : (cfg.t1 - cfg.t0) / (cfg.t_count - 1);
  std::vector<double> grid = uniform_grid(t_start, cfg.t1, cfg.t_count);
  EnvelopeReport rep = envelope_report(nu, alpha, init, cfg.k_max, grid, cfg.s_values, cfg.c2,
                                       {0, 0}, cfg.precision);
  Json out = envelope_report_to_json(rep);
  out["regime"] = regime;
  stamp_output(out, hash);
  if (cfg.json) write_json_atomic(join_path(dir, "bounds_envelope.json"), out);
  if (cfg.csv) {
    KdvbFamilyQ family(init, nu, alpha);
    std::vector<std::vector<double>> norms(cfg.s_values.size());
    std::vector<std::vector<double>> mags(static_cast<size_t>(cfg.k_max));
    for (int k = 1; k <= cfg.k_max; ++k)
      for (double t : grid)
        mags[static_cast<size_t>(k - 1)].push_back(
            abs(evaluate_mode(family.row(k), BigFloat(t, 64), cfg.precision).value).to_double());
    for (size_t si = 0; si < cfg.s_values.size(); ++si)
      for (size_t ti = 0; ti < grid.size(); ++ti) {
        double norm2 = 0;
        for (int k = 1; k <= cfg.k_max; ++k) {
          double m = mags[static_cast<size_t>(k - 1)][ti];
          norm2 += std::pow(1.0 + static_cast<double>(k) * k, cfg.s_values[si]) * m * m;
        }
        norms[si].push_back(std::sqrt(norm2));
      }
    write_text_atomic(join_path(dir, "hs_decay.csv"), hs_decay_csv(grid, norms, cfg.s_values));
  }
  std::cout << "bounds envelope: c2_min=" << rep.c2_min
            << " pass=" << (rep.pass ? "true" : "false") << "\n";
  return rep.pass ? 0 : 1;
}

}  // namespace

int run(const RunConfig& cfg) {
  validate_config(cfg);
  std::string dir = cfg.out_dir;
  if (dir.empty()) {
    const char* env = std::getenv("CBURGERS_OUT");
    dir = (env && *env) ? env : ".";
  }
  try {
    std::filesystem::create_directories(dir);
  } catch (const std::filesystem::filesystem_error& e) {
    throw UsageError("output directory is not writable: " + dir);
  }
  // The hash identifies the computation; where results land and how many
  // threads ran do not change them.
  Json hashed = config_to_json(cfg);
  hashed.erase("output");
  hashed.erase("threads");
  std::string hash = config_hash(hashed);

  if (cfg.command == "series") return run_series(cfg, dir, hash);
  if (cfg.command == "simulate") return run_simulate(cfg, dir, hash);
  if (cfg.command == "blowup-cert") return run_blowup_cert(cfg, dir, hash);
  if (cfg.command == "partitions") return run_partitions(cfg, dir, hash);
  if (cfg.command == "bounds") return run_bounds(cfg, dir, hash);
  throw UsageError("config: unknown 'command': " + cfg.command);
}

int cli_main(int argc, const char* const* argv) {
  try {
    RunConfig cfg = parse_cli(argc, argv);
    return run(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cburgers
