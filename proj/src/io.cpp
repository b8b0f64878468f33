#include "cburgers/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace cburgers {

std::string config_hash(const Json& config) {
  std::string dump = config.dump();
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
  return buf;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

void write_json_atomic(const std::string& path, const Json& j) {
  write_text_atomic(path, j.dump(2) + "\n");
}

void stamp_output(Json& j, const std::string& hash) {
  j["tool_version"] = kToolVersion;
  j["config_hash"] = hash;
}

namespace {

Json rational_entry(long h, long l, const GaussianRational& c) {
  return Json{{"h", h},
              {"l", l},
              {"re_num", c.re.get_num().get_str()},
              {"re_den", c.re.get_den().get_str()},
              {"im_num", c.im.get_num().get_str()},
              {"im_den", c.im.get_den().get_str()}};
}

GaussianRational rational_entry_parse(const Json& e) {
  auto field = [&](const char* key) -> std::string {
    const Json& v = e.at(key);
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  Rational re(field("re_num") + "/" + field("re_den"));
  Rational im(field("im_num") + "/" + field("im_den"));
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

}  // namespace

Json table_to_json(const CoeffTable& table) {
  Json entries = Json::array();
  for (const auto& [m, c] : table.entries) entries.push_back(rational_entry(m, m, c));
  return Json{{"kind", "burgers"},
              {"k", table.k},
              {"nu", rational_str(table.nu)},
              {"alpha", "0"},
              {"a0_re", rational_str(table.a0.re)},
              {"a0_im", rational_str(table.a0.im)},
              {"entries", entries}};
}

Json table_to_json(const ExpSeriesQ& series) {
  Json entries = Json::array();
  for (const auto& t : series.terms) entries.push_back(rational_entry(t.h, t.l, t.coeff));
  return Json{{"kind", "kdvb"},
              {"k", series.k},
              {"l_collapsed", series.l_collapsed},
              {"nu", rational_str(series.nu)},
              {"alpha", rational_str(series.alpha)},
              {"a0k_re", rational_str(series.a0k.re)},
              {"a0k_im", rational_str(series.a0k.im)},
              {"entries", entries}};
}

Json table_to_json(const ExpSeriesF& series) {
  Json entries = Json::array();
  for (const auto& t : series.terms)
    entries.push_back(Json{{"h", t.h},
                           {"l", t.l},
                           {"re", t.coeff.real().str()},
                           {"im", t.coeff.imag().str()}});
  return Json{{"kind", "kdvb_float"},
              {"k", series.k},
              {"l_collapsed", series.l_collapsed},
              {"precision_bits", static_cast<long>(series.prec)},
              {"nu", series.nu.str()},
              {"alpha", series.alpha.str()},
              {"a0k_re", series.a0k.real().str()},
              {"a0k_im", series.a0k.imag().str()},
              {"entries", entries}};
}

CoeffTable coeff_table_from_json(const Json& j) {
  if (j.at("kind") != "burgers") throw std::invalid_argument("coeff_table_from_json: kind mismatch");
  CoeffTable table;
  table.k = j.at("k").get<int>();
  table.nu = parse_rational(j.at("nu").get<std::string>());
  table.a0 = GaussianRational::parse(j.at("a0_re").get<std::string>(), j.at("a0_im").get<std::string>());
  for (const auto& e : j.at("entries"))
    table.entries.emplace_back(e.at("h").get<long>(), rational_entry_parse(e));
  return table;
}

ExpSeriesQ exp_series_from_json(const Json& j) {
  if (j.at("kind") != "kdvb") throw std::invalid_argument("exp_series_from_json: kind mismatch");
  ExpSeriesQ s;
  s.k = j.at("k").get<int>();
  s.l_collapsed = j.at("l_collapsed").get<bool>();
  s.nu = parse_rational(j.at("nu").get<std::string>());
  s.alpha = parse_rational(j.at("alpha").get<std::string>());
  s.a0k = GaussianRational::parse(j.at("a0k_re").get<std::string>(), j.at("a0k_im").get<std::string>());
  for (const auto& e : j.at("entries"))
    s.terms.push_back({e.at("h").get<long>(), e.at("l").get<long>(), rational_entry_parse(e)});
  return s;
}

std::vector<GaussianRational> init_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("init data: expected a JSON array of {k, re, im}");
  int max_k = 0;
  for (const auto& e : j) max_k = std::max(max_k, e.at("k").get<int>());
  std::vector<GaussianRational> init(static_cast<size_t>(max_k));
  for (const auto& e : j) {
    int k = e.at("k").get<int>();
    if (k < 1) throw std::invalid_argument("init data: k must be >= 1");
    auto parse_part = [&](const char* key) -> Rational {
      if (!e.contains(key)) return Rational(0);
      const Json& v = e.at(key);
      if (v.is_string()) return parse_rational(v.get<std::string>());
      return parse_rational(Json(v).dump());
    };
    init[static_cast<size_t>(k) - 1] = {parse_part("re"), parse_part("im")};
  }
  return init;
}

std::vector<GaussianRational> load_init_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("init file not found: " + path);
  Json j;
  in >> j;
  return init_from_json(j);
}

Json certificate_to_json(const BlowupCertificate& cert) {
  Json bounds = Json::array();
  for (const auto& b : cert.bounds)
    bounds.push_back(Json{{"k", b.k},
                          {"value", b.value.str()},
                          {"threshold", b.threshold.str()},
                          {"pass", b.pass}});
  return Json{{"T", cert.T.str()},
              {"nu", rational_str(cert.nu)},
              {"A", cert.A.str()},
              {"a", cert.a.str()},
              {"K_verified", cert.K_verified},
              {"T0_lower", cert.t0.lower.str()},
              {"T0_upper", cert.t0.upper.str()},
              {"T0_terms", cert.t0.K},
              {"precision_bits", static_cast<long>(cert.precision_bits)},
              {"bounds", bounds},
              {"valid", cert.valid}};
}

Json sign_pattern_to_json(const SignPatternReport& rep) {
  Json entries = Json::array();
  for (const auto& e : rep.entries)
    entries.push_back(Json{{"k", e.k},
                           {"j", e.j},
                           {"rotation_real", e.rotation_real},
                           {"b_min", e.b_min},
                           {"b_positive_all", e.b_positive_all},
                           {"max_arg_dev", e.max_arg_dev},
                           {"min_abs", e.min_abs}});
  Json abso = Json::array();
  for (const auto& c : rep.abso)
    abso.push_back(Json{{"k", c.k}, {"t", c.t}, {"rel_err", c.rel_err}, {"pass", c.pass}});
  return Json{{"entries", entries}, {"abso", abso}, {"all_pass", rep.all_pass}};
}

Json geometric_report_to_json(const GeometricBoundReport& rep) {
  return Json{{"outside_hypothesis", rep.outside_hypothesis},
              {"worst_ratio", rep.worst_ratio},
              {"worst_k", rep.worst_k},
              {"worst_t", rep.worst_t},
              {"pass", rep.pass}};
}

Json coeff_bound_report_to_json(const CoeffBoundReport& rep) {
  Json per_k = Json::array();
  for (const auto& p : rep.per_k)
    per_k.push_back(Json{{"k", p.k},
                         {"max_abs2", rational_str(p.max_abs2)},
                         {"all_le_one", p.all_le_one},
                         {"crude_ratio", p.crude_ratio}});
  return Json{{"hypothesis_met", rep.hypothesis_met},
              {"per_k", per_k},
              {"all_le_one", rep.all_le_one},
              {"crude_all_le_one", rep.crude_all_le_one}};
}

Json envelope_report_to_json(const EnvelopeReport& rep) {
  Json fits = Json::array();
  for (const auto& f : rep.fits)
    fits.push_back(Json{{"s", f.s},
                        {"delta", f.delta},
                        {"fvu", f.fvu},
                        {"rms_log", f.rms_log},
                        {"pass", f.pass}});
  Json j{{"c2_min", rep.c2_min},
         {"k1_exempted", rep.k1_exempted},
         {"worst_k", rep.worst_k},
         {"worst_t", rep.worst_t},
         {"fits", fits},
         {"pass", rep.pass}};
  if (rep.c2_given) {
    j["c2_given"] = rep.c2_given_value;
    j["c2_given_holds"] = rep.c2_given_holds;
  }
  return j;
}

Json trajectory_summary_json(const Trajectory& traj) {
  Json j{{"status", to_string(traj.status)}, {"t_final", traj.t_final}};
  if (!traj.samples.empty()) {
    const auto& last = traj.samples.back();
    j["l2_final"] = last.l2;
    j["hs_final"] = last.hs;
    j["n_modes"] = last.a.size();
    j["n_samples"] = traj.samples.size();
  }
  return j;
}

namespace {

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string trajectory_to_csv(const Trajectory& traj) {
  std::string out = "t,k,re,im,l2,hs\n";
  for (const auto& smp : traj.samples)
    for (size_t i = 0; i < smp.a.size(); ++i) {
      out += fmt_double(smp.t);
      out += ',';
      out += std::to_string(i + 1);
      out += ',';
      out += fmt_double(smp.a[i].real());
      out += ',';
      out += fmt_double(smp.a[i].imag());
      out += ',';
      out += fmt_double(smp.l2);
      out += ',';
      out += fmt_double(smp.hs);
      out += '\n';
    }
  return out;
}

std::string partitions_to_csv(const HardyRamanujanReport& rep) {
  std::string out = "k,N_k,ratio_asym,ratio_bound\n";
  for (const auto& row : rep.rows) {
    out += std::to_string(row.k);
    out += ',';
    out += row.n_k.get_str();
    out += ',';
    out += fmt_double(row.ratio_asym);
    out += ',';
    out += fmt_double(row.ratio_bound);
    out += '\n';
  }
  return out;
}

std::string hs_decay_csv(const std::vector<double>& t_grid,
                         const std::vector<std::vector<double>>& norms,
                         const std::vector<double>& s_values) {
  std::string out = "t";
  for (double s : s_values) out += ",hs_" + fmt_double(s);
  out += '\n';
  for (size_t ti = 0; ti < t_grid.size(); ++ti) {
    out += fmt_double(t_grid[ti]);
    for (size_t si = 0; si < s_values.size(); ++si) {
      out += ',';
      out += fmt_double(norms[si][ti]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace cburgers
