#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cburgers/io.hpp"

namespace cburgers {

// Resolved run configuration: JSON config file values overlaid by CLI flags.
struct RunConfig {
  std::string command;  // series | simulate | blowup-cert | partitions | bounds

  // model parameters (rational strings, e.g. "1", "1/2", "0.4")
  std::string nu = "1";
  std::string alpha = "0";
  std::string gamma = "1";

  // initial data: file wins over inline; inline entries are "re" or "re,im";
  // a0 is the single-mode shortcut used when both are empty.
  std::string init_file;
  std::vector<std::string> init_inline;
  std::string a0 = "1";

  // numeric settings
  long precision = 256;
  double dt = 1e-3;
  int N = 256;
  double t_end = 1.0;
  int k_max = 12;
  double t0 = 0.0;
  double t1 = 10.0;
  int t_count = 101;

  // output
  std::string out_dir;  // empty: $CBURGERS_OUT or "."
  bool csv = true;
  bool json = true;
  int threads = 1;

  // series
  std::string model = "auto";  // burgers | kdvb | auto
  std::vector<double> eval_t;

  // blowup-cert
  std::string cert_A = "1.05";
  std::string cert_T = "auto";  // auto: T0_bound(1000).upper + 0.01
  int cert_K = 12;
  int sign_k_max = 0;  // also emit a sign-pattern report when > 0

  // simulate
  std::string scheme = "ifrk4";
  int record_every = 10;
  double blowup_cap = 1e8;
  double hs_order = 1.0;

  // bounds
  std::string check = "geometric";  // geometric | coefficients | envelope
  std::vector<double> s_values = {0.0, 1.0, 2.0};
  double c2 = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// JSON <-> config; errors name the offending key.
RunConfig config_from_json(const Json& j);
Json config_to_json(const RunConfig& config);

// Two-phase parse: --config file first, then flags override.
RunConfig parse_cli(int argc, const char* const* argv);

void validate_config(const RunConfig& config);

// Executes one command; writes declared outputs; prints a one-line summary.
// Returns 0 on success, 1 on check failure.
int run(const RunConfig& config);

// parse + run with error reporting; returns the process exit code
// (2 on usage/parse errors).
int cli_main(int argc, const char* const* argv);

}  // namespace cburgers
