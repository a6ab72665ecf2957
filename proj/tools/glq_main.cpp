// glq: command-line harness for the covariant deformed oscillator checks.
//
//   glq verify algebra   glq coherent check   glq qexp eval   glq jackson moments
//   glq qsym exchange|norm|identity|appendix
//
// Exit status: 0 all checks pass, 1 a check failed, 2 invalid configuration.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "glq/commands.hpp"

namespace {

constexpr int kConfigErrorExit = 2;

int emit(const glq::Report& report, const glq::RunConfig& config) {
  const std::string body = config.format == glq::OutputFormat::json
                               ? report.to_json().dump(2) + "\n"
                               : report.to_text();
  if (config.out_path) {
    std::ofstream out(*config.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "glq: cannot open " << *config.out_path << " for writing\n";
      return kConfigErrorExit;
    }
    out << body;
  } else {
    std::cout << body;
  }
  return glq::exit_status(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for gl_q(n)-covariant multimode oscillators"};
  app.require_subcommand(1);
  app.fallthrough();

  glq::RunConfig config;
  std::vector<double> qs;
  unsigned modes = 0;
  unsigned cutoff = 0;
  unsigned particles = 0;
  double tol = 0.0;
  std::string variant = "squared-q";
  std::string format = "text";
  std::string out_path;
  std::string word;
  std::vector<std::string> z_values;
  std::vector<std::string> x_values;

  auto* q_opt = app.add_option("--q", qs, "Deformation parameters, comma separated")->delimiter(',');
  auto* modes_opt = app.add_option("--modes", modes, "Number of oscillator modes / letters");
  auto* cutoff_opt = app.add_option("--cutoff", cutoff, "Occupation cutoff per mode");
  auto* n_opt = app.add_option("--N", particles, "Particle count or enumeration bound");
  auto* tol_opt = app.add_option("--tol", tol, "Tolerance overriding the per-check defaults");
  app.add_flag("--exact", config.exact, "Use exact polynomial arithmetic");
  app.add_option("--weight-variant", variant, "Completeness weight: paper-q or squared-q")
      ->check(CLI::IsMember({"paper-q", "squared-q"}));
  app.add_option("--format", format, "Report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  auto* out_opt = app.add_option("--out", out_path, "Write the report to this file");
  app.add_option("--seed", config.seed, "Seed for randomized sweeps");
  auto* word_opt = app.add_option("--word", word, "Word as comma-separated 1-based labels");
  app.add_option("--z", z_values, "Coherent amplitudes, re or re:im, comma separated")
      ->delimiter(',');
  app.add_option("--x", x_values, "q-exponential arguments, re or re:im, comma separated")
      ->delimiter(',');
  app.add_flag("--inject-fault", config.inject_fault,
               "Corrupt one amplitude of a_1 (negative control)");

  using Runner = glq::Report (*)(const glq::RunConfig&);
  Runner runner = nullptr;
  auto add_verb = [&runner](CLI::App* parent, const std::string& name, const std::string& help,
                            Runner fn) {
    parent->add_subcommand(name, help)->callback([&runner, fn] { runner = fn; });
  };

  auto* verify = app.add_subcommand("verify", "Operator-algebra checks")->require_subcommand(1);
  add_verb(verify, "algebra", "Defining relations on the truncated Fock space",
           &glq::run_verify_algebra);
  auto* coherent = app.add_subcommand("coherent", "Coherent-state checks")->require_subcommand(1);
  add_verb(coherent, "check", "Normalization, twisted eigenvalue and completeness",
           &glq::run_coherent_check);
  auto* qsym = app.add_subcommand("qsym", "q-symmetric state checks")->require_subcommand(1);
  add_verb(qsym, "exchange", "Exchange relations and transposition operators",
           &glq::run_qsym_exchange);
  add_verb(qsym, "norm", "Norms of q-symmetric states", &glq::run_qsym_norm);
  add_verb(qsym, "identity", "Inversion generating function identity", &glq::run_qsym_identity);
  add_verb(qsym, "appendix", "Inductive-step identity", &glq::run_qsym_appendix);
  auto* qexp = app.add_subcommand("qexp", "q-exponential checks")->require_subcommand(1);
  add_verb(qexp, "eval", "Series/product agreement and functional equation", &glq::run_qexp_eval);
  auto* jackson = app.add_subcommand("jackson", "Jackson integral checks")->require_subcommand(1);
  add_verb(jackson, "moments", "Moments against q-factorials", &glq::run_jackson_moments);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigErrorExit;
  }

  try {
    config.qs = qs;
    if (*modes_opt) config.modes = modes;
    if (*cutoff_opt) config.cutoff = cutoff;
    if (*n_opt) config.particles = particles;
    if (*tol_opt) config.tol = tol;
    if (*out_opt) config.out_path = out_path;
    if (*word_opt) config.word = word;
    config.weight_variant = glq::weight_variant_from_string(variant);
    config.format = format == "json" ? glq::OutputFormat::json : glq::OutputFormat::text;
    for (const auto& v : z_values) config.z.push_back(glq::parse_complex(v));
    for (const auto& v : x_values) config.x.push_back(glq::parse_complex(v));
    (void)q_opt;

    return emit(runner(config), config);
  } catch (const glq::ConfigError& e) {
    std::cerr << "glq: " << e.what() << '\n';
    return kConfigErrorExit;
  }
}
