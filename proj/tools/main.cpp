#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "hyperhelm/errors.hpp"
#include "hyperhelm/simd.hpp"

namespace hyperhelm::cli {

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << text;
  if (!f.flush()) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace hyperhelm::cli

int main(int argc, char** argv) {
  using namespace hyperhelm::cli;
  CLI::App app{"Hyperspherical Helmholtz toolkit: special functions, identity checks, sound-field reconstruction"};
  app.require_subcommand(1);

  EvalOptions eval;
  auto* ev = app.add_subcommand("eval", "Tabulate a function as CSV");
  ev->add_option("function", eval.function, "hyper_j | hyper_n | hyper_h1 | hyper_h2 | gegenbauer | harmonic_dim")
      ->required()
      ->check(CLI::IsMember({"hyper_j", "hyper_n", "hyper_h1", "hyper_h2", "gegenbauer", "harmonic_dim"}));
  ev->add_option("--d", eval.d, "Dimension");
  ev->add_option("--n", eval.n, "Order / degree");
  ev->add_option("--lambda", eval.lambda, "Gegenbauer parameter");
  ev->add_option("--from", eval.from, "First abscissa");
  ev->add_option("--to", eval.to, "Last abscissa (inclusive)");
  ev->add_option("--step", eval.step, "Abscissa step");
  ev->add_option("--n-max", eval.n_max, "Largest degree for harmonic_dim");
  ev->add_option("--out", eval.out, "Output file (default stdout)");

  VerifyOptions verify;
  auto* ve = app.add_subcommand("verify", "Run an identity check suite; exit 0 iff every case passes");
  ve->add_option("suite", verify.suite, "addition | funk-hecke | gegenbauer | plane-wave | orthonormality | radiation | helmholtz")
      ->required()
      ->check(CLI::IsMember(
          {"addition", "funk-hecke", "gegenbauer", "plane-wave", "orthonormality", "radiation", "helmholtz"}));
  ve->add_option("--d", verify.d, "Dimension");
  ve->add_option("--k", verify.k, "Wavenumber");
  ve->add_option("--N", verify.order, "Truncation order (default: ceil(e k R / 2) + 10)");
  ve->add_option("--seed", verify.seed, "RNG seed");
  ve->add_option("--tol", verify.tol, "Tolerance");
  ve->add_option("--n-max", verify.n_max, "Largest degree");
  ve->add_option("--count", verify.count, "Number of random cases");
  ve->add_option("--radius", verify.radius, "Radius of the sampling ball");
  ve->add_option("--out", verify.out, "Output file (default stdout)");

  ReconstructOptions rec;
  auto* re = app.add_subcommand("reconstruct", "Fit a sampled field from a JSON config and write CSV artifacts");
  re->add_option("config", rec.config, "Config file (JSON)")->required();
  re->add_option("out_dir", rec.out_dir, "Output directory")->required();

  DimsOptions dims;
  auto* di = app.add_subcommand("dims", "Table of harmonic space dimensions");
  di->add_option("--d-min", dims.d_min, "Smallest dimension");
  di->add_option("--d-max", dims.d_max, "Largest dimension");
  di->add_option("--n-max", dims.n_max, "Largest degree");
  di->add_option("--out", dims.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*ev) return run_eval(eval);
    if (*ve) return run_verify(verify);
    if (*re) return run_reconstruct(rec);
    if (*di) return run_dims(dims);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const hyperhelm::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericFailure;
  }
  return kUsage;
}
