#include <CLI11.hpp>
#include <iostream>

#include "ergm/commands.hpp"

namespace cli = ergm::cli;

int main(int argc, char** argv) {
  CLI::App app{"Extremal phase diagram of edge-triangle and edge-clique exponential random graph models"};
  app.require_subcommand(1);

  cli::ClassifyRequest cls;
  auto* classify = app.add_subcommand("classify", "Classify the limiting graphon set for (gamma, a, b)");
  classify->add_option("--gamma", cls.gamma, "Exponent on the clique density");
  classify->add_option("--a", cls.a, "Slope a in beta1 = a*beta2 + b");
  classify->add_option("--b", cls.b, "Offset b in beta1 = a*beta2 + b");
  classify->add_option("--direction", cls.direction, "neg|pos|hplus|hminus|vertical")
      ->check(CLI::IsMember({"neg", "pos", "hplus", "hminus", "vertical"}));
  classify->add_option("--beta1", cls.beta1, "Fixed beta1 (vertical direction)");
  classify->add_option("--chromatic", cls.chromatic, "Chromatic number r of the forbidden graph (vertical)");
  classify->add_option("--clique", cls.clique, "Clique size s")->check(CLI::Range(3, 64));

  auto* table1 = app.add_subcommand("table1", "Recompute the reference interior edge densities");

  double curve_gamma = 1.0;
  int resolution = 100;
  auto* curves = app.add_subcommand("curves", "Sample the boundary curves as CSV");
  curves->add_option("--gamma", curve_gamma)->required();
  curves->add_option("--resolution", resolution)->check(CLI::Range(10, 100000000));

  cli::PhaseRequest ph;
  auto* phase = app.add_subcommand("phase", "Sweep a at fixed gamma and b, CSV output");
  phase->add_option("--gamma", ph.gamma)->required();
  phase->add_option("--a-min", ph.a_min)->required();
  phase->add_option("--a-max", ph.a_max)->required();
  phase->add_option("--steps", ph.steps)->required()->check(CLI::Range(1, 10000000));
  phase->add_option("--b", ph.b);

  cli::CriticalsRequest cr;
  auto* criticals = app.add_subcommand("criticals", "Slope table or critical exponent sequences");
  criticals->add_option("--gamma", cr.gamma);
  criticals->add_option("--k-max", cr.k_max);
  criticals->add_option("--sequence", cr.sequence)->check(CLI::IsMember({"gamma_n", "gamma_tilde_n", "gamma_n_star"}));
  criticals->add_option("--n-max", cr.n_max);

  cli::SimulateRequest sim;
  auto* simulate = app.add_subcommand("simulate", "Run the Glauber sampler and summarize");
  simulate->add_option("--n", sim.config.n)->required();
  simulate->add_option("--gamma", sim.config.gamma)->required();
  simulate->add_option("--a", sim.config.a)->required();
  simulate->add_option("--b", sim.config.b)->required();
  simulate->add_option("--beta2", sim.config.beta2)->required();
  simulate->add_option("--sweeps", sim.config.sweeps)->required();
  simulate->add_option("--burnin", sim.config.burnin)->required();
  simulate->add_option("--seed", sim.config.seed)->required();
  simulate->add_option("--trace", sim.trace_path, "Write a per-sweep CSV trace here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  if (*classify) return cli::classify(cls, std::cout, std::cerr);
  if (*table1) return cli::table1(std::cout, std::cerr);
  if (*curves) return cli::curves(curve_gamma, resolution, std::cout, std::cerr);
  if (*phase) {
    ph.threads = cli::thread_budget();
    return cli::phase(ph, std::cout, std::cerr);
  }
  if (*criticals) return cli::criticals(cr, std::cout, std::cerr);
  if (*simulate) return cli::simulate(sim, std::cout, std::cerr);
  return cli::kExitUsage;
}
