#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "ergm/mcmc.hpp"
#include "ergm/variational.hpp"

// Implementations behind the ergm-extremal subcommands. Each writes its
// report to out, diagnostics to err, and returns the process exit code.
namespace ergm::cli {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnclassified = 2;

std::optional<Direction> parse_direction(std::string_view name);

// Thread cap from ERGM_EXTREMAL_THREADS, defaulting to the hardware count.
unsigned thread_budget();

struct ClassifyRequest {
  double gamma = 1.0;
  double a = 0.0;
  double b = 0.0;
  std::string direction = "neg";
  std::optional<double> beta1;
  std::optional<int> chromatic;
  int clique = 3;
};
int classify(const ClassifyRequest& req, std::ostream& out, std::ostream& err);

struct ReferenceCell {
  double a;
  double gamma;
  double reference;
};
// Reference edge densities e* for five (a, gamma) pairs.
const std::array<ReferenceCell, 5>& reference_cells();
int table1(std::ostream& out, std::ostream& err);

int curves(double gamma, int resolution, std::ostream& out, std::ostream& err);

struct PhaseRequest {
  double gamma = 1.0;
  double a_min = -1.0;
  double a_max = 0.0;
  int steps = 11;
  double b = 0.0;
  unsigned threads = 1;
};
int phase(const PhaseRequest& req, std::ostream& out, std::ostream& err);

struct CriticalsRequest {
  std::optional<double> gamma;
  std::optional<int> k_max;
  std::optional<std::string> sequence;
  std::optional<int> n_max;
};
int criticals(const CriticalsRequest& req, std::ostream& out, std::ostream& err);

struct SimulateRequest {
  SimConfig config;
  std::optional<std::string> trace_path;
};
int simulate(const SimulateRequest& req, std::ostream& out, std::ostream& err);

}  // namespace ergm::cli
