#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ergm/variational.hpp"

namespace ergm {

struct ParamPoint {
  double gamma = 1.0;
  double a = 0.0;
  double b = 0.0;
  Direction direction = Direction::NegativeBeta2;
  std::optional<double> beta1;       // Vertical only
  std::optional<int> chromatic_r;    // Vertical only
  int clique_s = 3;
};

struct EmptyGraphon {};
struct CompleteGraphon {};
// Turan graphon with k classes, every value multiplied by scale.
struct TuranGraphon {
  std::int64_t k = 2;
  double scale = 1.0;
};
// Indicator of [0, side]^2.
struct BoxGraphon {
  double side = 0.5;
};
// Any graphon with densities (e_star, t_star) on the Razborov curve.
struct InteriorGraphon {
  SegmentIndex segment = 2;
  double e_star = 0.0;
  double t_star = 0.0;
};

using GraphonDescriptor = std::variant<EmptyGraphon, CompleteGraphon, TuranGraphon, BoxGraphon, InteriorGraphon>;

double edge_density(const GraphonDescriptor& g);
double triangle_density(const GraphonDescriptor& g);
// Lowercase tag: empty, complete, turan, box, interior.
std::string kind_name(const GraphonDescriptor& g);
bool operator==(const GraphonDescriptor& l, const GraphonDescriptor& r);

struct LimitSet {
  std::vector<GraphonDescriptor> members;  // ascending edge density
};

struct Classification {
  LimitSet limit;               // after resolving ties with the sign of b
  LimitSet candidates;          // all optimizers of the reduced problem (b ignored)
  std::optional<Minimizer> oracle;
  bool certified = false;       // candidates agree with the oracle within 1e-4
  std::string regime;
};

// Thrown when (gamma, a) falls in the band between the covered ranges of the case
// analysis for gamma > 1. Carries the brute-force answer.
class UnclassifiedRegion : public std::runtime_error {
 public:
  UnclassifiedRegion(const std::string& what, Minimizer oracle, std::string regime)
      : std::runtime_error(what), oracle_(std::move(oracle)), regime_(std::move(regime)) {}
  const Minimizer& oracle() const { return oracle_; }
  const std::string& regime() const { return regime_; }

 private:
  Minimizer oracle_;
  std::string regime_;
};

struct ClassifyOptions {
  bool certify = true;
};

Classification classify(const ParamPoint& p, const ClassifyOptions& options = {});

LimitSet classify_clique_positive(int s, double gamma, double a, double b);

// Hausdorff distance between two finite sets of reals.
double set_distance(const std::vector<double>& x, const std::vector<double>& y);

std::vector<double> edge_densities(const LimitSet& set);

struct PhaseRow {
  double a = 0.0;
  std::optional<Classification> result;
  std::optional<Minimizer> unclassified_oracle;  // set when result is empty
};

// Classifies every a in a_grid (NegativeBeta2, triangles). Output is ordered
// by a. threads = 0 uses the hardware concurrency.
std::vector<PhaseRow> phase_sweep(double gamma, std::span<const double> a_grid, double b,
                                  unsigned threads = 1, const ClassifyOptions& options = {});

}  // namespace ergm
