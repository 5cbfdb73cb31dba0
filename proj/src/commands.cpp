#include "ergm/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <thread>
#include <vector>

#include "ergm/classifier.hpp"
#include "ergm/criticals.hpp"
#include "ergm/curves.hpp"
#include "ergm/errors.hpp"
#include "ergm/format.hpp"

namespace ergm::cli {
namespace {

using nlohmann::json;

json member_json(const GraphonDescriptor& g) {
  json j{{"type", kind_name(g)}, {"edge_density", edge_density(g)}, {"triangle_density", triangle_density(g)}};
  if (const auto* t = std::get_if<TuranGraphon>(&g)) {
    j["classes"] = t->k;
    j["scale"] = t->scale;
  } else if (const auto* b = std::get_if<BoxGraphon>(&g)) {
    j["side"] = b->side;
  } else if (const auto* in = std::get_if<InteriorGraphon>(&g)) {
    j["segment"] = in->segment;
  }
  return j;
}

std::string set_kind(const LimitSet& set) {
  return set.members.size() == 1 ? kind_name(set.members.front()) : "tie";
}

json locations_json(const Minimizer& m) {
  json arr = json::array();
  for (double e : optimum_locations(m)) arr.push_back(e);
  return arr;
}

}  // namespace

std::optional<Direction> parse_direction(std::string_view name) {
  if (name == "neg") return Direction::NegativeBeta2;
  if (name == "pos") return Direction::PositiveBeta2;
  if (name == "hplus") return Direction::HorizontalPlus;
  if (name == "hminus") return Direction::HorizontalMinus;
  if (name == "vertical") return Direction::Vertical;
  return std::nullopt;
}

unsigned thread_budget() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ERGM_EXTREMAL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min<long>(v, 1024));
  }
  return hw;
}

int classify(const ClassifyRequest& req, std::ostream& out, std::ostream& err) {
  const std::optional<Direction> dir = parse_direction(req.direction);
  if (!dir) {
    err << "unknown direction '" << req.direction << "'\n";
    return kExitUsage;
  }
  ParamPoint p{req.gamma, req.a, req.b, *dir, req.beta1, req.chromatic, req.clique};
  try {
    const Classification c = ergm::classify(p);
    json j;
    j["kind"] = set_kind(c.limit);
    j["members"] = json::array();
    for (const auto& m : c.limit.members) j["members"].push_back(member_json(m));
    j["oracle_e"] = c.oracle ? json(c.oracle->e_star) : json(nullptr);
    if (c.oracle) j["oracle_locations"] = locations_json(*c.oracle);
    j["certified"] = c.certified;
    j["regime"] = c.regime;
    out << j.dump() << '\n';
    return kExitOk;
  } catch (const UnclassifiedRegion& u) {
    json j{{"kind", "unclassified"},
           {"members", json::array()},
           {"oracle_e", u.oracle().e_star},
           {"oracle_locations", locations_json(u.oracle())},
           {"certified", false},
           {"regime", u.regime()}};
    out << j.dump() << '\n';
    return kExitUnclassified;
  } catch (const std::domain_error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
}

const std::array<ReferenceCell, 5>& reference_cells() {
  static const std::array<ReferenceCell, 5> cells{{
      {-slope(2, 2.0), 2.0, 0.575},
      {-slope(2, 4.0), 4.0, 0.599},
      {-slope(2, 10.0), 10.0, 0.625},
      {-slope(2, 100.0), 100.0, 0.658},
      {-1.1, 2.0, 0.703},
  }};
  return cells;
}

int table1(std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  out << "a                gamma    e*_computed   e*_reference  abs_dev\n";
  for (const ReferenceCell& cell : reference_cells()) {
    double e = std::nan("");
    try {
      const Classification c = ergm::classify(ParamPoint{cell.gamma, cell.a, 0.0, Direction::NegativeBeta2, {}, {}, 3},
                                              ClassifyOptions{false});
      const auto* in = std::get_if<InteriorGraphon>(&c.limit.members.front());
      if (c.limit.members.size() == 1 && in) e = in->e_star;
    } catch (const std::exception& ex) {
      err << "cell a=" << format_real(cell.a) << " gamma=" << format_real(cell.gamma) << ": " << ex.what() << '\n';
    }
    const double dev = std::isnan(e) ? std::numeric_limits<double>::infinity() : std::abs(e - cell.reference);
    worst = std::max(worst, dev);
    char line[160];
    std::snprintf(line, sizeof line, "%-16.9g %-8g %-13.6f %-13.3f %.2e\n", cell.a, cell.gamma, e, cell.reference, dev);
    out << line;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << "max_abs_dev " << format_real(worst, 6) << "\nelapsed_ms " << format_real(ms, 4) << '\n';
  return worst <= 5e-4 ? kExitOk : kExitUsage;
}

int curves(double gamma, int resolution, std::ostream& out, std::ostream& err) {
  if (!(gamma > 0.0) || resolution < 10) {
    err << "curves: need --gamma > 0 and --resolution >= 10\n";
    return kExitUsage;
  }
  std::vector<double> es;
  for (int i = 0; i <= resolution; ++i) es.push_back(i == resolution ? 1.0 : static_cast<double>(i) / resolution);
  const double last = 1.0 - 1.0 / resolution;
  for (SegmentIndex k = 1; turan_edge(k) <= last; ++k) es.push_back(turan_edge(k));
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  out << "e,lower,upper,goodman\n";
  for (double e : es) {
    out << format_real(e, 17) << ',' << format_real(lower_boundary(e, gamma), 17) << ','
        << format_real(kruskal_katona(e, 3, gamma), 17) << ',' << format_real(goodman(e, gamma), 17) << '\n';
  }
  return kExitOk;
}

int phase(const PhaseRequest& req, std::ostream& out, std::ostream& err) {
  if (!(req.gamma > 0.0) || req.steps < 1 || !(req.a_min <= req.a_max) ||
      (req.steps == 1 && req.a_min != req.a_max)) {
    err << "phase: need --gamma > 0, --steps >= 1 and --a-min <= --a-max\n";
    return kExitUsage;
  }
  std::vector<double> grid;
  for (int i = 0; i < req.steps; ++i)
    grid.push_back(req.steps == 1 ? req.a_min : req.a_min + (req.a_max - req.a_min) * i / (req.steps - 1));
  std::vector<PhaseRow> rows;
  try {
    rows = phase_sweep(req.gamma, grid, req.b, req.threads);
  } catch (const std::domain_error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  out << "a,kind,e_star,segment\n";
  for (const PhaseRow& row : rows) {
    out << format_real(row.a, 17) << ',';
    if (!row.result) {
      out << "unclassified," << format_real(row.unclassified_oracle->e_star, 12) << ",\n";
      continue;
    }
    const LimitSet& set = row.result->limit;
    out << set_kind(set) << ',';
    for (std::size_t i = 0; i < set.members.size(); ++i)
      out << (i ? "|" : "") << format_real(edge_density(set.members[i]), 12);
    out << ',';
    if (set.members.size() == 1) {
      if (const auto* in = std::get_if<InteriorGraphon>(&set.members.front())) out << in->segment;
      else if (const auto* t = std::get_if<TuranGraphon>(&set.members.front())) out << t->k - 1;
    }
    out << '\n';
  }
  return kExitOk;
}

int criticals(const CriticalsRequest& req, std::ostream& out, std::ostream& err) {
  try {
    if (req.sequence) {
      if (req.gamma || req.k_max || !req.n_max) {
        err << "criticals: --sequence requires --n-max and excludes --gamma/--k-max\n";
        return kExitUsage;
      }
      const std::string& name = *req.sequence;
      std::int64_t first = 3;
      double (*value)(std::int64_t) = nullptr;
      double slope_coeff = 0.0;  // asymptote = slope_coeff * n, or the constant 2/3
      if (name == "gamma_n") {
        value = &gamma_n;
        slope_coeff = 2.0 / 9.0;
      } else if (name == "gamma_tilde_n") {
        value = &gamma_tilde_n;
        slope_coeff = 4.0 / 9.0;
        first = 2;
      } else if (name == "gamma_n_star") {
        value = &gamma_n_star;
      } else {
        err << "criticals: unknown sequence '" << name << "'\n";
        return kExitUsage;
      }
      if (*req.n_max < first) {
        err << "criticals: --n-max must be >= " << first << '\n';
        return kExitUsage;
      }
      out << "n,value,asymptote,ratio\n";
      for (std::int64_t n = first; n <= *req.n_max; ++n) {
        const double v = value(n);
        const double asym = slope_coeff > 0.0 ? slope_coeff * static_cast<double>(n) : 2.0 / 3.0;
        out << n << ',' << format_real(v, 15) << ',' << format_real(asym, 15) << ',' << format_real(v / asym, 15) << '\n';
      }
      return kExitOk;
    }
    if (!req.gamma || !req.k_max || req.n_max || *req.k_max < 1 || !(*req.gamma > 0.0)) {
      err << "criticals: give --gamma > 0 with --k-max >= 1, or --sequence with --n-max\n";
      return kExitUsage;
    }
    const double gamma = *req.gamma;
    out << "k,e_k,t_k,s_k,sigma_y,inflection\n";
    for (std::int64_t k = 1; k <= *req.k_max; ++k) {
      const TuranPoint v = turan_point(k);
      const std::optional<double> infl = k >= 2 ? inflection_point(k, gamma) : std::nullopt;
      out << k << ',' << format_real(v.e, 15) << ',' << format_real(v.t, 15) << ',' << format_real(slope(k, gamma), 15)
          << ',' << format_real(critical_direction(k, gamma).second, 15) << ','
          << (infl ? format_real(*infl, 15) : std::string()) << '\n';
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
}

int simulate(const SimulateRequest& req, std::ostream& out, std::ostream& err) {
  SimConfig cfg = req.config;
  cfg.record_trace = req.trace_path.has_value();
  std::ofstream trace;
  if (req.trace_path) {
    trace.open(*req.trace_path);
    if (!trace) {
      err << "simulate: cannot write trace to '" << *req.trace_path << "'\n";
      return kExitUsage;
    }
  }
  SimSummary s;
  try {
    s = run(cfg);
  } catch (const std::domain_error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  if (req.trace_path) {
    write_trace_csv(trace, s);
    trace.close();
    if (!trace) {
      err << "simulate: failed writing trace\n";
      return kExitUsage;
    }
  }
  json j{{"n", cfg.n},
         {"gamma", cfg.gamma},
         {"a", cfg.a},
         {"b", cfg.b},
         {"beta1", cfg.a * cfg.beta2 + cfg.b},
         {"beta2", cfg.beta2},
         {"sweeps", cfg.sweeps},
         {"burnin", cfg.burnin},
         {"seed", s.seed},
         {"mean_edge_density", s.mean_edge_density},
         {"mean_triangle_density", s.mean_triangle_density},
         {"mean_edge_fraction", s.mean_edge_fraction},
         {"acceptance_rate", s.acceptance_rate}};
  out << j.dump() << '\n';
  return kExitOk;
}

}  // namespace ergm::cli
