// volent: volume entropy, Patterson-Sullivan weights and currents,
// entropy gradients, and entropy minimization for finite metric graphs.

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "volent/currents.hpp"
#include "volent/entropy.hpp"
#include "volent/graph.hpp"
#include "volent/optimize.hpp"
#include "volent/oracle.hpp"
#include "volent/sensitivity.hpp"

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

enum class Format { Text, Records, Json };

// Flat record sink: every numeric result carries the tolerance it was
// computed to.  Record keys are part of the stable CLI interface.
struct Report {
  Format format = Format::Text;
  json doc = json::object();

  void value(const std::string& key, double v, double tol,
             const std::string& text_label = "") {
    if (format == Format::Text) {
      std::printf("%s = %s\n", text_label.empty() ? key.c_str() : text_label.c_str(),
                  fmt(v).c_str());
    } else if (format == Format::Records) {
      std::printf("%s %s %s\n", key.c_str(), fmt(v).c_str(), fmt(tol).c_str());
    } else {
      doc[key] = {{"value", v}, {"tol", tol}};
    }
  }
  void text(const std::string& key, const std::string& v) {
    if (format == Format::Text) {
      std::printf("%s = %s\n", key.c_str(), v.c_str());
    } else if (format == Format::Records) {
      std::printf("%s %s -\n", key.c_str(), v.c_str());
    } else {
      doc[key] = v;
    }
  }
  void flush() {
    if (format == Format::Json) std::printf("%s\n", doc.dump(2).c_str());
  }
};

struct CommonInput {
  std::string catalog_name;
  std::string file;
  std::string lengths;  // comma-separated non-oriented lengths
  std::string format = "text";
};

void add_input_flags(CLI::App* cmd, CommonInput* in) {
  auto* cat = cmd->add_option("--catalog", in->catalog_name, "catalog graph name");
  auto* file = cmd->add_option("--file", in->file, "graph file path");
  cat->excludes(file);
  cmd->add_option("--lengths", in->lengths,
                  "comma-separated non-oriented lengths (decimal or p/q)");
  cmd->add_option("--format", in->format, "output format: text|records|json")
      ->check(CLI::IsMember({"text", "records", "json"}));
}

std::vector<double> parse_length_list(const std::string& csv) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    out.push_back(volent::parse_length_token(csv.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

volent::ParsedGraph resolve_input(const CommonInput& in) {
  if (in.catalog_name.empty() && in.file.empty()) {
    throw volent::Error(volent::ErrorKind::DomainError,
                        "need --catalog or --file");
  }
  volent::ParsedGraph pg = in.catalog_name.empty()
                               ? volent::load_graph(in.file)
                               : volent::catalog(in.catalog_name);
  if (!in.lengths.empty()) {
    pg.metric = volent::symmetric_metric(pg.graph, parse_length_list(in.lengths));
  }
  return pg;
}

Format parse_format(const std::string& f) {
  if (f == "records") return Format::Records;
  if (f == "json") return Format::Json;
  return Format::Text;
}

volent::EntropyOptions entropy_options() {
  volent::EntropyOptions opts;
  if (const char* env = std::getenv("ENTROPY_TOL")) {
    opts.tol = std::atof(env);
    opts.spectral.tol = opts.tol;
  }
  return opts;
}

std::string label_string(const volent::Graph& g,
                         const std::vector<volent::EdgeIndex>& label) {
  std::string s;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) s += '.';
    s += g.edge(label[i]).id;
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"volume entropy toolkit for finite metric graphs"};
  app.require_subcommand(1);

  CommonInput in;
  volent::EntropyOptions eopts = entropy_options();

  auto* c_entropy = app.add_subcommand("entropy", "volume entropy and residuals");
  add_input_flags(c_entropy, &in);

  auto* c_weights = app.add_subcommand("weights", "Patterson-Sullivan edge weights");
  add_input_flags(c_weights, &in);
  std::string scaling = "unit";
  c_weights->add_option("--scaling", scaling, "unit (Euclidean) or sum (sum = 1)")
      ->check(CLI::IsMember({"unit", "sum"}));

  auto* c_currents = app.add_subcommand("currents", "current table on cylinder sets");
  add_input_flags(c_currents, &in);
  int max_edges = 3;
  c_currents->add_option("--max-edges", max_edges, "cylinder horizon")->required();

  auto* c_grad = app.add_subcommand("grad", "entropy gradient");
  add_input_flags(c_grad, &in);

  auto* c_critical = app.add_subcommand("critical", "critical point residual");
  add_input_flags(c_critical, &in);

  auto* c_minimize = app.add_subcommand("minimize", "minimize entropy over volume one");
  add_input_flags(c_minimize, &in);
  std::string init_lengths;
  volent::OptimizeOptions oopts;
  oopts.entropy = eopts;
  c_minimize->add_option("--init", init_lengths, "initial non-oriented lengths");
  c_minimize->add_option("--max-iter", oopts.max_iterations, "iteration cap");
  c_minimize->add_option("--grad-tol", oopts.grad_tol, "projected-gradient tolerance");
  bool show_trajectory = false;
  c_minimize->add_flag("--trajectory", show_trajectory, "print (h, pg-norm) per step");

  auto* c_oracle = app.add_subcommand("oracle", "brute-force verification tools");
  auto* c_growth = c_oracle->add_subcommand("growth", "path counts N(R)");
  add_input_flags(c_growth, &in);
  std::string grid_csv;
  double single_r = 0.0;
  std::string origin_id;
  c_growth->add_option("--grid", grid_csv, "comma-separated R grid (estimates h)");
  c_growth->add_option("--R", single_r, "single radius (prints the count)");
  c_growth->add_option("--origin", origin_id, "origin vertex id (default: first)");
  long long budget = 10000000;
  c_growth->add_option("--budget", budget, "path budget");

  auto* c_poincare = c_oracle->add_subcommand("poincare", "truncated Poincare series");
  add_input_flags(c_poincare, &in);
  double s_param = 0.0;
  int p_max_edges = 10;
  c_poincare->add_option("--s", s_param, "exponent s")->required();
  c_poincare->add_option("--max-edges", p_max_edges, "loop horizon");
  c_poincare->add_option("--origin", origin_id, "basepoint vertex id");

  auto* c_walk = c_oracle->add_subcommand("walk", "non-backtracking random walk");
  add_input_flags(c_walk, &in);
  int steps = 10000, trials = 50;
  std::uint64_t seed = 1;
  c_walk->add_option("--steps", steps, "steps per trial");
  c_walk->add_option("--trials", trials, "independent trials");
  c_walk->add_option("--seed", seed, "RNG seed");

  auto* c_demo = app.add_subcommand("demo", "worked demonstrations");
  auto* c_sup = c_demo->add_subcommand("sup", "unbounded entropy on the two-loop rose");
  std::string xs_csv = "0.1,0.01,1e-4,1e-6";
  c_sup->add_option("--xs", xs_csv, "loop lengths x, decreasing toward 0");
  c_sup->add_option("--format", in.format, "output format: text|records|json")
      ->check(CLI::IsMember({"text", "records", "json"}));

  auto* c_catalog = app.add_subcommand("catalog", "built-in graphs");
  c_catalog->add_subcommand("list", "list catalog names");

  CLI11_PARSE(app, argc, argv);

  Report rep;
  rep.format = parse_format(in.format);

  try {
    if (c_entropy->parsed()) {
      volent::ParsedGraph pg = resolve_input(in);
      volent::EntropySolution sol = volent::volume_entropy(pg.graph, pg.metric, eopts);
      rep.text("classification", volent::metric_class_name(pg.metric.cls));
      rep.value("volume", pg.metric.volume, 0.0);
      rep.value("h", sol.h, eopts.tol);
      rep.value("phi_residual", sol.phi_residual, eopts.tol);
      rep.value("system_residual", sol.system_residual, eopts.tol);
      if (pg.graph.has_degree_two_vertex()) {
        rep.text("note", "graph has degree-two vertices");
      }
    } else if (c_weights->parsed()) {
      volent::ParsedGraph pg = resolve_input(in);
      volent::EntropySolution sol = volent::volume_entropy(pg.graph, pg.metric, eopts);
      std::vector<double> w(sol.w.data(), sol.w.data() + sol.w.size());
      if (scaling == "sum") w = volent::weights_sum_normalized(sol);
      rep.value("h", sol.h, eopts.tol);
      for (int e = 0; e < pg.graph.oriented_count(); ++e) {
        rep.value("w." + pg.graph.edge(e).id, w[e], eopts.tol);
      }
    } else if (c_currents->parsed()) {
      volent::ParsedGraph pg = resolve_input(in);
      volent::EntropySolution sol = volent::volume_entropy(pg.graph, pg.metric, eopts);
      volent::CurrentTable table =
          volent::current_coordinates(pg.graph, sol, max_edges);
      rep.value("h", sol.h, eopts.tol);
      for (const volent::CurrentEntry& entry : table.entries) {
        std::string key = label_string(pg.graph, entry.label);
        if (rep.format == Format::Text) {
          std::printf("%s raw=%s projective=%s\n", key.c_str(),
                      fmt(entry.raw).c_str(), fmt(entry.projective).c_str());
        } else if (rep.format == Format::Records) {
          std::printf("cyl %s %s %s\n", key.c_str(), fmt(entry.raw).c_str(),
                      fmt(entry.projective).c_str());
        } else {
          rep.doc["cylinders"].push_back(
              {{"label", key}, {"raw", entry.raw}, {"projective", entry.projective}});
        }
      }
    } else if (c_grad->parsed()) {
      volent::ParsedGraph pg = resolve_input(in);
      volent::SensitivityResult sr =
          volent::entropy_gradient(pg.graph, pg.metric, eopts);
      rep.value("h", sr.solution.h, eopts.tol);
      for (int e = 0; e < pg.graph.oriented_count(); ++e) {
        rep.value("dh_dL." + pg.graph.edge(e).id, sr.gradient(e), 1e-10);
      }
      // non-oriented gradient: sum of the two orientations
      for (int j = 0; j < pg.graph.non_oriented_count(); ++j) {
        std::string id = pg.graph.edge(2 * j).id;
        id.pop_back();
        rep.value("dh_dL_sym." + id, sr.gradient(2 * j) + sr.gradient(2 * j + 1),
                  1e-10);
      }
      rep.value("euler_residual", sr.euler_residual, 1e-8);
      rep.value("solve_residual", sr.solve_residual, 1e-10);
    } else if (c_critical->parsed()) {
      volent::ParsedGraph pg = resolve_input(in);
      rep.value("critical_spread",
                volent::critical_point_residual(pg.graph, pg.metric, eopts), 1e-9);
    } else if (c_minimize->parsed()) {
      volent::ParsedGraph pg = resolve_input(in);
      volent::MetricStructure start =
          init_lengths.empty()
              ? pg.metric
              : volent::symmetric_metric(pg.graph, parse_length_list(init_lengths));
      volent::OptimizeResult res =
          volent::minimize_entropy(pg.graph, start, oopts);
      rep.value("h_min", res.h, 1e-6);
      rep.text("converged", res.converged ? "true" : "false");
      rep.text("hit_boundary", res.hit_boundary ? "true" : "false");
      rep.value("iterations", res.iterations, 0.0);
      for (std::size_t j = 0; j < res.lengths.size(); ++j) {
        std::string id = pg.graph.edge(2 * j).id;
        id.pop_back();
        rep.value("L." + id, res.lengths[j], 1e-4);
      }
      if (show_trajectory) {
        for (const auto& [h, pg_norm] : res.trajectory) {
          std::printf("traj %s %s\n", fmt(h).c_str(), fmt(pg_norm).c_str());
        }
      }
    } else if (c_growth->parsed()) {
      volent::ParsedGraph pg = resolve_input(in);
      volent::VertexIndex origin =
          origin_id.empty() ? 0 : pg.graph.vertex_index(origin_id);
      if (!grid_csv.empty()) {
        volent::GrowthEstimate est = volent::estimate_entropy_growth(
            pg.graph, pg.metric, parse_length_list(grid_csv), origin, budget);
        for (const auto& [R, n] : est.samples) {
          std::printf("%s,%lld\n", fmt(R).c_str(), n);  // CSV export
        }
        rep.value("h_hat", est.h_hat, 0.05);
        if (est.truncated) rep.text("warning", "path budget truncated the grid");
      } else {
        if (single_r <= 0.0) {
          throw volent::Error(volent::ErrorKind::DomainError, "need --R or --grid");
        }
        long long n = volent::growth_count(pg.graph, pg.metric, single_r, origin, budget);
        rep.value("count", static_cast<double>(n), 0.0);
      }
    } else if (c_poincare->parsed()) {
      volent::ParsedGraph pg = resolve_input(in);
      volent::VertexIndex origin =
          origin_id.empty() ? 0 : pg.graph.vertex_index(origin_id);
      double sum = volent::poincare_partial(pg.graph, pg.metric, s_param,
                                            p_max_edges, origin, budget);
      rep.value("poincare_partial", sum, 0.0);
    } else if (c_walk->parsed()) {
      volent::ParsedGraph pg = resolve_input(in);
      volent::WalkStats stats = volent::nbrw_simulate(pg.graph, steps, trials, seed);
      rep.value("steps", steps, 0.0);
      rep.value("trials", trials, 0.0);
      rep.value("seed", static_cast<double>(seed), 0.0);
      for (int e = 0; e < pg.graph.oriented_count(); ++e) {
        if (rep.format == Format::Records) {
          std::printf("freq %s %s -\n", pg.graph.edge(e).id.c_str(),
                      fmt(stats.edge_frequency[e]).c_str());
        } else {
          rep.value("freq." + pg.graph.edge(e).id, stats.edge_frequency[e], 0.0);
        }
      }
    } else if (c_sup->parsed()) {
      auto points = volent::sup_entropy_demo(parse_length_list(xs_csv));
      for (const auto& [x, h] : points) {
        if (rep.format == Format::Records) {
          std::printf("sup %s %s %s\n", fmt(x).c_str(), fmt(h).c_str(),
                      fmt(eopts.tol).c_str());
        } else {
          rep.value("h(" + fmt(x) + ")", h, eopts.tol);
        }
      }
    } else if (c_catalog->parsed()) {
      for (const std::string& name : volent::catalog_names()) {
        std::printf("%s\n", name.c_str());
      }
    }
    rep.flush();
  } catch (const volent::Error& err) {
    std::fprintf(stderr, "error %s: %s\n", volent::error_kind_name(err.kind()),
                 err.what());
    return 2;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error internal: %s\n", err.what());
    return 3;
  }
  return 0;
}
