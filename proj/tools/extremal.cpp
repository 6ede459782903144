// Batch entry point: parse instance files, dispatch the solvers and the
// verification suites, emit machine-readable reports and SVG plots.
//
// Exit codes: 0 success, 1 verification/solve failure, 2 input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "extremal/io.hpp"
#include "extremal/suites.hpp"
#include "extremal/svg.hpp"

namespace {

using namespace extremal;

std::string join_command(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    std::string tok = argv[i];
    if (i == 0) {  // keep reports byte-stable across build locations
      const auto slash = tok.find_last_of('/');
      if (slash != std::string::npos) tok = tok.substr(slash + 1);
    }
    s += tok;
  }
  return s;
}

std::uint64_t resolve_seed(const CLI::App* sub, std::uint64_t cli_value) {
  if (sub->count("--seed") > 0) return cli_value;
  if (const char* env = std::getenv("EXTREMAL_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 0;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

JValue report_header(const std::string& command, std::uint64_t seed, const std::string& name) {
  JValue root = JValue::object();
  root["schema"] = "extremal-run-report/1";
  root["command"] = command;
  root["seed"] = seed;
  if (!name.empty()) root["instance"] = name;
  return root;
}

plane::Point2 project_point(const Vec<double>& p, std::size_t i, std::size_t j) {
  if (i >= p.size() || j >= p.size()) throw input_error("--project indices out of range");
  return {p[i], p[j]};
}

struct PlotFlags {
  bool mice = false;
  bool maie = false;
  bool complex_constrained = false;
  bool project_given = false;
  std::size_t restarts = 0;
  double eps = 1e-6;
  std::vector<std::size_t> project{0, 1};
};

PlotInput build_plot(const Instance& inst, std::uint64_t seed, const PlotFlags& f) {
  PlotInput plot;
  const std::size_t pi = f.project.at(0), pj = f.project.at(1);
  if (inst.kind == InstanceKind::points && !f.project_given) {
    const std::size_t planar_dim =
        inst.dim() * (inst.field == FieldTag::complex ? 2 : 1);
    if (planar_dim != 2)
      throw input_error("plot: instance is not planar; pick coordinates with --project i j");
  }

  if (inst.kind == InstanceKind::points) {
    if (inst.field == FieldTag::real) {
      for (const auto& p : inst.real_points) plot.points.push_back(project_point(p, pi, pj));
    } else {
      for (const auto& p : inst.complex_points)
        plot.points.push_back(project_point(realify(p), pi, pj));
    }
    if (f.mice) {
      const std::size_t runs = std::max<std::size_t>(f.restarts, 1);
      for (std::size_t k = 0; k < runs; ++k) {
        MiceOptions opts;
        opts.seed = derive_seed(seed, k);
        opts.randomize_start = runs > 1;
        Ellipsoid<double> e = inst.field == FieldTag::real
                                  ? mice(inst.real_cloud(), f.eps, opts).ellipsoid
                                  : realify_ellipsoid(mice(inst.complex_cloud(), f.eps, opts).ellipsoid);
        plot.ellipses.push_back(project_ellipsoid(e, pi, pj));
      }
    }
  } else {
    if (inst.polytope.dim() != 2) throw input_error("plot: polytope plots need dimension 2");
    plot.polygon = plane::vertex_enum(inst.polytope);
    if (f.maie) {
      const std::size_t runs = std::max<std::size_t>(f.restarts, 1);
      for (std::size_t k = 0; k < runs; ++k) {
        MaieOptions opts;
        opts.seed = derive_seed(seed, k);
        opts.randomize = runs > 1;
        plot.ellipses.push_back(
            project_ellipsoid(maie(inst.polytope, f.complex_constrained, opts).ellipsoid, pi, pj));
      }
    }
  }
  return plot;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extremal inscribed and circumscribed ellipsoids over R^n and C^n"};
  app.require_subcommand(1);

  std::string in_path, out_path, suite_name = "all";
  double eps = 1e-6;
  std::uint64_t seed = 0;
  std::size_t restarts = 0, trials = 0, sym_order = 64;
  bool complex_constrained = false;
  PlotFlags plot_flags;

  CLI::App* solve_mice = app.add_subcommand("solve-mice", "minimal circumscribed ellipsoid");
  solve_mice->add_option("--in", in_path, "instance file")->required();
  solve_mice->add_option("--out", out_path, "report path (default stdout)");
  solve_mice->add_option("--eps", eps, "dual gap tolerance");
  solve_mice->add_option("--seed", seed, "rng seed");
  solve_mice->add_option("--restarts", restarts, "multi-start uniqueness probe");

  CLI::App* solve_maie = app.add_subcommand("solve-maie", "maximal inscribed ellipsoid");
  solve_maie->add_option("--in", in_path, "instance file")->required();
  solve_maie->add_option("--out", out_path, "report path (default stdout)");
  solve_maie->add_flag("--complex", complex_constrained, "constrain the shape to the J-commuting cone");
  solve_maie->add_option("--seed", seed, "rng seed");
  solve_maie->add_option("--restarts", restarts, "multi-start uniqueness probe");

  CLI::App* solve_centered = app.add_subcommand("solve-centered", "origin-centered extremal ellipsoid");
  solve_centered->add_option("--in", in_path, "instance file")->required();
  solve_centered->add_option("--out", out_path, "report path (default stdout)");
  solve_centered->add_option("--eps", eps, "dual gap tolerance (point instances)");
  solve_centered->add_option("--m", sym_order, "symmetrization order over C");
  solve_centered->add_flag("--complex", complex_constrained, "complex-constrained inscribed solve");
  solve_centered->add_option("--seed", seed, "rng seed");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite_name, "suite name or 'all'");
  verify->add_option("--out", out_path, "report path (default stdout)");
  verify->add_option("--trials", trials, "trial count override (0 = suite default)");
  verify->add_option("--seed", seed, "rng seed");

  CLI::App* plot = app.add_subcommand("plot", "render a planar instance to SVG");
  plot->add_option("--in", in_path, "instance file")->required();
  plot->add_option("--out", out_path, "output SVG path")->required();
  plot->add_flag("--mice", plot_flags.mice, "overlay circumscribed ellipsoids");
  plot->add_flag("--maie", plot_flags.maie, "overlay inscribed ellipsoids");
  plot->add_flag("--complex", plot_flags.complex_constrained, "complex-constrained maie overlay");
  plot->add_option("--eps", plot_flags.eps, "solver tolerance");
  plot->add_option("--restarts", plot_flags.restarts, "number of overlaid restarts");
  plot->add_option("--seed", seed, "rng seed");
  plot->add_option("--project", plot_flags.project, "coordinate pair for the planar view")
      ->expected(2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string command = join_command(argc, argv);

  try {
    if (solve_mice->parsed()) {
      const std::uint64_t s = resolve_seed(solve_mice, seed);
      const Instance inst = load_instance(in_path);
      if (inst.kind != InstanceKind::points)
        throw input_error("solve-mice needs a point instance");
      JValue root = report_header(command, s, inst.name);
      JValue results = JValue::array();
      MiceOptions opts;
      opts.seed = s;
      JValue one = JValue::object();
      if (inst.field == FieldTag::real) {
        const auto res = mice(inst.real_cloud(), eps, opts);
        one["ellipsoid"] = to_json(res.ellipsoid);
        one["dual_weights"] = to_json(res.dual);
        one["solve"] = to_json(res.report);
      } else {
        const auto res = mice(inst.complex_cloud(), eps, opts);
        one["ellipsoid"] = to_json(res.ellipsoid);
        one["dual_weights"] = to_json(res.dual);
        one["solve"] = to_json(res.report);
      }
      results.push_back(std::move(one));
      root["results"] = std::move(results);
      if (restarts >= 2) {
        root["spread"] = inst.field == FieldTag::real
                             ? to_json(mice_uniqueness_probe(inst.real_cloud(), eps, restarts, s))
                             : to_json(mice_uniqueness_probe(inst.complex_cloud(), eps, restarts, s));
      }
      root["status"] = "ok";
      emit(root.dump(), out_path);
      return 0;
    }

    if (solve_maie->parsed()) {
      const std::uint64_t s = resolve_seed(solve_maie, seed);
      const Instance inst = load_instance(in_path);
      if (inst.kind != InstanceKind::polytope)
        throw input_error("solve-maie needs a polytope instance");
      JValue root = report_header(command, s, inst.name);
      MaieOptions opts;
      opts.seed = s;
      const MaieResult res = maie(inst.polytope, complex_constrained, opts);
      JValue one = JValue::object();
      one["ellipsoid"] = to_json(res.ellipsoid);
      if (complex_constrained) one["complex_form"] = to_json(complexify_ellipsoid(res.ellipsoid));
      one["stationarity"] = res.stationarity;
      one["solve"] = to_json(res.report);
      JValue results = JValue::array();
      results.push_back(std::move(one));
      root["results"] = std::move(results);
      if (restarts >= 2)
        root["spread"] = to_json(maie_uniqueness_probe(inst.polytope, complex_constrained,
                                                       restarts, s));
      root["status"] = "ok";
      emit(root.dump(), out_path);
      return 0;
    }

    if (solve_centered->parsed()) {
      const std::uint64_t s = resolve_seed(solve_centered, seed);
      const Instance inst = load_instance(in_path);
      JValue root = report_header(command, s, inst.name);
      JValue one = JValue::object();
      if (inst.kind == InstanceKind::points) {
        MiceOptions opts;
        opts.seed = s;
        if (inst.field == FieldTag::real) {
          const auto res = centered_mice(inst.real_cloud(), sym_order, eps, opts);
          one["ellipsoid"] = to_json(res.ellipsoid);
          one["solve"] = to_json(res.report);
        } else {
          const auto res = centered_mice(inst.complex_cloud(), sym_order, eps, opts);
          one["ellipsoid"] = to_json(res.ellipsoid);
          one["solve"] = to_json(res.report);
        }
      } else {
        MaieOptions opts;
        opts.seed = s;
        const auto res = centered_maie(inst.polytope, complex_constrained ? sym_order : 2,
                                       complex_constrained, opts);
        one["ellipsoid"] = to_json(res.ellipsoid);
        if (complex_constrained) one["complex_form"] = to_json(complexify_ellipsoid(res.ellipsoid));
        one["solve"] = to_json(res.report);
      }
      JValue results = JValue::array();
      results.push_back(std::move(one));
      root["results"] = std::move(results);
      root["status"] = "ok";
      emit(root.dump(), out_path);
      return 0;
    }

    if (verify->parsed()) {
      const std::uint64_t s = resolve_seed(verify, seed);
      JValue root = report_header(command, s, "");
      JValue reports = JValue::array();
      bool all_pass = true;
      const std::vector<std::string> names =
          suite_name == "all" ? suite_names() : std::vector<std::string>{suite_name};
      for (std::size_t i = 0; i < names.size(); ++i) {
        const VerificationReport rep = run_suite(names[i], trials, derive_seed(s, i));
        all_pass = all_pass && rep.pass;
        reports.push_back(to_json(rep));
      }
      root["verification"] = std::move(reports);
      root["status"] = all_pass ? "ok" : "fail";
      emit(root.dump(), out_path);
      return all_pass ? 0 : 1;
    }

    if (plot->parsed()) {
      const std::uint64_t s = resolve_seed(plot, seed);
      plot_flags.project_given = plot->count("--project") > 0;
      const Instance inst = load_instance(in_path);
      write_text_file(out_path, render_plot(build_plot(inst, s, plot_flags)));
      return 0;
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const convergence_error& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
