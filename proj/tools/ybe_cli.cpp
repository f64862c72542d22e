// Command-line front end: solution file I/O, named fixtures, and
// human/machine reports for the library operations.
//
// Exit codes: 0 success, 1 campaign violations, 2 input or usage errors.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ybe/atlas.hpp"
#include "ybe/cancellative.hpp"
#include "ybe/report.hpp"

namespace {

struct GlobalOptions {
  std::string format = "human";
  int max_degree = ybe::kDefaultMaxDegree;
  std::uint64_t seed = 0;
  int jobs = 0;
  bool timing = false;
};

struct InputOptions {
  std::string path;
  std::string example;
};

ybe::LoadedSolution resolve_input(const InputOptions& in) {
  if (!in.example.empty()) {
    const ybe::Fixture& f = ybe::fixture(in.example);
    return {f.solution, f.name, f.notes};
  }
  if (in.path.empty()) throw std::invalid_argument("no input: pass a solution file or --example NAME");
  return ybe::load_solution_file(in.path);
}

void emit(const ybe::json& report, const GlobalOptions& opts, double elapsed_ms) {
  ybe::json out = report;
  if (opts.timing) out["elapsed_ms"] = elapsed_ms;
  if (opts.format == "json")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << ybe::render_human(out);
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "solution file (JSON with n, sigma, gamma)");
  cmd->add_option("--example", in.example, "built-in fixture name (see 'example')");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations with finite set-theoretic solutions of the Yang-Baxter equation"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  app.add_option("--max-degree", opts.max_degree, "degree window for graded computations")
      ->capture_default_str();
  app.add_option("--seed", opts.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--jobs", opts.jobs, "worker threads for campaigns (0 = all cores)")
      ->capture_default_str();
  app.add_flag("--timing", opts.timing, "include elapsed time in reports");

  InputOptions check_in, monoid_in, cocycle_in, eta_in;
  std::string kind = "M";
  bool list_classes = false;
  int witness_bound = 0;
  std::string campaign;
  int campaign_n = 0;
  std::string example_name;

  CLI::App* check = app.add_subcommand("check", "verify a solution and report its properties");
  add_input_options(check, check_in);

  CLI::App* monoid =
      app.add_subcommand("monoid", "relations and growth of the graded monoids M, A, A'");
  add_input_options(monoid, monoid_in);
  monoid->add_option("--kind", kind, "presentation: M, A or Ap")
      ->check(CLI::IsMember({"M", "A", "Ap"}))
      ->capture_default_str();
  monoid->add_flag("--classes", list_classes, "list the classes of every degree");

  CLI::App* cocycle =
      app.add_subcommand("cocycle", "per-degree injectivity/surjectivity of pi and pi'");
  add_input_options(cocycle, cocycle_in);

  CLI::App* eta = app.add_subcommand(
      "eta", "window-truncated left-cancellative congruence and induced solution");
  add_input_options(eta, eta_in);
  eta->add_option("--witness-bound", witness_bound,
                  "maximum witness degree (0 = whole window)");

  CLI::App* enumerate = app.add_subcommand("enumerate", "run a verification campaign");
  enumerate->add_option("--n", campaign_n, "size of X")->required();
  enumerate->add_option("--campaign", campaign, "campaign name")
      ->check(CLI::IsMember({"main_irr", "rump", "cocycle"}))
      ->required();

  CLI::App* example = app.add_subcommand("example", "list fixtures or print one as a solution file");
  example->add_option("name", example_name, "fixture name to print");

  CLI11_PARSE(app, argc, argv);

  auto t0 = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  try {
    if (check->parsed()) {
      emit(ybe::check_report(resolve_input(check_in)), opts, elapsed_ms());
    } else if (monoid->parsed()) {
      ybe::PresentationKind k = kind == "M"    ? ybe::PresentationKind::M
                                : kind == "A" ? ybe::PresentationKind::A
                                              : ybe::PresentationKind::Ap;
      emit(ybe::monoid_report(resolve_input(monoid_in), k, opts.max_degree, list_classes), opts,
           elapsed_ms());
    } else if (cocycle->parsed()) {
      emit(ybe::cocycle_report(resolve_input(cocycle_in), opts.max_degree), opts, elapsed_ms());
    } else if (eta->parsed()) {
      int w = witness_bound > 0 ? witness_bound : opts.max_degree;
      emit(ybe::eta_report(resolve_input(eta_in), opts.max_degree, w, opts.seed), opts,
           elapsed_ms());
    } else if (enumerate->parsed()) {
      ybe::CampaignReport rep;
      if (campaign == "main_irr")
        rep = ybe::campaign_main_irr(campaign_n);
      else if (campaign == "rump")
        rep = ybe::campaign_rump(campaign_n, opts.jobs);
      else
        rep = ybe::campaign_cocycle(campaign_n, opts.max_degree, opts.seed);
      emit(ybe::enumerate_report(rep), opts, rep.elapsed_seconds * 1000.0);
      if (!rep.violations.empty()) return 1;
    } else if (example->parsed()) {
      if (example_name.empty()) {
        emit(ybe::example_list_report(), opts, elapsed_ms());
      } else {
        const ybe::Fixture& f = ybe::fixture(example_name);
        std::cout << ybe::solution_to_json(f.solution, f.name, f.notes).dump(2) << "\n";
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << " (try a lower --max-degree)\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
