#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "format.hpp"
#include "gaussq/error.hpp"

namespace gaussq::cli {
namespace {

constexpr std::int64_t kScatterLimit = 5000;

struct Globals {
  CliConfig config;
  std::string format = "csv";
};

CensusOptions census_options(const CliConfig& config) {
  CensusOptions options;
  options.threads = config.threads;
  options.workload_budget = config.workload_budget;
  options.estimator.relative_tolerance = config.quadrature_tol;
  return options;
}

SieveOptions sieve_options(const CliConfig& config) {
  return {config.sieve_segment_size, config.threads};
}

QuotientOptions quotient_options(const CliConfig& config) {
  QuotientOptions options;
  options.threads = config.threads;
  options.workload_budget = config.workload_budget;
  options.sieve = sieve_options(config);
  return options;
}

Sector parse_sector(const std::string& alpha, const std::string& beta, Bounds bounds) {
  return Sector::between(parse_angle_literal(alpha), parse_angle_literal(beta), bounds);
}

void write_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gaussq: Gaussian primes, sector censuses and dense quotients"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  g.config.threads = std::max(1U, std::thread::hardware_concurrency());
  app.add_option("--threads", g.config.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.config.workload_budget, "Lattice-point cap per scan")
      ->check(CLI::PositiveNumber);
  app.add_option("--segment-size", g.config.sieve_segment_size, "Sieve segment span")
      ->check(CLI::Range(std::uint64_t{1024}, std::uint64_t{1} << 32));
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--quadrature-tol", g.config.quadrature_tol, "Relative quadrature tolerance")
      ->check(CLI::Range(1e-300, 1e-3));

  // Each subcommand fills `action`; it runs after parsing succeeds.
  std::function<void()> action;
  auto json = [&] { return g.config.output_format == OutputFormat::kJson; };

  // classify
  std::int64_t cls_a = 0;
  std::int64_t cls_b = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a Gaussian integer a+bi");
  classify_cmd->add_option("a", cls_a, "Real part")->required()->allow_extra_args(false);
  classify_cmd->add_option("b", cls_b, "Imaginary part")->required();
  classify_cmd->callback([&] {
    action = [&] {
      const GaussianInt z(cls_a, cls_b);
      const PrimeClass cls = classify(z);
      if (json()) {
        write_json(out, classify_json(z, cls));
      } else {
        out << kClassifyHeader << '\n' << classify_csv(z, cls) << '\n';
      }
    };
  });

  // census
  std::string alpha_text;
  std::string beta_text;
  double rho = 0.0;
  auto* census_cmd = app.add_subcommand("census", "Count Gaussian primes in a sector with |z| < rho");
  census_cmd->add_option("--alpha", alpha_text, "Sector start angle")->required();
  census_cmd->add_option("--beta", beta_text, "Sector end angle")->required();
  census_cmd->add_option("--rho", rho, "Magnitude bound (strict)")->required();
  census_cmd->callback([&] {
    action = [&] {
      const Sector sector = parse_sector(alpha_text, beta_text, Bounds::kClosed);
      const CensusResult result = sector_census(sector, rho, census_options(g.config));
      if (json()) {
        write_json(out, census_json(result));
      } else {
        out << kCensusHeader << '\n' << census_csv(result) << '\n';
      }
    };
  });

  // estimate
  double u = 0.0;
  auto* estimate_cmd = app.add_subcommand("estimate", "Main-term estimate for |z|^2 <= u in a sector");
  estimate_cmd->add_option("--alpha", alpha_text, "Sector start angle")->required();
  estimate_cmd->add_option("--beta", beta_text, "Sector end angle")->required();
  estimate_cmd->add_option("--u", u, "Squared-magnitude bound")->required();
  estimate_cmd->callback([&] {
    action = [&] {
      const Sector sector = parse_sector(alpha_text, beta_text, Bounds::kClosed);
      const double k = kubilyus_estimate(sector, u, {g.config.quadrature_tol});
      if (json()) {
        write_json(out, {{"sector", sector.to_string()},
                         {"u", u},
                         {"width", sector.width()},
                         {"K", k},
                         {"K_rounded", round_half_away(k)}});
      } else {
        out << kEstimateHeader << '\n'
            << format_real(u) << ',' << format_real(sector.width()) << ',' << format_real(k) << ','
            << round_half_away(k) << '\n';
      }
    };
  });

  // pi3
  std::uint64_t pi3_x = 0;
  auto* pi3_cmd = app.add_subcommand("pi3", "Count primes p <= x with p = 3 (mod 4)");
  pi3_cmd->add_option("x", pi3_x, "Upper bound")->required();
  pi3_cmd->callback([&] {
    action = [&] {
      const std::uint64_t exact = pi3(pi3_x, sieve_options(g.config));
      const auto x = static_cast<double>(pi3_x);
      if (json()) {
        write_json(out, {{"x", pi3_x},
                         {"pi3", exact},
                         {"estimate", x > 2 ? nlohmann::json(pi3_estimate(x)) : nlohmann::json()}});
      } else {
        out << kPi3Header << '\n'
            << pi3_x << ',' << exact << ',' << (x > 2 ? format_real(pi3_estimate(x)) : "") << '\n';
      }
    };
  });

  // table
  std::string table_id;
  std::string caption_mode = "derived-width";
  double max_rho = 0.0;
  auto* table_cmd = app.add_subcommand("table", "Reproduce a census table (fig2a, fig2b)");
  table_cmd->add_option("id", table_id, "Table id")->required()->check(CLI::IsMember({"fig2a", "fig2b"}));
  table_cmd->add_option("--caption-mode", caption_mode, "fig2a sector convention")
      ->check(CLI::IsMember({"derived-width", "printed-caption"}));
  table_cmd->add_option("--max-rho", max_rho, "Only rows with rho <= this value");
  table_cmd->callback([&] {
    action = [&] {
      const CaptionMode mode = caption_mode == "printed-caption" ? CaptionMode::kPrintedCaption
                                                                 : CaptionMode::kDerivedWidth;
      TableSpec spec = table_spec(table_id == "fig2a" ? TableId::kFig2a : TableId::kFig2b, mode);
      if (max_rho > 0.0) {
        std::erase_if(spec.rhos, [&](double r) { return r > max_rho; });
      }
      const auto rows = census_table(spec, census_options(g.config), OverBudget::kSkip);
      for (const auto& row : rows) {
        if (!row.census) {
          err << "warning: skipped rho=" << format_real(row.rho) << " (about "
              << static_cast<std::uint64_t>(row.estimated_points)
              << " lattice points, over budget)\n";
        }
      }
      const std::string mode_name = table_id == "fig2a" ? caption_mode : "n/a";
      if (json()) {
        nlohmann::json j = {{"table", spec.id},
                            {"sector", spec.sector.to_string()},
                            {"caption_mode", mode_name},
                            {"rows", nlohmann::json::array()}};
        for (const auto& row : rows) j["rows"].push_back(table_row_json(row));
        write_json(out, j);
      } else {
        out << "# table=" << spec.id << " sector=" << spec.sector.to_string()
            << " caption-mode=" << mode_name << '\n'
            << kCensusHeader << '\n';
        for (const auto& row : rows) out << table_row_csv(row) << '\n';
      }
    };
  });

  // find-quotient
  double r = 0.0;
  double big_r = 0.0;
  auto* fq_cmd = app.add_subcommand("find-quotient", "Gaussian-prime quotient inside an annular sector");
  fq_cmd->add_option("--alpha", alpha_text, "Sector start angle")->required();
  fq_cmd->add_option("--beta", beta_text, "Sector end angle")->required();
  fq_cmd->add_option("--r", r, "Inner radius")->required();
  fq_cmd->add_option("--R", big_r, "Outer radius")->required();

  auto emit_quotient = [&](const QuotientResult& result, const nlohmann::json& extra,
                           const std::string& comment) {
    if (!verify_quotient(result)) throw InternalError("result failed verification");
    if (json()) {
      nlohmann::json j = quotient_json(result);
      j["verified"] = true;
      for (const auto& [key, value] : extra.items()) j[key] = value;
      write_json(out, j);
    } else {
      out << "# iterations=" << result.trace.iterations
          << " threshold=" << format_real(result.trace.threshold) << " verified=true" << comment
          << '\n'
          << kQuotientHeader << '\n'
          << quotient_csv(result) << '\n';
    }
  };

  fq_cmd->callback([&] {
    action = [&] {
      const AnnularRegion region(parse_sector(alpha_text, beta_text, Bounds::kOpen), r, big_r);
      emit_quotient(find_quotient(region, quotient_options(g.config)), nlohmann::json::object(), "");
    };
  });

  // approximate
  double target_re = 0.0;
  double target_im = 0.0;
  double eps = 0.0;
  auto* approx_cmd = app.add_subcommand("approximate", "Gaussian-prime quotient within eps of re+im i");
  approx_cmd->add_option("--re", target_re, "Target real part")->required();
  approx_cmd->add_option("--im", target_im, "Target imaginary part")->required();
  approx_cmd->add_option("--eps", eps, "Distance bound")->required();
  approx_cmd->callback([&] {
    action = [&] {
      const QuotientResult result = approximate(target_re, target_im, eps, quotient_options(g.config));
      const long double error = distance(result.value, target_re, target_im);
      emit_quotient(result,
                    {{"target", {{"re", target_re}, {"im", target_im}}},
                     {"eps", eps},
                     {"error", static_cast<double>(error)}},
                    " error=" + format_real(static_cast<double>(error)) +
                        " region=" + result.region.sector().to_string() + "x(" +
                        format_real(result.region.r()) + ", " + format_real(result.region.big_r()) + ")");
    };
  });

  // scatter
  std::int64_t bound = 0;
  auto* scatter_cmd = app.add_subcommand("scatter", "Gaussian primes with |a|, |b| <= bound");
  scatter_cmd->add_option("bound", bound, "Coordinate bound")->required()->check(CLI::NonNegativeNumber);
  scatter_cmd->callback([&] {
    action = [&] {
      if (bound > kScatterLimit) {
        throw BudgetError("scatter bound " + std::to_string(bound) + " exceeds " +
                          std::to_string(kScatterLimit));
      }
      nlohmann::json points = nlohmann::json::array();
      std::uint64_t count = 0;
      if (!json()) out << kScatterHeader << '\n';
      for (std::int64_t a = -bound; a <= bound; ++a) {
        for (std::int64_t b = -bound; b <= bound; ++b) {
          const GaussianInt z(a, b);
          const PrimeClass cls = classify(z);
          if (!cls.is_prime()) continue;
          ++count;
          if (json()) {
            points.push_back({{"a", a}, {"b", b}, {"class", std::string(to_string(cls.tag))}});
          } else {
            out << a << ',' << b << ',' << to_string(cls.tag) << '\n';
          }
        }
      }
      if (json()) {
        write_json(out, {{"bound", bound}, {"count", count}, {"points", points}});
      } else {
        out << "# count=" << count << '\n';
      }
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  g.config.output_format = g.format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;

  try {
    if (action) action();
    return kExitOk;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace gaussq::cli
