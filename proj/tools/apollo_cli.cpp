#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "apollo/class_enum.hpp"
#include "apollo/depth.hpp"
#include "apollo/geometry.hpp"
#include "apollo/parallel.hpp"
#include "apollo/staircase.hpp"
#include "apollo/tangency.hpp"
#include "apollo/verify.hpp"

using namespace apollo;

namespace {

enum ExitCode { kOk = 0, kUsage = 2, kBudget = 3, kInvariant = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Output goes to a file when a path is given, otherwise to stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw UsageError("cannot open " + path + " for writing");
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string half_integer(const Rational& r) {
  if (r.den() == 1) return to_string(r.num());
  std::string s = to_string(r.num() / 2) + ".5";
  if (r.num() < 0 && r.num() / 2 == 0) s = "-" + s;
  return s;
}

DescartesQuadruple parse_quadruple(const std::vector<std::string>& v) {
  if (v.size() != 4) throw UsageError("expected four curvatures");
  DescartesQuadruple q;
  for (int i = 0; i < 4; ++i) q[i] = parse_i128(v[i]);
  return q;
}

std::vector<HistogramBin> bottom_only_histogram(std::int64_t n, int bins, const std::vector<std::int64_t>& mult) {
  std::vector<HistogramBin> out(bins);
  for (int k = 0; k < bins; ++k) {
    out[k].lo = Rational(k, bins);
    out[k].hi = Rational(k + 1, bins);
  }
  for (std::int64_t c = 0; c < n; ++c) {
    if (mult[c] == 0) continue;
    const std::int64_t k = std::int64_t((i128(c) * bins) / n);
    out[k].count += std::uint64_t(mult[c]);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apollonian packings, depth statistics and the staircase distribution"};
  app.require_subcommand(1);
  int threads_flag = 0;
  app.add_option("--threads", threads_flag, "worker threads (default: STAIRCASE_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  std::uint64_t budget = 1u << 26;
  app.add_option("--budget", budget, "factorization work budget per integer");

  std::int64_t n = 0;
  std::string output;

  auto* classes = app.add_subcommand("classes", "list the reduced forms of discriminant -4n^2 as CSV");
  bool naive = false;
  classes->add_option("N", n, "curvature")->required();
  classes->add_flag("--naive", naive, "use the quadratic-time enumerator");
  classes->add_option("-o,--output", output, "CSV path");

  auto* rmc_cmd = app.add_subcommand("rmc", "histogram of MC(q)/n over all classes");
  int bins = 100;
  bool bottom_only = false;
  std::string json_path;
  std::int64_t model_t_max = 1000;
  rmc_cmd->add_option("N", n, "curvature")->required();
  rmc_cmd->add_option("--bins", bins, "number of bins")->check(CLI::PositiveNumber);
  rmc_cmd->add_flag("--bottom-only", bottom_only, "count only classes on the bottom stair");
  rmc_cmd->add_option("-o,--output", output, "CSV path");
  rmc_cmd->add_option("--json", json_path, "summary path (default: <output>.json when --output is given)");
  rmc_cmd->add_option("--model-t-max", model_t_max, "staircase truncation for the L1 distance")
      ->check(CLI::PositiveNumber);

  auto* stairs = app.add_subcommand("stairs", "stair table up to a given t");
  std::int64_t t_max = 50;
  stairs->add_option("--t-max", t_max, "largest t")->check(CLI::PositiveNumber);
  stairs->add_option("-o,--output", output, "CSV path");

  auto* tangency = app.add_subcommand("tangency", "count packings where curvatures c1 and c2 touch");
  std::int64_t c1 = 0, c2 = 0;
  tangency->add_option("C1", c1)->required();
  tangency->add_option("C2", c2)->required();

  auto* spikes = app.add_subcommand("spikes", "predict histogram spikes for n");
  spikes->add_option("N", n, "curvature")->required();
  spikes->add_option("-o,--output", output, "CSV path");

  auto* draw = app.add_subcommand("draw", "render figures as SVG or CSV");
  draw->require_subcommand(1);
  std::string format = "svg";
  bool domain = false;
  int width_px = 800;
  double label_px = 10;
  auto common_draw = [&](CLI::App* sub) {
    sub->add_option("--format", format)->check(CLI::IsMember({"svg", "csv"}));
    sub->add_option("-o,--output", output, "output path");
    sub->add_flag("--domain", domain, "overlay the fundamental domain");
    sub->add_option("--width", width_px, "SVG width in pixels")->check(CLI::PositiveNumber);
    sub->add_option("--label-radius", label_px, "label circles at least this many pixels in radius");
  };
  auto* draw_depth = draw->add_subcommand("depth-circles", "depth circles up to a word length");
  int max_depth = 2;
  draw_depth->add_option("--max-depth", max_depth)->check(CLI::NonNegativeNumber);
  common_draw(draw_depth);
  auto* draw_packing = draw->add_subcommand("packing", "a bounded packing from a Descartes quadruple");
  std::vector<std::string> quad;
  long long max_curv = 100;
  draw_packing->add_option("QUADRUPLE", quad, "four curvatures")->expected(4)->required();
  draw_packing->add_option("--max-curvature", max_curv)->check(CLI::PositiveNumber);
  common_draw(draw_packing);
  auto* draw_eps = draw->add_subcommand("epsilon", "epsilon-circles inside a depth circle");
  std::vector<std::string> coeffs;
  std::vector<double> eps_list;
  draw_eps->add_option("COEFFS", coeffs, "t u v w")->expected(4)->required();
  draw_eps->add_option("--eps", eps_list, "epsilon values")->delimiter(',');
  common_draw(draw_eps);

  auto* verify = app.add_subcommand("verify", "run the invariant suite");

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
    const unsigned threads = resolve_thread_count(threads_flag);

    if (*classes) {
      if (n < 1) throw UsageError("N must be positive");
      const ClassList cl = naive ? enumerate_classes_naive(n) : enumerate_classes_fast(n, threads);
      Sink sink(output);
      auto& os = sink.out();
      os << "A,B,C,a,b,c,d\n";
      for (const auto& f : cl.forms) {
        const DescartesQuadruple q = theta({n, f});
        os << to_string(f.a) << ',' << to_string(f.b) << ',' << to_string(f.c);
        for (i128 v : q.c) os << ',' << to_string(v);
        os << '\n';
      }
      return kOk;
    }

    if (*rmc_cmd) {
      if (n < 1) throw UsageError("N must be positive");
      std::vector<HistogramBin> hist;
      std::size_t class_count = 0, points = 0;
      if (bottom_only) {
        const auto mult = rmc0(n, threads, budget);
        hist = bottom_only_histogram(n, bins, mult);
        class_count = enumerate_classes_fast(n, threads).size();
        for (auto m : mult) points += std::size_t(m);
      } else {
        const RmcResult res = rmc(enumerate_classes_fast(n, threads), threads);
        hist = histogram(res.heights(), bins);
        class_count = points = res.records.size();
      }
      Sink sink(output);
      auto& os = sink.out();
      os << "bin_lo,bin_hi,count\n";
      for (const auto& b : hist) os << b.lo.str() << ',' << b.hi.str() << ',' << b.count << '\n';

      if (json_path.empty() && !output.empty() && output != "-") json_path = output + ".json";
      if (!json_path.empty()) {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["bins"] = bins;
        j["bottom_only"] = bottom_only;
        j["class_count"] = class_count;
        j["data_points"] = points;
        j["model_t_max"] = model_t_max;
        j["staircase_l1_distance"] =
            points == 0 ? 0.0 : histogram_l1_distance(build_staircase(model_t_max, threads), hist);
        std::ofstream js(json_path, std::ios::binary);
        if (!js) throw UsageError("cannot open " + json_path + " for writing");
        js << j.dump(2) << '\n';
      }
      return kOk;
    }

    if (*stairs) {
      const StaircaseModel m = build_staircase(t_max, threads);
      Sink sink(output);
      write_stair_table_csv(sink.out(), m);
      std::fprintf(stderr, "stairs=%zu mass=%.10f\n", m.stairs().size(), m.mass());
      return kOk;
    }

    if (*tangency) {
      if (c1 + c2 <= 0) throw UsageError("c1 + c2 must be positive");
      if (c1 < 1) throw UsageError("c1 must be positive");
      const std::int64_t t = tangency_exact(c1, c2, budget);
      std::cout << "T=" << t << " estimate=" << half_integer(tangency_estimate(c1, c2, budget)) << '\n';
      return kOk;
    }

    if (*spikes) {
      if (n < 2) throw UsageError("N must be at least 2");
      const SpikeReport r = predict_spikes(n, budget);
      if (r.empty()) {
        std::cout << "no spikes predicted\n";
        return kOk;
      }
      Sink sink(output);
      write_spike_csv(sink.out(), r);
      return kOk;
    }

    if (*draw) {
      Scene scene;
      if (*draw_depth) {
        scene = render_depth_circles(max_depth);
      } else if (*draw_packing) {
        scene = render_packing(parse_quadruple(quad), max_curv);
      } else {
        const DescartesQuadruple c = parse_quadruple(coeffs);
        const CoefficientQuadruple cq{c[0], c[1], c[2], c[3]};
        if (cq.norm() != 1) throw UsageError("coefficients must satisfy t^2+4v^2-4uw = 1");
        if (eps_list.empty()) {
          const double t = double(cq.t), top = t - std::sqrt(t * t - 1);
          eps_list = {0.0, top / 3, 2 * top / 3, top};
        }
        scene = render_epsilon_circles(cq, eps_list);
      }
      if (domain) add_fundamental_domain(scene);
      Sink sink(output);
      if (format == "csv") {
        write_circle_csv(sink.out(), scene);
      } else {
        write_svg(sink.out(), scene, SvgOptions{width_px, label_px});
      }
      return kOk;
    }

    if (*verify) {
      bool all = true;
      for (const auto& r : run_verify_suite(threads)) {
        std::printf("%s %-22s %7.3fs  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.detail.c_str());
        all = all && r.passed;
      }
      std::fflush(stdout);
      return all ? kOk : kInvariant;
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsage;
  } catch (const FactorBudgetExceeded& e) {
    std::fprintf(stderr, "budget exceeded: %s\n", e.what());
    return kBudget;
  } catch (const OverflowError& e) {
    std::fprintf(stderr, "integer range exceeded: %s\n", e.what());
    return kBudget;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kInvariant;
  }
  return kUsage;
}
