// Command-line front end: counting, listing, verification and benchmarking
// over the semigroup tree.
//
// Exit codes: 0 success, 1 usage error, 2 verification mismatch.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgtree/sgtree.hpp"

namespace {

constexpr int kDefaultVerifyLimit = 12;
constexpr int kDefaultListLimit = 20;

int env_limit(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    return std::stoi(raw);
  } catch (const std::exception&) {
    return fallback;
  }
}

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

int run_count(int gamma, bool all, int threads, const std::string& format) {
  sgtree::ExploreConfig cfg{gamma, threads,
                            all ? sgtree::ExploreConfig::Mode::all_genera
                                : sgtree::ExploreConfig::Mode::single_genus};
  const bool csv = format == "csv";
  if (csv) std::cout << "genus,count\n";
  if (all) {
    sgtree::CountTable table = sgtree::count_all(cfg);
    for (int g = 1; g <= gamma; ++g) {
      if (csv)
        std::cout << g << ',' << table.at(g) << '\n';
      else
        std::cout << g << ' ' << table.at(g) << '\n';
    }
  } else {
    const std::uint64_t n = sgtree::count_genus(cfg);
    if (csv)
      std::cout << gamma << ',' << n << '\n';
    else
      std::cout << gamma << ' ' << n << '\n';
  }
  return 0;
}

std::string generators_line(const sgtree::NodeView& view) {
  std::vector<int> gaps = view.gaps();
  sgtree::oracle::Membership s = sgtree::oracle::Membership::from_gap_list(gaps);
  std::vector<int> prims = sgtree::oracle::naive_primitives(s);
  std::string out;
  for (std::size_t i = 0; i < prims.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(prims[i]);
  }
  return out;
}

int run_list(int gamma, const std::string& format, bool marker, int limit) {
  if (gamma > limit) {
    std::cerr << "error: gamma " << gamma << " exceeds the listing limit " << limit << '\n';
    return 1;
  }
  auto handler = sgtree::Handler::with_callback(
      [&](const sgtree::NodeView& view, int g) {
        if (g != gamma) return;
        if (format == "gaps") {
          std::cout << sgtree::GapSet(view.gaps()).str() << '\n';
        } else if (format == "chain") {
          std::string line;
          for (int j = 0; j < view.c; ++j) {
            if (marker && j == view.c - view.m) line += '|';
            line += view.test(j) ? '1' : '0';
          }
          std::cout << line << '\n';
        } else {
          std::cout << generators_line(view) << '\n';
        }
      });
  sgtree::explore(std::max(gamma, 2), handler);
  return 0;
}

int run_verify(int gamma) {
  sgtree::oracle::VerifyReport report = sgtree::oracle::cross_verify(gamma);
  std::cout << report.summary << '\n';
  return report.ok ? 0 : 2;
}

int run_bench(int gamma, int threads, int repeat) {
  std::vector<double> elapsed;
  std::uint64_t count = 0;
  for (int k = 0; k < repeat; ++k) {
    const double start = now_seconds();
    count = sgtree::count_genus({gamma, threads, sgtree::ExploreConfig::Mode::single_genus});
    elapsed.push_back(now_seconds() - start);
  }
  std::sort(elapsed.begin(), elapsed.end());
  const double median = elapsed[elapsed.size() / 2];
  std::printf("genus=%d count=%llu elapsed=%.6f threads=%d\n", gamma,
              static_cast<unsigned long long>(count), median, threads);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroup tree enumeration via the RGD bit-chain encoding"};
  app.require_subcommand(1);

  int gamma = 0;
  bool all = false;
  int threads = 1;
  std::string format = "text";
  bool marker = false;
  int repeat = 3;
  int list_limit = kDefaultListLimit;

  auto* count = app.add_subcommand("count", "count semigroups by genus");
  count->add_option("gamma", gamma, "target genus (>= 2)")->required();
  count->add_flag("--all", all, "emit the full table n_1..n_gamma");
  count->add_option("--threads", threads, "parallelism degree")->default_val(1);
  count->add_option("--format", format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}))
      ->default_val("text");

  auto* list = app.add_subcommand("list", "list the semigroups of a given genus");
  list->add_option("gamma", gamma, "genus to list")->required();
  std::string list_format = "gaps";
  list->add_option("--format", list_format, "gaps, chain or generators")
      ->check(CLI::IsMember({"gaps", "chain", "generators"}))
      ->default_val("gaps");
  list->add_flag("--marker", marker, "insert the conductor marker in chains");
  list->add_option("--limit", list_limit, "listing limit")->default_val(kDefaultListLimit);

  auto* verify = app.add_subcommand("verify", "cross-check the walk against the brute-force oracle");
  verify->add_option("gamma", gamma, "genus bound")->required();

  auto* bench = app.add_subcommand("bench", "time the single-genus count");
  bench->add_option("gamma", gamma, "target genus (>= 4)")->required();
  bench->add_option("--threads", threads, "parallelism degree")->default_val(1);
  bench->add_option("--repeat", repeat, "repetitions; the median is reported")->default_val(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (count->parsed()) {
      if (gamma < 2) throw std::invalid_argument("count requires gamma >= 2 (n_0 = 1 by convention only)");
      return run_count(gamma, all, threads, format);
    }
    if (list->parsed()) {
      if (gamma < 1) throw std::invalid_argument("list requires gamma >= 1");
      return run_list(gamma, list_format, marker, list_limit);
    }
    if (verify->parsed()) {
      const int limit = env_limit("SGTREE_ORACLE_LIMIT", kDefaultVerifyLimit);
      if (gamma < 1 || gamma > limit)
        throw std::invalid_argument("verify requires 1 <= gamma <= " + std::to_string(limit));
      return run_verify(gamma);
    }
    if (bench->parsed()) {
      if (gamma < 4) throw std::invalid_argument("bench requires gamma >= 4");
      if (repeat < 1) throw std::invalid_argument("repeat must be positive");
      return run_bench(gamma, threads, repeat);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
