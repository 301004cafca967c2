// Command-line surface over the permcomm library: constructive commutator
// decompositions with verifiable certificates, prime-window and counting
// queries, T2-system censuses, and coverage sampling.
//
// Exit codes: 0 success, 1 domain error (typed name on stderr), 2 usage.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permcomm/counting.hpp"
#include "permcomm/decompose.hpp"
#include "permcomm/errors.hpp"
#include "permcomm/group_analysis.hpp"
#include "permcomm/perm.hpp"
#include "permcomm/small_group.hpp"
#include "permcomm/t2.hpp"

namespace {

using permcomm::BigCount;
using permcomm::BigRational;
using ojson = nlohmann::ordered_json;

std::string rational_str(const BigRational &r) {
  if (denominator(r) == 1)
    return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

std::vector<permcomm::Perm> alternating_gens(int n) {
  using permcomm::parse_cycles;
  if (n == 3)
    return {parse_cycles("(1 2 3)", 3)};
  std::ostringstream big;
  big << '(';
  for (int x = (n % 2 == 1) ? 1 : 2; x <= n; ++x)
    big << x << (x == n ? "" : " ");
  big << ')';
  return {parse_cycles("(1 2 3)", n), parse_cycles(big.str(), n)};
}

struct CensusRow {
  std::string group;
  int order;
  permcomm::PairCensus census;
};

CensusRow census_for(const std::string &name, bool long_ok, int workers,
                     uint64_t cap) {
  const int n = name[1] - '0';
  const std::vector<permcomm::Perm> gens = alternating_gens(n);
  const permcomm::SmallGroup G = permcomm::build_small_group(gens, n, cap);
  permcomm::CensusOptions opts;
  opts.long_running_ok = long_ok;
  opts.workers = workers;
  return {name, G.order, permcomm::pair_census(G, opts)};
}

const char *kCensusCsvHeader = "group,order,gen_pairs,comm_classes_G,"
                               "comm_classes_ambient,t2_systems,aut_orbits,"
                               "wall_time";

std::string census_csv_row(const CensusRow &row) {
  std::ostringstream out;
  out << row.group << ',' << row.order << ','
      << row.census.generating_pairs << ',' << row.census.comm_classes_g
      << ',' << row.census.comm_classes_ambient << ','
      << row.census.t2_systems << ',' << row.census.aut_orbits << ','
      << std::fixed << std::setprecision(3) << row.census.wall_seconds;
  return out.str();
}

ojson census_json(const CensusRow &row) {
  ojson j;
  j["group"] = row.group;
  j["order"] = row.order;
  j["gen_pairs"] = row.census.generating_pairs;
  j["comm_classes_G"] = row.census.comm_classes_g;
  j["comm_classes_ambient"] = row.census.comm_classes_ambient;
  j["t2_systems"] = row.census.t2_systems;
  j["aut_orbits"] = row.census.aut_orbits;
  j["wall_time"] = row.census.wall_seconds;
  return j;
}

void print_census_text(const CensusRow &row) {
  std::cout << "group: " << row.group << "\n"
            << "order: " << row.order << "\n"
            << "gen_pairs: " << row.census.generating_pairs << "\n"
            << "comm_classes_G: " << row.census.comm_classes_g << "\n"
            << "comm_classes_ambient: " << row.census.comm_classes_ambient
            << "\n"
            << "t2_systems: " << row.census.t2_systems << "\n"
            << "aut_orbits: " << row.census.aut_orbits << "\n"
            << "wall_time: " << std::fixed << std::setprecision(3)
            << row.census.wall_seconds << "s\n";
}

void print_verify_report(const permcomm::VerifyReport &report,
                         const std::string &format) {
  if (format == "json") {
    ojson j;
    ojson results = ojson::object();
    for (const auto &[name, ok] : report.results)
      results[name] = ok;
    j["results"] = std::move(results);
    j["all_passed"] = report.all_passed;
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto &[name, ok] : report.results)
    std::cout << "check " << name << ": " << (ok ? "pass" : "fail") << "\n";
  std::cout << "all: " << (report.all_passed ? "pass" : "fail") << "\n";
}

int run_decompose(int n, const std::string &mu_text,
                  std::optional<int> force_p, std::optional<uint64_t> seed,
                  uint64_t trial_cap, bool deep, const std::string &format) {
  const permcomm::Perm mu = permcomm::parse_cycles(mu_text, n);
  permcomm::PipelineOptions opts;
  opts.seed = seed ? *seed : fresh_seed();
  opts.force_p = force_p;
  opts.verify_closure = deep;
  opts.trial_cap = trial_cap;
  const permcomm::Certificate cert = permcomm::run_pipeline(mu, opts);
  if (format == "json") {
    std::cout << permcomm::certificate_to_json(cert) << "\n";
    return 0;
  }
  std::cout << "n: " << cert.n << "\n"
            << "p: " << cert.p << "\n"
            << "seed: " << cert.seed << "\n"
            << "mu: " << permcomm::format_cycles(cert.mu) << "\n"
            << "sigma: " << permcomm::format_cycles(cert.sigma) << "\n"
            << "tau_even: " << permcomm::format_cycles(cert.tau_even) << "\n"
            << "tau_odd: " << permcomm::format_cycles(cert.tau_odd) << "\n"
            << "transposition: "
            << permcomm::format_cycles(cert.transposition) << "\n";
  for (const auto &[name, ok] : cert.checks)
    std::cout << "check " << name << ": " << (ok ? "pass" : "fail") << "\n";
  return 0;
}

int run_verify(const std::string &path, bool deep,
               const std::string &format) {
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in)
      throw permcomm::SyntaxError("cannot open certificate file '" + path +
                                  "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  const permcomm::Certificate cert = permcomm::certificate_from_json(text);
  const permcomm::VerifyReport report =
      permcomm::verify_certificate(cert, deep);
  print_verify_report(report, format);
  return report.all_passed ? 0 : 1;
}

int run_primes(int n, const std::string &format) {
  const permcomm::PrimeWindow w = permcomm::prime_in_window(n);
  if (format == "json") {
    ojson j;
    j["n"] = w.n;
    j["lo"] = w.lo;
    j["hi"] = w.hi;
    if (w.p)
      j["p"] = *w.p;
    else
      j["p"] = nullptr;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  if (w.p)
    std::cout << "p=" << *w.p << "\n";
  else
    std::cout << "none\n";
  return 0;
}

int print_count(const std::string &key, const BigCount &value,
                const std::string &format) {
  if (format == "json") {
    ojson j;
    j[key] = value.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << value.str() << "\n";
  }
  return 0;
}

int run_t2(const std::string &group, bool long_ok, int workers, uint64_t cap,
           const std::string &format) {
  const CensusRow row = census_for(group, long_ok, workers, cap);
  if (format == "csv") {
    std::cout << kCensusCsvHeader << "\n" << census_csv_row(row) << "\n";
  } else if (format == "json") {
    std::cout << census_json(row).dump(2) << "\n";
  } else {
    print_census_text(row);
  }
  return 0;
}

int run_sample(int n, uint64_t trials, std::optional<uint64_t> seed,
               const std::string &format) {
  const uint64_t s = seed ? *seed : fresh_seed();
  const permcomm::CoverageReport report =
      permcomm::sample_coverage(n, trials, s);
  if (format == "json") {
    ojson j;
    j["n"] = report.n;
    j["p"] = report.p;
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["covered"] = report.covered;
    j["certificates_ok"] = report.certificates_ok;
    j["fraction"] = rational_str(report.fraction);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "n: " << report.n << "\n"
            << "p: " << report.p << "\n"
            << "seed: " << report.seed << "\n"
            << "trials: " << report.trials << "\n"
            << "covered: " << report.covered << "\n"
            << "certificates_ok: " << report.certificates_ok << "\n"
            << "fraction: " << rational_str(report.fraction) << "\n";
  return 0;
}

int run_tables_primes(const std::string &format) {
  std::vector<permcomm::PrimeWindow> rows;
  for (int n = 14; n <= 33; ++n) {
    if (n == 19)
      continue;
    rows.push_back(permcomm::prime_in_window(n));
  }
  if (format == "csv") {
    std::cout << "n,lo,p\n";
    for (const auto &w : rows)
      std::cout << w.n << ',' << w.lo << ',' << *w.p << "\n";
  } else if (format == "json") {
    ojson arr = ojson::array();
    for (const auto &w : rows) {
      ojson j;
      j["n"] = w.n;
      j["lo"] = w.lo;
      j["p"] = *w.p;
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << "  n  [3n/4]   p\n";
    for (const auto &w : rows)
      std::cout << std::setw(3) << w.n << std::setw(8) << w.lo
                << std::setw(4) << *w.p << "\n";
  }
  return 0;
}

int run_tables_t2(bool long_ok, int workers, uint64_t cap,
                  const std::string &format) {
  std::vector<std::string> groups = {"A3", "A4", "A5", "A6"};
  if (long_ok)
    groups.push_back("A7");
  std::vector<CensusRow> rows;
  rows.reserve(groups.size());
  for (const std::string &g : groups)
    rows.push_back(census_for(g, long_ok, workers, cap));
  if (format == "csv") {
    std::cout << kCensusCsvHeader << "\n";
    for (const CensusRow &row : rows)
      std::cout << census_csv_row(row) << "\n";
  } else if (format == "json") {
    ojson arr = ojson::array();
    for (const CensusRow &row : rows)
      arr.push_back(census_json(row));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const CensusRow &row : rows) {
      print_census_text(row);
      std::cout << "\n";
    }
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Constructive commutator decompositions in alternating and "
               "symmetric groups"};
  app.require_subcommand(1);

  const auto add_format = [](CLI::App *cmd, std::string &var,
                             std::vector<std::string> choices) {
    cmd->add_option("--format", var, "output format")
        ->check(CLI::IsMember(choices));
  };

  // decompose
  int dec_n = 0;
  std::string dec_mu;
  std::optional<int> dec_p;
  std::optional<uint64_t> dec_seed;
  uint64_t dec_cap = permcomm::kDefaultTrialCap;
  bool dec_deep = false;
  std::string dec_format = "text";
  CLI::App *dec = app.add_subcommand(
      "decompose", "write an even permutation as two commutators");
  dec->add_option("--n", dec_n, "degree")->required();
  dec->add_option("--mu", dec_mu, "target permutation, cycle notation")
      ->required();
  dec->add_option("--p", dec_p, "force this prime instead of the smallest");
  dec->add_option("--seed", dec_seed, "seed for the randomized split");
  dec->add_option("--cap", dec_cap, "trial cap for the randomized split");
  dec->add_flag("--deep-verify", dec_deep,
                "also certify group orders by closure (n <= 10)");
  add_format(dec, dec_format, {"text", "json"});

  // verify
  std::string ver_path;
  bool ver_deep = false;
  std::string ver_format = "text";
  CLI::App *ver =
      app.add_subcommand("verify", "re-check a certificate from JSON");
  ver->add_option("file", ver_path, "certificate file ('-' for stdin)");
  ver->add_flag("--deep-verify", ver_deep, "also run the closure oracle");
  add_format(ver, ver_format, {"text", "json"});

  // primes
  int pr_n = 0;
  std::string pr_format = "text";
  CLI::App *pr =
      app.add_subcommand("primes", "prime window [floor(3n/4), n-3]");
  pr->add_option("--n", pr_n, "degree")->required();
  add_format(pr, pr_format, {"text", "json"});

  // count
  CLI::App *cnt = app.add_subcommand("count", "exact combinatorics");
  cnt->require_subcommand(1);
  int cnt_n = 0, cnt_k = 0, cnt_min_part = 1;
  std::string cnt_ratio, cnt_format = "text";
  CLI::App *cnt_p = cnt->add_subcommand("p", "unrestricted partitions P(n)");
  cnt_p->add_option("--n", cnt_n, "argument")->required();
  add_format(cnt_p, cnt_format, {"text", "json"});
  CLI::App *cnt_do = cnt->add_subcommand(
      "distinct-odd", "partitions into distinct odd parts >= min-part");
  cnt_do->add_option("--n", cnt_n, "argument")->required();
  cnt_do->add_option("--min-part", cnt_min_part, "smallest allowed part");
  add_format(cnt_do, cnt_format, {"text", "json"});
  CLI::App *cnt_cl = cnt->add_subcommand(
      "classes", "conjugacy classes of the alternating group");
  cnt_cl->add_option("--n", cnt_n, "degree")->required();
  add_format(cnt_cl, cnt_format, {"text", "json"});
  CLI::App *cnt_der =
      cnt->add_subcommand("derangements", "derangements: all, even, odd");
  cnt_der->add_option("--n", cnt_n, "degree")->required();
  add_format(cnt_der, cnt_format, {"text", "json"});
  CLI::App *cnt_ef = cnt->add_subcommand(
      "even-fixing", "even permutations fixing at most k points");
  cnt_ef->add_option("--n", cnt_n, "degree")->required();
  cnt_ef->add_option("--k", cnt_k, "maximal number of fixed points")
      ->required();
  add_format(cnt_ef, cnt_format, {"text", "json"});
  CLI::App *cnt_t2 = cnt->add_subcommand(
      "t2-bound", "lower bound (P(n) - P(n - floor(n/r)))/2");
  cnt_t2->add_option("--n", cnt_n, "degree")->required();
  cnt_t2->add_option("--ratio", cnt_ratio, "ratio r > 4 (integer, decimal "
                                           "or a/b)")
      ->required();
  add_format(cnt_t2, cnt_format, {"text", "json"});
  CLI::App *cnt_pb = cnt->add_subcommand(
      "prob-bound", "exact bound 1 - 2/floor(n/10)! for n >= 33");
  cnt_pb->add_option("--n", cnt_n, "degree")->required();
  add_format(cnt_pb, cnt_format, {"text", "json"});
  CLI::App *cnt_hr = cnt->add_subcommand(
      "hr", "Hardy-Ramanujan estimate of P(n) (diagnostic floats)");
  cnt_hr->add_option("--n", cnt_n, "argument")->required();
  add_format(cnt_hr, cnt_format, {"text", "json"});

  // t2
  std::string t2_group;
  bool t2_long = false;
  int t2_workers = 1;
  uint64_t t2_cap = permcomm::kDefaultGroupOrderCap;
  std::string t2_format = "text";
  CLI::App *t2 = app.add_subcommand("t2", "generating-pair census");
  t2->add_option("--group", t2_group, "A3..A7")
      ->required()
      ->check(CLI::IsMember({"A3", "A4", "A5", "A6", "A7"}));
  t2->add_flag("--long", t2_long, "allow long-running censuses");
  t2->add_option("--workers", t2_workers, "worker threads for pair testing");
  t2->add_option("--cap", t2_cap, "group order cap");
  add_format(t2, t2_format, {"text", "json", "csv"});

  // sample
  int smp_n = 0;
  uint64_t smp_trials = 100;
  std::optional<uint64_t> smp_seed;
  std::string smp_format = "text";
  CLI::App *smp = app.add_subcommand(
      "sample", "coverage of random even permutations by the pipeline");
  smp->add_option("--n", smp_n, "degree")->required();
  smp->add_option("--trials", smp_trials, "number of samples");
  smp->add_option("--seed", smp_seed, "seed");
  add_format(smp, smp_format, {"text", "json"});

  // tables
  CLI::App *tab = app.add_subcommand("tables", "reproduce the paper tables");
  tab->require_subcommand(1);
  std::string tab_format = "text";
  bool tab_long = false;
  int tab_workers = 1;
  uint64_t tab_cap = permcomm::kDefaultGroupOrderCap;
  CLI::App *tab_primes =
      tab->add_subcommand("primes", "prime windows for n = 14..33");
  add_format(tab_primes, tab_format, {"text", "json", "csv"});
  CLI::App *tab_t2 = tab->add_subcommand("t2", "censuses for A3..A7");
  tab_t2->add_flag("--long", tab_long, "include the A7 row");
  tab_t2->add_option("--workers", tab_workers, "worker threads");
  tab_t2->add_option("--cap", tab_cap, "group order cap");
  add_format(tab_t2, tab_format, {"text", "json", "csv"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(dec))
      return run_decompose(dec_n, dec_mu, dec_p, dec_seed, dec_cap, dec_deep,
                           dec_format);
    if (app.got_subcommand(ver))
      return run_verify(ver_path, ver_deep, ver_format);
    if (app.got_subcommand(pr))
      return run_primes(pr_n, pr_format);
    if (app.got_subcommand(cnt)) {
      if (cnt->got_subcommand(cnt_p))
        return print_count("p", permcomm::partition_p(cnt_n), cnt_format);
      if (cnt->got_subcommand(cnt_do))
        return print_count(
            "distinct_odd",
            permcomm::partition_distinct_odd(cnt_n, cnt_min_part),
            cnt_format);
      if (cnt->got_subcommand(cnt_cl))
        return print_count("classes",
                           permcomm::class_count_alternating(cnt_n),
                           cnt_format);
      if (cnt->got_subcommand(cnt_der)) {
        const permcomm::DerangementCounts d =
            permcomm::derangement_counts(cnt_n);
        if (cnt_format == "json") {
          ojson j;
          j["a"] = d.a.str();
          j["b"] = d.b.str();
          j["c"] = d.c.str();
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "a=" << d.a.str() << " b=" << d.b.str()
                    << " c=" << d.c.str() << "\n";
        }
        return 0;
      }
      if (cnt->got_subcommand(cnt_ef))
        return print_count("even_fixing",
                           permcomm::even_fixing_at_most(cnt_n, cnt_k),
                           cnt_format);
      if (cnt->got_subcommand(cnt_t2))
        return print_count(
            "t2_bound",
            permcomm::t2_lower_bound(cnt_n,
                                     permcomm::parse_ratio(cnt_ratio)),
            cnt_format);
      if (cnt->got_subcommand(cnt_pb)) {
        const BigRational bound =
            permcomm::generation_probability_bound(cnt_n);
        if (cnt_format == "json") {
          ojson j;
          j["prob_bound"] = rational_str(bound);
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << rational_str(bound) << "\n";
        }
        return 0;
      }
      if (cnt->got_subcommand(cnt_hr)) {
        const permcomm::HardyRamanujanDiagnostic d =
            permcomm::hardy_ramanujan_diagnostic(cnt_n);
        if (cnt_format == "json") {
          ojson j;
          j["estimate"] = d.estimate;
          j["ratio"] = d.ratio;
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << "estimate=" << d.estimate << " ratio=" << d.ratio
                    << "\n";
        }
        return 0;
      }
    }
    if (app.got_subcommand(t2))
      return run_t2(t2_group, t2_long, t2_workers, t2_cap, t2_format);
    if (app.got_subcommand(smp))
      return run_sample(smp_n, smp_trials, smp_seed, smp_format);
    if (app.got_subcommand(tab)) {
      if (tab->got_subcommand(tab_primes))
        return run_tables_primes(tab_format);
      if (tab->got_subcommand(tab_t2))
        return run_tables_t2(tab_long, tab_workers, tab_cap, tab_format);
    }
  } catch (const permcomm::Error &e) {
    std::cerr << e.what() << "\n"; // what() is already "Kind: detail"
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
