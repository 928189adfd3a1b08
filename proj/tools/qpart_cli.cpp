// qpart: command-line frontend for the partition measures.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpart/bounds.hpp"
#include "qpart/growth.hpp"
#include "qpart/io.hpp"
#include "qpart/measures.hpp"
#include "qpart/permutation.hpp"
#include "qpart/qarith.hpp"
#include "qpart/sampling.hpp"
#include "qpart/verify.hpp"

namespace {

using qpart::Rational;
using qpart::io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_q(const std::string& text, bool allow_below_one = false) {
  Rational q;
  try {
    q = Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (!allow_below_one && q <= Rational(1)) throw UsageError("q must be > 1, got " + text);
  if (q.sign() <= 0) throw UsageError("q must be positive, got " + text);
  return q;
}

qpart::MeasureKind parse_pq(const std::string& m) {
  if (m == "P") return qpart::MeasureKind::P;
  if (m == "Q") return qpart::MeasureKind::Q;
  throw UsageError("measure must be P or Q for this command, got " + m);
}

void print_json(const Json& j) { std::cout << j.dump() << "\n"; }

struct Options {
  std::string measure = "P";
  int n = 0;
  int n_min = 1;
  int n_max = 10;
  std::string q = "2";
  std::vector<std::string> q_list{"2"};
  std::optional<int> r;
  int k = 1;
  long trunc = 40;
  std::uint64_t seed = 1;
  long count = 1000;
  long steps = 1000;
  std::string format = "json";
  std::string statistic = "row";
  std::string perm;
  int perm_n_max = 8;
  bool report = false;
};

int run_pmf(const Options& o) {
  const Rational q = parse_q(o.q);
  const auto pmf = parse_pq(o.measure) == qpart::MeasureKind::P ? qpart::p_pmf(o.n, q) : qpart::q_pmf(o.n, q);
  if (o.format == "csv") {
    std::cout << qpart::io::pmf_to_csv(pmf);
  } else if (o.format == "json") {
    print_json(qpart::io::pmf_to_json(pmf));
  } else {
    throw UsageError("pmf supports --format json or csv");
  }
  return 0;
}

int run_tail(const Options& o) {
  const Rational q = parse_q(o.q);
  if (!o.r) throw UsageError("tail requires --r");
  Json j;
  if (parse_pq(o.measure) == qpart::MeasureKind::P) {
    j["direct"] = qpart::p_row_tail_direct(o.n, q, *o.r).str();
    j["rogers_selberg"] = qpart::p_row_tail_rs(o.n, q, *o.r).str();
  } else {
    j["direct"] = qpart::q_row_tail_direct(o.n, q, *o.r).str();
  }
  print_json(j);
  return 0;
}

int run_column(const Options& o) {
  const Rational q = parse_q(o.q);
  Json j;
  if (o.measure == "tildeP") {
    const auto rep = qpart::tilde_first_column_report(o.k, q, std::max(o.n, o.k), o.trunc);
    j["closed_form"] = qpart::io::to_json(rep.closed_form);
    j["summed"] = qpart::io::to_json(rep.summed);
    j["consistent"] = rep.ok;
  } else if (parse_pq(o.measure) == qpart::MeasureKind::P) {
    const auto pmf = qpart::p_pmf(o.n, q);
    const int k = o.k;
    j["marginal"] = pmf.mass([k](const qpart::Partition& l) { return l.length() == k; }).str();
    j["closed_form"] = qpart::p_first_column(o.n, q, k).str();
  } else {
    const auto row = qpart::corollary_report(o.n, q, o.k);
    j["marginal"] = row.exact.str();
    j["lower"] = row.lower.str();
    j["upper"] = row.upper.str();
    j["holds"] = row.holds();
  }
  print_json(j);
  return 0;
}

int run_bounds(const Options& o) {
  std::vector<Rational> qs;
  for (const auto& text : o.q_list) {
    qs.push_back(parse_q(text));
    if (qs.back() < Rational(2)) throw UsageError("bounds require q >= 2");
  }
  const auto statistic = o.statistic == "row" ? qpart::Statistic::Row
                         : o.statistic == "column" ? qpart::Statistic::Column
                                                   : throw UsageError("--statistic must be row or column");
  const auto policy = o.r ? qpart::RPolicy::only(*o.r) : qpart::RPolicy::all();
  const auto rows = qpart::bounds_report(o.n_min, o.n_max, policy, qs, parse_pq(o.measure), statistic);
  if (o.format == "csv") {
    std::cout << qpart::io::bounds_to_csv(rows);
  } else if (o.format == "json") {
    print_json(qpart::io::bounds_to_json(rows));
  } else {
    throw UsageError("bounds supports --format csv or json");
  }
  for (const auto& row : rows) {
    if (!row.holds()) return 1;
  }
  return 0;
}

int run_verify(const Options& o) {
  qpart::VerifyOptions vo;
  vo.n_max = o.n_max;
  vo.perm_n_max = o.perm_n_max;
  vo.truncation = o.trunc;
  vo.q_set.clear();
  for (const auto& text : o.q_list) vo.q_set.push_back(parse_q(text));
  const auto report = qpart::run_verification(vo, [](const qpart::CheckResult& r) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.detail << "\n" << std::flush;
  });
  for (const auto& id : report.missing) std::cout << "FAIL " << id << ": manifest entry has no check\n";
  std::cout << (report.ok() ? "all checks passed" : "verification FAILED") << "\n";
  return report.ok() ? 0 : 1;
}

int run_sample(const Options& o) {
  const Rational q = parse_q(o.q);
  if (o.count < 1) throw UsageError("--count must be positive");
  qpart::SampleBatch batch;
  if (o.measure == "tildeP" || o.measure == "tildeQ") {
    if (q < Rational(2)) throw UsageError("tilde samplers require q >= 2");
    batch = o.measure == "tildeP" ? qpart::sample_tilde_p(q, o.seed, o.count, o.trunc)
                                  : qpart::sample_tilde_q(q, o.seed, o.count, o.trunc);
  } else {
    const auto pmf = parse_pq(o.measure) == qpart::MeasureKind::P ? qpart::p_pmf(o.n, q) : qpart::q_pmf(o.n, q);
    batch = qpart::sample_exact(pmf, o.seed, o.count);
  }
  if (o.report) {
    print_json(qpart::io::frequency_report_to_json(qpart::frequency_report(batch)));
  } else {
    std::cout << qpart::io::batch_to_ndjson(batch);
  }
  return 0;
}

int run_rsk(const Options& o) {
  qpart::Permutation perm;
  try {
    perm = qpart::io::parse_permutation(o.perm);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  Json j = qpart::io::mcmc_record(perm);
  j["rsk_shape"] = qpart::io::to_json(qpart::rsk_shape(perm));
  j["inverse"] = qpart::io::to_json(qpart::inverse(perm));
  print_json(j);
  return 0;
}

int run_z_table(const Options& o) {
  const auto table = qpart::z_table(o.n, parse_q(o.q));
  if (o.format == "csv") {
    std::cout << qpart::io::z_table_to_csv(table);
  } else {
    print_json(qpart::io::z_table_to_json(table));
  }
  return 0;
}

int run_mcmc(const Options& o) {
  const Rational q = parse_q(o.q, /*allow_below_one=*/true);
  qpart::McmcSampler sampler(o.n, q, o.seed);
  for (long s = 0; s < o.steps; ++s) std::cout << qpart::io::mcmc_record(sampler.step()).dump() << "\n";
  return 0;
}

int run_syt(const Options& o) {
  const Rational q = parse_q(o.q);
  Json out = Json::array();
  for (const auto& path : qpart::syt_pmf(o.n, q)) {
    Json j;
    j["path"] = qpart::io::syt_to_json(path);
    j["prob"] = path.probability.str();
    out.push_back(std::move(j));
  }
  print_json(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact P_{n,q} / Q_{n,q} partition measures, bounds, RSK statistics and samplers"};
  app.require_subcommand(1);
  Options o;

  auto add_q = [&o](CLI::App* sub) { sub->add_option("--q", o.q, "q as an exact rational, e.g. 2 or 5/2"); };
  auto add_measure = [&o](CLI::App* sub, const std::string& help) {
    sub->add_option("--measure", o.measure, help);
  };

  auto* pmf = app.add_subcommand("pmf", "Exact probability table");
  add_measure(pmf, "P or Q");
  pmf->add_option("--n", o.n, "partition size")->required();
  add_q(pmf);
  pmf->add_option("--format", o.format, "json or csv");

  auto* tail = app.add_subcommand("tail", "Probability that lambda_1 < r");
  add_measure(tail, "P or Q");
  tail->add_option("--n", o.n)->required();
  add_q(tail);
  tail->add_option("--r", o.r)->required();

  auto* column = app.add_subcommand("column", "First-column marginal and closed forms");
  add_measure(column, "P, Q or tildeP");
  column->add_option("--n", o.n, "size (for tildeP: summation cutoff)");
  add_q(column);
  column->add_option("--k", o.k)->required();
  column->add_option("--trunc", o.trunc, "truncation M for infinite products");

  auto* bounds = app.add_subcommand("bounds", "Exact values against the row / column bounds");
  add_measure(bounds, "P or Q");
  bounds->add_option("--statistic", o.statistic, "row or column (column needs Q)");
  bounds->add_option("--n-min", o.n_min);
  bounds->add_option("--n-max", o.n_max);
  bounds->add_option("--r", o.r, "single r (or k); default all");
  bounds->add_option("--q", o.q_list, "one or more q values")->expected(1, -1);
  bounds->add_option("--format", o.format, "csv or json")->default_val("csv");

  auto* verify = app.add_subcommand("verify", "Run the identity and inequality suite");
  verify->add_option("--n-max", o.n_max);
  verify->add_option("--q", o.q_list, "one or more q values")->expected(1, -1);
  verify->add_option("--perm-n-max", o.perm_n_max, "largest S_n enumerated");
  verify->add_option("--trunc", o.trunc, "truncation M for infinite products");

  auto* sample = app.add_subcommand("sample", "Exact samples as NDJSON");
  add_measure(sample, "P, Q, tildeP or tildeQ");
  sample->add_option("--n", o.n);
  add_q(sample);
  sample->add_option("--seed", o.seed);
  sample->add_option("--count", o.count);
  sample->add_option("--trunc", o.trunc, "initial truncation for tilde measures");
  sample->add_flag("--report", o.report, "print the frequency report instead of draws");

  auto* rsk = app.add_subcommand("rsk", "maj, RSK shape, LIS and LDS of a permutation");
  rsk->add_option("--perm", o.perm, "one-line notation, e.g. 3,1,2")->required();

  auto* ztab = app.add_subcommand("z-table", "z(0..n, q) by recurrence");
  ztab->add_option("--n", o.n)->required();
  add_q(ztab);
  ztab->add_option("--format", o.format, "json or csv");

  auto* mcmc = app.add_subcommand("mcmc", "Metropolis chain on S_n for q^{maj(pi)+maj(pi^-1)}");
  mcmc->add_option("--n", o.n)->required();
  add_q(mcmc);
  mcmc->add_option("--steps", o.steps);
  mcmc->add_option("--seed", o.seed);

  auto* syt = app.add_subcommand("syt", "Path measure on standard Young tableaux");
  syt->add_option("--n", o.n)->required();
  add_q(syt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (pmf->parsed()) return run_pmf(o);
    if (tail->parsed()) return run_tail(o);
    if (column->parsed()) return run_column(o);
    if (bounds->parsed()) return run_bounds(o);
    if (verify->parsed()) return run_verify(o);
    if (sample->parsed()) return run_sample(o);
    if (rsk->parsed()) return run_rsk(o);
    if (ztab->parsed()) return run_z_table(o);
    if (mcmc->parsed()) return run_mcmc(o);
    if (syt->parsed()) return run_syt(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
