#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "nilzeta/formulas.hpp"
#include "nilzeta/oracle/census.hpp"
#include "nilzeta/oracle/types.hpp"
#include "nilzeta/series.hpp"
#include "nilzeta/verify.hpp"

namespace nilzeta::cli {
namespace {

using formulas::GroupFamilyIndex;
using formulas::ZetaKind;
using Json = nlohmann::ordered_json;

constexpr int kMaxClosedFormN = 8;
constexpr int kMaxAbscissaN = 64;
constexpr int kMaxCensusN = 4;
constexpr int kMaxCensusK = 30;
// Total HNF bases a single count request may enumerate.
constexpr unsigned long kMaxCensusLattices = 50'000'000;
constexpr int kMaxSeriesK = 60;
constexpr long kMaxPrime = 97;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string kind;
  std::optional<int> n;
  std::optional<long> p;
  std::optional<int> K;
  std::optional<int> max_k;
  std::string csv;
  std::string suite;
};

class Report {
 public:
  explicit Report(std::string command) { doc_["command"] = std::move(command); }

  Json& params() { return doc_["params"]; }
  Json& result() { return doc_["result"]; }
  void line(std::string text) { lines_.push_back(std::move(text)); }

  void check(const std::string& name, bool pass, Json fields = Json::object(), const std::string& detail = {}) {
    Json entry;
    entry["name"] = name;
    entry["pass"] = pass;
    for (auto& [key, value] : fields.items()) entry[key] = value;
    checks_.push_back(std::move(entry));
    line(std::string(pass ? "PASS " : "FAIL ") + name + (detail.empty() ? "" : ": " + detail));
    if (!pass && first_failure_.empty()) first_failure_ = name;
  }

  bool ok() const { return first_failure_.empty(); }
  const std::string& first_failure() const { return first_failure_; }
  std::size_t check_count() const { return checks_.size(); }

  void write(std::ostream& out, bool json) {
    if (json) {
      if (!doc_.contains("params")) doc_["params"] = Json::object();
      if (!doc_.contains("result")) doc_["result"] = Json::object();
      doc_["checks"] = checks_.empty() ? Json::array() : checks_;
      out << doc_.dump(2) << '\n';
      return;
    }
    for (const auto& l : lines_) out << l << '\n';
  }

 private:
  Json doc_;
  Json checks_ = Json::array();
  std::vector<std::string> lines_;
  std::string first_failure_;
};

// Number of sublattices of Z^d of index p^k for k = 0..K: the coefficients of
// prod_{i<d} 1/(1 - p^i t).
std::vector<mpz_class> sublattice_counts(int d, long p, int K) {
  std::vector<mpz_class> c(static_cast<std::size_t>(K) + 1, 0);
  c[0] = 1;
  mpz_class q = 1;
  for (int i = 0; i < d; ++i, q *= p) {
    for (std::size_t j = 1; j < c.size(); ++j) c[j] += q * c[j - 1];
  }
  return c;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

ZetaKind require_kind(const Options& o) {
  if (o.kind.empty()) throw UsageError("--kind is required");
  try {
    return formulas::parse_kind(o.kind);
  } catch (const std::invalid_argument&) {
    throw UsageError("--kind must be one of leq, normal, hat (got '" + o.kind + "')");
  }
}

int require_n(const std::optional<int>& n, int ceiling) {
  if (!n) throw UsageError("--n is required");
  if (*n < 2) throw UsageError("--n must be at least 2");
  if (*n > ceiling) throw UsageError("--n must be at most " + std::to_string(ceiling));
  return *n;
}

long require_p(const std::optional<long>& p) {
  if (!p) throw UsageError("--p is required");
  if (!is_prime(*p) || *p > kMaxPrime) throw UsageError("--p must be a prime at most " + std::to_string(kMaxPrime));
  return *p;
}

int require_bound(const std::optional<int>& v, const char* flag, int ceiling) {
  if (!v) throw UsageError(std::string(flag) + " is required");
  if (*v < 0 || *v > ceiling) {
    throw UsageError(std::string(flag) + " must lie in [0, " + std::to_string(ceiling) + "]");
  }
  return *v;
}

std::string join(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "]";
}

std::vector<std::string> integer_strings(const std::vector<mpq_class>& coeffs) {
  std::vector<std::string> out;
  for (const auto& c : coeffs) out.push_back(c.get_str());
  return out;
}

void cmd_formula(const Options& o, Report& r) {
  const ZetaKind kind = require_kind(o);
  const int n = require_n(o.n, kMaxClosedFormN);
  r.params() = {{"kind", formulas::to_string(kind)}, {"n", n}};
  const std::string text = formulas::zeta_closed_form(kind, GroupFamilyIndex(n)).to_string();
  r.result()["rational"] = text;
  r.line(text);
}

void cmd_expand(const Options& o, Report& r) {
  const ZetaKind kind = require_kind(o);
  const int n = require_n(o.n, kMaxClosedFormN);
  const long p = require_p(o.p);
  const int K = require_bound(o.K, "--K", kMaxSeriesK);
  r.params() = {{"kind", formulas::to_string(kind)}, {"n", n}, {"p", p}, {"K", K}};
  const auto coeffs = integer_strings(series_expand(formulas::zeta_closed_form(kind, GroupFamilyIndex(n)), p, K));
  r.result()["coefficients"] = coeffs;
  for (int k = 0; k <= K; ++k) r.line("t^" + std::to_string(k) + ": " + coeffs[static_cast<std::size_t>(k)]);
}

void cmd_count(const Options& o, Report& r) {
  const ZetaKind kind = require_kind(o);
  if (kind == ZetaKind::Hat) throw UsageError("count supports --kind leq or normal");
  const int n = require_n(o.n, kMaxCensusN);
  const long p = require_p(o.p);
  const int max_k = require_bound(o.max_k, "--max-k", kMaxCensusK);
  r.params() = {{"kind", formulas::to_string(kind)}, {"n", n}, {"p", p}, {"max_k", max_k}};
  mpz_class work = 0;
  for (const auto& c : sublattice_counts(GroupFamilyIndex(n).hirsch_length(), p, max_k)) work += c;
  if (work > kMaxCensusLattices) {
    throw UsageError("census would enumerate " + work.get_str() + " lattices (limit " +
                     std::to_string(kMaxCensusLattices) + "); lower --max-k");
  }

  std::ofstream csv;
  if (!o.csv.empty()) {
    csv.open(o.csv);
    if (!csv) throw UsageError("cannot open --csv file '" + o.csv + "'");
  }

  const auto series = series_expand(formulas::zeta_closed_form(kind, GroupFamilyIndex(n)), p, max_k);
  std::vector<oracle::CensusRow> rows;
  Json counts = Json::array();
  Json expected = Json::array();
  for (int k = 0; k <= max_k; ++k) {
    const auto row = oracle::run_census(kind, n, p, k);
    rows.push_back(row);
    const mpq_class& c = series[static_cast<std::size_t>(k)];
    const bool agree = c == mpq_class(static_cast<unsigned long>(row.count));
    counts.push_back(row.count);
    expected.push_back(c.get_str());
    r.check("k=" + std::to_string(k), agree, {{"count", row.count}, {"series", c.get_str()}, {"agreement", agree}},
            "count=" + std::to_string(row.count) + " series=" + c.get_str());
  }
  r.result()["counts"] = counts;
  r.result()["series"] = expected;

  if (csv) oracle::write_census_csv(csv, rows);
}

void suite_funeq(const Options& o, Report& r) {
  std::vector<ZetaKind> kinds{ZetaKind::Subgroup, ZetaKind::Normal, ZetaKind::Hat};
  if (!o.kind.empty()) kinds = {require_kind(o)};
  int lo = 2;
  int hi = 5;
  if (o.n) lo = hi = require_n(o.n, kMaxClosedFormN);
  Json reports = Json::array();
  for (ZetaKind kind : kinds) {
    for (int n = lo; n <= hi; ++n) {
      const auto rep = verify::check_funeq(kind, GroupFamilyIndex(n));
      Json fields = {{"kind", formulas::to_string(kind)},
                     {"n", n},
                     {"holds", rep.holds},
                     {"sign", rep.expected_sign},
                     {"p_exp", rep.expected_p_exponent},
                     {"t_exp", rep.expected_t_exponent}};
      reports.push_back(fields);
      r.check("funeq " + std::string(formulas::to_string(kind)) + " n=" + std::to_string(n), rep.holds, fields,
              "holds=" + std::string(rep.holds ? "true" : "false") + " sign=" + std::to_string(rep.expected_sign) +
                  " p_exp=" + std::to_string(rep.expected_p_exponent) +
                  " t_exp=" + std::to_string(rep.expected_t_exponent));
    }
  }
  r.result()["funeq"] = reports;
}

void suite_lemmas(const Options& o, Report& r) {
  const int max_m = o.n ? require_n(o.n, 6) - 1 : 4;
  for (int m = 1; m <= max_m; ++m) {
    for (const auto& J : combinat::all_flag_types(m)) {
      r.check("inversion lemma m=" + std::to_string(m) + " J=" + J.to_string(), verify::check_lemma1(m, J));
    }
    for (const auto& I : combinat::all_flag_types(m)) {
      r.check("superset lemma m=" + std::to_string(m) + " I=" + I.to_string(), verify::check_lemma2(m, I));
    }
    r.check("W funeq m=" + std::to_string(m), verify::check_W_funeq(m));
  }
  r.result()["max_m"] = max_m;
}

void suite_descent(const Options& o, Report& r) {
  const int max_m = o.n ? require_n(o.n, 6) : 5;
  for (int m = 1; m <= max_m; ++m) {
    for (const auto& I : combinat::all_flag_types(m)) {
      r.check("flag_poly m=" + std::to_string(m) + " I=" + I.to_string(),
              combinat::flag_poly(I) == combinat::flag_poly_via_descents(I));
    }
  }
  for (int m = 1; m < max_m; ++m) {
    r.check("W descent form m=" + std::to_string(m),
            rat_equal(formulas::W_sum_leq(m), formulas::W_sum_leq_descent_form(m)));
  }
  r.result()["max_m"] = max_m;
}

void suite_typesum(const Options& o, Report& r) {
  const int n = o.n ? require_n(o.n, 5) : 3;
  const long p = o.p ? require_p(o.p) : 2;
  const int K = o.K ? require_bound(o.K, "--K", 12) : 4;
  const GroupFamilyIndex index(n);
  const FactoredRationalFunction target =
      formulas::zeta_factor(n, n * (n - 1)) *
      substitute(formulas::W_sum_leq(index.w_rank()), formulas::numerical_data(ZetaKind::Subgroup, index));

  std::vector<std::string> lhs;
  for (const auto& c : oracle::typesum_coefficients(n, p, K)) lhs.push_back(c.get_str());
  const auto rhs = integer_strings(series_expand(target, p, K));
  r.result()["typesum"] = lhs;
  r.result()["target"] = rhs;
  r.check("typesum series n=" + std::to_string(n) + " p=" + std::to_string(p) + " K=" + std::to_string(K), lhs == rhs,
          {}, join(lhs));

  for (const auto& tv : oracle::all_type_vectors(n - 1, 3 * (n - 1))) {
    if (tv.total_r() > 3) continue;
    r.check("Z_Ir " + tv.to_string(),
            rat_equal(oracle::Z_Ir_closed_form(n, tv), oracle::Z_Ir_direct_sum(n, tv)));
  }
  r.check("resummed closed form n=" + std::to_string(n), rat_equal(oracle::typesum_closed_form(n), target));
}

void suite_heisenberg(const Options& o, Report& r) {
  const long p = o.p ? require_p(o.p) : 2;
  const int K = o.K ? require_bound(o.K, "--K", kMaxCensusK) : 4;
  const auto closed = formulas::zeta_closed_form(ZetaKind::Subgroup, GroupFamilyIndex(2));
  r.check("closed form equals product formula", rat_equal(closed, formulas::heisenberg_product_formula()));
  const auto series = series_expand(closed, p, K);
  for (int k = 0; k <= K; ++k) {
    const auto count = oracle::count_subalgebras(2, p, k);
    const mpq_class& c = series[static_cast<std::size_t>(k)];
    r.check("census p=" + std::to_string(p) + " k=" + std::to_string(k), c == mpq_class(static_cast<unsigned long>(count)),
            {{"count", count}, {"series", c.get_str()}}, "count=" + std::to_string(count) + " series=" + c.get_str());
  }
  r.result()["rational"] = closed.to_string();
}

void cmd_verify(const Options& o, Report& r) {
  Json params = {{"suite", o.suite}};
  if (!o.kind.empty()) params["kind"] = o.kind;
  if (o.n) params["n"] = *o.n;
  if (o.p) params["p"] = *o.p;
  if (o.K) params["K"] = *o.K;
  r.params() = params;
  if (o.suite == "funeq") {
    suite_funeq(o, r);
  } else if (o.suite == "lemmas") {
    suite_lemmas(o, r);
  } else if (o.suite == "descent") {
    suite_descent(o, r);
  } else if (o.suite == "typesum") {
    suite_typesum(o, r);
  } else if (o.suite == "heisenberg") {
    suite_heisenberg(o, r);
  } else {
    throw UsageError("--suite must be one of funeq, lemmas, descent, typesum, heisenberg");
  }
}

void cmd_abscissa(const Options& o, Report& r) {
  const ZetaKind kind = require_kind(o);
  const int n = require_n(o.n, kind == ZetaKind::Subgroup ? kMaxAbscissaN : kMaxClosedFormN);
  r.params() = {{"kind", formulas::to_string(kind)}, {"n", n}};
  mpq_class value;
  bool exact = true;
  std::string method = "formula";
  if (kind == ZetaKind::Subgroup) {
    value = formulas::abscissa_leq(GroupFamilyIndex(n));
  } else {
    const auto bound = formulas::abscissa_from_denominator(formulas::zeta_closed_form(kind, GroupFamilyIndex(n)));
    value = bound.value;
    exact = bound.exact;
    method = "denominator";
  }
  r.result() = {{"value", value.get_str()}, {"exact", exact}, {"method", method}};
  r.line(value.get_str() + (exact ? "" : " (largest candidate pole)"));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Local zeta functions of the groups G_n", "nilzeta"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* formula = app.add_subcommand("formula", "Print the closed form as a factored rational function");
  auto* expand = app.add_subcommand("expand", "Print the coefficients of t^0..t^K at a prime p");
  auto* count = app.add_subcommand("count", "Census of subalgebras or ideals, cross-checked against expand");
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  auto* abscissa = app.add_subcommand("abscissa", "Abscissa of convergence");

  for (auto* sub : {formula, expand, count, verify_cmd, abscissa}) {
    sub->add_option("--kind", o.kind, "leq, normal or hat");
    sub->add_option("--n", o.n, "group index, at least 2");
  }
  for (auto* sub : {expand, count, verify_cmd}) sub->add_option("--p", o.p, "prime at most 97");
  for (auto* sub : {expand, verify_cmd}) sub->add_option("--K", o.K, "highest power of t");
  count->add_option("--max-k", o.max_k, "largest index exponent");
  count->add_option("--csv", o.csv, "write the census rows to this file");
  verify_cmd->add_option("--suite", o.suite, "funeq, lemmas, descent, typesum or heisenberg")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "nilzeta: " << e.what() << '\n';
    return kUsageError;
  }

  auto* chosen = app.get_subcommands().front();
  Report report(chosen->get_name());
  try {
    if (chosen == formula) cmd_formula(o, report);
    if (chosen == expand) cmd_expand(o, report);
    if (chosen == count) cmd_count(o, report);
    if (chosen == verify_cmd) cmd_verify(o, report);
    if (chosen == abscissa) cmd_abscissa(o, report);
  } catch (const UsageError& e) {
    err << "nilzeta: " << e.what() << '\n';
    return kUsageError;
  }

  if (chosen == verify_cmd && o.format == "text") {
    report.line(report.ok() ? "all " + std::to_string(report.check_count()) + " checks passed" : "FAILED");
  }
  report.write(out, o.format == "json");
  if (!report.ok()) {
    err << "nilzeta: verification failed at " << report.first_failure() << '\n';
    return kVerificationFailure;
  }
  return kSuccess;
}

}  // namespace nilzeta::cli
