#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "dqc/census.hpp"
#include "dqc/entanglement.hpp"
#include "dqc/hopf_geometry.hpp"
#include "dqc/report_io.hpp"
#include "dqc/verification.hpp"

namespace dqc::cli {

namespace {

const std::vector<std::uint64_t> kTablePrimes = {3, 7, 11, 19, 23, 31};
constexpr unsigned kTableMaxQubits = 4;

// Streams rows as CSV or as a JSON array of string-valued objects.
class RowWriter {
 public:
  RowWriter(std::ostream& os, Format format, std::vector<std::string> columns)
      : os_(os), format_(format), columns_(std::move(columns)) {
    if (format_ == Format::Csv) {
      write_csv_line(columns_);
    } else {
      os_ << '[';
    }
  }

  void row(const std::vector<std::string>& values) {
    if (format_ == Format::Csv) {
      write_csv_line(values);
      return;
    }
    nlohmann::ordered_json obj;
    for (std::size_t k = 0; k < columns_.size(); ++k) obj[columns_[k]] = values[k];
    os_ << (rows_ == 0 ? "\n  " : ",\n  ") << obj.dump();
    ++rows_;
  }

  void finish() {
    if (format_ == Format::Json) os_ << (rows_ == 0 ? "]\n" : "\n]\n");
    os_.flush();
  }

 private:
  void write_csv_line(const std::vector<std::string>& values) {
    for (std::size_t k = 0; k < values.size(); ++k) os_ << (k == 0 ? "" : ",") << values[k];
    os_ << '\n';
  }

  std::ostream& os_;
  Format format_;
  std::vector<std::string> columns_;
  std::size_t rows_ = 0;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw Error(ErrorKind::InvalidArgument, "cannot open output file " + path);
    stream_ = file_.get();
  }

  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct Context {
  RunConfig config;
  std::ostream& out;
  std::ostream& err;

  EnumerationOptions enumeration() const { return {config.budget, config.threads}; }

  ComplexifiablePrime single_prime() const {
    if (config.primes.size() != 1) {
      throw Error(ErrorKind::InvalidArgument, config.command + " needs exactly one --p");
    }
    return ComplexifiablePrime::validate(config.primes.front());
  }

  unsigned single_qubits() const {
    if (config.qubits.size() != 1) {
      throw Error(ErrorKind::InvalidArgument, config.command + " needs exactly one --n");
    }
    return config.qubits.front();
  }
};

void print_closed_form(std::ostream& err, const CountReport& r) {
  fmt::print(err, "closed form p={} D={}: total {}, zero_norm {}, unit_norm {}", r.p, r.dim,
             r.total.str(), r.zero_norm.str(), r.unit_norm.str());
  if (r.irreducible) fmt::print(err, ", irreducible {}", r.irreducible->str());
  err << '\n';
}

int cmd_verify(Context& ctx) {
  if (ctx.config.primes.empty() || ctx.config.qubits.empty()) {
    throw Error(ErrorKind::InvalidArgument, "verify needs --p/--p-list and --n/--n-max");
  }
  VerifyOptions options;
  options.enumeration = ctx.enumeration();
  options.seed = ctx.config.seed;
  std::vector<CountReport> reports;
  for (std::uint64_t p : ctx.config.primes) {
    const ComplexifiablePrime prime = ComplexifiablePrime::validate(p);
    for (unsigned n : ctx.config.qubits) reports.push_back(run_verification(prime, n, options));
  }

  int status = kSuccess;
  for (const CountReport& r : reports) {
    fmt::print(ctx.err, "p={} n={}: unit {} irreducible {} unentangled {} maximal {} -> {}\n", r.p,
               *r.qubits, r.unit_norm.str(), r.irreducible->str(),
               r.unentangled_irreducible->str(),
               r.maxent_irreducible ? r.maxent_irreducible->str() : std::string("n/a"),
               r.verified() ? "verified" : "MISMATCH " + r.first_mismatch());
    for (const std::string& note : r.notes) fmt::print(ctx.err, "  note: {}\n", note);
    if (!r.verified() && status == kSuccess) status = kVerificationMismatch;
  }

  Output output(ctx.config.out, ctx.out);
  if (ctx.config.format == Format::Json) {
    output.get() << (reports.size() == 1 ? counts_json(reports.front()) : counts_json(reports));
  } else {
    RowWriter w(output.get(), Format::Csv,
                {"p", "n", "D", "total", "zero_norm", "unit_norm", "irreducible",
                 "unentangled_irreducible", "maxent_irreducible", "unentangled_unit",
                 "maxent_unit", "verified"});
    auto opt = [](const std::optional<BigInt>& v) { return v ? v->str() : std::string("NA"); };
    for (const CountReport& r : reports) {
      w.row({std::to_string(r.p), std::to_string(*r.qubits), std::to_string(r.dim), r.total.str(),
             r.zero_norm.str(), r.unit_norm.str(), opt(r.irreducible),
             opt(r.unentangled_irreducible), opt(r.maxent_irreducible), opt(r.unentangled_unit),
             opt(r.maxent_unit), r.verified() ? "true" : "false"});
    }
    w.finish();
  }
  return status;
}

int cmd_tables(Context& ctx) {
  std::vector<std::uint64_t> primes = ctx.config.primes.empty() ? kTablePrimes : ctx.config.primes;
  std::vector<unsigned> qubits = ctx.config.qubits;
  if (qubits.empty()) {
    for (unsigned n = 1; n <= kTableMaxQubits; ++n) qubits.push_back(n);
  }
  Output output(ctx.config.out, ctx.out);
  RowWriter w(output.get(), ctx.config.format,
              {"p", "n", "total", "unit_norm", "irreducible", "log10_total", "log10_unit_norm",
               "log10_irreducible"});
  for (std::uint64_t p : primes) {
    const ComplexifiablePrime prime = ComplexifiablePrime::validate(p);
    for (unsigned n : qubits) {
      const CountReport r = closed_form_qubits(prime, n);
      const std::string total = r.total.str();
      const std::string unit = r.unit_norm.str();
      const std::string irr = r.irreducible->str();
      w.row({std::to_string(p), std::to_string(n), total, unit, irr,
             fmt::format("{:.3f}", log10_decimal(total)), fmt::format("{:.3f}", log10_decimal(unit)),
             fmt::format("{:.3f}", log10_decimal(irr))});
    }
  }
  w.finish();
  return kSuccess;
}

int cmd_bloch(Context& ctx) {
  if (ctx.config.primes.empty()) throw Error(ErrorKind::InvalidArgument, "bloch needs --p");
  Output output(ctx.config.out, ctx.out);
  RowWriter w(output.get(), ctx.config.format,
              {"p", "X", "Y", "Z", "ex", "ey", "ez", "degenerate_flag"});
  for (std::uint64_t p : ctx.config.primes) {
    const ComplexifiablePrime prime = ComplexifiablePrime::validate(p);
    const std::vector<BlochPoint> points = bloch_export(prime);
    for (const BlochPoint& pt : points) {
      w.row({std::to_string(p), std::to_string(pt.x.value()), std::to_string(pt.y.value()),
             std::to_string(pt.z.value()), fmt::format("{:.9g}", pt.ex),
             fmt::format("{:.9g}", pt.ey), fmt::format("{:.9g}", pt.ez),
             pt.degenerate ? "1" : "0"});
    }
    fmt::print(ctx.err, "p={}: {} Bloch points\n", p, points.size());
  }
  w.finish();
  return kSuccess;
}

class RowSink : public StateSink {
 public:
  RowSink(RowWriter& writer, std::string prefix_p, std::string prefix_n, std::string label)
      : writer_(writer), p_(std::move(prefix_p)), n_(std::move(prefix_n)), label_(std::move(label)) {}

  void accept(std::span<const GFc> state) override {
    writer_.row({p_, n_, label_, format_amplitudes(state)});
  }

 private:
  RowWriter& writer_;
  std::string p_;
  std::string n_;
  std::string label_;
};

int cmd_enumerate(Context& ctx) {
  const ComplexifiablePrime prime = ctx.single_prime();
  const unsigned n = ctx.single_qubits();
  const std::string& cls = ctx.config.norm_class;
  const ComplexField field(prime);
  const CountReport closed = closed_form_qubits(prime, n);
  check_enumeration_budget(field, closed.dim, ctx.enumeration());

  Output output(ctx.config.out, ctx.out);
  RowWriter w(output.get(), ctx.config.format, {"p", "n", "norm_class", "amplitudes"});
  RowSink sink(w, std::to_string(prime.p()), std::to_string(n), cls);
  BigInt count;
  BigInt expected;
  if (cls == "irreducible") {
    count = enumerate_irreducible(field, n, &sink, ctx.enumeration());
    expected = *closed.irreducible;
  } else {
    const Fp target = cls == "zero" ? prime.zero() : prime.one();
    count = enumerate_norm_class(field, closed.dim, target, sink, ctx.enumeration());
    expected = cls == "zero" ? closed.zero_norm : closed.unit_norm;
  }
  w.finish();
  fmt::print(ctx.err, "p={} n={} class={}: {} states (closed form {})\n", prime.p(), n, cls,
             count.str(), expected.str());
  return count == expected ? kSuccess : kVerificationMismatch;
}

class ClassifySink : public StateSink {
 public:
  ClassifySink(RowWriter& writer, ComplexField field, unsigned qubits)
      : writer_(writer), field_(std::move(field)), qubits_(qubits) {}

  void accept(std::span<const GFc> state) override {
    const EntanglementClass c = classify_amplitudes(field_, state, qubits_);
    ++histogram[c.kind];
    if (c.all_expectations_zero) ++all_zero;
    writer_.row({std::to_string(field_.p()), std::to_string(qubits_), format_amplitudes(state),
                 std::string(to_string(c.kind)), std::to_string(c.purity.sum_sq.value()),
                 c.purity.reduced ? std::to_string(c.purity.reduced->value()) : "NA",
                 c.separable.to_string()});
  }

  std::map<Entanglement, BigInt> histogram{{Entanglement::Unentangled, 0},
                                           {Entanglement::Partial, 0},
                                           {Entanglement::Maximal, 0}};
  BigInt all_zero = 0;

 private:
  RowWriter& writer_;
  ComplexField field_;
  unsigned qubits_;
};

int cmd_classify(Context& ctx) {
  const ComplexifiablePrime prime = ctx.single_prime();
  const unsigned n = ctx.single_qubits();
  const ComplexField field(prime);
  check_enumeration_budget(field, std::uint64_t{1} << n, ctx.enumeration());
  Output output(ctx.config.out, ctx.out);
  RowWriter w(output.get(), ctx.config.format,
              {"p", "n", "state", "class", "sum_sq", "reduced_purity", "separable_mask"});
  ClassifySink sink(w, field, n);
  const BigInt total = enumerate_irreducible(field, n, &sink, ctx.enumeration());
  w.finish();
  fmt::print(ctx.err, "p={} n={}: {} irreducible states; Unentangled: {}, Partial: {}, Maximal: {}\n",
             prime.p(), n, total.str(), sink.histogram[Entanglement::Unentangled].str(),
             sink.histogram[Entanglement::Partial].str(),
             sink.histogram[Entanglement::Maximal].str());
  fmt::print(ctx.err, "all Pauli expectations zero: {}\n", sink.all_zero.str());
  if (sink.histogram[Entanglement::Unentangled] != 0) {
    fmt::print(ctx.err, "Maximal/Unentangled = {}\n",
               format_rational(BigRational(sink.histogram[Entanglement::Maximal],
                                           sink.histogram[Entanglement::Unentangled])));
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact state census over complexified Galois fields F_{p^2}", "dqc"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  config.budget = kDefaultBudget;
  std::optional<std::uint64_t> p;
  std::vector<std::uint64_t> p_list;
  std::optional<unsigned> n;
  std::optional<unsigned> n_max;
  std::string format = "csv";

  app.add_option("--p", p, "Complexifiable prime (p = 3 mod 4)");
  app.add_option("--p-list", p_list, "Several primes")->delimiter(',');
  app.add_option("--n", n, "Qubit count")->check(CLI::Range(1u, 16u));
  app.add_option("--n-max", n_max, "Use every qubit count 1..n-max")->check(CLI::Range(1u, 16u));
  app.add_option("--class", config.norm_class, "enumerate: unit, zero or irreducible")
      ->check(CLI::IsMember({"unit", "zero", "irreducible"}));
  app.add_option("--budget", config.budget, "Max prefixes (or full-scan vectors) to enumerate")
      ->envname("DQC_BUDGET")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", config.threads, "Worker threads (0 = all cores)");
  auto* format_opt =
      app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", config.out, "Output path (default stdout)");
  app.add_option("--seed", config.seed, "Seed for sampled spot checks");

  app.add_subcommand("verify", "Cross-check closed forms against enumeration (counts.json)");
  app.add_subcommand("tables", "Closed-form total/unit/irreducible counts with log10 columns");
  app.add_subcommand("bloch", "Discrete Bloch sphere points (bloch.csv)");
  app.add_subcommand("enumerate", "List states of one norm class (states.csv)");
  app.add_subcommand("classify", "Entanglement class of every irreducible state (classify.csv)");

  std::vector<std::string> argv_store = args;
  std::vector<char*> argv;
  static char program[] = "dqc";
  argv.push_back(program);
  for (std::string& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (p) config.primes.push_back(*p);
  config.primes.insert(config.primes.end(), p_list.begin(), p_list.end());
  std::set<unsigned> qubit_set;
  if (n) qubit_set.insert(*n);
  for (unsigned k = 1; n_max && k <= *n_max; ++k) qubit_set.insert(k);
  config.qubits.assign(qubit_set.begin(), qubit_set.end());
  if (config.command == "verify" && format_opt->count() == 0) format = "json";
  config.format = format == "json" ? Format::Json : Format::Csv;

  Context ctx{config, out, err};
  try {
    for (std::uint64_t prime : config.primes) ComplexifiablePrime::validate(prime);
    if (config.command == "verify") return cmd_verify(ctx);
    if (config.command == "tables") return cmd_tables(ctx);
    if (config.command == "bloch") return cmd_bloch(ctx);
    if (config.command == "enumerate") return cmd_enumerate(ctx);
    return cmd_classify(ctx);
  } catch (const BudgetExceeded& e) {
    err << "BudgetExceeded: " << e.what() << '\n';
    print_closed_form(err, e.report());
    return kBudgetExceeded;
  } catch (const VerificationFailed& e) {
    err << "verification failed: " << e.field() << '\n';
    return kVerificationMismatch;
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace dqc::cli
