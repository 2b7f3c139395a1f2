#include "sumprod/cli.hpp"

#include "sumprod/arith.hpp"
#include "sumprod/energy.hpp"
#include "sumprod/exactset.hpp"
#include "sumprod/extremal.hpp"
#include "sumprod/progressions.hpp"
#include "sumprod/setio.hpp"
#include "sumprod/theorems.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <mpfr.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace sumprod::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Context {
  Context(std::ostream& o, std::ostream& e) : out(o), err(e) {}

  std::ostream& out;
  std::ostream& err;
  Limits limits;
  unsigned threads = 1;
  bool assert_mode = false;
  std::string report_path;
  json report = json::object();
  bool any_failed = false;
};

json set_json(const FinSet& s) {
  json arr = json::array();
  for (const Rat& x : s) arr.push_back(to_string(x));
  return arr;
}

std::string bound_string(const mpfr_t& x, bool upper) {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, upper ? "%.30RUg" : "%.30RDg", x);
  std::string s(buffer);
  mpfr_free_str(buffer);
  return s;
}

json value_json(const Value& v) {
  json j;
  if (const auto* i = std::get_if<BigInt>(&v)) {
    j["kind"] = "integer";
    j["num"] = i->str();
    j["den"] = "1";
  } else if (const auto* q = std::get_if<Rat>(&v)) {
    j["kind"] = "rational";
    j["num"] = numerator_of(*q).str();
    j["den"] = denominator_of(*q).str();
  } else {
    const Interval& x = std::get<Interval>(v);
    j["kind"] = "real";
    j["approx"] = x.approx();
    j["lower"] = bound_string(x.lo(), false);
    j["upper"] = bound_string(x.hi(), true);
  }
  return j;
}

json verdict_json(const Verdict& v) {
  json j;
  j["name"] = v.name;
  j["status"] = to_string(v.status);
  j["hypothesis_met"] = v.hypothesis_met;
  j["informational"] = v.informational;
  j["relation"] = to_string(v.relation);
  j["lhs"] = value_json(v.lhs);
  j["rhs"] = value_json(v.rhs);
  json w = json::object();
  for (const auto& [key, value] : v.witness) w[key] = value;
  j["witness"] = w;
  return j;
}

FinSet load_set(Context& ctx, const std::string& path) {
  if (path.empty()) throw UsageError("a set file is required (use --set PATH or - for stdin)");
  ParsedSet parsed = read_set_file(path);
  if (parsed.duplicates > 0)
    ctx.err << "warning: " << parsed.duplicates << " duplicate element(s) dropped from " << path << "\n";
  return std::move(parsed.set);
}

Rat parse_rat_option(const std::string& text, const char* name) {
  try {
    return parse_rat(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

std::optional<Rat> optional_rat(const std::string& text, const char* name) {
  if (text.empty()) return std::nullopt;
  return parse_rat_option(text, name);
}

void emit_set(Context& ctx, const std::string& header, const FinSet& s) {
  ctx.out << "# " << header << ": size " << s.size() << "\n" << format_set(s);
  ctx.report["size"] = s.size();
  ctx.report["elements"] = set_json(s);
}

void emit_verdicts(Context& ctx, const std::vector<Verdict>& verdicts) {
  std::map<std::string, std::size_t> counts;
  json arr = json::array();
  for (const Verdict& v : verdicts) {
    ctx.out << format_line(v) << "\n";
    ++counts[to_string(v.status)];
    if (v.failed()) ctx.any_failed = true;
    arr.push_back(verdict_json(v));
  }
  ctx.out << "# " << verdicts.size() << " verdict(s):";
  for (const auto& [status, n] : counts) ctx.out << " " << status << "=" << n;
  ctx.out << "\n";
  ctx.report["verdicts"] = arr;
}

WeightVector load_weights(const std::string& path, const FinSet& a) {
  WeightVector d;
  for (const auto& [line, tokens] : tokenized_lines(read_text(path))) {
    if (tokens.size() != 1)
      throw ParseError("weights line " + std::to_string(line) + ": expected one value per line");
    d.push_back(parse_rat(tokens[0]));
  }
  check_weights(a, d);
  return d;
}

std::vector<BigInt> parse_primes(const std::string& text) {
  std::vector<BigInt> primes;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    const Rat p = parse_rat_option(token, "primes");
    if (!is_integer(p)) throw UsageError("--primes: '" + token + "' is not an integer");
    primes.push_back(numerator_of(p));
  }
  if (primes.empty()) throw UsageError("--primes needs a comma-separated list such as 2,3");
  return primes;
}

PairGraph load_graph(const FinSet& a, const std::string& path, bool full, bool diagonal) {
  if (static_cast<int>(full) + static_cast<int>(diagonal) + static_cast<int>(!path.empty()) != 1)
    throw UsageError("give exactly one of --graph PATH, --full or --diagonal");
  if (full) return PairGraph::full(a);
  if (diagonal) return PairGraph::diagonal(a);
  return PairGraph::from_elements(a, parse_pairs(read_text(path)));
}

const std::vector<std::string> kSuites = {"theorem1", "lemma3", "prop9",    "prop10", "prop11",   "prop13", "ruzsa",
                                          "intro",    "theorem3", "section3", "layers", "tail", "prop14", "dimchain"};

struct Options {
  std::string set;
  std::string set2;
  std::string op = "sum";
  unsigned h = 2;
  unsigned l = 1;
  std::string alpha;
  std::string rho;
  std::string graph;
  bool full = false;
  bool diagonal = false;
  std::string weights;
  std::string path = "convolve";
  std::string primes;
  std::string p;
  long j = 0;
  std::string k;
  std::string eps1;
  std::optional<std::size_t> m;
  std::string progression;
  std::string contains;
  bool enumerate = false;
  unsigned J = 2;
  std::string eps3 = "1/10";
  std::string suite;
  std::string objective = "f";
  unsigned search_k = 3;
  long max = 20;
  std::string checkpoint;
  bool assert_oracle = false;
};

BigInt parse_big(const std::string& text, const char* name) {
  const Rat q = parse_rat_option(text, name);
  if (!is_integer(q)) throw UsageError(std::string("--") + name + " must be an integer");
  return numerator_of(q);
}

std::vector<Verdict> run_suite(Context& ctx, const Options& o) {
  const Limits& lim = ctx.limits;
  const std::string& s = o.suite;
  if (s == "section3") return verify_section3(o.J, parse_rat_option(o.eps3, "eps3"), lim);
  if (s == "prop14") {
    if (o.k.empty() || o.eps1.empty()) throw UsageError("prop14 needs --k and --eps1");
    std::optional<FinSet> b;
    if (!o.set.empty()) b = load_set(ctx, o.set);
    return prop14_diagnostic(parse_big(o.k, "k"), parse_rat_option(o.eps1, "eps1"), o.m, b, lim);
  }
  if (s == "dimchain") {
    if (o.progression.empty()) throw UsageError("dimchain needs --progression PATH");
    const ProgressionDesc p = read_progression_file(o.progression);
    return {dim_chain_check(p, load_set(ctx, o.set), lim)};
  }
  const FinSet a = load_set(ctx, o.set);
  if (s == "theorem1") return verify_theorem1(a, o.h, optional_rat(o.alpha, "alpha"), lim);
  if (s == "lemma3") return {verify_lemma3(a, o.h, lim)};
  if (s == "prop10") return {verify_prop10(a, o.h, lim)};
  if (s == "prop9") {
    if (o.weights.empty()) throw UsageError("prop9 needs --weights PATH");
    return {verify_prop9(a, load_weights(o.weights, a), o.h, lim)};
  }
  if (s == "prop11") return {verify_prop11(a, optional_rat(o.alpha, "alpha"), lim)};
  if (s == "prop13") return {verify_prop13(a, o.h, lim)};
  if (s == "ruzsa") {
    if (o.set2.empty()) throw UsageError("ruzsa needs --set (M) and --set2 (N)");
    return {verify_ruzsa(a, load_set(ctx, o.set2), o.h, o.l, optional_rat(o.rho, "rho"), lim)};
  }
  if (s == "intro") return verify_intro_suite(a, lim);
  if (s == "theorem3") return {verify_theorem3_chain(a, load_graph(a, o.graph, o.full, o.diagonal), lim)};
  if (s == "layers") return {layer_inequality_check(a, parse_primes(o.primes), o.h, lim)};
  if (s == "tail") {
    if (o.p.empty()) throw UsageError("tail needs --p");
    return {tail_monotonicity_check(a, parse_big(o.p, "p"), o.j, o.h, lim)};
  }
  throw UsageError("unknown suite " + s);
}

void cmd_search(Context& ctx, const Options& o) {
  const Objective objective = parse_objective(o.objective);
  SearchOptions options;
  options.threads = ctx.threads;
  options.checkpoint = o.checkpoint;
  const SearchResult r = search_min(objective, o.search_k, o.max, options, ctx.limits);
  ctx.out << "# search " << to_string(objective) << " k=" << r.k << ": minimum over subsets of [1, " << r.universe
          << "] only\n";
  ctx.out << "minimum " << r.minimum << "\n";
  ctx.out << "complete " << (r.complete ? "true" : "false") << "\n";
  ctx.out << "nodes " << r.nodes << "\n";
  json certs = json::array();
  for (const auto& c : r.certificates) {
    ctx.out << "certificate";
    json one = json::array();
    for (long x : c) {
      ctx.out << " " << x;
      one.push_back(x);
    }
    ctx.out << "\n";
    certs.push_back(one);
  }
  ctx.report["objective"] = to_string(objective);
  ctx.report["k"] = r.k;
  ctx.report["max"] = r.universe;
  ctx.report["minimum"] = r.minimum.str();
  ctx.report["complete"] = r.complete;
  ctx.report["nodes"] = r.nodes;
  ctx.report["certificates"] = certs;
  if (!r.complete) {
    ctx.err << "warning: node budget exhausted; the minimum covers subtrees with first element below "
            << r.next_first << " and is not claimed optimal\n";
    ctx.any_failed = true;
  }
  if (o.assert_oracle) {
    const SearchResult plain = search_min_plain(objective, o.search_k, o.max, ctx.limits);
    const bool agrees = r.complete && plain.minimum == r.minimum && plain.certificates == r.certificates;
    ctx.out << "oracle minimum " << plain.minimum << " certificates " << plain.certificates.size() << " agrees "
            << (agrees ? "true" : "false") << "\n";
    ctx.report["oracle"] = {{"minimum", plain.minimum.str()},
                            {"certificates", plain.certificates.size()},
                            {"agrees", agrees}};
    if (!agrees) ctx.any_failed = true;
  }
}

void cmd_energy(Context& ctx, const Options& o) {
  const FinSet a = load_set(ctx, o.set);
  ctx.report["h"] = o.h;
  ctx.report["path"] = o.path;
  if (o.path == "quadrature") {
    const WeightVector d = o.weights.empty() ? WeightVector(a.size(), Rat(1)) : load_weights(o.weights, a);
    std::ostringstream v;
    v.precision(17);
    v << quadrature_energy(a, d, o.h);
    ctx.out << "energy ~" << v.str() << "\n";
    ctx.report["energy"] = {{"kind", "real"}, {"approx", v.str()}};
    return;
  }
  const EnergyPath path = o.path == "enumerate" ? EnergyPath::enumerate : EnergyPath::convolve;
  if (!o.weights.empty()) {
    if (path == EnergyPath::enumerate) throw UsageError("weighted energy has no enumerate path");
    const Rat e = weighted_energy(a, load_weights(o.weights, a), o.h, ctx.limits);
    ctx.out << "energy " << to_string(e) << "\n";
    ctx.report["energy"] = value_json(e);
    return;
  }
  const BigInt e = energy(a, o.h, path, ctx.limits);
  ctx.out << "energy " << e << "\n";
  ctx.report["energy"] = value_json(e);
}

void cmd_progression(Context& ctx, const Options& o) {
  if (o.progression.empty()) throw UsageError("progression needs a descriptor file");
  const ProgressionDesc p = read_progression_file(o.progression);
  const std::size_t dim = progression_dimension(p, ctx.limits);
  ctx.out << "dimension " << dim << "\n";
  ctx.out << "volume " << p.volume() << "\n";
  ctx.report["dimension"] = dim;
  ctx.report["volume"] = p.volume().str();
  const bool proper = is_proper(p, ctx.limits);
  ctx.out << "proper " << (proper ? "true" : "false") << "\n";
  ctx.report["proper"] = proper;
  if (!o.contains.empty()) {
    const FinSet a = load_set(ctx, o.contains);
    const Containment c = contains(p, a, ctx.limits);
    ctx.out << "contained " << (c.contained ? "true" : "false") << "\n";
    json tuples = json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
      ctx.out << "# " << to_string(a[i]) << " ->";
      json t = nullptr;
      if (c.tuples[i]) {
        t = json::array();
        for (auto e : *c.tuples[i]) {
          ctx.out << " " << e;
          t.push_back(e);
        }
      } else {
        ctx.out << " none";
      }
      ctx.out << "\n";
      tuples.push_back(t);
    }
    ctx.report["contained"] = c.contained;
    ctx.report["tuples"] = tuples;
  }
  if (o.enumerate) emit_set(ctx, "progression elements", enumerate_progression(p, ctx.limits));
}

void write_report(const Context& ctx) {
  std::ofstream f(ctx.report_path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write report " + ctx.report_path);
  f << ctx.report.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sumset, product-set and energy toolkit with checkable inequality verdicts", "sumprod"};
  // --h is the order parameter, so help is long-form only
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx{out, err};
  std::optional<std::uint64_t> budget;
  app.add_flag("--assert", ctx.assert_mode, "Exit 2 when a verdict is false or inconclusive");
  app.add_option("--report", ctx.report_path, "Write a JSON report to this path");
  app.add_option("--budget", budget, "Override the size, enumeration and node caps");
  app.add_option("--threads", ctx.threads, "Worker threads for search")->check(CLI::Range(1u, 1024u));

  Options o;
  std::map<CLI::App*, std::function<void()>> handlers;
  auto set_opt = [&](CLI::App* sub) { sub->add_option("set,--set", o.set, "Set file, - for stdin"); };
  auto op_opt = [&](CLI::App* sub) {
    sub->add_option("--op", o.op, "sum or product")->check(CLI::IsMember({"sum", "product"}));
  };

  CLI::App* combine_cmd = app.add_subcommand("combine", "A + B or A * B");
  set_opt(combine_cmd);
  combine_cmd->add_option("--set2", o.set2, "Second set file")->required();
  op_opt(combine_cmd);
  handlers[combine_cmd] = [&] {
    const Op op = parse_op(o.op);
    emit_set(ctx, std::string("combine ") + to_string(op),
             combine(load_set(ctx, o.set), load_set(ctx, o.set2), op, ctx.limits));
  };

  CLI::App* iterate_cmd = app.add_subcommand("iterate", "hA or A^h");
  set_opt(iterate_cmd);
  iterate_cmd->add_option("--h", o.h)->check(CLI::PositiveNumber);
  op_opt(iterate_cmd);
  handlers[iterate_cmd] = [&] {
    const Op op = parse_op(o.op);
    emit_set(ctx, "iterate " + std::string(to_string(op)) + " h=" + std::to_string(o.h),
             iterate(load_set(ctx, o.set), o.h, op, ctx.limits));
  };

  CLI::App* simple_cmd = app.add_subcommand("simple", "Simple sums A[1] or simple products A{1}");
  set_opt(simple_cmd);
  op_opt(simple_cmd);
  handlers[simple_cmd] = [&] {
    const Op op = parse_op(o.op);
    emit_set(ctx, std::string("simple ") + to_string(op), simple_closure(load_set(ctx, o.set), op, ctx.limits));
  };

  CLI::App* box_cmd = app.add_subcommand("boxsum", "h-fold box sum of A");
  set_opt(box_cmd);
  box_cmd->add_option("--h", o.h)->check(CLI::PositiveNumber);
  handlers[box_cmd] = [&] {
    emit_set(ctx, "boxsum h=" + std::to_string(o.h), box_sum(load_set(ctx, o.set), o.h, ctx.limits));
  };

  CLI::App* sumdiff_cmd = app.add_subcommand("sumdiff", "hN - lN");
  set_opt(sumdiff_cmd);
  sumdiff_cmd->add_option("--h", o.h);
  sumdiff_cmd->add_option("--l", o.l);
  handlers[sumdiff_cmd] = [&] {
    emit_set(ctx, "sumdiff h=" + std::to_string(o.h) + " l=" + std::to_string(o.l),
             sum_diff(load_set(ctx, o.set), o.h, o.l, ctx.limits));
  };

  CLI::App* restricted_cmd = app.add_subcommand("restricted", "Sums or products along a graph of pairs");
  set_opt(restricted_cmd);
  restricted_cmd->add_option("--graph", o.graph, "File of element pairs, one pair per line");
  restricted_cmd->add_flag("--full", o.full, "Use every pair");
  restricted_cmd->add_flag("--diagonal", o.diagonal, "Use the pairs (a, a)");
  op_opt(restricted_cmd);
  handlers[restricted_cmd] = [&] {
    const FinSet a = load_set(ctx, o.set);
    const PairGraph g = load_graph(a, o.graph, o.full, o.diagonal);
    const Op op = parse_op(o.op);
    ctx.report["edges"] = g.size();
    emit_set(ctx, std::string("restricted ") + to_string(op) + " edges=" + std::to_string(g.size()),
             restricted_combine(a, g, op));
  };

  CLI::App* energy_cmd = app.add_subcommand("energy", "Additive energy of order h");
  set_opt(energy_cmd);
  energy_cmd->add_option("--h", o.h)->check(CLI::PositiveNumber);
  energy_cmd->add_option("--path", o.path)->check(CLI::IsMember({"enumerate", "convolve", "quadrature"}));
  energy_cmd->add_option("--weights", o.weights, "One weight per element, in ascending element order");
  handlers[energy_cmd] = [&] { cmd_energy(ctx, o); };

  CLI::App* multdim_cmd = app.add_subcommand("multdim", "Multiplicative dimension");
  set_opt(multdim_cmd);
  handlers[multdim_cmd] = [&] {
    const MultDim d = mult_dim(load_set(ctx, o.set), ctx.limits);
    ctx.out << "dimension " << d.dimension << "\n";
    ctx.report["dimension"] = d.dimension;
  };

  CLI::App* prog_cmd = app.add_subcommand("progression", "Inspect a multiplicative progression");
  prog_cmd->add_option("file,--file", o.progression, "Progression descriptor, - for stdin");
  prog_cmd->add_option("--contains", o.contains, "Report whether this set lies in the progression");
  prog_cmd->add_flag("--enumerate", o.enumerate, "Print the elements");
  handlers[prog_cmd] = [&] { cmd_progression(ctx, o); };

  CLI::App* verify_cmd = app.add_subcommand("verify", "Evaluate a named inequality suite");
  verify_cmd->add_option("suite", o.suite)->required()->check(CLI::IsMember(kSuites));
  verify_cmd->add_option("--set", o.set, "Set file (M for ruzsa, B for prop13 and prop14)");
  verify_cmd->add_option("--set2", o.set2, "Second set file (N for ruzsa)");
  verify_cmd->add_option("--h", o.h, "Order h (h1 for prop13)")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--l", o.l);
  verify_cmd->add_option("--alpha", o.alpha, "Override alpha (rational)");
  verify_cmd->add_option("--rho", o.rho, "Override rho (rational)");
  verify_cmd->add_option("--graph", o.graph, "File of element pairs");
  verify_cmd->add_flag("--full", o.full);
  verify_cmd->add_flag("--diagonal", o.diagonal);
  verify_cmd->add_option("--weights", o.weights);
  verify_cmd->add_option("--primes", o.primes, "Comma-separated primes for layers");
  verify_cmd->add_option("--p", o.p, "Prime for tail");
  verify_cmd->add_option("--j", o.j, "Valuation threshold for tail");
  verify_cmd->add_option("--k", o.k, "k for prop14");
  verify_cmd->add_option("--eps1", o.eps1, "eps1 for prop14");
  verify_cmd->add_option("--m", o.m, "Dimension m for prop14");
  verify_cmd->add_option("--progression", o.progression, "Progression descriptor for dimchain");
  verify_cmd->add_option("--J", o.J, "Grid size for section3")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--eps3", o.eps3, "eps3 for section3");
  handlers[verify_cmd] = [&] {
    ctx.report["suite"] = o.suite;
    emit_verdicts(ctx, run_suite(ctx, o));
  };

  CLI::App* example_cmd = app.add_subcommand("example", "The prime-grid extremal example for J");
  example_cmd->add_option("--J", o.J)->check(CLI::PositiveNumber);
  handlers[example_cmd] = [&] {
    ctx.report["J"] = o.J;
    emit_set(ctx, "example J=" + std::to_string(o.J), es_example(o.J, ctx.limits));
  };

  CLI::App* section3_cmd = app.add_subcommand("section3", "Bounds on the prime-grid example at one J");
  section3_cmd->add_option("--J", o.J)->check(CLI::PositiveNumber);
  section3_cmd->add_option("--eps3", o.eps3);
  handlers[section3_cmd] = [&] {
    o.suite = "section3";
    ctx.report["suite"] = o.suite;
    emit_verdicts(ctx, run_suite(ctx, o));
  };

  CLI::App* search_cmd = app.add_subcommand("search", "Exhaustive minimum of f or g over k-subsets of [1, max]");
  search_cmd->add_option("--objective", o.objective)->check(CLI::IsMember({"f", "g"}));
  search_cmd->add_option("--k", o.search_k)->check(CLI::PositiveNumber);
  search_cmd->add_option("--max", o.max)->check(CLI::PositiveNumber);
  search_cmd->add_option("--checkpoint", o.checkpoint, "Save and resume progress in this file");
  search_cmd->add_flag("--assert-oracle", o.assert_oracle, "Compare with a plain loop over all subsets");
  handlers[search_cmd] = [&] { cmd_search(ctx, o); };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    ctx.limits = budget ? default_limits().with_budget(*budget) : default_limits();
    CLI::App* sub = app.get_subcommands().front();
    ctx.report["command"] = sub->get_name();
    handlers.at(sub)();
    if (!ctx.report_path.empty()) write_report(ctx);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return cap_exceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  if (ctx.assert_mode && ctx.any_failed) return assertion_failed;
  if (o.assert_oracle && ctx.any_failed) return assertion_failed;
  return ok;
}

}  // namespace sumprod::cli
