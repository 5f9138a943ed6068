#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dupdist/approx_engine.hpp"
#include "dupdist/binary_seq.hpp"
#include "dupdist/bounds.hpp"
#include "dupdist/errors.hpp"
#include "dupdist/exact_engine.hpp"
#include "dupdist/generators.hpp"
#include "dupdist/seqcore.hpp"
#include "dupdist/serialization.hpp"

namespace dupdist::cli {
namespace {

std::string format_ratio(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", r);
  return buf;
}

unsigned workers() { return default_worker_count(); }

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open " + path + " for writing");
  f << text;
}

std::string read_text(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void warn_big(int max_n, std::ostream& err) {
  if (max_n >= kBigMemoryFrom) {
    err << "warning: max_n=" << max_n << " needs about "
        << ((std::uint64_t{1} << max_n) >> 20) << " MiB per level; this is a big-memory run\n";
  }
}

SearchConfig table_config(int max_n, const std::string& cache) {
  SearchConfig cfg;
  cfg.max_n = max_n;
  cfg.worker_count = workers();
  if (!cache.empty()) cfg.cache_path = cache;
  return cfg;
}

// ---- subcommands ----

struct DistanceArgs {
  std::string seq;
  std::optional<double> beta;
  std::string emit;
  std::string cache;
};

int cmd_distance(const DistanceArgs& a, std::ostream& out, std::ostream& err) {
  const BinarySeq s = BinarySeq::from_string(a.seq);
  if (s.empty()) throw InvalidInput("empty sequence");

  if (a.beta && *a.beta != 0.0) {
    if (s.size() > static_cast<std::size_t>(kBetaDistanceCap)) {
      throw CapExceeded("beta distance supports length <= " + std::to_string(kBetaDistanceCap));
    }
    const MismatchRule rule = MismatchRule::linear(*a.beta);
    const DedupProcess p = optimal_rule_process(s, rule);
    out << "f_beta=" << p.length() << "\n";
    if (!a.emit.empty()) write_text(a.emit, process_to_json(p, 2) + "\n", out);
    return kOk;
  }

  if (s.size() > static_cast<std::size_t>(kDistanceCap)) {
    throw CapExceeded("distance supports length <= " + std::to_string(kDistanceCap));
  }
  DedupProcess p;
  if (s.size() <= DistanceOracle::kDefaultCap) {
    DistanceOracle oracle;
    p = oracle.optimal_process(s);
  } else {
    std::string warning;
    const DistanceTable t =
        load_or_build_table(table_config(static_cast<int>(s.size()), a.cache), &warning);
    if (!warning.empty()) err << "warning: " << warning << "\n";
    p = witness_process(t, s);
  }
  out << (a.beta ? "f_beta=" : "f=") << p.length();
  if (!a.beta) out << " root=" << p.final_seq.to_string();
  out << "\n";
  if (!a.emit.empty()) write_text(a.emit, process_to_json(p, 2) + "\n", out);
  return kOk;
}

struct TableArgs {
  int max_n = 20;
  std::string sigma;
  std::string cache;
};

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  if (a.max_n < 3 || a.max_n > DistanceTable::kMaxLength) {
    throw CapExceeded("max-n must lie in 3..32");
  }
  std::optional<Root> single;
  const bool all = a.sigma == "all";
  if (!a.sigma.empty() && !all) single = Root::parse(a.sigma);
  warn_big(a.max_n, err);

  std::string warning;
  const DistanceTable t = load_or_build_table(table_config(a.max_n, a.cache), &warning);
  if (!warning.empty()) err << "warning: " << warning << "\n";

  auto cell = [&](int n, const Root& r) {
    const auto v = f_sigma_n(t, n, r);
    return v ? std::to_string(*v) : std::string{};
  };

  if (all) {
    out << "n,f0,f1,f01,f10,f010,f101,f\n";
    for (int n = 1; n <= a.max_n; ++n) {
      out << n;
      for (const Root& r : Root::all()) out << "," << cell(n, r);
      out << "," << f_n(t, n) << "\n";
    }
  } else {
    out << "n,f\n";
    for (int n = 1; n <= a.max_n; ++n) {
      out << n << "," << (single ? cell(n, *single) : std::to_string(f_n(t, n))) << "\n";
    }
  }
  return kOk;
}

int cmd_fnm(int max_n, std::ostream& out, std::ostream& err) {
  if (max_n < 4 || max_n > DistanceTable::kMaxLength) throw CapExceeded("max-n must lie in 4..32");
  warn_big(max_n, err);
  SearchConfig cfg;
  cfg.max_n = max_n;
  cfg.worker_count = workers();
  const FnmGrid grid = compute_fnm_grid(cfg);

  out << "n,m,f,ratio\n";
  double best = std::numeric_limits<double>::infinity();
  int best_n = 0, best_m = 0;
  for (int n = 4; n <= max_n; ++n) {
    for (int m = 3; m < n; ++m) {
      const unsigned f = grid.at(n, m);
      const double ratio = static_cast<double>(f) / (n - m);
      out << n << "," << m << "," << f << "," << format_ratio(ratio) << "\n";
      if (ratio < best) {
        best = ratio;
        best_n = n;
        best_m = m;
      }
    }
  }
  err << "min ratio " << format_ratio(best) << " at n=" << best_n << " m=" << best_m << "\n";
  return kOk;
}

LSystem parse_rules(const std::string& rules) {
  // "axiom,image0,image1"
  std::vector<std::string> parts;
  std::stringstream ss(rules);
  for (std::string p; std::getline(ss, p, ',');) parts.push_back(p);
  if (parts.size() != 3) throw InvalidInput("rules must be axiom,image0,image1");
  LSystem sys{BinarySeq::from_string(parts[0]), BinarySeq::from_string(parts[1]),
              BinarySeq::from_string(parts[2])};
  sys.validate();
  return sys;
}

struct GenerateArgs {
  std::string kind;
  std::size_t order = 0;
  std::string rules;
  std::string output;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  BinarySeq s;
  if (a.kind == "debruijn") {
    s = de_bruijn(a.order);
  } else if (a.kind == "thue-morse") {
    s = thue_morse(a.order);
  } else if (a.kind == "fibonacci") {
    s = fibonacci_word(a.order);
  } else {
    if (a.rules.empty()) throw InvalidInput("d0l needs --rules axiom,image0,image1");
    s = d0l_iterate(parse_rules(a.rules), a.order);
  }
  write_text(a.output, s.to_string() + "\n", out);
  return kOk;
}

struct ScheduleArgs {
  std::string kind;
  std::size_t order = 0;
  bool lift = false;
  std::string output;
};

int cmd_schedule(const ScheduleArgs& a, std::ostream& out) {
  const bool tm = a.kind == "thue-morse";
  DedupProcess p = tm ? tm_schedule(a.order) : fib_schedule(a.order);
  if (a.lift) p = d0l_lift(tm ? LSystem::thue_morse() : LSystem::fibonacci(), p);
  write_text(a.output, process_to_json(p, 2) + "\n", out);
  return kOk;
}

int cmd_verify(const std::string& path, std::ostream& out, std::istream& in) {
  const DedupProcess p = process_from_json(read_text(path, in));
  replay(p);
  out << "ok steps=" << p.length() << " root=" << p.final_seq.to_string() << "\n";
  return kOk;
}

struct BoundsArgs {
  std::size_t n = 0;
  double alpha = 0.99;
  std::optional<double> beta;
  int exact_up_to = 16;
  int fnm_max_n = 0;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n < 1) throw InvalidInput("n must be positive");
  if (a.exact_up_to > DistanceTable::kMaxLength || a.fnm_max_n > DistanceTable::kMaxLength) {
    throw CapExceeded("table lengths are capped at 32");
  }
  BoundInputs inputs;
  inputs.alpha = a.alpha;
  inputs.beta = a.beta;

  std::optional<DistanceTable> table;
  if (a.n >= 3 && a.n <= static_cast<std::size_t>(a.exact_up_to)) {
    std::string warning;
    table = load_or_build_table(table_config(static_cast<int>(a.n), ""), &warning);
    if (!warning.empty()) err << "warning: " << warning << "\n";
    inputs.table = &*table;
  }
  std::optional<FnmGrid> grid;
  if (a.fnm_max_n >= 4) {
    SearchConfig cfg;
    cfg.max_n = a.fnm_max_n;
    cfg.worker_count = workers();
    grid = compute_fnm_grid(cfg);
    inputs.fnm = &*grid;
  }
  const BoundReport report = bound_report(a.n, inputs);
  out << report_to_json(report, 2) << "\n";
  if (!report.consistent) {
    err << "bounds are inconsistent\n";
    return kVerificationFailed;
  }
  return kOk;
}

struct FindRepeatArgs {
  std::string seq;
  std::size_t random_n = 0;
  std::uint64_t seed = 1;
  std::optional<double> beta;
  std::optional<double> a;
  std::size_t k = 0;
};

int cmd_find_repeat(const FindRepeatArgs& f, std::ostream& out) {
  BinarySeq s;
  if (f.random_n > 0) {
    std::mt19937_64 rng(f.seed);
    BitBuilder b;
    for (std::size_t i = 0; i < f.random_n; ++i) b.push_back((rng() & 1) != 0);
    s = std::move(b).build();
  } else {
    s = BinarySeq::from_string(f.seq);
  }
  RepeatWitness w;
  if (f.a) {
    w = nonlinear_repeat_finder(s, *f.a);
  } else {
    const double beta = f.beta.value_or(0.6);
    w = plotkin_repeat_finder(s, beta, f.k ? f.k : plotkin_k(beta));
  }
  out << witness_to_json(w, 2) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Tandem-duplication distance toolkit", "dupdist"};
  app.require_subcommand(1);

  DistanceArgs dist;
  auto* distance = app.add_subcommand("distance", "Duplication distance of a sequence");
  distance->add_option("seq", dist.seq, "binary sequence")->required();
  distance->add_option("--beta", dist.beta, "mismatch fraction for approximate repeats")
      ->check(CLI::Range(0.0, 0.999999));
  distance->add_option("--emit-process", dist.emit, "write an optimal process as JSON");
  distance->add_option("--cache", dist.cache, "table cache file");

  TableArgs tab;
  auto* table = app.add_subcommand("table", "CSV of f(n), optionally per root");
  table->add_option("--max-n", tab.max_n, "largest length")->required();
  table->add_option("--sigma", tab.sigma, "0|1|01|10|010|101|all");
  table->add_option("--cache", tab.cache, "table cache file");

  int fnm_max = 0;
  auto* fnm = app.add_subcommand("fnm", "CSV of f(n,m) over 3 <= m < n <= max-n");
  fnm->add_option("--max-n", fnm_max, "largest length")->required();

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Emit a sequence");
  generate->add_option("--kind", gen.kind)
      ->required()
      ->check(CLI::IsMember({"debruijn", "thue-morse", "fibonacci", "d0l"}));
  generate->add_option("--order", gen.order)->required();
  generate->add_option("--rules", gen.rules, "axiom,image0,image1 for d0l");
  generate->add_option("-o,--output", gen.output);

  ScheduleArgs sch;
  auto* schedule = app.add_subcommand("schedule", "Emit a deduplication schedule as JSON");
  schedule->add_option("--kind", sch.kind)
      ->required()
      ->check(CLI::IsMember({"thue-morse", "fibonacci"}));
  schedule->add_option("--order", sch.order)->required();
  schedule->add_flag("--lift", sch.lift, "lift through the morphism once");
  schedule->add_option("-o,--output", sch.output);

  std::string verify_path = "-";
  auto* verify = app.add_subcommand("verify", "Replay a process JSON (file or stdin)");
  verify->add_option("process", verify_path);

  BoundsArgs bnd;
  auto* bounds = app.add_subcommand("bounds", "JSON report of all bounds at n");
  bounds->add_option("--n", bnd.n)->required();
  bounds->add_option("--alpha", bnd.alpha);
  bounds->add_option("--beta", bnd.beta);
  bounds->add_option("--exact-up-to", bnd.exact_up_to, "compute f(n) exactly when n is at most this");
  bounds->add_option("--fnm-max-n", bnd.fnm_max_n, "use an f(n,m) grid up to this length");

  FindRepeatArgs fr;
  auto* find = app.add_subcommand("find-repeat", "Witness JSON for an approximate repeat");
  auto* seq_opt = find->add_option("seq", fr.seq);
  auto* rnd_opt = find->add_option("--random", fr.random_n, "use a random sequence of this length");
  seq_opt->excludes(rnd_opt);
  find->add_option("--seed", fr.seed);
  auto* beta_opt = find->add_option("--beta", fr.beta);
  find->add_option("--a", fr.a, "power-rule exponent")->excludes(beta_opt);
  find->add_option("--k", fr.k);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  }

  try {
    if (*distance) return cmd_distance(dist, out, err);
    if (*table) return cmd_table(tab, out, err);
    if (*fnm) return cmd_fnm(fnm_max, out, err);
    if (*generate) return cmd_generate(gen, out);
    if (*schedule) return cmd_schedule(sch, out);
    if (*verify) return cmd_verify(verify_path, out, in);
    if (*bounds) return cmd_bounds(bnd, out, err);
    if (*find) {
      if (fr.seq.empty() && fr.random_n == 0) throw InvalidInput("give a sequence or --random n");
      return cmd_find_repeat(fr, out);
    }
  } catch (const InvalidStep& e) {
    err << "invalid step";
    if (e.step_index()) err << " #" << *e.step_index();
    err << " (i=" << e.i() << ", h=" << e.h() << "): " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace dupdist::cli
