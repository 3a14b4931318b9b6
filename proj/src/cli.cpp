#include "cmacc/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cmacc/baselines.hpp"
#include "cmacc/macc.hpp"
#include "cmacc/optimizer.hpp"
#include "cmacc/packing.hpp"
#include "cmacc/pda.hpp"
#include "cmacc/text_format.hpp"

namespace cmacc {
namespace {

// Raised for bad inputs detected after parsing; maps to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::int64_t>& xs) { return "(" + format_m(xs) + ")"; }

void print_violations(std::ostream& out, const VerificationReport& report) {
  for (const Violation& v : report.violations) {
    out << "violation " << to_string(v.kind) << " witness=" << join(v.witness);
    if (!v.detail.empty()) out << ' ' << v.detail;
    out << '\n';
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw UsageError("write to " + path + " failed");
}

// Writes to `path`, or to `out` when the path is empty or "-".
void emit(std::ostream& out, const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    return;
  }
  std::ostringstream buf;
  body(buf);
  write_file(path, buf.str());
}

struct ConstructOpts {
  std::int64_t L = 1;
  std::string m;
  std::int64_t v = 0;
  std::string output;
};

int cmd_construct(const ConstructOpts& o, std::ostream& out) {
  MVector mv{o.L, parse_m(o.m)};
  mv.validate();
  const ConstructionTrace tr = derive_trace(mv);
  const std::int64_t v = o.v == 0 ? tr.v_min : o.v;
  if (v % 2 == 0) throw UsageError("v=" + std::to_string(v) + " is even");
  if (v < tr.v_min) {
    throw UsageError("v=" + std::to_string(v) + " is below v_min=" + std::to_string(tr.v_min));
  }
  const PackingFamily family = construct_family(mv, v);
  const VerificationReport report = verify_cma(family, o.L);

  out << "f = " << join(tr.f) << '\n'
      << "g = " << join(tr.g_off) << '\n'
      << "x = " << join(tr.x) << '\n'
      << "phi = " << tr.phi << '\n'
      << "v_min = " << tr.v_min << '\n';
  if (!o.output.empty()) write_file(o.output, to_text(family, o.L));
  if (!report.valid()) {
    out << parameter_label(family, o.L) << " not a CMA-NHSDP\n";
    print_violations(out, report);
    return kExitInvalid;
  }
  out << parameter_label(family, o.L) << " CMA-NHSDP\n";
  return kExitOk;
}

struct VerifyOpts {
  std::string file;
  std::string as = "cma";
  std::int64_t L = 0;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  const PackingFile pf = load_packing(o.file);
  const std::int64_t L = o.L == 0 ? pf.L : o.L;
  const bool cma = o.as == "cma";
  const VerificationReport report = cma ? verify_cma(pf.family, L) : verify_nhsdp(pf.family);
  const std::string label = parameter_label(pf.family, L);
  const std::string kind = cma ? "CMA-NHSDP" : "NHSDP";
  if (report.valid()) {
    out << "valid " << label << ' ' << kind << '\n';
    if (cma) {
      out << "runs:";
      for (const CyclicRun& r : report.runs) out << " [" << r.start.value << ".." << (r.start.value + r.length - 1) % pf.family.modulus() << ']';
      out << '\n';
    }
    return kExitOk;
  }
  out << "invalid " << label << ' ' << kind << '\n';
  print_violations(out, report);
  return kExitInvalid;
}

struct BuildPdaOpts {
  std::string file;
  std::string output;
  std::int64_t L = 0;
};

int cmd_build_pda(const BuildPdaOpts& o, std::ostream& out) {
  const PackingFile pf = load_packing(o.file);
  const std::int64_t L = o.L == 0 ? pf.L : o.L;
  const VerificationReport nh = verify_nhsdp(pf.family);
  if (!nh.valid()) {
    out << "not an NHSDP; no PDA built\n";
    print_violations(out, nh);
    return kExitInvalid;
  }
  const PdaArray Q = build_pda(pf.family);
  VerificationReport report = verify_pda(Q);
  const VerificationReport cont = verify_l_continuity(Q, L);
  if (!o.output.empty()) write_file(o.output, to_text(Q));
  if (!report.valid()) {
    out << "not a PDA\n";
    print_violations(out, report);
    return kExitInvalid;
  }
  out << compute_params(Q).label() << (cont.valid() ? " L-continuous" : " not L-continuous") << " (L=" << L
      << ")\n";
  print_violations(out, cont);
  return cont.valid() ? kExitOk : kExitInvalid;
}

struct SimulateOpts {
  std::string file;
  std::int64_t L = 1;
  std::int64_t N = 0;
  std::string demands = "distinct";
  std::uint64_t seed = 0;
  std::size_t file_size = 1024;
  std::int64_t trials = 1;
  std::string library_dir;
  std::string transcript;
};

DemandVector make_demands(const std::string& spec, std::int64_t K, std::int64_t N, std::mt19937_64& rng) {
  if (spec == "distinct") {
    if (N < K) throw UsageError("distinct demands need N >= K");
    return DemandVector::distinct(K, N);
  }
  if (spec == "uniform") return DemandVector::uniform(K, N, rng);
  const std::string prefix = "explicit:";
  if (spec.rfind(prefix, 0) == 0) {
    DemandVector d{parse_m(spec.substr(prefix.size()))};
    if (static_cast<std::int64_t>(d.d.size()) != K) {
      throw UsageError("explicit demand has " + std::to_string(d.d.size()) + " entries, need " + std::to_string(K));
    }
    return d;
  }
  throw UsageError("unknown demand spec '" + spec + "'");
}

int cmd_simulate(const SimulateOpts& o, std::ostream& out) {
  const MaccScheme scheme = MaccScheme::from_delivery_array(load_pda(o.file), o.L);
  const std::int64_t F = scheme.params().F;
  const std::int64_t K = scheme.real_users();
  const Library library =
      o.library_dir.empty() ? Library::synthetic(o.N, o.file_size, F, o.seed) : Library::from_directory(o.library_dir, F);
  const std::int64_t N = library.file_count();
  if (!o.library_dir.empty() && o.N != 0 && o.N != N) {
    throw UsageError("--N=" + std::to_string(o.N) + " but the library has " + std::to_string(N) + " files");
  }

  // Demands draw from a stream separate from the file contents.
  std::seed_seq seq{o.seed, std::uint64_t{0x64656d616e64}};
  std::mt19937_64 rng(seq);
  std::int64_t ok = 0;
  std::int64_t total = 0;
  std::int64_t S_d = 0;
  Rational rate;
  std::ostringstream transcripts;
  for (std::int64_t trial = 0; trial < o.trials; ++trial) {
    const DemandVector d = make_demands(o.demands, K, N, rng);
    const DeliveryTranscript tx = deliver(scheme, library, d);
    const std::vector<Bytes> decoded = decode_all(scheme, library, d, tx);
    for (std::int64_t k = 0; k < K; ++k) {
      ++total;
      if (decoded[static_cast<std::size_t>(k)] == library.original(d.d[static_cast<std::size_t>(k)])) ++ok;
    }
    S_d = tx.S_d;
    rate = tx.rate;
    if (!o.transcript.empty()) {
      transcripts << "# trial " << trial << " demands " << join(d.d) << '\n';
      write_transcript(transcripts, tx);
    }
  }
  if (!o.transcript.empty()) write_file(o.transcript, transcripts.str());
  out << "decode: " << ok << '/' << total << (ok == total ? " OK" : " FAILED") << ", S_d=" << S_d
      << ", R=" << to_string(rate) << '\n';
  return ok == total ? kExitOk : kExitInvalid;
}

struct OptimizeOpts {
  std::int64_t v = 0;
  std::int64_t L = 1;
  std::int64_t n_max = 1;
  std::string csv;
};

int cmd_optimize(const OptimizeOpts& o, std::ostream& out) {
  OptimizationInstance inst{o.v, o.L, o.n_max};
  inst.validate();
  if (!o.csv.empty()) {
    emit(out, o.csv, [&](std::ostream& s) { write_candidates_csv(s, feasible_candidates(inst)); });
  }
  const std::optional<Candidate> best = brute_force(inst);
  const std::optional<ClosedFormSolution> cf = closed_form(o.v, o.L, o.n_max);
  if (!best) {
    out << "no m with n=" << o.n_max << " fits v=" << o.v << '\n';
    return kExitUsage;
  }
  out << "brute force: m=" << join(best->m.m) << " objective=" << best->objective
      << " v_min=" << best->trace.v_min << (best->verified ? " verified" : " unverified") << '\n';
  if (cf) {
    out << "closed form: q=" << cf->q << " m=" << join(cf->m.m) << " objective=" << cf->objective
        << " v_min=" << cf->trace.v_min << '\n';
  }
  out << "best m=" << join(best->m.m) << ", f=" << best->objective << "; ";
  if (!cf) {
    out << "closed-form n/a (q <= 2)\n";
  } else if (cf->objective == best->objective) {
    out << "closed-form q=" << cf->q << " matches\n";
  } else {
    out << "closed-form q=" << cf->q << " gives f=" << cf->objective << '\n';
  }
  return kExitOk;
}

struct CompareOpts {
  std::int64_t K = 0;
  std::int64_t L = 1;
  std::int64_t n_max = 3;
  std::string format = "text";
  std::string output;
  std::vector<std::int64_t> t;
  bool no_ours = false;
};

int cmd_compare(const CompareOpts& o, std::ostream& out) {
  if (o.K < 1 || o.L < 1 || o.L > o.K) throw UsageError("need 1 <= L <= K");
  std::vector<BaselinePoint> baselines = baseline_sweep(o.K, o.L);
  if (!o.t.empty()) {
    std::erase_if(baselines, [&](const BaselinePoint& p) {
      return std::find(o.t.begin(), o.t.end(), p.t.value_or(-1)) == o.t.end();
    });
  }
  const std::vector<BaselinePoint> ours = o.no_ours ? std::vector<BaselinePoint>{} : our_points(o.K, o.L, o.n_max);
  const std::vector<ComparisonRow> rows = compare(o.K, o.L, ours, baselines);
  emit(out, o.output, [&](std::ostream& s) {
    if (o.format == "csv") {
      write_csv(s, rows);
    } else if (o.format == "json") {
      write_json(s, rows);
    } else {
      s << "K=" << o.K << " L=" << o.L << '\n';
      write_text(s, rows);
    }
  });
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-access coded caching from non-half-sum disjoint packings", "cmacc"};
  app.require_subcommand(1, 1);

  ConstructOpts co;
  auto* construct = app.add_subcommand("construct", "Generate a packing family and print its trace");
  construct->add_option("--L", co.L, "Access degree (odd)")->required();
  construct->add_option("--m", co.m, "Comma-separated m_1,...,m_n")->required();
  construct->add_option("--v", co.v, "Modulus (defaults to v_min)");
  construct->add_option("-o,--output", co.output, "Packing file to write");

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Check a packing file");
  verify->add_option("file", vo.file, "Packing file")->required();
  verify->add_option("--as", vo.as, "nhsdp or cma")->check(CLI::IsMember({"nhsdp", "cma"}));
  verify->add_option("--L", vo.L, "Run length (defaults to the file's L)");

  BuildPdaOpts bo;
  auto* build = app.add_subcommand("build-pda", "Build the circulant PDA of a packing file");
  build->add_option("file", bo.file, "Packing file")->required();
  build->add_option("-o,--output", bo.output, "PDA file to write");
  build->add_option("--L", bo.L, "Run length (defaults to the file's L)");

  SimulateOpts so;
  auto* simulate = app.add_subcommand("simulate", "Run placement, delivery and decoding");
  simulate->add_option("file", so.file, "PDA file")->required();
  simulate->add_option("--L", so.L, "Access degree")->required();
  simulate->add_option("--N", so.N, "Number of files");
  simulate->add_option("--demands", so.demands, "distinct | uniform | explicit:d1,d2,...");
  simulate->add_option("--seed", so.seed, "PRNG seed");
  simulate->add_option("--file-size", so.file_size, "Bytes per synthetic file");
  simulate->add_option("--trials", so.trials, "Number of demand vectors")->check(CLI::PositiveNumber);
  simulate->add_option("--library-dir", so.library_dir, "Read files from this directory instead");
  simulate->add_option("--transcript", so.transcript, "Write delivered messages here");

  OptimizeOpts oo;
  auto* optimize = app.add_subcommand("optimize", "Choose m for a modulus budget");
  optimize->add_option("--v", oo.v, "Modulus budget")->required();
  optimize->add_option("--L", oo.L, "Access degree (odd)")->required();
  optimize->add_option("--n-max", oo.n_max, "Dimension n")->required();
  optimize->add_option("--csv", oo.csv, "Write every feasible candidate as CSV ('-' for stdout)");

  CompareOpts cmp;
  auto* comparison = app.add_subcommand("compare", "Tabulate baselines against this scheme");
  comparison->add_option("--K", cmp.K, "Number of users")->required();
  comparison->add_option("--L", cmp.L, "Access degree")->required();
  comparison->add_option("--n-max", cmp.n_max, "Largest n for our constructions");
  comparison->add_option("--format", cmp.format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));
  comparison->add_option("-o,--output", cmp.output, "Output file");
  comparison->add_option("--t", cmp.t, "Restrict baselines to these t values");
  comparison->add_flag("--no-ours", cmp.no_ours, "Baselines only");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
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

  try {
    if (*construct) return cmd_construct(co, out);
    if (*verify) return cmd_verify(vo, out);
    if (*build) return cmd_build_pda(bo, out);
    if (*simulate) return cmd_simulate(so, out);
    if (*optimize) return cmd_optimize(oo, out);
    if (*comparison) return cmd_compare(cmp, out);
  } catch (const DecodeError& e) {
    err << "error: decode failed: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ParseError& e) {
    err << "error: malformed file: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cmacc
