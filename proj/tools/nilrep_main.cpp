// Command-line front end: collect words, fit action polynomials, build module
// bases, emit matrix representations, verify them, and benchmark the builtin
// families.  Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nilrep/bench.hpp"
#include "nilrep/builtins.hpp"
#include "nilrep/collect.hpp"
#include "nilrep/matrep.hpp"
#include "nilrep/multpoly.hpp"
#include "nilrep/parse.hpp"
#include "nilrep/reports.hpp"

namespace {

struct Input {
  nilrep::NilpotentPresentation pres;
  std::string source;
};

Input load_input(const std::string& builtin_spec, const std::string& file) {
  if (!builtin_spec.empty() && !file.empty())
    throw nilrep::input_error("--builtin and --file are mutually exclusive");
  if (!builtin_spec.empty())
    return {nilrep::builtin(builtin_spec), "builtin:" + builtin_spec};
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw nilrep::input_error("cannot open file '" + file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return {nilrep::parse_presentation(buf.str()), "file:" + file};
  }
  throw nilrep::input_error("one of --builtin or --file is required");
}

void emit_json(const nilrep::Json& j) { std::cout << j.dump(2) << "\n"; }

nilrep::PolyBasis build_basis_for(const nilrep::NilpotentPresentation& p,
                                  const std::vector<nilrep::ActionPolys>& all,
                                  const std::string& algorithm) {
  if (algorithm == "figure1")
    return nilrep::build_basis_general(p, nilrep::coordinate_seeds(p.n), all);
  return nilrep::build_basis_coordinate(p, all);
}

// Parses "3..6" or a single "4" into an inclusive range.
std::pair<int, int> parse_sizes(const std::string& text) {
  std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw nilrep::input_error("bad --sizes '" + text +
                              "' (expected N or A..B)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix representations of torsion-free nilpotent groups"};
  app.require_subcommand(1);

  std::string builtin_spec, file, format = "text", algorithm = "figure2";
  std::string word_text, family, sizes;
  bool with_counts = false;
  long trials = 1000, box = 5;
  int max_len = 16, jobs = 1;
  std::uint64_t seed = 12345;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--builtin", builtin_spec,
                    "builtin presentation: heisenberg, "
                    "free_nilpotent_class2:r, or unitriangular:m");
    cmd->add_option("--file", file, "presentation file");
  };
  auto add_format = [&](CLI::App* cmd, bool with_csv = false) {
    std::vector<std::string> allowed = {"json", "text"};
    if (with_csv) allowed.push_back("csv");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember(allowed));
  };
  auto add_algorithm = [&](CLI::App* cmd) {
    cmd->add_option("--algorithm", algorithm, "basis construction variant")
        ->check(CLI::IsMember({"figure1", "figure2"}));
  };

  CLI::App* cmd_collect = app.add_subcommand("collect", "collect a word to normal form");
  add_input(cmd_collect);
  add_format(cmd_collect);
  cmd_collect->add_option("word", word_text, "word, e.g. \"x2 x1^-3\"");

  CLI::App* cmd_polys = app.add_subcommand("polys", "fit the generator action polynomials");
  add_input(cmd_polys);
  add_format(cmd_polys);

  CLI::App* cmd_basis = app.add_subcommand("basis", "build the module basis");
  add_input(cmd_basis);
  add_format(cmd_basis);
  add_algorithm(cmd_basis);
  cmd_basis->add_flag("--counts", with_counts, "report insert and reduction counts");

  CLI::App* cmd_rep = app.add_subcommand("rep", "emit the matrix representation");
  add_input(cmd_rep);
  add_format(cmd_rep);
  add_algorithm(cmd_rep);

  CLI::App* cmd_verify = app.add_subcommand("verify", "check the representation");
  add_input(cmd_verify);
  add_format(cmd_verify);
  add_algorithm(cmd_verify);
  cmd_verify->add_option("--trials", trials, "random trials per check");
  cmd_verify->add_option("--seed", seed, "random seed");
  cmd_verify->add_option("--max-len", max_len, "maximum random word length");
  cmd_verify->add_option("--box", box, "exponent range [-box, box]");

  CLI::App* cmd_bench = app.add_subcommand("bench", "benchmark a builtin family");
  cmd_bench->add_option("--family", family, "free_nilpotent_class2 or unitriangular")
      ->required();
  cmd_bench->add_option("--sizes", sizes, "size range, e.g. 3..6")->required();
  cmd_bench->add_option("--jobs", jobs, "concurrent instances");
  add_format(cmd_bench, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_collect->parsed()) {
      Input in = load_input(builtin_spec, file);
      nilrep::Word w = nilrep::word_from_string(in.pres, word_text);
      nilrep::ExponentVector e = nilrep::collect(in.pres, w);
      if (format == "json")
        emit_json(nilrep::collect_report(in.pres, in.source, word_text, e));
      else
        std::cout << nilrep::collect_text(e) << "\n";
      return 0;
    }
    if (cmd_polys->parsed()) {
      Input in = load_input(builtin_spec, file);
      auto all = nilrep::all_action_polys(in.pres);
      if (format == "json")
        emit_json(nilrep::polys_report(in.pres, in.source, all));
      else
        std::cout << nilrep::polys_text(in.pres, all);
      return 0;
    }
    if (cmd_basis->parsed()) {
      Input in = load_input(builtin_spec, file);
      auto all = nilrep::all_action_polys(in.pres);
      nilrep::PolyBasis B = build_basis_for(in.pres, all, algorithm);
      if (format == "json")
        emit_json(nilrep::basis_report(in.pres, in.source, algorithm, B,
                                       with_counts));
      else
        std::cout << nilrep::basis_text(B, with_counts);
      return 0;
    }
    if (cmd_rep->parsed()) {
      Input in = load_input(builtin_spec, file);
      auto all = nilrep::all_action_polys(in.pres);
      nilrep::PolyBasis B = build_basis_for(in.pres, all, algorithm);
      nilrep::MatrixRep rep = nilrep::representation(in.pres, B, all);
      if (format == "json")
        emit_json(nilrep::rep_report(in.pres, in.source, algorithm, rep));
      else
        std::cout << nilrep::rep_text(in.pres, rep);
      return 0;
    }
    if (cmd_verify->parsed()) {
      Input in = load_input(builtin_spec, file);
      if (trials < 1) throw nilrep::input_error("--trials must be >= 1");
      auto all = nilrep::all_action_polys(in.pres);
      nilrep::PolyBasis B = build_basis_for(in.pres, all, algorithm);
      nilrep::MatrixRep rep = nilrep::representation(in.pres, B, all);
      auto assoc = nilrep::associativity_check(in.pres, trials, seed, box);
      auto rels = nilrep::verify_relations(in.pres, rep);
      auto faith = nilrep::verify_faithful_sample(in.pres, rep, trials,
                                                  max_len, box, seed);
      auto shape = nilrep::check_unitriangular(rep);
      bool nilpotent = nilrep::nilpotency_check(rep);
      nilrep::Json report =
          nilrep::verify_report(in.pres, in.source, trials, seed, max_len,
                                box, assoc, rels, faith, shape, nilpotent);
      if (format == "json")
        emit_json(report);
      else
        std::cout << nilrep::verify_text(report);
      return report["passed"] ? 0 : 1;
    }
    if (cmd_bench->parsed()) {
      auto [lo, hi] = parse_sizes(sizes);
      nilrep::BenchResult b = nilrep::run_bench(family, lo, hi, jobs);
      if (format == "json")
        emit_json(nilrep::bench_json(b));
      else if (format == "csv")
        std::cout << nilrep::bench_csv(b);
      else
        std::cout << nilrep::bench_text(b);
      return 0;
    }
  } catch (const nilrep::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nilrep::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
