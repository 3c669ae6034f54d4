// End-to-end acceptance gate.  Each numbered criterion prints exactly one
// PASS/FAIL line; the exit code is the number of failed criteria.  A CLI
// binary path must be supplied with --cli for the determinism criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "nilrep/basis.hpp"
#include "nilrep/bench.hpp"
#include "nilrep/builtins.hpp"
#include "nilrep/collect.hpp"
#include "nilrep/matrep.hpp"
#include "nilrep/multpoly.hpp"
#include "nilrep/reports.hpp"
#include "nilrep/rng.hpp"

using namespace nilrep;

namespace {

constexpr std::uint64_t kSeed = 12345;

struct Instance {
  std::string name;
  NilpotentPresentation p;
  std::vector<ActionPolys> all;
  PolyBasis fig1;
  PolyBasis fig2;
  long m_hat = 1;
};

Instance make_instance(const std::string& name, const NilpotentPresentation& p) {
  Instance inst{name, p, {}, {}, {}, 1};
  inst.all = all_action_polys(inst.p);
  inst.fig1 = build_basis_general(inst.p, coordinate_seeds(inst.p.n), inst.all);
  inst.fig2 = build_basis_coordinate(inst.p, inst.all);
  inst.m_hat = qbar_term_count(inst.p, inst.all).m_hat;
  return inst;
}

Instance make_instance(const std::string& name) {
  return make_instance(name, builtin(name));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// Captures the stdout of one CLI invocation; returns false on spawn failure
// or nonzero exit.
bool run_cli(const std::string& cli, const std::string& args,
             std::string& out) {
  std::string cmd = "\"" + cli + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return false;
  out.clear();
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  return pclose(pipe) == 0;
}

int failures = 0;

void report(int idx, bool ok, const std::string& detail) {
  std::cout << "criterion " << idx << ": " << (ok ? "PASS" : "FAIL") << "  "
            << detail << "\n";
  std::cout.flush();
  if (!ok) failures++;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; i++)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

  // Shared instances; criteria 3-6 and 8 all quantify over these.
  std::vector<Instance> core;
  for (int m = 3; m <= 6; m++)
    core.push_back(make_instance("unitriangular:" + std::to_string(m)));
  for (int r = 2; r <= 5; r++)
    core.push_back(make_instance("free_nilpotent_class2:" + std::to_string(r)));

  // 1. Heisenberg end-to-end under five seconds: dimension 4, exact relation
  //    checks, and 1000-word sampled faithfulness with zero failures.
  {
    auto start = std::chrono::steady_clock::now();
    NilpotentPresentation p = builtin("heisenberg");
    auto all = all_action_polys(p);
    PolyBasis B = build_basis_coordinate(p, all);
    MatrixRep rep = representation(p, B, all);
    RelationCheck rels = verify_relations(p, rep);
    FaithfulnessCheck faith = verify_faithful_sample(p, rep, 1000, 16, 5, kSeed);
    double secs = seconds_since(start);
    bool ok = B.dim() == 4 && rels.passed() && faith.passed() && secs < 5.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "heisenberg: dimension %d, %ld relation failures, %ld/%ld "
                  "sampling failures, %.2fs",
                  B.dim(), rels.failures, faith.hom_failures + faith.faith_failures,
                  faith.trials, secs);
    report(1, ok, buf);
  }

  // 2. The two basis algorithms agree element-wise on every builtin with
  //    Hirsch length at most 15.
  {
    std::vector<Instance> small;
    small.push_back(make_instance("heisenberg"));
    for (int r = 1; r <= 3; r++)
      small.push_back(
          make_instance("free_abelian:" + std::to_string(r), free_abelian(r)));
    int checked = 0, agree = 0;
    std::string bad;
    auto check = [&](const Instance& inst) {
      if (inst.p.n > 15) return;
      checked++;
      if (inst.fig1.elems == inst.fig2.elems)
        agree++;
      else if (bad.empty())
        bad = inst.name;
    };
    for (const Instance& inst : small) check(inst);
    for (const Instance& inst : core) check(inst);
    report(2, checked == agree,
           "basis algorithms agree on " + std::to_string(agree) + "/" +
               std::to_string(checked) + " builtins" +
               (bad.empty() ? "" : " (first mismatch: " + bad + ")"));
  }

  // 3. Dimension bound (m/2)n(n+1)+1 on unitriangular 3-6 and
  //    free_nilpotent_class2 2-5, exact integer comparison.
  {
    bool ok = true;
    std::string detail;
    for (const Instance& inst : core) {
      Int bound = dimension_bound(inst.p.n, inst.m_hat);
      if (Int(inst.fig2.dim()) > bound) ok = false;
      detail += inst.name + " " + std::to_string(inst.fig2.dim()) + "<=" +
                bound.str() + "  ";
    }
    report(3, ok, "dimension within bound: " + detail);
  }

  // 4. Insert-count bounds for both algorithms, and the coordinate variant
  //    never uses more inserts than the general one.
  {
    bool ok = true;
    for (const Instance& inst : core) {
      if (Int(inst.fig1.insert_count) >
          general_insert_bound(inst.p.n, inst.m_hat))
        ok = false;
      if (Int(inst.fig2.insert_count) >
          coordinate_insert_bound(inst.p.n, inst.m_hat))
        ok = false;
      if (inst.fig2.insert_count > inst.fig1.insert_count) ok = false;
    }
    report(4, ok,
           "insert counts within bounds and figure2 <= figure1 on all " +
               std::to_string(core.size()) + " instances");
  }

  // 5. Fitted action polynomials equal the collection oracle at 200 fresh
  //    random points per generator, and satisfy the structural shape checks.
  {
    long points = 0, mismatches = 0;
    bool structure_ok = true;
    Rng rng(kSeed + 5);
    for (const Instance& inst : core) {
      try {
        for (const ActionPolys& aps : inst.all)
          check_action_structure(inst.p, aps);
      } catch (const std::exception&) {
        structure_ok = false;
      }
      for (int j = 0; j < inst.p.n; j++) {
        for (int t = 0; t < 200; t++) {
          ExponentVector e(inst.p.n);
          std::vector<Rat> pt(inst.p.n);
          for (int i = 0; i < inst.p.n; i++) {
            e[i] = rng.uniform(-8, 8);
            pt[i] = Rat(e[i]);
          }
          Word w = word_from_exponents(e);
          w.push_back({j, Int(-1)});
          ExponentVector oracle = collect(inst.p, w);
          points++;
          for (int i = 0; i < inst.p.n; i++)
            if (inst.all[j].polys[i].evaluate(pt) != Rat(oracle[i])) {
              mismatches++;
              break;
            }
        }
      }
    }
    report(5, mismatches == 0 && structure_ok,
           "action polynomials match the collection oracle at " +
               std::to_string(points) + " points, " +
               std::to_string(mismatches) + " mismatches, structure " +
               (structure_ok ? "ok" : "violated"));
  }

  // 6. Exact relation verification, 500 sampled homomorphism pairs, and
  //    nilpotency of every generator image, per instance.
  {
    bool ok = true;
    std::string bad;
    for (const Instance& inst : core) {
      MatrixRep rep = representation(inst.p, inst.fig2, inst.all);
      RelationCheck rels = verify_relations(inst.p, rep);
      FaithfulnessCheck faith =
          verify_faithful_sample(inst.p, rep, 500, 16, 5, kSeed);
      bool inst_ok = rels.passed() && faith.hom_failures == 0 &&
                     faith.faith_failures == 0 && nilpotency_check(rep);
      if (!inst_ok) {
        ok = false;
        if (bad.empty()) bad = inst.name;
      }
    }
    report(6, ok,
           "relations, 500 word-pair homomorphism samples, and nilpotency "
           "hold on all " + std::to_string(core.size()) + " instances" +
               (bad.empty() ? "" : " (first failure: " + bad + ")"));
  }

  // 7. Integral unitriangular matrices (as produced or reversed) for
  //    heisenberg, free abelian 1-3, free_nilpotent_class2 2-4 and
  //    unitriangular 3-5.
  {
    std::vector<std::pair<std::string, NilpotentPresentation>> shapes;
    shapes.push_back({"heisenberg", builtin("heisenberg")});
    for (int r = 1; r <= 3; r++)
      shapes.push_back({"free_abelian:" + std::to_string(r), free_abelian(r)});
    for (int r = 2; r <= 4; r++)
      shapes.push_back({"free_nilpotent_class2:" + std::to_string(r),
                        builtin("free_nilpotent_class2:" + std::to_string(r))});
    for (int m = 3; m <= 5; m++)
      shapes.push_back({"unitriangular:" + std::to_string(m),
                        builtin("unitriangular:" + std::to_string(m))});
    bool ok = true;
    std::string bad;
    for (const auto& [name, p] : shapes) {
      auto all = all_action_polys(p);
      PolyBasis B = build_basis_coordinate(p, all);
      MatrixRep rep = representation(p, B, all);
      UnitriangularCheck shape = check_unitriangular(rep);
      if (!(shape.integral &&
            (shape.lower_as_produced || shape.upper_reversed))) {
        ok = false;
        if (bad.empty()) bad = name;
      }
    }
    report(7, ok,
           "integral unitriangular matrices on all " +
               std::to_string(shapes.size()) + " groups" +
               (bad.empty() ? "" : " (first failure: " + bad + ")"));
  }

  // 8. Log-log slope of dimension against Hirsch length across
  //    unitriangular 3-6 stays at most 2.2.
  {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (const Instance& inst : core) {
      if (inst.name.rfind("unitriangular:", 0) != 0) continue;
      double x = std::log((double)inst.p.n);
      double y = std::log((double)inst.fig2.dim());
      sx += x, sy += y, sxx += x * x, sxy += x * y;
      count++;
    }
    double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "dimension growth slope %.4f <= 2.2 over %d sizes", slope,
                  count);
    report(8, count == 4 && slope <= 2.2, buf);
  }

  // 9. Byte-identical JSON reports across two same-seed runs, both through
  //    fresh CLI processes and through a fresh in-process pipeline.
  {
    bool ok = true;
    std::string detail;
    if (cli.empty()) {
      ok = false;
      detail = "no --cli path provided";
    } else {
      const std::vector<std::string> cmds = {
          "collect --builtin heisenberg \"x2 x1^-3\" --format json",
          "polys --builtin heisenberg --format json",
          "basis --builtin unitriangular:4 --counts --format json",
          "rep --builtin free_nilpotent_class2:3 --format json",
          "verify --builtin heisenberg --trials 200 --seed 777 --format json",
      };
      int identical = 0;
      for (const std::string& args : cmds) {
        std::string first, second;
        if (run_cli(cli, args, first) && run_cli(cli, args, second) &&
            !first.empty() && first == second) {
          identical++;
        } else {
          ok = false;
          if (detail.empty()) detail = "differs: " + args;
        }
      }
      if (detail.empty())
        detail = std::to_string(identical) + "/" +
                 std::to_string(cmds.size()) + " CLI reports byte-identical";
    }
    NilpotentPresentation p = builtin("free_nilpotent_class2:3");
    auto run_reports = [&]() {
      auto all = all_action_polys(p);
      PolyBasis B = build_basis_coordinate(p, all);
      MatrixRep rep = representation(p, B, all);
      auto assoc = associativity_check(p, 100, 777);
      auto rels = verify_relations(p, rep);
      auto faith = verify_faithful_sample(p, rep, 100, 16, 5, 777);
      auto shape = check_unitriangular(rep);
      return polys_report(p, "s", all).dump() +
             basis_report(p, "s", "figure2", B, true).dump() +
             rep_report(p, "s", "figure2", rep).dump() +
             verify_report(p, "s", 100, 777, 16, 5, assoc, rels, faith, shape,
                           nilpotency_check(rep))
                 .dump();
    };
    if (run_reports() != run_reports()) {
      ok = false;
      detail += "; in-process reports differ";
    } else {
      detail += ", in-process reports identical";
    }
    report(9, ok, detail);
  }

  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
