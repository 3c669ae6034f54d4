#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "nilrep/basis.hpp"
#include "nilrep/builtins.hpp"
#include "nilrep/multpoly.hpp"
#include "nilrep/reports.hpp"

namespace nilrep {

// One benchmark instance: both basis algorithms on the same action
// polynomials, with the dimension and insert-count bounds they are measured
// against.  Wall time covers polynomial fitting plus both basis runs.
struct BenchRow {
  int size = 0;  // family parameter
  int n = 0;     // Hirsch length
  long max_correction_terms = 1;
  int dimension = 0;
  Int dimension_bound;
  long figure1_inserts = 0;
  Int figure1_bound;
  long figure2_inserts = 0;
  Int figure2_bound;
  double wall_ms = 0.0;
};

struct BenchResult {
  std::string family;
  std::vector<BenchRow> rows;
  bool has_slope = false;  // needs at least three rows
  double slope = 0.0;      // least-squares log(dimension) vs log(n)
};

inline BenchRow bench_instance(const std::string& family, int size) {
  auto start = std::chrono::steady_clock::now();
  NilpotentPresentation p = builtin(family + ":" + std::to_string(size));
  std::vector<ActionPolys> all = all_action_polys(p);
  QbarCounts qc = qbar_term_count(p, all);
  PolyBasis general = build_basis_general(p, coordinate_seeds(p.n), all);
  PolyBasis coord = build_basis_coordinate(p, all);
  auto stop = std::chrono::steady_clock::now();
  if (general.elems != coord.elems)
    throw internal_error("basis algorithms disagree on " + family + ":" +
                         std::to_string(size));
  BenchRow row;
  row.size = size;
  row.n = p.n;
  row.max_correction_terms = qc.m_hat;
  row.dimension = coord.dim();
  row.dimension_bound = dimension_bound(p.n, qc.m_hat);
  row.figure1_inserts = general.insert_count;
  row.figure1_bound = general_insert_bound(p.n, qc.m_hat);
  row.figure2_inserts = coord.insert_count;
  row.figure2_bound = coordinate_insert_bound(p.n, qc.m_hat);
  row.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return row;
}

// Rows are independent; up to `jobs` worker threads pull instance indices
// from a shared counter.  Output order is by size regardless of finish order.
inline BenchResult run_bench(const std::string& family, int size_lo,
                             int size_hi, int jobs = 1) {
  if (family != "free_nilpotent_class2" && family != "unitriangular")
    throw input_error("bench family must be free_nilpotent_class2 or "
                      "unitriangular, got '" + family + "'");
  if (size_hi < size_lo) throw input_error("empty size range");
  BenchResult result;
  result.family = family;
  int count = size_hi - size_lo + 1;
  result.rows.resize(count);
  if (jobs < 1) jobs = 1;
  if (jobs > count) jobs = count;
  std::atomic<int> next{0};
  std::vector<std::string> errors(count);
  auto worker = [&]() {
    for (;;) {
      int idx = next.fetch_add(1);
      if (idx >= count) return;
      try {
        result.rows[idx] = bench_instance(family, size_lo + idx);
      } catch (const std::exception& ex) {
        errors[idx] = ex.what();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; t++) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  for (const std::string& e : errors)
    if (!e.empty()) throw internal_error("bench instance failed: " + e);
  if (count >= 3) {
    // Least-squares slope of log(dimension) against log(n).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const BenchRow& r : result.rows) {
      double x = std::log((double)r.n);
      double y = std::log((double)r.dimension);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    result.has_slope = true;
    result.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  }
  return result;
}

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline Json bench_json(const BenchResult& b) {
  Json j;
  j["command"] = "bench";
  j["family"] = b.family;
  Json rows = Json::array();
  for (const BenchRow& r : b.rows) {
    Json row;
    row["size"] = r.size;
    row["n"] = r.n;
    row["max_correction_terms"] = r.max_correction_terms;
    row["dimension"] = r.dimension;
    row["dimension_bound"] = int_to_string(r.dimension_bound);
    row["figure1_inserts"] = r.figure1_inserts;
    row["figure1_bound"] = int_to_string(r.figure1_bound);
    row["figure2_inserts"] = r.figure2_inserts;
    row["figure2_bound"] = int_to_string(r.figure2_bound);
    row["wall_ms"] = format_double(r.wall_ms);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  if (b.has_slope) j["loglog_slope_dim_vs_n"] = format_double(b.slope);
  return j;
}

inline std::string bench_csv(const BenchResult& b) {
  std::string out =
      "size,n,max_correction_terms,dimension,dimension_bound,"
      "figure1_inserts,figure1_bound,figure2_inserts,figure2_bound,wall_ms\n";
  for (const BenchRow& r : b.rows) {
    out += std::to_string(r.size) + "," + std::to_string(r.n) + "," +
           std::to_string(r.max_correction_terms) + "," +
           std::to_string(r.dimension) + "," + int_to_string(r.dimension_bound) +
           "," + std::to_string(r.figure1_inserts) + "," +
           int_to_string(r.figure1_bound) + "," +
           std::to_string(r.figure2_inserts) + "," +
           int_to_string(r.figure2_bound) + "," + format_double(r.wall_ms) +
           "\n";
  }
  if (b.has_slope)
    out += "# loglog_slope_dim_vs_n = " + format_double(b.slope) + "\n";
  return out;
}

inline std::string bench_text(const BenchResult& b) {
  std::string out = "family: " + b.family + "\n";
  out += "size  n   terms  dim  dim_bound  fig1  fig1_bound  fig2  fig2_bound  wall_ms\n";
  for (const BenchRow& r : b.rows) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-5d %-3d %-6ld %-4d %-10s %-5ld %-11s %-5ld %-11s %s\n",
                  r.size, r.n, r.max_correction_terms, r.dimension,
                  int_to_string(r.dimension_bound).c_str(), r.figure1_inserts,
                  int_to_string(r.figure1_bound).c_str(), r.figure2_inserts,
                  int_to_string(r.figure2_bound).c_str(),
                  format_double(r.wall_ms).c_str());
    out += buf;
  }
  if (b.has_slope)
    out += "loglog slope of dimension vs n: " + format_double(b.slope) + "\n";
  return out;
}

}  // namespace nilrep
