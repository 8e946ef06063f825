#pragma once

#include <map>
#include <string>
#include <vector>

#include "liecap/catalog.hpp"
#include "liecap/json_io.hpp"

namespace liecap {

/// "[x1, x2] = x3, [x1, x3] = x4" (nonzero brackets in table order).
std::string format_relations(const LieAlgebra& algebra);

struct InvariantReport {
  std::string label;
  std::size_t dim = 0;
  std::size_t derived_dim = 0;
  std::size_t nilpotency_class = 0;
  std::size_t center_dim = 0;
  std::size_t multiplier_dim = 0;
  std::size_t wedge_dim = 0;
  std::string wedge_type;
  std::size_t diagonal_dim = 0;
  std::size_t tensor_dim = 0;
  std::string tensor_type;
  std::size_t exterior_center_dim = 0;
  bool capable = false;
};

/// Throws NotNilpotent for non-nilpotent input.
InvariantReport compute_invariants(const LieAlgebra& algebra, std::string label);

ordered_json to_json(const InvariantReport& report);
std::string csv_header();
std::string to_csv(const InvariantReport& report);
std::string to_pretty(const InvariantReport& report);

enum class Verdict { Pass, Fail, Skip };
std::string to_string(Verdict v);

struct SuiteRow {
  std::string key;
  std::string invariant;
  std::string expected;
  std::string computed;
  std::string source;
  Verdict verdict = Verdict::Fail;
};

struct SuiteResult {
  std::string suite;
  std::string field;
  std::vector<SuiteRow> rows;

  std::size_t count(Verdict v) const;
  bool passed() const { return count(Verdict::Fail) == 0; }
};

struct SuiteOptions {
  Field field = Field::rationals();
  std::vector<mpq_class> epsilons = default_epsilon_samples();
  unsigned jobs = 1;
};

/// dim4, multipliers5, exterior5, diagonal5, tensor5, multipliers6,
/// exterior6, census, kunneth, theorem2.
std::vector<std::string> suite_ids();

/// Rows are computed concurrently with options.jobs workers and returned in
/// table order. Throws UnknownKey for an unknown id.
SuiteResult run_suite(const std::string& id, const SuiteOptions& options = {});

ordered_json to_json(const SuiteResult& result);
/// One line per row, a summary line, and a JSON diff line per failing row.
std::string to_text(const SuiteResult& result);

/// Golden tables compiled into the binary, by suite id.
const std::map<std::string, std::string>& golden_files();

}  // namespace liecap
