#pragma once

// Brute-force censuses over every (f1, f2) or (f1, f2, f3, f4) table
// assignment of a small MCQ and ring. Each assignment gets two independent
// verdicts: the condition checker, and check_mcq on the raw linear extension
// with M = R. Agreement of the two on every assignment is the census result.
//
// Assignments are numbered mixed-radix little-endian over table cells in
// row-major order: f1 cells first, then f2, then (quadruples) the f3 block
// tables in block order, then f4.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linext/alexpair.hpp"
#include "linext/quadruple.hpp"

namespace linext {

enum class CensusTarget { pairs, quadruples };
enum class CensusMode { exhaustive, sampled };

struct CensusOptions {
  /// Used when the assignment space exceeds budget.max_census.
  std::uint64_t sample_size = 10000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  /// Quadruples only: run audit_reduction on every valid assignment.
  bool verify_reduction = false;
  /// Keep one record per assignment. Sampled records carry their cells.
  bool keep_records = true;
  Budget budget;
};

struct CensusRecord {
  std::uint64_t index = 0;        // exhaustive mode
  std::vector<Elem> cells;        // sampled mode, and in mismatches
  bool structure_ok = false;      // pair_ok / quad_ok
  bool extension_ok = false;
  std::optional<bool> reduction_ok;
};

struct Census {
  CensusTarget target = CensusTarget::pairs;
  CensusMode mode = CensusMode::exhaustive;
  std::size_t mcq_order = 0;
  std::size_t ring_order = 0;
  std::size_t cell_count = 0;
  std::optional<std::uint64_t> space_size;  // nullopt if it overflows
  std::uint64_t examined = 0;
  std::uint64_t structure_valid = 0;
  std::uint64_t extension_valid = 0;
  std::uint64_t reduction_checked = 0;
  std::uint64_t reduction_failed = 0;
  std::uint64_t seed = 0;
  std::uint64_t sample_size = 0;
  std::vector<CensusRecord> records;
  std::vector<CensusRecord> mismatches;
  std::chrono::milliseconds elapsed{0};
};

/// Number of table cells an assignment fills.
std::size_t census_cell_count(CensusTarget target, const Mcq& x);

/// Decodes exhaustive assignment `index` into cell values.
std::vector<Elem> census_cells(std::uint64_t index, std::size_t cell_count,
                               std::size_t ring_order);

AlexanderPair pair_from_cells(std::shared_ptr<const Mcq> x,
                              std::shared_ptr<const FiniteRing> r,
                              const std::vector<Elem>& cells);

Quadruple quadruple_from_cells(std::shared_ptr<const Mcq> x,
                               std::shared_ptr<const FiniteRing> r,
                               const std::vector<Elem>& cells);

/// Requires a valid MCQ and ring.
Census enumerate_pairs(std::shared_ptr<const Mcq> x,
                       std::shared_ptr<const FiniteRing> r,
                       const CensusOptions& options = {});

Census enumerate_quadruples(std::shared_ptr<const Mcq> x,
                            std::shared_ptr<const FiniteRing> r,
                            const CensusOptions& options = {});

/// Machine-readable summary: counts, mismatch list, sampling parameters and
/// (optionally) timing. Without timing the output is a pure function of the
/// inputs and the seed.
nlohmann::json census_report(const Census& c, bool with_timing = true);

/// One JSON-lines record.
nlohmann::json census_record_json(const Census& c, const CensusRecord& r);

}  // namespace linext
