#pragma once

// Shared vocabulary for every table-backed structure: dense element ids,
// row-major tables, the error hierarchy, witness-bearing validity reports
// and the global size budget.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linext {

/// Dense 0-based element id. Every finite structure numbers its elements
/// 0..order-1 and stores its operations as tables of ids.
using Elem = std::uint32_t;

inline constexpr Elem kNone = std::numeric_limits<Elem>::max();

// Error hierarchy. Structural problems (bad dimensions, malformed partitions,
// schema violations) are kept apart from axiom failures, which are never
// thrown but reported through ValidityReport.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StructuralError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised for presentations that would describe an infinite structure.
class FiniteOnlyError : public PreconditionError {
 public:
  explicit FiniteOnlyError(const std::string& what)
      : PreconditionError("finite-only: " + what) {}
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Lookup outside the domain of a partial (block-diagonal) map.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Row-major rectangular table of element ids.
class Table {
 public:
  Table() = default;
  Table(std::size_t rows, std::size_t cols, Elem fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Throws StructuralError on ragged input.
  static Table from_rows(const std::vector<std::vector<Elem>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  Elem& operator()(std::size_t r, std::size_t c) noexcept {
    return data_[r * cols_ + c];
  }

  const std::vector<Elem>& data() const noexcept { return data_; }
  std::vector<Elem>& data() noexcept { return data_; }

  std::vector<std::vector<Elem>> to_rows() const;

  /// Throws StructuralError unless the table is rows x cols with every
  /// entry below `bound`.
  void require_shape(std::size_t rows, std::size_t cols, std::size_t bound,
                     std::string_view what) const;

  bool operator==(const Table&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct Violation {
  std::string axiom;
  std::vector<Elem> witness;
  std::string detail;
};

/// Outcome of an exhaustive axiom scan. Keeps the first witness found for
/// each axiom label; an empty report means "valid".
class ValidityReport {
 public:
  bool valid() const noexcept { return violations_.empty(); }
  explicit operator bool() const noexcept { return valid(); }

  const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }

  /// Ignored when `axiom` already has a witness.
  void add(std::string axiom, std::vector<Elem> witness,
           std::string detail = {});

  bool has(std::string_view axiom) const noexcept;
  const Violation* find(std::string_view axiom) const noexcept;

  /// Appends violations of `other`, prefixing their labels.
  void merge(const ValidityReport& other, std::string_view prefix = {});

  /// "valid" or a one-line list of labels with witnesses.
  std::string summary() const;

 private:
  std::vector<Violation> violations_;
};

/// Throws PreconditionError carrying the report summary if `r` is invalid.
void require_valid(const ValidityReport& r, std::string_view what);

/// Guards combinatorial blowup. Every constructor whose output size grows
/// multiplicatively takes one of these.
struct Budget {
  std::size_t max_ring_order = 64;
  std::size_t max_structure_order = 64;
  std::uint64_t max_census = std::uint64_t{1} << 20;
  std::uint64_t max_search_nodes = std::uint64_t{1} << 22;
};

/// base^exp, or nullopt once the result exceeds `limit`.
std::optional<std::uint64_t> bounded_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t limit);

}  // namespace linext
