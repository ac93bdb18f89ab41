#include "linext/core.hpp"

#include <algorithm>
#include <sstream>

namespace linext {

Table Table::from_rows(const std::vector<std::vector<Elem>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Table t(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw StructuralError("ragged table: row " + std::to_string(r) +
                            " has " + std::to_string(rows[r].size()) +
                            " entries, expected " + std::to_string(cols));
    }
    std::copy(rows[r].begin(), rows[r].end(), t.data_.begin() + r * cols);
  }
  return t;
}

std::vector<std::vector<Elem>> Table::to_rows() const {
  std::vector<std::vector<Elem>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r].assign(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  return out;
}

void Table::require_shape(std::size_t rows, std::size_t cols,
                          std::size_t bound, std::string_view what) const {
  if (rows_ != rows || cols_ != cols) {
    std::ostringstream os;
    os << what << ": expected " << rows << "x" << cols << " table, got "
       << rows_ << "x" << cols_;
    throw StructuralError(os.str());
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i] >= bound) {
      std::ostringstream os;
      os << what << ": entry (" << i / std::max<std::size_t>(cols_, 1) << ","
         << i % std::max<std::size_t>(cols_, 1) << ") = " << data_[i]
         << " out of range [0," << bound << ")";
      throw StructuralError(os.str());
    }
  }
}

void ValidityReport::add(std::string axiom, std::vector<Elem> witness,
                         std::string detail) {
  if (has(axiom)) return;
  violations_.push_back({std::move(axiom), std::move(witness), std::move(detail)});
}

bool ValidityReport::has(std::string_view axiom) const noexcept {
  return find(axiom) != nullptr;
}

const Violation* ValidityReport::find(std::string_view axiom) const noexcept {
  for (const auto& v : violations_) {
    if (v.axiom == axiom) return &v;
  }
  return nullptr;
}

void ValidityReport::merge(const ValidityReport& other,
                           std::string_view prefix) {
  for (const auto& v : other.violations_) {
    add(std::string(prefix) + v.axiom, v.witness, v.detail);
  }
}

std::string ValidityReport::summary() const {
  if (valid()) return "valid";
  std::ostringstream os;
  bool first = true;
  for (const auto& v : violations_) {
    if (!first) os << "; ";
    first = false;
    os << v.axiom << " at (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) os << ",";
      os << v.witness[i];
    }
    os << ")";
    if (!v.detail.empty()) os << ": " << v.detail;
  }
  return os.str();
}

void require_valid(const ValidityReport& r, std::string_view what) {
  if (!r.valid()) {
    throw PreconditionError(std::string(what) + " is invalid: " + r.summary());
  }
}

std::optional<std::uint64_t> bounded_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && acc > limit / base) return std::nullopt;
    acc *= base;
    if (acc > limit) return std::nullopt;
  }
  if (acc > limit) return std::nullopt;
  return acc;
}

}  // namespace linext
