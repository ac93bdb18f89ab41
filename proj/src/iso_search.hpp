#pragma once

// Backtracking isomorphism search shared by quandles and MCQs.

#include <cstdint>
#include <vector>

#include "linext/core.hpp"

namespace linext::detail {

struct IsoView {
  const Table* op = nullptr;
  // Global product table with kNone across blocks; null for plain quandles.
  const Table* mul = nullptr;
  std::vector<std::size_t> block;
  std::size_t block_count = 0;
  // Isomorphism invariant per element; candidates must match exactly.
  std::vector<std::vector<std::uint64_t>> signature;
};

/// Quandle-level invariants of element a: fixed points of its right
/// translation, size of its stabiliser row, sorted cycle type.
std::vector<std::uint64_t> op_signature(const Table& op, Elem a);

std::vector<std::vector<Elem>> search_isomorphisms(const IsoView& from,
                                                   const IsoView& to,
                                                   std::size_t limit);

}  // namespace linext::detail
