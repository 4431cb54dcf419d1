#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsc/catalog.hpp"
#include "hsc/linalg.hpp"
#include "hsc/weyl.hpp"

namespace hsc {

struct LieClosureReport {
  bool closes = false;
  // constants[i][j][k]: [g_i, g_j] = sum_k constants[i][j][k] g_k (filled on success)
  std::vector<std::vector<Vector>> constants;
  // first pair (i, j) whose bracket leaves the span
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  std::size_t pairs_checked = 0;
};

LieClosureReport lie_closure_check(const std::vector<WeylOperator>& gens);
LieClosureReport lie_closure_check(const std::vector<NamedOperator>& gens);

// Basis of su(1,2) in the order H1, H2, X1, X2, X3, Y1, Y2, Y3.
inline constexpr std::array<const char*, 8> kSu12Names{"H1", "H2", "X1", "X2", "X3", "Y1", "Y2", "Y3"};

// Bracket table: kSu12Table[row][col] = coefficients of [row, col] in the basis.
using Su12Entry = std::array<int, 8>;
extern const std::array<std::array<Su12Entry, 8>, 8> kSu12Table;

struct Su12PairCheck {
  std::size_t left = 0;
  std::size_t right = 0;
  bool ok = false;
  std::string expected;  // table entry in basis names, e.g. "-2Y3"
  std::string actual;    // operator text of the computed commutator when it differs
};

struct Su12Report {
  std::size_t n = 0;
  std::vector<Su12PairCheck> pairs;  // all 28 unordered pairs (i < j)
  std::size_t passed() const;
  bool all_pass() const { return passed() == pairs.size(); }
};

std::string su12_entry_string(const Su12Entry& e);
Su12Report verify_su12_table(std::size_t n);

}  // namespace hsc
