#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaforge/algebra.hpp"
#include "deltaforge/identities.hpp"
#include "deltaforge/matrix.hpp"

namespace deltaforge {

// ω(e_i, e_j) = omega.at(i, j)
struct Cocycle {
  ExactMatrix omega;
  static Cocycle zero(std::size_t n, Field f = Field::Q);
  bool is_zero() const { return omega.is_zero(); }
  std::string str() const;
};

// dimension n+1; x·y = xy + ω(x,y) c with c the last basis vector, c central
Algebra central_extension(const Algebra& a, const Cocycle& w);

// basis of all ω whose extension satisfies ids (at delta when they carry δ).
// Throws BaseFailsIdentities if a already fails.
std::vector<Cocycle> solve_cocycles(const Algebra& a, const std::vector<IdentityDef>& ids,
                                    std::optional<Rational> delta = std::nullopt);

struct ScanEntry {
  std::vector<Rational> coefficients;  // combination of the basis cocycles
  std::vector<std::size_t> lower_central_dims;
  std::optional<std::size_t> nilpotency_index;
  bool non_two_step = false;
};

struct ScanReport {
  std::string grid;  // what was scanned
  std::vector<ScanEntry> entries;
  std::size_t flagged() const;
};

// default grid: every 0/±1 combination with at most two nonzero coefficients
ScanReport extension_nilpotency_scan(const Algebra& a, const std::vector<Cocycle>& basis,
                                     std::optional<std::vector<std::vector<Rational>>> combinations = std::nullopt);

// split a central basis vector off: a == central_extension(base, ω) when k is last
struct CentralSplit {
  Algebra base;
  Cocycle cocycle;
};
CentralSplit split_central(const Algebra& a, std::size_t k);

}  // namespace deltaforge
