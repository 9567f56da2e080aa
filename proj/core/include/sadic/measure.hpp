#pragma once

#include <cstddef>
#include <vector>

#include "sadic/cylinder.hpp"
#include "sadic/rational.hpp"

namespace sadic {

/// Default cap on the summed denominator bit-length of a cover stage.
inline constexpr std::size_t kDefaultBitBudget = std::size_t{1} << 20;

/// E_k: the hulls of every rank-k cylinder of S_(s,u).
struct CoverStage {
  int s = 3;
  int u = 0;
  std::size_t k = 0;
  std::vector<Cylinder> cylinders;
  Rational total_length;  // summed hull lengths
  Rational closed_form;   // sigma^k d_0

  bool consistent() const { return total_length == closed_form; }
};

/// sum over admissible blocks i of s^-i.
Rational sigma(int s, int u);

/// Estimated total denominator bit-length of cover_stage(s, u, k).
double stage_bit_estimate(int s, int u, std::size_t k);

/// Builds E_k from cylinder hulls. Throws ResourceError when the estimated
/// bit-length exceeds `bit_budget`, and std::logic_error if the direct sum
/// disagrees with sigma^k d_0.
CoverStage cover_stage(int s, int u, std::size_t k, std::size_t bit_budget = kDefaultBitBudget);

struct StageMeasure {
  std::size_t k = 0;
  Rational length;
};

/// lambda(E_k) for k = 1..k_max.
std::vector<StageMeasure> measure_decay_report(int s, int u, std::size_t k_max,
                                               std::size_t bit_budget = kDefaultBitBudget);

}  // namespace sadic
