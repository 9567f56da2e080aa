#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sadic/digits.hpp"
#include "sadic/dimension.hpp"
#include "sadic/rational.hpp"

namespace sadic {

/// Digit counts N_i(x, k) over the first k digits of an expansion.
struct FrequencyProfile {
  int s = 3;
  std::size_t k = 0;
  std::vector<std::size_t> counts;  // indexed by digit

  Rational frequency(int digit) const;
  std::vector<Rational> frequencies() const;
};

/// Exact counts over the first k digits, unrolling any period. Throws
/// RangeError when a finite word has fewer than k digits.
FrequencyProfile digit_frequencies(const DigitString& d, std::size_t k);

/// (s-2)(s-1)/(2s): the zero frequency forced on an element of S_(s,0) whose
/// nonzero digits all occur with frequency 1/s.
Rational structural_zero_frequency(int s);

struct NormalVerdict {
  int s = 3;
  bool exists = false;
  Rational zero_frequency;  // structural_zero_frequency(s)
  Rational uniform;         // 1/s
  std::string explanation;
};

/// Normal numbers occur in the union of the S_(s,u) only when the forced zero
/// frequency equals 1/s, which happens for s = 3 alone.
NormalVerdict normal_candidate_exists(int s);

struct NormalityBounds {
  DimensionResult lower;  // dim of the {021, 102} set
  DimensionResult upper;  // dim S_(3,0)
  ClosedForm lower_exact;
  ClosedForm upper_exact;
};

/// Dimension bracket for the normal numbers of S_(3,0), each side solved
/// numerically and checked against its closed form to 1e-9.
NormalityBounds normality_dimension_bounds();

/// Blocks fully decoded within a digit prefix, and the unfinished run of u.
struct PrefixDecode {
  Digits blocks;
  std::size_t consumed = 0;  // digits covered by complete blocks
  std::size_t open_run = 0;  // copies of u after the last complete block
};

/// Decodes the first k digits of d as blocks for marker u. Throws NotAMember
/// at the first violation inside the prefix.
PrefixDecode decode_prefix(const DigitString& d, int u, std::size_t k);

struct IdentityResidual {
  long residual = 0;        // N_u - sum_{c >= 2, c != u} (c-1) N_c
  bool on_boundary = true;  // k closes a block
  long bound = 0;           // s - 2: the largest residual off a boundary
  std::string note;
};

/// Counts of the filler digit against the fillers implied by the block
/// closers. Zero exactly when k ends a block; off a boundary the residual is
/// the size of the unfinished run and `note` says so.
IdentityResidual structural_identity_residual(const DigitString& d, int u, std::size_t k);

}  // namespace sadic
