#pragma once

#include "kgslab/field.hpp"

#include <vector>

namespace kgslab {

/// C^infinity transition: 0 for t<=0, 1 for t>=1, built from e^{-1/t}.
/// This is the profile behind every smooth cutoff in the lab, so norms are
/// reproducible bit-for-bit: T(t) = a/(a+b), a = e^{-1/t}, b = e^{-1/(1-t)}.
double smooth_transition(double t);

/// Radial low-pass symbol: 1 for rho<=1, smooth_transition(2-rho) on [1,2], 0 beyond.
double lowpass_profile(double rho);

/// Mother bump phi(rho) = lowpass(rho) - lowpass(2 rho): supported in
/// {1/2 < rho < 2}, and sum_j phi(rho/2^j) = 1 for rho != 0.
double mother_bump(double rho);

/// Littlewood-Paley frequency blocks of a field. Block index -1 is the low
/// block (|xi| <~ 1); blocks 0..j_max-1 are the annuli |xi| ~ 2^(j+1); the
/// last block closes the partition up to the grid corner frequencies, so the
/// multipliers sum to exactly 1 on every grid frequency.
struct DyadicLadder {
  std::vector<int> index;        // -1, 0, 1, ..., j_max
  std::vector<Field2D> blocks;   // same order

  /// Sum of all blocks (should reproduce the field).
  Field2D reconstruct() const;
};

int ladder_top_index(const GridSpec& g);

/// Multiplier value of block j at radius rho (j = -1 is the low block).
double ladder_symbol(int j, int j_top, double rho);

DyadicLadder dyadic_decompose(const Field2D& field);

/// sup-norm of each block without materializing all blocks at once.
std::vector<double> dyadic_block_norms(const Field2D& field, double lp_exponent);

} // namespace kgslab
