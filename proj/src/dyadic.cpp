#include "kgslab/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace kgslab {

double smooth_transition(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  double a = std::exp(-1.0 / t);
  double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

double lowpass_profile(double rho) { return smooth_transition(2.0 - rho); }

double mother_bump(double rho) { return lowpass_profile(rho) - lowpass_profile(2.0 * rho); }

int ladder_top_index(const GridSpec& g) {
  // Corner frequency sqrt(2) * xi_max must be inside the closing block.
  double corner = std::sqrt(2.0) * g.xi_max();
  int j = 0;
  while (std::pow(2.0, j) < corner) ++j;
  return j;
}

double ladder_symbol(int j, int j_top, double rho) {
  if (j == -1) return lowpass_profile(rho);
  if (j == j_top) return 1.0 - lowpass_profile(rho / std::pow(2.0, j));
  // annulus block: lowpass(rho/2^{j+1}) - lowpass(rho/2^j)
  return lowpass_profile(rho / std::pow(2.0, j + 1)) - lowpass_profile(rho / std::pow(2.0, j));
}

namespace {

template <class Fn>
void for_each_block(const Field2D& field, Fn&& fn) {
  GridSpec g = field.grid();
  int j_top = ladder_top_index(g);
  SpectralField2D spec = transform(field);
  SpectralField2D tmp;
  tmp.n = spec.n;
  tmp.box_length = spec.box_length;
  tmp.coeffs.resize(spec.coeffs.size());
  for (int j = -1; j <= j_top; ++j) {
    for (int i = 0; i < g.n; ++i) {
      double xi1 = g.xi(i);
      for (int k = 0; k < g.n; ++k) {
        double xi2 = g.xi(k);
        double rho = std::sqrt(xi1 * xi1 + xi2 * xi2);
        tmp.at(i, k) = spec.at(i, k) * ladder_symbol(j, j_top, rho);
      }
    }
    Field2D blk = inverse_transform(tmp, false);
    blk.is_real = field.is_real;
    fn(j, std::move(blk));
  }
}

} // namespace

DyadicLadder dyadic_decompose(const Field2D& field) {
  DyadicLadder out;
  for_each_block(field, [&](int j, Field2D blk) {
    out.index.push_back(j);
    out.blocks.push_back(std::move(blk));
  });
  return out;
}

Field2D DyadicLadder::reconstruct() const {
  if (blocks.empty()) throw std::runtime_error("empty ladder");
  Field2D out = blocks.front();
  for (size_t b = 1; b < blocks.size(); ++b)
    for (size_t i = 0; i < out.size(); ++i) out.values[i] += blocks[b].values[i];
  return out;
}

std::vector<double> dyadic_block_norms(const Field2D& field, double lp_exponent) {
  std::vector<double> out;
  double h2 = field.h() * field.h();
  for_each_block(field, [&](int, Field2D blk) {
    if (std::isinf(lp_exponent)) {
      out.push_back(blk.max_abs());
    } else {
      double s = 0;
      for (const auto& v : blk.values) s += std::pow(std::abs(v), lp_exponent);
      out.push_back(std::pow(s * h2, 1.0 / lp_exponent));
    }
  });
  return out;
}

} // namespace kgslab
