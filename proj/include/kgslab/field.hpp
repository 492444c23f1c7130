#pragma once

#include "kgslab/fft.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace kgslab {

/// Square periodic grid. Samples sit at x_i = -L/2 + (i+1/2)h with h = L/n,
/// so no sample lands on the origin (keeps x/|x| well defined everywhere).
struct GridSpec {
  int n = 0;            // points per axis, power of two, >= 16
  double box_length = 0; // physical side length L

  double h() const { return box_length / n; }
  double coord(int i) const { return -0.5 * box_length + (i + 0.5) * h(); }
  /// Integer frequency for storage index i (FFTW order), in [-n/2, n/2).
  int freq_index(int i) const { return i <= n / 2 - 1 ? i : i - n; }
  /// Physical frequency xi = 2 pi k / L.
  double xi(int i) const { return 2.0 * M_PI * freq_index(i) / box_length; }
  double xi_max() const { return M_PI * n / box_length; }

  bool operator==(const GridSpec&) const = default;
};

void validate_grid(const GridSpec& g);

/// Complex samples of a function on the periodic grid, row-major (ix * n + iy).
struct Field2D {
  int n = 0;
  double box_length = 0;
  bool is_real = false;
  std::vector<cplx> values;

  Field2D() = default;
  Field2D(const GridSpec& g, bool real_flag = false);

  GridSpec grid() const { return {n, box_length}; }
  double h() const { return box_length / n; }
  size_t size() const { return values.size(); }
  cplx& at(int ix, int iy) { return values[static_cast<size_t>(ix) * n + iy]; }
  const cplx& at(int ix, int iy) const { return values[static_cast<size_t>(ix) * n + iy]; }

  /// Largest sample magnitude.
  double max_abs() const;
  /// Checks the is_real invariant (imag <= 1e-12 * max magnitude) and
  /// discards the imaginary roundoff. Throws if the flag is a lie.
  void enforce_real();
};

/// Fill a field from a pointwise function of the physical coordinates.
Field2D make_field(const GridSpec& g, const std::function<cplx(double, double)>& f,
                   bool real_flag = false);
Field2D zero_field(const GridSpec& g, bool real_flag = true);

/// Fourier coefficients in FFTW index order; coeffs are the DFT scaled by
/// 1/n^2, so Parseval reads ||f||_{L^2}^2 = L^2 * sum |coeffs|^2 and the
/// continuum transform is approximated by fhat(xi_k) ~ L^2 * coeffs[k].
struct SpectralField2D {
  int n = 0;
  double box_length = 0;
  std::vector<cplx> coeffs;

  GridSpec grid() const { return {n, box_length}; }
  cplx& at(int ix, int iy) { return coeffs[static_cast<size_t>(ix) * n + iy]; }
  const cplx& at(int ix, int iy) const { return coeffs[static_cast<size_t>(ix) * n + iy]; }
};

SpectralField2D transform(const Field2D& field);
Field2D inverse_transform(const SpectralField2D& spec, bool real_hint = false);

/// Applies a Fourier multiplier: result = F^{-1}[ symbol(xi) * F[field] ].
/// The symbol is evaluated on the physical frequencies (xi1, xi2).
Field2D spectral_multiplier(const Field2D& field,
                            const std::function<cplx(double, double)>& symbol);

/// In-place multiplier applied to an already-transformed field.
void apply_symbol(SpectralField2D& spec,
                  const std::function<cplx(double, double)>& symbol);

/// L^2 norm by grid quadrature.
double l2_norm(const Field2D& f);
/// max_i |f_i - g_i|
double max_abs_diff(const Field2D& f, const Field2D& g);

/// Gradient via spectral differentiation.
std::pair<Field2D, Field2D> gradient(const Field2D& f);

} // namespace kgslab
