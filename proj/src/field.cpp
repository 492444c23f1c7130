#include "kgslab/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kgslab {

void validate_grid(const GridSpec& g) {
  if (g.n < 16 || (g.n & (g.n - 1)) != 0)
    throw std::invalid_argument("grid n must be a power of two >= 16, got " +
                                std::to_string(g.n));
  if (!(g.box_length > 0))
    throw std::invalid_argument("box_length must be positive");
}

Field2D::Field2D(const GridSpec& g, bool real_flag) {
  validate_grid(g);
  n = g.n;
  box_length = g.box_length;
  is_real = real_flag;
  values.assign(static_cast<size_t>(n) * n, cplx(0.0, 0.0));
}

double Field2D::max_abs() const {
  double m = 0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

void Field2D::enforce_real() {
  if (!is_real) return;
  double m = max_abs();
  double im = 0;
  for (const auto& v : values) im = std::max(im, std::abs(v.imag()));
  if (m > 0 && im > 1e-12 * m)
    throw std::runtime_error("is_real violated: max |imag| = " + std::to_string(im));
  for (auto& v : values) v = cplx(v.real(), 0.0);
}

Field2D make_field(const GridSpec& g, const std::function<cplx(double, double)>& f,
                   bool real_flag) {
  Field2D out(g, real_flag);
  for (int i = 0; i < g.n; ++i) {
    double x = g.coord(i);
    for (int j = 0; j < g.n; ++j) out.at(i, j) = f(x, g.coord(j));
  }
  return out;
}

Field2D zero_field(const GridSpec& g, bool real_flag) { return Field2D(g, real_flag); }

SpectralField2D transform(const Field2D& field) {
  validate_grid(field.grid());
  SpectralField2D out;
  out.n = field.n;
  out.box_length = field.box_length;
  out.coeffs.resize(field.size());
  FftEngine::forward(field.n, field.values.data(), out.coeffs.data());
  double s = 1.0 / (static_cast<double>(field.n) * field.n);
  for (auto& c : out.coeffs) c *= s;
  return out;
}

Field2D inverse_transform(const SpectralField2D& spec, bool real_hint) {
  Field2D out(spec.grid(), real_hint);
  FftEngine::backward(spec.n, spec.coeffs.data(), out.values.data());
  if (real_hint) out.enforce_real();
  return out;
}

void apply_symbol(SpectralField2D& spec,
                  const std::function<cplx(double, double)>& symbol) {
  GridSpec g = spec.grid();
  for (int i = 0; i < g.n; ++i) {
    double xi1 = g.xi(i);
    for (int j = 0; j < g.n; ++j) spec.at(i, j) *= symbol(xi1, g.xi(j));
  }
}

Field2D spectral_multiplier(const Field2D& field,
                            const std::function<cplx(double, double)>& symbol) {
  SpectralField2D spec = transform(field);
  apply_symbol(spec, symbol);
  // A real field stays real under symbols with the Hermitian symmetry
  // symbol(-xi) = conj(symbol(xi)); callers relying on that get the flag
  // re-verified by enforce_real.
  Field2D out = inverse_transform(spec, false);
  out.is_real = field.is_real;
  if (out.is_real) {
    double m = out.max_abs(), im = 0;
    for (const auto& v : out.values) im = std::max(im, std::abs(v.imag()));
    if (m > 0 && im > 1e-12 * m) {
      out.is_real = false; // symbol broke realness; keep honest values
    } else {
      for (auto& v : out.values) v = cplx(v.real(), 0.0);
    }
  }
  return out;
}

double l2_norm(const Field2D& f) {
  double s = 0;
  for (const auto& v : f.values) s += std::norm(v);
  return std::sqrt(s) * f.h();
}

double max_abs_diff(const Field2D& f, const Field2D& g) {
  if (f.size() != g.size()) throw std::invalid_argument("field size mismatch");
  double m = 0;
  for (size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f.values[i] - g.values[i]));
  return m;
}

std::pair<Field2D, Field2D> gradient(const Field2D& f) {
  SpectralField2D spec = transform(f);
  GridSpec g = f.grid();
  SpectralField2D sx = spec, sy = std::move(spec);
  for (int i = 0; i < g.n; ++i) {
    double xi1 = g.xi(i);
    for (int j = 0; j < g.n; ++j) {
      double xi2 = g.xi(j);
      sx.at(i, j) *= cplx(0.0, xi1);
      sy.at(i, j) *= cplx(0.0, xi2);
    }
  }
  Field2D gx = inverse_transform(sx, false);
  Field2D gy = inverse_transform(sy, false);
  gx.is_real = gy.is_real = f.is_real;
  if (f.is_real) {
    for (auto& v : gx.values) v = cplx(v.real(), 0.0);
    for (auto& v : gy.values) v = cplx(v.real(), 0.0);
  }
  return {std::move(gx), std::move(gy)};
}

} // namespace kgslab
