#pragma once

#include <complex>
#include <vector>

namespace kgslab {

using cplx = std::complex<double>;

/// Cached FFTW plans per grid size. Plans are created with
/// FFTW_ESTIMATE | FFTW_UNALIGNED so results are reproducible run-to-run
/// and buffers can live in ordinary std::vector storage.
/// Plan creation is serialized; execution is thread-safe.
class FftEngine {
public:
  /// Unnormalized forward DFT (e^{-i k x} convention), out-of-place.
  static void forward(int n, const cplx* in, cplx* out);
  /// Unnormalized backward DFT, out-of-place.
  static void backward(int n, const cplx* in, cplx* out);
};

} // namespace kgslab
