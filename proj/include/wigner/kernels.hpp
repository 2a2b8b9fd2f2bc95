#pragma once

// Data-parallel inner loops of the grid code. Every kernel exists twice: a
// plain serial reference (kernels::serial) and an OpenMP version
// (kernels::omp). Reductions accumulate one partial sum per grid row and add
// the rows in order, so results do not depend on the thread count.

#include <span>
#include <vector>

#include "wigner/grid.hpp"

struct fftw_plan_s;

namespace wigner {

enum class Exec { Serial, Parallel };

// Parallel when OpenMP reports more than one thread.
Exec default_exec();
int max_threads();

namespace kernels {

// (i k)^c per grid index, Nyquist entry zeroed for odd c; row-major tables
// indexed [order][index].
struct WaveTables {
  std::vector<std::vector<cplx>> ikx;
  std::vector<std::vector<cplx>> ikp;
};

// x_i^a and p_j^b.
struct PowerTables {
  std::vector<std::vector<double>> x;
  std::vector<std::vector<double>> p;
};

struct SpectralTerm {
  cplx coef;
  int c;
  int d;
};

struct WeightTerm {
  cplx coef;
  int a;
  int b;
};

struct Moments {
  double s0 = 0, sx = 0, sp = 0, sxx = 0, spp = 0, sww = 0;
  double min_value = 0;
};

namespace serial {
// out = in * sum_t coef_t (i kx)^c_t (i kp)^d_t
void spectral_weight(std::span<const cplx> in, std::span<cplx> out, int nx, int np,
                     std::span<const SpectralTerm> terms, const WaveTables& tables);
// out += src * sum_t coef_t x^a_t p^b_t
void accumulate_weighted(std::span<cplx> out, std::span<const cplx> src, int nx, int np,
                         std::span<const WeightTerm> terms, const PowerTables& tables);
// Runs a planned batch transform on `count` equal blocks spaced `block` elements apart.
void fft_blocks(fftw_plan_s* plan, cplx* data, int count, size_t block);
// out = alpha x + beta y
void lincomb(std::span<cplx> out, cplx alpha, std::span<const cplx> x, cplx beta, std::span<const cplx> y);
cplx row_sum(std::span<const cplx> v, int nx, int np);
Moments moments(std::span<const cplx> v, int nx, int np, const PowerTables& tables);
bool all_finite(std::span<const cplx> v);
}  // namespace serial

// Same contracts as the serial reference.
namespace omp {
void spectral_weight(std::span<const cplx> in, std::span<cplx> out, int nx, int np,
                     std::span<const SpectralTerm> terms, const WaveTables& tables);
void accumulate_weighted(std::span<cplx> out, std::span<const cplx> src, int nx, int np,
                         std::span<const WeightTerm> terms, const PowerTables& tables);
void fft_blocks(fftw_plan_s* plan, cplx* data, int count, size_t block);
void lincomb(std::span<cplx> out, cplx alpha, std::span<const cplx> x, cplx beta, std::span<const cplx> y);
cplx row_sum(std::span<const cplx> v, int nx, int np);
Moments moments(std::span<const cplx> v, int nx, int np, const PowerTables& tables);
bool all_finite(std::span<const cplx> v);
}  // namespace omp

}  // namespace kernels
}  // namespace wigner
