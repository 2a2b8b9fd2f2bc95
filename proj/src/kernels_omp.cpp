#include <cmath>
#include <limits>

#include <fftw3.h>
#include <omp.h>

#include "wigner/kernels.hpp"

namespace wigner {

int max_threads() { return omp_get_max_threads(); }

Exec default_exec() { return max_threads() > 1 ? Exec::Parallel : Exec::Serial; }

namespace kernels::omp {

void spectral_weight(std::span<const cplx> in, std::span<cplx> out, int nx, int np,
                     std::span<const SpectralTerm> terms, const WaveTables& tables) {
  const size_t nt = terms.size();
#pragma omp parallel
  {
    std::vector<cplx> row_coef(nt);
#pragma omp for schedule(static)
    for (int j = 0; j < np; ++j) {
      for (size_t t = 0; t < nt; ++t) row_coef[t] = terms[t].coef * tables.ikp[terms[t].d][j];
      const size_t off = static_cast<size_t>(j) * nx;
      for (int i = 0; i < nx; ++i) {
        cplx m = 0.0;
        for (size_t t = 0; t < nt; ++t) m += row_coef[t] * tables.ikx[terms[t].c][i];
        out[off + i] = in[off + i] * m;
      }
    }
  }
}

void accumulate_weighted(std::span<cplx> out, std::span<const cplx> src, int nx, int np,
                         std::span<const WeightTerm> terms, const PowerTables& tables) {
  const size_t nt = terms.size();
#pragma omp parallel
  {
    std::vector<cplx> row_coef(nt);
#pragma omp for schedule(static)
    for (int j = 0; j < np; ++j) {
      for (size_t t = 0; t < nt; ++t) row_coef[t] = terms[t].coef * tables.p[terms[t].b][j];
      const size_t off = static_cast<size_t>(j) * nx;
      for (int i = 0; i < nx; ++i) {
        cplx w = 0.0;
        for (size_t t = 0; t < nt; ++t) w += row_coef[t] * tables.x[terms[t].a][i];
        out[off + i] += src[off + i] * w;
      }
    }
  }
}

// fftw_execute_dft is thread safe for distinct arrays.
void fft_blocks(fftw_plan_s* plan, cplx* data, int count, size_t block) {
#pragma omp parallel for schedule(static)
  for (int k = 0; k < count; ++k) {
    auto* ptr = reinterpret_cast<fftw_complex*>(data + k * block);
    fftw_execute_dft(plan, ptr, ptr);
  }
}

void lincomb(std::span<cplx> out, cplx alpha, std::span<const cplx> x, cplx beta, std::span<const cplx> y) {
  const long n = static_cast<long>(out.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) out[k] = alpha * x[k] + beta * y[k];
}

cplx row_sum(std::span<const cplx> v, int nx, int np) {
  std::vector<cplx> partial(np);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < np; ++j) {
    cplx s = 0.0;
    for (int i = 0; i < nx; ++i) s += v[static_cast<size_t>(j) * nx + i];
    partial[j] = s;
  }
  cplx total = 0.0;
  for (const cplx& s : partial) total += s;
  return total;
}

Moments moments(std::span<const cplx> v, int nx, int np, const PowerTables& tables) {
  std::vector<Moments> rows(np);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < np; ++j) {
    Moments m;
    m.min_value = std::numeric_limits<double>::infinity();
    const double p = tables.p[1][j];
    for (int i = 0; i < nx; ++i) {
      const double w = v[static_cast<size_t>(j) * nx + i].real();
      const double x = tables.x[1][i];
      m.s0 += w;
      m.sx += x * w;
      m.sxx += x * x * w;
      m.sww += w * w;
      m.min_value = std::min(m.min_value, w);
    }
    m.sp = p * m.s0;
    m.spp = p * p * m.s0;
    rows[j] = m;
  }
  Moments total;
  total.min_value = std::numeric_limits<double>::infinity();
  for (const Moments& m : rows) {
    total.s0 += m.s0;
    total.sx += m.sx;
    total.sp += m.sp;
    total.sxx += m.sxx;
    total.spp += m.spp;
    total.sww += m.sww;
    total.min_value = std::min(total.min_value, m.min_value);
  }
  return total;
}

bool all_finite(std::span<const cplx> v) {
  const long n = static_cast<long>(v.size());
  int bad = 0;
#pragma omp parallel for schedule(static) reduction(| : bad)
  for (long k = 0; k < n; ++k)
    if (!std::isfinite(v[k].real()) || !std::isfinite(v[k].imag())) bad = 1;
  return bad == 0;
}

}  // namespace kernels::omp
}  // namespace wigner
