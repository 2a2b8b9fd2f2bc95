#include "wigner/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <numbers>

#include <fftw3.h>

namespace wigner {

namespace {

// FFTW's planner is not reentrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct Kernels {
  decltype(&kernels::serial::spectral_weight) spectral_weight;
  decltype(&kernels::serial::accumulate_weighted) accumulate_weighted;
  decltype(&kernels::serial::fft_blocks) fft_blocks;
  decltype(&kernels::serial::row_sum) row_sum;
  decltype(&kernels::serial::moments) moments;
};

Kernels kernels_for(Exec e) {
  if (e == Exec::Parallel)
    return {kernels::omp::spectral_weight, kernels::omp::accumulate_weighted, kernels::omp::fft_blocks,
            kernels::omp::row_sum, kernels::omp::moments};
  return {kernels::serial::spectral_weight, kernels::serial::accumulate_weighted, kernels::serial::fft_blocks,
          kernels::serial::row_sum, kernels::serial::moments};
}

int block_count(int n, Exec e) {
  if (e == Exec::Serial) return 1;
  for (int k = std::min(n, max_threads()); k > 1; --k)
    if (n % k == 0) return k;
  return 1;
}

// (i k_m)^c, Nyquist mode dropped for odd c so real data stays real.
std::vector<cplx> wave_power(int n, double length, int c) {
  std::vector<cplx> out(n);
  for (int m = 0; m < n; ++m) {
    const int mm = m <= n / 2 ? m : m - n;
    if (c % 2 == 1 && n % 2 == 0 && m == n / 2) {
      out[m] = 0.0;
      continue;
    }
    const double k = 2.0 * std::numbers::pi * mm / length;
    out[m] = std::pow(cplx(0.0, k), c);
  }
  return out;
}

}  // namespace

CompiledOperator CompiledOperator::from(const DiffOpExpr& e) {
  CompiledOperator op;
  for (const auto& [m, c] : e.terms()) op.add({m.a, m.b, m.c, m.d, c.to_complex()});
  return op;
}

void CompiledOperator::add(const CompiledTerm& t) {
  for (auto& u : terms)
    if (u.a == t.a && u.b == t.b && u.c == t.c && u.d == t.d) {
      u.coef += t.coef;
      return;
    }
  terms.push_back(t);
}

CompiledOperator& CompiledOperator::operator+=(const CompiledOperator& o) {
  for (const auto& t : o.terms) add(t);
  return *this;
}

CompiledOperator& CompiledOperator::operator*=(cplx s) {
  for (auto& t : terms) t.coef *= s;
  return *this;
}

struct SpectralEngine::Impl {
  struct Buffer {
    cplx* data = nullptr;
    explicit Buffer(size_t n) : data(reinterpret_cast<cplx*>(fftw_malloc(sizeof(cplx) * n))) {
      std::memset(static_cast<void*>(data), 0, sizeof(cplx) * n);
    }
    ~Buffer() { fftw_free(data); }
    std::span<cplx> span(size_t n) { return {data, n}; }
  };

  size_t n;
  int nx, np;
  Kernels k;
  Buffer row, col, full, tmp, acc;
  fftw_plan row_fwd, row_inv, col_fwd, col_inv;
  int row_blocks, col_blocks;
  kernels::WaveTables waves;
  kernels::PowerTables powers;
  double lx, lp;
  const PhaseSpaceGrid grid;

  Impl(const PhaseSpaceGrid& g, Exec e)
      : n(g.size()), nx(g.nx), np(g.np), k(kernels_for(e)), row(n), col(n), full(n), tmp(n), acc(n),
        row_blocks(block_count(g.np, e)), col_blocks(block_count(g.nx, e)), lx(g.x_max - g.x_min),
        lp(g.p_max - g.p_min), grid(g) {
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    auto* buf = reinterpret_cast<fftw_complex*>(tmp.data);
    const int rows_per = np / row_blocks;
    const int cols_per = nx / col_blocks;
    std::lock_guard lock(planner_mutex());
    row_fwd = fftw_plan_many_dft(1, &nx, rows_per, buf, nullptr, 1, nx, buf, nullptr, 1, nx, FFTW_FORWARD, flags);
    row_inv = fftw_plan_many_dft(1, &nx, rows_per, buf, nullptr, 1, nx, buf, nullptr, 1, nx, FFTW_BACKWARD, flags);
    col_fwd = fftw_plan_many_dft(1, &np, cols_per, buf, nullptr, nx, 1, buf, nullptr, nx, 1, FFTW_FORWARD, flags);
    col_inv = fftw_plan_many_dft(1, &np, cols_per, buf, nullptr, nx, 1, buf, nullptr, nx, 1, FFTW_BACKWARD, flags);
    ensure_tables(1, 1, 1, 1);
  }

  ~Impl() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(row_fwd);
    fftw_destroy_plan(row_inv);
    fftw_destroy_plan(col_fwd);
    fftw_destroy_plan(col_inv);
  }

  void ensure_tables(int a, int b, int c, int d) {
    while (static_cast<int>(waves.ikx.size()) <= c) waves.ikx.push_back(wave_power(nx, lx, waves.ikx.size()));
    while (static_cast<int>(waves.ikp.size()) <= d) waves.ikp.push_back(wave_power(np, lp, waves.ikp.size()));
    while (static_cast<int>(powers.x.size()) <= a) {
      std::vector<double> v(nx);
      for (int i = 0; i < nx; ++i) v[i] = std::pow(grid.x(i), static_cast<double>(powers.x.size()));
      powers.x.push_back(std::move(v));
    }
    while (static_cast<int>(powers.p.size()) <= b) {
      std::vector<double> v(np);
      for (int j = 0; j < np; ++j) v[j] = std::pow(grid.p(j), static_cast<double>(powers.p.size()));
      powers.p.push_back(std::move(v));
    }
  }

  void rows(fftw_plan plan, cplx* data) { k.fft_blocks(plan, data, row_blocks, static_cast<size_t>(np / row_blocks) * nx); }
  void cols(fftw_plan plan, cplx* data) { k.fft_blocks(plan, data, col_blocks, static_cast<size_t>(nx / col_blocks)); }
};

SpectralEngine::SpectralEngine(const PhaseSpaceGrid& grid, Exec exec)
    : grid_(grid), exec_(exec) {
  grid.validate();
  impl_ = std::make_unique<Impl>(grid, exec);
}

SpectralEngine::~SpectralEngine() = default;

void SpectralEngine::apply(const CompiledOperator& op, std::span<const cplx> in, std::span<cplx> out) {
  Impl& m = *impl_;
  const size_t n = m.n;
  passes_ = 0;

  // Group terms by derivative order: one inverse transform per distinct (c, d).
  std::map<std::pair<int, int>, std::vector<kernels::WeightTerm>> groups;
  for (const CompiledTerm& t : op.terms) {
    if (t.coef == 0.0) continue;
    m.ensure_tables(t.a, t.b, t.c, t.d);
    groups[{t.c, t.d}].push_back({t.coef, t.a, t.b});
  }

  auto acc = m.acc.span(n);
  std::fill(acc.begin(), acc.end(), cplx(0.0));
  bool have_row = false, have_col = false, have_full = false;

  for (const auto& [cd, weights] : groups) {
    const auto [c, d] = cd;
    if (c == 0 && d == 0) {
      m.k.accumulate_weighted(acc, in, m.nx, m.np, weights, m.powers);
      continue;
    }
    std::span<const cplx> spectrum;
    double scale = 1.0;
    if (d == 0) {
      if (!have_row) {
        std::copy(in.begin(), in.end(), m.row.data);
        m.rows(m.row_fwd, m.row.data);
        ++passes_;
        have_row = true;
      }
      spectrum = m.row.span(n);
      scale = 1.0 / m.nx;
    } else if (c == 0) {
      if (!have_col) {
        std::copy(in.begin(), in.end(), m.col.data);
        m.cols(m.col_fwd, m.col.data);
        ++passes_;
        have_col = true;
      }
      spectrum = m.col.span(n);
      scale = 1.0 / m.np;
    } else {
      if (!have_full) {
        if (!have_row) {
          std::copy(in.begin(), in.end(), m.row.data);
          m.rows(m.row_fwd, m.row.data);
          ++passes_;
          have_row = true;
        }
        std::copy(m.row.data, m.row.data + n, m.full.data);
        m.cols(m.col_fwd, m.full.data);
        ++passes_;
        have_full = true;
      }
      spectrum = m.full.span(n);
      scale = 1.0 / (static_cast<double>(m.nx) * m.np);
    }
    const kernels::SpectralTerm st{scale, c, d};
    m.k.spectral_weight(spectrum, m.tmp.span(n), m.nx, m.np, {&st, 1}, m.waves);
    if (c > 0) {
      // Full transforms undo columns first; rows last.
      if (d > 0) {
        m.cols(m.col_inv, m.tmp.data);
        ++passes_;
      }
      m.rows(m.row_inv, m.tmp.data);
      ++passes_;
    } else {
      m.cols(m.col_inv, m.tmp.data);
      ++passes_;
    }
    m.k.accumulate_weighted(acc, m.tmp.span(n), m.nx, m.np, weights, m.powers);
  }
  std::copy(acc.begin(), acc.end(), out.begin());
}

void SpectralEngine::derivative(std::span<const cplx> in, std::span<cplx> out, int c, int d) {
  CompiledOperator op;
  op.add({0, 0, c, d, 1.0});
  apply(op, in, out);
}

kernels::Moments SpectralEngine::moments(std::span<const cplx> v) {
  impl_->ensure_tables(1, 1, 0, 0);
  return impl_->k.moments(v, grid_.nx, grid_.np, impl_->powers);
}

cplx SpectralEngine::sum(std::span<const cplx> v) { return impl_->k.row_sum(v, grid_.nx, grid_.np); }

}  // namespace wigner
