#pragma once

// Numerical realization of normal-ordered operators x^a p^b d_x^c d_p^d on a
// periodic grid. Derivatives are Fourier multipliers; a derivative purely in x
// (or purely in p) only transforms along that axis.

#include <memory>
#include <span>
#include <vector>

#include "wigner/diffop.hpp"
#include "wigner/kernels.hpp"

namespace wigner {

struct CompiledTerm {
  int a = 0, b = 0, c = 0, d = 0;
  cplx coef;
};

// Floating-point image of a DiffOpExpr, terms merged by (a, b, c, d).
struct CompiledOperator {
  std::vector<CompiledTerm> terms;

  static CompiledOperator from(const DiffOpExpr& e);
  void add(const CompiledTerm& t);
  CompiledOperator& operator+=(const CompiledOperator& o);
  CompiledOperator& operator*=(cplx s);
};

// Owns FFTW plans and scratch buffers for one grid. Not safe for concurrent
// use; create one per thread.
class SpectralEngine {
 public:
  explicit SpectralEngine(const PhaseSpaceGrid& grid, Exec exec = default_exec());
  ~SpectralEngine();
  SpectralEngine(const SpectralEngine&) = delete;
  SpectralEngine& operator=(const SpectralEngine&) = delete;

  const PhaseSpaceGrid& grid() const { return grid_; }
  Exec exec() const { return exec_; }

  // out = op(in). `in` and `out` may alias.
  void apply(const CompiledOperator& op, std::span<const cplx> in, std::span<cplx> out);
  // out = d_x^c d_p^d in
  void derivative(std::span<const cplx> in, std::span<cplx> out, int c, int d);

  // Number of one-dimensional batch passes of the last apply (rows + columns,
  // forward + inverse). Used by tests and the benchmark.
  int last_pass_count() const { return passes_; }

  kernels::Moments moments(std::span<const cplx> v);
  cplx sum(std::span<const cplx> v);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  PhaseSpaceGrid grid_;
  Exec exec_;
  int passes_ = 0;
};

}  // namespace wigner
