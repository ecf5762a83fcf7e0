#include "gradix/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gradix {

namespace {
std::atomic<Exec> g_default_exec{Exec::Parallel};
}

Exec default_exec() { return g_default_exec.load(); }
void set_default_exec(Exec exec) { g_default_exec.store(exec); }

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_parallel_threads(int threads) {
#ifdef _OPENMP
  omp_set_num_threads(threads < 1 ? 1 : threads);
#else
  (void)threads;
#endif
}

std::vector<Polynomial> batch_normal_forms(const GroebnerBasis& basis, std::span<const Polynomial> inputs, Exec exec) {
  std::vector<Polynomial> out(inputs.size(), Polynomial(basis.ring(), basis.order()));
  for_each_index(inputs.size(), exec, [&](std::size_t i) { out[i] = basis.reduce(inputs[i]); });
  return out;
}

std::vector<Polynomial> monomial_normal_forms(const GroebnerBasis& basis, std::span<const Monomial> monomials,
                                              Exec exec) {
  std::vector<Polynomial> out(monomials.size(), Polynomial(basis.ring(), basis.order()));
  const FieldElem one = basis.ring()->field().one();
  for_each_index(monomials.size(), exec, [&](std::size_t i) {
    out[i] = basis.reduce(Polynomial::term(basis.ring(), monomials[i], one, basis.order()));
  });
  return out;
}

}  // namespace gradix
