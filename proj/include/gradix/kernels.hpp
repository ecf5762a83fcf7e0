#pragma once

// Data-parallel loops. Every kernel has a serial reference path; the parallel
// path splits independent items across OpenMP threads and must return exactly
// what the serial path returns.

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "gradix/groebner.hpp"

namespace gradix {

enum class Exec { Serial, Parallel };

Exec default_exec();
void set_default_exec(Exec exec);
/// Number of OpenMP threads a parallel kernel will use (1 without OpenMP).
int parallel_threads();
void set_parallel_threads(int threads);

/// Runs fn(i) for i in [0, n). Exceptions thrown by fn are rethrown (the one
/// from the smallest index wins) after the loop finishes.
template <typename Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
  std::vector<std::exception_ptr> errors(n);
  if (exec == Exec::Parallel) {
    const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<Polynomial> batch_normal_forms(const GroebnerBasis& basis, std::span<const Polynomial> inputs,
                                           Exec exec = default_exec());
/// Normal forms of the monomials m_i (coefficient 1).
std::vector<Polynomial> monomial_normal_forms(const GroebnerBasis& basis, std::span<const Monomial> monomials,
                                              Exec exec = default_exec());

}  // namespace gradix
