#pragma once

// Seeded random ideals for the property suites and `gradix verify-thm`.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gradix/groebner.hpp"

namespace gradix {

struct CorpusOptions {
  Field field = Field::prime(3);
  std::vector<std::size_t> variable_counts{2, 3};  // cycled through
  std::uint32_t max_power = 4;                     // pure powers x_i^e, 1 <= e <= max_power
  std::size_t max_forms = 3;                       // extra homogeneous forms
  std::uint32_t max_form_degree = 3;
  std::size_t max_length = 60;                     // dim R/I, resampled above this
};

/// One (x_1..x_n)-primary ideal, standard grading, in `ring`.
Ideal random_graded_primary(const RingPtr& ring, std::mt19937_64& rng, const CorpusOptions& options = {});

/// `count` ideals over options.field in rings x,y / x,y,z / ...
std::vector<Ideal> random_graded_corpus(std::size_t count, std::uint64_t seed, const CorpusOptions& options = {});

/// Image of I under x_i -> x_i - a_i; primary to (x_1 - a_1, ..., x_n - a_n)
/// when I is primary to the variables.
Ideal translate(const Ideal& ideal, std::span<const FieldElem> point);

/// Graded primary ideals over QQ moved to a random nonzero integer point, so
/// that neither I nor its radical is graded.
std::vector<Ideal> random_translated_corpus(std::size_t count, std::uint64_t seed, const CorpusOptions& options = {});

/// Ideals J' + (t - c) in QQ[x,y,t,t^-1] with weights (0,1,1): J' is a random
/// (x,y)-primary ideal moved to a random point and c != 0. The radical is
/// never graded, and R/I* is *Artinian with t as a unit of degree one.
std::vector<Ideal> random_laurent_corpus(std::size_t count, std::uint64_t seed, const CorpusOptions& options = {});

}  // namespace gradix
