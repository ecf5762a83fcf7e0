#pragma once

// The `gradix` command line. run() is the whole program minus main(), so tests
// can drive it with string streams.
//
// Exit codes: 0 success, 1 usage or input error, 2 computation refused (out of
// certified scope), 3 a theorem-contradiction event was recorded.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gradix/groebner.hpp"
#include "gradix/star.hpp"

namespace gradix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRefused = 2;
inline constexpr int kExitContradiction = 3;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Kernel P of x -> t^{nm} + t^{nm+l}, y -> t^{(n+1)m}, z -> t^{(n+2)m},
/// m = (n+1)/2. P* is taken for the standard grading and, separately, for the
/// curve weights (nm, (n+1)m, (n+2)m).
struct MohReport {
  int n = 0;
  int l = 0;
  int m = 0;
  Ideal prime;                                    // standard grading
  std::vector<std::uint32_t> generator_degrees;  // total degrees of the reduced basis
  std::size_t local_generators = 0;              // at (x,y,z)
  StarResult star;
  std::size_t star_generators = 0;
  StarResult curve_star;                         // P* for the curve weights
  std::size_t curve_star_generators = 0;

  bool star_principal() const { return star_generators == 1; }
  bool curve_star_principal() const { return curve_star_generators == 1; }
};

/// Throws InvalidArgument unless n is odd, l > n(n+1)m and gcd(l, m) = 1.
MohReport moh_report(int n, int l, const Field& field);

}  // namespace gradix::cli
