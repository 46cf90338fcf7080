#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "eurcs/numeric.hpp"
#include "eurcs/unipoly.hpp"

namespace eurcs {

/// Permutation of [m] in one-line notation.
struct Permutation {
  explicit Permutation(std::vector<int> one_line);  // validates bijection of [m]
  int size() const { return static_cast<int>(image.size()); }
  std::vector<int> image;
};

struct DescentStats {
  std::vector<int> descent_tops;  // sorted; subset of [2, m]
  std::vector<int> ascent_tops;   // sorted; subset of [2, m]
  int des = 0;                    // |descent_tops|
};

DescentStats descent_stats(const Permutation& p);

/// Multivariate Eulerian polynomial at brute-force scale: coefficients keyed
/// by (descent-top mask, ascent-top mask), bit t standing for the tag t.
/// Tag 1 never occurs (1 is never a top).
struct MultiPoly {
  int n = 0;
  bool with_ascents = false;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Integer> coeff;

  static std::uint32_t mask_of(const std::vector<int>& tags);
  /// Coefficient of the monomial with the given top sets (0 when absent).
  const Integer& coefficient(std::uint32_t descent_mask, std::uint32_t ascent_mask = 0) const;
};

int default_brute_force_cap();  // 8: S_9 enumerates in seconds, S_11 does not

/// Full enumeration of S_{n+1} summing the descent-top (and optionally
/// ascent-top) monomials. Streaming; nothing of factorial size is stored.
MultiPoly eulerian_bruteforce(int n, bool include_ascents = false,
                              int cap = default_brute_force_cap());

/// Shared cache of the ascents-suppressed polynomial, keyed by n.
const MultiPoly& eulerian_bruteforce_cached(int n, int cap = default_brute_force_cap());

/// Number of positions i with sigma_i > sigma_{i+1} and sigma_i in X
/// (descent bottoms unrestricted).
int count_x_descents(const Permutation& p, const std::vector<int>& X);

/// A_n(x,1) restricted to the line t -> t * direction; direction supplies the
/// rational weights for x_2..x_{n+1}. Constant term 1, degree <= n.
UniPoly restrict_to_line(int n, const std::vector<Rational>& direction,
                         int cap = default_brute_force_cap());

struct RzVerdict {
  int degree = 0;      // degree of the restricted polynomial
  int real_roots = 0;  // distinct real roots (Sturm)
  bool real_rooted = false;
};

/// Real-rootedness of the line restriction of A_n(x,1) along `direction`.
RzVerdict rz_direction_check(int n, const std::vector<Rational>& direction,
                             int cap = default_brute_force_cap());

}  // namespace eurcs
