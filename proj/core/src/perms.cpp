#include "eurcs/perms.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "eurcs/oracle.hpp"

namespace eurcs {

Permutation::Permutation(std::vector<int> one_line) : image(std::move(one_line)) {
  if (image.empty()) throw std::invalid_argument("Permutation: m >= 1 required");
  std::vector<bool> seen(image.size() + 1, false);
  for (int v : image) {
    if (v < 1 || v > static_cast<int>(image.size()) || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("Permutation: not a bijection of [m]");
    seen[static_cast<size_t>(v)] = true;
  }
}

DescentStats descent_stats(const Permutation& p) {
  DescentStats st;
  for (size_t i = 0; i + 1 < p.image.size(); ++i) {
    if (p.image[i] > p.image[i + 1])
      st.descent_tops.push_back(p.image[i]);
    else
      st.ascent_tops.push_back(p.image[i + 1]);
  }
  std::sort(st.descent_tops.begin(), st.descent_tops.end());
  std::sort(st.ascent_tops.begin(), st.ascent_tops.end());
  st.des = static_cast<int>(st.descent_tops.size());
  return st;
}

std::uint32_t MultiPoly::mask_of(const std::vector<int>& tags) {
  std::uint32_t m = 0;
  for (int t : tags) {
    if (t < 0 || t > 31) throw std::invalid_argument("MultiPoly: tag out of mask range");
    m |= 1u << t;
  }
  return m;
}

const Integer& MultiPoly::coefficient(std::uint32_t descent_mask, std::uint32_t ascent_mask) const {
  static const Integer kZero(0);
  const auto it = coeff.find({descent_mask, ascent_mask});
  return it == coeff.end() ? kZero : it->second;
}

int default_brute_force_cap() { return 8; }

MultiPoly eulerian_bruteforce(int n, bool include_ascents, int cap) {
  if (n < 1) throw std::invalid_argument("eulerian_bruteforce: n >= 1 required");
  if (n > cap)
    throw resource_error("eulerian_bruteforce: n exceeds the brute-force cap (S_" +
                         std::to_string(n + 1) + " is too large)");
  MultiPoly mp;
  mp.n = n;
  mp.with_ascents = include_ascents;
  std::vector<int> sigma(static_cast<size_t>(n) + 1);
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    std::uint32_t dmask = 0, amask = 0;
    for (size_t i = 0; i + 1 < sigma.size(); ++i) {
      if (sigma[i] > sigma[i + 1])
        dmask |= 1u << sigma[i];
      else
        amask |= 1u << sigma[i + 1];
    }
    mp.coeff[{dmask, include_ascents ? amask : 0u}] += 1;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return mp;
}

const MultiPoly& eulerian_bruteforce_cached(int n, int cap) {
  static std::mutex mutex;
  static std::map<int, MultiPoly> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, eulerian_bruteforce(n, false, cap)).first;
  return it->second;
}

int count_x_descents(const Permutation& p, const std::vector<int>& X) {
  int c = 0;
  for (size_t i = 0; i + 1 < p.image.size(); ++i)
    if (p.image[i] > p.image[i + 1] &&
        std::find(X.begin(), X.end(), p.image[i]) != X.end())
      ++c;
  return c;
}

UniPoly restrict_to_line(int n, const std::vector<Rational>& direction, int cap) {
  if (static_cast<int>(direction.size()) != n)
    throw std::invalid_argument("restrict_to_line: direction needs n entries (x_2..x_{n+1})");
  const MultiPoly& mp = eulerian_bruteforce_cached(n, cap);
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
  for (const auto& [key, c] : mp.coeff) {
    Rational prod = Rational(c);
    int deg = 0;
    for (int t = 2; t <= n + 1; ++t) {
      if (key.first & (1u << t)) {
        prod *= direction[static_cast<size_t>(t - 2)];
        ++deg;
      }
    }
    coeffs[static_cast<size_t>(deg)] += prod;
  }
  return UniPoly(std::move(coeffs));
}

RzVerdict rz_direction_check(int n, const std::vector<Rational>& direction, int cap) {
  const UniPoly p = restrict_to_line(n, direction, cap);
  if (p.is_zero())
    throw std::logic_error("rz_direction_check: zero restriction (constant term should be 1)");
  RzVerdict v;
  v.degree = p.degree();
  v.real_roots = count_real_roots(p);
  v.real_rooted = is_real_rooted(p);
  return v;
}

}  // namespace eurcs
