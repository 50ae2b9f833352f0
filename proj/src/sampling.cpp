#include "vctk/sampling.hpp"

namespace vctk {

std::size_t draw(Rng& rng, std::size_t n) {
  if (n == 0) throw InputError("draw from an empty range");
  return static_cast<std::size_t>(rng() % n);
}

BraidWord random_word(Rng& rng, std::size_t mu, std::size_t length, bool include_weak) {
  BraidWord w;
  if (mu == 0) return w;
  const std::size_t kinds = include_weak && mu >= 2 ? 5 : 3;
  while (w.size() < length) {
    const std::size_t kind = draw(rng, kinds);
    switch (kind) {
      case 0:
        if (mu >= 2) w.push_back(Move::alpha(1 + static_cast<int>(draw(rng, mu - 1))));
        break;
      case 1:
        if (mu >= 2) w.push_back(Move::beta(2 + static_cast<int>(draw(rng, mu - 1))));
        break;
      case 2: w.push_back(Move::kappa(1 + static_cast<int>(draw(rng, mu)))); break;
      default: {
        int i = 1 + static_cast<int>(draw(rng, mu));
        int j = 1 + static_cast<int>(draw(rng, mu - 1));
        if (j >= i) ++j;
        w.push_back(kind == 3 ? Move::weak_alpha(i, j) : Move::weak_beta(i, j));
      }
    }
  }
  return w;
}

DistinguishedBasis random_walk(Rng& rng, const DistinguishedBasis& seed, std::size_t steps) {
  return apply_braid_word(seed, random_word(rng, seed.size(), steps));
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps) {
  IntMatrix p = IntMatrix::identity(n);
  if (n == 0) return p;
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t i = draw(rng, n);
    if (n == 1) {
      for (std::size_t c = 0; c < n; ++c) p(i, c) = -p(i, c);
      continue;
    }
    std::size_t j = draw(rng, n - 1);
    if (j >= i) ++j;
    const long f = static_cast<long>(draw(rng, 5)) - 2;
    for (std::size_t c = 0; c < n; ++c) p(i, c) += f * p(j, c);
    if (draw(rng, 4) == 0)
      for (std::size_t c = 0; c < n; ++c) p(i, c) = -p(i, c);
  }
  return p;
}

Cycle random_cycle(Rng& rng, std::size_t n, long range) {
  IntVector v(n);
  for (auto& x : v) x = static_cast<long>(draw(rng, static_cast<std::size_t>(2 * range + 1))) - range;
  return Cycle(std::move(v));
}

std::vector<DistinguishedBasis> sample_orbit_bases(Rng& rng, const std::vector<DistinguishedBasis>& seeds,
                                                   std::size_t count, std::size_t max_steps) {
  std::vector<DistinguishedBasis> out;
  if (seeds.empty()) return out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
    out.push_back(random_walk(rng, seeds[k % seeds.size()], draw(rng, max_steps + 1)));
  return out;
}

}  // namespace vctk
