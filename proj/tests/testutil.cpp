#include "testutil.hpp"

#include <algorithm>

namespace testutil {

std::vector<M64> sl2_box(int bound) {
  std::vector<M64> out;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d)
          if (static_cast<std::int64_t>(a) * d - static_cast<std::int64_t>(b) * c == 1)
            out.push_back({a, b, c, d});
  auto norm = [](const M64& m) {
    return std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const M64& x, const M64& y) { return norm(x) < norm(y); });
  return out;
}

bool brute_force_conjugate(const M64& a, const M64& b, int bound) {
  static std::vector<M64> cache;
  static int cache_bound = -1;
  if (cache_bound != bound) {
    cache = sl2_box(bound);
    cache_bound = bound;
  }
  for (const M64& g : cache)
    if (mul(g, a) == mul(b, g)) return true;
  return false;
}

IntMatrix random_sl2_word(Rng& rng, int length) {
  static const std::array<M64, 4> letters{M64{1, 1, 0, 1}, M64{1, -1, 0, 1}, M64{1, 0, 1, 1},
                                          M64{1, 0, -1, 1}};
  std::uniform_int_distribution<int> pick(0, 3);
  IntMatrix m = IntMatrix::identity(2);
  for (int i = 0; i < length; ++i) m = m * from_m64(letters[pick(rng)]);
  return m;
}

}  // namespace testutil
