#include "deltak/enumerate.hpp"

#include <cstdlib>

#include "deltak/errors.hpp"

namespace deltak {

void enumerate_all(int n, const std::function<void(const DeltaMatroid&)>& f, bool allow_large) {
  if (n < 1) throw InvalidInputError("enumerate_all: n must be positive");
  if (n > 4 && !allow_large) throw InvalidInputError("enumerate_all: n > 4 needs the allow-large override");
  if (n > 5) throw InvalidInputError("enumerate_all: n > 5 is out of reach");
  const std::uint64_t points = std::uint64_t{1} << n;
  const std::uint64_t families = std::uint64_t{1} << points;
  std::vector<Subset> family;
  for (std::uint64_t mask = 1; mask < families; ++mask) {
    family.clear();
    for (std::uint64_t s = 0; s < points; ++s)
      if ((mask >> s) & 1) family.push_back(static_cast<Subset>(s));
    if (validate(n, family).valid) f(DeltaMatroid::unchecked(n, family));
  }
}

std::vector<DeltaMatroid> all_delta_matroids(int n, bool allow_large) {
  std::vector<DeltaMatroid> out;
  enumerate_all(n, [&](const DeltaMatroid& d) { out.push_back(d); }, allow_large);
  return out;
}

DeltaMatroid act(const SignedPermutation& w, const DeltaMatroid& d) {
  const int n = d.n();
  std::vector<Subset> image;
  image.reserve(d.size());
  for (Subset s : d.feasible()) {
    Subset t = 0;
    for (int i = 1; i <= n; ++i) {
      const bool in = (s >> (i - 1)) & 1;
      const int x = w(i);
      const bool unbarred = (x > 0) == in;
      if (unbarred) t |= Subset{1} << (std::abs(x) - 1);
    }
    image.push_back(t);
  }
  return DeltaMatroid::unchecked(n, std::move(image));
}

DeltaMatroid canonical_form(const DeltaMatroid& d) {
  DeltaMatroid best = d;
  for_each_signed_permutation(d.n(), [&](const SignedPermutation& w) {
    DeltaMatroid img = act(w, d);
    if (img.feasible() < best.feasible()) best = img;
  });
  return best;
}

}  // namespace deltak
