#include "deltak/signed_permutation.hpp"

#include <cstdlib>
#include <sstream>

#include "deltak/errors.hpp"

namespace deltak {

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(n + 1, false);
  for (int x : images_) {
    const int a = std::abs(x);
    if (a < 1 || a > n || seen[a]) throw InvalidInputError("not a signed permutation");
    seen[a] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  return SignedPermutation(std::move(img));
}

int SignedPermutation::apply(int signed_elem) const {
  const int v = images_[std::abs(signed_elem) - 1];
  return signed_elem > 0 ? v : -v;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    const int v = images_[k];
    const int idx = static_cast<int>(k) + 1;
    inv[std::abs(v) - 1] = v > 0 ? idx : -idx;
  }
  return SignedPermutation(std::move(inv));
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  std::vector<int> img(b.images_.size());
  for (std::size_t k = 0; k < img.size(); ++k) img[k] = a.apply(b.images_[k]);
  return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::times_simple(int i) const {
  std::vector<int> img = images_;
  if (i < n())
    std::swap(img[i - 1], img[i]);
  else
    img[n() - 1] = -img[n() - 1];
  return SignedPermutation(std::move(img));
}

std::string SignedPermutation::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) out << ',';
    if (images_[k] < 0)
      out << '-' << -images_[k];
    else
      out << images_[k];
  }
  out << ')';
  return out.str();
}

std::uint64_t group_order(int n) {
  std::uint64_t r = 1;
  for (int i = 1; i <= n; ++i) r *= 2 * static_cast<std::uint64_t>(i);
  return r;
}

SignedPermutation unrank_signed_permutation(int n, std::uint64_t index) {
  std::uint64_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  if (index >= fact << n) throw InvalidInputError("signed permutation index out of range");
  const std::uint64_t signs = index / fact;
  std::uint64_t perm_rank = index % fact;
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> img(n);
  std::uint64_t block = fact;
  for (int k = 0; k < n; ++k) {
    block /= (n - k);
    const std::uint64_t pick = perm_rank / block;
    perm_rank %= block;
    img[k] = pool[pick];
    pool.erase(pool.begin() + static_cast<long>(pick));
    if ((signs >> k) & 1) img[k] = -img[k];
  }
  return SignedPermutation(std::move(img));
}

void for_each_signed_permutation(int n, const std::function<void(const SignedPermutation&)>& f) {
  const std::uint64_t total = group_order(n);
  for (std::uint64_t i = 0; i < total; ++i) f(unrank_signed_permutation(n, i));
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
  std::vector<SignedPermutation> out;
  out.reserve(group_order(n));
  for_each_signed_permutation(n, [&](const SignedPermutation& w) { out.push_back(w); });
  return out;
}

IntVec signed_unit(int n, int signed_elem) {
  IntVec e(n, 0);
  e[std::abs(signed_elem) - 1] = signed_elem > 0 ? 1 : -1;
  return e;
}

}  // namespace deltak
