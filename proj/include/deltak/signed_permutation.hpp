#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "deltak/rational.hpp"

namespace deltak {

/// Element of the hyperoctahedral group on [n, n̄]. images[k-1] = w(k),
/// with a barred value ī stored as -i.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> images);
  static SignedPermutation identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  /// w(k) for k in [n], signed.
  int operator()(int k) const { return images_[k - 1]; }
  /// w applied to a signed element (w(ī) = w(i) barred).
  int apply(int signed_elem) const;
  const std::vector<int>& images() const { return images_; }

  SignedPermutation inverse() const;
  /// (a * b)(k) = a(b(k))
  friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
    return a.images_ < b.images_;
  }

  /// w * (i, i+1) for 1 <= i < n, or w * (n, n̄) for i == n.
  SignedPermutation times_simple(int i) const;

  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// 2^n n!
std::uint64_t group_order(int n);

/// The index-th element in a fixed order (sign pattern major, then
/// permutation in lexicographic rank). Lets workers split the group.
SignedPermutation unrank_signed_permutation(int n, std::uint64_t index);

/// Calls f on every element of W in unrank order.
void for_each_signed_permutation(int n, const std::function<void(const SignedPermutation&)>& f);

std::vector<SignedPermutation> all_signed_permutations(int n);

/// Signed unit vector e_i (e_ī = -e_i) in Z^n.
IntVec signed_unit(int n, int signed_elem);

}  // namespace deltak
