#pragma once

#include <functional>
#include <vector>

#include "deltak/delta_matroid.hpp"

namespace deltak {

/// Every delta-matroid on [n], each once, in increasing order of the
/// family bitmask. n > 4 requires allow_large (2^(2^n) families).
void enumerate_all(int n, const std::function<void(const DeltaMatroid&)>& f, bool allow_large = false);

std::vector<DeltaMatroid> all_delta_matroids(int n, bool allow_large = false);

/// Image of a family under a signed permutation of the ground set:
/// S ↦ {|w(i)| : i in S, w(i) unbarred} ∪ {|w(i)| : i ∉ S, w(i) barred}.
DeltaMatroid act(const SignedPermutation& w, const DeltaMatroid& d);

/// Lexicographically smallest family in the orbit of d under W.
DeltaMatroid canonical_form(const DeltaMatroid& d);

}  // namespace deltak
