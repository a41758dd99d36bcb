#pragma once

#include <span>
#include <vector>

namespace gbc {

/// Signature of a sequence of distinct values: +1/-1 by inversion parity.
int permutation_sign(std::span<const int> seq);

/// Sorts `seq` ascending; returns the sign of the sorting permutation,
/// or 0 if the sequence has a repeated value.
int sort_with_sign(std::vector<int>& seq);

/// True if seq is a permutation of 1..n.
bool is_permutation_of_1n(std::span<const int> seq, int n);

} // namespace gbc
