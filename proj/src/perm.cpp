#include "gbc/perm.hpp"

#include <algorithm>

namespace gbc {

int permutation_sign(std::span<const int> seq) {
    int inv = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return (inv & 1) ? -1 : 1;
}

int sort_with_sign(std::vector<int>& seq) {
    int sign = 1;
    for (size_t i = 0; i < seq.size(); ++i) {
        for (size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[j] < seq[i]) {
                std::swap(seq[i], seq[j]);
                sign = -sign;
            } else if (seq[j] == seq[i]) {
                return 0;
            }
        }
    }
    // selection pass above leaves possible equal neighbors unchecked
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i] == seq[i + 1]) return 0;
    return sign;
}

bool is_permutation_of_1n(std::span<const int> seq, int n) {
    if (static_cast<int>(seq.size()) != n) return false;
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : seq) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
    }
    return true;
}

} // namespace gbc
