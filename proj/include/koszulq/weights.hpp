#ifndef KOSZULQ_WEIGHTS_HPP
#define KOSZULQ_WEIGHTS_HPP

#include "ncpoly.hpp"

#include <vector>

namespace koszulq {

// Auxiliary integer weight per algebra generator and per dual generator.
// A differential is weight-homogeneous when every matrix entry connects
// basis elements of equal total weight.
struct WeightVector {
    std::vector<int> alg;
    std::vector<int> dual;

    int word_weight(const Word& w, bool dual_side) const {
        const std::vector<int>& v = dual_side ? dual : alg;
        int s = 0;
        for (Gen g : w) s += v[g];
        return s;
    }
    int pair_weight(const Word& alg_word, const Word& dual_word) const {
        return word_weight(alg_word, false) + word_weight(dual_word, true);
    }
};

} // namespace koszulq

#endif
