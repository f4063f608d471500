#pragma once

#include "lf/laurent.hpp"

namespace lf::test {

inline LaurentPolynomial p2_poly() { return LaurentPolynomial(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{-1, -1}, 1}}); }

// the index-two candidate
inline LaurentPolynomial f_index_two() {
  return LaurentPolynomial(3, {{{6, -4, -5}, 1},
                               {{3, -2, -2}, 2},
                               {{2, -3, -2}, 2},
                               {{1, 0, 0}, 1},
                               {{0, 1, 0}, 1},
                               {{0, 0, 1}, 1},
                               {{0, -1, 0}, 1},
                               {{-1, -1, 1}, 2},
                               {{-2, -2, 1}, 1}});
}

// rigid polynomial on P519468 and its ninth mutation
inline LaurentPolynomial f_p519468() {
  return LaurentPolynomial(3, {{{1, 0, 0}, 1},
                               {{1, -2, 3}, 1},
                               {{0, 2, -1}, 1},
                               {{0, 1, 0}, 1},
                               {{-1, 1, -2}, 1},
                               {{-2, 3, -3}, 1}});
}

inline LaurentPolynomial f9() {
  return LaurentPolynomial(3, {{{1, 1, -1}, 1},
                               {{1, -2, -2}, 1},
                               {{1, -3, -2}, 1},
                               {{0, 1, -1}, 1},
                               {{0, 0, 1}, 1},
                               {{0, -2, -2}, 2},
                               {{0, -3, -2}, 3},
                               {{-1, -2, -2}, 1},
                               {{-1, -3, -2}, 3},
                               {{-2, -3, -2}, 1}});
}

inline LaurentPolynomial f_p512391() {
  return LaurentPolynomial(3, {{{1, 0, 0}, 1},
                               {{0, 1, 0}, 1},
                               {{0, 0, 1}, 1},
                               {{-1, -1, -1}, 1},
                               {{-1, -1, -2}, 2},
                               {{-1, -3, -4}, 1},
                               {{-2, -3, -3}, 1},
                               {{-2, -3, -4}, 1}});
}

inline LaurentPolynomial f2() {
  return LaurentPolynomial(3, {{{1, -1, 2}, 1},
                               {{1, 0, -1}, 1},
                               {{0, 0, -1}, 1},
                               {{0, 1, -3}, 1},
                               {{-1, 1, -3}, 2},
                               {{-2, 1, -3}, 1},
                               {{-1, 2, -3}, 2},
                               {{-2, 2, -3}, 2},
                               {{-2, 3, -3}, 1}});
}

}  // namespace lf::test
