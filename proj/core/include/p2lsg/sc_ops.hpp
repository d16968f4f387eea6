#pragma once

// Stochastic arithmetic on packed bit-streams. Each kernel is the gate it
// models applied word-wise; none of them checks the correlation assumptions
// that make its output accurate.

#include <cstddef>

#include "p2lsg/bitstream.hpp"

namespace p2lsg {

/// AND. Unipolar product for uncorrelated inputs.
Bitstream mul_unipolar(const Bitstream& s1, const Bitstream& s2);

/// XNOR. Bipolar product for uncorrelated inputs.
Bitstream mul_bipolar(const Bitstream& s1, const Bitstream& s2);

/// AND of maximally correlated inputs: min(x1, x2).
Bitstream min_correlated(const Bitstream& s1, const Bitstream& s2);

/// 2-to-1 MUX: s1 where select is 0, s2 where select is 1.
Bitstream mux2(const Bitstream& s1, const Bitstream& s2, const Bitstream& select);

/// MUX with the second input inverted: bipolar (x1 - x2) / 2 for a 0.5 select.
Bitstream mux2_sub(const Bitstream& s1, const Bitstream& s2, const Bitstream& select);

/// 4-to-1 MUX. (sel_u, sel_v) = (0,0) -> i11, (0,1) -> i12, (1,0) -> i21,
/// (1,1) -> i22.
Bitstream mux4(const Bitstream& i11, const Bitstream& i12, const Bitstream& i21, const Bitstream& i22,
               const Bitstream& sel_u, const Bitstream& sel_v);

/// popcount(mul_unipolar(s1, s2)) without materializing the product.
std::size_t and_popcount(const Bitstream& s1, const Bitstream& s2);

/// popcount(mux2(s1, s2, select)) without materializing the output.
std::size_t mux2_popcount(const Bitstream& s1, const Bitstream& s2, const Bitstream& select);

/// popcount(mux4(...)) without materializing the output.
std::size_t mux4_popcount(const Bitstream& i11, const Bitstream& i12, const Bitstream& i21, const Bitstream& i22,
                          const Bitstream& sel_u, const Bitstream& sel_v);

}  // namespace p2lsg
