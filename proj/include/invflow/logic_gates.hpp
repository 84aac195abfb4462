// Reversible logic gates over single bits.
//
// Every gate exists twice: once as its textbook truth-table formula, and once
// as an instantiation of GeneralTransformSpec over GF(2) with xor as both
// operators. The two are compared exhaustively by the tests and by selftest.

#ifndef INVFLOW_LOGIC_GATES_HPP_
#define INVFLOW_LOGIC_GATES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "invflow/invertible.hpp"

namespace invflow::gates {

using Bit = std::uint8_t;
using BitVector = std::vector<Bit>;

// Direct definitions.
BitVector feynman_direct(const BitVector& x);
BitVector toffoli_direct(const BitVector& x);
// Classical controlled swap of (control, a, b).
BitVector fredkin_direct(const BitVector& x);

// The GF(2) specs. Each block holds one bit.
GeneralTransformSpec<Bit> feynman_spec();
GeneralTransformSpec<Bit> toffoli_spec();
// Four-variable form with a leading dummy bit that must be 0 on input.
GeneralTransformSpec<Bit> fredkin_spec();

// Gates evaluated through the general transform.
BitVector feynman(const BitVector& x);
BitVector toffoli(const BitVector& x);
BitVector fredkin(const BitVector& x);

BitVector feynman_inverse(const BitVector& y);
BitVector toffoli_inverse(const BitVector& y);
BitVector fredkin_inverse(const BitVector& y);

// Every element of {0,1}^n in lexicographic order.
std::vector<BitVector> all_bit_vectors(std::size_t n);

struct PropertyResult {
  std::string name;
  bool passed;
};

// Exhaustive check of the xor/and identities the gate derivations rely on.
std::vector<PropertyResult> xor_and_property_suite();

}  // namespace invflow::gates

#endif  // INVFLOW_LOGIC_GATES_HPP_
