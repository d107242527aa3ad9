#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "advicelab/bits.hpp"
#include "advicelab/rational.hpp"

namespace advicelab {

// Colour values can exceed 64 bits (width grows with beta); 128 bits
// cover every supported parameter combination, guarded at encode time.
using Colour = unsigned __int128;

std::string colour_to_string(Colour c);

int floor_log2(std::uint64_t x);  // x >= 1
int ceil_log2(std::uint64_t x);   // x >= 1; ceil_log2(1) == 0

// Elias gamma code for k >= 1: floor(log2 k) zeros, then k in binary.
BitString gamma_encode(std::uint64_t k);
std::uint64_t gamma_decode(BitReader& r);

// Positional value of `digits` in radix floor(log2 L)+1, most
// significant digit first. Digits must lie within the radix.
Colour mixed_radix_encode(const std::vector<int>& digits, std::uint64_t L);
std::vector<int> mixed_radix_decode(Colour value, int count, std::uint64_t L);

// Bit budget of one mixed-radix digit: ceil(log2(floor(log2 L)+1)).
int colour_digit_width(std::uint64_t L);

// Advice for the timed selection algorithm. Layout, MSB first:
//   flag (1 bit): 0 = colour payload, 1 = degenerate payload
//   gamma code of log2_diam + 1
//   flag 0: colour as a fixed (beta-1)*colour_digit_width(L) bit field
//   flag 1: the ring's largest label in ceil(log2 beta) bits
struct SelectAdvice {
    bool fallback = false;
    int log2_diam = 0;
    Colour colour = 0;             // flag 0
    std::uint64_t tiny_max = 0;    // flag 1, valid when the largest label < beta
};

// Tuple arity behind the colour payload: ceil(8 / alpha).
int beta_of(const Rational& alpha);

BitString pack_select_advice(const SelectAdvice& a, const Rational& alpha, std::uint64_t L);
SelectAdvice unpack_select_advice(const BitString& bits, const Rational& alpha, std::uint64_t L);

// Closed-form cap on the packed size for a given log2_diam.
std::size_t select_advice_length_bound(int log2_diam, const Rational& alpha, std::uint64_t L);

}  // namespace advicelab
