#include "advicelab/codec.hpp"

#include <bit>

namespace advicelab {

std::string colour_to_string(Colour c) {
    if (c == 0) return "0";
    std::string out;
    while (c > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(c % 10)));
        c /= 10;
    }
    return {out.rbegin(), out.rend()};
}

int floor_log2(std::uint64_t x) {
    if (x == 0) throw std::invalid_argument("floor_log2(0)");
    return std::bit_width(x) - 1;
}

int ceil_log2(std::uint64_t x) {
    if (x == 0) throw std::invalid_argument("ceil_log2(0)");
    return x == 1 ? 0 : std::bit_width(x - 1);
}

BitString gamma_encode(std::uint64_t k) {
    if (k == 0) throw CodecError("gamma code is defined for k >= 1");
    int n = floor_log2(k);
    BitString out;
    for (int i = 0; i < n; ++i) out.push_bit(0);
    out.append_uint(k, n + 1);
    return out;
}

std::uint64_t gamma_decode(BitReader& r) {
    int zeros = 0;
    while (r.take_bit() == 0) {
        if (++zeros > 63) throw CodecError("gamma code too long");
    }
    std::uint64_t rest = static_cast<std::uint64_t>(r.take_uint(zeros));
    return (std::uint64_t(1) << zeros) | rest;
}

int beta_of(const Rational& alpha) {
    if (alpha.num <= 0 || alpha.num > alpha.den)
        throw std::invalid_argument("alpha must lie in (0, 1]");
    return static_cast<int>((8 * alpha.den + alpha.num - 1) / alpha.num);
}

int colour_digit_width(std::uint64_t L) {
    return ceil_log2(static_cast<std::uint64_t>(floor_log2(L)) + 1);
}

Colour mixed_radix_encode(const std::vector<int>& digits, std::uint64_t L) {
    const int radix = floor_log2(L) + 1;
    const int w = colour_digit_width(L);
    if (static_cast<std::size_t>(w) * digits.size() > 127)
        throw CodecError("colour would exceed 128 bits; alpha too small for this L");
    Colour value = 0;
    for (int d : digits) {
        if (d < 0 || d >= radix) throw std::invalid_argument("digit outside radix");
        value = value * static_cast<unsigned>(radix) + static_cast<unsigned>(d);
    }
    return value;
}

std::vector<int> mixed_radix_decode(Colour value, int count, std::uint64_t L) {
    const unsigned radix = static_cast<unsigned>(floor_log2(L) + 1);
    std::vector<int> digits(count, 0);
    for (int i = count - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(value % radix);
        value /= radix;
    }
    if (value != 0) throw std::invalid_argument("value exceeds digit capacity");
    return digits;
}

BitString pack_select_advice(const SelectAdvice& a, const Rational& alpha, std::uint64_t L) {
    const int beta = beta_of(alpha);
    BitString out;
    out.push_bit(a.fallback ? 1 : 0);
    out.append(gamma_encode(static_cast<std::uint64_t>(a.log2_diam) + 1));
    if (a.fallback) {
        if (a.tiny_max >= static_cast<std::uint64_t>(beta))
            throw CodecError("degenerate payload only holds labels below beta");
        out.append_uint(a.tiny_max, ceil_log2(static_cast<std::uint64_t>(beta)));
    } else {
        const int payload = (beta - 1) * colour_digit_width(L);
        if (payload > 127) throw CodecError("colour payload exceeds 128 bits; alpha too small for this L");
        out.append_uint(a.colour, payload);
    }
    return out;
}

SelectAdvice unpack_select_advice(const BitString& bits, const Rational& alpha, std::uint64_t L) {
    const int beta = beta_of(alpha);
    BitReader r(bits);
    SelectAdvice a;
    a.fallback = r.take_bit() == 1;
    std::uint64_t coded = gamma_decode(r);
    if (coded > 63) throw CodecError("bad diameter exponent");
    a.log2_diam = static_cast<int>(coded - 1);
    if (a.fallback) {
        a.tiny_max = static_cast<std::uint64_t>(r.take_uint(ceil_log2(static_cast<std::uint64_t>(beta))));
    } else {
        const int payload = (beta - 1) * colour_digit_width(L);
        if (payload > 127) throw CodecError("colour payload exceeds 128 bits; alpha too small for this L");
        a.colour = r.take_uint(payload);
    }
    if (r.remaining() != 0) throw CodecError("trailing advice bits");
    return a;
}

std::size_t select_advice_length_bound(int log2_diam, const Rational& alpha, std::uint64_t L) {
    const int beta = beta_of(alpha);
    std::size_t gamma_len = 2 * static_cast<std::size_t>(floor_log2(static_cast<std::uint64_t>(log2_diam) + 1)) + 1;
    return 1 + gamma_len + static_cast<std::size_t>(beta - 1) * colour_digit_width(L);
}

}  // namespace advicelab
