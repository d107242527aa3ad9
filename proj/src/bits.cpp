#include "advicelab/bits.hpp"

namespace advicelab {

void BitString::append_uint(unsigned __int128 value, int width) {
    if (width < 0 || width > 127) throw CodecError("field width out of range");
    if (width < 127 && (value >> width) != 0) throw CodecError("value does not fit field width");
    for (int i = width - 1; i >= 0; --i) push_bit(static_cast<int>((value >> i) & 1));
}

std::string BitString::to_ascii() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) out.push_back(b ? '1' : '0');
    return out;
}

BitString BitString::from_ascii(std::string_view s) {
    BitString out;
    for (char c : s) {
        if (c != '0' && c != '1') throw CodecError("bit strings may only contain '0' and '1'");
        out.push_bit(c == '1');
    }
    return out;
}

int BitReader::take_bit() {
    if (pos_ >= s_->size()) throw CodecError("bit string exhausted");
    return s_->bit(pos_++);
}

unsigned __int128 BitReader::take_uint(int width) {
    if (width < 0 || width > 127) throw CodecError("field width out of range");
    unsigned __int128 v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | static_cast<unsigned>(take_bit());
    return v;
}

}  // namespace advicelab
