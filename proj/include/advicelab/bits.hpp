#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace advicelab {

struct CodecError : std::runtime_error {
    explicit CodecError(const std::string& msg) : std::runtime_error(msg) {}
};

// MSB-first bit sequence; '0'/'1' in textual form.
class BitString {
public:
    void push_bit(int b) { bits_.push_back(b ? 1 : 0); }
    void append(const BitString& other) {
        bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
    }
    // Low `width` bits of value, most significant first.
    void append_uint(unsigned __int128 value, int width);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int bit(std::size_t i) const { return bits_[i]; }

    std::string to_ascii() const;
    static BitString from_ascii(std::string_view s);

    bool operator==(const BitString& other) const = default;
    bool operator<(const BitString& other) const { return bits_ < other.bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

// Cursor over a BitString; throws CodecError past the end.
class BitReader {
public:
    explicit BitReader(const BitString& s) : s_(&s) {}

    int take_bit();
    unsigned __int128 take_uint(int width);
    std::size_t consumed() const { return pos_; }
    std::size_t remaining() const { return s_->size() - pos_; }

private:
    const BitString* s_;
    std::size_t pos_ = 0;
};

}  // namespace advicelab
