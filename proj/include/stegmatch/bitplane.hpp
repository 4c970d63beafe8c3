#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "stegmatch/errors.hpp"

namespace stegmatch {

// Bit positions within a byte are numbered 1..8 from the most significant
// bit: bit_at(b, 1) is the MSB, bit_at(b, 8) the LSB.
constexpr int bit_at(std::uint8_t b, int position) {
    return (b >> (8 - position)) & 1;
}

// Ordered stream of secret-message bits. Stored one bit per element; the
// length is exact, trailing padding is never stored.
class BitSeq {
public:
    BitSeq() = default;

    explicit BitSeq(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (std::uint8_t& b : bits_) b &= 1;
    }

    BitSeq(std::initializer_list<int> bits) {
        bits_.reserve(bits.size());
        for (int b : bits) bits_.push_back(static_cast<std::uint8_t>(b & 1));
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

    void push_back(int bit) { bits_.push_back(static_cast<std::uint8_t>(bit & 1)); }
    void reserve(std::size_t n) { bits_.reserve(n); }

    void truncate(std::size_t n) {
        if (n < bits_.size()) bits_.resize(n);
    }

    bool operator==(const BitSeq&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

// Octet <-> bit stream conversion, MSB-first within each octet.
BitSeq bits_from_octets(std::span<const std::uint8_t> octets);
std::vector<std::uint8_t> octets_from_bits(const BitSeq& seq);

// Number of 3-bit groups / 2-bit pairs in the stream, counting a padded
// final partial one.
constexpr std::size_t group_count(std::size_t bit_length) {
    return (bit_length + 2) / 3;
}
constexpr std::size_t pair_count(std::size_t bit_length) {
    return (bit_length + 1) / 2;
}

// 3-bit group / 2-bit pair at the given index, read MSB-first. Missing
// trailing bits of the final group read as zero.
int group_at(const BitSeq& seq, std::size_t group_index);
int pair_at(const BitSeq& seq, std::size_t pair_index);

// The three overlapping 3-bit windows of a byte, at bit positions
// {2,3,4}, {3,4,5} and {4,5,6}.
struct ByteWindows {
    int g1, g2, g3;
    bool operator==(const ByteWindows&) const = default;
};

constexpr ByteWindows windows_of_byte(std::uint8_t b) {
    return {(b >> 4) & 7, (b >> 3) & 7, (b >> 2) & 7};
}

// Window n of a byte for n in 1..3; window_of_byte(b, n) == the nth field
// of windows_of_byte(b).
constexpr int window_of_byte(std::uint8_t b, int n) {
    return (b >> (5 - n)) & 7;
}

// The two interior bit pairs of a byte: p1 at positions {3,4}, p2 at {5,6}.
struct BytePairs {
    int p1, p2;
    bool operator==(const BytePairs&) const = default;
};

constexpr BytePairs pairs_of_byte(std::uint8_t b) {
    return {(b >> 4) & 3, (b >> 2) & 3};
}

constexpr std::uint8_t write_lsb2(std::uint8_t b, int code) {
    return static_cast<std::uint8_t>((b & 0xFCu) | (code & 3));
}

constexpr int read_lsb2(std::uint8_t b) { return b & 3; }

constexpr std::uint8_t write_lsb1(std::uint8_t b, int bit) {
    return static_cast<std::uint8_t>((b & 0xFEu) | (bit & 1));
}

constexpr int read_lsb1(std::uint8_t b) { return b & 1; }

namespace serial {
BitSeq bits_from_octets(std::span<const std::uint8_t> octets);
std::vector<std::uint8_t> octets_from_bits(const BitSeq& seq);
} // namespace serial

} // namespace stegmatch
