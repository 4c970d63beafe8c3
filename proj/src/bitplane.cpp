#include "stegmatch/bitplane.hpp"

#include <cstdint>

namespace stegmatch {
namespace {

// Below this size the parallel loops run serially; spawning threads for a
// handful of octets costs more than the work itself.
constexpr std::size_t kParallelGrainOctets = 1u << 14;

void expand_octet(std::uint8_t octet, std::uint8_t* out) {
    for (int k = 0; k < 8; ++k)
        out[k] = static_cast<std::uint8_t>((octet >> (7 - k)) & 1);
}

std::uint8_t pack_octet(const BitSeq& seq, std::size_t base) {
    std::uint8_t octet = 0;
    for (int k = 0; k < 8; ++k)
        octet = static_cast<std::uint8_t>((octet << 1) | seq[base + k]);
    return octet;
}

} // namespace

BitSeq bits_from_octets(std::span<const std::uint8_t> octets) {
    std::vector<std::uint8_t> bits(octets.size() * 8);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(octets.size());
#pragma omp parallel for if (octets.size() > kParallelGrainOctets)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        expand_octet(octets[static_cast<std::size_t>(i)], bits.data() + 8 * i);
    return BitSeq(std::move(bits));
}

std::vector<std::uint8_t> octets_from_bits(const BitSeq& seq) {
    if (seq.size() % 8 != 0)
        throw StegoError(ErrorCode::invalid_payload_length,
                         "bit stream length " + std::to_string(seq.size()) +
                             " is not a multiple of 8");
    std::vector<std::uint8_t> octets(seq.size() / 8);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(octets.size());
#pragma omp parallel for if (octets.size() > kParallelGrainOctets)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        octets[static_cast<std::size_t>(i)] = pack_octet(seq, 8 * static_cast<std::size_t>(i));
    return octets;
}

int group_at(const BitSeq& seq, std::size_t group_index) {
    if (group_index >= group_count(seq.size()))
        throw StegoError(ErrorCode::index_out_of_range,
                         "group index " + std::to_string(group_index) +
                             " out of range for " + std::to_string(seq.size()) + " bits");
    int group = 0;
    for (int k = 0; k < 3; ++k) {
        const std::size_t i = 3 * group_index + k;
        group = (group << 1) | (i < seq.size() ? seq[i] : 0);
    }
    return group;
}

int pair_at(const BitSeq& seq, std::size_t pair_index) {
    if (pair_index >= pair_count(seq.size()))
        throw StegoError(ErrorCode::index_out_of_range,
                         "pair index " + std::to_string(pair_index) +
                             " out of range for " + std::to_string(seq.size()) + " bits");
    int pair = 0;
    for (int k = 0; k < 2; ++k) {
        const std::size_t i = 2 * pair_index + k;
        pair = (pair << 1) | (i < seq.size() ? seq[i] : 0);
    }
    return pair;
}

namespace serial {

BitSeq bits_from_octets(std::span<const std::uint8_t> octets) {
    std::vector<std::uint8_t> bits(octets.size() * 8);
    for (std::size_t i = 0; i < octets.size(); ++i)
        expand_octet(octets[i], bits.data() + 8 * i);
    return BitSeq(std::move(bits));
}

std::vector<std::uint8_t> octets_from_bits(const BitSeq& seq) {
    if (seq.size() % 8 != 0)
        throw StegoError(ErrorCode::invalid_payload_length,
                         "bit stream length " + std::to_string(seq.size()) +
                             " is not a multiple of 8");
    std::vector<std::uint8_t> octets(seq.size() / 8);
    for (std::size_t i = 0; i < octets.size(); ++i)
        octets[i] = pack_octet(seq, 8 * i);
    return octets;
}

} // namespace serial
} // namespace stegmatch
