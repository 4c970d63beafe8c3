#include "stegmatch/codec_groupmatch.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace stegmatch::group3 {
namespace {

constexpr std::size_t kExtractChunk = 1u << 14;

StegoHeader checked_header(const RgbRaster& stego) {
    const StegoHeader header = read_header(stego);
    if (header.algorithm_id != static_cast<std::uint8_t>(Algorithm::group3))
        throw StegoError(ErrorCode::unsupported_algorithm,
                         std::string("stego image was embedded with ") +
                             algorithm_name(static_cast<Algorithm>(header.algorithm_id)));
    return header;
}

void append_group(BitSeq& out, int group) {
    out.push_back((group >> 2) & 1);
    out.push_back((group >> 1) & 1);
    out.push_back(group & 1);
}

} // namespace

EmbedResult embed(const RgbRaster& cover, const BitSeq& secret) {
    if (secret.size() > 0xFFFFFFFFu)
        throw StegoError(ErrorCode::invalid_payload_length,
                         "payload of " + std::to_string(secret.size()) +
                             " bits exceeds the 32-bit header length field");
    const std::size_t total_groups = group_count(secret.size());

    StegoHeader header;
    header.magic = kStegoMagic;
    header.algorithm_id = static_cast<std::uint8_t>(Algorithm::group3);
    header.payload_bit_length = static_cast<std::uint32_t>(secret.size());
    RgbRaster stego = write_header(cover, header);

    EmbedStats stats;
    std::size_t g = 0;
    int group = total_groups > 0 ? group_at(secret, 0) : 0;
    for (std::size_t c = kHeaderComponents;
         c < stego.component_count() && g < total_groups; ++c) {
        const int code = try_match_byte(stego.components[c], group);
        stego.components[c] = write_lsb2(stego.components[c], code);
        ++stats.components_visited;
        if (code != 0) {
            ++stats.matches[static_cast<std::size_t>(code - 1)];
            stats.payload_bits_embedded += 3;
            ++g;
            if (g < total_groups) group = group_at(secret, g);
        } else {
            ++stats.skips;
        }
    }

    if (g < total_groups)
        throw CapacityError("group3 placed " + std::to_string(g) + " of " +
                                std::to_string(total_groups) + " groups (" +
                                std::to_string(std::min(3 * g, secret.size())) + " of " +
                                std::to_string(secret.size()) +
                                " bits) before running out of components",
                            std::min(3 * g, secret.size()), secret.size());
    return {std::move(stego), stats};
}

// Two-pass parallel decode. The bits recovered from a matched component
// land at an output slot determined by how many matches precede it, so the
// first pass counts matches per chunk and an exclusive scan turns the
// counts into per-chunk output offsets for the second pass.
BitSeq extract(const RgbRaster& stego) {
    const StegoHeader header = checked_header(stego);
    const std::size_t total_groups = group_count(header.payload_bit_length);
    const std::size_t n = stego.component_count();

    const std::size_t chunks = (n - kHeaderComponents + kExtractChunk - 1) / kExtractChunk;
    std::vector<std::size_t> offsets(chunks + 1, 0);

#pragma omp parallel for if (chunks > 1)
    for (std::ptrdiff_t ch = 0; ch < static_cast<std::ptrdiff_t>(chunks); ++ch) {
        const std::size_t begin = kHeaderComponents + static_cast<std::size_t>(ch) * kExtractChunk;
        const std::size_t end = std::min(begin + kExtractChunk, n);
        std::size_t found = 0;
        for (std::size_t c = begin; c < end; ++c)
            found += read_lsb2(stego.components[c]) != 0;
        offsets[static_cast<std::size_t>(ch) + 1] = found;
    }
    for (std::size_t ch = 0; ch < chunks; ++ch) offsets[ch + 1] += offsets[ch];

    if (offsets[chunks] < total_groups)
        throw StegoError(ErrorCode::corrupt_payload,
                         "component stream ended after " + std::to_string(offsets[chunks]) +
                             " of " + std::to_string(total_groups) + " declared groups");

    std::vector<std::uint8_t> bits(3 * total_groups);
#pragma omp parallel for if (chunks > 1)
    for (std::ptrdiff_t ch = 0; ch < static_cast<std::ptrdiff_t>(chunks); ++ch) {
        std::size_t g = offsets[static_cast<std::size_t>(ch)];
        if (g >= total_groups) continue;
        const std::size_t begin = kHeaderComponents + static_cast<std::size_t>(ch) * kExtractChunk;
        const std::size_t end = std::min(begin + kExtractChunk, n);
        for (std::size_t c = begin; c < end && g < total_groups; ++c) {
            const int code = read_lsb2(stego.components[c]);
            if (code == 0) continue;
            const int group = window_of_byte(stego.components[c], code);
            bits[3 * g] = static_cast<std::uint8_t>((group >> 2) & 1);
            bits[3 * g + 1] = static_cast<std::uint8_t>((group >> 1) & 1);
            bits[3 * g + 2] = static_cast<std::uint8_t>(group & 1);
            ++g;
        }
    }

    BitSeq out(std::move(bits));
    out.truncate(header.payload_bit_length);
    return out;
}

std::size_t capacity_best_case(const RgbRaster& raster) {
    if (raster.component_count() < kHeaderComponents)
        throw StegoError(ErrorCode::image_too_small,
                         "image has " + std::to_string(raster.component_count()) +
                             " components; the header needs " +
                             std::to_string(kHeaderComponents));
    return 3 * (raster.component_count() - kHeaderComponents);
}

namespace serial {

BitSeq extract(const RgbRaster& stego) {
    const StegoHeader header = checked_header(stego);
    const std::size_t total_groups = group_count(header.payload_bit_length);

    BitSeq out;
    out.reserve(3 * total_groups);
    std::size_t g = 0;
    for (std::size_t c = kHeaderComponents;
         c < stego.component_count() && g < total_groups; ++c) {
        const int code = read_lsb2(stego.components[c]);
        if (code == 0) continue;
        append_group(out, window_of_byte(stego.components[c], code));
        ++g;
    }
    if (g < total_groups)
        throw StegoError(ErrorCode::corrupt_payload,
                         "component stream ended after " + std::to_string(g) + " of " +
                             std::to_string(total_groups) + " declared groups");
    out.truncate(header.payload_bit_length);
    return out;
}

} // namespace serial
} // namespace stegmatch::group3
