#include "stegmatch/codec_pairmatch.hpp"

#include <string>
#include <utility>

namespace stegmatch::pair2 {
namespace {

constexpr std::size_t kParallelGrainPairs = 1u << 14;

// Capacity check plus header write shared by both embed paths. Payload
// pairs walk forward from the header, index codes walk backward from the
// image tail; the two cursors must never meet.
std::pair<RgbRaster, std::size_t> prepare_stego(const RgbRaster& cover, const BitSeq& secret) {
    if (secret.size() > 0xFFFFFFFFu)
        throw StegoError(ErrorCode::invalid_payload_length,
                         "payload of " + std::to_string(secret.size()) +
                             " bits exceeds the 32-bit header length field");
    const std::size_t pairs = pair_count(secret.size());
    const Region payload = payload_region(cover, 2 * pairs);
    if (pairs > payload.size())
        throw CapacityError("pair2 payload needs " + std::to_string(pairs) +
                                " components plus " + std::to_string(pairs) +
                                " index components, image provides " +
                                std::to_string(cover.component_count() - kHeaderComponents),
                            0, secret.size());
    StegoHeader header;
    header.magic = kStegoMagic;
    header.algorithm_id = static_cast<std::uint8_t>(Algorithm::pair2);
    header.payload_bit_length = static_cast<std::uint32_t>(secret.size());
    return {write_header(cover, header), pairs};
}

StegoHeader checked_header(const RgbRaster& stego) {
    const StegoHeader header = read_header(stego);
    if (header.algorithm_id != static_cast<std::uint8_t>(Algorithm::pair2))
        throw StegoError(ErrorCode::unsupported_algorithm,
                         std::string("stego image was embedded with ") +
                             algorithm_name(static_cast<Algorithm>(header.algorithm_id)));
    const std::size_t pairs = pair_count(header.payload_bit_length);
    if (2 * pairs > stego.component_count() - kHeaderComponents)
        throw StegoError(ErrorCode::corrupt_payload,
                         "header declares " + std::to_string(header.payload_bit_length) +
                             " payload bits but the image cannot hold " +
                             std::to_string(pairs) + " pairs plus their index codes");
    return header;
}

int decode_pair(std::uint8_t component, int code, bool& bad) {
    switch (code) {
        case 2: return pairs_of_byte(component).p1;
        case 3: return pairs_of_byte(component).p2;
        case 0: return read_lsb2(component);
        default: bad = true; return 0;
    }
}

} // namespace

EmbedResult embed(const RgbRaster& cover, const BitSeq& secret) {
    auto [stego, pairs] = prepare_stego(cover, secret);
    const std::size_t last = stego.component_count() - 1;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(pairs);
    std::size_t m1 = 0, m2 = 0, skips = 0;
#pragma omp parallel for reduction(+ : m1, m2, skips) if (pairs > kParallelGrainPairs)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        const std::size_t c = kHeaderComponents + k;
        const int pair = pair_at(secret, k);
        const int code = match_pairs(stego.components[c], pair);
        if (code == 0) {
            stego.components[c] = write_lsb2(stego.components[c], pair);
            ++skips;
        } else if (code == 2) {
            ++m1;
        } else {
            ++m2;
        }
        stego.components[last - k] = write_lsb2(stego.components[last - k], code);
    }

    EmbedStats stats;
    stats.components_visited = pairs;
    stats.matches = {m1, m2, 0};
    stats.skips = skips;
    stats.payload_bits_embedded = 2 * pairs;
    return {std::move(stego), stats};
}

BitSeq extract(const RgbRaster& stego) {
    const StegoHeader header = checked_header(stego);
    const std::size_t pairs = pair_count(header.payload_bit_length);
    const std::size_t last = stego.component_count() - 1;
    std::vector<std::uint8_t> out(2 * pairs);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(pairs);
    bool bad_code = false;
#pragma omp parallel for reduction(|| : bad_code) if (pairs > kParallelGrainPairs)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const std::size_t k = static_cast<std::size_t>(i);
        bool bad = false;
        const int code = read_lsb2(stego.components[last - k]);
        const int pair = decode_pair(stego.components[kHeaderComponents + k], code, bad);
        out[2 * k] = static_cast<std::uint8_t>((pair >> 1) & 1);
        out[2 * k + 1] = static_cast<std::uint8_t>(pair & 1);
        bad_code = bad_code || bad;
    }
    if (bad_code)
        throw StegoError(ErrorCode::corrupt_payload,
                         "index region contains code 1, which pair2 never produces");
    BitSeq seq(std::move(out));
    seq.truncate(header.payload_bit_length);
    return seq;
}

namespace serial {

EmbedResult embed(const RgbRaster& cover, const BitSeq& secret) {
    auto [stego, pairs] = prepare_stego(cover, secret);
    const std::size_t last = stego.component_count() - 1;
    EmbedStats stats;
    for (std::size_t k = 0; k < pairs; ++k) {
        const std::size_t c = kHeaderComponents + k;
        const int pair = pair_at(secret, k);
        const int code = match_pairs(stego.components[c], pair);
        if (code == 0) {
            stego.components[c] = write_lsb2(stego.components[c], pair);
            ++stats.skips;
        } else {
            ++stats.matches[code == 2 ? 0 : 1];
        }
        stego.components[last - k] = write_lsb2(stego.components[last - k], code);
    }
    stats.components_visited = pairs;
    stats.payload_bits_embedded = 2 * pairs;
    return {std::move(stego), stats};
}

BitSeq extract(const RgbRaster& stego) {
    const StegoHeader header = checked_header(stego);
    const std::size_t pairs = pair_count(header.payload_bit_length);
    const std::size_t last = stego.component_count() - 1;
    BitSeq out;
    out.reserve(2 * pairs);
    for (std::size_t k = 0; k < pairs; ++k) {
        bool bad = false;
        const int code = read_lsb2(stego.components[last - k]);
        const int pair = decode_pair(stego.components[kHeaderComponents + k], code, bad);
        if (bad)
            throw StegoError(ErrorCode::corrupt_payload,
                             "index region contains code 1, which pair2 never produces");
        out.push_back((pair >> 1) & 1);
        out.push_back(pair & 1);
    }
    out.truncate(header.payload_bit_length);
    return out;
}

} // namespace serial
} // namespace stegmatch::pair2
