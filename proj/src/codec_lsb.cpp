#include "stegmatch/codec_lsb.hpp"

#include <string>

namespace stegmatch::lsb1 {
namespace {

constexpr std::size_t kParallelGrainBits = 1u << 15;

RgbRaster prepare_stego(const RgbRaster& cover, const BitSeq& secret) {
    if (secret.size() > 0xFFFFFFFFu)
        throw StegoError(ErrorCode::invalid_payload_length,
                         "payload of " + std::to_string(secret.size()) +
                             " bits exceeds the 32-bit header length field");
    const Region payload = payload_region(cover);
    if (secret.size() > payload.size())
        throw CapacityError("lsb1 payload needs " + std::to_string(secret.size()) +
                                " components, image provides " + std::to_string(payload.size()),
                            0, secret.size());
    StegoHeader header;
    header.magic = kStegoMagic;
    header.algorithm_id = static_cast<std::uint8_t>(Algorithm::lsb1);
    header.payload_bit_length = static_cast<std::uint32_t>(secret.size());
    return write_header(cover, header);
}

EmbedStats stats_for(const BitSeq& secret) {
    EmbedStats stats;
    stats.components_visited = secret.size();
    stats.payload_bits_embedded = secret.size();
    return stats;
}

std::size_t checked_payload_bits(const RgbRaster& stego, std::uint8_t expected_algo) {
    const StegoHeader header = read_header(stego);
    if (header.algorithm_id != expected_algo)
        throw StegoError(ErrorCode::unsupported_algorithm,
                         std::string("stego image was embedded with ") +
                             algorithm_name(static_cast<Algorithm>(header.algorithm_id)));
    const std::size_t bits = header.payload_bit_length;
    if (bits > stego.component_count() - kHeaderComponents)
        throw StegoError(ErrorCode::corrupt_payload,
                         "header declares " + std::to_string(bits) +
                             " payload bits but only " +
                             std::to_string(stego.component_count() - kHeaderComponents) +
                             " components follow the header");
    return bits;
}

} // namespace

EmbedResult embed(const RgbRaster& cover, const BitSeq& secret) {
    RgbRaster stego = prepare_stego(cover, secret);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(secret.size());
#pragma omp parallel for if (secret.size() > kParallelGrainBits)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const std::size_t c = kHeaderComponents + static_cast<std::size_t>(i);
        stego.components[c] = write_lsb1(stego.components[c], secret[static_cast<std::size_t>(i)]);
    }
    return {std::move(stego), stats_for(secret)};
}

BitSeq extract(const RgbRaster& stego) {
    const std::size_t bits = checked_payload_bits(
        stego, static_cast<std::uint8_t>(Algorithm::lsb1));
    std::vector<std::uint8_t> out(bits);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(bits);
#pragma omp parallel for if (bits > kParallelGrainBits)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
            read_lsb1(stego.components[kHeaderComponents + static_cast<std::size_t>(i)]));
    return BitSeq(std::move(out));
}

namespace serial {

EmbedResult embed(const RgbRaster& cover, const BitSeq& secret) {
    RgbRaster stego = prepare_stego(cover, secret);
    for (std::size_t i = 0; i < secret.size(); ++i) {
        const std::size_t c = kHeaderComponents + i;
        stego.components[c] = write_lsb1(stego.components[c], secret[i]);
    }
    return {std::move(stego), stats_for(secret)};
}

BitSeq extract(const RgbRaster& stego) {
    const std::size_t bits = checked_payload_bits(
        stego, static_cast<std::uint8_t>(Algorithm::lsb1));
    BitSeq out;
    out.reserve(bits);
    for (std::size_t i = 0; i < bits; ++i)
        out.push_back(read_lsb1(stego.components[kHeaderComponents + i]));
    return out;
}

} // namespace serial
} // namespace stegmatch::lsb1
