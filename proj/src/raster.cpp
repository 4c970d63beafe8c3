#include "stegmatch/raster.hpp"

#include <cassert>
#include <string>

#include "stegmatch/bitplane.hpp"

namespace stegmatch {
namespace {

std::uint64_t header_word(const StegoHeader& h) {
    return (static_cast<std::uint64_t>(h.magic) << 40) |
           (static_cast<std::uint64_t>(h.algorithm_id) << 32) |
           static_cast<std::uint64_t>(h.payload_bit_length);
}

void require_header_space(const RgbRaster& raster) {
    if (raster.component_count() < kHeaderComponents)
        throw StegoError(ErrorCode::image_too_small,
                         "image has " + std::to_string(raster.component_count()) +
                             " components; the header needs " +
                             std::to_string(kHeaderComponents));
}

} // namespace

RgbRaster write_header(RgbRaster raster, const StegoHeader& header) {
    require_header_space(raster);
    const std::uint64_t word = header_word(header);
    for (std::size_t c = 0; c < kHeaderComponents; ++c) {
        const int code = static_cast<int>((word >> (kHeaderBits - 2 - 2 * c)) & 3);
        raster.components[c] = write_lsb2(raster.components[c], code);
    }
    return raster;
}

StegoHeader read_header(const RgbRaster& raster) {
    require_header_space(raster);
    std::uint64_t word = 0;
    for (std::size_t c = 0; c < kHeaderComponents; ++c)
        word = (word << 2) | static_cast<std::uint64_t>(read_lsb2(raster.components[c]));

    StegoHeader header;
    header.magic = static_cast<std::uint16_t>(word >> 40);
    header.algorithm_id = static_cast<std::uint8_t>((word >> 32) & 0xFF);
    header.payload_bit_length = static_cast<std::uint32_t>(word & 0xFFFFFFFFu);

    if (header.magic != kStegoMagic)
        throw StegoError(ErrorCode::not_a_stego_image, "no stego header found (magic mismatch)");
    if (header.algorithm_id < 1 || header.algorithm_id > 3)
        throw StegoError(ErrorCode::unsupported_algorithm,
                         "unknown algorithm id " + std::to_string(header.algorithm_id));
    return header;
}

Region payload_region(const RgbRaster& raster) {
    return payload_region(raster, 0);
}

Region payload_region(const RgbRaster& raster, std::size_t index_bit_count) {
    require_header_space(raster);
    const Region idx = index_region(raster, index_bit_count);
    return {kHeaderComponents, idx.begin};
}

Region index_region(const RgbRaster& raster, std::size_t index_bit_count) {
    assert(index_bit_count % 2 == 0);
    require_header_space(raster);
    const std::size_t n = raster.component_count();
    const std::size_t index_components = (index_bit_count + 1) / 2;
    if (index_components > n - kHeaderComponents)
        throw CapacityError("index stream of " + std::to_string(index_components) +
                                " components collides with the header region (" +
                                std::to_string(n - kHeaderComponents) + " available)",
                            0, index_bit_count);
    return {n - index_components, n};
}

} // namespace stegmatch
