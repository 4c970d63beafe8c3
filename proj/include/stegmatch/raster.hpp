#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stegmatch/errors.hpp"

namespace stegmatch {

// 8-bit RGB image. Components are stored row-major, three per pixel in
// R,G,B order, so component index c belongs to pixel c/3 and channel c%3.
// An optional alpha plane (one byte per pixel) is carried through file
// round trips but never used as a payload carrier.
struct RgbRaster {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<std::uint8_t> components;
    std::vector<std::uint8_t> alpha;

    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
    std::size_t component_count() const { return components.size(); }
    bool has_alpha() const { return !alpha.empty(); }

    std::size_t component_index(std::uint32_t x, std::uint32_t y, int channel) const {
        return 3 * (static_cast<std::size_t>(y) * width + x) + channel;
    }
    std::uint8_t at(std::uint32_t x, std::uint32_t y, int channel) const {
        return components[component_index(x, y, channel)];
    }

    bool operator==(const RgbRaster&) const = default;
};

// Leading-component header carried by every stego image: magic "SG",
// algorithm id and the exact payload length in bits.
struct StegoHeader {
    std::uint16_t magic = 0;
    std::uint8_t algorithm_id = 0;
    std::uint32_t payload_bit_length = 0;

    bool operator==(const StegoHeader&) const = default;
};

inline constexpr std::uint16_t kStegoMagic = 0x5347; // ASCII "SG"
inline constexpr std::size_t kHeaderBits = 56;
inline constexpr std::size_t kHeaderComponents = 28; // 2 bits per component

// Half-open component index range.
struct Region {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool operator==(const Region&) const = default;
};

// Stores the 56 header bits MSB-first into the two LSBs of components
// 0..27. All other bits are left untouched.
RgbRaster write_header(RgbRaster raster, const StegoHeader& header);

// Parses and validates the header region. Throws not_a_stego_image on a
// magic mismatch, unsupported_algorithm on an unknown algorithm id.
StegoHeader read_header(const RgbRaster& raster);

// Component ranges available to a codec. The payload region starts after
// the header; the index region (pair-match codec) occupies the image tail,
// one component per 2-bit index code.
Region payload_region(const RgbRaster& raster);
Region payload_region(const RgbRaster& raster, std::size_t index_bit_count);
Region index_region(const RgbRaster& raster, std::size_t index_bit_count);

} // namespace stegmatch
