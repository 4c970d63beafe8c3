#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "stegmatch/raster.hpp"

namespace stegmatch {

enum class Algorithm : std::uint8_t {
    lsb1 = 1,
    pair2 = 2,
    group3 = 3,
};

const char* algorithm_name(Algorithm algo);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

// Per-embed counters. components_visited counts payload components the
// codec consumed; matches[] counts hits per window (group3) or per pair
// position (pair2, third slot unused); skips counts no-match components.
// payload_bits_embedded includes zero-padding of a final partial group.
struct EmbedStats {
    std::size_t components_visited = 0;
    std::array<std::size_t, 3> matches{};
    std::size_t skips = 0;
    std::size_t payload_bits_embedded = 0;

    double bits_per_component() const {
        if (components_visited == 0) return 0.0;
        return static_cast<double>(payload_bits_embedded) /
               static_cast<double>(components_visited);
    }
};

struct EmbedResult {
    RgbRaster stego;
    EmbedStats stats;
};

} // namespace stegmatch
