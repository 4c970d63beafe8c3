#pragma once

#include "stegmatch/bitplane.hpp"
#include "stegmatch/codec.hpp"
#include "stegmatch/raster.hpp"

namespace stegmatch::group3 {

// Match one secret group against the byte's three windows, first window
// wins. Returns the window number 1..3, or 0 on no match.
constexpr int try_match_byte(std::uint8_t b, int group) {
    const ByteWindows w = windows_of_byte(b);
    if (group == w.g1) return 1;
    if (group == w.g2) return 2;
    if (group == w.g3) return 3;
    return 0;
}

// Embeds the secret three bits at a time: each payload component is
// matched against the current secret group and receives the match code in
// its two LSBs (00 = no match, component consumed without advancing the
// secret). Sequential by nature: the group cursor is a serial dependency.
EmbedResult embed(const RgbRaster& cover, const BitSeq& secret);

// Recovers the payload from the match codes. OpenMP two-pass formulation:
// a counting pass locates each matched component's output slot, a second
// pass decodes the windows in place.
BitSeq extract(const RgbRaster& stego);

// Capacity when every component matches: 3 bits per payload component.
std::size_t capacity_best_case(const RgbRaster& raster);

namespace serial {
// Reference single-pass extraction; extract() must agree with it exactly.
BitSeq extract(const RgbRaster& stego);
} // namespace serial

} // namespace stegmatch::group3
