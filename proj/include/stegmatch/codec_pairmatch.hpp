#pragma once

#include "stegmatch/bitplane.hpp"
#include "stegmatch/codec.hpp"
#include "stegmatch/raster.hpp"

namespace stegmatch::pair2 {

// Index codes recording where a secret pair matched within the byte:
// 0 = no match (pair stored verbatim in the LSBs), 2 = matched p1
// (bits 3..4), 3 = matched p2 (bits 5..6). Code 1 is never produced.
constexpr int match_pairs(std::uint8_t b, int pair) {
    const BytePairs p = pairs_of_byte(b);
    if (pair == p.p1) return 2;
    if (pair == p.p2) return 3;
    return 0;
}

// Embeds the secret two bits at a time, one payload component per pair.
// Matched components stay untouched; unmatched ones get the pair written
// to their LSBs. Every index code goes to the tail index region, filled
// backward from the last component.
EmbedResult embed(const RgbRaster& cover, const BitSeq& secret);

BitSeq extract(const RgbRaster& stego);

namespace serial {
EmbedResult embed(const RgbRaster& cover, const BitSeq& secret);
BitSeq extract(const RgbRaster& stego);
} // namespace serial

} // namespace stegmatch::pair2
