#pragma once

#include "stegmatch/bitplane.hpp"
#include "stegmatch/codec.hpp"
#include "stegmatch/raster.hpp"

namespace stegmatch::lsb1 {

// Plain LSB insertion, one secret bit per payload component. The capacity
// yardstick the matching codecs are measured against.
EmbedResult embed(const RgbRaster& cover, const BitSeq& secret);

BitSeq extract(const RgbRaster& stego);

namespace serial {
EmbedResult embed(const RgbRaster& cover, const BitSeq& secret);
BitSeq extract(const RgbRaster& stego);
} // namespace serial

} // namespace stegmatch::lsb1
