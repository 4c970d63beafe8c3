#pragma once

#include <string>

#include "stegmatch/raster.hpp"

namespace stegmatch {

// Reads an 8-bit PNG into an RgbRaster. Grayscale and palette images are
// expanded to RGB; an alpha channel is kept in the raster's alpha plane.
// 16-bit files and undecodable data throw unsupported_image_format; a
// missing or unopenable file throws io_failure.
RgbRaster load_png(const std::string& path);

// Writes the raster as an RGB PNG (RGBA when an alpha plane is present).
// Lossless: load_png(save_png(r)) reproduces every RGB component exactly.
void save_png(const RgbRaster& raster, const std::string& path);

} // namespace stegmatch
