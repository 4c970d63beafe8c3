#pragma once

#include <cstddef>

#include "stegmatch/raster.hpp"

namespace stegmatch {

// Cover/stego fidelity summary. psnr_db is +infinity when the images are
// bit-identical (mse == 0).
struct QualityReport {
    double mse = 0.0;
    double psnr_db = 0.0;
    int max_component_delta = 0;
    std::size_t components_changed = 0;
};

// Mean squared error over all 3*width*height RGB components. The alpha
// plane is excluded. Throws dimension_mismatch when sizes differ.
double mse(const RgbRaster& a, const RgbRaster& b);

// 10*log10(255^2 / mse); +infinity at mse == 0.
double psnr_from_mse(double mse_value);
double psnr(const RgbRaster& a, const RgbRaster& b);

QualityReport quality_report(const RgbRaster& cover, const RgbRaster& stego);

namespace serial {
double mse(const RgbRaster& a, const RgbRaster& b);
QualityReport quality_report(const RgbRaster& cover, const RgbRaster& stego);
} // namespace serial

} // namespace stegmatch
