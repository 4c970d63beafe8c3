#include "stegmatch/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace stegmatch {
namespace {

constexpr double kMaxComponent = 255.0;
constexpr std::size_t kParallelGrainComponents = 1u << 15;

void require_same_dimensions(const RgbRaster& a, const RgbRaster& b) {
    if (a.width != b.width || a.height != b.height)
        throw StegoError(ErrorCode::dimension_mismatch,
                         "image dimensions differ: " + std::to_string(a.width) + "x" +
                             std::to_string(a.height) + " vs " + std::to_string(b.width) +
                             "x" + std::to_string(b.height));
}

} // namespace

double psnr_from_mse(double mse_value) {
    if (mse_value == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(kMaxComponent * kMaxComponent / mse_value);
}

// Squared deltas are accumulated in integers, so the parallel and serial
// paths produce bit-identical results regardless of thread count.
double mse(const RgbRaster& a, const RgbRaster& b) {
    require_same_dimensions(a, b);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.components.size());
    std::uint64_t sum = 0;
#pragma omp parallel for reduction(+ : sum) if (a.components.size() > kParallelGrainComponents)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const int d = static_cast<int>(a.components[static_cast<std::size_t>(i)]) -
                      static_cast<int>(b.components[static_cast<std::size_t>(i)]);
        sum += static_cast<std::uint64_t>(d * d);
    }
    if (n == 0) return 0.0;
    return static_cast<double>(sum) / static_cast<double>(n);
}

double psnr(const RgbRaster& a, const RgbRaster& b) {
    return psnr_from_mse(mse(a, b));
}

QualityReport quality_report(const RgbRaster& cover, const RgbRaster& stego) {
    require_same_dimensions(cover, stego);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(cover.components.size());
    std::uint64_t sum = 0;
    std::size_t changed = 0;
    int max_delta = 0;
#pragma omp parallel for reduction(+ : sum, changed) reduction(max : max_delta) \
    if (cover.components.size() > kParallelGrainComponents)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const int d = static_cast<int>(cover.components[static_cast<std::size_t>(i)]) -
                      static_cast<int>(stego.components[static_cast<std::size_t>(i)]);
        const int ad = d < 0 ? -d : d;
        sum += static_cast<std::uint64_t>(d * d);
        changed += ad != 0;
        max_delta = ad > max_delta ? ad : max_delta;
    }

    QualityReport report;
    report.mse = n == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(n);
    report.psnr_db = psnr_from_mse(report.mse);
    report.max_component_delta = max_delta;
    report.components_changed = changed;
    return report;
}

namespace serial {

double mse(const RgbRaster& a, const RgbRaster& b) {
    require_same_dimensions(a, b);
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        const int d = static_cast<int>(a.components[i]) - static_cast<int>(b.components[i]);
        sum += static_cast<std::uint64_t>(d * d);
    }
    if (a.components.empty()) return 0.0;
    return static_cast<double>(sum) / static_cast<double>(a.components.size());
}

QualityReport quality_report(const RgbRaster& cover, const RgbRaster& stego) {
    require_same_dimensions(cover, stego);
    QualityReport report;
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < cover.components.size(); ++i) {
        const int d = static_cast<int>(cover.components[i]) - static_cast<int>(stego.components[i]);
        const int ad = d < 0 ? -d : d;
        sum += static_cast<std::uint64_t>(d * d);
        report.components_changed += ad != 0;
        if (ad > report.max_component_delta) report.max_component_delta = ad;
    }
    report.mse = cover.components.empty()
                     ? 0.0
                     : static_cast<double>(sum) / static_cast<double>(cover.components.size());
    report.psnr_db = psnr_from_mse(report.mse);
    return report;
}

} // namespace serial
} // namespace stegmatch
