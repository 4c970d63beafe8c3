#include "stegmatch/png_io.hpp"

#include <png.h>

#include <cassert>
#include <cstdio>
#include <vector>

namespace stegmatch {
namespace {

void require_readable(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f)
        throw StegoError(ErrorCode::io_failure, "cannot open '" + path + "' for reading");
    std::fclose(f);
}

} // namespace

RgbRaster load_png(const std::string& path) {
    require_readable(path);

    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&image, path.c_str())) {
        std::string msg = image.message;
        png_image_free(&image);
        throw StegoError(ErrorCode::unsupported_image_format,
                         "'" + path + "' is not a decodable PNG: " + msg);
    }

    // 16-bit files report a linear format; the codecs are defined on 8-bit
    // components only.
    if (image.format & PNG_FORMAT_FLAG_LINEAR) {
        png_image_free(&image);
        throw StegoError(ErrorCode::unsupported_image_format,
                         "'" + path + "' has 16-bit channels; only 8-bit PNGs are supported");
    }

    const bool with_alpha = (image.format & PNG_FORMAT_FLAG_ALPHA) != 0;
    image.format = with_alpha ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB;

    std::vector<std::uint8_t> buffer(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
        std::string msg = image.message;
        png_image_free(&image);
        throw StegoError(ErrorCode::unsupported_image_format,
                         "failed to decode '" + path + "': " + msg);
    }

    RgbRaster raster;
    raster.width = image.width;
    raster.height = image.height;
    const std::size_t pixels = raster.pixel_count();
    raster.components.resize(3 * pixels);
    if (with_alpha) {
        raster.alpha.resize(pixels);
        for (std::size_t p = 0; p < pixels; ++p) {
            raster.components[3 * p + 0] = buffer[4 * p + 0];
            raster.components[3 * p + 1] = buffer[4 * p + 1];
            raster.components[3 * p + 2] = buffer[4 * p + 2];
            raster.alpha[p] = buffer[4 * p + 3];
        }
    } else {
        raster.components.assign(buffer.begin(), buffer.end());
    }
    return raster;
}

void save_png(const RgbRaster& raster, const std::string& path) {
    assert(raster.components.size() == 3 * raster.pixel_count());
    assert(raster.alpha.empty() || raster.alpha.size() == raster.pixel_count());

    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    image.width = raster.width;
    image.height = raster.height;
    image.format = raster.has_alpha() ? PNG_FORMAT_RGBA : PNG_FORMAT_RGB;

    const std::uint8_t* pixels = raster.components.data();
    std::vector<std::uint8_t> interleaved;
    if (raster.has_alpha()) {
        const std::size_t n = raster.pixel_count();
        interleaved.resize(4 * n);
        for (std::size_t p = 0; p < n; ++p) {
            interleaved[4 * p + 0] = raster.components[3 * p + 0];
            interleaved[4 * p + 1] = raster.components[3 * p + 1];
            interleaved[4 * p + 2] = raster.components[3 * p + 2];
            interleaved[4 * p + 3] = raster.alpha[p];
        }
        pixels = interleaved.data();
    }

    if (!png_image_write_to_file(&image, path.c_str(), 0, pixels, 0, nullptr)) {
        std::string msg = image.message;
        png_image_free(&image);
        throw StegoError(ErrorCode::io_failure, "cannot write '" + path + "': " + msg);
    }
}

} // namespace stegmatch
