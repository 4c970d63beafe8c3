#include "stegmatch/codec.hpp"

#include "stegmatch/errors.hpp"

namespace stegmatch {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_payload_length: return "InvalidPayloadLength";
        case ErrorCode::index_out_of_range: return "IndexOutOfRange";
        case ErrorCode::image_too_small: return "ImageTooSmall";
        case ErrorCode::not_a_stego_image: return "NotAStegoImage";
        case ErrorCode::unsupported_algorithm: return "UnsupportedAlgorithm";
        case ErrorCode::capacity_exhausted: return "CapacityExhausted";
        case ErrorCode::corrupt_payload: return "CorruptPayload";
        case ErrorCode::unsupported_image_format: return "UnsupportedImageFormat";
        case ErrorCode::dimension_mismatch: return "DimensionMismatch";
        case ErrorCode::io_failure: return "IoFailure";
    }
    return "UnknownError";
}

const char* algorithm_name(Algorithm algo) {
    switch (algo) {
        case Algorithm::lsb1: return "lsb1";
        case Algorithm::pair2: return "pair2";
        case Algorithm::group3: return "group3";
    }
    return "unknown";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
    if (name == "lsb1") return Algorithm::lsb1;
    if (name == "pair2") return Algorithm::pair2;
    if (name == "group3") return Algorithm::group3;
    return std::nullopt;
}

} // namespace stegmatch
