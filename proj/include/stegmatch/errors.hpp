#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stegmatch {

enum class ErrorCode {
    invalid_payload_length,
    index_out_of_range,
    image_too_small,
    not_a_stego_image,
    unsupported_algorithm,
    capacity_exhausted,
    corrupt_payload,
    unsupported_image_format,
    dimension_mismatch,
    io_failure,
};

const char* error_code_name(ErrorCode code);

class StegoError : public std::runtime_error {
public:
    StegoError(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Thrown when an embed runs out of carrier components. Carries how far it got
// so callers can report placed/required bit counts.
class CapacityError : public StegoError {
public:
    CapacityError(const std::string& message, std::size_t bits_placed, std::size_t bits_required)
        : StegoError(ErrorCode::capacity_exhausted, message),
          bits_placed_(bits_placed),
          bits_required_(bits_required) {}

    std::size_t bits_placed() const { return bits_placed_; }
    std::size_t bits_required() const { return bits_required_; }

private:
    std::size_t bits_placed_;
    std::size_t bits_required_;
};

} // namespace stegmatch
