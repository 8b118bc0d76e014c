#pragma once

#include <stdexcept>
#include <string>

namespace fancut {

enum class errc {
    zero_vector,
    not_counter_clockwise,
    angle_sum_mismatch,
    index_out_of_range,
    invalid_wedge,
    invalid_measure,
    quadrature_not_converged,
    no_bracket,
    parallel_rays,
    mixed_angles,
    blob_radius_too_large,
    has_opposite_rays,
    grid_too_coarse,
    parse_error,
};

/// Short stable name used in diagnostics and CLI output.
const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace fancut
