#pragma once

#include <stdexcept>
#include <string>

namespace qlie {

/// Failure categories surfaced by the library. Mirrored one-to-one by the
/// qlie_status codes of the C API.
enum class errc {
  parse_error,
  index_error,
  division_by_zero,
  dimension_mismatch,
  inconsistent_system,
  singular_map,
  invalid_algebra,
  not_solvable,
  unsupported_dimension,
  not_isotropic,
  degenerate_form,
  no_square_root,
  not_skew_derivation,
  not_skew,
  not_inner,
  not_lie_algebra,
  no_frame,
  kernel_not_in_image,
  unexpected_orbit,
  bad_parameter,
  resample_exhausted,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

} // namespace qlie
