#pragma once

#include <stdexcept>
#include <string>

namespace recnum {

enum class Errc {
  not_monic,
  zero_constant_term,
  multiple_roots,
  unit_circle_root,
  precision_exhausted,
  ambiguous_realness,
  undecidable_rounding,
  digit_out_of_range,
  gap_too_coarse,
  seed_rejected,
  horizon_exceeded,
  length_beyond_stages,
  invalid_argument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

} // namespace recnum
