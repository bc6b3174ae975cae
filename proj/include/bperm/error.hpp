#pragma once

#include <stdexcept>
#include <string>

namespace bperm {

enum class Errc {
  invalid_window = 1,
  invalid_permutation,
  index_out_of_range,
  parse_error,
  pattern_too_large,
  size_cap_exceeded,
  unknown_check,
  not_colayered,
  not_in_132_class,
  unsupported_method,
  invalid_argument,
  io_error,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bperm
