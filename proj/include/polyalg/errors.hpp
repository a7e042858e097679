#pragma once

#include <stdexcept>
#include <string>

namespace polyalg {

enum class Errc {
  degenerate_interval,
  cell_not_in_polyomino,
  not_a_closed_path,
  no_decomposition,
  not_applicable,
  not_thin,
  not_simple_thin,
  wrong_case,
  complement_not_simple,
  not_from_w_configuration,
  has_zig_zag,
  out_of_scope_class,
  budget_exceeded,
  order_not_found,
  disconnected,
  empty_input,
  duplicate_cell,
  syntax_error,
  cap_exceeded,
  unknown_format,
  integer_overflow,
};

const char* errc_name(Errc c);

/// Library failure with a stable code (mapped to CLI exit codes).
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace polyalg
