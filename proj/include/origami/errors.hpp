#pragma once

#include <stdexcept>
#include <string>

namespace origami {

enum class Errc {
  invalid_angle,
  invalid_angle_set,
  parallel_lines,
  near_parallel,
  too_few_angles,
  wrong_arity,
  out_of_range,
  invalid_index,
  degenerate_rebase,
  unreachable_group,
  empty_render,
  parse_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace origami
