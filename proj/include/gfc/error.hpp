#pragma once

#include <stdexcept>
#include <string>

namespace gfc {

enum class errc {
  invalid_parameter,
  division_by_zero,
  field_mismatch,
  no_such_root,
  no_such_subgroup,
  desk_scale_exceeded,
  wrong_family,
  reducible_or_singular,
  tameness_violation,
  oracle_failure,
  bound_exceeded,
  not_normal,
  unsupported_normal_form,
  raise_extension,
  degenerate_map,
  reducible_relation,
  theorem_violation,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace gfc
