#pragma once

#include <stdexcept>
#include <string>

namespace eigentree {

enum class errc {
  ok = 0,
  parse_error,
  not_monic,
  non_integer_coefficients,
  not_squarefree,
  not_totally_real,
  bad_degree,
  not_a_tree,
  bad_argument,
  too_large,
  search_cap_exceeded,
  verification_failed,
  division_by_zero,
  internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

// Internal consistency check; failures indicate a bug, not bad input.
#define ET_CHECK(cond, msg)                                                                        \
  do {                                                                                             \
    if (!(cond)) ::eigentree::fail(::eigentree::errc::internal, std::string("internal: ") + (msg)); \
  } while (0)

} // namespace eigentree
