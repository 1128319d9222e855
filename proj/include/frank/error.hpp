// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace frank {

enum class Errc {
  invalid_argument,
  unknown_vertex,
  unknown_edge,
  parse_error,
  graph6_multigraph,  // graph6 cannot carry loops or parallel edges
  precondition,
  too_large,
  not_colorable,
  indeterminate,
  internal,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace frank
