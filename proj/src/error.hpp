#pragma once

#include <stdexcept>
#include <string>

namespace gg {

// Error categories, kept coarse so the C API can map them to status codes.
enum class ErrC {
  parse,    // malformed input text
  invalid,  // semantic violation (bad table, disconnected graph, ...)
  bounds,   // index out of range
  cap,      // enumeration cap exceeded
  io,       // file not readable/writable
};

class Error : public std::runtime_error {
public:
  Error(ErrC code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrC code() const { return code_; }

private:
  ErrC code_;
};

[[noreturn]] inline void fail(ErrC code, const std::string& msg) { throw Error(code, msg); }

}  // namespace gg
