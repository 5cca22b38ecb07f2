#pragma once

#include <stdexcept>
#include <string>

namespace edslrs {

enum class ErrorKind {
    invalid_input,
    no_square_root,
    not_coprime,
    inexact_division,
    torsion_point,
    bad_reduction,
    degenerate,
    unconfirmed,
    internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline void require(bool cond, const std::string& what) {
    if (!cond) throw Error(ErrorKind::invalid_input, what);
}

}  // namespace edslrs
