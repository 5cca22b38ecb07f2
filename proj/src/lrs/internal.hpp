#pragma once

#include "edslrs/lrs.hpp"

namespace edslrs::lrs {

std::vector<std::uint64_t> companion_mod(const LrsSpec& s, std::uint64_t p);
/// C^e * state modulo p, C the companion matrix of s.
std::vector<std::uint64_t> apply_power(const LrsSpec& s, const std::vector<std::uint64_t>& state, const Int& e,
                                       std::uint64_t p);

}  // namespace edslrs::lrs
