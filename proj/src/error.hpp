#pragma once

#include <stdexcept>
#include <string>

namespace pc {

enum class errc {
    ok = 0,
    not_prime,
    degree_too_large,
    division_by_zero,
    dimension_mismatch,
    rank_out_of_range,
    budget_exceeded,
    precondition_violated,
    even_characteristic,
    zero_alpha,
    parse_error,
    counterexample,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace pc
