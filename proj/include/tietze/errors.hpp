// Error types thrown across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace tietze {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
    explicit division_by_zero(const std::string& msg) : error(msg) {}
};

struct zero_element : error {
    explicit zero_element(const std::string& msg = "operation undefined for the zero element") : error(msg) {}
};

// Parser: malformed input, with the byte offset where it was detected.
struct syntax_error : error {
    size_t position;
    syntax_error(size_t pos, const std::string& what_expected)
        : error("syntax error at position " + std::to_string(pos) + ": " + what_expected), position(pos) {}
};

struct non_integer_exponent : error {
    size_t position;
    explicit non_integer_exponent(size_t pos)
        : error("exponent at position " + std::to_string(pos) + " must be an integer literal"), position(pos) {}
};

// Parser: expression is grammatical but evaluates through a zero denominator.
struct eval_error : error {
    explicit eval_error(const std::string& msg) : error(msg) {}
};

struct shape_error : error {
    explicit shape_error(const std::string& msg) : error(msg) {}
};

struct singular_gauge : error {
    singular_gauge() : error("gauge matrix is singular") {}
};

struct pole_of_transform : error {
    pole_of_transform() : error("Mobius transform has a pole at the given argument") {}
};

struct wrong_form : error {
    explicit wrong_form(const std::string& msg) : error(msg) {}
};

struct degenerate_input : error {
    explicit degenerate_input(const std::string& msg) : error(msg) {}
};

struct missing_dy : error {
    missing_dy() : error("derivation image of Y is not set on this extension") {}
};

struct zero_r : error {
    zero_r() : error("r must be nonzero") {}
};

struct not_q_dilation : error {
    not_q_dilation() : error("operation requires the q-dilation operator") {}
};

struct degenerate_operator : error {
    explicit degenerate_operator(const std::string& msg) : error(msg) {}
};

struct hypothesis_not_certified : error {
    hypothesis_not_certified() : error("no certified place witness for (operator, r)") {}
};

// Violation of an invariant the code relies on; indicates a bug, not bad input.
struct internal_error : error {
    explicit internal_error(const std::string& msg) : error("internal error: " + msg) {}
};

} // namespace tietze
