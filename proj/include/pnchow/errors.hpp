#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pnchow {

struct dim_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// series inversion needs constant term 1
struct non_unit_error : std::domain_error {
    using std::domain_error::domain_error;
};

// a rational class whose Chern coefficients fail to be integers is not the
// class of a bundle; surfacing this is a correctness tripwire, never routine
struct non_integral_error : std::domain_error {
    using std::domain_error::domain_error;
};

// integral() of a class that is not homogeneous of top degree
struct degree_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// a cohomology chase refuses to guess the rank of a connecting map
struct ambiguous_chase_error : std::runtime_error {
    int q;
    explicit ambiguous_chase_error(int q_)
        : std::runtime_error("chase underdetermined at H^" + std::to_string(q_)),
          q(q_) {}
};

struct odd_n_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct not_alternating_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct odd_size_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct incidence_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct parse_error : std::runtime_error {
    std::size_t offset;
    std::string expected;
    parse_error(std::size_t offset_, std::string expected_)
        : std::runtime_error("parse error at offset " + std::to_string(offset_) +
                             ": expected " + expected_),
          offset(offset_),
          expected(std::move(expected_)) {}
};

}  // namespace pnchow
