#pragma once

// Shared fixtures: the two-color base of the count tables and the Y/I base.

#include <sstream>

#include "cagegen/base_io.hpp"
#include "cagegen/motif.hpp"

inline cagegen::MotifBase base_jvv() {
    std::istringstream in(
        "colors: a b\n"
        "motif J: a b\n"
        "motif V1: ~a ~a b\n"
        "motif V2: a ~b ~b\n");
    return cagegen::parse_base(in);
}

inline cagegen::MotifBase base_yi() {
    std::istringstream in(
        "colors: a\n"
        "motif Y: ~a ~a ~a\n"
        "motif I: a a\n");
    return cagegen::parse_base(in);
}

inline cagegen::MotifBase base_x1x2() {
    std::istringstream in(
        "colors: a\n"
        "motif X1: a a a a\n"
        "motif X2: ~a ~a ~a ~a\n");
    return cagegen::parse_base(in);
}
