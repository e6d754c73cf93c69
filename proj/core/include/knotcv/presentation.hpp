#pragma once

#include <optional>
#include <string>

#include "knotcv/multipoly.hpp"
#include "knotcv/word.hpp"

namespace knotcv {

// Two-generator one-relator knot-group data with peripheral words and the
// Alexander polynomial supplied as input.
struct KnotPresentation {
    std::string name;
    GroupWord relator;
    GroupWord meridian;
    GroupWord longitude;  // empty when not provided
    MultiPoly alexander = MultiPoly::constant({"t"}, Rational(1));
    std::optional<double> vol_constant;
    std::optional<double> cs_constant;

    bool has_longitude() const { return !longitude.empty(); }

    // Enforces: nonempty relator, univariate alexander in t with
    // alexander(1) != 0, nonempty meridian.
    void validate() const;
};

// Built-in figure-eight knot data.
KnotPresentation figure_eight();

// key = value lines; '#' starts a comment; relator/meridian/longitude use
// word syntax, alexander is a polynomial in t, vol/cs constants are reals.
KnotPresentation parse_presentation(const std::string& text);

// Treats the argument as a file path when such a file exists, otherwise as
// a built-in preset name.
KnotPresentation load_presentation(const std::string& name_or_path);

}  // namespace knotcv
