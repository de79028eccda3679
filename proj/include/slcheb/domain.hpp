#pragma once

#include "slcheb/error.hpp"

namespace slcheb {

/// Interval [a, b] of the independent variable. Unbounded problems enter only
/// pre-truncated, so both endpoints must be finite and a < b.
struct Domain {
    double a;
    double b;

    Domain(double a, double b);

    double length() const { return b - a; }

    /// Affine image of a canonical point t in [-1, 1].
    double map_from_canonical(double t) const { return ((b - a) * t + b + a) / 2.0; }
};

}  // namespace slcheb
