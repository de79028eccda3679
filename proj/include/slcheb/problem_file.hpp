#pragma once

#include <string>

#include "slcheb/problem.hpp"

namespace slcheb {

/// Parse the plain-text problem format: `key = value` lines, `#` comments.
/// Required keys: p, q, w (expressions in x), a, b (constant expressions,
/// "pi" allowed). Optional: bc_left_c, bc_left_d, bc_right_c, bc_right_d
/// (default Dirichlet 1, 0) and label.
SLProblem parse_problem_text(const std::string& text);

SLProblem load_problem_file(const std::string& path);

}  // namespace slcheb
