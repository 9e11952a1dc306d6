#pragma once

#include "swrg/code/linear_code.hpp"

#include <string>

namespace swrg {

/// One row per line (or ';'-separated), entries separated by whitespace, element syntax
/// per Ring::parse. Blank lines and '#' comments are ignored.
Matrix parse_matrix(const Ring& R, const std::string& text);
Matrix read_matrix_file(const Ring& R, const std::string& path);
std::string format_matrix(const Ring& R, const Matrix& rows);
void write_matrix_file(const Ring& R, const Matrix& rows, const std::string& path);

}  // namespace swrg
