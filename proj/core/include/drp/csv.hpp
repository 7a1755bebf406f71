#pragma once

#include <ostream>
#include <string>

#include "drp/matrix.hpp"

namespace drp {

// Shortest decimal text that parses back to the identical double. CSV and
// JSON both use this, so identical runs produce identical bytes.
std::string format_double(double v);

// Full dense row-major dump, LF line endings, no header.
void write_matrix_csv(std::ostream& os, const Matrix& m);

} // namespace drp
