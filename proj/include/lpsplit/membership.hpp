#pragma once
#include <iosfwd>
#include <span>
#include <string>

#include "lpsplit/labels.hpp"

namespace lpsplit {

/** Write "vertex<TAB>community" rows in ascending vertex order, after a '#' header. */
void write_membership(std::ostream& out, std::span<const Label> labels);

/**
 * Read a membership file. Rows must list vertices 0, 1, 2, ... in order;
 * '#' lines are skipped. Throws std::runtime_error with the line number.
 */
Labels read_membership(std::istream& in, const std::string& source = "<stream>");
Labels load_membership(const std::string& path);

}  // namespace lpsplit
