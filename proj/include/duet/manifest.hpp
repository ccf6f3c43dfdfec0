#pragma once

#include <iosfwd>
#include <string>

#include "duet/data.hpp"

namespace duet {

// Line-delimited JSON manifest. Line 1 is a header record declaring the
// ordered class names and the feature dimension; each further line is one
// sample. Numbers round-trip at full precision.
Dataset read_manifest(std::istream& in, const std::string& origin = "<stream>");
Dataset read_manifest(const std::string& path);

void write_manifest(const Dataset& dataset, std::ostream& out);
void write_manifest(const Dataset& dataset, const std::string& path);

}  // namespace duet
