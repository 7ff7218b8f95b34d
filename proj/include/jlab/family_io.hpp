#pragma once
// Family file format: UTF-8 text, one subset per line as space-separated
// 1-based integers ("1 3 5 7"). Lines starting with '#' are comments. A header
// line "n=<int> r=<int>" must precede the first subset.

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "jlab/combinatorics.hpp"

namespace jlab {

struct Family {
  int n = 0;
  int r = 0;
  std::vector<KSubset> members;
};

// Throws FormatError on a missing header, wrong subset size, out-of-range or
// repeated elements, or a repeated subset.
Family read_family(std::istream& in);
Family read_family_file(const std::filesystem::path& path);

void write_family(std::ostream& out, const Family& family);

}  // namespace jlab
