#include "jlab/family_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "jlab/errors.hpp"

namespace jlab {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_header(const std::string& line, int& n, int& r) {
  std::istringstream in(line);
  std::string a, b, extra;
  if (!(in >> a >> b) || (in >> extra)) return false;
  if (a.rfind("n=", 0) != 0 || b.rfind("r=", 0) != 0) return false;
  try {
    std::size_t used = 0;
    n = std::stoi(a.substr(2), &used);
    if (used != a.size() - 2) return false;
    r = std::stoi(b.substr(2), &used);
    if (used != b.size() - 2) return false;
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

Family read_family(std::istream& in) {
  Family family;
  bool have_header = false;
  std::set<std::vector<int>> seen;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!have_header) {
      if (!parse_header(line, family.n, family.r)) throw FormatError(where + "expected header 'n=<int> r=<int>'");
      if (family.n < 1 || family.r < 1 || family.r > family.n) throw FormatError(where + "header needs 1 <= r <= n");
      have_header = true;
      continue;
    }
    std::istringstream fields(line);
    std::vector<int> elems;
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw FormatError(where + "not an integer: " + tok);
        elems.push_back(v);
      } catch (const std::logic_error&) {
        throw FormatError(where + "not an integer: " + tok);
      }
    }
    if (static_cast<int>(elems.size()) != family.r) {
      throw FormatError(where + "expected " + std::to_string(family.r) + " elements, got " + std::to_string(elems.size()));
    }
    std::sort(elems.begin(), elems.end());
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) throw FormatError(where + "repeated element");
    if (elems.front() < 1 || elems.back() > family.n) throw FormatError(where + "element outside [1,n]");
    if (!seen.insert(elems).second) throw FormatError(where + "repeated subset");
    family.members.emplace_back(family.n, std::move(elems));
  }
  if (!have_header) throw FormatError("family file has no 'n=<int> r=<int>' header");
  return family;
}

Family read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open family file " + path.string());
  return read_family(in);
}

void write_family(std::ostream& out, const Family& family) {
  out << "n=" << family.n << " r=" << family.r << '\n';
  for (const auto& m : family.members) {
    auto e = m.elements();
    for (std::size_t k = 0; k < e.size(); ++k) out << (k ? " " : "") << e[k];
    out << '\n';
  }
}

}  // namespace jlab
