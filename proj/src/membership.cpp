#include "lpsplit/membership.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lpsplit {

void write_membership(std::ostream& out, std::span<const Label> labels) {
  out << "# vertex\tcommunity\n";
  for (std::size_t i = 0; i < labels.size(); ++i) out << i << '\t' << labels[i] << '\n';
}


Labels read_membership(std::istream& in, const std::string& source) {
  Labels labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::uint64_t vertex = 0, community = 0;
    std::string extra;
    if (!(row >> vertex >> community) || (row >> extra))
      throw std::runtime_error(source + ":" + std::to_string(line_no) + ": expected \"vertex<TAB>community\"");
    if (vertex != labels.size())
      throw std::runtime_error(source + ":" + std::to_string(line_no) + ": expected vertex " +
                               std::to_string(labels.size()) + ", found " + std::to_string(vertex));
    if (community > std::numeric_limits<Label>::max())
      throw std::runtime_error(source + ":" + std::to_string(line_no) + ": community id too large");
    labels.push_back(static_cast<Label>(community));
  }
  if (in.bad()) throw std::runtime_error(source + ": read error");
  return labels;
}


Labels load_membership(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_membership(in, path);
}

}  // namespace lpsplit
