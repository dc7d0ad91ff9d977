#include "antichain/poset_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "antichain/errors.hpp"

namespace antichain {

Poset parse_hasse(std::string_view text) {
  static const std::regex relation(R"(^\s*(-?\d+)\s*<\s*(-?\d+)\s*$)");
  static const std::regex single(R"(^\s*(-?\d+)\s*$)");
  std::vector<std::pair<long long, long long>> pairs;
  std::map<long long, std::size_t> labels;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    std::smatch m;
    if (std::regex_match(line, m, relation)) {
      const long long u = std::stoll(m[1]), v = std::stoll(m[2]);
      labels.emplace(u, 0);
      labels.emplace(v, 0);
      pairs.emplace_back(u, v);
    } else if (std::regex_match(line, m, single)) {
      labels.emplace(std::stoll(m[1]), 0);
    } else {
      throw ParseError("malformed Hasse line '" + line + "'", line_no);
    }
  }
  std::size_t next = 0;
  for (auto& [label, index] : labels) index = next++;
  std::vector<Cover> rel;
  rel.reserve(pairs.size());
  for (const auto& [u, v] : pairs) rel.emplace_back(labels[u], labels[v]);
  return Poset::from_relations(labels.size(), rel);
}

Poset read_hasse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open Hasse file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_hasse(buf.str());
}

std::string to_dot(const Poset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=BT;\n  ranksep=0.6;\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < p.size(); ++v) out << "  " << v << ";\n";
  if (p.is_graded()) {
    const int d = p.max_rank();
    for (int r = 1; r <= d; ++r) {
      out << "  { rank=same;";
      for (std::size_t v = 0; v < p.size(); ++v)
        if (p.rank(v) == r) out << ' ' << v << ';';
      out << " }\n";
    }
  }
  for (const auto& [u, v] : p.covers()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace antichain
