#pragma once

// Reads back the Hasse-diagram DOT written by the library: quoted node names,
// edges drawn from the upper element to the lower one.

#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace dot {

struct Graph {
  std::string name;
  std::vector<std::string> nodes;  // first appearance order
  std::vector<std::pair<std::string, std::string>> edges;  // (upper, lower)
  std::vector<std::vector<std::string>> ranks;
};

inline Graph parse(const std::string& text) {
  Graph g;
  auto add_node = [&](const std::string& n) {
    for (const auto& m : g.nodes)
      if (m == n) return;
    g.nodes.push_back(n);
  };
  static const std::regex header(R"(^digraph (\w+) \{$)");
  static const std::regex edge(R"re(^\s*"([^"]*)" -> "([^"]*)";$)re");
  static const std::regex quoted(R"re("([^"]*)")re");
  std::istringstream in(text);
  std::string line;
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_match(line, m, header)) {
      g.name = m[1];
    } else if (std::regex_match(line, m, edge)) {
      add_node(m[1]);
      add_node(m[2]);
      g.edges.emplace_back(m[1], m[2]);
    } else if (line.find("rank=same") != std::string::npos) {
      std::vector<std::string> rank;
      for (auto it = std::sregex_iterator(line.begin(), line.end(), quoted); it != std::sregex_iterator(); ++it) {
        rank.push_back((*it)[1]);
        add_node((*it)[1]);
      }
      g.ranks.push_back(rank);
    }
  }
  return g;
}

}  // namespace dot
