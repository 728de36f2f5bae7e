#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "twoclub/edit.hpp"
#include "twoclub/graph.hpp"

namespace twoclub {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

// Graph format: `p gcc <n> <m>` header, then m lines `e <u> <v>` with
// 1 <= u < v <= n. `c` lines are comments. All ids are 1-based on the wire.
Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
std::string write_graph(const Graph& g);

// Script format, one op per line:
//   d <u> <v>
//   s <v> | <keep ids, comma separated> | <off ids>
// The copy id of a split is implicit (next free integer).
EditScript parse_script(std::istream& in, Problem problem);
EditScript parse_script_string(const std::string& text, Problem problem);
std::string write_script(const EditScript& script);

// Cover format: one line per set, comma-separated 1-based vertex ids.
std::vector<std::vector<int>> parse_cover(std::istream& in);
std::string write_cover(const std::vector<std::vector<int>>& sets);

Graph load_graph_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace twoclub
