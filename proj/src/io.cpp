#include "twoclub/io.hpp"

#include <fstream>
#include <sstream>

namespace twoclub {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int parse_int(const std::string& tok, int line) {
  try {
    std::size_t pos = 0;
    int value = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
}

// comma-separated 1-based ids -> 0-based; empty string is the empty set
std::vector<int> parse_id_list(const std::string& text, int line) {
  std::vector<int> ids;
  std::string t = trim(text);
  if (t.empty()) return ids;
  for (const auto& tok : split(t, ',')) {
    int id = parse_int(trim(tok), line);
    if (id < 1) throw ParseError(line, "vertex ids are 1-based");
    ids.push_back(id - 1);
  }
  return ids;
}

std::string format_id_list(const std::vector<int>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i] + 1);
  }
  return out;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1, m = -1, edges_seen = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == 'c') continue;
    std::istringstream ls(t);
    std::string kind;
    ls >> kind;
    if (kind == "p") {
      if (n != -1) throw ParseError(line_no, "duplicate problem line");
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || fmt != "gcc" || n < 0 || m < 0)
        throw ParseError(line_no, "malformed problem line, expected 'p gcc <n> <m>'");
      g = make_graph(n);
    } else if (kind == "e") {
      if (n == -1) throw ParseError(line_no, "edge before problem line");
      int u, v;
      if (!(ls >> u >> v)) throw ParseError(line_no, "malformed edge line");
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError(line_no, "edge endpoint out of range");
      if (u == v) throw ParseError(line_no, "self-loop");
      if (has_edge(g, u - 1, v - 1)) throw ParseError(line_no, "duplicate edge");
      add_edge(g, u - 1, v - 1);
      ++edges_seen;
    } else {
      throw ParseError(line_no, "unknown line kind '" + kind + "'");
    }
  }
  if (n == -1) throw ParseError(line_no, "missing problem line");
  if (edges_seen != m) throw ParseError(line_no, "edge count does not match header");
  return g;
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string write_graph(const Graph& g) {
  std::string out = "p gcc " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : edge_list(g))
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

EditScript parse_script(std::istream& in, Problem problem) {
  EditScript script;
  script.problem = problem;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == 'c') continue;
    if (t[0] == 'd') {
      std::istringstream ls(t.substr(1));
      int u, v;
      if (!(ls >> u >> v)) throw ParseError(line_no, "malformed deletion");
      if (u < 1 || v < 1) throw ParseError(line_no, "vertex ids are 1-based");
      script.ops.push_back(DeleteEdgeOp{u - 1, v - 1});
    } else if (t[0] == 's') {
      auto parts = split(t.substr(1), '|');
      if (parts.size() != 3) throw ParseError(line_no, "split needs 's v | keep | off'");
      SplitOp op;
      op.v = parse_int(trim(parts[0]), line_no) - 1;
      if (op.v < 0) throw ParseError(line_no, "vertex ids are 1-based");
      op.keep = parse_id_list(parts[1], line_no);
      op.off = parse_id_list(parts[2], line_no);
      script.ops.push_back(std::move(op));
    } else {
      throw ParseError(line_no, "unknown op kind");
    }
  }
  return script;
}

EditScript parse_script_string(const std::string& text, Problem problem) {
  std::istringstream in(text);
  return parse_script(in, problem);
}

std::string write_script(const EditScript& script) {
  std::string out;
  for (const auto& op : script.ops) {
    if (const auto* del = std::get_if<DeleteEdgeOp>(&op)) {
      int u = std::min(del->u, del->v), v = std::max(del->u, del->v);
      out += "d " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    } else {
      const auto& s = std::get<SplitOp>(op);
      auto keep = s.keep, off = s.off;
      std::sort(keep.begin(), keep.end());
      std::sort(off.begin(), off.end());
      out += "s " + std::to_string(s.v + 1) + " | " + format_id_list(keep) +
             " | " + format_id_list(off) + "\n";
    }
  }
  return out;
}

std::vector<std::vector<int>> parse_cover(std::istream& in) {
  std::vector<std::vector<int>> sets;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == 'c') continue;
    auto ids = parse_id_list(t, line_no);
    if (ids.empty()) throw ParseError(line_no, "empty cover set");
    sets.push_back(std::move(ids));
  }
  return sets;
}

std::string write_cover(const std::vector<std::vector<int>>& sets) {
  std::string out;
  for (const auto& set : sets) {
    auto s = set;
    std::sort(s.begin(), s.end());
    out += format_id_list(s) + "\n";
  }
  return out;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in);
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace twoclub
