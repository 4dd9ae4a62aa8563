#include "geowb/surface_io.hpp"

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geowb/format.hpp"

namespace geowb {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw std::invalid_argument("surface file line " +
                              format_int(line_no) + ": " + what);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool parse_int(const std::string& text, int& out) {
  if (text.empty()) return false;
  long long value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return false;
    value = value * 10 + (ch - '0');
    if (value > 1000000) return false;
  }
  out = static_cast<int>(value);
  return true;
}

// "<node>:<slot>" with the node already declared and the slot in 0..2.
std::pair<int, int> parse_slot_ref(const std::string& token, int n_pants,
                                   int line_no) {
  const std::size_t colon = token.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= token.size())
    fail(line_no, "expected <node>:<slot>, got '" + token + "'");
  int node = 0;
  int slot = 0;
  if (!parse_int(token.substr(0, colon), node) ||
      !parse_int(token.substr(colon + 1), slot))
    fail(line_no, "expected <node>:<slot>, got '" + token + "'");
  if (node >= n_pants)
    fail(line_no, "pants node " + format_int(node) + " not declared");
  if (slot > 2) fail(line_no, "cuff slot must be 0, 1, or 2");
  return {node, slot};
}

double parse_number(const std::string& token, int line_no) {
  double value = 0.0;
  if (!parse_double(token, value))
    fail(line_no, "malformed number '" + token + "'");
  return value;
}

void expect_keyword(const std::vector<std::string>& tokens, std::size_t index,
                    const std::string& keyword, int line_no) {
  if (index >= tokens.size() || tokens[index] != keyword)
    fail(line_no, "expected '" + keyword + "'");
}

}  // namespace

SurfaceSpec parse_surface(const std::string& text) {
  SurfaceSpec spec;
  // (node, slot) -> length of an unglued cuff, in file order of appearance.
  std::map<std::pair<int, int>, Length> free_slots;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& directive = tokens[0];

    if (directive == "pants") {
      if (tokens.size() != 2) fail(line_no, "usage: pants <id>");
      int id = 0;
      if (!parse_int(tokens[1], id)) fail(line_no, "usage: pants <id>");
      if (id != spec.graph.n_pants)
        fail(line_no, "pants ids must be declared in order; expected " +
                          format_int(spec.graph.n_pants));
      ++spec.graph.n_pants;
    } else if (directive == "glue") {
      if (tokens.size() != 7)
        fail(line_no, "usage: glue <a>:<i> <b>:<j> length <L> twist <T>");
      const auto a = parse_slot_ref(tokens[1], spec.graph.n_pants, line_no);
      const auto b = parse_slot_ref(tokens[2], spec.graph.n_pants, line_no);
      expect_keyword(tokens, 3, "length", line_no);
      expect_keyword(tokens, 5, "twist", line_no);
      spec.graph.gluings.push_back({a.first, a.second, b.first, b.second});
      spec.fn.lengths.push_back(parse_number(tokens[4], line_no));
      spec.fn.twists.push_back(parse_number(tokens[6], line_no));
    } else if (directive == "boundary") {
      if (tokens.size() != 4)
        fail(line_no, "usage: boundary <a>:<i> length <L>");
      const auto a = parse_slot_ref(tokens[1], spec.graph.n_pants, line_no);
      expect_keyword(tokens, 2, "length", line_no);
      const double length = parse_number(tokens[3], line_no);
      if (!free_slots.emplace(a, length).second)
        fail(line_no, "slot " + tokens[1] + " already assigned");
    } else if (directive == "cusp") {
      if (tokens.size() != 2) fail(line_no, "usage: cusp <a>:<i>");
      const auto a = parse_slot_ref(tokens[1], spec.graph.n_pants, line_no);
      if (!free_slots.emplace(a, 0.0).second)
        fail(line_no, "slot " + tokens[1] + " already assigned");
    } else {
      fail(line_no, "unknown directive '" + directive + "'");
    }
  }

  spec.graph.validate();

  // Boundary lengths in (node, slot) order, matching FNCoordinates.
  for (const auto& slot : spec.graph.boundary_slots()) {
    const auto it = free_slots.find(slot);
    if (it == free_slots.end())
      throw std::invalid_argument(
          "surface file: unglued slot " + format_int(slot.first) + ":" +
          format_int(slot.second) + " has no boundary or cusp line");
    spec.fn.boundary_lengths.push_back(it->second);
    free_slots.erase(it);
  }
  if (!free_slots.empty()) {
    const auto& slot = *free_slots.begin();
    throw std::invalid_argument(
        "surface file: slot " + format_int(slot.first.first) + ":" +
        format_int(slot.first.second) + " is glued but also listed as free");
  }

  validate_fn(spec.graph, spec.fn);
  return spec;
}

std::string write_surface(const SurfaceSpec& spec) {
  spec.graph.validate();
  validate_fn(spec.graph, spec.fn);

  std::string out = "# geowb surface, signature (g, n) = (" +
                    format_int(spec.graph.genus()) + ", " +
                    format_int(spec.graph.n_boundary()) + ")\n";
  for (int node = 0; node < spec.graph.n_pants; ++node)
    out += "pants " + format_int(node) + "\n";
  for (std::size_t i = 0; i < spec.graph.gluings.size(); ++i) {
    const Gluing& g = spec.graph.gluings[i];
    out += "glue " + format_int(g.node_a) + ":" + format_int(g.slot_a) + " " +
           format_int(g.node_b) + ":" + format_int(g.slot_b) + " length " +
           format_double(spec.fn.lengths[i]) + " twist " +
           format_double(spec.fn.twists[i]) + "\n";
  }
  const auto slots = spec.graph.boundary_slots();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const std::string ref =
        format_int(slots[i].first) + ":" + format_int(slots[i].second);
    const Length length = spec.fn.boundary_lengths[i];
    if (length == 0.0)
      out += "cusp " + ref + "\n";
    else
      out += "boundary " + ref + " length " + format_double(length) + "\n";
  }
  return out;
}

SurfaceSpec read_surface_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read surface file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_surface(buffer.str());
}

void write_surface_file(const SurfaceSpec& spec, const std::string& path) {
  const std::string text = write_surface(spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write surface file: " + path);
  out << text;
  if (!out.flush())
    throw std::runtime_error("cannot write surface file: " + path);
}

}  // namespace geowb
