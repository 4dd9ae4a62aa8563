#pragma once

// Plain-text surface specification files.
//
// Grammar (one directive per line; '#' starts a comment; blank lines are
// ignored; tokens are separated by spaces or tabs):
//
//   pants <id>                                   declare a pants node
//   glue <a>:<i> <b>:<j> length <L> twist <T>    interior curve, FN values
//   boundary <a>:<i> length <L>                  unglued cuff, length L > 0
//   cusp <a>:<i>                                 unglued cuff, length 0
//
// <a> and <b> are pants ids, <i> and <j> are cuff slots in 0..2. Ids must
// be declared in order 0, 1, 2, ... before they are referenced. Gluings
// are kept in file order (this is the graph order that FNCoordinates
// refers to); boundary and cusp lines may appear in any order but must
// cover every unglued slot exactly once.
//
// Numbers are written in shortest round-trip decimal form, so
// parse_surface(write_surface(s)) reproduces s exactly, bit for bit.
//
// Example (one-holed torus, boundary length 1/2):
//
//   pants 0
//   glue 0:0 0:1 length 2 twist 1
//   boundary 0:2 length 0.5

#include <string>

#include "geowb/pants_graph.hpp"

namespace geowb {

struct SurfaceSpec {
  PantsGraph graph;
  FNCoordinates fn;
};

// Parse the text of a surface file. Throws std::invalid_argument with a
// line-numbered message for syntax errors (unknown directive, malformed
// slot reference or number, undeclared node, slot outside 0..2, a slot
// assigned twice) and for structural errors reported by the graph and
// coordinate validators (non-positive interior length, disconnected
// graph, uncovered boundary slot, ...).
SurfaceSpec parse_surface(const std::string& text);

// Serialize in the canonical form shown above: a comment header, the
// pants nodes, the gluings in graph order, then the unglued slots in
// (node, slot) order, cusps written as `cusp`. The spec is validated
// first. parse_surface(write_surface(s)) == s exactly.
std::string write_surface(const SurfaceSpec& spec);

// File wrappers. read_surface_file throws std::runtime_error if the file
// cannot be read, write_surface_file if it cannot be written; parse and
// validation errors propagate from parse_surface/write_surface.
SurfaceSpec read_surface_file(const std::string& path);
void write_surface_file(const SurfaceSpec& spec, const std::string& path);

}  // namespace geowb
