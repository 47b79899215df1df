#ifndef ISOSPEC_IO_HPP_
#define ISOSPEC_IO_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "isospec/algebra.hpp"
#include "isospec/graph.hpp"
#include "isospec/invariants.hpp"
#include "isospec/transform.hpp"

namespace isospec {

// Malformed or invalid input; the message names the line or field.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"version":1,"vertices":V,"colors":C,"adjacency":[{"color":1,
//   "edges":[[1,2]],"loops":{"3":"D"}}, ...]}
LoopSignedGraph parse_graph_json(const std::string& text);
std::string graph_to_json(const LoopSignedGraph& g);

// One line per colour: "c1: (1,8)(3,10) loops: 2N 4D".  The vertex count is
// the largest vertex mentioned unless a "vertices: V" line is present.
LoopSignedGraph parse_graph_cycles(const std::string& text);
std::string graph_to_cycles(const LoopSignedGraph& g);

// JSON if the first non-blank character is '{', cycle text otherwise.
LoopSignedGraph parse_graph(const std::string& text);
LoopSignedGraph read_graph_file(const std::string& path);

// Array of rows; entries are integers or "p/q" strings.
RatMatrix parse_witness_json(const std::string& text);
std::string witness_to_json(const RatMatrix& t);

// Colour 1 solid, 2 dashed, 3 dotted, further colours labelled; loops are
// labelled D or N.
std::string export_dot(const LoopSignedGraph& g, const std::string& name = "G");

// {"size":n,"generators":["(1,2)","(-1)"]}
std::vector<SignedPerm> parse_generators_json(const std::string& text);

// "1 2 1" (1-based generators or colours); "e" or "" is the empty word.
Word parse_word(const std::string& text);
std::string word_to_string(const Word& w);

// {"host": G, "substituent": G, "assignment": [[[1,2],[]], ...]} with
// assignment[chi][c] listing 1-based substituent vertices.
SubstitutionPlan parse_substitution_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace isospec

#endif  // ISOSPEC_IO_HPP_
