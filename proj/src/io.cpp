#include "isospec/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace isospec {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw InputError(msg); }

void require_valid(const LoopSignedGraph& g, const std::string& where) {
  ValidationResult r = validate(g);
  if (!r) fail(where + ": " + r.message);
}

std::size_t as_index(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field + ": expected an integer");
  auto v = j.get<long long>();
  if (v < 1) fail(field + ": must be positive");
  return static_cast<std::size_t>(v);
}

LoopSignedGraph graph_from_json(const json& doc, const std::string& where) {
  if (!doc.is_object()) fail(where + ": expected an object");
  if (!doc.contains("version") || doc["version"] != 1) fail(where + ".version: must be 1");
  if (!doc.contains("vertices")) fail(where + ".vertices: missing");
  if (!doc.contains("colors")) fail(where + ".colors: missing");
  const std::size_t n = as_index(doc["vertices"], where + ".vertices");
  const std::size_t colors = as_index(doc["colors"], where + ".colors");
  if (n > 100000) fail(where + ".vertices: too large");
  const json& adj = doc.value("adjacency", json::array());
  if (!adj.is_array() || adj.size() != colors)
    fail(where + ".adjacency: expected " + std::to_string(colors) + " entries");
  std::vector<ColourSpec> specs(colors);
  std::vector<bool> seen_colour(colors, false);
  for (std::size_t k = 0; k < adj.size(); ++k) {
    const json& entry = adj[k];
    std::string at = where + ".adjacency[" + std::to_string(k) + "]";
    if (!entry.is_object()) fail(at + ": expected an object");
    std::size_t c = entry.contains("color") ? as_index(entry["color"], at + ".color") : k + 1;
    if (c > colors) fail(at + ".color: out of range");
    if (seen_colour[c - 1]) fail(at + ".color: colour " + std::to_string(c) + " listed twice");
    seen_colour[c - 1] = true;
    ColourSpec& spec = specs[c - 1];
    std::vector<int> incidence(n + 1, 0);
    auto touch = [&](std::size_t v, const std::string& field) {
      if (v > n) fail(field + ": vertex " + std::to_string(v) + " out of range");
      if (incidence[v]++) fail(field + ": vertex " + std::to_string(v) + " has a second incidence");
    };
    const json& edges = entry.value("edges", json::array());
    if (!edges.is_array()) fail(at + ".edges: expected an array");
    for (std::size_t e = 0; e < edges.size(); ++e) {
      std::string f = at + ".edges[" + std::to_string(e) + "]";
      if (!edges[e].is_array() || edges[e].size() != 2) fail(f + ": expected [u, v]");
      std::size_t u = as_index(edges[e][0], f), v = as_index(edges[e][1], f);
      if (u == v) fail(f + ": an edge needs two distinct vertices; use loops");
      touch(u, f);
      touch(v, f);
      spec.edges.emplace_back(u, v);
    }
    const json& loops = entry.value("loops", json::object());
    if (!loops.is_object()) fail(at + ".loops: expected an object");
    for (auto it = loops.begin(); it != loops.end(); ++it) {
      std::string f = at + ".loops." + it.key();
      std::size_t v = 0;
      try {
        std::size_t used = 0;
        v = std::stoul(it.key(), &used);
        if (used != it.key().size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        fail(f + ": key must be a vertex number");
      }
      if (v < 1) fail(f + ": vertex must be positive");
      if (!it.value().is_string()) fail(f + ": sign must be \"D\" or \"N\"");
      std::string s = it.value().get<std::string>();
      if (s != "D" && s != "N") fail(f + ": sign must be \"D\" or \"N\"");
      touch(v, f);
      spec.loops.emplace_back(v, s == "D" ? LoopSign::Dirichlet : LoopSign::Neumann);
    }
    for (std::size_t v = 1; v <= n; ++v)
      if (!incidence[v]) fail(at + ": vertex " + std::to_string(v) + " has no incidence");
  }
  LoopSignedGraph g = LoopSignedGraph::from_spec(n, specs);
  require_valid(g, where);
  return g;
}

json graph_to_json_value(const LoopSignedGraph& g) {
  json doc;
  doc["version"] = 1;
  doc["vertices"] = g.vertices();
  doc["colors"] = g.colors();
  json adj = json::array();
  for (std::size_t c = 0; c < g.colors(); ++c) {
    json entry;
    entry["color"] = c + 1;
    json edges = json::array();
    json loops = json::object();
    for (std::size_t v = 0; v < g.vertices(); ++v) {
      std::size_t w = g.partner(c, v);
      if (w == v)
        loops[std::to_string(v + 1)] = g.loop_sign(c, v) < 0 ? "D" : "N";
      else if (v < w)
        edges.push_back({v + 1, w + 1});
    }
    entry["edges"] = edges;
    entry["loops"] = loops;
    adj.push_back(entry);
  }
  doc["adjacency"] = adj;
  return doc;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(what + ": " + e.what());
  }
}

}  // namespace

LoopSignedGraph parse_graph_json(const std::string& text) {
  return graph_from_json(parse_json(text, "graph"), "graph");
}

std::string graph_to_json(const LoopSignedGraph& g) {
  json doc = graph_to_json_value(g);
  std::string out = "{\"version\":1,\"vertices\":" + std::to_string(g.vertices()) +
                    ",\"colors\":" + std::to_string(g.colors()) + ",\"adjacency\":[\n";
  for (std::size_t c = 0; c < g.colors(); ++c)
    out += "  " + doc["adjacency"][c].dump() + (c + 1 < g.colors() ? ",\n" : "\n");
  return out + "]}\n";
}

LoopSignedGraph parse_graph_cycles(const std::string& text) {
  static const std::regex header(R"(^\s*c(\d+)\s*:\s*(.*)$)");
  static const std::regex vertices_line(R"(^\s*vertices\s*:\s*(\d+)\s*$)");
  static const std::regex pair_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  static const std::regex loop_re(R"((\d+)\s*([DN]))");
  std::map<std::size_t, ColourSpec> specs;
  std::size_t declared = 0, max_vertex = 0;
  std::istringstream in(text);
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    std::string where = "line " + std::to_string(lineno);
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::smatch m;
    if (std::regex_match(line, m, vertices_line)) {
      declared = std::stoul(m[1]);
      continue;
    }
    if (!std::regex_match(line, m, header)) fail(where + ": expected \"cK: (a,b)... loops: ...\"");
    std::size_t c = std::stoul(m[1]);
    if (c < 1) fail(where + ": colours are numbered from 1");
    if (specs.count(c)) fail(where + ": colour " + std::to_string(c) + " given twice");
    std::string body = m[2];
    std::string edge_part = body, loop_part;
    auto lp = body.find("loops:");
    if (lp != std::string::npos) {
      edge_part = body.substr(0, lp);
      loop_part = body.substr(lp + 6);
    }
    ColourSpec& spec = specs[c];
    std::string rest = std::regex_replace(edge_part, pair_re, "");
    if (rest.find_first_not_of(" \t\r") != std::string::npos)
      fail(where + ": unexpected text \"" + rest + "\" in edge list");
    for (std::sregex_iterator it(edge_part.begin(), edge_part.end(), pair_re), end; it != end; ++it) {
      std::size_t u = std::stoul((*it)[1]), v = std::stoul((*it)[2]);
      if (u < 1 || v < 1 || u == v) fail(where + ": bad edge " + it->str());
      spec.edges.emplace_back(u, v);
      max_vertex = std::max({max_vertex, u, v});
    }
    rest = std::regex_replace(loop_part, loop_re, "");
    if (rest.find_first_not_of(" \t\r,") != std::string::npos)
      fail(where + ": unexpected text \"" + rest + "\" in loop list");
    for (std::sregex_iterator it(loop_part.begin(), loop_part.end(), loop_re), end; it != end; ++it) {
      std::size_t v = std::stoul((*it)[1]);
      if (v < 1) fail(where + ": bad loop " + it->str());
      spec.loops.emplace_back(v, (*it)[2] == "D" ? LoopSign::Dirichlet : LoopSign::Neumann);
      max_vertex = std::max(max_vertex, v);
    }
  }
  if (specs.empty()) fail("cycle text: no colours given");
  const std::size_t colors = specs.rbegin()->first;
  if (specs.size() != colors) fail("cycle text: colours must be numbered 1.." + std::to_string(colors));
  const std::size_t n = declared ? declared : max_vertex;
  if (max_vertex > n) fail("cycle text: vertex " + std::to_string(max_vertex) + " exceeds the declared count");
  std::vector<ColourSpec> ordered;
  for (auto& [c, spec] : specs) ordered.push_back(std::move(spec));
  LoopSignedGraph g;
  try {
    g = LoopSignedGraph::from_spec(n, ordered);
  } catch (const std::invalid_argument& e) {
    fail(std::string("cycle text: ") + e.what());
  }
  require_valid(g, "cycle text");
  return g;
}

std::string graph_to_cycles(const LoopSignedGraph& g) {
  std::ostringstream out;
  out << "vertices: " << g.vertices() << '\n';
  for (std::size_t c = 0; c < g.colors(); ++c) {
    out << 'c' << c + 1 << ':';
    bool any = false;
    for (std::size_t v = 0; v < g.vertices(); ++v) {
      std::size_t w = g.partner(c, v);
      if (v < w) {
        out << (any ? "" : " ") << '(' << v + 1 << ',' << w + 1 << ')';
        any = true;
      }
    }
    bool loops = false;
    for (std::size_t v = 0; v < g.vertices(); ++v)
      if (g.is_loop(c, v)) {
        out << (loops ? " " : " loops: ") << v + 1 << (g.loop_sign(c, v) < 0 ? 'D' : 'N');
        loops = true;
      }
    out << '\n';
  }
  return out.str();
}

LoopSignedGraph parse_graph(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
  return parse_graph_cycles(text);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write " + path);
  out << text;
  if (!out) fail("error writing " + path);
}

LoopSignedGraph read_graph_file(const std::string& path) {
  try {
    return parse_graph(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

RatMatrix parse_witness_json(const std::string& text) {
  json doc = parse_json(text, "witness");
  if (!doc.is_array() || doc.empty()) fail("witness: expected a non-empty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t r = 0; r < doc.size(); ++r) {
    const json& row = doc[r];
    if (!row.is_array() || row.size() != doc.front().size())
      fail("witness[" + std::to_string(r) + "]: rows must be arrays of equal length");
    std::vector<Rational> out;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string at = "witness[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      const json& e = row[c];
      if (e.is_number_integer()) {
        out.emplace_back(std::to_string(e.get<long long>()));
      } else if (e.is_string()) {
        static const std::regex rat(R"(\s*-?\d+(\s*/\s*\d+)?\s*)");
        std::string s = e.get<std::string>();
        if (!std::regex_match(s, rat)) fail(at + ": expected \"p/q\"");
        s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
        Rational q(s);
        if (q.get_den() == 0) fail(at + ": zero denominator");
        q.canonicalize();
        out.push_back(q);
      } else {
        fail(at + ": expected an integer or a \"p/q\" string");
      }
    }
    rows.push_back(std::move(out));
  }
  return RatMatrix::from_rows(rows);
}

std::string witness_to_json(const RatMatrix& t) {
  std::string out = "[\n";
  for (std::size_t r = 0; r < t.rows(); ++r) {
    out += "  [";
    for (std::size_t c = 0; c < t.cols(); ++c) {
      const Rational& v = t(r, c);
      out += c ? "," : "";
      out += v.get_den() == 1 ? v.get_num().get_str() : "\"" + v.get_str() + "\"";
    }
    out += r + 1 < t.rows() ? "],\n" : "]\n";
  }
  return out + "]\n";
}

std::string export_dot(const LoopSignedGraph& g, const std::string& name) {
  static const char* styles[] = {"solid", "dashed", "dotted"};
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.vertices(); ++v) out << "  " << v + 1 << ";\n";
  for (std::size_t c = 0; c < g.colors(); ++c) {
    std::string attrs = c < 3 ? std::string("style=") + styles[c] : "label=\"c" + std::to_string(c + 1) + "\"";
    for (std::size_t v = 0; v < g.vertices(); ++v) {
      std::size_t w = g.partner(c, v);
      if (v < w) out << "  " << v + 1 << " -- " << w + 1 << " [" << attrs << "];\n";
    }
    for (std::size_t v = 0; v < g.vertices(); ++v)
      if (g.is_loop(c, v)) {
        std::string label = g.loop_sign(c, v) < 0 ? "D" : "N";
        if (c >= 3) label += std::to_string(c + 1);
        out << "  " << v + 1 << " -- " << v + 1 << " [";
        if (c < 3) out << "style=" << styles[c] << ", ";
        out << "label=\"" << label << "\"];\n";
      }
  }
  out << "}\n";
  return out.str();
}

std::vector<SignedPerm> parse_generators_json(const std::string& text) {
  json doc = parse_json(text, "generators");
  if (!doc.is_object() || !doc.contains("size") || !doc.contains("generators"))
    fail("generators: expected {\"size\": n, \"generators\": [...]}");
  std::size_t n = as_index(doc["size"], "generators.size");
  if (!doc["generators"].is_array() || doc["generators"].empty()) fail("generators.generators: expected a non-empty array");
  std::vector<SignedPerm> out;
  for (std::size_t k = 0; k < doc["generators"].size(); ++k) {
    const json& g = doc["generators"][k];
    std::string at = "generators.generators[" + std::to_string(k) + "]";
    if (!g.is_string()) fail(at + ": expected a cycle string");
    try {
      out.push_back(parse_signed_cycles(g.get<std::string>(), n));
    } catch (const std::invalid_argument& e) {
      fail(at + ": " + e.what());
    }
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 1) fail("word \"" + text + "\": bad letter \"" + tok + "\"");
    w.push_back(v - 1);
  }
  return w;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) out += (k ? " " : "") + std::to_string(w[k] + 1);
  return out;
}

SubstitutionPlan parse_substitution_json(const std::string& text) {
  json doc = parse_json(text, "substitution");
  if (!doc.is_object() || !doc.contains("host") || !doc.contains("substituent") || !doc.contains("assignment"))
    fail("substitution: expected host, substituent and assignment");
  SubstitutionPlan plan;
  plan.host = graph_from_json(doc["host"], "substitution.host");
  plan.substituent = graph_from_json(doc["substituent"], "substitution.substituent");
  const json& a = doc["assignment"];
  if (!a.is_array()) fail("substitution.assignment: expected an array");
  for (std::size_t chi = 0; chi < a.size(); ++chi) {
    std::string at = "substitution.assignment[" + std::to_string(chi) + "]";
    if (!a[chi].is_array()) fail(at + ": expected an array per host colour");
    std::vector<std::vector<std::size_t>> per_host;
    for (std::size_t c = 0; c < a[chi].size(); ++c) {
      const json& verts = a[chi][c];
      if (!verts.is_array()) fail(at + "[" + std::to_string(c) + "]: expected a vertex list");
      std::vector<std::size_t> list;
      for (const json& v : verts) list.push_back(as_index(v, at) - 1);
      per_host.push_back(std::move(list));
    }
    plan.assignment.push_back(std::move(per_host));
  }
  try {
    check_plan(plan);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return plan;
}

}  // namespace isospec
