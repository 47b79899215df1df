// Command-line driver.  Exit status: 0 success, 1 negative verdict, 2 input
// error, 3 resource limit or internal failure.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isospec/catalog.hpp"
#include "isospec/enumerate.hpp"
#include "isospec/graph.hpp"
#include "isospec/invariants.hpp"
#include "isospec/io.hpp"
#include "isospec/reps.hpp"
#include "isospec/transform.hpp"
#include "isospec/transplant.hpp"

using nlohmann::json;
using namespace isospec;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInput = 2;
constexpr int kFailure = 3;

json graph_json(const LoopSignedGraph& g) { return json::parse(graph_to_json(g)); }

json witness_json(const RatMatrix& t) { return json::parse(witness_to_json(t)); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::size_t colour_arg(const LoopSignedGraph& g, std::size_t c) {
  if (c < 1 || c > g.colors()) throw InputError("colour " + std::to_string(c) + " out of range 1.." + std::to_string(g.colors()));
  return c - 1;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    write_text_file(out, text);
}

struct CheckArgs {
  std::string a, b, witness_out, method = "auto";
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultClosureCap;
};

int run_check(const CheckArgs& args) {
  LoopSignedGraph g1 = read_graph_file(args.a);
  LoopSignedGraph g2 = read_graph_file(args.b);
  if (g1.colors() != g2.colors()) throw InputError("graphs have different colour counts");
  DecideOptions opts;
  opts.method = method_from_string(args.method);
  opts.seed = args.seed;
  opts.cap = args.cap;
  Decision d = decide(g1, g2, opts);
  json out;
  out["verdict"] = d.yes ? "yes" : "no";
  out["method"] = to_string(d.method);
  if (d.group_order) out["group_order"] = *d.group_order;
  if (d.certificate) {
    json cert;
    cert["word"] = word_to_string(d.certificate->word);
    cert["trace_a"] = d.certificate->trace1;
    cert["trace_b"] = d.certificate->trace2;
    if (d.certificate->inconsistent_words)
      cert["inconsistent_words"] = {word_to_string(d.certificate->inconsistent_words->first),
                                    word_to_string(d.certificate->inconsistent_words->second)};
    out["certificate"] = cert;
  }
  if (d.witness) {
    out["witness_verified"] = verify_witness(g1, g2, *d.witness);
    if (!args.witness_out.empty()) write_text_file(args.witness_out, witness_to_json(*d.witness));
  }
  std::cout << out.dump(2) << '\n';
  return d.yes ? kOk : kNegative;
}

struct InvariantArgs {
  std::string graph;
  std::size_t max_word = 6, kron_dim = 3, kron_pow = 0;
  std::uint64_t seed = 1;
};

int run_invariants(const InvariantArgs& args) {
  LoopSignedGraph g = read_graph_file(args.graph);
  SpectralReport r = spectral_report(g);
  json out;
  out["vertices"] = g.vertices();
  out["colors"] = g.colors();
  json spectral;
  spectral["block_count"] = r.block_count;
  spectral["boundary_balance"] = r.boundary_balance;
  json corners = json::array();
  for (const auto& ct : r.corner_traces)
    corners.push_back({{"colors", {ct.c1 + 1, ct.c2 + 1}}, {"t2", ct.t2}, {"t4", ct.t4}});
  spectral["corner_traces"] = corners;
  spectral["loopless_edges"] = r.loopless_edges ? json(*r.loopless_edges) : json(nullptr);
  out["spectral"] = spectral;
  json profile = json::array();
  for (const auto& [w, t] : trace_profile(g, args.max_word))
    profile.push_back({{"word", word_to_string(w)}, {"trace", t}});
  out["trace_profile"] = profile;
  std::size_t power = args.kron_pow ? args.kron_pow : 2 * g.vertices();
  out["kron_probe"] = {{"dim", args.kron_dim}, {"power", power}, {"seed", args.seed},
                       {"values", kron_probe(g, args.kron_dim, power, args.seed)}};
  out["det_probe"] = {{"seed", args.seed}, {"value", det_probe(g, args.seed)}};
  std::cout << out.dump(2) << '\n';
  return kOk;
}

struct CensusArgs {
  std::size_t vertices = 2, colors = 3, threads = 1;
  std::string loops = "mixed", method = "auto", pairs_out;
  bool treelike = false, quilts = false, json_out = false;
  std::uint64_t seed = 1;
};

int run_census(const CensusArgs& args) {
  CensusOptions opts;
  opts.enumeration.vertices = args.vertices;
  opts.enumeration.colors = args.colors;
  opts.enumeration.regime = regime_from_string(args.loops);
  opts.enumeration.treelike_only = args.treelike;
  opts.threads = args.threads;
  opts.quilts = args.quilts;
  opts.seed = args.seed;
  opts.decide.method = method_from_string(args.method);
  opts.decide.seed = args.seed;
  CensusRow row = census(opts);
  if (!args.pairs_out.empty()) {
    std::filesystem::create_directories(args.pairs_out);
    for (std::size_t i = 0; i < row.pairs.size(); ++i) {
      std::string stem = args.pairs_out + "/pair_" + std::to_string(i + 1);
      write_text_file(stem + "_a.json", graph_to_json(row.pairs[i].first));
      write_text_file(stem + "_b.json", graph_to_json(row.pairs[i].second));
    }
  }
  if (args.json_out) {
    json out = {{"vertices", row.vertices},
                {"colors", row.colors},
                {"loops", to_string(row.regime)},
                {"treelike_only", row.treelike_only},
                {"classes", row.class_count},
                {"treelike_classes", row.treelike_count},
                {"pairs", row.pair_count},
                {"treelike_pairs", row.treelike_pair_count},
                {"colour_classes", row.class_pair_count},
                {"treelike_colour_classes", row.treelike_class_pair_count},
                {"decisions", row.decisions}};
    if (row.quilt_count) out["quilts"] = *row.quilt_count;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "# V=" << row.vertices << " C=" << row.colors << " loops=" << to_string(row.regime)
              << (row.treelike_only ? " treelike-only" : "")
              << ": classes / treelike / pairs / treelike pairs / colour classes / treelike colour classes"
              << (row.quilt_count ? " / quilts" : "") << '\n';
    std::cout << row.class_count << " / " << row.treelike_count << " / " << row.pair_count << " / "
              << row.treelike_pair_count << " / " << row.class_pair_count << " / " << row.treelike_class_pair_count;
    if (row.quilt_count) std::cout << " / " << *row.quilt_count;
    std::cout << '\n';
  }
  return kOk;
}

struct EnumerateArgs {
  std::size_t vertices = 2, colors = 3, shard_count = 1, shard_index = 0;
  std::string loops = "mixed", out_dir;
  bool treelike = false, count_only = false;
};

int run_enumerate(const EnumerateArgs& args) {
  EnumOptions opts;
  opts.vertices = args.vertices;
  opts.colors = args.colors;
  opts.regime = regime_from_string(args.loops);
  opts.treelike_only = args.treelike;
  opts.shard_count = args.shard_count;
  opts.shard_index = args.shard_index;
  if (!args.out_dir.empty()) std::filesystem::create_directories(args.out_dir);
  std::size_t k = 0;
  EnumStats stats = enumerate_classes(opts, [&](const LoopSignedGraph& g) {
    ++k;
    if (args.count_only) return;
    if (!args.out_dir.empty())
      write_text_file(args.out_dir + "/graph_" + std::to_string(k) + ".json", graph_to_json(g));
    else
      std::cout << graph_json(g).dump() << '\n';
  });
  if (args.count_only || !args.out_dir.empty())
    std::cout << json{{"classes", stats.classes}, {"treelike", stats.treelike}}.dump() << '\n';
  return kOk;
}

struct TransformArgs {
  std::string op, a, b, out, signs_out, colours, sign = "N";
  std::size_t colour = 0, by = 0;
};

int run_transform(const TransformArgs& args) {
  const std::string& op = args.op;
  if (op == "substitute") {
    SubstitutionPlan plan = parse_substitution_json(read_text_file(args.a));
    emit(graph_to_json(substitute(plan)), args.out);
    return kOk;
  }
  LoopSignedGraph g = read_graph_file(args.a);
  std::optional<SignedResult> signed_result;
  if (op == "dual") {
    signed_result = dualize(g);
    if (!signed_result) throw InputError("dual: no sign partition exists (loopless version not bipartite)");
  } else if (op == "swap-signs") {
    std::vector<std::size_t> set;
    for (const auto& s : split(args.colours, ',')) {
      if (s.empty()) continue;
      set.push_back(colour_arg(g, std::stoul(s)));
    }
    signed_result = swap_loop_signs(g, set);
    if (!signed_result) throw InputError("swap-signs: no sign partition exists");
  } else if (op == "braid") {
    signed_result = braid(g, colour_arg(g, args.colour), colour_arg(g, args.by));
    if (!signed_result) throw InputError("braid: result is not normalizable");
  } else if (op == "copy-color") {
    emit(graph_to_json(copy_colour(g, colour_arg(g, args.colour))), args.out);
    return kOk;
  } else if (op == "add-color") {
    if (args.sign != "D" && args.sign != "N") throw InputError("add-color: --sign must be D or N");
    emit(graph_to_json(add_identity_colour(g, args.sign == "D" ? LoopSign::Dirichlet : LoopSign::Neumann)), args.out);
    return kOk;
  } else if (op == "omit-color") {
    if (g.colors() < 2) throw InputError("omit-color: the graph has a single colour");
    emit(graph_to_json(omit_colour(g, colour_arg(g, args.colour))), args.out);
    return kOk;
  } else if (op == "cross") {
    if (args.b.empty()) throw InputError("cross: two graphs required");
    LoopSignedGraph h = read_graph_file(args.b);
    if (g.has_dirichlet_loop() || h.has_dirichlet_loop()) throw InputError("cross: inputs must not carry Dirichlet loops");
    emit(graph_to_json(cross(g, h)), args.out);
    return kOk;
  } else {
    throw InputError("unknown transform '" + op + "'");
  }
  emit(graph_to_json(signed_result->graph), args.out);
  if (!args.signs_out.empty()) write_text_file(args.signs_out, json(signed_result->signs).dump() + "\n");
  return kOk;
}

struct SchreierArgs {
  std::string generators, subgroup, character, out;
};

int run_schreier(const SchreierArgs& args) {
  std::vector<SignedPerm> gens = parse_generators_json(read_text_file(args.generators));
  GroupClosure group = closure(gens);
  std::vector<Word> words;
  for (const auto& w : split(args.subgroup, ',')) words.push_back(parse_word(w));
  std::vector<int> values;
  for (const auto& v : split(args.character, ',')) {
    if (v == "1" || v == "+1") values.push_back(1);
    else if (v == "-1") values.push_back(-1);
    else throw InputError("character value '" + v + "' is not +-1");
  }
  SubCharPair pair;
  try {
    pair = subgroup_from_words(group, words, values);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  LoopSignedGraph g;
  try {
    g = schreier_graph(group, pair);
  } catch (const NotBipartite& e) {
    throw InputError(e.what());
  }
  emit(graph_to_json(g), args.out);
  return kOk;
}

int run_export(const std::string& format, const std::string& path, const std::string& out) {
  LoopSignedGraph g = read_graph_file(path);
  if (format == "dot")
    emit(export_dot(g), out);
  else if (format == "json")
    emit(graph_to_json(g), out);
  else if (format == "cycles")
    emit(graph_to_cycles(g), out);
  else
    throw InputError("unknown export format '" + format + "'");
  return kOk;
}

int run_catalog(const std::string& name, const std::string& out_dir) {
  if (name == "d4-group") {
    D4Data d = catalog_d4();
    json gens = json::array();
    for (const auto& g : d.generators) gens.push_back(to_cycle_string(g));
    auto words = [](const std::vector<Word>& ws) {
      json a = json::array();
      for (const auto& w : ws) a.push_back(word_to_string(w));
      return a;
    };
    json doc = {{"name", name},
                {"size", 2},
                {"generators", gens},
                {"H", {{"words", words(d.h_words)}, {"character", d.h_values}}},
                {"H_hat", {{"words", words(d.h_hat_words)}, {"character", d.h_hat_values}}}};
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      write_text_file(out_dir + "/d4_generators.json", json{{"size", 2}, {"generators", gens}}.dump(2) + "\n");
    }
    std::cout << doc.dump(2) << '\n';
    return kOk;
  }
  CatalogPair p;
  if (name == "gww")
    p = catalog_gww();
  else if (name == "square-triangle")
    p = catalog_square_triangle();
  else if (name == "band15")
    p = catalog_band15();
  else
    throw InputError("unknown catalog entry '" + name + "'");
  json doc = {{"name", name}, {"graphs", {graph_json(p.first), graph_json(p.second)}}};
  if (p.witness) doc["witness"] = witness_json(*p.witness);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::string stem = out_dir + "/" + name;
    write_text_file(stem + "_a.json", graph_to_json(p.first));
    write_text_file(stem + "_b.json", graph_to_json(p.second));
    if (p.witness) write_text_file(stem + "_witness.json", witness_to_json(*p.witness));
  }
  std::cout << doc.dump(2) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transplantability of loop-signed graphs"};
  app.require_subcommand(1);
  int status = kOk;

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Decide transplantability of two graphs");
  c->add_option("A", check.a, "First graph")->required();
  c->add_option("B", check.b, "Second graph")->required();
  c->add_option("--witness", check.witness_out, "Write the witness matrix here");
  c->add_option("--method", check.method, "auto|group|orbit")->check(CLI::IsMember({"auto", "group", "orbit"}));
  c->add_option("--seed", check.seed, "Random seed");
  c->add_option("--cap", check.cap, "Group closure cap");
  c->callback([&] { status = run_check(check); });

  InvariantArgs inv;
  auto* i = app.add_subcommand("invariants", "Word traces, probes and the spectral report");
  i->add_option("G", inv.graph, "Graph")->required();
  i->add_option("--max-word", inv.max_word, "Longest word in the trace profile");
  i->add_option("--kron-dim", inv.kron_dim, "Probe matrix dimension")->check(CLI::PositiveNumber);
  i->add_option("--kron-pow", inv.kron_pow, "Number of probe powers (default 2V)");
  i->add_option("--seed", inv.seed, "Random seed");
  i->callback([&] { status = run_invariants(inv); });

  CensusArgs cen;
  auto* s = app.add_subcommand("census", "Count classes and transplantable pairs");
  s->add_option("--vertices", cen.vertices, "Vertices per graph")->required()->check(CLI::PositiveNumber);
  s->add_option("--colors", cen.colors, "Edge colours")->required()->check(CLI::PositiveNumber);
  s->add_option("--loops", cen.loops, "mixed|dirichlet|neumann")->check(CLI::IsMember({"mixed", "dirichlet", "neumann"}));
  s->add_flag("--treelike", cen.treelike, "Only treelike graphs");
  s->add_flag("--quilts", cen.quilts, "Also count quilt classes");
  s->add_flag("--json", cen.json_out, "JSON output");
  s->add_option("--threads", cen.threads, "Enumeration threads")->check(CLI::PositiveNumber);
  s->add_option("--seed", cen.seed, "Probe seed");
  s->add_option("--method", cen.method, "auto|group|orbit")->check(CLI::IsMember({"auto", "group", "orbit"}));
  s->add_option("--pairs-out", cen.pairs_out, "Write every pair into this directory");
  s->callback([&] { status = run_census(cen); });

  EnumerateArgs en;
  std::string shard;
  auto* e = app.add_subcommand("enumerate", "List one graph per isomorphism class");
  e->add_option("--vertices", en.vertices, "Vertices per graph")->required()->check(CLI::PositiveNumber);
  e->add_option("--colors", en.colors, "Edge colours")->required()->check(CLI::PositiveNumber);
  e->add_option("--loops", en.loops, "mixed|dirichlet|neumann")->check(CLI::IsMember({"mixed", "dirichlet", "neumann"}));
  e->add_flag("--treelike", en.treelike, "Only treelike graphs");
  e->add_option("--shard", shard, "i/k: the i-th of k shards (1-based)");
  auto* out_opt = e->add_option("--out", en.out_dir, "Write one JSON file per graph into DIR");
  e->add_flag("--count-only", en.count_only, "Only print counts")->excludes(out_opt);
  e->callback([&] {
    if (!shard.empty()) {
      auto parts = split(shard, '/');
      if (parts.size() != 2) throw InputError("--shard expects i/k");
      en.shard_index = std::stoul(parts[0]) - 1;
      en.shard_count = std::stoul(parts[1]);
      if (en.shard_count == 0 || en.shard_index >= en.shard_count) throw InputError("--shard out of range");
    }
    status = run_enumerate(en);
  });

  TransformArgs tr;
  auto* t = app.add_subcommand("transform", "Apply a generating transform");
  t->add_option("op", tr.op, "dual|swap-signs|braid|copy-color|add-color|omit-color|cross|substitute")
      ->required()
      ->check(CLI::IsMember({"dual", "swap-signs", "braid", "copy-color", "add-color", "omit-color", "cross", "substitute"}));
  t->add_option("A", tr.a, "Graph (or substitution plan)")->required();
  t->add_option("B", tr.b, "Second graph for cross");
  t->add_option("--color", tr.colour, "Colour argument (1-based)");
  t->add_option("--by", tr.by, "Conjugating colour for braid (1-based)");
  t->add_option("--colors", tr.colours, "Comma-separated colour set for swap-signs");
  t->add_option("--sign", tr.sign, "Loop sign for add-color: D or N");
  t->add_option("--out", tr.out, "Output file");
  t->add_option("--signs-out", tr.signs_out, "Write the diagonal conjugator here");
  t->callback([&] { status = run_transform(tr); });

  SchreierArgs sch;
  auto* r = app.add_subcommand("schreier", "Schreier coset graph of a subgroup with a character");
  r->add_option("--generators", sch.generators, "JSON generator file")->required();
  r->add_option("--subgroup", sch.subgroup, "Comma-separated generator words")->required();
  r->add_option("--character", sch.character, "Comma-separated +-1 values, one per word")->required();
  r->add_option("--out", sch.out, "Output file");
  r->callback([&] { status = run_schreier(sch); });

  std::string format = "json", export_path, export_out;
  auto* x = app.add_subcommand("export", "Convert a graph to dot, json or cycle text");
  x->add_option("--format", format, "dot|json|cycles")->check(CLI::IsMember({"dot", "json", "cycles"}));
  x->add_option("G", export_path, "Graph")->required();
  x->add_option("--out", export_out, "Output file");
  x->callback([&] { status = run_export(format, export_path, export_out); });

  std::string catalog_name, catalog_out;
  auto* k = app.add_subcommand("catalog", "Print a built-in fixture");
  k->add_option("NAME", catalog_name, "gww|square-triangle|band15|d4-group")->required();
  k->add_option("--out", catalog_out, "Also write the fixture files into DIR");
  k->callback([&] { status = run_catalog(catalog_name, catalog_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForAllHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kInput;
  } catch (const InputError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kInput;
  } catch (const std::out_of_range& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kInput;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kFailure;
  }
  return status;
}
