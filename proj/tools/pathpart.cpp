// Command-line front door: JSON in, deterministic reports out.
// Exit codes: 0 success / verification passed, 1 verification failure,
// 2 usage or parse error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pathpart/analysis.hpp"
#include "pathpart/decpart.hpp"
#include "pathpart/json_io.hpp"
#include "pathpart/morphisms.hpp"
#include "pathpart/partial.hpp"
#include "acceptance.hpp"

namespace {

using namespace pathpart;

// PATHPART_MAX_MEM caps enumeration memory; the value is bytes with an
// optional K/M/G suffix and translates into a word-count cap for the bounded
// enumerators (roughly 100 bytes per stored word).
std::size_t enum_cap_from_env(std::size_t fallback) {
  const char* env = std::getenv("PATHPART_MAX_MEM");
  if (!env || !*env) return fallback;
  std::string s(env);
  std::size_t mult = 1;
  char last = s.back();
  if (last == 'K' || last == 'k') mult = 1024;
  if (last == 'M' || last == 'm') mult = 1024 * 1024;
  if (last == 'G' || last == 'g') mult = 1024ull * 1024 * 1024;
  if (mult != 1) s.pop_back();
  unsigned long long bytes = std::stoull(s);
  std::size_t cap = static_cast<std::size_t>(bytes * mult / 100);
  return cap > 0 ? cap : 1;
}

json load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return json::parse(in);
}

struct HandleInput {
  std::shared_ptr<PartialGroup> handle;
  std::shared_ptr<MGHandle> mg;  // set when the handle is word-based
};

HandleInput load_handle(const std::string& path) {
  HandleInput h;
  json j = load_input(path);
  if (!j.contains("type")) {
    // Bare decorated-graph files are accepted for convenience.
    h.mg = build(decgraph_from_json(j));
    h.handle = h.mg;
    return h;
  }
  h.handle = handle_from_json(j, &h.mg);
  return h;
}

DecGraph load_decgraph(const std::string& path) {
  json j = load_input(path);
  if (j.contains("type")) {
    std::string type = j.at("type").get<std::string>();
    if (type == "path") {
      NamedGraph ng = graph_from_json(j.at("graph"));
      std::vector<FinGroup> dec(ng.graph.num_vertices(), make_cyclic(2));
      return DecGraph(std::move(ng.graph), std::move(dec),
                      std::move(ng.labels));
    }
    if (type != "decorated-graph")
      throw std::runtime_error("input is not a decorated graph");
  }
  return decgraph_from_json(j);
}

int cmd_build(const std::string& input, int list_elems,
              const std::string& format) {
  auto h = build(load_decgraph(input));
  std::vector<Elem> elems = h->enum_elems(list_elems);
  if (format == "json") {
    json out;
    out["describe"] = h->describe();
    out["bound"] = list_elems;
    out["num_elements"] = elems.size();
    out["elements"] = json::array();
    for (const Elem& e : elems) out["elements"].push_back(h->elem_str(e));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << h->describe() << "\n";
    std::cout << "elements up to length " << list_elems << ": " << elems.size()
              << "\n";
    for (const Elem& e : elems) std::cout << "  " << h->elem_str(e) << "\n";
  }
  return 0;
}

int cmd_check_axioms(const std::string& input, int max_elem, int max_len,
                     const std::string& format) {
  HandleInput h = load_handle(input);
  std::size_t cap = enum_cap_from_env(2'000'000);
  AxiomReport rep = check_axioms(*h.handle, max_elem, max_len, cap);
  auto line = [&](const char* name, const AxiomVerdict& v) {
    std::cout << "  " << name << ": " << (v.pass ? "pass" : "FAIL");
    if (!v.pass) std::cout << "  (" << v.counterexample << ")";
    std::cout << "\n";
  };
  if (format == "json") {
    json out;
    out["describe"] = h.handle->describe();
    out["bounds"] = {{"max_elem_size", max_elem}, {"max_word_len", max_len}};
    out["num_elements"] = rep.num_elements;
    out["num_domain_words"] = rep.num_domain_words;
    out["complete"] = rep.complete;
    const char* names[] = {"D1", "D2", "P1", "P2", "P3"};
    const AxiomVerdict* vs[] = {&rep.d1, &rep.d2, &rep.p1, &rep.p2, &rep.p3};
    for (int i = 0; i < 5; ++i) {
      out["axioms"][names[i]]["pass"] = vs[i]->pass;
      if (!vs[i]->pass)
        out["axioms"][names[i]]["counterexample"] = vs[i]->counterexample;
    }
    out["all_pass"] = rep.all_pass();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << h.handle->describe() << "\n";
    std::cout << "checked " << rep.num_elements << " elements (size bound "
              << max_elem << "), " << rep.num_domain_words
              << " domain words (length bound " << max_len << ")"
              << (rep.complete ? "" : " [capped]") << "\n";
    line("D1", rep.d1);
    line("D2", rep.d2);
    line("P1", rep.p1);
    line("P2", rep.p2);
    line("P3", rep.p3);
    std::cout << (rep.all_pass() ? "axioms hold at these bounds"
                                 : "AXIOM VIOLATION") << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

int cmd_aut(const std::string& input, bool oracle, int max_len,
            int max_vertices, bool show_table, const std::string& format) {
  DecGraph dg = load_decgraph(input);
  AutGroupResult r = aut_group(dg, max_vertices);
  if (format == "json") {
    json out;
    out["order"] = r.order();
    out["kernel_order"] = r.kernel.size();
    out["image_order"] = r.image_in_graph_aut.size();
    out["table"] = r.table.table();
    json elems = json::array();
    for (const DecMorphism& m : r.elements) {
      json e;
      e["vmap"] = m.vmap;
      e["families"] = m.fam;
      elems.push_back(e);
    }
    out["elements"] = elems;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "automorphism group order " << r.order() << "\n";
    std::cout << "exact sequence: 1 -> kernel(order " << r.kernel.size()
              << ") -> Aut(order " << r.order() << ") -> image(order "
              << r.image_in_graph_aut.size() << ") in the graph "
              << "automorphisms\n";
    if (show_table) {
      for (const auto& row : r.table.table()) {
        std::cout << " ";
        for (int x : row) std::cout << " " << x;
        std::cout << "\n";
      }
    }
  }
  if (oracle) {
    auto h = build(DecGraph(dg));
    std::vector<LetterMap> maps = brute_aut_truncated(*h, max_len);
    std::sort(maps.begin(), maps.end());
    std::vector<LetterMap> lifts;
    for (const DecMorphism& m : r.elements)
      lifts.push_back(letter_restriction(m));
    std::sort(lifts.begin(), lifts.end());
    bool agree = maps == lifts;
    std::cout << "oracle at length " << max_len << ": " << maps.size()
              << " maps; " << (agree ? "agrees with the induced maps"
                                     : "DISAGREES with the induced maps")
              << "\n";
    if (!agree) return 1;
  }
  return 0;
}

int cmd_recover(const std::string& input, int elem_bound, int power_bound) {
  DecGraph dg = load_decgraph(input);
  AnalysisBounds b{elem_bound, power_bound};
  auto iso = recover_check(dg, b);
  if (!iso) {
    std::cout << "no isomorphism between the recovered graph and the input "
              << "(element bound " << elem_bound << ")\n";
    return 1;
  }
  std::cout << "isomorphism found (element bound " << elem_bound << "): ";
  for (std::size_t i = 0; i < iso->vmap.size(); ++i)
    std::cout << (i ? " " : "") << i << "->" << iso->vmap[i];
  std::cout << "\n";
  return 0;
}

int cmd_maxsub(const std::string& input, bool strong, int elem_bound,
               int power_bound, const std::string& format) {
  HandleInput h = load_handle(input);
  AnalysisBounds b{elem_bound, power_bound};
  auto recs = maximal_finite_subgroups(*h.handle, b);
  Graph g = strong ? strong_maxsub_graph(*h.handle, recs)
                   : maxsub_graph(*h.handle, recs);
  if (format == "json") {
    json out;
    out["strong"] = strong;
    out["records"] = json::array();
    for (const auto& r : recs) {
      json rec;
      rec["order"] = r.table.order();
      rec["elements"] = json::array();
      for (const Elem& e : r.elements)
        rec["elements"].push_back(h.handle->elem_str(e));
      out["records"].push_back(rec);
    }
    out["graph"] = graph_to_json(g);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << recs.size() << " maximal finite subgroups (element bound "
              << elem_bound << ")\n";
    for (std::size_t i = 0; i < recs.size(); ++i) {
      std::cout << "  [" << i << "] order " << recs[i].table.order() << ":";
      for (const Elem& e : recs[i].elements)
        std::cout << " " << h.handle->elem_str(e);
      std::cout << "\n";
    }
    std::cout << (strong ? "universal" : "existential")
              << " adjacency edges:";
    for (auto [u, v] : g.edges()) std::cout << " (" << u << "," << v << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_nerve(const std::string& input, int dim, int elem_bound, bool verify) {
  HandleInput h = load_handle(input);
  NerveTruncation n = nerve(*h.handle, dim, elem_bound);
  json out;
  out["dim"] = dim;
  out["element_bound"] = elem_bound;
  for (int k = 0; k <= dim; ++k) {
    json level = json::array();
    for (const ElemWord& w : n.simplices[k]) {
      json simplex = json::array();
      for (const Elem& e : w) simplex.push_back(h.handle->elem_str(e));
      level.push_back(simplex);
    }
    out["simplices"][std::to_string(k)] = level;
  }
  if (verify) {
    std::string err = verify_nerve(*h.handle, n);
    out["verified"] = err.empty();
    if (!err.empty()) out["violation"] = err;
    std::cout << out.dump(2) << "\n";
    return err.empty() ? 0 : 1;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_normalizer(const std::string& input, int max_len) {
  HandleInput h = load_handle(input);
  std::vector<Elem> nz = normalizer(*h.handle, max_len);
  std::cout << "conjugation certificate at element bound " << max_len << ": "
            << nz.size() << " elements\n";
  for (const Elem& e : nz) std::cout << "  " << h.handle->elem_str(e) << "\n";
  bool trivial = nz.size() == 1 && nz[0] == h.handle->unit();
  std::cout << (trivial ? "trivial" : "non-trivial")
            << " at this bound\n";
  return 0;
}

int cmd_domain_test(const std::string& input, const std::string& word_text,
                    int /*unused*/) {
  auto h = build(load_decgraph(input));
  const DecGraph& dg = h->decgraph();
  auto lookup = [&dg](const std::string& name) {
    return dg.vertex_by_label(name);
  };
  // Comma-separated elements, each a space-separated letter list like
  // "a b.2" (element defaults to 1).
  ElemWord w;
  std::string text = word_text;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string part = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    w.push_back(Elem{CRWord(parse_word(part, lookup))});
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  for (const Elem& e : w)
    if (!h->contains(e))
      throw std::runtime_error("entry is not an element: " + h->elem_str(e));
  bool in = h->in_domain(w);
  std::cout << "word of " << w.size() << " elements: "
            << (in ? "in the domain" : "not in the domain") << "\n";
  if (in)
    std::cout << "product: " << h->elem_str(h->product(w)) << "\n";
  return in ? 0 : 1;
}

int cmd_realize(const std::string& group_name, int count, int max_vertices) {
  FinGroup h = make_builtin(group_name);
  std::vector<Graph> gs = frucht_realize(h, count, max_vertices);
  json out = json::array();
  for (const Graph& g : gs) out.push_back(graph_to_json(g));
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial groups of group-decorated graphs"};
  app.require_subcommand(1);

  std::string input, format = "text", word_text, group_name = "Z2";
  std::string filter, fixtures = "fixtures";
  int list_elems = 5, max_elem = 5, max_len = 4, dim = 3;
  int elem_bound = 2, power_bound = 12, max_vertices = 128, count = 3;
  bool oracle = false, strong = false, show_table = false, verify = false;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", input, "input JSON file")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* build_cmd = app.add_subcommand("build",
                                           "build a decorated-graph partial "
                                           "group and list its elements");
  add_input(build_cmd);
  add_format(build_cmd);
  build_cmd->add_option("--list-elems", list_elems,
                        "element length bound for the listing");

  CLI::App* ax = app.add_subcommand("check-axioms",
                                    "verify the partial-group axioms by "
                                    "bounded enumeration");
  add_input(ax);
  add_format(ax);
  ax->add_option("--max-elem", max_elem, "element size bound (default 5)");
  ax->add_option("--max-len", max_len, "domain word length bound (default 4)");

  CLI::App* aut = app.add_subcommand("aut",
                                     "automorphism group of a decorated "
                                     "graph, with optional brute-force "
                                     "oracle");
  add_input(aut);
  add_format(aut);
  aut->add_flag("--oracle", oracle, "run the truncated brute-force search");
  aut->add_option("--max-len", max_len, "truncation length for the oracle");
  aut->add_option("--max-vertices", max_vertices, "search guard");
  aut->add_flag("--table", show_table, "print the composition table");

  CLI::App* rec = app.add_subcommand("recover",
                                     "recover the graph from maximal finite "
                                     "subgroups and compare with the input");
  add_input(rec);
  rec->add_option("--elem-bound", elem_bound, "element length bound");
  rec->add_option("--power-bound", power_bound, "order classification bound");

  CLI::App* ms = app.add_subcommand("maxsub",
                                    "maximal finite subgroups and their "
                                    "adjacency graph");
  add_input(ms);
  add_format(ms);
  ms->add_flag("--strong", strong, "use universal pair adjacency");
  ms->add_option("--elem-bound", elem_bound, "element length bound");
  ms->add_option("--power-bound", power_bound, "order classification bound");

  CLI::App* nv = app.add_subcommand("nerve",
                                    "truncated nerve export and verification");
  add_input(nv);
  nv->add_option("--dim", dim, "truncation dimension (default 3)");
  nv->add_option("--elem-bound", elem_bound, "element length bound");
  nv->add_flag("--verify", verify, "check simplicial identities and horns");

  CLI::App* nz = app.add_subcommand("normalizer",
                                    "conjugation certificate over enumerated "
                                    "elements");
  add_input(nz);
  nz->add_option("--max-len", max_len, "element length bound (default 4)");

  CLI::App* dt = app.add_subcommand("domain-test",
                                    "test a word of elements for domain "
                                    "membership");
  add_input(dt);
  dt->add_option("--word", word_text,
                 "comma-separated elements, letters like 'a b.2'")
      ->required();

  CLI::App* rz = app.add_subcommand("realize",
                                    "graphs with a prescribed automorphism "
                                    "group");
  rz->add_option("--group", group_name, "target group name (e.g. Z3, S3)")
      ->required();
  rz->add_option("--count", count, "number of pairwise non-isomorphic graphs");
  rz->add_option("--max-vertices", max_vertices, "search guard (default 400)")
      ->default_val(400);

  CLI::App* suite = app.add_subcommand("suite", "run the acceptance criteria");
  suite->add_option("--filter", filter, "run only matching criteria");
  suite->add_option("--fixtures", fixtures,
                    "fixture directory (default ./fixtures)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build_cmd->parsed()) return cmd_build(input, list_elems, format);
    if (ax->parsed()) return cmd_check_axioms(input, max_elem, max_len, format);
    if (aut->parsed())
      return cmd_aut(input, oracle, oracle ? max_len : 4, max_vertices,
                     show_table, format);
    if (rec->parsed()) return cmd_recover(input, elem_bound, power_bound);
    if (ms->parsed())
      return cmd_maxsub(input, strong, elem_bound, power_bound, format);
    if (nv->parsed()) return cmd_nerve(input, dim, elem_bound, verify);
    if (nz->parsed()) return cmd_normalizer(input, max_len);
    if (dt->parsed()) return cmd_domain_test(input, word_text, 0);
    if (rz->parsed()) return cmd_realize(group_name, count, max_vertices);
    if (suite->parsed())
      return pathpart::acceptance::run_suite(filter, fixtures, std::cout);
  } catch (const json::exception& e) {
    std::cerr << "JSON error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
