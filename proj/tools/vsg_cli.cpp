#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "vsg/experiments.hpp"
#include "vsg/invariants.hpp"
#include "vsg/moves.hpp"
#include "vsg/realizability.hpp"
#include "vsg/vsg_format.hpp"
#include "vsg/yamada.hpp"

using nlohmann::ordered_json;
using namespace vsg;

namespace {

// Exit codes: 0 success, 1 negative verdict, 2 usage or parse error,
// 3 budget exceeded.
struct ExitWith {
  int code;
};

std::uint64_t env_seed() {
  if (const char* s = std::getenv("VSG_SEED")) return std::strtoull(s, nullptr, 10);
  return 0;
}

GaussCode load_code(const std::string& path) {
  auto res = parse_vsg_file(path);
  if (!res.ok) {
    for (const auto& d : res.errors)
      std::cerr << path << ":" << d.line << ": " << d.message << "\n";
    throw ExitWith{2};
  }
  return res.doc.code;
}

std::string end_token(const EndRef& e) {
  return e.edge + (e.at_head ? ".in" : ".out");
}

std::string member_str(const std::vector<HalfInt>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ", ";
    s += m[i].str();
  }
  return s + "]";
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const std::string& path, bool json) {
  auto res = parse_vsg_file(path);
  if (json) {
    ordered_json j;
    j["valid"] = res.ok;
    if (res.ok) {
      j["graph"] = res.doc.name;
      j["crossings"] = crossing_count(res.doc.code);
    } else {
      j["errors"] = ordered_json::array();
      for (const auto& d : res.errors)
        j["errors"].push_back({{"line", d.line}, {"message", d.message}});
    }
    emit(j);
  } else if (res.ok) {
    std::cout << "valid: yes\n"
              << "graph: " << res.doc.name << "\n"
              << "crossings: " << crossing_count(res.doc.code) << "\n";
  } else {
    std::cout << "valid: no\n";
    for (const auto& d : res.errors)
      std::cout << "line " << d.line << ": " << d.message << "\n";
  }
  return res.ok ? 0 : 2;
}

int cmd_gauss_shadow(const std::string& path, bool json) {
  auto code = load_code(path);
  auto sh = shadow(code);
  if (json) {
    ordered_json j;
    j["edges"] = ordered_json::object();
    for (const auto& e : sh.graph.edges()) j["edges"][e.id] = sh.passages_on(e.id);
    emit(j);
  } else {
    for (const auto& e : sh.graph.edges()) {
      std::cout << "edge " << e.id << ":";
      for (int c : sh.passages_on(e.id)) std::cout << " " << c;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_realize(const std::string& path, bool rigid, bool oracle, bool json) {
  auto code = load_code(path);
  Rigidity rig = rigid ? Rigidity::rigid : Rigidity::pliable;
  auto r = realizable(code, rig);
  std::optional<bool> agrees;
  if (oracle) agrees = brute_force_realizable(code, rig) == r.realizable;

  if (json) {
    ordered_json j;
    j["realizable"] = r.realizable;
    if (r.certificate) {
      ordered_json rot = ordered_json::object();
      for (const auto& [v, ends] : r.certificate->vertex_rotation) {
        auto& a = rot[v] = ordered_json::array();
        for (const auto& e : ends) a.push_back(end_token(e));
      }
      j["rotations"] = rot;
      ordered_json cr = ordered_json::object();
      for (const auto& [c, pos] : r.certificate->crossing_positive)
        cr[std::to_string(c)] = pos ? "+" : "-";
      j["crossings"] = cr;
    }
    if (!r.realizable && !r.obstruction.empty()) j["obstruction"] = r.obstruction;
    if (r.rigid_coherent) j["rigid_coherent"] = *r.rigid_coherent;
    if (agrees) j["oracle_agrees"] = *agrees;
    emit(j);
  } else {
    std::cout << "realizable: " << (r.realizable ? "yes" : "no") << "\n";
    if (r.certificate) {
      for (const auto& [v, ends] : r.certificate->vertex_rotation) {
        std::cout << "rot " << v << ":";
        for (const auto& e : ends) std::cout << " " << end_token(e);
        std::cout << "\n";
      }
      for (const auto& [c, pos] : r.certificate->crossing_positive)
        std::cout << "crossing " << c << ": " << (pos ? "+" : "-") << "\n";
    }
    if (!r.realizable && !r.obstruction.empty())
      std::cout << "obstruction: " << r.obstruction << "\n";
    if (r.rigid_coherent)
      std::cout << "rigid rotations hold: " << (*r.rigid_coherent ? "yes" : "no") << "\n";
    if (agrees) std::cout << "oracle: " << (*agrees ? "agrees" : "DISAGREES") << "\n";
  }
  if (agrees && !*agrees) return 2;
  return r.realizable ? 0 : 1;
}

int cmd_lk(const std::string& path, const std::string& c1, const std::string& c2,
           bool json) {
  auto v = linking_number(load_code(path), c1, c2);
  if (json)
    emit({{"lk", v.str()}});
  else
    std::cout << v.str() << "\n";
  return 0;
}

int cmd_tprofile(const std::string& path, long long budget, bool json) {
  auto profile = t_link_profile(load_code(path), budget);
  if (json) {
    ordered_json j;
    j["members"] = ordered_json::array();
    for (const auto& m : profile) {
      ordered_json a = ordered_json::array();
      for (const auto& v : m) a.push_back(v.str());
      j["members"].push_back(a);
    }
    emit(j);
  } else {
    std::cout << "members: " << profile.size() << "\n";
    for (const auto& m : profile) std::cout << member_str(m) << "\n";
  }
  return 0;
}

int cmd_yamada(const std::string& path, int budget, bool json) {
  YamadaOptions opt;
  opt.max_crossings = budget;
  auto y = yamada(load_code(path), opt);
  if (json)
    emit({{"yamada", y.str()}});
  else
    std::cout << y.str() << "\n";
  return 0;
}

std::string word_str(const GroupPresentation& p, const GroupPresentation::Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += p.generators[static_cast<std::size_t>(w[i].first)];
    if (w[i].second < 0) s += "^-1";
  }
  return s;
}

int cmd_group(const std::string& path, const std::string& hom, bool json) {
  auto p = wirtinger(load_code(path));
  std::optional<long long> count;
  if (!hom.empty()) {
    FiniteGroup target = hom == "z3" ? cyclic_group(3) : symmetric_group_3();
    count = hom_count(p, target);
  }
  if (json) {
    ordered_json j;
    j["generators"] = p.generators;
    j["relators"] = ordered_json::array();
    for (const auto& w : p.relators) j["relators"].push_back(word_str(p, w));
    j["abelianization_rank"] = abelianization_rank(p);
    if (count) j["hom_" + hom] = *count;
    emit(j);
  } else {
    std::cout << "generators: " << p.generators.size() << " (";
    for (std::size_t i = 0; i < p.generators.size(); ++i)
      std::cout << (i ? " " : "") << p.generators[i];
    std::cout << ")\n";
    std::cout << "relators: " << p.relators.size() << "\n";
    for (const auto& w : p.relators) std::cout << "rel: " << word_str(p, w) << "\n";
    std::cout << "abelianization rank: " << abelianization_rank(p) << "\n";
    if (count) std::cout << "hom " << hom << ": " << *count << "\n";
  }
  return 0;
}

void print_trace(const MoveTrace& t) {
  std::cout << "trace: " << t.steps.size() << (t.steps.size() == 1 ? " move\n" : " moves\n");
  for (const auto& s : t.steps)
    std::cout << "  " << move_name(s.kind) << " " << s.site << "\n";
}

ordered_json trace_json(const MoveTrace& t) {
  ordered_json a = ordered_json::array();
  for (const auto& s : t.steps)
    a.push_back({{"move", move_name(s.kind)}, {"site", s.site}});
  return a;
}

int cmd_equiv(const std::string& path1, const std::string& path2, int depth,
              std::size_t budget, bool forbidden, bool json) {
  auto a = load_code(path1);
  auto b = load_code(path2);
  auto allowed = forbidden ? MoveSet::all() : MoveSet::standard();
  auto out = equivalent_bounded(a, b, depth, budget, allowed);
  const char* verdict = out.verdict == SearchOutcome::Verdict::yes  ? "yes"
                        : out.verdict == SearchOutcome::Verdict::no ? "no"
                                                                    : "unknown";
  if (json) {
    ordered_json j;
    j["verdict"] = verdict;
    if (!out.witness.empty()) j["separated_by"] = out.witness;
    j["explored"] = out.explored;
    if (out.trace) j["trace"] = trace_json(*out.trace);
    emit(j);
  } else {
    std::cout << "verdict: " << verdict << "\n";
    if (!out.witness.empty()) std::cout << "separated by: " << out.witness << "\n";
    std::cout << "explored: " << out.explored << "\n";
    if (out.trace) print_trace(*out.trace);
  }
  if (out.verdict == SearchOutcome::Verdict::yes) return 0;
  return out.verdict == SearchOutcome::Verdict::no ? 1 : 3;
}

int cmd_ivl(const std::string& path, bool json) {
  auto r = ivl1_witness(load_code(path));
  if (json) {
    ordered_json j;
    j["graph_planar"] = r.graph_planar;
    j["odd_pair"] = r.odd_pair;
    if (r.odd_pair) j["odd_pair_lk"] = r.odd_pair_lk.str();
    j["singletons"] = ordered_json::array();
    for (const auto& s : r.singletons) {
      ordered_json e;
      e["crossing"] = s.crossing;
      e["retains_link"] = s.retains_link;
      if (s.retains_link) e["witness_lk"] = s.witness_lk.str();
      j["singletons"].push_back(e);
    }
    j["holds"] = r.holds();
    emit(j);
  } else {
    std::cout << "graph planar: " << (r.graph_planar ? "yes" : "no") << "\n";
    if (r.odd_pair)
      std::cout << "odd pair: yes (lk " << r.odd_pair_lk.str() << ")\n";
    else
      std::cout << "odd pair: no\n";
    for (const auto& s : r.singletons) {
      std::cout << "virtualize " << s.crossing << ": ";
      if (s.retains_link)
        std::cout << "keeps a linked pair (lk " << s.witness_lk.str() << ")\n";
      else
        std::cout << "no linked pair found\n";
    }
    std::cout << "ivl1 witness: " << (r.holds() ? "holds" : "fails") << "\n";
  }
  return r.holds() ? 0 : 1;
}

int cmd_cg6(int samples, std::uint64_t seed, bool json) {
  bool all_odd = true;
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < samples; ++i) {
    std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    auto code = random_k6_code(s);
    int parity = conway_gordon_parity(code);
    int certified = 0;
    for (const auto& e : detect_links(code).entries)
      if (e.certified) ++certified;
    all_odd = all_odd && parity == 1;
    if (json) {
      rows.push_back({{"seed", s},
                      {"crossings", crossing_count(code)},
                      {"parity", parity},
                      {"certified_pairs", certified}});
    } else {
      std::cout << "seed " << s << ": crossings=" << crossing_count(code)
                << " parity=" << parity << " certified-pairs=" << certified << "\n";
    }
  }
  if (json)
    emit({{"samples", rows}, {"all_parities_odd", all_odd}});
  else
    std::cout << "all parities odd: " << (all_odd ? "yes" : "no") << "\n";
  return all_odd ? 0 : 1;
}

int cmd_vu(const std::string& path, int max_size, int depth, std::size_t budget,
           bool json) {
  auto code = load_code(path);
  int n = crossing_count(code);
  if (max_size < 0 || max_size > n) max_size = n;
  auto r = vu_report(code, max_size, depth, budget);

  int certified = 0;
  for (const auto& e : r.lower)
    if (!e.certificate.empty()) ++certified;

  // With no candidate left unresolved, the scan refuted every smaller subset,
  // so a found set is exactly minimal.
  std::string value;
  if (r.upper.crossings) {
    auto k = std::to_string(r.upper.crossings->size());
    value = r.upper.budget_exceeded ? "<= " + k : k;
  } else {
    value = r.upper.budget_exceeded ? "unresolved" : "> " + std::to_string(max_size);
  }

  if (json) {
    ordered_json j;
    j["crossings"] = n;
    if (r.upper.crossings) {
      j["upper"] = *r.upper.crossings;
      if (r.upper.trace) j["trace"] = trace_json(*r.upper.trace);
    }
    j["budget_exceeded"] = r.upper.budget_exceeded;
    j["lower"] = ordered_json::array();
    for (const auto& e : r.lower)
      j["lower"].push_back({{"crossing", e.crossing},
                            {"certificate",
                             e.certificate.empty() ? "inconclusive" : e.certificate}});
    j["certified_singletons"] = certified;
    j["vu_d"] = value;
    emit(j);
  } else {
    std::cout << "crossings: " << n << "\n";
    if (r.upper.crossings) {
      std::cout << "upper: " << r.upper.crossings->size() << " {";
      bool first = true;
      for (int c : *r.upper.crossings) {
        std::cout << (first ? "" : " ") << c;
        first = false;
      }
      std::cout << "}\n";
      if (r.upper.trace) print_trace(*r.upper.trace);
    } else {
      std::cout << "upper: none found\n";
    }
    if (r.upper.budget_exceeded) std::cout << "budget exceeded on some candidate\n";
    for (const auto& e : r.lower)
      std::cout << "virtualize " << e.crossing << ": "
                << (e.certificate.empty() ? "inconclusive" : e.certificate) << "\n";
    std::cout << "certified singletons: " << certified << "/" << r.lower.size() << "\n";
    std::cout << "vu_D: " << value << "\n";
  }
  if (r.upper.crossings) return 0;
  return r.upper.budget_exceeded ? 3 : 1;
}

int cmd_demo_forbidden(std::uint64_t seed, int sequences, bool json) {
  auto d = forbidden_separation_demo(seed, sequences);
  bool ok = d.profiles_differ && d.profiles_stable;
  if (json) {
    ordered_json j;
    j["first"] = "handcuff flat";
    j["second"] = "handcuff crossed";
    auto prof = [](const TLinkProfile& p) {
      ordered_json a = ordered_json::array();
      for (const auto& m : p) {
        ordered_json row = ordered_json::array();
        for (const auto& v : m) row.push_back(v.str());
        a.push_back(row);
      }
      return a;
    };
    j["first_profile"] = prof(d.first_profile);
    j["second_profile"] = prof(d.second_profile);
    j["profiles_differ"] = d.profiles_differ;
    j["sequences_checked"] = d.sequences_checked;
    j["profiles_stable"] = d.profiles_stable;
    emit(j);
  } else {
    std::cout << "first: handcuff flat\n";
    std::cout << "second: handcuff crossed\n";
    auto line = [](const char* tag, const TLinkProfile& p) {
      std::cout << tag << ":";
      for (const auto& m : p) std::cout << " " << member_str(m);
      std::cout << "\n";
    };
    line("first profile", d.first_profile);
    line("second profile", d.second_profile);
    std::cout << "profiles differ: " << (d.profiles_differ ? "yes" : "no") << "\n";
    std::cout << "sequences checked: " << d.sequences_checked << "\n";
    std::cout << "profile stable: " << (d.profiles_stable ? "yes" : "no") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"virtual spatial graph diagrams"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string file, file2, comp1, comp2, hom;
  bool rigid = false, oracle = false, forbidden = false;
  int depth = 6;
  std::size_t search_budget = 100000;
  long long t_budget = 1000000;
  int yamada_budget = 12;
  int samples = 5;
  int max_size = -1;
  int sequences = 500;
  std::uint64_t seed = env_seed();

  auto* c_validate = app.add_subcommand("validate", "parse and check a .vsg file");
  c_validate->add_option("file", file)->required();

  auto* c_shadow = app.add_subcommand("gauss-shadow", "print crossing sequences without roles");
  c_shadow->add_option("file", file)->required();

  auto* c_realize = app.add_subcommand("realize", "decide classical realizability");
  c_realize->add_option("file", file)->required();
  c_realize->add_flag("--rigid", rigid, "respect stored vertex rotations");
  c_realize->add_flag("--oracle", oracle, "cross-check with the enumeration route");

  auto* c_lk = app.add_subcommand("lk", "linking number of two closed components");
  c_lk->add_option("file", file)->required();
  c_lk->add_option("c1", comp1, "vertex on the first component")->required();
  c_lk->add_option("c2", comp2, "vertex on the second component")->required();

  auto* c_tprofile = app.add_subcommand("tprofile", "linking profile of the vertex-replacement collection");
  c_tprofile->add_option("file", file)->required();
  c_tprofile->add_option("--budget", t_budget, "member count budget (default 1000000)");

  auto* c_yamada = app.add_subcommand("yamada", "evaluate the diagram polynomial");
  c_yamada->add_option("file", file)->required();
  c_yamada->add_option("--budget", yamada_budget, "crossing budget (default 12)");

  auto* c_group = app.add_subcommand("group", "diagram group presentation");
  c_group->add_option("file", file)->required();
  c_group->add_option("--hom", hom, "count homomorphisms to z3 or s3")
      ->check(CLI::IsMember({"z3", "s3"}));

  auto* c_moves = app.add_subcommand("moves", "move-system queries");
  c_moves->require_subcommand(1);
  auto* c_equiv = c_moves->add_subcommand("equiv", "bounded equivalence search");
  c_equiv->add_option("file", file)->required();
  c_equiv->add_option("file2", file2)->required();
  c_equiv->add_option("--depth", depth, "search depth per side (default 6)");
  c_equiv->add_option("--budget", search_budget, "stored-state budget (default 100000)");
  c_equiv->add_flag("--forbidden", forbidden, "allow forbidden moves too");

  auto* c_ivl = app.add_subcommand("ivl", "single-virtualization linking witness");
  c_ivl->add_option("file", file)->required();

  auto* c_cg6 = app.add_subcommand("cg6", "triangle-pair parity over random K6 drawings");
  c_cg6->add_option("--samples", samples, "number of drawings (default 5)");
  c_cg6->add_option("--seed", seed, "first seed (default VSG_SEED or 0)");

  auto* c_vu = app.add_subcommand("vu", "virtual unknotting bounds for a knot diagram");
  c_vu->add_option("file", file)->required();
  c_vu->add_option("--max", max_size, "largest subset size (default: all crossings)");
  c_vu->add_option("--depth", depth, "triviality search depth (default 6)");
  c_vu->add_option("--budget", search_budget, "stored-state budget (default 100000)");

  auto* c_demo = app.add_subcommand("demo", "built-in demonstrations");
  c_demo->require_subcommand(1);
  auto* c_forb = c_demo->add_subcommand("forbidden", "profiles separate what moves cannot join");
  c_forb->add_option("--seed", seed, "sequence seed (default VSG_SEED or 0)");
  c_forb->add_option("--sequences", sequences, "random sequences to run (default 500)");

  for (auto* s : {c_validate, c_shadow, c_realize, c_lk, c_tprofile, c_yamada,
                  c_group, c_moves, c_equiv, c_ivl, c_cg6, c_vu, c_demo, c_forb})
    s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  bool json = format == "json";
  try {
    if (*c_validate) return cmd_validate(file, json);
    if (*c_shadow) return cmd_gauss_shadow(file, json);
    if (*c_realize) return cmd_realize(file, rigid, oracle, json);
    if (*c_lk) return cmd_lk(file, comp1, comp2, json);
    if (*c_tprofile) return cmd_tprofile(file, t_budget, json);
    if (*c_yamada) return cmd_yamada(file, yamada_budget, json);
    if (*c_group) return cmd_group(file, hom, json);
    if (*c_equiv) return cmd_equiv(file, file2, depth, search_budget, forbidden, json);
    if (*c_ivl) return cmd_ivl(file, json);
    if (*c_cg6) return cmd_cg6(samples, seed, json);
    if (*c_vu) return cmd_vu(file, max_size, depth, search_budget, json);
    if (*c_forb) return cmd_demo_forbidden(seed, sequences, json);
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
