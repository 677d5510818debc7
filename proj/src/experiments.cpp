#include "vsg/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "vsg/laurent.hpp"
#include "vsg/realizability.hpp"
#include "vsg/yamada.hpp"

namespace vsg {

namespace {

void require_valid_code(const GaussCode& code, const char* who) {
  if (!validate(code).empty())
    throw std::invalid_argument(std::string(who) + ": invalid code");
}

void require_knot(const GaussCode& code, const char* who) {
  const auto& g = code.graph;
  bool knot = g.vertices().size() == 1 && g.edges().size() == 1 && g.edges()[0].is_loop();
  if (!knot) throw std::invalid_argument(std::string(who) + ": expects a one-vertex one-loop code");
}

GaussCode strip_passages(const GaussCode& code) {
  GaussCode flat = code;
  for (auto& [e, ps] : flat.passages) ps.clear();
  flat.signs.clear();
  return flat;
}

}  // namespace

bool LinkReport::any_certified() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const LinkEntry& e) { return e.certified; });
}

LinkReport detect_links(const GaussCode& code) {
  require_valid_code(code, "detect_links");
  LinkReport report;
  for (const auto& pr : disjoint_cycle_pairs(code.graph)) {
    LinkEntry e;
    e.pair = pr;
    e.lk = linking_number(code, pr.first, pr.second);
    e.certified = !e.lk.is_zero();
    report.entries.push_back(std::move(e));
  }
  return report;
}

int conway_gordon_parity(const GaussCode& code) {
  require_valid_code(code, "conway_gordon_parity");
  const auto& g = code.graph;
  if (g.vertices().size() != 6 || g.edges().size() != 15)
    throw std::invalid_argument("conway_gordon_parity: graph is not K6");
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : g.edges()) {
    if (e.is_loop())
      throw std::invalid_argument("conway_gordon_parity: graph is not K6 (loop edge)");
    seen.insert(std::minmax(e.tail, e.head));
  }
  if (seen.size() != 15)
    throw std::invalid_argument("conway_gordon_parity: graph is not K6 (repeated pair)");
  if (!realizable(code).realizable)
    throw std::invalid_argument("conway_gordon_parity: code is not realizable");

  auto pairs = disjoint_cycle_pairs(g);
  // In K6 two vertex-disjoint cycles use all six vertices, so both are
  // triangles and there are exactly C(6,3)/2 pairs.
  if (pairs.size() != 10)
    throw std::logic_error("conway_gordon_parity: expected 10 disjoint triangle pairs");
  HalfInt total;
  for (const auto& pr : pairs) {
    HalfInt lk = linking_number(code, pr.first, pr.second);
    if (!lk.is_integer())
      throw std::runtime_error("conway_gordon_parity: non-integral lk in a realizable code");
    total = total + lk;
  }
  return static_cast<int>(((total.integer_value() % 2) + 2) % 2);
}

GaussCode virtualize(const GaussCode& code, const std::set<int>& crossings) {
  for (int c : crossings)
    if (!code.signs.count(c))
      throw std::invalid_argument("virtualize: unknown crossing id " + std::to_string(c));
  GaussCode out = code;
  for (auto& [e, ps] : out.passages)
    std::erase_if(ps, [&](const Passage& p) { return crossings.count(p.crossing) > 0; });
  for (int c : crossings) out.signs.erase(c);
  return out;
}

bool Ivl1Report::holds() const {
  if (!odd_pair) return false;
  return std::all_of(singletons.begin(), singletons.end(),
                     [](const Ivl1Singleton& s) { return s.retains_link; });
}

Ivl1Report ivl1_witness(const GaussCode& code) {
  require_valid_code(code, "ivl1_witness");
  if (!realizable(code).realizable)
    throw std::invalid_argument("ivl1_witness: code is not realizable");

  Ivl1Report report;
  report.graph_planar = realizable(strip_passages(code)).realizable;

  for (const auto& e : detect_links(code).entries) {
    if (e.lk.is_odd_integer()) {
      report.odd_pair = true;
      report.odd_pair_cycles = e.pair;
      report.odd_pair_lk = e.lk;
      break;
    }
  }

  for (int c : crossing_ids(code)) {
    Ivl1Singleton s;
    s.crossing = c;
    for (const auto& e : detect_links(virtualize(code, {c})).entries) {
      if (e.lk.is_odd_integer() || !e.lk.is_integer()) {
        s.retains_link = true;
        s.witness_pair = e.pair;
        s.witness_lk = e.lk;
        break;
      }
    }
    report.singletons.push_back(std::move(s));
  }
  return report;
}

VuUpper vu_upper(const GaussCode& code, int max_size, int depth,
                 std::size_t search_budget, int extra_crossings) {
  require_valid_code(code, "vu_upper");
  require_knot(code, "vu_upper");
  auto ids = crossing_ids(code);
  const int n = static_cast<int>(ids.size());
  VuUpper out;
  for (int k = 0; k <= max_size && k <= n; ++k) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::set<int> sub;
      for (int i : pick) sub.insert(ids[static_cast<std::size_t>(i)]);
      auto res = is_trivial_bounded(virtualize(code, sub), depth, search_budget,
                                    MoveSet::standard(), extra_crossings);
      if (res.verdict == SearchOutcome::Verdict::yes) {
        out.crossings = std::move(sub);
        out.trace = res.trace;
        return out;
      }
      if (res.verdict == SearchOutcome::Verdict::unknown) out.budget_exceeded = true;
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == i + n - k) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::vector<VuEvidence> vu_lower_singletons(const GaussCode& code) {
  require_valid_code(code, "vu_lower_singletons");
  require_knot(code, "vu_lower_singletons");

  GaussCode circle = strip_passages(code);
  Laurent circle_yamada = yamada(circle);
  GroupPresentation circle_group = wirtinger(circle);
  long long base_z3 = hom_count(circle_group, cyclic_group(3));
  long long base_s3 = hom_count(circle_group, symmetric_group_3());

  std::vector<VuEvidence> out;
  for (int c : crossing_ids(code)) {
    GaussCode v = virtualize(code, {c});
    VuEvidence e;
    e.crossing = c;
    if (odd_writhe(v) != 0) e.certificate = "odd_writhe";
    if (e.certificate.empty()) {
      try {
        auto p = wirtinger(v);
        if (hom_count(p, cyclic_group(3)) != base_z3 ||
            hom_count(p, symmetric_group_3()) != base_s3)
          e.certificate = "hom_count";
      } catch (const BudgetError&) {
      }
    }
    if (e.certificate.empty()) {
      try {
        if (!yamada(v).equals_up_to_unit(circle_yamada)) e.certificate = "yamada";
      } catch (const BudgetError&) {
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

VuReport vu_report(const GaussCode& code, int max_size, int depth,
                   std::size_t search_budget, int extra_crossings) {
  VuReport r;
  r.upper = vu_upper(code, max_size, depth, search_budget, extra_crossings);
  r.lower = vu_lower_singletons(code);
  return r;
}

namespace {

// The two handcuff diagrams from the corpus: a loop at u, a loop at w, a bar
// between them. The crossed variant passes loop a once over loop b, which no
// sequence of moves can undo without changing the closed-component linking
// profile.
GaussCode handcuff_code(bool crossed) {
  AbstractGraph g;
  g.add_vertex("u");
  g.add_vertex("w");
  g.add_edge("a", "u", "u");
  g.add_edge("b", "w", "w");
  g.add_edge("e", "u", "w");
  GaussCode c;
  c.graph = g;
  if (crossed) {
    c.passages["a"] = {{1, StrandRole::over}};
    c.passages["b"] = {{1, StrandRole::under}};
    c.signs[1] = 1;
  }
  return c;
}

}  // namespace

ForbiddenSeparation forbidden_separation_demo(std::uint64_t seed, int sequences) {
  ForbiddenSeparation r;
  r.first = handcuff_code(false);
  r.second = handcuff_code(true);
  r.first_profile = t_link_profile(r.first);
  r.second_profile = t_link_profile(r.second);
  r.profiles_differ = r.first_profile != r.second_profile;
  r.profiles_stable = true;

  std::mt19937_64 rng(seed);
  for (int i = 0; i < sequences; ++i) {
    bool from_first = i % 2 == 0;
    const GaussCode& start = from_first ? r.first : r.second;
    const TLinkProfile& want = from_first ? r.first_profile : r.second_profile;
    int len = 1 + static_cast<int>(rng() % 8);
    auto trace = random_trace(start, len, rng(), MoveSet::all(),
                              crossing_count(start) + 3);
    if (t_link_profile(replay(trace)) != want) {
      r.profiles_stable = false;
      return r;
    }
    r.sequences_checked = i + 1;
  }
  return r;
}

namespace {

struct Seg {
  std::string name;
  int a, b;  // vertex indices 0..5
};

// Intersection of two straight segments found while scanning edge pairs.
struct Hit {
  int a, b;     // indices into the segment list, a < b
  double t, u;  // parameters along a and b
};

}  // namespace

GaussCode random_k6_code(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  std::vector<Seg> segs;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      segs.push_back({"e" + std::to_string(i + 1) + std::to_string(j + 1), i, j});

  const double eps = 1e-7;
  std::array<double, 6> px{}, py{};
  std::vector<Hit> hits;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 200)
      throw std::runtime_error("random_k6_code: no general-position drawing found");
    for (int i = 0; i < 6; ++i) {
      px[i] = unit();
      py[i] = unit();
    }

    bool good = true;
    for (int i = 0; i < 6 && good; ++i)
      for (int j = i + 1; j < 6 && good; ++j)
        for (int k = j + 1; k < 6 && good; ++k) {
          double cr = (px[j] - px[i]) * (py[k] - py[i]) - (py[j] - py[i]) * (px[k] - px[i]);
          if (std::abs(cr) < eps) good = false;
        }
    if (!good) continue;

    hits.clear();
    for (std::size_t a = 0; a < segs.size() && good; ++a) {
      for (std::size_t b = a + 1; b < segs.size() && good; ++b) {
        const Seg& A = segs[a];
        const Seg& B = segs[b];
        if (A.a == B.a || A.a == B.b || A.b == B.a || A.b == B.b) continue;
        double d1x = px[A.b] - px[A.a], d1y = py[A.b] - py[A.a];
        double d2x = px[B.b] - px[B.a], d2y = py[B.b] - py[B.a];
        double det = d1x * d2y - d1y * d2x;
        if (std::abs(det) < 1e-9) {
          good = false;
          break;
        }
        double rx = px[B.a] - px[A.a], ry = py[B.a] - py[A.a];
        double t = (rx * d2y - ry * d2x) / det;
        double u = (rx * d1y - ry * d1x) / det;
        if (std::min({std::abs(t), std::abs(t - 1), std::abs(u), std::abs(u - 1)}) < eps) {
          good = false;
          break;
        }
        if (t > 0 && t < 1 && u > 0 && u < 1)
          hits.push_back({static_cast<int>(a), static_cast<int>(b), t, u});
      }
    }
    if (!good) continue;

    std::vector<std::vector<double>> ts(segs.size());
    for (const auto& h : hits) {
      ts[static_cast<std::size_t>(h.a)].push_back(h.t);
      ts[static_cast<std::size_t>(h.b)].push_back(h.u);
    }
    for (auto& v : ts) {
      std::sort(v.begin(), v.end());
      for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i + 1] - v[i] < 1e-9) good = false;
    }
    if (good) break;
  }

  AbstractGraph g;
  for (int i = 1; i <= 6; ++i) g.add_vertex("v" + std::to_string(i));
  for (const auto& s : segs)
    g.add_edge(s.name, "v" + std::to_string(s.a + 1), "v" + std::to_string(s.b + 1));
  GaussCode code;
  code.graph = g;

  std::vector<std::vector<std::pair<double, Passage>>> per(segs.size());
  int id = 1;
  for (const auto& h : hits) {
    const Seg& A = segs[static_cast<std::size_t>(h.a)];
    const Seg& B = segs[static_cast<std::size_t>(h.b)];
    double d1x = px[A.b] - px[A.a], d1y = py[A.b] - py[A.a];
    double d2x = px[B.b] - px[B.a], d2y = py[B.b] - py[B.a];
    bool a_over = (rng() & 1u) != 0;
    double cz = d1x * d2y - d1y * d2x;
    if (!a_over) cz = -cz;
    code.signs[id] = cz > 0 ? 1 : -1;
    per[static_cast<std::size_t>(h.a)].push_back(
        {h.t, {id, a_over ? StrandRole::over : StrandRole::under}});
    per[static_cast<std::size_t>(h.b)].push_back(
        {h.u, {id, a_over ? StrandRole::under : StrandRole::over}});
    ++id;
  }
  for (std::size_t s = 0; s < segs.size(); ++s) {
    if (per[s].empty()) continue;
    std::sort(per[s].begin(), per[s].end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [t, p] : per[s]) code.passages[segs[s].name].push_back(p);
  }

  if (!validate(code).empty())
    throw std::logic_error("random_k6_code: generated code failed validation");
  if (!realizable(code).realizable)
    throw std::logic_error("random_k6_code: drawing not recognized as realizable");
  return code;
}

}  // namespace vsg
