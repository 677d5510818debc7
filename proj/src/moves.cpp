#include "vsg/moves.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "vsg/invariants.hpp"
#include "vsg/realizability.hpp"
#include "vsg/yamada.hpp"

namespace vsg {

const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1: return "R1";
    case MoveKind::R2: return "R2";
    case MoveKind::R3: return "R3";
    case MoveKind::R4_over: return "R4o";
    case MoveKind::R4_under: return "R4u";
    case MoveKind::R5_vertex_twist: return "R5";
    case MoveKind::F_over: return "Fo";
    case MoveKind::F_under: return "Fu";
    case MoveKind::F_knot: return "Fk";
  }
  return "?";
}

MoveSet MoveSet::standard() {
  MoveSet s;
  for (int i = 0; i <= static_cast<int>(MoveKind::R5_vertex_twist); ++i) s.allow[i] = true;
  return s;
}

MoveSet MoveSet::all() {
  MoveSet s;
  for (bool& b : s.allow) b = true;
  return s;
}

MoveSet MoveSet::with(MoveKind k) const {
  MoveSet s = *this;
  s.allow[static_cast<int>(k)] = true;
  return s;
}

MoveSet MoveSet::without(MoveKind k) const {
  MoveSet s = *this;
  s.allow[static_cast<int>(k)] = false;
  return s;
}

namespace {

std::vector<EndRef> effective_rotation(const AbstractGraph& g, const std::string& v) {
  return g.has_rotations() ? g.rotation(v) : g.incident_ends(v);
}

int fresh_crossing(const GaussCode& c) {
  return c.signs.empty() ? 1 : c.signs.rbegin()->first + 1;
}

// Sliding a degree-2 vertex along its own loop is an isotopy, so the loop's
// passage word is only cyclically anchored there.
bool rotatable_loop(const GaussCode& c, const GraphEdge& e) {
  return e.is_loop() && c.graph.degree(e.tail) == 2;
}

// Consecutive positions on one strand segment. Wrap pairs appear only on
// rotatable loops; everywhere else the vertex interrupts the strand.
struct Adjacency {
  std::string edge;
  int i = 0, j = 0;
};

std::vector<Adjacency> adjacent_pairs(const GaussCode& c) {
  std::vector<Adjacency> out;
  for (const auto& e : c.graph.edges()) {
    int n = static_cast<int>(c.passages_on(e.id).size());
    for (int i = 0; i + 1 < n; ++i) out.push_back({e.id, i, i + 1});
    if (n >= 2 && rotatable_loop(c, e)) out.push_back({e.id, n - 1, 0});
  }
  return out;
}

void erase_at(GaussCode& c, std::map<std::string, std::vector<int>> pos) {
  for (auto& [e, idxs] : pos) {
    std::sort(idxs.begin(), idxs.end(), std::greater<int>());
    auto& lst = c.passages[e];
    for (int i : idxs) lst.erase(lst.begin() + i);
  }
}

char role_char(StrandRole r) { return r == StrandRole::over ? 'o' : 'u'; }
char sign_char(int s) { return s > 0 ? '+' : '-'; }

// ---------------------------------------------------------------------------
// canonical_key

std::string serialize_with(const GaussCode& c, bool reorder, const std::map<std::string, int>& shift) {
  const AbstractGraph& g = c.graph;
  std::map<std::string, int> comp;
  int nc = 0;
  for (const auto& v : g.vertices())
    if (!comp.count(v)) {
      for (const auto& u : component_vertices(g, v)) comp[u] = nc;
      ++nc;
    }
  std::vector<int> order(nc);
  for (int i = 0; i < nc; ++i) order[i] = i;
  if (reorder) {
    std::vector<std::string> least(nc);
    for (const auto& v : g.vertices()) {
      auto& m = least[comp[v]];
      if (m.empty() || v < m) m = v;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return least[a] < least[b]; });
  }
  std::vector<std::string> vs;
  for (int ci : order)
    for (const auto& v : g.vertices())
      if (comp[v] == ci) vs.push_back(v);
  std::vector<const GraphEdge*> es;
  for (int ci : order)
    for (const auto& e : g.edges())
      if (comp[e.tail] == ci) es.push_back(&e);

  auto shifted = [&](const GraphEdge& e) {
    std::vector<Passage> lst = c.passages_on(e.id);
    auto it = shift.find(e.id);
    if (it != shift.end() && !lst.empty())
      std::rotate(lst.begin(), lst.begin() + it->second % lst.size(), lst.end());
    return lst;
  };

  std::map<int, int> label;
  for (const GraphEdge* e : es)
    for (const auto& p : shifted(*e))
      if (!label.count(p.crossing)) {
        int next = static_cast<int>(label.size()) + 1;
        label[p.crossing] = next;
      }

  std::ostringstream out;
  out << "V";
  for (const auto& v : vs) out << ' ' << v;
  out << ";R";
  for (const auto& v : vs) {
    auto rot = effective_rotation(g, v);
    int n = static_cast<int>(rot.size());
    auto tok = [&](const EndRef& f) { return f.edge + (f.at_head ? ".h" : ".t"); };
    int best = 0;
    for (int r = 1; r < n; ++r) {
      for (int k = 0; k < n; ++k) {
        const auto a = tok(rot[(r + k) % n]);
        const auto b = tok(rot[(best + k) % n]);
        if (a != b) {
          if (a < b) best = r;
          break;
        }
      }
    }
    out << ' ' << v << '(';
    for (int k = 0; k < n; ++k) out << tok(rot[(best + k) % n]) << ',';
    out << ')';
  }
  out << ";E";
  for (const GraphEdge* e : es) out << ' ' << e->id << ':' << e->tail << '>' << e->head;
  out << ";P";
  for (const GraphEdge* e : es) {
    out << ' ' << e->id << '=';
    for (const auto& p : shifted(*e)) out << label[p.crossing] << role_char(p.role) << ',';
  }
  out << ";S";
  std::map<int, int> by_label;
  for (const auto& [cr, l] : label) by_label[l] = c.sign_of(cr);
  for (const auto& [l, s] : by_label) out << ' ' << l << sign_char(s);
  return out.str();
}

}  // namespace

std::string canonical_key(const GaussCode& code, bool reorder_components) {
  // Per rotatable loop: candidate anchors = minimal rotations of a word built
  // only from relabeling-invariant passage data, so equal diagrams propose
  // equal candidate sets.
  auto locs = passage_locations(code);
  std::vector<std::pair<std::string, std::vector<int>>> cands;
  for (const auto& e : code.graph.edges()) {
    if (!rotatable_loop(code, e)) continue;
    const auto& lst = code.passages_on(e.id);
    int n = static_cast<int>(lst.size());
    if (n < 2) continue;
    std::vector<std::string> w(n);
    for (int k = 0; k < n; ++k) {
      const auto& two = locs.at(lst[k].crossing);
      PassageLoc self{e.id, k};
      const PassageLoc& other = two[0] == self ? two[1] : two[0];
      std::string t;
      t += role_char(lst[k].role);
      t += sign_char(code.sign_of(lst[k].crossing));
      if (other.edge == e.id)
        t += std::to_string((other.index - k + n) % n);
      else
        t += "@" + other.edge;
      w[k] = t;
    }
    std::vector<int> best{0};
    for (int r = 1; r < n; ++r) {
      int cmp = 0;
      for (int k = 0; k < n && cmp == 0; ++k) {
        const auto& a = w[(r + k) % n];
        const auto& b = w[(best[0] + k) % n];
        cmp = a < b ? -1 : (a == b ? 0 : 1);
      }
      if (cmp < 0)
        best = {r};
      else if (cmp == 0)
        best.push_back(r);
    }
    cands.push_back({e.id, best});
  }

  long long total = 1;
  for (const auto& [e, v] : cands) {
    total *= static_cast<long long>(v.size());
    if (total > 4096) break;
  }
  if (total > 4096) cands.clear();  // pathological symmetry: anchor as stored

  std::string result;
  std::vector<size_t> idx(cands.size(), 0);
  while (true) {
    std::map<std::string, int> shift;
    for (size_t i = 0; i < cands.size(); ++i) shift[cands[i].first] = cands[i].second[idx[i]];
    std::string s = serialize_with(code, reorder_components, shift);
    if (result.empty() || s < result) result = s;
    size_t k = 0;
    while (k < idx.size() && ++idx[k] == cands[k].second.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return result;
}

uint64_t key_hash(const std::string& key) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// neighbor generation

namespace {

struct Gen {
  const GaussCode& base;
  int maxcr;
  int basecr;
  std::vector<Neighbor> out;

  Gen(const GaussCode& b, int m) : base(b), maxcr(m), basecr(crossing_count(b)) {}

  bool fits(int count) const { return maxcr < 0 || count <= maxcr; }

  void emit(MoveKind k, std::string site, GaussCode code) {
    out.push_back({k, std::move(site), std::move(code)});
  }
};

std::string loc_site(const Adjacency& a) {
  std::ostringstream s;
  s << a.edge << ':' << a.i << '/' << a.j;
  return s.str();
}

void gen_r1(Gen& g) {
  for (const auto& a : adjacent_pairs(g.base)) {
    const auto& lst = g.base.passages_on(a.edge);
    if (lst[a.i].crossing != lst[a.j].crossing) continue;
    int c = lst[a.i].crossing;
    GaussCode n = g.base;
    erase_at(n, {{a.edge, {a.i, a.j}}});
    n.signs.erase(c);
    g.emit(MoveKind::R1, loc_site(a) + " -c" + std::to_string(c), std::move(n));
  }
  if (!g.fits(g.basecr + 1)) return;
  int id = fresh_crossing(g.base);
  for (const auto& e : g.base.graph.edges()) {
    int len = static_cast<int>(g.base.passages_on(e.id).size());
    for (int gp = 0; gp <= len; ++gp)
      for (int over_first = 1; over_first >= 0; --over_first)
        for (int s : {+1, -1}) {
          GaussCode n = g.base;
          auto& lst = n.passages[e.id];
          Passage first{id, over_first ? StrandRole::over : StrandRole::under};
          Passage second{id, over_first ? StrandRole::under : StrandRole::over};
          lst.insert(lst.begin() + gp, {first, second});
          n.signs[id] = s;
          std::ostringstream site;
          site << e.id << ':' << gp << ' ' << (over_first ? "OU" : "UO") << sign_char(s);
          g.emit(MoveKind::R1, site.str(), std::move(n));
        }
  }
}

void gen_r2(Gen& g) {
  auto adj = adjacent_pairs(g.base);
  // removal: an all-over pair and an all-under pair of the same two crossings,
  // opposite signs, disjoint positions
  for (const auto& ov : adj) {
    const auto& lo = g.base.passages_on(ov.edge);
    if (lo[ov.i].role != StrandRole::over || lo[ov.j].role != StrandRole::over) continue;
    int c = lo[ov.i].crossing, d = lo[ov.j].crossing;
    if (c == d) continue;
    for (const auto& un : adj) {
      const auto& lu = g.base.passages_on(un.edge);
      if (lu[un.i].role != StrandRole::under || lu[un.j].role != StrandRole::under) continue;
      int c2 = lu[un.i].crossing, d2 = lu[un.j].crossing;
      if (std::minmax(c, d) != std::minmax(c2, d2)) continue;
      if (ov.edge == un.edge && (ov.i == un.i || ov.i == un.j || ov.j == un.i || ov.j == un.j)) continue;
      if (g.base.sign_of(c) != -g.base.sign_of(d)) continue;
      GaussCode n = g.base;
      std::map<std::string, std::vector<int>> del;
      del[ov.edge].push_back(ov.i);
      del[ov.edge].push_back(ov.j);
      del[un.edge].push_back(un.i);
      del[un.edge].push_back(un.j);
      erase_at(n, std::move(del));
      n.signs.erase(c);
      n.signs.erase(d);
      auto [lo_id, hi_id] = std::minmax(c, d);
      std::ostringstream site;
      site << loc_site(ov) << ' ' << loc_site(un) << " -c" << lo_id << "c" << hi_id;
      g.emit(MoveKind::R2, site.str(), std::move(n));
    }
  }
  if (!g.fits(g.basecr + 2)) return;
  // insertion: over pair at one gap, under pair at another, opposite signs
  struct Gap {
    std::string edge;
    int g = 0;
  };
  std::vector<Gap> gaps;
  for (const auto& e : g.base.graph.edges()) {
    int len = static_cast<int>(g.base.passages_on(e.id).size());
    for (int gp = 0; gp <= len; ++gp) gaps.push_back({e.id, gp});
  }
  int c = fresh_crossing(g.base), d = c + 1;
  for (const auto& go : gaps)
    for (const auto& gu : gaps)
      for (int parallel = 1; parallel >= 0; --parallel)
        for (int s : {+1, -1}) {
          GaussCode n = g.base;
          std::vector<Passage> over{{c, StrandRole::over}, {d, StrandRole::over}};
          std::vector<Passage> under = parallel ? std::vector<Passage>{{c, StrandRole::under}, {d, StrandRole::under}}
                                                : std::vector<Passage>{{d, StrandRole::under}, {c, StrandRole::under}};
          if (go.edge == gu.edge && go.g >= gu.g) {
            auto& lst = n.passages[go.edge];
            lst.insert(lst.begin() + go.g, over.begin(), over.end());
            lst.insert(lst.begin() + gu.g, under.begin(), under.end());
          } else if (go.edge == gu.edge) {
            auto& lst = n.passages[go.edge];
            lst.insert(lst.begin() + gu.g, under.begin(), under.end());
            lst.insert(lst.begin() + go.g, over.begin(), over.end());
          } else {
            auto& lo = n.passages[go.edge];
            lo.insert(lo.begin() + go.g, over.begin(), over.end());
            auto& lu = n.passages[gu.edge];
            lu.insert(lu.begin() + gu.g, under.begin(), under.end());
          }
          n.signs[c] = s;
          n.signs[d] = -s;
          std::ostringstream site;
          site << go.edge << ':' << go.g << '/' << gu.edge << ':' << gu.g << ' ' << (parallel ? 'p' : 'x')
               << sign_char(s);
          g.emit(MoveKind::R2, site.str(), std::move(n));
        }
}

// The legal triangle patterns, generated from one planar picture. Strand A
// meets crossings c1 (with B) and c2 (with C), B meets c1 and c3, C meets c3
// and c2; in the base drawing A runs (c1,c2), B (c1,c3), C (c3,c2) with
// crossing-direction determinants +,-,- respectively. Direction flips and the
// mirror span every drawing; role patterns where no strand is uniformly
// over/under are the two untwistable cycles and are excluded.
const std::set<std::string>& r3_patterns() {
  static const std::set<std::string> table = [] {
    std::set<std::string> t;
    for (int da : {+1, -1})
      for (int db : {+1, -1})
        for (int dc : {+1, -1})
          for (int mirror : {+1, -1})
            for (int x1 = 0; x1 < 2; ++x1)      // 0: A over at c1
              for (int x2 = 0; x2 < 2; ++x2)    // 0: A over at c2
                for (int x3 = 0; x3 < 2; ++x3)  // 0: B over at c3
                {
                  bool a_uni = (x1 == 0 && x2 == 0) || (x1 == 1 && x2 == 1);
                  bool b_uni = (x1 == 1 && x3 == 0) || (x1 == 0 && x3 == 1);
                  bool c_uni = (x2 == 1 && x3 == 1) || (x2 == 0 && x3 == 0);
                  if (!a_uni && !b_uni && !c_uni) continue;
                  int s1 = (x1 == 0 ? +1 : -1) * (+1) * da * db * mirror;
                  int s2 = (x2 == 0 ? +1 : -1) * (-1) * da * dc * mirror;
                  int s3 = (x3 == 0 ? +1 : -1) * (-1) * db * dc * mirror;
                  std::string enc;
                  enc += da > 0 ? '0' : '1';  // 0: A meets c1 first
                  enc += db > 0 ? '0' : '1';  // 0: B meets c1 first
                  enc += dc > 0 ? '0' : '1';  // 0: C meets c3 first
                  enc += static_cast<char>('0' + x1);
                  enc += static_cast<char>('0' + x2);
                  enc += static_cast<char>('0' + x3);
                  enc += sign_char(s1);
                  enc += sign_char(s2);
                  enc += sign_char(s3);
                  t.insert(enc);
                }
    return t;
  }();
  return table;
}

void gen_r3(Gen& g) {
  auto adj = adjacent_pairs(g.base);
  std::map<std::pair<int, int>, std::vector<int>> sites;  // crossing pair -> adjacency indices
  for (int k = 0; k < static_cast<int>(adj.size()); ++k) {
    const auto& lst = g.base.passages_on(adj[k].edge);
    int c = lst[adj[k].i].crossing, d = lst[adj[k].j].crossing;
    if (c != d) sites[std::minmax(c, d)].push_back(k);
  }
  std::set<int> ids;
  for (const auto& [pr, v] : sites) {
    ids.insert(pr.first);
    ids.insert(pr.second);
  }
  std::vector<int> idv(ids.begin(), ids.end());
  std::set<std::string> seen;
  auto instance = [&](const Adjacency& a, int crossing) {
    const auto& lst = g.base.passages_on(a.edge);
    return lst[a.i].crossing == crossing ? std::pair<std::string, int>{a.edge, a.i}
                                         : std::pair<std::string, int>{a.edge, a.j};
  };
  auto role_at = [&](const Adjacency& a, int crossing) {
    const auto& lst = g.base.passages_on(a.edge);
    return lst[a.i].crossing == crossing ? lst[a.i].role : lst[a.j].role;
  };
  auto first_of = [&](const Adjacency& a) { return g.base.passages_on(a.edge)[a.i].crossing; };
  for (size_t ix = 0; ix < idv.size(); ++ix)
    for (size_t iy = ix + 1; iy < idv.size(); ++iy)
      for (size_t iz = iy + 1; iz < idv.size(); ++iz) {
        int x = idv[ix], y = idv[iy], z = idv[iz];
        auto pxy = sites.find({x, y}), pxz = sites.find({x, z}), pyz = sites.find({y, z});
        if (pxy == sites.end() || pxz == sites.end() || pyz == sites.end()) continue;
        for (int axy : pxy->second)
          for (int axz : pxz->second)
            for (int ayz : pyz->second) {
              const Adjacency segs[3] = {adj[axy], adj[axz], adj[ayz]};
              std::set<std::pair<std::string, int>> inst;
              inst.insert(instance(segs[0], x));
              inst.insert(instance(segs[0], y));
              inst.insert(instance(segs[1], x));
              inst.insert(instance(segs[1], z));
              inst.insert(instance(segs[2], y));
              inst.insert(instance(segs[2], z));
              if (inst.size() != 6) continue;
              // try each assignment of the three segments to strands A,B,C
              static const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
              bool legal = false;
              for (const auto& p : perm) {
                const Adjacency &A = segs[p[0]], &B = segs[p[1]], &C = segs[p[2]];
                // shared crossings under this assignment
                auto shared = [&](const Adjacency& u, const Adjacency& v) {
                  const auto& lu = g.base.passages_on(u.edge);
                  int a1 = lu[u.i].crossing, a2 = lu[u.j].crossing;
                  const auto& lv = g.base.passages_on(v.edge);
                  int b1 = lv[v.i].crossing, b2 = lv[v.j].crossing;
                  if (a1 == b1 || a1 == b2) return a1;
                  return a2;
                };
                int c1 = shared(A, B), c2 = shared(A, C), c3 = shared(B, C);
                std::string enc;
                enc += first_of(A) == c1 ? '0' : '1';
                enc += first_of(B) == c1 ? '0' : '1';
                enc += first_of(C) == c3 ? '0' : '1';
                enc += role_at(A, c1) == StrandRole::over ? '0' : '1';
                enc += role_at(A, c2) == StrandRole::over ? '0' : '1';
                enc += role_at(B, c3) == StrandRole::over ? '0' : '1';
                enc += sign_char(g.base.sign_of(c1));
                enc += sign_char(g.base.sign_of(c2));
                enc += sign_char(g.base.sign_of(c3));
                if (r3_patterns().count(enc)) {
                  legal = true;
                  break;
                }
              }
              if (!legal) continue;
              std::vector<std::string> parts = {loc_site(segs[0]), loc_site(segs[1]), loc_site(segs[2])};
              std::sort(parts.begin(), parts.end());
              std::string site = parts[0] + ' ' + parts[1] + ' ' + parts[2];
              if (!seen.insert(site).second) continue;
              GaussCode n = g.base;
              for (const auto& sgm : segs) {
                auto& lst = n.passages[sgm.edge];
                std::swap(lst[sgm.i], lst[sgm.j]);
              }
              g.emit(MoveKind::R3, site, std::move(n));
            }
      }
}

// Sign of the crossing a sliding strand makes with one fan end. Derivation:
// clockwise fan, strand passing on the arc side, crossing run read along the
// strand; "forward" is the direction that meets a lower arc in reverse fan
// order. Removal-side values; the inserted side is the negation.
int r4_removed_sign(bool over_flavor, bool forward, bool at_head) {
  int s = at_head ? +1 : -1;
  if (!forward) s = -s;
  if (!over_flavor) s = -s;
  return s;
}

void gen_r4(Gen& g, bool over_flavor) {
  MoveKind kind = over_flavor ? MoveKind::R4_over : MoveKind::R4_under;
  StrandRole strand_role = over_flavor ? StrandRole::over : StrandRole::under;
  auto locs = passage_locations(g.base);

  auto build = [&](const std::string& v, const std::vector<EndRef>& fan, int s, int L, bool forward,
                   const std::string& eS, int run_start, const std::vector<std::pair<EndRef, int>>& removed) {
    int d = static_cast<int>(fan.size());
    if (!g.fits(g.basecr - L + (d - L))) return;
    GaussCode n = g.base;
    std::map<std::string, std::vector<int>> del;
    for (const auto& [f, pos] : removed) del[f.edge].push_back(pos);
    int before_run = 0;
    for (int t = 0; t < L; ++t) del[eS].push_back(run_start + t);
    if (L > 0)
      for (int p : del[eS])
        if (p < run_start) ++before_run;
    erase_at(n, del);
    for (const auto& [f, pos] : removed) n.signs.erase(g.base.passages_on(f.edge)[pos].crossing);
    int gap = run_start - before_run;  // for L == 0 run_start is already a gap
    int next_id = fresh_crossing(n);
    std::vector<Passage> run;
    std::vector<std::pair<EndRef, int>> endins;
    for (int t = 0; t < d - L; ++t) {
      EndRef f = forward ? fan[(s + L + t) % d] : fan[((s - 1 - t) % d + d) % d];
      int id = next_id + t;
      run.push_back({id, strand_role});
      endins.push_back({f, id});
    }
    auto& slist = n.passages[eS];
    slist.insert(slist.begin() + gap, run.begin(), run.end());
    for (const auto& [f, id] : endins)
      if (f.at_head) n.passages[f.edge].push_back({id, other_role(strand_role)});
    for (const auto& [f, id] : endins)
      if (!f.at_head) {
        auto& lst = n.passages[f.edge];
        lst.insert(lst.begin(), {id, other_role(strand_role)});
      }
    for (const auto& [f, id] : endins) n.signs[id] = -r4_removed_sign(over_flavor, forward, f.at_head);
    std::ostringstream site;
    site << "v=" << v << " a=" << s << '+' << L << ' ' << eS << ':' << run_start << (forward ? " F" : " R");
    g.emit(kind, site.str(), std::move(n));
  };

  for (const auto& v : g.base.graph.vertices()) {
    auto fan = effective_rotation(g.base.graph, v);
    int d = static_cast<int>(fan.size());
    if (d == 0) continue;
    // matched arcs: ends whose nearest passage pairs with a uniform run
    // the run-order and sign checks pin at most one anchor per variant
    for (int s = 0; s < d; ++s)
      for (int L = 1; L <= d; ++L) {
        std::vector<std::pair<EndRef, int>> removed;
        std::vector<int> cids;
        std::vector<PassageLoc> partners;
        bool ok = true;
        for (int t = 0; t < L && ok; ++t) {
          EndRef f = fan[(s + t) % d];
          const auto& lst = g.base.passages_on(f.edge);
          if (lst.empty()) {
            ok = false;
            break;
          }
          int pos = f.at_head ? static_cast<int>(lst.size()) - 1 : 0;
          const Passage& p = lst[pos];
          if (p.role != other_role(strand_role)) {
            ok = false;
            break;
          }
          const auto& two = locs.at(p.crossing);
          PassageLoc self{f.edge, pos};
          const PassageLoc& partner = two[0] == self ? two[1] : two[0];
          removed.push_back({f, pos});
          cids.push_back(p.crossing);
          partners.push_back(partner);
        }
        if (!ok) continue;
        std::set<int> uniq(cids.begin(), cids.end());
        if (static_cast<int>(uniq.size()) != L) continue;
        const std::string& eS = partners[0].edge;
        bool same_edge = true;
        for (const auto& pl : partners) same_edge = same_edge && pl.edge == eS;
        if (!same_edge) continue;
        std::set<std::pair<std::string, int>> inst;
        for (const auto& [f, pos] : removed) inst.insert({f.edge, pos});
        for (const auto& pl : partners) inst.insert({pl.edge, pl.index});
        if (inst.size() != static_cast<size_t>(2 * L)) continue;
        for (bool forward : {true, false}) {
          // forward: run order is the reversed arc; backward: the arc itself
          int run_start = forward ? partners[L - 1].index : partners[0].index;
          bool match = true;
          for (int t = 0; t < L && match; ++t) {
            int want = forward ? run_start + (L - 1 - t) : run_start + t;
            match = partners[t].index == want;
          }
          for (int t = 0; t < L && match; ++t) {
            EndRef f = fan[(s + t) % d];
            match = g.base.sign_of(cids[t]) == r4_removed_sign(over_flavor, forward, f.at_head);
          }
          if (!match) continue;
          build(v, fan, s, L, forward, eS, run_start, removed);
        }
      }
    // pure insertion: slide a strand segment across the whole fan
    if (g.fits(g.basecr + d))
      for (const auto& e : g.base.graph.edges()) {
        int len = static_cast<int>(g.base.passages_on(e.id).size());
        for (int gp = 0; gp <= len; ++gp)
          for (int t0 = 0; t0 < d; ++t0)
            for (bool forward : {true, false}) {
              // anchor via s+L == t0 (forward) / s-1 == t0 (backward)
              int s0 = forward ? t0 : (t0 + 1) % d;
              build(v, fan, s0, 0, forward, e.id, gp, {});
            }
      }
  }
}

void gen_r5(Gen& g) {
  for (const auto& v : g.base.graph.vertices()) {
    auto fan = effective_rotation(g.base.graph, v);
    int d = static_cast<int>(fan.size());
    if (d < 2) continue;
    for (int i = 0; i < d; ++i) {
      if (d == 2 && i == 1) continue;
      EndRef f1 = fan[i], f2 = fan[(i + 1) % d];
      auto slot = [&](const EndRef& f) {
        const auto& lst = g.base.passages_on(f.edge);
        return f.at_head ? static_cast<int>(lst.size()) - 1 : 0;
      };
      auto twist_rotation = [&](AbstractGraph& gr) {
        if (!gr.has_rotations())
          for (const auto& u : gr.vertices()) gr.set_rotation(u, gr.incident_ends(u));
        auto rot = gr.rotation(v);
        std::swap(rot[i], rot[(i + 1) % d]);
        gr.set_rotation(v, rot);
      };
      // A half-twist only decides which strand lies on top; the crossing sign
      // then follows from the strand directions. Ends on the same side of the
      // vertex cross against the rotation sense, mixed ends with it.
      bool same_side = f1.at_head == f2.at_head;
      auto twist_sign = [&](bool f1_over) { return f1_over == same_side ? -1 : +1; };
      // removal: the two ends meet in a crossing right at the vertex
      const auto& l1 = g.base.passages_on(f1.edge);
      const auto& l2 = g.base.passages_on(f2.edge);
      if (!l1.empty() && !l2.empty()) {
        int p1 = slot(f1), p2 = slot(f2);
        if (!(f1.edge == f2.edge && p1 == p2) && l1[p1].crossing == l2[p2].crossing &&
            g.base.sign_of(l1[p1].crossing) == twist_sign(l1[p1].role == StrandRole::under)) {
          int c = l1[p1].crossing;
          GaussCode n = g.base;
          std::map<std::string, std::vector<int>> del;
          del[f1.edge].push_back(p1);
          del[f2.edge].push_back(p2);
          erase_at(n, del);
          n.signs.erase(c);
          twist_rotation(n.graph);
          std::ostringstream site;
          site << "v=" << v << " i=" << i << " -c" << c;
          g.emit(MoveKind::R5_vertex_twist, site.str(), std::move(n));
        }
      }
      // insertion: twist the two ends across each other
      if (!g.fits(g.basecr + 1)) continue;
      int id = fresh_crossing(g.base);
      for (int first_over = 1; first_over >= 0; --first_over) {
        int s = twist_sign(first_over != 0);
        GaussCode n = g.base;
        auto put = [&](const EndRef& f, StrandRole r) {
          auto& lst = n.passages[f.edge];
          if (f.at_head)
            lst.push_back({id, r});
          else
            lst.insert(lst.begin(), {id, r});
        };
        put(f1, first_over ? StrandRole::over : StrandRole::under);
        put(f2, first_over ? StrandRole::under : StrandRole::over);
        n.signs[id] = s;
        twist_rotation(n.graph);
        std::ostringstream site;
        site << "v=" << v << " i=" << i << " +" << (first_over ? 'O' : 'U') << sign_char(s);
        g.emit(MoveKind::R5_vertex_twist, site.str(), std::move(n));
      }
    }
  }
}

void gen_forbidden(Gen& g, MoveKind kind) {
  for (const auto& a : adjacent_pairs(g.base)) {
    const auto& lst = g.base.passages_on(a.edge);
    const Passage &p = lst[a.i], &q = lst[a.j];
    if (p.crossing == q.crossing) continue;
    bool match = false;
    switch (kind) {
      case MoveKind::F_over: match = p.role == StrandRole::over && q.role == StrandRole::over; break;
      case MoveKind::F_under: match = p.role == StrandRole::under && q.role == StrandRole::under; break;
      case MoveKind::F_knot: match = p.role != q.role; break;
      default: break;
    }
    if (!match) continue;
    GaussCode n = g.base;
    auto& nl = n.passages[a.edge];
    std::swap(nl[a.i], nl[a.j]);
    g.emit(kind, loc_site(a), std::move(n));
  }
}

}  // namespace

std::vector<Neighbor> neighbors(const GaussCode& code, const MoveSet& allowed, int max_crossings) {
  auto errs = validate(code);
  if (!errs.empty()) throw std::invalid_argument("neighbors: invalid code: " + errs.front());
  Gen g(code, max_crossings);
  if (allowed.contains(MoveKind::R1)) gen_r1(g);
  if (allowed.contains(MoveKind::R2)) gen_r2(g);
  if (allowed.contains(MoveKind::R3)) gen_r3(g);
  if (allowed.contains(MoveKind::R4_over)) gen_r4(g, true);
  if (allowed.contains(MoveKind::R4_under)) gen_r4(g, false);
  if (allowed.contains(MoveKind::R5_vertex_twist)) gen_r5(g);
  if (allowed.contains(MoveKind::F_over)) gen_forbidden(g, MoveKind::F_over);
  if (allowed.contains(MoveKind::F_under)) gen_forbidden(g, MoveKind::F_under);
  if (allowed.contains(MoveKind::F_knot)) gen_forbidden(g, MoveKind::F_knot);
  std::sort(g.out.begin(), g.out.end(), [](const Neighbor& a, const Neighbor& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.site < b.site;
  });
  return std::move(g.out);
}

GaussCode replay(const MoveTrace& trace) {
  GaussCode cur = trace.start;
  for (const auto& step : trace.steps) {
    auto ns = neighbors(cur, MoveSet::none().with(step.kind), -1);
    const Neighbor* hit = nullptr;
    for (const auto& n : ns)
      if (n.site == step.site) {
        hit = &n;
        break;
      }
    if (!hit) throw std::runtime_error(std::string("trace step does not apply: ") + move_name(step.kind) + " " + step.site);
    cur = hit->code;
    if (key_hash(canonical_key(cur)) != step.result_hash)
      throw std::runtime_error(std::string("trace hash mismatch at: ") + move_name(step.kind) + " " + step.site);
  }
  return cur;
}

MoveTrace random_trace(const GaussCode& start, int length, uint64_t seed, const MoveSet& allowed, int max_crossings) {
  std::mt19937_64 rng(seed);
  MoveTrace trace{start, {}};
  GaussCode cur = start;
  for (int k = 0; k < length; ++k) {
    auto ns = neighbors(cur, allowed, max_crossings);
    if (ns.empty()) break;
    // pick a kind first so rare moves are exercised, then a site
    std::vector<MoveKind> kinds;
    for (const auto& n : ns)
      if (kinds.empty() || kinds.back() != n.kind) kinds.push_back(n.kind);
    MoveKind kind = kinds[rng() % kinds.size()];
    std::vector<const Neighbor*> of_kind;
    for (const auto& n : ns)
      if (n.kind == kind) of_kind.push_back(&n);
    const Neighbor* pick = of_kind[rng() % of_kind.size()];
    trace.steps.push_back({pick->kind, pick->site, key_hash(canonical_key(pick->code))});
    cur = pick->code;
  }
  return trace;
}

// ---------------------------------------------------------------------------
// bounded equivalence search

namespace {

std::string graph_signature(const AbstractGraph& g) {
  std::vector<std::string> vs(g.vertices().begin(), g.vertices().end());
  std::sort(vs.begin(), vs.end());
  std::vector<std::string> es;
  for (const auto& e : g.edges()) es.push_back(e.id + ":" + e.tail + ">" + e.head);
  std::sort(es.begin(), es.end());
  std::string out;
  for (const auto& v : vs) out += v + ";";
  out += "|";
  for (const auto& e : es) out += e + ";";
  return out;
}

struct Rec {
  GaussCode code;
  std::string parent;  // empty at the root
  MoveKind kind = MoveKind::R1;
  std::string site;
};

}  // namespace

SearchOutcome equivalent_bounded(const GaussCode& a, const GaussCode& b, int depth, size_t budget,
                                 const MoveSet& allowed, int extra_crossings) {
  for (const GaussCode* c : {&a, &b}) {
    auto errs = validate(*c);
    if (!errs.empty()) throw std::invalid_argument("equivalent_bounded: invalid code: " + errs.front());
  }
  SearchOutcome out;
  std::string ka = canonical_key(a), kb = canonical_key(b);
  if (ka == kb) {
    out.verdict = SearchOutcome::Verdict::yes;
    out.trace = MoveTrace{a, {}};
    return out;
  }
  if (a.graph.betti() != b.graph.betti()) {
    out.verdict = SearchOutcome::Verdict::no;
    out.witness = "betti";
    return out;
  }
  try {
    if (t_link_profile(a) != t_link_profile(b)) {
      out.verdict = SearchOutcome::Verdict::no;
      out.witness = "t_link_profile";
      return out;
    }
  } catch (const BudgetError&) {
  }
  try {
    if (!yamada(a).equals_up_to_unit(yamada(b))) {
      out.verdict = SearchOutcome::Verdict::no;
      out.witness = "yamada";
      return out;
    }
  } catch (const BudgetError&) {
  }
  if (graph_signature(a.graph) != graph_signature(b.graph)) return out;  // unknown: moves never rename

  int cap = std::max(crossing_count(a), crossing_count(b)) + extra_crossings;
  std::unordered_map<std::string, Rec> fa, fb;
  fa[ka] = {a, "", MoveKind::R1, ""};
  fb[kb] = {b, "", MoveKind::R1, ""};
  std::vector<std::string> qa{ka}, qb{kb};
  int used_depth = 0;
  std::string meet;
  bool met = false;

  while (!met && used_depth < depth && !qa.empty() && !qb.empty() && fa.size() + fb.size() < budget) {
    bool expand_a = qa.size() <= qb.size();
    auto& frontier = expand_a ? qa : qb;
    auto& mine = expand_a ? fa : fb;
    auto& other = expand_a ? fb : fa;
    std::vector<std::string> next;
    for (const auto& key : frontier) {
      GaussCode cur = mine.at(key).code;
      for (auto& n : neighbors(cur, allowed, cap)) {
        std::string k = canonical_key(n.code);
        if (mine.count(k)) continue;
        mine[k] = {std::move(n.code), key, n.kind, n.site};
        next.push_back(k);
        if (other.count(k)) {
          meet = k;
          met = true;
          break;
        }
        if (fa.size() + fb.size() >= budget) break;
      }
      if (met || fa.size() + fb.size() >= budget) break;
    }
    frontier = std::move(next);
    ++used_depth;
  }
  out.explored = fa.size() + fb.size();
  if (!met) return out;

  // forward half from a
  std::vector<const Rec*> chain;
  for (std::string k = meet; !k.empty();) {
    const Rec& r = fa.at(k);
    if (r.parent.empty()) break;
    chain.push_back(&r);
    k = r.parent;
  }
  std::reverse(chain.begin(), chain.end());
  MoveTrace trace{a, {}};
  for (const Rec* r : chain) trace.steps.push_back({r->kind, r->site, key_hash(canonical_key(r->code))});
  // backward half toward b, by inverting the recorded parents
  GaussCode cur = fa.at(meet).code;
  std::vector<std::string> targets;
  for (std::string k = fb.at(meet).parent; !k.empty(); k = fb.at(k).parent) targets.push_back(k);
  for (const auto& tk : targets) {
    bool found = false;
    for (auto& n : neighbors(cur, allowed, cap)) {
      if (canonical_key(n.code) == tk) {
        trace.steps.push_back({n.kind, n.site, key_hash(tk)});
        cur = std::move(n.code);
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("equivalent_bounded: failed to invert a search step");
  }
  out.verdict = SearchOutcome::Verdict::yes;
  out.trace = std::move(trace);
  return out;
}

SearchOutcome is_trivial_bounded(const GaussCode& code, int depth, size_t budget, const MoveSet& allowed,
                                 int extra_crossings) {
  const auto& g = code.graph;
  if (g.vertex_count() != 1 || g.edge_count() != 1 || !g.edges()[0].is_loop())
    throw std::invalid_argument("is_trivial_bounded: code is not a single loop");
  GaussCode target;
  target.graph = g;
  return equivalent_bounded(code, target, depth, budget, allowed, extra_crossings);
}

}  // namespace vsg
