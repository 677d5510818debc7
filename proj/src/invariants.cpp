#include "vsg/invariants.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "vsg/realizability.hpp"

namespace vsg {

namespace {

std::map<std::string, int> cycle_directions(const Cycle& c) {
  std::map<std::string, int> d;
  for (auto& s : c.steps) d[s.edge] = s.forward ? 1 : -1;
  return d;
}

void require_valid(const GaussCode& code) {
  auto bad = validate(code);
  if (!bad.empty()) throw std::invalid_argument("invalid code: " + bad.front());
}

}  // namespace

HalfInt linking_number(const GaussCode& code, const Cycle& c1, const Cycle& c2) {
  auto d1 = cycle_directions(c1), d2 = cycle_directions(c2);
  for (auto& [e, dir] : d1)
    if (d2.count(e)) throw std::invalid_argument("cycles share edge " + e);
  std::int64_t halves = 0;
  for (auto& [c, loc] : passage_locations(code)) {
    for (int flip = 0; flip < 2; ++flip) {
      const auto& p = loc[flip];
      const auto& q = loc[1 - flip];
      if (d1.count(p.edge) && d2.count(q.edge)) {
        halves += code.sign_of(c) * d1.at(p.edge) * d2.at(q.edge);
        break;
      }
    }
  }
  return HalfInt::from_halves(halves);
}

HalfInt linking_number(const GaussCode& code, const std::string& v1, const std::string& v2) {
  auto comp = component_vertices(code.graph, v1);
  if (std::find(comp.begin(), comp.end(), v2) != comp.end())
    throw std::invalid_argument(v1 + " and " + v2 + " lie in the same component");
  auto cy1 = component_as_cycle(code.graph, v1);
  auto cy2 = component_as_cycle(code.graph, v2);
  if (!cy1 || !cy2) throw std::invalid_argument("component is not a single closed curve");
  return linking_number(code, *cy1, *cy2);
}

std::vector<GaussCode> t_collection(const GaussCode& code, long long budget) {
  require_valid(code);
  const auto& g = code.graph;
  const auto& vs = g.vertices();

  std::vector<std::vector<std::array<EndRef, 2>>> choices(vs.size());
  long long total = 1;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto ends = g.incident_ends(vs[i]);
    for (std::size_t a = 0; a + 1 < ends.size(); ++a)
      for (std::size_t b = a + 1; b < ends.size(); ++b)
        choices[i].push_back({ends[a], ends[b]});
    if (choices[i].empty()) return {};
    total *= static_cast<long long>(choices[i].size());
    if (total > budget) throw BudgetError("vertex replacement count exceeds budget");
  }

  auto locs = passage_locations(code);
  std::vector<GaussCode> out;
  std::vector<std::size_t> idx(vs.size(), 0);
  while (true) {
    std::map<EndRef, EndRef> fuse;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto& pr = choices[i][idx[i]];
      fuse[pr[0]] = pr[1];
      fuse[pr[1]] = pr[0];
    }

    // Partition edges into maximal strands; keep the closed ones.
    std::map<std::string, std::pair<int, int>> place;  // edge -> (strand, direction)
    std::vector<std::vector<Cycle::Step>> strands;
    std::set<std::string> used;
    for (auto& e : g.edges()) {
      if (used.count(e.id)) continue;
      std::vector<Cycle::Step> steps;
      bool closed = false;
      Cycle::Step cur{e.id, true};
      while (true) {
        steps.push_back(cur);
        used.insert(cur.edge);
        auto it = fuse.find(EndRef{cur.edge, cur.forward});
        if (it == fuse.end()) break;
        if (it->second == EndRef{e.id, false}) {
          closed = true;
          break;
        }
        cur = {it->second.edge, !it->second.at_head};
      }
      if (closed) {
        int sid = static_cast<int>(strands.size());
        for (auto& st : steps) place[st.edge] = {sid, st.forward ? 1 : -1};
        strands.push_back(std::move(steps));
      } else {
        EndRef back{e.id, false};
        for (auto it = fuse.find(back); it != fuse.end(); it = fuse.find(back)) {
          used.insert(it->second.edge);
          back = {it->second.edge, !it->second.at_head};
        }
      }
    }

    std::set<int> alive;
    for (auto& [c, loc] : locs)
      if (place.count(loc[0].edge) && place.count(loc[1].edge)) alive.insert(c);

    GaussCode member;
    for (std::size_t s = 0; s < strands.size(); ++s) {
      std::string v = "c" + std::to_string(s);
      std::string le = "s" + std::to_string(s);
      member.graph.add_vertex(v);
      member.graph.add_edge(le, v, v);
      std::vector<Passage> ps;
      for (auto& st : strands[s]) {
        const auto& src = code.passages_on(st.edge);
        if (st.forward) {
          for (auto& p : src)
            if (alive.count(p.crossing)) ps.push_back(p);
        } else {
          for (auto rit = src.rbegin(); rit != src.rend(); ++rit)
            if (alive.count(rit->crossing)) ps.push_back(*rit);
        }
      }
      if (!ps.empty()) member.passages[le] = std::move(ps);
    }
    for (int c : alive) {
      const auto& loc = locs.at(c);
      int d = place.at(loc[0].edge).second * place.at(loc[1].edge).second;
      member.signs[c] = code.sign_of(c) * d;
    }
    out.push_back(std::move(member));

    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

TLinkProfile t_link_profile(const GaussCode& code, long long budget) {
  TLinkProfile profile;
  for (auto& m : t_collection(code, budget)) {
    std::vector<HalfInt> lks;
    const auto& cvs = m.graph.vertices();
    for (std::size_t i = 0; i < cvs.size(); ++i)
      for (std::size_t j = i + 1; j < cvs.size(); ++j)
        lks.push_back(linking_number(m, cvs[i], cvs[j]).abs());
    std::sort(lks.begin(), lks.end());
    profile.insert(std::move(lks));
  }
  return profile;
}

int odd_writhe(const GaussCode& code) {
  require_valid(code);
  auto kv = knot_view(code);
  if (!kv) throw std::invalid_argument("odd writhe needs a one-curve code");
  std::map<int, std::array<int, 2>> pos;
  std::map<int, int> seen;
  for (std::size_t i = 0; i < kv->seq.size(); ++i)
    pos[kv->seq[i].crossing][seen[kv->seq[i].crossing]++] = static_cast<int>(i);
  int total = 0;
  for (auto& [c, pq] : pos) {
    std::map<int, int> between;
    for (int i = pq[0] + 1; i < pq[1]; ++i) ++between[kv->seq[i].crossing];
    int interleaved = 0;
    for (auto& [d, k] : between)
      if (k == 1) ++interleaved;
    if (interleaved % 2) total += kv->sign.at(c);
  }
  return total;
}

GroupPresentation wirtinger(const GaussCode& code) {
  require_valid(code);
  GroupPresentation p;
  std::map<std::string, std::vector<int>> segs;
  for (auto& e : code.graph.edges()) {
    int unders = 0;
    for (auto& ps : code.passages_on(e.id))
      if (ps.role == StrandRole::under) ++unders;
    for (int i = 0; i <= unders; ++i) {
      segs[e.id].push_back(static_cast<int>(p.generators.size()));
      p.generators.push_back(e.id + "#" + std::to_string(i));
    }
  }

  auto unders_before = [&](const PassageLoc& l) {
    const auto& ps = code.passages_on(l.edge);
    int n = 0;
    for (int i = 0; i < l.index; ++i)
      if (ps[i].role == StrandRole::under) ++n;
    return n;
  };

  for (auto& [c, loc] : passage_locations(code)) {
    bool first_over =
        code.passages_on(loc[0].edge)[loc[0].index].role == StrandRole::over;
    const PassageLoc& over = first_over ? loc[0] : loc[1];
    const PassageLoc& under = first_over ? loc[1] : loc[0];
    int o = segs.at(over.edge)[unders_before(over)];
    int a = segs.at(under.edge)[unders_before(under)];
    int b = segs.at(under.edge)[unders_before(under) + 1];
    int e = code.sign_of(c);
    p.relators.push_back({{b, -1}, {o, e}, {a, 1}, {o, -e}});
  }

  auto reduce_cyclic = [](GroupPresentation::Word w) {
    GroupPresentation::Word st;
    for (auto& L : w) {
      if (!st.empty() && st.back().first == L.first && st.back().second == -L.second)
        st.pop_back();
      else
        st.push_back(L);
    }
    while (st.size() >= 2 && st.front().first == st.back().first &&
           st.front().second == -st.back().second) {
      st.pop_back();
      st.erase(st.begin());
    }
    return st;
  };

  for (auto& v : code.graph.vertices()) {
    GroupPresentation::Word w;
    auto ends =
        code.graph.has_rotations() ? code.graph.rotation(v) : code.graph.incident_ends(v);
    for (auto& end : ends) {
      if (!end.at_head) w.push_back({segs.at(end.edge).front(), 1});
      else w.push_back({segs.at(end.edge).back(), -1});
    }
    w = reduce_cyclic(std::move(w));
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  return p;
}

int abelianization_rank(const GroupPresentation& p) {
  const int n = static_cast<int>(p.generators.size());
  std::vector<std::vector<long long>> m;
  for (auto& r : p.relators) {
    std::vector<long long> row(n, 0);
    for (auto& [g, e] : r) row[g] += e;
    m.push_back(std::move(row));
  }
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  for (int col = 0; col < n && rank < rows; ++col) {
    int pr = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    for (int r = rank + 1; r < rows; ++r) {
      while (m[r][col] != 0) {
        long long q = m[rank][col] / m[r][col];
        for (int c2 = col; c2 < n; ++c2) m[rank][c2] -= q * m[r][c2];
        std::swap(m[rank], m[r]);
      }
    }
    ++rank;
  }
  return n - rank;
}

FiniteGroup cyclic_group(int n) {
  FiniteGroup g;
  g.name = "Z/" + std::to_string(n);
  g.order = n;
  g.mult.assign(n, std::vector<int>(n));
  g.inverse.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
    g.inverse[a] = (n - a) % n;
  }
  return g;
}

FiniteGroup symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  FiniteGroup g;
  g.name = "S3";
  g.order = 6;
  g.mult.assign(6, std::vector<int>(6));
  g.inverse.assign(6, 0);
  auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      g.mult[a][b] = index_of(comp);
      if (g.mult[a][b] == 0) g.inverse[a] = b;
    }
  return g;
}

long long hom_count(const GroupPresentation& p, const FiniteGroup& target, long long budget) {
  const int n = static_cast<int>(p.generators.size());
  long long space = 1;
  for (int i = 0; i < n; ++i) {
    space *= target.order;
    if (space > budget) throw BudgetError("assignment space exceeds budget");
  }

  std::vector<int> val(n, -1);
  auto mul = [&](int a, int b) { return target.mult[a][b]; };
  auto inv = [&](int a) { return target.inverse[a]; };

  std::function<long long()> rec = [&]() -> long long {
    std::vector<int> trail;
    auto undo = [&]() {
      for (int g : trail) val[g] = -1;
    };
    while (true) {
      bool progressed = false;
      for (auto& r : p.relators) {
        int unk = -1, unknown_letters = 0;
        for (auto& [g, e] : r)
          if (val[g] < 0) {
            ++unknown_letters;
            unk = g;
          }
        if (unknown_letters == 0) {
          int prod = 0;
          for (auto& [g, e] : r) prod = mul(prod, e > 0 ? val[g] : inv(val[g]));
          if (prod != 0) {
            undo();
            return 0;
          }
        } else if (unknown_letters == 1) {
          // L * unk^e * R = id, so unk^e = inv(L) * inv(R)
          int L = 0, R = 0, ue = 0;
          bool seen = false;
          for (auto& [g, e] : r) {
            if (g == unk) {
              seen = true;
              ue = e;
              continue;
            }
            int x = e > 0 ? val[g] : inv(val[g]);
            if (!seen) L = mul(L, x);
            else R = mul(R, x);
          }
          int t = mul(inv(L), inv(R));
          val[unk] = ue > 0 ? t : inv(t);
          trail.push_back(unk);
          progressed = true;
        }
      }
      if (!progressed) break;
    }
    int free_g = -1;
    for (int g = 0; g < n; ++g)
      if (val[g] < 0) {
        free_g = g;
        break;
      }
    long long total = 1;
    if (free_g >= 0) {
      total = 0;
      for (int v = 0; v < target.order; ++v) {
        val[free_g] = v;
        total += rec();
      }
      val[free_g] = -1;
    }
    undo();
    return total;
  };
  return rec();
}

}  // namespace vsg
