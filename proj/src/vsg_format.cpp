#include "vsg/vsg_format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace vsg {

namespace {

bool valid_id(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-' && ch != '.')
      return false;
  return true;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

struct LineParser {
  ParseResult& res;
  int line;
  void err(const std::string& m) { res.errors.push_back({line, m}); }
};

}  // namespace

ParseResult parse_vsg(const std::string& text) {
  ParseResult res;
  VsgDocument& doc = res.doc;
  bool saw_graph = false;

  struct PendingRot {
    int line;
    std::string vertex;
    std::vector<EndRef> ends;
  };
  std::vector<PendingRot> rots;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    LineParser lp{res, lineno};
    auto hash = raw.find('#');
    std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
    auto tks = tokens(body);
    if (tks.empty()) continue;
    const std::string& kw = tks[0];

    if (kw == "graph") {
      if (saw_graph) {
        lp.err("repeated graph line");
        continue;
      }
      if (tks.size() != 2 || !valid_id(tks[1])) {
        lp.err("expected: graph <name>");
        continue;
      }
      saw_graph = true;
      doc.name = tks[1];
    } else if (kw == "vertices") {
      if (tks.size() < 2) {
        lp.err("expected: vertices <v> ...");
        continue;
      }
      for (std::size_t i = 1; i < tks.size(); ++i) {
        if (!valid_id(tks[i])) {
          lp.err("bad vertex id: " + tks[i]);
          continue;
        }
        if (doc.code.graph.has_vertex(tks[i])) lp.err("duplicate vertex: " + tks[i]);
        else doc.code.graph.add_vertex(tks[i]);
      }
    } else if (kw == "edge") {
      // edge <id>: <tail> -> <head> : <passages...>
      if (tks.size() < 6 || tks[1].empty() || tks[1].back() != ':' || tks[3] != "->" ||
          tks[5] != ":") {
        lp.err("expected: edge <id>: <tail> -> <head> : <passages>");
        continue;
      }
      std::string id = tks[1].substr(0, tks[1].size() - 1);
      const std::string& tail = tks[2];
      const std::string& head = tks[4];
      if (!valid_id(id)) {
        lp.err("bad edge id: " + id);
        continue;
      }
      if (!doc.code.graph.has_vertex(tail)) {
        lp.err("unknown tail vertex: " + tail);
        continue;
      }
      if (!doc.code.graph.has_vertex(head)) {
        lp.err("unknown head vertex: " + head);
        continue;
      }
      if (doc.code.graph.has_edge(id)) {
        lp.err("duplicate edge: " + id);
        continue;
      }
      std::vector<Passage> ps;
      bool bad = false;
      for (std::size_t i = 6; i < tks.size(); ++i) {
        const std::string& t = tks[i];
        if (t.size() < 3 || (t[0] != 'O' && t[0] != 'U') ||
            (t.back() != '+' && t.back() != '-')) {
          lp.err("bad passage token: " + t);
          bad = true;
          continue;
        }
        std::string digits = t.substr(1, t.size() - 2);
        bool numeric = !digits.empty();
        for (char ch : digits)
          if (!std::isdigit(static_cast<unsigned char>(ch))) numeric = false;
        if (!numeric) {
          lp.err("bad passage token: " + t);
          bad = true;
          continue;
        }
        int c = std::stoi(digits);
        if (c <= 0) {
          lp.err("crossing ids start at 1: " + t);
          bad = true;
          continue;
        }
        int sgn = t.back() == '+' ? 1 : -1;
        auto it = doc.code.signs.find(c);
        if (it == doc.code.signs.end()) doc.code.signs[c] = sgn;
        else if (it->second != sgn) {
          lp.err("crossing " + std::to_string(c) + " has conflicting signs");
          bad = true;
        }
        ps.push_back({c, t[0] == 'O' ? StrandRole::over : StrandRole::under});
      }
      (void)bad;
      doc.code.graph.add_edge(id, tail, head);
      if (!ps.empty()) doc.code.passages[id] = ps;
    } else if (kw == "rot") {
      if (tks.size() < 2 || tks[1].empty() || tks[1].back() != ':') {
        lp.err("expected: rot <vertex>: <ends>");
        continue;
      }
      std::string v = tks[1].substr(0, tks[1].size() - 1);
      PendingRot pr{lineno, v, {}};
      bool bad = false;
      for (std::size_t i = 2; i < tks.size(); ++i) {
        const std::string& t = tks[i];
        bool at_head;
        std::string eid;
        if (t.size() > 4 && t.substr(t.size() - 4) == ".out") {
          at_head = false;
          eid = t.substr(0, t.size() - 4);
        } else if (t.size() > 3 && t.substr(t.size() - 3) == ".in") {
          at_head = true;
          eid = t.substr(0, t.size() - 3);
        } else {
          lp.err("bad end token (want <edge>.out or <edge>.in): " + t);
          bad = true;
          continue;
        }
        pr.ends.push_back({eid, at_head});
      }
      if (!bad) rots.push_back(pr);
    } else {
      lp.err("unknown directive: " + kw);
    }
  }

  for (auto& pr : rots) {
    if (!doc.code.graph.has_vertex(pr.vertex)) {
      res.errors.push_back({pr.line, "rot for unknown vertex: " + pr.vertex});
      continue;
    }
    bool ok = true;
    for (auto& e : pr.ends)
      if (!doc.code.graph.has_edge(e.edge)) {
        res.errors.push_back({pr.line, "rot references unknown edge: " + e.edge});
        ok = false;
      }
    if (ok) doc.code.graph.set_rotation(pr.vertex, pr.ends);
  }

  for (auto& m : validate(doc.code)) res.errors.push_back({0, m});
  res.ok = res.errors.empty();
  return res;
}

namespace {

std::string passage_token(const Passage& p, int sign) {
  return std::string(p.role == StrandRole::over ? "O" : "U") + std::to_string(p.crossing) +
         (sign > 0 ? "+" : "-");
}

}  // namespace

std::string serialize_vsg(const VsgDocument& doc) {
  std::ostringstream out;
  out << "graph " << doc.name << "\n";
  const auto& g = doc.code.graph;
  if (g.vertex_count() > 0) {
    out << "vertices";
    for (auto& v : g.vertices()) out << " " << v;
    out << "\n";
  }
  for (auto& e : g.edges()) {
    out << "edge " << e.id << ": " << e.tail << " -> " << e.head << " :";
    for (auto& p : doc.code.passages_on(e.id))
      out << " " << passage_token(p, doc.code.sign_of(p.crossing));
    out << "\n";
  }
  if (g.has_rotations()) {
    for (auto& v : g.vertices()) {
      out << "rot " << v << ":";
      for (auto& end : g.rotation(v)) out << " " << end.edge << (end.at_head ? ".in" : ".out");
      out << "\n";
    }
  }
  return out.str();
}

ParseResult parse_vsg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ParseResult res;
    res.errors.push_back({0, "cannot open file: " + path});
    return res;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_vsg(ss.str());
}

}  // namespace vsg
