#pragma once

#include <cstddef>
#include <vector>

namespace vsg {

// Rotation system on an abstract graph of nodes and arcs. Arc a has darts 2a
// and 2a+1; dart d lives at node_of[d]. Each node's rotation lists its darts
// in cyclic order. Face tracing and Euler counts decide embeddability in the
// sphere, component by component.
class RotationMap {
public:
  int add_node() {
    rotation_.emplace_back();
    return static_cast<int>(rotation_.size()) - 1;
  }
  int add_arc(int n1, int n2) {
    node_of_.push_back(n1);
    node_of_.push_back(n2);
    return static_cast<int>(node_of_.size()) / 2 - 1;
  }
  // Appends dart d to its node's rotation.
  void attach(int d) { rotation_[node_of_[d]].push_back(d); }
  void set_rotation(int node, std::vector<int> darts) { rotation_[node] = std::move(darts); }
  void clear_rotation(int node) { rotation_[node].clear(); }

  int node_count() const { return static_cast<int>(rotation_.size()); }
  int arc_count() const { return static_cast<int>(node_of_.size()) / 2; }
  int dart_count() const { return static_cast<int>(node_of_.size()); }
  int node_of(int d) const { return node_of_[d]; }
  static int mate(int d) { return d ^ 1; }
  const std::vector<int>& rotation(int node) const { return rotation_[node]; }

  // Next dart of the face orbit: cross the arc, then take the successor in
  // the rotation at the far node.
  int next_in_face(int d) const {
    int m = mate(d);
    const auto& rot = rotation_[node_of_[m]];
    for (std::size_t i = 0; i < rot.size(); ++i)
      if (rot[i] == m) return rot[(i + 1) % rot.size()];
    return -1;
  }

  std::vector<std::vector<int>> face_orbits() const {
    std::vector<std::vector<int>> faces;
    std::vector<bool> seen(dart_count(), false);
    for (int d0 = 0; d0 < dart_count(); ++d0) {
      if (seen[d0]) continue;
      std::vector<int> face;
      int d = d0;
      do {
        seen[d] = true;
        face.push_back(d);
        d = next_in_face(d);
      } while (d != d0);
      faces.push_back(std::move(face));
    }
    return faces;
  }

  // Connected component id per node (arcs connect).
  std::vector<int> node_component() const {
    std::vector<int> comp(node_count(), -1);
    int next = 0;
    for (int s = 0; s < node_count(); ++s) {
      if (comp[s] != -1) continue;
      comp[s] = next;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int n = stack.back();
        stack.pop_back();
        for (int a = 0; a < arc_count(); ++a)
          for (int side = 0; side < 2; ++side)
            if (node_of_[2 * a + side] == n) {
              int o = node_of_[2 * a + 1 - side];
              if (comp[o] == -1) {
                comp[o] = next;
                stack.push_back(o);
              }
            }
      }
      ++next;
    }
    return comp;
  }

  // Per component: does V - E + F == 2 hold with these rotations? A component
  // with no arcs counts one face.
  std::vector<bool> component_euler_ok() const {
    auto comp = node_component();
    int nc = 0;
    for (int c : comp) nc = std::max(nc, c + 1);
    std::vector<int> v(nc, 0), e(nc, 0), f(nc, 0);
    for (int n = 0; n < node_count(); ++n) v[comp[n]]++;
    for (int a = 0; a < arc_count(); ++a) e[comp[node_of_[2 * a]]]++;
    for (auto& face : face_orbits()) f[comp[node_of_[face[0]]]]++;
    std::vector<bool> ok(nc);
    for (int c = 0; c < nc; ++c) {
      if (e[c] == 0) f[c] = 1;
      ok[c] = v[c] - e[c] + f[c] == 2;
    }
    return ok;
  }

  bool genus_zero() const {
    for (bool ok : component_euler_ok())
      if (!ok) return false;
    return true;
  }

private:
  std::vector<int> node_of_;
  std::vector<std::vector<int>> rotation_;
};

}  // namespace vsg
