#include "aeropipe/clip.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace aeropipe {

namespace {

// Convex polytope as a set of planar faces, each wound counterclockwise
// seen from outside, so the divergence theorem gives the volume directly.
using Face = std::vector<Vec3>;
using Polytope = std::vector<Face>;

struct Plane {
  Vec3 normal;  // unit outward normal of the kept half-space {x : n.x <= d}
  double d;
  double signed_distance(const Vec3& p) const { return normal.dot(p) - d; }
};

Polytope tet_polytope(std::array<Vec3, 4> v) {
  // Normalize orientation so the face set below is outward.
  if (tet_volume(v[0], v[1], v[2], v[3]) < 0.0) std::swap(v[2], v[3]);
  return {
      {v[0], v[2], v[1]},
      {v[0], v[1], v[3]},
      {v[0], v[3], v[2]},
      {v[1], v[2], v[3]},
  };
}

std::array<Plane, 4> tet_planes(std::array<Vec3, 4> v) {
  if (tet_volume(v[0], v[1], v[2], v[3]) < 0.0) std::swap(v[2], v[3]);
  const std::array<std::array<int, 3>, 4> faces = {{{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}}};
  std::array<Plane, 4> planes;
  for (int f = 0; f < 4; ++f) {
    const Vec3& a = v[faces[f][0]];
    const Vec3& b = v[faces[f][1]];
    const Vec3& c = v[faces[f][2]];
    Vec3 n = (b - a).cross(c - a);
    const double len = n.norm();
    n /= len;
    planes[f] = Plane{n, n.dot(a)};
  }
  return planes;
}

// Clips one outward-wound face polygon against {n.x <= d}. Kept part is
// appended to `out`; each crossing contributes an edge point to `cut`.
void clip_face(const Face& face, const Plane& plane, double tol, Polytope& out,
               std::vector<Vec3>& cut) {
  const int n = static_cast<int>(face.size());
  Face kept;
  kept.reserve(face.size() + 2);
  for (int i = 0; i < n; ++i) {
    const Vec3& a = face[i];
    const Vec3& b = face[(i + 1) % n];
    const double da = plane.signed_distance(a);
    const double db = plane.signed_distance(b);
    const bool a_in = da <= tol;
    const bool b_in = db <= tol;
    if (a_in) kept.push_back(a);
    if (a_in != b_in) {
      const Vec3 x = a + (da / (da - db)) * (b - a);
      kept.push_back(x);
      cut.push_back(x);
    }
  }
  if (kept.size() >= 3) out.push_back(std::move(kept));
}

// Orders the cut points into a counterclockwise cap polygon around the
// plane normal (the cap's outward direction).
void add_cap_face(std::vector<Vec3>&& points, const Plane& plane, double tol, Polytope& out) {
  // Merge near-duplicates.
  std::vector<Vec3> unique;
  for (const Vec3& p : points) {
    bool dup = false;
    for (const Vec3& q : unique) {
      if ((p - q).norm() <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) unique.push_back(p);
  }
  if (unique.size() < 3) return;

  Vec3 centroid = Vec3::Zero();
  for (const Vec3& p : unique) centroid += p;
  centroid /= static_cast<double>(unique.size());

  // In-plane basis with u x v = normal.
  Vec3 u = unique[0] - centroid;
  u -= u.dot(plane.normal) * plane.normal;
  if (u.norm() <= tol) return;
  u.normalize();
  const Vec3 v = plane.normal.cross(u);

  std::vector<std::pair<double, Vec3>> angled;
  angled.reserve(unique.size());
  for (const Vec3& p : unique) {
    const Vec3 r = p - centroid;
    angled.emplace_back(std::atan2(r.dot(v), r.dot(u)), p);
  }
  std::sort(angled.begin(), angled.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  Face cap;
  cap.reserve(angled.size());
  for (const auto& [angle, p] : angled) cap.push_back(p);
  out.push_back(std::move(cap));
}

Polytope clip_polytope(const Polytope& poly, const Plane& plane, double tol) {
  Polytope out;
  out.reserve(poly.size() + 1);
  std::vector<Vec3> cut;
  for (const Face& face : poly) clip_face(face, plane, tol, out, cut);
  add_cap_face(std::move(cut), plane, tol, out);
  return out;
}

double polytope_volume(const Polytope& poly) {
  // V = (1/6) sum over outward triangles of a.(b x c). Work relative to a
  // reference point for conditioning.
  Vec3 ref = Vec3::Zero();
  int count = 0;
  for (const Face& f : poly)
    for (const Vec3& p : f) {
      ref += p;
      ++count;
    }
  if (count == 0) return 0.0;
  ref /= static_cast<double>(count);

  double six_volume = 0.0;
  for (const Face& f : poly) {
    for (std::size_t i = 1; i + 1 < f.size(); ++i) {
      const Vec3 a = f[0] - ref;
      const Vec3 b = f[i] - ref;
      const Vec3 c = f[i + 1] - ref;
      six_volume += a.dot(b.cross(c));
    }
  }
  return six_volume / 6.0;
}

} // namespace

double tet_clip_volume(const std::array<Vec3, 4>& tet_a, const std::array<Vec3, 4>& tet_b) {
  AxisBox box_a = AxisBox::around(tet_a[0]);
  for (int i = 1; i < 4; ++i) box_a.expand(tet_a[i]);
  AxisBox box_b = AxisBox::around(tet_b[0]);
  for (int i = 1; i < 4; ++i) box_b.expand(tet_b[i]);
  if (!box_a.intersects(box_b)) return 0.0;

  const double scale =
      std::max((box_a.max - box_a.min).maxCoeff(), (box_b.max - box_b.min).maxCoeff());
  const double tol = 1e-12 * std::max(scale, 1e-300);

  Polytope poly = tet_polytope(tet_a);
  for (const Plane& plane : tet_planes(tet_b)) {
    poly = clip_polytope(poly, plane, tol);
    if (poly.empty()) return 0.0;
  }
  return std::max(0.0, polytope_volume(poly));
}

} // namespace aeropipe
