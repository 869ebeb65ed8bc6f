#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace hexdn::lattice {

// Vertex of the infinite hexagonal lattice, addressed by sublattice (1 or 2)
// and integer offsets. Positions are exact: x = px/2, y = qy*sqrt(3)/2 with
//   sublattice 1: px = 1 + 3*n1, qy = -1 + n1 + 2*n2
//   sublattice 2: px = 2 + 3*n1, qy =      n1 + 2*n2
struct VertexId {
  int subl;
  int n1;
  int n2;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct Pos {
  std::int64_t px;
  std::int64_t qy;
};

Pos position(const VertexId& v);

// Linear functional px + 3*qy, constant on the diagonal lines; sublattice 1
// sits on levels == 4 (mod 6), sublattice 2 on levels == 2 (mod 6).
std::int64_t ell(const VertexId& v);

// The three lattice neighbors (always on the other sublattice).
std::array<VertexId, 3> neighbors(const VertexId& v);

bool adjacent(const VertexId& a, const VertexId& b);

// Point reflection through the origin; an exact involution that swaps the
// sublattices and negates positions.
VertexId rotate_vertex(const VertexId& v);

// Undirected edge, endpoints stored in normalized order.
struct EdgeId {
  VertexId u, v;
  EdgeId(const VertexId& a, const VertexId& b);
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

EdgeId rotate_edge(const EdgeId& e);

// Orientation classes by edge direction: rung = vertical-ish (+-60 deg pair
// joining equal offsets), horizontal = +-1, zigzag = the remaining pair.
enum class EdgeClass { rung, horizontal, zigzag };

EdgeClass edge_class(const EdgeId& e);

enum class Family { original, rotated };

// Serializable domain description. family == rotated denotes the exact point
// reflection of the original-family domain with the same (N, shift).
struct DomainSpec {
  int N = 0;
  std::array<int, 2> shift{0, 0};
  Family family = Family::original;
  friend auto operator<=>(const DomainSpec&, const DomainSpec&) = default;
};

DomainSpec rotated_spec(const DomainSpec& d);

enum class Side { top, bottom, right, left };

struct Pendant {
  VertexId vertex;  // the boundary vertex (outside the interior)
  VertexId anchor;  // its unique interior neighbor
  Side side;
  int index;  // position within its side list
};

// Diagonal line: entry pendant, the interior vertices on the line, and the
// exit pendant when the line leaves through a pendant slot.
struct LineSpec {
  int k = 0;
  Family family = Family::original;
  std::int64_t level = 0;  // ell of the interior line vertices
  std::vector<VertexId> points;
  bool has_exit_pendant = false;
};

struct StripLink {
  VertexId shared;     // vertex joining two consecutive strip edges
  bool on_upper_line;  // true: shared vertex lies on the strip's upper line
};

// Zigzag chain just below diagonal line k, walked left to right. links[i]
// joins edges[i] and edges[i+1]; pendant edges at either end are included
// when the corresponding pendant exists.
struct StripSpec {
  int k = 0;
  std::int64_t upper_level = 0;
  std::vector<EdgeId> edges;
  std::vector<StripLink> links;
  bool has_entry_pendant_edge = false;
  bool has_exit_pendant_edge = false;
};

class HexDomain {
 public:
  static HexDomain build(const DomainSpec& spec);

  const DomainSpec& spec() const { return spec_; }
  int N() const { return spec_.N; }
  // Hexagon-index box origin (bottom-left); hexagons at origin + [0,N]^2.
  std::array<int, 2> box_origin() const { return box_; }
  bool corner_variant() const { return variant_; }

  const std::vector<VertexId>& interior() const { return interior_; }
  bool is_interior(const VertexId& v) const { return interior_set_.count(v) > 0; }
  bool in_closure(const VertexId& v) const;

  // Pendants in canonical order: top, bottom, right, left, each in the
  // side's own order.
  const std::vector<Pendant>& boundary() const { return boundary_; }
  const std::vector<int>& side(Side s) const { return sides_[static_cast<int>(s)]; }
  const Pendant* pendant_at(const VertexId& pendant_vertex) const;
  const Pendant* pendant_with_anchor(const VertexId& anchor) const;

  // Neighbors within the closed vertex set (interior + pendant vertices).
  std::vector<VertexId> closure_neighbors(const VertexId& v) const;
  // Degree rule: interior vertex -> neighbors within the closure; pendant
  // vertex -> interior neighbors (always 1).
  int degree(const VertexId& v) const;

  // All edges of the closed graph: interior-interior edges plus pendant
  // edges, sorted.
  const std::vector<EdgeId>& edges() const { return edges_; }
  bool has_edge(const EdgeId& e) const;

  // Level of diagonal line k's interior vertices (original line family).
  std::int64_t line_level(int k) const;
  std::pair<int, int> strip_index_range() const { return {-(spec_.N + 1), spec_.N}; }

  LineSpec diagonal_line(int k, Family line_family) const;
  StripSpec strip(int k) const;
  std::vector<EdgeId> rung_edges() const;

  // Sub-chain of the unique strip containing both edges (inclusive), with
  // its link labels. Errors if the edges are not on one strip.
  StripSpec zigzag_path(const EdgeId& e1, const EdgeId& e2) const;

  // The one interior vertex of degree 2 (unpaired pendant slot).
  VertexId degree_two_vertex() const;

 private:
  DomainSpec spec_;
  std::array<int, 2> box_{0, 0};
  bool variant_ = false;
  std::vector<VertexId> interior_;
  std::set<VertexId> interior_set_;
  std::vector<Pendant> boundary_;
  std::array<std::vector<int>, 4> sides_;
  std::map<VertexId, int> pendant_by_vertex_;
  std::map<VertexId, int> pendant_by_anchor_;
  std::vector<EdgeId> edges_;
  std::set<EdgeId> edge_set_;
};

HexDomain build_parallelogram(int N, std::array<int, 2> shift);

// Point-reflected twin plus the (global, involutive) vertex correspondence
// realized by rotate_vertex / rotate_edge.
HexDomain rotate_pi(const HexDomain& d);

}  // namespace hexdn::lattice
