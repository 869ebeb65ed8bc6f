#include "hexdn/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hexdn/errors.hpp"

namespace hexdn::lattice {

Pos position(const VertexId& v) {
  if (v.subl == 1) return {1 + 3LL * v.n1, -1 + v.n1 + 2LL * v.n2};
  return {2 + 3LL * v.n1, v.n1 + 2LL * v.n2};
}

std::int64_t ell(const VertexId& v) {
  const Pos p = position(v);
  return p.px + 3 * p.qy;
}

std::array<VertexId, 3> neighbors(const VertexId& v) {
  if (v.subl == 1) {
    // rung up, horizontal left, zigzag down-right
    return {VertexId{2, v.n1, v.n2}, VertexId{2, v.n1 - 1, v.n2},
            VertexId{2, v.n1, v.n2 - 1}};
  }
  // rung down, horizontal right, zigzag up-left
  return {VertexId{1, v.n1, v.n2}, VertexId{1, v.n1 + 1, v.n2},
          VertexId{1, v.n1, v.n2 + 1}};
}

bool adjacent(const VertexId& a, const VertexId& b) {
  for (const auto& w : neighbors(a))
    if (w == b) return true;
  return false;
}

VertexId rotate_vertex(const VertexId& v) {
  return {v.subl == 1 ? 2 : 1, -1 - v.n1, 1 - v.n2};
}

EdgeId::EdgeId(const VertexId& a, const VertexId& b) : u(a), v(b) {
  if (v < u) std::swap(u, v);
}

EdgeId rotate_edge(const EdgeId& e) {
  return EdgeId(rotate_vertex(e.u), rotate_vertex(e.v));
}

EdgeClass edge_class(const EdgeId& e) {
  // after normalization u is the sublattice-1 endpoint
  const VertexId& a = e.u;
  const VertexId& b = e.v;
  if (a.subl != 1 || b.subl != 2) throw std::logic_error("edge_class: malformed edge");
  if (b.n1 == a.n1 && b.n2 == a.n2) return EdgeClass::rung;
  if (b.n1 == a.n1 - 1 && b.n2 == a.n2) return EdgeClass::horizontal;
  if (b.n1 == a.n1 && b.n2 == a.n2 - 1) return EdgeClass::zigzag;
  throw std::logic_error("edge_class: endpoints not adjacent");
}

DomainSpec rotated_spec(const DomainSpec& d) {
  DomainSpec out = d;
  out.family = (d.family == Family::original) ? Family::rotated : Family::original;
  return out;
}

HexDomain HexDomain::build(const DomainSpec& spec) {
  if (spec.N < 1) throw ValidationError("domain: N must be >= 1");
  HexDomain d;
  d.spec_ = spec;
  d.variant_ = (spec.family == Family::rotated);
  d.box_ = d.variant_
               ? std::array<int, 2>{-spec.shift[0] - spec.N, -spec.shift[1] - spec.N}
               : spec.shift;
  const int N = spec.N;
  const int t1 = d.box_[0];
  const int t2 = d.box_[1];

  // interior vertex set: deduplicated corners of the (N+1)^2 hexagons
  for (int h1 = t1; h1 <= t1 + N; ++h1) {
    for (int h2 = t2; h2 <= t2 + N; ++h2) {
      d.interior_set_.insert({1, h1 - 1, h2 + 1});
      d.interior_set_.insert({1, h1, h2 + 1});
      d.interior_set_.insert({1, h1, h2});
      d.interior_set_.insert({2, h1, h2});
      d.interior_set_.insert({2, h1 - 1, h2 + 1});
      d.interior_set_.insert({2, h1 - 1, h2});
    }
  }
  d.interior_.assign(d.interior_set_.begin(), d.interior_set_.end());

  // pendant slots by type, as (anchor, pendant vertex), relative to the box
  using AV = std::pair<VertexId, VertexId>;
  auto alpha = [&](int m) -> AV {
    return {{2, m - 1 + t1, N + 1 + t2}, {1, m - 1 + t1, N + 2 + t2}};
  };
  auto bslot = [&](int m) -> AV {
    return {{1, m + t1, t2}, {2, m + t1, t2 - 1}};
  };
  auto rslot = [&](int m) -> AV {
    return {{2, N + t1, m + t2}, {1, N + 1 + t1, m + t2}};
  };
  auto rcorner = [&]() -> AV {
    return {{1, N + t1, N + 1 + t2}, {2, N + t1, N + 1 + t2}};
  };
  auto beta = [&](int m) -> AV {
    return {{1, t1 - 1, m + 1 + t2}, {2, t1 - 2, m + 1 + t2}};
  };
  auto lcorner = [&]() -> AV {
    return {{2, t1 - 1, t2}, {1, t1 - 1, t2}};
  };

  auto push = [&](Side s, const AV& av) {
    const int idx = static_cast<int>(d.boundary_.size());
    const int side_idx = static_cast<int>(d.sides_[static_cast<int>(s)].size());
    if (!d.interior_set_.count(av.first))
      throw std::logic_error("domain: pendant anchor not interior");
    if (d.interior_set_.count(av.second))
      throw std::logic_error("domain: pendant vertex is interior");
    d.boundary_.push_back({av.second, av.first, s, side_idx});
    d.sides_[static_cast<int>(s)].push_back(idx);
    if (!d.pendant_by_vertex_.emplace(av.second, idx).second)
      throw std::logic_error("domain: duplicate pendant vertex");
    if (!d.pendant_by_anchor_.emplace(av.first, idx).second)
      throw std::logic_error("domain: duplicate pendant anchor");
  };

  if (!d.variant_) {
    for (int m = 0; m <= N; ++m) push(Side::top, alpha(m));
    for (int m = 0; m <= N; ++m) push(Side::bottom, bslot(m));
    for (int m = 1; m <= N; ++m) push(Side::right, rslot(m));
    push(Side::right, rcorner());
    push(Side::left, lcorner());
    for (int m = 0; m <= N; ++m) push(Side::left, beta(m));
  } else {
    // point-reflected twin: side lists inherit the image order; the slot at
    // the lower-right corner is present and the top-left one is absent
    for (int m = N; m >= 0; --m) push(Side::top, alpha(m));
    for (int m = N; m >= 0; --m) push(Side::bottom, bslot(m));
    push(Side::right, rcorner());
    for (int m = N; m >= 0; --m) push(Side::right, rslot(m));
    for (int m = N - 1; m >= 0; --m) push(Side::left, beta(m));
    push(Side::left, lcorner());
  }

  // closed edge set: interior-interior plus pendant edges; every
  // interior-interior edge has exactly one sublattice-1 endpoint
  for (const auto& v : d.interior_) {
    if (v.subl != 1) continue;
    for (const auto& w : neighbors(v))
      if (d.interior_set_.count(w)) d.edge_set_.insert(EdgeId(v, w));
  }
  for (const auto& p : d.boundary_) d.edge_set_.insert(EdgeId(p.anchor, p.vertex));
  d.edges_.assign(d.edge_set_.begin(), d.edge_set_.end());
  return d;
}

bool HexDomain::in_closure(const VertexId& v) const {
  return is_interior(v) || pendant_by_vertex_.count(v) > 0;
}

const Pendant* HexDomain::pendant_at(const VertexId& pendant_vertex) const {
  auto it = pendant_by_vertex_.find(pendant_vertex);
  return it == pendant_by_vertex_.end() ? nullptr : &boundary_[it->second];
}

const Pendant* HexDomain::pendant_with_anchor(const VertexId& anchor) const {
  auto it = pendant_by_anchor_.find(anchor);
  return it == pendant_by_anchor_.end() ? nullptr : &boundary_[it->second];
}

std::vector<VertexId> HexDomain::closure_neighbors(const VertexId& v) const {
  std::vector<VertexId> out;
  if (is_interior(v)) {
    for (const auto& w : neighbors(v)) {
      if (is_interior(w)) {
        out.push_back(w);
      } else if (const Pendant* p = pendant_at(w); p && p->anchor == v) {
        out.push_back(w);
      }
    }
    return out;
  }
  if (const Pendant* p = pendant_at(v)) {
    out.push_back(p->anchor);
    return out;
  }
  throw ValidationError("closure_neighbors: vertex not in domain closure");
}

int HexDomain::degree(const VertexId& v) const {
  return static_cast<int>(closure_neighbors(v).size());
}

bool HexDomain::has_edge(const EdgeId& e) const { return edge_set_.count(e) > 0; }

std::int64_t HexDomain::line_level(int k) const {
  return 6LL * spec_.N + 4 + 6LL * k + 6LL * (box_[0] + box_[1]);
}

LineSpec HexDomain::diagonal_line(int k, Family line_family) const {
  if (k < 0 || k > spec_.N)
    throw ValidationError("diagonal_line: k must be in [0, N]");
  if (line_family == Family::rotated) {
    const HexDomain partner = HexDomain::build(rotated_spec(spec_));
    const LineSpec twin = partner.diagonal_line(k, Family::original);
    LineSpec out;
    out.k = k;
    out.family = Family::rotated;
    out.level = -twin.level;
    out.has_exit_pendant = twin.has_exit_pendant;
    out.points.reserve(twin.points.size());
    for (const auto& p : twin.points) out.points.push_back(rotate_vertex(p));
    return out;
  }
  const int N = spec_.N;
  const int t1 = box_[0];
  const int t2 = box_[1];
  LineSpec out;
  out.k = k;
  out.family = Family::original;
  out.level = line_level(k);
  const VertexId entry{1, k - 1 + t1, N + 2 + t2};
  if (!pendant_by_vertex_.count(entry))
    throw std::logic_error("diagonal_line: entry pendant missing");
  out.points.push_back(entry);
  for (int m = 1;; ++m) {
    const VertexId p{1, k - 1 + t1 + m, N + 2 + t2 - m};
    if (!is_interior(p)) break;
    out.points.push_back(p);
  }
  const VertexId exit{1, N + 1 + t1, k + t2};
  if (pendant_by_vertex_.count(exit)) {
    out.points.push_back(exit);
    out.has_exit_pendant = true;
  }
  return out;
}

StripSpec HexDomain::strip(int k) const {
  const auto [klo, khi] = strip_index_range();
  if (k < klo || k > khi)
    throw ValidationError("strip: k must be in [-(N+1), N], got " + std::to_string(k));
  const int N = spec_.N;
  const int t1 = box_[0];
  const int t2 = box_[1];
  StripSpec out;
  out.k = k;
  out.upper_level = line_level(k);

  // chain = interior line vertices (subl 1) and mid vertices (subl 2)
  // interleaved left to right
  std::vector<VertexId> chain;
  const int line_sum = N + 1 + k + t1 + t2;
  const int mid_sum = N + k + t1 + t2;
  for (const auto& v : interior_) {
    if (v.subl == 1 && v.n1 + v.n2 == line_sum) chain.push_back(v);
    if (v.subl == 2 && v.n1 + v.n2 == mid_sum) chain.push_back(v);
  }
  std::sort(chain.begin(), chain.end(), [](const VertexId& a, const VertexId& b) {
    return position(a).px < position(b).px;
  });
  if (chain.empty()) throw std::logic_error("strip: empty chain");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!adjacent(chain[i], chain[i + 1]))
      throw std::logic_error("strip: chain not contiguous");

  std::vector<VertexId> full = chain;
  {
    const VertexId f = chain.front();
    const VertexId cand = (f.subl == 1) ? VertexId{2, f.n1 - 1, f.n2}
                                        : VertexId{1, f.n1, f.n2 + 1};
    if (pendant_by_vertex_.count(cand)) {
      full.insert(full.begin(), cand);
      out.has_entry_pendant_edge = true;
    }
  }
  {
    const VertexId b = chain.back();
    const VertexId cand = (b.subl == 2) ? VertexId{1, b.n1 + 1, b.n2}
                                        : VertexId{2, b.n1, b.n2 - 1};
    if (pendant_by_vertex_.count(cand)) {
      full.push_back(cand);
      out.has_exit_pendant_edge = true;
    }
  }
  for (std::size_t i = 0; i + 1 < full.size(); ++i)
    out.edges.emplace_back(full[i], full[i + 1]);
  for (std::size_t i = 1; i + 1 < full.size(); ++i)
    out.links.push_back({full[i], full[i].subl == 1});
  return out;
}

std::vector<EdgeId> HexDomain::rung_edges() const {
  std::vector<EdgeId> out;
  for (const auto& e : edges_)
    if (edge_class(e) == EdgeClass::rung) out.push_back(e);
  return out;
}

StripSpec HexDomain::zigzag_path(const EdgeId& e1, const EdgeId& e2) const {
  const auto [klo, khi] = strip_index_range();
  for (int k = klo; k <= khi; ++k) {
    const StripSpec s = strip(k);
    const auto i1 = std::find(s.edges.begin(), s.edges.end(), e1);
    const auto i2 = std::find(s.edges.begin(), s.edges.end(), e2);
    if (i1 != s.edges.end() && i2 != s.edges.end()) {
      std::size_t a = static_cast<std::size_t>(i1 - s.edges.begin());
      std::size_t b = static_cast<std::size_t>(i2 - s.edges.begin());
      if (a > b) std::swap(a, b);
      StripSpec out;
      out.k = k;
      out.upper_level = s.upper_level;
      out.edges.assign(s.edges.begin() + a, s.edges.begin() + b + 1);
      out.links.assign(s.links.begin() + a, s.links.begin() + b);
      out.has_entry_pendant_edge = s.has_entry_pendant_edge && a == 0;
      out.has_exit_pendant_edge = s.has_exit_pendant_edge && b + 1 == s.edges.size();
      return out;
    }
    if (i1 != s.edges.end() || i2 != s.edges.end())
      throw ValidationError("zigzag_path: edges lie on different strips");
  }
  throw ValidationError("zigzag_path: edge is on no strip (rung class or outside)");
}

VertexId HexDomain::degree_two_vertex() const {
  const int N = spec_.N;
  if (!variant_) return {2, N + box_[0], box_[1]};
  return {1, box_[0] - 1, N + 1 + box_[1]};
}

HexDomain build_parallelogram(int N, std::array<int, 2> shift) {
  return HexDomain::build({N, shift, Family::original});
}

HexDomain rotate_pi(const HexDomain& d) {
  return HexDomain::build(rotated_spec(d.spec()));
}

}  // namespace hexdn::lattice
