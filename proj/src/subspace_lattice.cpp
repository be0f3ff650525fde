#include "hermilat/subspace_lattice.hpp"

#include "hermilat/error.hpp"
#include "hermilat/limits.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace hermilat {

namespace {

constexpr std::size_t kNoLine = std::numeric_limits<std::size_t>::max();
constexpr std::uint64_t kMaxPoints = 4096;

std::size_t lookup(const std::vector<Subspace>& sorted, const Subspace& u) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), u);
  if (it == sorted.end() || *it != u) throw Error(ErrorCode::NotALattice, "subspace missing from enumeration");
  return static_cast<std::size_t>(it - sorted.begin());
}

// Join and meet tables of an enumerated family of subspaces.
Lattice subspace_tables(const InvolutiveField& f, const std::vector<Subspace>& els, std::vector<std::size_t> prime) {
  const std::size_t m = els.size();
  if (m > Lattice::kMaxSize) throw Error(ErrorCode::SizeCap, "subspace lattice exceeds 20000 elements");
  std::vector<Lattice::Index> join(m * m), meet(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      std::size_t j, t;
      if (a == b) {
        j = t = a;
      } else if (is_subspace_of(f, els[a], els[b])) {
        j = b;
        t = a;
      } else {
        j = lookup(els, hermilat::sum(f, els[a], els[b]));
        t = lookup(els, hermilat::meet(f, els[a], els[b]));
      }
      join[a * m + b] = join[b * m + a] = static_cast<Lattice::Index>(j);
      meet[a * m + b] = meet[b * m + a] = static_cast<Lattice::Index>(t);
    }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& u : els) labels.push_back(subspace_label(u));
  return Lattice::from_tables(m, std::move(join), std::move(meet), std::move(prime), std::move(labels));
}

Subspace column_space(const InvolutiveField& f, const Matrix& a) { return Subspace::span(f, transpose(a)); }

// First nonzero coordinate scaled to 1.
Vector normalize(const InvolutiveField& f, Vector v) {
  for (auto x : v)
    if (x != kZero) return scale(f, f.inv(x), v);
  return v;
}

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::vector<std::size_t>> dedupe_lines(std::vector<std::vector<std::size_t>> lines) {
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

}  // namespace

// ----------------------------------------------------------- space lattice

std::optional<std::size_t> SpaceLattice::index_of(const Subspace& u) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), u);
  if (it == elements.end() || *it != u) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

std::string subspace_label(const Subspace& u) {
  if (u.dim() == 0) return "0";
  std::string s = "<";
  for (std::size_t i = 0; i < u.dim(); ++i) {
    s += i ? ",(" : "(";
    const auto row = u.basis().row(i);
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + std::to_string(code(row[j]));
    s += ")";
  }
  return s + ">";
}

SpaceLattice lattice_of_space(const GramSpace& space) {
  if (!space.nondegenerate()) throw Error(ErrorCode::DegenerateSpace, "the subspace lattice needs a nondegenerate form");
  if (!space.classification().orthosymmetric)
    throw Error(ErrorCode::NotOrthosymmetric, "U -> U^perp is only a Galois map for orthosymmetric forms");
  const auto& f = space.field();
  SpaceLattice out;
  out.elements = enumerate_subspaces(f, space.dim());
  std::sort(out.elements.begin(), out.elements.end());
  std::vector<std::size_t> prime(out.elements.size());
  for (std::size_t i = 0; i < out.elements.size(); ++i) prime[i] = lookup(out.elements, orthogonal(space, out.elements[i]));
  out.lattice = subspace_tables(f, out.elements, std::move(prime));
  return out;
}

// ------------------------------------------------------------ ring lattice

RingLattice lattice_of_ring(const StarRing& ring) {
  RingLattice out;
  if (const auto* mr = dynamic_cast<const MatrixRing*>(&ring)) {
    // aR <-> im a; idempotents are only needed for the involution.
    const auto& f = mr->field();
    const std::size_t n = mr->n();
    out.images = enumerate_subspaces(f, n);
    std::sort(out.images.begin(), out.images.end());
    std::vector<std::size_t> prime(out.images.size());
    for (std::size_t i = 0; i < out.images.size(); ++i) {
      Matrix a(n, n);
      const auto& u = out.images[i];
      for (std::size_t j = 0; j < u.dim(); ++j)
        for (std::size_t r = 0; r < n; ++r) a(r, j) = u.basis()(j, r);
      const RingElem e = idempotent_generator(ring, mr->from_matrix(a));
      out.idempotents.push_back(e);
      const RingElem co = ring.sub(ring.one(), ring.star(e));
      prime[i] = lookup(out.images, column_space(f, mr->to_matrix(co)));
    }
    out.lattice = subspace_tables(f, out.images, std::move(prime));
    return out;
  }

  if (!regularity_report(ring).regular) throw Error(ErrorCode::NotRegular, ring.describe() + " is not regular");
  const auto& carrier = ring.carrier();
  std::map<std::vector<std::size_t>, std::size_t> seen;  // ideal -> carrier index of its idempotent
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    const auto& e = carrier[i];
    if (ring.mul(e, e) != e) continue;
    seen.emplace(right_ideal(ring, e), i);
  }
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> ideals(seen.begin(), seen.end());
  std::stable_sort(ideals.begin(), ideals.end(),
                   [](const auto& x, const auto& y) { return x.first.size() < y.first.size(); });
  std::map<std::vector<std::size_t>, std::size_t> pos;
  for (std::size_t i = 0; i < ideals.size(); ++i) pos[ideals[i].first] = i;
  const std::size_t m = ideals.size();
  std::vector<bool> leq(m * m);
  std::vector<std::size_t> prime(m);
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) {
    const RingElem& e = carrier[ideals[a].second];
    out.idempotents.push_back(e);
    labels[a] = "e" + std::to_string(ideals[a].second) + "R";
    const RingElem co = ring.sub(ring.one(), ring.star(e));
    prime[a] = pos.at(right_ideal(ring, co));
    for (std::size_t b = 0; b < m; ++b)
      leq[a * m + b] = std::includes(ideals[b].first.begin(), ideals[b].first.end(), ideals[a].first.begin(),
                                     ideals[a].first.end());
  }
  out.lattice = Lattice::from_order(m, leq, std::move(prime), std::move(labels));
  return out;
}

LrepReport lrep_check(const GramSpace& space) {
  auto ring = MatrixRing::make(space);
  RingLattice rl = lattice_of_ring(*ring);
  SpaceLattice sl = lattice_of_space(space);
  LrepReport rep;
  const std::size_t m = rl.lattice.size();
  rep.eta.resize(m);
  bool total = true;
  for (std::size_t i = 0; i < m; ++i) {
    auto idx = sl.index_of(column_space(space.field(), ring->to_matrix(rl.idempotents[i])));
    if (!idx) {
      total = false;
      break;
    }
    rep.eta[i] = *idx;
  }
  if (m <= 1000) {
    rep.order_checked = true;
    rep.order_matches = true;
    for (std::size_t a = 0; a < m && rep.order_matches; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        const auto& ea = rl.idempotents[a];
        const bool ring_leq = ring->mul(rl.idempotents[b], ea) == ea;
        if (ring_leq != rl.lattice.leq(a, b)) {
          rep.order_matches = false;
          break;
        }
      }
  }
  rep.ring_lattice = std::move(rl.lattice);
  rep.space_lattice = std::move(sl.lattice);
  if (!total) {
    rep.check.failure = "an image is not a subspace of the enumeration";
    return rep;
  }
  rep.check = check_hom(rep.hom());
  rep.ok = rep.check.is_galois_hom && rep.check.injective && m == rep.space_lattice.size() &&
           (!rep.order_checked || rep.order_matches);
  return rep;
}

// --------------------------------------------------------------- geometry

Orthogeometry::Orthogeometry(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> lines,
                             std::vector<bool> perp)
    : labels_(std::move(labels)), lines_(std::move(lines)), perp_(std::move(perp)) {
  const std::size_t n = labels_.size();
  if (perp_.size() != n * n) throw Error(ErrorCode::LengthMismatch, "perp relation size");
  line_of_.assign(n * n, kNoLine);
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    lines_[l] = sorted_unique(lines_[l]);
    for (auto p : lines_[l]) {
      if (p >= n) throw Error(ErrorCode::LengthMismatch, "line point out of range");
      for (auto q : lines_[l])
        if (p != q) line_of_[p * n + q] = l;
    }
  }
}

bool Orthogeometry::collinear(std::size_t p, std::size_t q, std::size_t r) const {
  if (p == q || p == r || q == r) return false;
  const std::size_t l = line_index(p, q);
  return l != kNoLine && std::binary_search(lines_[l].begin(), lines_[l].end(), r);
}

bool Orthogeometry::weakly_collinear(std::size_t p, std::size_t q, std::size_t r) const {
  return p == q || p == r || q == r || collinear(p, q, r);
}

std::vector<std::array<std::size_t, 3>> Orthogeometry::collinear_triples() const {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      for (std::size_t k = j + 1; k < size(); ++k)
        if (collinear(i, j, k)) out.push_back({i, j, k});
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Orthogeometry::perp_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i; j < size(); ++j)
      if (perp(i, j)) out.emplace_back(i, j);
  return out;
}

SpaceGeometry geometry_of_space(const GramSpace& space) {
  const auto& f = space.field();
  const std::size_t n = space.dim();
  const std::uint64_t q = f.order();
  const std::uint64_t vectors = saturating_pow(q, n);
  if (!within_cap(n == 0 ? 0 : (vectors - 1) / (q - 1), kMaxPoints, "projective points"))
    throw Error(ErrorCode::EnumerationCap, "more than 4096 projective points");

  std::vector<Vector> reps;
  for (std::uint64_t i = 1; i < vectors; ++i) {
    Vector v = vector_from_index(f, i, n);
    if (normalize(f, v) == v) reps.push_back(std::move(v));
  }
  std::sort(reps.begin(), reps.end());
  std::map<Vector, std::size_t> index;
  for (std::size_t i = 0; i < reps.size(); ++i) index[reps[i]] = i;
  const std::size_t np = reps.size();

  std::vector<std::vector<std::size_t>> lines;
  std::vector<bool> covered(np * np, false);
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = a + 1; b < np; ++b) {
      if (covered[a * np + b]) continue;
      std::vector<std::size_t> line{a};
      for (std::uint32_t c = 0; c < q; ++c)
        line.push_back(index.at(normalize(f, add(f, scale(f, elem(c), reps[a]), reps[b]))));
      line = sorted_unique(line);
      for (auto x : line)
        for (auto y : line) covered[x * np + y] = true;
      lines.push_back(std::move(line));
    }
  std::vector<bool> perp(np * np);
  std::vector<std::string> labels;
  SpaceGeometry out{Orthogeometry({}, {}, {}), {}};
  for (std::size_t a = 0; a < np; ++a) {
    out.points.push_back(Subspace::span(f, std::vector<Vector>{reps[a]}, n));
    labels.push_back(subspace_label(out.points.back()));
    for (std::size_t b = 0; b < np; ++b) perp[a * np + b] = inner(space, reps[a], reps[b]) == kZero;
  }
  out.geometry = Orthogeometry(std::move(labels), dedupe_lines(std::move(lines)), std::move(perp));
  return out;
}

LatticeGeometry geometry_of_lattice(const Lattice& l) {
  if (!is_atomic(l)) throw Error(ErrorCode::NotAtomic, "some nonzero element has no atom below it");
  const auto atoms = l.atoms();
  const std::size_t np = atoms.size();
  if (!within_cap(np, kMaxPoints, "lattice atoms")) throw Error(ErrorCode::EnumerationCap, "more than 4096 atoms");
  std::vector<std::vector<std::size_t>> lines;
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = a + 1; b < np; ++b) {
      const std::size_t top = l.join(atoms[a], atoms[b]);
      std::vector<std::size_t> line;
      for (std::size_t c = 0; c < np; ++c)
        if (l.leq(atoms[c], top)) line.push_back(c);
      lines.push_back(std::move(line));
    }
  std::vector<bool> perp(np * np);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < np; ++a) {
    labels.push_back(l.label(atoms[a]));
    for (std::size_t b = 0; b < np; ++b) perp[a * np + b] = l.leq(atoms[a], l.prime(atoms[b]));
  }
  return {Orthogeometry(std::move(labels), dedupe_lines(std::move(lines)), std::move(perp)), atoms};
}

GeometryReport geometry_axiom_check(const Orthogeometry& g) {
  GeometryReport rep;
  const std::size_t n = g.size();
  auto fail = [&](const char* axiom, std::vector<std::size_t> w) {
    for (const auto& v : rep.violations)
      if (v.axiom == axiom) return;
    rep.ok = false;
    rep.violations.push_back({axiom, std::move(w)});
  };
  auto has = [&](const char* axiom) {
    for (const auto& v : rep.violations)
      if (v.axiom == axiom) return true;
    return false;
  };

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q || g.line_index(p, q) == kNoLine) continue;
      for (auto r : g.line(p, q)) {
        if (r == p || r == q) continue;
        if (!(g.collinear(q, p, r) && g.collinear(p, r, q) && g.collinear(r, p, q) && g.collinear(q, r, p) &&
              g.collinear(r, q, p)))
          fail("projective-i", {p, q, r});
      }
    }

  for (const auto& line : g.lines()) {
    if (line.size() < 2) continue;
    // Every point pair of the line spans the same line.
    for (auto p : line)
      for (auto q : line) {
        if (p == q) continue;
        for (auto a : line)
          for (auto b : line)
            if (a != b && a != p && a != q && b != p && b != q && !g.collinear(p, a, b) && a != b)
              fail("projective-ii", {p, q, a, b});
      }
  }

  for (std::size_t p = 0; p < n && !has("projective-iii"); ++p) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (a, b) with collinear(p, a, b)
    for (const auto& line : g.lines())
      if (std::binary_search(line.begin(), line.end(), p))
        for (auto a : line)
          for (auto b : line)
            if (a != b && a != p && b != p) pairs.emplace_back(a, b);
    for (const auto& [a, b] : pairs) {
      for (const auto& [c, d] : pairs) {
        bool found = false;
        for (std::size_t q = 0; q < n && !found; ++q) found = g.weakly_collinear(q, a, c) && g.weakly_collinear(q, b, d);
        if (!found) {
          fail("projective-iii", {p, a, b, c, d});
          break;
        }
      }
      if (has("projective-iii")) break;
    }
  }

  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (g.perp(p, q) != g.perp(q, p)) fail("perp-symmetric", {p, q});

  for (std::size_t p = 0; p < n; ++p) {
    for (const auto& line : g.lines()) {
      std::vector<std::size_t> in, out;
      for (auto x : line) (g.perp(p, x) ? in : out).push_back(x);
      if (in.size() >= 2 && !out.empty()) fail("ortho-a", {p, in[0], in[1], out[0]});
    }
    bool some = false;
    for (std::size_t q = 0; q < n && !some; ++q) some = !g.perp(p, q);
    if (!some) fail("ortho-b", {p});
  }

  for (const auto& line : g.lines()) {
    if (line.size() < 2) continue;
    for (std::size_t r = 0; r < n; ++r) {
      bool some = false;
      for (auto t : line)
        if (g.perp(r, t)) {
          some = true;
          break;
        }
      if (!some) fail("polarity-ii", {line[0], line[1], r});
    }
  }
  return rep;
}

GeometryLattice lattice_of_geometry(const Orthogeometry& g) {
  const std::size_t n = g.size();
  using Set = std::vector<bool>;
  // span(X, p) for a subspace X: p together with the lines from p to X.
  auto extend = [&](Set x, std::size_t p) {
    std::vector<std::size_t> base;
    for (std::size_t i = 0; i < n; ++i)
      if (x[i]) base.push_back(i);
    x[p] = true;
    for (auto b : base)
      if (b != p && g.line_index(p, b) != kNoLine)
        for (auto t : g.line(p, b)) x[t] = true;
    return x;
  };
  std::set<Set> found{Set(n, false)};
  std::vector<Set> work{Set(n, false)};
  while (!work.empty()) {
    Set x = std::move(work.back());
    work.pop_back();
    for (std::size_t p = 0; p < n; ++p) {
      if (x[p]) continue;
      Set y = extend(x, p);
      if (found.insert(y).second) {
        if (!within_cap(found.size(), kMaxSubspaces, "geometry subspaces"))
          throw Error(ErrorCode::EnumerationCap, "more than 20000 geometry subspaces");
        work.push_back(std::move(y));
      }
    }
  }
  GeometryLattice out;
  for (const auto& s : found) {
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < n; ++i)
      if (s[i]) pts.push_back(i);
    out.members.push_back(std::move(pts));
  }
  std::sort(out.members.begin(), out.members.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  const std::size_t m = out.members.size();
  if (m > Lattice::kMaxSize) throw Error(ErrorCode::SizeCap, "geometry lattice exceeds 20000 elements");
  std::map<std::vector<std::size_t>, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) pos[out.members[i]] = i;
  auto to_set = [&](const std::vector<std::size_t>& pts) {
    Set s(n, false);
    for (auto p : pts) s[p] = true;
    return s;
  };
  auto to_list = [&](const Set& s) {
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < n; ++i)
      if (s[i]) pts.push_back(i);
    return pts;
  };
  auto at = [&](const std::vector<std::size_t>& pts, const char* what) {
    auto it = pos.find(pts);
    if (it == pos.end()) throw Error(ErrorCode::NotALattice, std::string(what) + " of subspaces is not a subspace");
    return it->second;
  };

  std::vector<Lattice::Index> join(m * m), meet(m * m);
  std::vector<std::size_t> prime(m);
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) {
    labels[a] = "{";
    for (std::size_t i = 0; i < out.members[a].size(); ++i)
      labels[a] += (i ? "," : "") + std::to_string(out.members[a][i]);
    labels[a] += "}";
    Set orth(n, true);
    for (auto p : out.members[a])
      for (std::size_t q = 0; q < n; ++q)
        if (!g.perp(q, p)) orth[q] = false;
    prime[a] = at(to_list(orth), "orthogonal");
    const Set sa = to_set(out.members[a]);
    for (std::size_t b = a; b < m; ++b) {
      Set both(n, false), s = to_set(out.members[b]);
      for (std::size_t i = 0; i < n; ++i) both[i] = sa[i] && s[i];
      for (auto p : out.members[a])
        if (!s[p]) s = extend(std::move(s), p);
      const std::size_t j = at(to_list(s), "join");
      const std::size_t t = at(to_list(both), "intersection");
      join[a * m + b] = join[b * m + a] = static_cast<Lattice::Index>(j);
      meet[a * m + b] = meet[b * m + a] = static_cast<Lattice::Index>(t);
    }
  }
  out.lattice = Lattice::from_tables(m, std::move(join), std::move(meet), std::move(prime), std::move(labels));
  return out;
}

namespace {

RoundTripReport finish_round_trip(const Lattice& source, const GeometryLattice& target,
                                  const std::vector<std::vector<std::size_t>>& images, bool need_bijection) {
  RoundTripReport rep;
  rep.lattice_size = source.size();
  rep.geometry_lattice_size = target.lattice.size();
  std::map<std::vector<std::size_t>, std::size_t> pos;
  for (std::size_t i = 0; i < target.members.size(); ++i) pos[target.members[i]] = i;
  for (const auto& img : images) {
    auto it = pos.find(img);
    if (it == pos.end()) {
      rep.check.failure = "an image is not a subspace of the geometry";
      return rep;
    }
    rep.map.push_back(it->second);
  }
  rep.check = check_hom({&source, &target.lattice, rep.map});
  rep.ok = rep.check.is_galois_hom && rep.check.injective && (!need_bijection || rep.lattice_size == rep.geometry_lattice_size);
  return rep;
}

}  // namespace

RoundTripReport arg2_roundtrip(const GramSpace& space) {
  SpaceLattice sl = lattice_of_space(space);
  LatticeGeometry lg = geometry_of_lattice(sl.lattice);
  GeometryLattice gl = lattice_of_geometry(lg.geometry);
  std::vector<std::vector<std::size_t>> images;
  for (std::size_t a = 0; a < sl.lattice.size(); ++a) {
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < lg.atoms.size(); ++i)
      if (sl.lattice.leq(lg.atoms[i], a)) pts.push_back(i);
    images.push_back(std::move(pts));
  }
  return finish_round_trip(sl.lattice, gl, images, true);
}

RoundTripReport ogrep_check(const GramSpace& space) {
  SpaceLattice sl = lattice_of_space(space);
  SpaceGeometry sg = geometry_of_space(space);
  GeometryLattice gl = lattice_of_geometry(sg.geometry);
  const auto& f = space.field();
  std::vector<std::vector<std::size_t>> images;
  for (const auto& u : sl.elements) {
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < sg.points.size(); ++i)
      if (is_subspace_of(f, sg.points[i], u)) pts.push_back(i);
    images.push_back(std::move(pts));
  }
  return finish_round_trip(sl.lattice, gl, images, false);
}

// ----------------------------------------------------- polarity subalgebras

PolaritySearchReport polarity_subalgebra_search(const Lattice& l, std::uint64_t budget) {
  PolaritySearchReport rep;
  rep.budget = budget;
  const std::size_t m = l.size();
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> gens;

  // Returns false to stop.
  auto visit = [&]() {
    if (rep.tried >= budget) return false;
    ++rep.tried;
    Sublattice s = galois_closure(l, gens);
    if (!seen.insert(s.embedding).second) return true;
    ++rep.distinct;
    if (!check_law(s.lattice, Law::Complemented).pass) return true;
    ++rep.complemented;
    if (!check_law(s.lattice, Law::Polarity).pass) {
      rep.generators = gens;
      rep.subalgebra = s.embedding;
      return false;
    }
    return true;
  };

  bool go = visit();
  for (std::size_t a = 0; a < m && go; ++a) {
    gens = {a};
    go = visit();
  }
  for (std::size_t a = 0; a < m && go; ++a)
    for (std::size_t b = a + 1; b < m && go; ++b) {
      gens = {a, b};
      go = visit();
    }
  for (std::size_t a = 0; a < m && go; ++a)
    for (std::size_t b = a + 1; b < m && go; ++b)
      for (std::size_t c = b + 1; c < m && go; ++c) {
        gens = {a, b, c};
        go = visit();
      }
  rep.exhausted = go;
  return rep;
}

PolaritySearchReport polarity_subalgebra_search(const GramSpace& space, std::uint64_t budget) {
  return polarity_subalgebra_search(lattice_of_space(space).lattice, budget);
}

}  // namespace hermilat
