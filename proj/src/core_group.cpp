#include "rootforge/core_group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "rootforge/moset.hpp"

namespace rootforge {

namespace {

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Perm transposition(int n, int a, int b) {
  Perm p = identity_perm(n);
  std::swap(p[a], p[b]);
  return p;
}

std::vector<Perm> symmetric_generators(int n) {
  if (n < 2) return {};
  Perm cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return {transposition(n, 0, 1), cycle};
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Orbits of k-subsets under a permutation group, each orbit sorted.
std::vector<std::vector<std::vector<int>>> subset_orbits(const std::vector<Perm>& group, int n, int k) {
  std::set<std::vector<int>> done;
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& s : subsets_of_size(n, k)) {
    if (done.count(s)) continue;
    std::set<std::vector<int>> orbit;
    for (const Perm& g : group) {
      std::vector<int> img;
      for (int x : s) img.push_back(g[x]);
      std::sort(img.begin(), img.end());
      orbit.insert(img);
    }
    done.insert(orbit.begin(), orbit.end());
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

void infeasible(const std::string& why) { throw Error(Errc::LabelingInfeasible, why); }

// Fano labels on points, given lines as 3-subsets; p0 gets 1, p1 gets 2.
std::map<int, int> fano_labels(const std::vector<int>& points, const std::vector<std::vector<int>>& lines) {
  auto third = [&](int a, int b) {
    for (const auto& l : lines)
      if (std::count(l.begin(), l.end(), a) && std::count(l.begin(), l.end(), b))
        for (int c : l)
          if (c != a && c != b) return c;
    infeasible("two points on no common line");
    return -1;
  };
  std::map<int, int> lab;  // point -> label
  std::map<int, int> at;   // label -> point
  auto set = [&](int p, int v) {
    lab[p] = v;
    at[v] = p;
  };
  set(points[0], 1);
  set(points[1], 2);
  set(third(points[0], points[1]), 3);
  for (int p : points)
    if (!lab.count(p)) {
      set(p, 4);
      break;
    }
  if (!at.count(4)) infeasible("fewer than four points");
  set(third(at[1], at[4]), 5);
  set(third(at[2], at[4]), 6);
  set(third(at[3], at[4]), 7);
  if (lab.size() != 7) infeasible("labels are not a bijection");
  for (const auto& l : lines)
    if ((lab[l[0]] ^ lab[l[1]] ^ lab[l[2]]) != 0) infeasible("a line does not sum to zero");
  return lab;
}

// Group generated by F2-linear (and for E8 affine) maps, as permutations of members.
std::vector<Perm> f2_generators(const std::vector<int>& vec, bool affine) {
  const int n = static_cast<int>(vec.size());
  std::vector<int> member_of(8, -1);
  for (int i = 0; i < n; ++i) member_of[vec[i]] = i;
  auto lift = [&](auto f) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = member_of[f(vec[i])];
    return p;
  };
  auto bitv = [](int x, int i) { return (x >> i) & 1; };
  std::vector<Perm> gens{
      lift([&](int x) { return (x & 4) | bitv(x, 0) << 1 | bitv(x, 1); }),          // swap coordinates 0,1
      lift([&](int x) { return bitv(x, 2) | bitv(x, 0) << 1 | bitv(x, 1) << 2; }),  // cycle coordinates
      lift([&](int x) { return x ^ ((x & 1) << 1); }),                              // transvection
  };
  if (affine) gens.push_back(lift([](int x) { return x ^ 7; }));
  return gens;
}

}  // namespace

std::string MosetLabeling::label(int i) const {
  switch (kind) {
    case LabelKind::Plain: return std::to_string(i + 1);
    case LabelKind::DnMatrix: return "(" + std::to_string(column[i] + 1) + "," + std::to_string(row[i]) + ")";
    case LabelKind::F2Cube: {
      std::string s;
      for (int b = 2; b >= 0; --b) s += static_cast<char>('0' + ((vec[i] >> b) & 1));
      return s;
    }
  }
  return {};
}

bool CoreGroupModel::contains(const Perm& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

int CoreGroupModel::position(const RootSystem& sys, RootIndex r) const {
  const RootIndex c = sys.projective(r);
  const auto it = std::find(moset.begin(), moset.end(), c);
  return it == moset.end() ? -1 : static_cast<int>(it - moset.begin());
}

std::vector<int> CoreGroupModel::positions(const RootSystem& sys, const RootSet& o) const {
  std::vector<int> out;
  for (RootIndex r : o) {
    const int p = position(sys, r);
    if (p < 0) throw Error(Errc::NotInMoset, "root is not a member of the moset");
    out.push_back(p);
  }
  return out;
}

int nu_table(const CartanType& t) {
  const int m = t.rank / 2;
  switch (t.series) {
    case Series::A: return static_cast<int>(factorial(mu_table(t)));
    case Series::D:
      return static_cast<int>((t.rank % 2 == 1 ? (1LL << m) : (1LL << (m - 1))) * factorial(m));
    case Series::E: return t.rank == 6 ? 24 : (t.rank == 7 ? 168 : 1344);
  }
  return 0;
}

std::vector<Perm> isometry_stabilizer(const RootSystem& sys, const RootSet& moset) {
  const int k = static_cast<int>(moset.size());
  std::vector<Coords> m;
  for (RootIndex r : moset) m.push_back(sys.coords(r));
  if (k != sys.rank() || !is_orthogonal_set(sys, moset))
    throw Error(Errc::InvalidArgument, "isometry test needs an orthogonal moset spanning the space");
  // Each simple root as a combination of moset members: (alpha|m_i)/2.
  std::vector<std::vector<std::pair<int, int>>> expansion;
  for (RootIndex a : sys.simple_basis()) {
    std::vector<std::pair<int, int>> terms;
    for (int i = 0; i < k; ++i)
      if (const int p = sys.pairing(a, moset[i]); p != 0) terms.emplace_back(i, p);
    expansion.push_back(std::move(terms));
  }
  const int dim = sys.ambient_dim();
  std::vector<Perm> out;
  Perm pi = identity_perm(k);
  Coords v(dim);
  do {
    // The negation preserves every root system, so the first sign is fixed.
    for (unsigned signs = 0; signs < (1U << (k - 1)); ++signs) {
      bool ok = true;
      for (const auto& terms : expansion) {
        std::fill(v.begin(), v.end(), 0);
        for (auto [i, p] : terms) {
          const int s = (i > 0 && ((signs >> (i - 1)) & 1U)) ? -p : p;
          const Coords& x = m[pi[i]];
          for (int d = 0; d < dim; ++d) v[d] += s * x[d];
        }
        for (int d = 0; d < dim && ok; ++d) {
          if (v[d] % 2 != 0) ok = false;
          v[d] /= 2;
        }
        if (!ok || !sys.find(v)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.push_back(pi);
        break;
      }
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

MosetLabeling derive_labeling(const RootSystem& sys, const RootSet& moset,
                              const std::vector<Perm>& group, int origin) {
  if (sys.series() != Series::E || sys.rank() < 7)
    throw Error(Errc::Unsupported, "F2 labels exist only for E7 and E8");
  const int n = static_cast<int>(moset.size());
  const bool e8 = sys.rank() == 8;
  if (n != (e8 ? 8 : 7)) throw Error(Errc::NotMoset, "wrong moset size");
  std::vector<std::vector<int>> lines;
  std::vector<int> points;
  if (!e8) {
    for (const auto& orbit : subset_orbits(group, n, 3))
      if (orbit.size() == 7) lines = orbit;
    for (int i = 0; i < n; ++i) points.push_back(i);
  } else {
    if (origin < 0) origin = n - 1;
    std::vector<std::vector<int>> planes;
    for (const auto& orbit : subset_orbits(group, n, 4))
      if (orbit.size() == 14) planes = orbit;
    for (const auto& p : planes)
      if (std::count(p.begin(), p.end(), origin)) {
        std::vector<int> l;
        for (int x : p)
          if (x != origin) l.push_back(x);
        lines.push_back(l);
      }
    for (int i = 0; i < n; ++i)
      if (i != origin) points.push_back(i);
    if (planes.size() != 14) infeasible("no orbit of 14 planes");
  }
  if (lines.size() != 7) infeasible("no orbit of 7 lines");
  const auto lab = fano_labels(points, lines);
  MosetLabeling out;
  out.kind = LabelKind::F2Cube;
  out.vec.assign(n, 0);
  for (auto [p, v] : lab) out.vec[p] = v;
  return out;
}

CoreGroupModel core_group_model(const RootSystem& sys, const RootSet& moset_in, const EnhancedBasis* phi) {
  RootSet proj;
  for (int a = 0; a < sys.size(); ++a)
    if (sys.is_canonical(a)) proj.push_back(a);
  CoreGroupModel model;
  model.type = sys.type();
  for (RootIndex r : moset_in) model.moset.push_back(sys.projective(r));
  if (!is_moset(sys, model.moset, proj) ||
      normalized(model.moset).size() != model.moset.size())
    throw Error(Errc::NotMoset, "not a maximal orthogonal set of " + sys.name());
  const int n = model.degree();

  if (sys.series() == Series::A || (sys.series() == Series::E && sys.rank() == 6)) {
    model.generators = symmetric_generators(n);
  } else if (sys.series() == Series::D) {
    auto& lab = model.labeling;
    lab.kind = LabelKind::DnMatrix;
    lab.column.assign(n, -1);
    lab.row.assign(n, 0);
    std::vector<std::vector<int>> supports;
    for (int i = 0; i < n; ++i) {
      const Coords& x = sys.coords(model.moset[i]);
      std::vector<int> support;
      int product = 1;
      for (int d = 0; d < sys.ambient_dim(); ++d)
        if (x[d] != 0) {
          support.push_back(d);
          product *= x[d] > 0 ? 1 : -1;
        }
      lab.row[i] = product > 0 ? 1 : 0;
      auto it = std::find(supports.begin(), supports.end(), support);
      if (it == supports.end()) {
        supports.push_back(support);
        it = supports.end() - 1;
      }
      lab.column[i] = static_cast<int>(it - supports.begin());
    }
    const int m = static_cast<int>(supports.size());
    if (2 * m != n) throw Error(Errc::NotMoset, "D moset members do not pair up by support");
    std::vector<std::array<int, 2>> slot(m);
    for (int i = 0; i < n; ++i) slot[lab.column[i]][lab.row[i]] = i;
    auto column_swap = [&](int a, int b) {
      Perm p = identity_perm(n);
      for (int r = 0; r < 2; ++r) std::swap(p[slot[a][r]], p[slot[b][r]]);
      return p;
    };
    auto flip = [&](int c) { return transposition(n, slot[c][0], slot[c][1]); };
    for (int c = 0; c + 1 < m; ++c) model.generators.push_back(column_swap(c, c + 1));
    if (sys.rank() % 2 == 1) {
      for (int c = 0; c < m; ++c) model.generators.push_back(flip(c));
    } else {
      for (int c = 1; c < m; ++c) model.generators.push_back(compose(flip(0), flip(c)));
    }
  } else {
    const auto group = isometry_stabilizer(sys, model.moset);
    int origin = -1;
    if (phi != nullptr && sys.rank() == 8) {
      const int node = phi->node_of("l5");
      origin = model.position(sys, phi->nodes[node]);
    }
    model.labeling = derive_labeling(sys, model.moset, group, origin);
    model.generators = f2_generators(model.labeling.vec, sys.rank() == 8);
    model.elements = closure(model.generators, n);
    if (model.elements != group)
      throw Error(Errc::LabelingInfeasible, "F2 model group differs from the isometry stabilizer");
    return model;
  }
  model.elements = closure(model.generators, n);
  return model;
}

CoreGroupModel core_group_model(const RootSystem& sys) {
  const EnhancedBasis phi = enhanced_basis(sys);
  return core_group_model(sys, phi.roots_of(phi.moset), &phi);
}

int parity(const CoreGroupModel& model, const std::vector<int>& positions) {
  if (model.labeling.kind != LabelKind::F2Cube)
    throw Error(Errc::Unsupported, "parity is defined for E7 and E8 mosets");
  int sum = 0;
  for (int p : positions) {
    if (p < 0 || p >= model.degree()) throw Error(Errc::NotInMoset, "position outside the moset");
    sum ^= model.labeling.vec[p];
  }
  return sum == 0 ? 0 : 1;
}

bool conjugate_in_moset(const CoreGroupModel& model, const std::vector<int>& o1, const std::vector<int>& o2) {
  if (o1.size() != o2.size()) return false;
  const int k = static_cast<int>(o1.size());
  switch (model.labeling.kind) {
    case LabelKind::Plain: return true;
    case LabelKind::F2Cube: {
      const bool e8 = model.degree() == 8;
      const bool parity_matters = e8 ? k == 4 : (k == 3 || k == 4);
      return !parity_matters || parity(model, o1) == parity(model, o2);
    }
    case LabelKind::DnMatrix: {
      const std::set<int> target(o2.begin(), o2.end());
      for (const Perm& g : model.elements) {
        std::set<int> img;
        for (int x : o1) img.insert(g[x]);
        if (img == target) return true;
      }
      return false;
    }
  }
  return false;
}

std::optional<Perm> extend_partial_map(const CoreGroupModel& model, const std::vector<int>& domain,
                                       const std::vector<int>& image) {
  if (domain.size() != image.size()) throw Error(Errc::InvalidArgument, "map sizes differ");
  for (const Perm& g : model.elements) {
    bool ok = true;
    for (std::size_t i = 0; i < domain.size() && ok; ++i) ok = g[domain[i]] == image[i];
    if (ok) return g;
  }
  return std::nullopt;
}

std::vector<Perm> induced_group_on_O(const CoreGroupModel& model, const std::vector<int>& o) {
  std::set<Perm> out;
  for (const Perm& g : model.elements) {
    Perm p;
    for (int x : o) {
      const auto it = std::find(o.begin(), o.end(), g[x]);
      if (it == o.end()) break;
      p.push_back(static_cast<int>(it - o.begin()));
    }
    if (p.size() == o.size()) out.insert(p);
  }
  return {out.begin(), out.end()};
}

}  // namespace rootforge
