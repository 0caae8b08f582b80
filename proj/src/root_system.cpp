#include "rootforge/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "linalg.hpp"
#include "rootforge/diagram.hpp"

namespace rootforge {

std::string CartanType::name() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

CartanType CartanType::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2) throw Error(Errc::UnsupportedType, "cannot parse type '" + text + "'");
  const char s = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
  if (s != 'A' && s != 'D' && s != 'E')
    throw Error(Errc::UnsupportedType, "unknown series in '" + text + "'");
  const std::string digits = t.substr(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    throw Error(Errc::UnsupportedType, "bad rank in '" + text + "'");
  return {static_cast<Series>(s), std::stoi(digits)};
}

std::size_t CoordsHash::operator()(const Coords& c) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : c) h = (h ^ static_cast<std::size_t>(x + 7)) * 1099511628211ULL;
  return h;
}

int dot_doubled(const Coords& a, const Coords& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Coords add(const Coords& a, const Coords& b) {
  Coords c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Coords sub(const Coords& a, const Coords& b) {
  Coords c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Coords scale(const Coords& a, int k) {
  Coords c(a);
  for (int& x : c) x *= k;
  return c;
}

namespace {

std::vector<Coords> e8_roots() {
  std::vector<Coords> out;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {2, -2})
        for (int sj : {2, -2}) {
          Coords v(8, 0);
          v[i] = si;
          v[j] = sj;
          out.push_back(v);
        }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    Coords v(8);
    for (int i = 0; i < 8; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coords> orthogonal_to(const std::vector<Coords>& roots, const std::vector<Coords>& x) {
  std::vector<Coords> out;
  for (const auto& r : roots)
    if (std::all_of(x.begin(), x.end(), [&](const Coords& v) { return dot_doubled(r, v) == 0; }))
      out.push_back(r);
  return out;
}

}  // namespace

RootSystem RootSystem::build(Series series, int rank) {
  RootSystem sys;
  sys.series_ = series;
  sys.rank_ = rank;
  switch (series) {
    case Series::A: {
      if (rank < 1) throw Error(Errc::UnsupportedType, "A_n needs n >= 1");
      sys.dim_ = rank + 1;
      for (int i = 0; i < sys.dim_; ++i)
        for (int j = 0; j < sys.dim_; ++j) {
          if (i == j) continue;
          Coords v(sys.dim_, 0);
          v[i] = 2;
          v[j] = -2;
          sys.roots_.push_back(v);
        }
      break;
    }
    case Series::D: {
      if (rank < 4) throw Error(Errc::UnsupportedType, "D_n needs n >= 4 (D3 is A3)");
      sys.dim_ = rank;
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
          for (int si : {2, -2})
            for (int sj : {2, -2}) {
              Coords v(rank, 0);
              v[i] = si;
              v[j] = sj;
              sys.roots_.push_back(v);
            }
      break;
    }
    case Series::E: {
      if (rank < 6 || rank > 8) throw Error(Errc::UnsupportedType, "E_n needs n in {6,7,8}");
      sys.dim_ = 8;
      const auto e8 = e8_roots();
      if (rank == 8) {
        sys.roots_ = e8;
      } else if (rank == 7) {
        sys.roots_ = orthogonal_to(e8, {e8.front()});
      } else {
        const Coords& a = e8.front();
        const auto b = std::find_if(e8.begin(), e8.end(),
                                    [&](const Coords& r) { return dot_doubled(a, r) == -4; });
        sys.roots_ = orthogonal_to(e8, {a, *b});
      }
      break;
    }
    default:
      throw Error(Errc::UnsupportedType, "unknown series");
  }
  std::sort(sys.roots_.begin(), sys.roots_.end());
  sys.finish();
  return sys;
}

void RootSystem::finish() {
  const int n = size();
  for (int i = 0; i < n; ++i) index_.emplace(roots_[i], i);
  negation_.resize(n);
  for (int i = 0; i < n; ++i) negation_[i] = index_of(scale(roots_[i], -1));
  pairing_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pairing_[i * n + j] = static_cast<std::int8_t>(dot_doubled(roots_[i], roots_[j]) / 4);
  reflection_.resize(static_cast<std::size_t>(n) * n);
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      const int p = pairing(a, b);
      reflection_[b * n + a] = p == 0 ? a : index_of(sub(roots_[a], scale(roots_[b], p)));
    }

  // Simple roots: positive roots that are not a sum of two positive roots.
  std::vector<char> positive(n);
  for (int i = 0; i < n; ++i) positive[i] = is_canonical(i);
  RootSet simple;
  for (int a = 0; a < n; ++a) {
    if (!positive[a]) continue;
    bool decomposable = false;
    for (int b = 0; b < n && !decomposable; ++b) {
      if (!positive[b] || b == a) continue;
      auto c = find(sub(roots_[a], roots_[b]));
      decomposable = c && positive[*c];
    }
    if (!decomposable) simple.push_back(a);
  }
  if (static_cast<int>(simple.size()) != rank_)
    throw Error(Errc::UnsupportedType, "simple basis has wrong size");

  // Order the basis to match the standard labeled Dynkin shape.
  const Diagram d = gamma_diagram(*this, simple);
  const Graph tmpl = dynkin_template({series_, rank_, false});
  // For D_n the two fork leaves 1 and n must share their coordinate support (this only
  // constrains D4, where the template has extra symmetry).
  auto same_support = [&](RootIndex a, RootIndex b) {
    for (int k = 0; k < dim_; ++k)
      if ((roots_[a][k] == 0) != (roots_[b][k] == 0)) return false;
    return true;
  };
  std::optional<std::vector<int>> iso;
  for_each_isomorphism(tmpl, d.graph, {}, {}, [&](const std::vector<int>& m) {
    if (series_ == Series::D && !same_support(simple[m[0]], simple[m[rank_ - 1]])) return true;
    iso = m;
    return false;
  });
  if (!iso) throw Error(Errc::UnsupportedType, "basis diagram does not match template");
  simple_.resize(rank_);
  for (int i = 0; i < rank_; ++i) simple_[i] = simple[(*iso)[i]];

  std::vector<Coords> basis;
  for (RootIndex s : simple_) basis.push_back(roots_[s]);
  coeffs_.resize(n);
  for (int i = 0; i < n; ++i) {
    const auto c = detail::solve(basis, roots_[i]);
    if (!c) throw Error(Errc::UnsupportedType, "root outside span of basis");
    auto& out = coeffs_[i];
    for (const auto& q : *c) {
      if (q.denominator() != 1) throw Error(Errc::UnsupportedType, "non-integral root coefficient");
      out.push_back(static_cast<int>(q.numerator()));
    }
  }
}

std::optional<RootIndex> RootSystem::find(const Coords& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RootIndex RootSystem::index_of(const Coords& c) const {
  auto r = find(c);
  if (!r) throw Error(Errc::InvalidArgument, "vector is not a root");
  return *r;
}

bool RootSystem::is_canonical(RootIndex a) const {
  for (int x : roots_[a])
    if (x != 0) return x > 0;
  return false;
}

RootSet normalized(RootSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

RootSet symmetrize(const RootSystem& sys, const RootSet& s) {
  RootSet out(s);
  for (RootIndex a : s) out.push_back(sys.negate(a));
  return normalized(std::move(out));
}

RootSet projectivize(const RootSystem& sys, const RootSet& s) {
  RootSet out;
  for (RootIndex a : s) out.push_back(sys.projective(a));
  return normalized(std::move(out));
}

bool is_symmetric(const RootSystem& sys, const RootSet& s) {
  std::set<RootIndex> in(s.begin(), s.end());
  return std::all_of(s.begin(), s.end(), [&](RootIndex a) { return in.count(sys.negate(a)) > 0; });
}

bool is_linearly_independent(const RootSystem& sys, const RootSet& s) {
  std::vector<Coords> rows;
  for (RootIndex a : s) rows.push_back(sys.coords(a));
  return detail::rank(rows) == static_cast<int>(s.size());
}

bool is_pi_system(const RootSystem& sys, const RootSet& s) {
  if (normalized(s).size() != s.size()) return false;
  if (!is_linearly_independent(sys, s)) return false;
  for (RootIndex a : s)
    for (RootIndex b : s)
      if (a != b && sys.find(sub(sys.coords(a), sys.coords(b)))) return false;
  return true;
}

bool is_orthogonal_set(const RootSystem& sys, const RootSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (sys.pairing(s[i], s[j]) != 0) return false;
  return true;
}

RootSet subsystem_generated(const RootSystem& sys, const RootSet& s) {
  if (s.empty()) return {};
  std::vector<Coords> gens;
  for (RootIndex a : s) gens.push_back(sys.coords(a));
  const detail::Lattice lattice(gens);
  RootSet out;
  for (int r = 0; r < sys.size(); ++r)
    if (lattice.contains(sys.coords(r))) out.push_back(r);
  return out;
}

RootSet orthogonal_complement(const RootSystem& sys, const RootSet& x, const RootSet& scope) {
  RootSet out;
  for (RootIndex r : scope)
    if (std::all_of(x.begin(), x.end(), [&](RootIndex a) { return sys.pairing(r, a) == 0; }))
      out.push_back(r);
  return out;
}

RootSet orthogonal_complement(const RootSystem& sys, const RootSet& x) {
  RootSet all(sys.size());
  for (int i = 0; i < sys.size(); ++i) all[i] = i;
  return orthogonal_complement(sys, x, all);
}

std::vector<RootSet> subsystem_components(const RootSystem& sys, const RootSet& subsystem) {
  const std::size_t n = subsystem.size();
  std::vector<int> comp(n, -1);
  std::vector<RootSet> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      out[id].push_back(subsystem[i]);
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && sys.pairing(subsystem[i], subsystem[j]) != 0) {
          comp[j] = id;
          stack.push_back(j);
        }
    }
    out[id] = normalized(std::move(out[id]));
  }
  return out;
}

RootSet subsystem_basis(const RootSystem& sys, const RootSet& subsystem) {
  std::vector<char> in(sys.size(), 0);
  for (RootIndex a : subsystem) in[a] = 1;
  RootSet out;
  for (RootIndex a : subsystem) {
    if (!sys.is_canonical(a)) continue;
    bool decomposable = false;
    for (RootIndex b : subsystem) {
      if (b == a || !sys.is_canonical(b)) continue;
      auto c = sys.find(sub(sys.coords(a), sys.coords(b)));
      if (c && in[*c] && sys.is_canonical(*c)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(a);
  }
  return out;
}

std::optional<std::vector<long long>> integer_coefficients(const RootSystem& sys,
                                                           const RootSet& s, RootIndex b) {
  std::vector<Coords> basis;
  for (RootIndex a : s) basis.push_back(sys.coords(a));
  const auto c = detail::solve(basis, sys.coords(b));
  if (!c) return std::nullopt;
  std::vector<long long> out;
  for (const auto& q : *c) {
    if (q.denominator() != 1) return std::nullopt;
    out.push_back(q.numerator());
  }
  return out;
}

RootSet extended_pi_system(const RootSystem& sys, const RootSet& pi) {
  if (!is_pi_system(sys, pi)) throw Error(Errc::NotPiSystem, "extended_pi_system");
  if (pi.empty() || gamma_diagram(sys, pi).graph.components(bit(static_cast<int>(pi.size())) - 1).size() != 1)
    throw Error(Errc::NotIrreducible, "extended_pi_system");
  const RootSet generated = subsystem_generated(sys, pi);
  RootIndex best = -1;
  long long best_height = 0;
  for (RootIndex r : generated) {
    const auto c = integer_coefficients(sys, pi, r);
    if (!c) continue;
    if (std::any_of(c->begin(), c->end(), [](long long x) { return x > 0; })) continue;
    long long h = 0;
    for (long long x : *c) h += x;
    if (best < 0 || h < best_height) {
      best = r;
      best_height = h;
    }
  }
  RootSet out(pi);
  out.push_back(best);
  return out;
}

std::vector<ElementaryTransformation> elementary_transformations(const RootSystem& sys,
                                                                 const RootSet& pi) {
  if (!is_pi_system(sys, pi)) throw Error(Errc::NotPiSystem, "elementary_transformations");
  const Diagram d = gamma_diagram(sys, pi);
  const TypeLabel own = classify_components(d.graph);
  std::vector<ElementaryTransformation> out;
  for (NodeMask comp : d.graph.components(d.graph.all())) {
    RootSet inside, outside;
    for (std::size_t i = 0; i < pi.size(); ++i) (comp >> i & 1 ? inside : outside).push_back(pi[i]);
    const RootSet ext = extended_pi_system(sys, inside);
    for (RootIndex drop : ext) {
      RootSet next(outside);
      for (RootIndex a : ext)
        if (a != drop) next.push_back(a);
      if (!is_pi_system(sys, next))
        throw Error(Errc::NotPiSystem, "elementary transformation produced a non-Pi-system");
      const TypeLabel t = classify_components(gamma_diagram(sys, next).graph);
      out.push_back({next, t == own});
    }
  }
  return out;
}

RootSet theta_component(const RootSystem& sys, const RootSet& orthogonal) {
  if (!is_orthogonal_set(sys, orthogonal)) throw Error(Errc::NotOrthogonal, "theta_component");
  const RootSet psi = orthogonal_complement(sys, orthogonal);
  RootSet found;
  for (const RootSet& c : subsystem_components(sys, psi)) {
    if (c.size() <= 2) continue;
    if (!found.empty())
      throw Error(Errc::NotIrreducibleParent, "complement has two components of rank > 1");
    found = c;
  }
  return found;
}

}  // namespace rootforge
