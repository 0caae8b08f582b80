#include "rootforge/embedding.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rootforge {

namespace {

// Reflection path from x to a root satisfying goal, using reflections in scope
// orthogonal to every root of fixed.
std::optional<ReflectionWord> search(const RootSystem& sys, RootIndex x, const RootSet& fixed,
                                     const ReflectionScope& scope,
                                     const std::function<bool(RootIndex)>& goal) {
  if (goal(x)) return ReflectionWord{};
  RootSet allowed;
  for (int g = 0; g < sys.size(); ++g) {
    if (!sys.is_canonical(g) || (!scope.empty() && !scope[g])) continue;
    if (std::all_of(fixed.begin(), fixed.end(), [&](RootIndex t) { return sys.pairing(g, t) == 0; }))
      allowed.push_back(g);
  }
  std::vector<int> parent(sys.size(), -2), via(sys.size(), -1);
  parent[x] = -1;
  std::vector<RootIndex> queue{x};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const RootIndex u = queue[head];
    for (RootIndex g : allowed) {
      if (sys.pairing(u, g) == 0) continue;
      const RootIndex v = sys.reflect(g, u);
      if (parent[v] != -2) continue;
      parent[v] = u;
      via[v] = g;
      if (goal(v)) {
        ReflectionWord w;
        for (RootIndex c = v; c != x; c = parent[c]) w.reflections.push_back(via[c]);
        std::reverse(w.reflections.begin(), w.reflections.end());
        return w;
      }
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

}  // namespace

RootIndex ReflectionWord::apply(const RootSystem& sys, RootIndex r) const {
  for (RootIndex g : reflections) r = sys.reflect(g, r);
  return r;
}

RootSet ReflectionWord::apply(const RootSystem& sys, const RootSet& s) const {
  RootSet out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = apply(sys, s[i]);
  return out;
}

void ReflectionWord::then(const ReflectionWord& other) {
  reflections.insert(reflections.end(), other.reflections.begin(), other.reflections.end());
}

std::optional<ReflectionWord> realize_embedding(const RootSystem& sys, const RootSet& from,
                                                const RootSet& to, const ReflectionScope& scope) {
  const std::size_t n = from.size();
  if (to.size() != n) throw Error(Errc::NotEmbedding, "source and image sizes differ");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(sys.pairing(from[i], from[j])) != std::abs(sys.pairing(to[i], to[j])))
        throw Error(Errc::NotEmbedding, "map does not preserve |pairing|");

  // Visit each connected piece so every root after the first has an earlier neighbor.
  std::vector<int> order, parent(n, -1), piece(n, -1);
  std::vector<int> seeds;
  for (std::size_t s = 0; s < n; ++s) {
    if (piece[s] >= 0) continue;
    const int id = static_cast<int>(seeds.size());
    seeds.push_back(static_cast<int>(s));
    piece[s] = id;
    std::size_t head = order.size();
    order.push_back(static_cast<int>(s));
    for (; head < order.size(); ++head) {
      const int u = order[head];
      for (std::size_t v = 0; v < n; ++v)
        if (piece[v] < 0 && sys.pairing(from[u], from[v]) != 0 &&
            from[v] != from[u] && from[v] != sys.negate(from[u])) {
          piece[v] = id;
          parent[v] = u;
          order.push_back(static_cast<int>(v));
        }
    }
  }
  std::vector<int> size(seeds.size(), 0);
  for (std::size_t i = 0; i < n; ++i) ++size[piece[i]];
  std::vector<int> signed_pieces;
  for (std::size_t p = 0; p < seeds.size(); ++p)
    if (size[p] > 1) signed_pieces.push_back(static_cast<int>(p));

  for (unsigned signs = 0; signs < (1U << signed_pieces.size()); ++signs) {
    RootSet target(n);
    for (int i : order) {
      if (parent[i] < 0) {
        const auto it = std::find(signed_pieces.begin(), signed_pieces.end(), piece[i]);
        const bool flip = it != signed_pieces.end() && ((signs >> (it - signed_pieces.begin())) & 1U);
        target[i] = flip ? sys.negate(to[i]) : to[i];
      } else {
        const int want = sys.pairing(from[i], from[parent[i]]);
        target[i] = sys.pairing(to[i], target[parent[i]]) == want ? to[i] : sys.negate(to[i]);
      }
    }
    bool consistent = true;
    for (std::size_t i = 0; i < n && consistent; ++i)
      for (std::size_t j = 0; j < n && consistent; ++j)
        if (size[piece[i]] > 1 && piece[i] == piece[j])
          consistent = sys.pairing(target[i], target[j]) == sys.pairing(from[i], from[j]);
    if (!consistent) continue;

    ReflectionWord word;
    RootSet fixed;
    bool ok = true;
    for (int i : order) {
      const RootIndex x = word.apply(sys, from[i]);
      const RootIndex t = target[i];
      const bool projective = size[piece[i]] == 1;
      auto goal = [&](RootIndex r) { return r == t || (projective && r == sys.negate(t)); };
      const auto step = search(sys, x, fixed, scope, goal);
      if (!step) {
        ok = false;
        break;
      }
      word.then(*step);
      fixed.push_back(t);
    }
    if (ok) return word;
  }
  return std::nullopt;
}

MosetImage conjugate_into_moset(const RootSystem& sys, const RootSet& orthogonal, const RootSet& moset) {
  if (!is_orthogonal_set(sys, orthogonal)) throw Error(Errc::NotOrthogonal, "set is not orthogonal");
  MosetImage out;
  RootSet fixed;
  std::vector<char> used(sys.size(), 0);
  for (RootIndex o : orthogonal) {
    const RootIndex x = out.word.apply(sys, o);
    auto goal = [&](RootIndex r) {
      const RootIndex p = sys.projective(r);
      return !used[p] && std::find(moset.begin(), moset.end(), p) != moset.end();
    };
    const auto step = search(sys, x, fixed, {}, goal);
    if (!step) throw std::logic_error("orthogonal set does not conjugate into the moset");
    out.word.then(*step);
    const RootIndex img = sys.projective(out.word.apply(sys, o));
    used[img] = 1;
    fixed.push_back(img);
    out.image.push_back(img);
  }
  return out;
}

}  // namespace rootforge
