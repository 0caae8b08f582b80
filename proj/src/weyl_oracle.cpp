#include "rootforge/weyl_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>

namespace rootforge {

namespace {

constexpr int kFormatVersion = 1;
constexpr std::size_t kPermutationTableLimit = std::size_t{1} << 26;

std::uint64_t pack(const std::vector<RootIndex>& images) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    k |= static_cast<std::uint64_t>(images[i]) << (8 * i);
  return k;
}

RootIndex unpack(std::uint64_t key, int i) { return static_cast<RootIndex>((key >> (8 * i)) & 0xFF); }

std::filesystem::path cache_path(const RootSystem& sys) {
  const char* dir = std::getenv("ROOTFORGE_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::filesystem::path(dir) /
         ("weyl-" + sys.name() + "-v" + std::to_string(kFormatVersion) + ".bin");
}

bool load_cache(const std::filesystem::path& path, std::vector<std::uint64_t>& keys) {
  if (path.empty() || !std::filesystem::exists(path)) return false;
  std::ifstream in(path, std::ios::binary);
  const auto bytes = std::filesystem::file_size(path);
  if (bytes == 0 || bytes % sizeof(std::uint64_t) != 0) return false;
  keys.resize(bytes / sizeof(std::uint64_t));
  in.read(reinterpret_cast<char*>(keys.data()), static_cast<std::streamsize>(bytes));
  return static_cast<bool>(in) && std::is_sorted(keys.begin(), keys.end());
}

void save_cache(const std::filesystem::path& path, const std::vector<std::uint64_t>& keys) {
  if (path.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(keys.data()),
            static_cast<std::streamsize>(keys.size() * sizeof(std::uint64_t)));
}

}  // namespace

WeylGroup WeylGroup::enumerate(const RootSystem& sys, std::size_t cap) {
  if (sys.rank() > 8 || sys.size() > 256)
    throw Error(Errc::TooLarge, "oracle packs at most 8 simple images of at most 256 roots");
  WeylGroup g(sys);
  const auto path = cache_path(sys);
  if (load_cache(path, g.keys_) && g.keys_.size() <= cap) {
    g.build_permutations();
    return g;
  }
  g.keys_.clear();

  const RootSet& pi = sys.simple_basis();
  const int n = sys.rank();
  // Length parity alternates between BFS levels, so a new element can only
  // coincide with the previous level or with itself.
  std::vector<std::uint64_t> before, level{pack(pi)}, all{pack(pi)};
  std::vector<RootIndex> images(n);
  while (!level.empty()) {
    std::vector<std::uint64_t> next;
    next.reserve(level.size() * 2);
    for (std::uint64_t k : level)
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) images[i] = sys.reflect(pi[j], unpack(k, i));
        next.push_back(pack(images));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<std::uint64_t> fresh;
    std::set_difference(next.begin(), next.end(), before.begin(), before.end(),
                        std::back_inserter(fresh));
    if (all.size() + fresh.size() > cap)
      throw Error(Errc::CapExceeded, sys.name() + " Weyl group exceeds the cap of " + std::to_string(cap));
    all.insert(all.end(), fresh.begin(), fresh.end());
    before = std::move(level);
    level = std::move(fresh);
  }
  std::sort(all.begin(), all.end());
  g.keys_ = std::move(all);
  save_cache(path, g.keys_);
  g.build_permutations();
  return g;
}

void WeylGroup::build_permutations() {
  const std::size_t n = static_cast<std::size_t>(sys_.size());
  if (order() * n > kPermutationTableLimit) return;
  perms_.resize(order() * n);
  for (std::size_t w = 0; w < order(); ++w)
    for (std::size_t r = 0; r < n; ++r) perms_[w * n + r] = static_cast<std::uint8_t>(apply_slow(w, static_cast<RootIndex>(r)));
}

RootIndex WeylGroup::apply_slow(std::size_t w, RootIndex r) const {
  const auto& c = sys_.simple_coefficients(r);
  Coords sum(sys_.ambient_dim(), 0);
  for (int i = 0; i < sys_.rank(); ++i) {
    if (c[i] == 0) continue;
    const Coords& x = sys_.coords(unpack(keys_[w], i));
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += c[i] * x[k];
  }
  return sys_.index_of(sum);
}

RootIndex WeylGroup::apply(std::size_t w, RootIndex r) const {
  if (!perms_.empty()) return perms_[w * sys_.size() + r];
  return apply_slow(w, r);
}

std::vector<RootIndex> WeylGroup::permutation(std::size_t w) const {
  std::vector<RootIndex> p(sys_.size());
  for (int r = 0; r < sys_.size(); ++r) p[r] = apply(w, r);
  return p;
}

RootSet WeylGroup::image(std::size_t w, const RootSet& s) const {
  RootSet out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = apply(w, s[i]);
  return out;
}

std::size_t WeylGroup::find(const std::vector<RootIndex>& simple_images) const {
  const auto k = pack(simple_images);
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), k);
  if (it == keys_.end() || *it != k) throw Error(Errc::InvalidArgument, "not a Weyl group element");
  return static_cast<std::size_t>(it - keys_.begin());
}

std::set<RootSet> subset_orbit(const WeylGroup& w, const RootSet& s, bool projective) {
  std::set<RootSet> out;
  for (std::size_t e = 0; e < w.order(); ++e) {
    RootSet img = w.image(e, s);
    out.insert(projective ? projectivize(w.system(), img) : normalized(img));
  }
  return out;
}

Stabilizer set_stabilizer(const WeylGroup& w, const RootSet& s, bool projective) {
  const RootSystem& sys = w.system();
  auto key = [&](RootIndex r) { return projective ? sys.projective(r) : r; };
  RootSet target(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) target[i] = key(s[i]);
  std::set<Perm> induced;
  Stabilizer out;
  for (std::size_t e = 0; e < w.order(); ++e) {
    Perm p(s.size());
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i) {
      const RootIndex img = key(w.apply(e, s[i]));
      const auto it = std::find(target.begin(), target.end(), img);
      if (it == target.end()) ok = false;
      else p[i] = static_cast<int>(it - target.begin());
    }
    if (!ok) continue;
    out.elements.push_back(e);
    induced.insert(std::move(p));
  }
  out.induced.assign(induced.begin(), induced.end());
  return out;
}

}  // namespace rootforge
