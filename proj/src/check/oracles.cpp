#include "serre/check/oracles.hpp"

#include <deque>
#include <stdexcept>

namespace serre::oracle {

namespace {

struct Word {
  std::vector<AffElem1> letters;
  AffElem1 omega;
};

Word greedy_word(AffElem1 x, Base base) {
  Word out;
  const std::array<AffElem1, 3> gens{generator('a', base), generator('b', base), generator('g', base)};
  while (length(x, base) > 0) {
    bool moved = false;
    for (const auto& s : gens) {
      AffElem1 y = compose(s, x);
      if (length(y, base) < length(x, base)) {
        out.letters.push_back(s);
        x = y;
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("greedy_word: no descent found");
  }
  out.omega = x;
  return out;
}

}  // namespace

std::set<AffElem1> admissible_by_subwords(const Vec3& lambda, Base base) {
  std::set<AffElem1> out;
  for (const Perm& s : all_perms()) {
    Word w = greedy_word(translation(act(s, lambda)), base);
    const std::size_t n = w.letters.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      AffElem1 y = finite(Perm::identity());
      for (std::size_t k = 0; k < n; ++k)
        if (mask & (1u << k)) y = compose(y, w.letters[k]);
      out.insert(compose(y, w.omega));
    }
  }
  return out;
}

std::set<LW> hull_of_eta_orbit() {
  // Hexagon W.eta in counterclockwise order in the (m1, m2) plane.
  const std::vector<LW> hex{{1, 1}, {-1, 2}, {-2, 1}, {-1, -1}, {1, -2}, {2, -1}};
  std::set<LW> out;
  for (Int m1 = -3; m1 <= 3; ++m1)
    for (Int m2 = -3; m2 <= 3; ++m2) {
      bool inside = true;
      for (std::size_t k = 0; k < hex.size() && inside; ++k) {
        const LW& a = hex[k];
        const LW& b = hex[(k + 1) % hex.size()];
        Int cross = (b.m1 - a.m1) * (m2 - a.m2) - (b.m2 - a.m2) * (m1 - a.m1);
        inside = cross >= 0;
      }
      if (inside) out.insert({m1, m2});
    }
  return out;
}

std::set<SigmaPair> hull_pairs() {
  const std::set<LW> vertices{{1, 1}, {-1, 2}, {-2, 1}, {-1, -1}, {1, -2}, {2, -1}};
  std::set<SigmaPair> out;
  for (const LW& w : hull_of_eta_orbit()) {
    out.insert({w, 0});
    if (!vertices.count(w)) out.insert({w, 1});
  }
  return out;
}

bool adjacent_by_rule(const GraphVertex& x, const GraphVertex& y) {
  if (x.f() != y.f()) return false;
  std::size_t changed = 0, where = 0;
  for (std::size_t j = 0; j < x.f(); ++j)
    if (x.omega[j] != y.omega[j] || x.a[j] != y.a[j]) {
      ++changed;
      where = j;
    }
  if (changed != 1 || x.a[where] == y.a[where]) return false;
  Int d1 = x.omega[where].m1 - y.omega[where].m1, d2 = x.omega[where].m2 - y.omega[where].m2;
  if (d1 == -d2 && (d1 == 0 || d1 == 1 || d1 == -1)) return true;
  return (d1 == 0 && (d2 == 1 || d2 == -1)) || (d2 == 0 && (d1 == 1 || d1 == -1));
}

namespace {

bool inside(const FWeight& center, const GraphVertex& v, Int p) {
  for (std::size_t j = 0; j < v.f(); ++j) {
    // omega + center - eta strictly inside the lowest alcove
    Vec3 x = to_z3(v.omega[j]) + center[j] - kEta;
    Int b1 = x[0] - x[1] + 1, b2 = x[1] - x[2] + 1;
    if (b1 <= 0 || b2 <= 0 || b1 + b2 >= p) return false;
  }
  return true;
}

}  // namespace

std::map<GraphVertex, int> product_bfs(const GraphVertex& source, const std::set<GraphVertex>& targets,
                                       const std::optional<FWeight>& center, Int p, int radius) {
  static const std::array<std::pair<Int, Int>, 7> steps{
      {{0, 0}, {1, -1}, {-1, 1}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
  std::map<GraphVertex, int> seen{{source, 0}};
  std::deque<GraphVertex> queue{source};
  std::size_t found = targets.count(source);
  while (!queue.empty() && found < targets.size()) {
    GraphVertex v = queue.front();
    queue.pop_front();
    const int d = seen[v];
    if (d >= radius) continue;
    for (std::size_t j = 0; j < v.f(); ++j)
      for (const auto& [d1, d2] : steps) {
        GraphVertex u = v;
        u.omega[j].m1 += d1;
        u.omega[j].m2 += d2;
        u.a[j] ^= 1;
        if (center && !inside(*center, u, p)) continue;
        if (seen.emplace(u, d + 1).second) {
          found += targets.count(u);
          queue.push_back(std::move(u));
        }
      }
  }
  std::map<GraphVertex, int> out;
  for (const auto& t : targets) {
    auto it = seen.find(t);
    if (it != seen.end()) out.emplace(t, it->second);
  }
  return out;
}

std::uint64_t closed_subsets(std::size_t n, const std::vector<DotEdge>& edges) {
  if (n > 20) throw std::invalid_argument("closed_subsets: too many vertices for exhaustive search");
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool closed = true;
    for (const auto& e : edges)
      if ((mask >> e.from & 1) && !(mask >> e.to & 1)) {
        closed = false;
        break;
      }
    count += closed;
  }
  return count;
}

}  // namespace serre::oracle
