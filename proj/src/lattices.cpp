#include "serre/lattices.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace serre {

namespace {

std::size_t find_weight(const std::vector<LabeledWeight>& ws, const SerreWeightNF& sigma) {
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (ws[i].weight == sigma) return i;
  throw std::invalid_argument("weight " + to_string(sigma) + " is not a constituent of the type");
}

// Per-embedding distances are reused heavily across pairs of constituents.
class DistanceCache {
 public:
  DistanceCache(const FWeight& center, Int p) : center_(center), p_(p) {}

  int operator()(const GraphVertex& x, const GraphVertex& y) {
    int total = 0;
    for (std::size_t j = 0; j < x.f(); ++j) {
      Key k{j, x.omega[j], x.a[j], y.omega[j], y.a[j]};
      auto it = memo_.find(k);
      if (it == memo_.end())
        it = memo_.emplace(k, embedding_distance(x.omega[j], x.a[j], y.omega[j], y.a[j], center_[j], p_)).first;
      total += it->second;
    }
    return total;
  }

 private:
  using Key = std::tuple<std::size_t, LW, int, LW, int>;
  FWeight center_;
  Int p_;
  std::map<Key, int> memo_;
};

}  // namespace

PredictedGraph predicted_graph(const TameType& t, const SerreWeightNF& sigma, Int p) {
  PredictedGraph g;
  g.vertices = jh(t, p);
  g.cosocle = find_weight(g.vertices, sigma);
  DistanceCache dist(t.mu, p);
  for (const auto& v : g.vertices) g.dist.push_back(dist(g.vertices[g.cosocle].vertex, v.vertex));
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t k = 0; k < g.vertices.size(); ++k)
      if (i != k && g.dist[i] <= g.dist[k] && adjacent(g.vertices[i].vertex, g.vertices[k].vertex))
        g.edges.push_back({i, k});
  return g;
}

std::vector<std::vector<LabeledWeight>> predicted_layers(const TameType& t, const SerreWeightNF& sigma, Int p) {
  PredictedGraph g = predicted_graph(t, sigma, p);
  int top = *std::max_element(g.dist.begin(), g.dist.end());
  std::vector<std::vector<LabeledWeight>> layers(top + 1);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) layers[g.dist[i]].push_back(g.vertices[i]);
  return layers;
}

std::string to_dot(const PredictedGraph& g) {
  std::vector<GraphVertex> vs;
  for (const auto& v : g.vertices) vs.push_back(v.vertex);
  return to_dot(vs, &g.edges, &g.dist);
}

namespace {
constexpr std::uint64_t kMaxClosedSets = 50'000'000;
}  // namespace

SubmoduleEnumeration submodules(std::size_t n, const std::vector<DotEdge>& edges, std::size_t bound,
                                std::size_t keep) {
  if (n > bound) throw std::length_error("submodules: graph exceeds the vertex bound");
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<int> indeg(n, 0);
  for (const auto& e : edges) {
    succ[e.from].push_back(e.to);
    ++indeg[e.to];
  }
  // Reverse topological order: every vertex comes after all of its successors.
  std::vector<std::size_t> topo;
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    topo.push_back(v);
    for (auto w : succ[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  if (topo.size() != n) throw std::invalid_argument("submodules: graph has a cycle");
  std::reverse(topo.begin(), topo.end());

  SubmoduleEnumeration out;
  std::vector<char> in(n, 0);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      if (++out.count > kMaxClosedSets) throw std::length_error("submodules: too many closed subsets");
      if (out.sets.size() < keep) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
          if (in[i]) s.push_back(i);
        out.sets.push_back(std::move(s));
      }
      return;
    }
    std::size_t v = topo[depth];
    self(self, depth + 1);
    bool closed = std::all_of(succ[v].begin(), succ[v].end(), [&](std::size_t w) { return in[w] != 0; });
    if (closed) {
      in[v] = 1;
      self(self, depth + 1);
      in[v] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

SubmoduleEnumeration submodules(const PredictedGraph& g, std::size_t bound, std::size_t keep) {
  return submodules(g.vertices.size(), g.edges, bound, keep);
}

std::vector<std::vector<int>> saturation_predictions(const TameType& t, Int p) {
  auto ws = jh(t, p);
  DistanceCache dist(t.mu, p);
  std::vector<std::vector<int>> m(ws.size(), std::vector<int>(ws.size(), 0));
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t k = 0; k < ws.size(); ++k) m[i][k] = dist(ws[i].vertex, ws[k].vertex);
  return m;
}

namespace {

std::set<LW> orbit(const Vec3& v) {
  std::set<LW> out;
  for (const Perm& s : all_perms()) out.insert(from_z3(act(s, v)));
  return out;
}

}  // namespace

std::vector<LW> lambda_eta() {
  std::set<LW> s{LW{0, 0}};
  for (const Vec3& v : {Vec3{1, 0, 0}, Vec3{1, 1, 0}, kEta})
    for (const LW& w : orbit(v)) s.insert(w);
  return {s.begin(), s.end()};
}

std::vector<SigmaPair> lambda_eta_pairs() {
  const auto w_eta = orbit(kEta);
  std::vector<SigmaPair> out;
  for (const LW& w : lambda_eta())
    for (int a : {0, 1})
      if (!(a == 1 && w_eta.count(w))) out.push_back({w, a});
  return out;
}

char weyl_letter(const SigmaPair& v) {
  if (v.omega == LW{0, 0}) return v.a ? 'B' : 'A';
  if (orbit({1, 1, 0}).count(v.omega)) return v.a ? 'E' : 'C';
  if (orbit({1, 0, 0}).count(v.omega)) return v.a ? 'F' : 'D';
  if (orbit(kEta).count(v.omega) && v.a == 0) return 'G';
  throw std::invalid_argument("weyl_letter: pair outside Lambda_{<=(eta,0)}");
}

FWeight weyl_op(const FWeight& mu, Int p) {
  FWeight out;
  for (const auto& m : mu) out.push_back(dot(AffElem1{kW0, -kEta}, m, p));
  return out;
}

std::vector<WeylConstituent> weyl_jh(const FWeight& mu, Int p) {
  const std::size_t f = mu.size();
  if (f == 0) throw std::invalid_argument("weyl_jh: empty weight");
  AlcoveDescriptor alc = alcove_of(mu, p);
  if (alc.letters() != std::string(f, 'B')) throw std::domain_error("weyl_jh: weight not in the upper alcove");
  if (depth(mu, p) < 2) throw std::domain_error("weyl_jh: weight is not 2-deep");

  const FWeight center = weyl_op(mu, p) + eta(f);
  const auto pairs = lambda_eta_pairs();
  const GraphVertex origin{std::vector<LW>(f), std::vector<int>(f, 1)};
  DistanceCache dist(center, p);

  std::vector<WeylConstituent> out;
  std::vector<std::size_t> idx(f, 0);
  while (true) {
    WeylConstituent c;
    GraphVertex v;
    for (std::size_t j = 0; j < f; ++j) {
      const SigmaPair& s = pairs[idx[j]];
      c.vertex.push_back(s);
      v.omega.push_back(s.omega);
      v.a.push_back(s.a);
      c.letters += weyl_letter(s);
    }
    c.weight = trns(center, v, p);
    c.grade = dist(origin, v);
    out.push_back(std::move(c));
    std::size_t k = 0;
    while (k < f && ++idx[k] == pairs.size()) idx[k++] = 0;
    if (k == f) break;
  }
  return out;
}

}  // namespace serre
