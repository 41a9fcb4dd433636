#include "serre/extgraph.hpp"

#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace serre {

LW operator+(const LW& a, const LW& b) { return {a.m1 + b.m1, a.m2 + b.m2}; }
LW operator-(const LW& a, const LW& b) { return {a.m1 - b.m1, a.m2 - b.m2}; }
LW operator-(const LW& a) { return {-a.m1, -a.m2}; }

Vec3 to_z3(const LW& w) { return {w.m1 + w.m2, w.m2, 0}; }
LW from_z3(const Vec3& v) { return {v[0] - v[1], v[1] - v[2]}; }
int lr_class(const LW& w) { return static_cast<int>(mod(w.m1 - w.m2, 3)); }
Vec3 sec(const LW& w) { return {w.m1, 0, -w.m2}; }

Vec3 can(const LW& nu) {
  if (lr_class(nu) != 0) throw std::invalid_argument("can: element not in the root lattice");
  Vec3 z = to_z3(nu);
  Int k = (z[0] + z[1] + z[2]) / 3;
  return z - k * kOne;
}

LW act(const AffElem1& x, const LW& w) { return from_z3(serre::apply(x, to_z3(w))); }
LW act(const Perm& s, const LW& w) { return from_z3(act(s, to_z3(w))); }

std::string to_string(const GraphVertex& v) {
  std::ostringstream os;
  for (std::size_t j = 0; j < v.f(); ++j)
    os << (j ? "|" : "") << "(" << v.omega[j].m1 << "," << v.omega[j].m2 << ";" << v.a[j] << ")";
  return os.str();
}

const std::array<PPRow, 6>& table_pp() {
  static const std::array<PPRow, 6> rows = [] {
    struct Raw {
      int cls, a;
      const char* w;
      LW omega0;
    };
    const Raw raw[6] = {{0, 0, "()", {0, 0}},    {0, 1, "(13)", {1, 1}}, {2, 0, "(123)", {0, 1}},
                        {2, 1, "(12)", {1, -1}}, {1, 0, "(132)", {1, 0}}, {1, 1, "(23)", {-1, 1}}};
    std::array<PPRow, 6> out{};
    for (int i = 0; i < 6; ++i) {
      Perm w = perm_from_cycle(raw[i].w);
      out[i] = {raw[i].cls, raw[i].a, w, raw[i].omega0, {w, -sec(raw[i].omega0)}};
    }
    return out;
  }();
  return rows;
}

const PPRow& pp_lookup(int cls, int a) {
  for (const auto& row : table_pp())
    if (row.cls == cls && row.a == a) return row;
  throw std::invalid_argument("pp_lookup: bad class/alcove pair");
}

bool in_region(const Vec3& mu, const LW& omega, Int p) {
  auto pr = pairings(mu - kEta);  // pairings of mu itself
  return 0 < omega.m1 + pr[0] && 0 < omega.m2 + pr[1] && omega.m1 + omega.m2 + pr[2] < p;
}

bool in_region(const FWeight& mu, const std::vector<LW>& omega, Int p) {
  if (mu.size() != omega.size()) return false;
  for (std::size_t j = 0; j < mu.size(); ++j)
    if (!in_region(mu[j], omega[j], p)) return false;
  return true;
}

namespace {

void check_vertex(const GraphVertex& v, std::size_t f) {
  if (v.omega.size() != f || v.a.size() != f) throw std::invalid_argument("vertex has wrong number of embeddings");
  for (int a : v.a)
    if (a != 0 && a != 1) throw std::invalid_argument("alcove bit must be 0 or 1");
}

}  // namespace

FWeight trns_weight(const FWeight& mu, const GraphVertex& v, Int p) {
  const std::size_t f = mu.size();
  check_vertex(v, f);
  if (!in_region(mu, v.omega, p)) throw std::domain_error("trns: vertex " + to_string(v) + " outside Lambda_W^mu");
  std::vector<Perm> w(f);
  std::vector<LW> o(f);
  for (std::size_t k = 0; k < f; ++k) {
    const PPRow& row = pp_lookup(lr_class(v.omega[k]), v.a[k]);
    w[(k + f - 1) % f] = row.w;
    o[k] = row.omega0;
  }
  FWeight out(f);
  for (std::size_t i = 0; i < f; ++i) {
    Vec3 y = mu[i] + can(v.omega[i] - o[i]) + sec(o[i]) - p * sec(o[(i + 1) % f]);
    out[i] = act(w[i], y) - kEta;
  }
  return out;
}

SerreWeightNF trns(const FWeight& mu, const GraphVertex& v, Int p) { return serre_nf(trns_weight(mu, v, p), p); }

GraphVertex trns_inverse(const FWeight& mu, const SerreWeightNF& sw, Int p) {
  const std::size_t f = mu.size();
  if (sw.f() != f || sw.p != p) throw std::invalid_argument("trns_inverse: weight does not match center");
  if (central_class(sw) != central_class(mu - eta(f), p))
    throw std::domain_error("trns_inverse: central character mismatch");
  const Int modulus = ipow(p, static_cast<unsigned>(f)) - 1;

  std::vector<GraphVertex> found;
  std::vector<int> choice(f, 0);
  while (true) {
    // choice[k] indexes the table row used for omega_k.
    GraphVertex v{std::vector<LW>(f), std::vector<int>(f)};
    bool ok = true;
    Int twist = 0, pj = 1;
    for (std::size_t i = 0; i < f && ok; ++i) {
      const PPRow& here = table_pp()[choice[i]];
      const PPRow& next = table_pp()[choice[(i + 1) % f]];
      Vec3 x = act(inverse(next.w), sw.base[i] + kEta) - mu[i] - sec(here.omega0) + p * sec(next.omega0);
      Int s = x[0] + x[1] + x[2];
      if (mod(s, 3) != 0) {
        ok = false;
        break;
      }
      Int d = -s / 3;
      v.omega[i] = here.omega0 + from_z3(x + d * kOne);
      v.a[i] = here.a;
      twist = mod(twist + mod(d, modulus) * pj, modulus);
      pj *= p;
    }
    if (ok && twist == sw.twist && in_region(mu, v.omega, p) && trns(mu, v, p) == sw) found.push_back(v);

    std::size_t k = 0;
    while (k < f && ++choice[k] == 6) choice[k++] = 0;
    if (k == f) break;
  }
  if (found.empty()) throw std::domain_error("trns_inverse: no preimage in Lambda_W^mu");
  if (found.size() > 1) throw std::logic_error("trns_inverse: preimage not unique");
  return found.front();
}

GraphVertex trns_inverse_scan(const FWeight& mu, const SerreWeightNF& sw, Int p) {
  const std::size_t f = mu.size();
  std::vector<std::vector<std::pair<LW, int>>> slots(f);
  for (std::size_t j = 0; j < f; ++j) {
    auto pr = pairings(mu[j] - kEta);
    for (Int m1 = 1 - pr[0]; m1 < p - pr[2] + pr[1]; ++m1)
      for (Int m2 = 1 - pr[1]; m1 + m2 + pr[2] < p; ++m2)
        for (int a : {0, 1}) slots[j].push_back({{m1, m2}, a});
  }
  std::vector<GraphVertex> found;
  std::vector<std::size_t> idx(f, 0);
  for (const auto& s : slots)
    if (s.empty()) throw std::domain_error("trns_inverse_scan: empty region");
  while (true) {
    GraphVertex v{std::vector<LW>(f), std::vector<int>(f)};
    for (std::size_t j = 0; j < f; ++j) std::tie(v.omega[j], v.a[j]) = slots[j][idx[j]];
    try {
      if (trns(mu, v, p) == sw) found.push_back(v);
    } catch (const std::domain_error&) {
    }
    std::size_t k = 0;
    while (k < f && ++idx[k] == slots[k].size()) idx[k++] = 0;
    if (k == f) break;
  }
  if (found.empty()) throw std::domain_error("trns_inverse_scan: no preimage");
  if (found.size() > 1) throw std::logic_error("trns_inverse_scan: preimage not unique");
  return found.front();
}

const std::array<LW, 7>& adjacency_steps() {
  static const std::array<LW, 7> steps{LW{0, 0}, LW{1, -1}, LW{-1, 1}, LW{1, 0}, LW{-1, 0}, LW{0, 1}, LW{0, -1}};
  return steps;
}

bool adjacent(const GraphVertex& v1, const GraphVertex& v2) {
  if (v1.f() != v2.f()) return false;
  int differing = 0;
  std::size_t at = 0;
  for (std::size_t j = 0; j < v1.f(); ++j) {
    if (v1.omega[j] != v2.omega[j] || v1.a[j] != v2.a[j]) {
      ++differing;
      at = j;
    }
  }
  if (differing != 1 || v1.a[at] == v2.a[at]) return false;
  LW d = v1.omega[at] - v2.omega[at];
  for (const LW& s : adjacency_steps())
    if (d == s) return true;
  return false;
}

std::vector<GraphVertex> neighbors(const GraphVertex& v) {
  std::vector<GraphVertex> out;
  for (std::size_t j = 0; j < v.f(); ++j) {
    for (const LW& s : adjacency_steps()) {
      GraphVertex u = v;
      u.omega[j] = u.omega[j] + s;
      u.a[j] = 1 - u.a[j];
      out.push_back(u);
    }
  }
  return out;
}

std::vector<GraphVertex> neighbors(const GraphVertex& v, const FWeight& mu, Int p) {
  std::vector<GraphVertex> out;
  for (auto& u : neighbors(v))
    if (in_region(mu, u.omega, p)) out.push_back(std::move(u));
  return out;
}

int embedding_distance(const LW& w1, int a1, const LW& w2, int a2, const std::optional<Vec3>& center, Int p) {
  using State = std::tuple<Int, Int, int>;
  if (center && (!in_region(*center, w1, p) || !in_region(*center, w2, p)))
    throw std::invalid_argument("distance: vertex outside the region");
  const State goal{w2.m1, w2.m2, a2};
  std::map<State, int> seen{{State{w1.m1, w1.m2, a1}, 0}};
  std::deque<State> queue{State{w1.m1, w1.m2, a1}};
  while (!queue.empty()) {
    State cur = queue.front();
    queue.pop_front();
    int d = seen[cur];
    if (cur == goal) return d;
    auto [m1, m2, a] = cur;
    for (const LW& s : adjacency_steps()) {
      LW next{m1 + s.m1, m2 + s.m2};
      if (center && !in_region(*center, next, p)) continue;
      State st{next.m1, next.m2, 1 - a};
      if (seen.emplace(st, d + 1).second) queue.push_back(st);
    }
  }
  throw std::runtime_error("distance: target unreachable inside the region");
}

int distance(const GraphVertex& v1, const GraphVertex& v2, const Region& region) {
  if (v1.f() != v2.f()) throw std::invalid_argument("distance: mismatched f");
  if (region.center && region.center->size() != v1.f()) throw std::invalid_argument("distance: region has wrong f");
  int total = 0;
  for (std::size_t j = 0; j < v1.f(); ++j) {
    std::optional<Vec3> c;
    if (region.center) c = (*region.center)[j];
    total += embedding_distance(v1.omega[j], v1.a[j], v2.omega[j], v2.a[j], c, region.p);
  }
  return total;
}

std::string to_string(const SigmaPair& s) {
  std::ostringstream os;
  os << "(" << s.omega.m1 << "," << s.omega.m2 << ";" << s.a << ")";
  return os.str();
}

const std::vector<SigmaPair>& sigma0() {
  static const std::vector<SigmaPair> s{{{1, 1}, 0}, {{1, -1}, 0}, {{-1, 1}, 0}, {{0, 0}, 1}, {{1, 0}, 1},
                                        {{0, 1}, 1}, {{0, 0}, 0},  {{1, 0}, 0},  {{0, 1}, 0}};
  return s;
}

const std::vector<SigmaPair>& sigma0_obvious() {
  static const std::vector<SigmaPair> s(sigma0().begin(), sigma0().begin() + 6);
  return s;
}

const std::vector<SigmaPair>& sigma0_inner() {
  static const std::vector<SigmaPair> s(sigma0().begin() + 6, sigma0().end());
  return s;
}

bool is_inner(const SigmaPair& s) {
  for (const auto& x : sigma0_inner())
    if (x == s) return true;
  return false;
}

SigmaPair r_flip(const SigmaPair& s) { return {s.omega, 1 - s.a}; }

std::vector<std::vector<SigmaPair>> sigma_product(std::size_t f) {
  std::vector<std::vector<SigmaPair>> out{{}};
  for (std::size_t j = 0; j < f; ++j) {
    std::vector<std::vector<SigmaPair>> next;
    for (const auto& prefix : out) {
      for (const auto& s : sigma0()) {
        auto v = prefix;
        v.push_back(s);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

GraphVertex to_vertex(const std::vector<SigmaPair>& labels) {
  GraphVertex v;
  for (const auto& s : labels) {
    v.omega.push_back(s.omega);
    v.a.push_back(s.a);
  }
  return v;
}

std::vector<SigmaPair> to_labels(const GraphVertex& v) {
  std::vector<SigmaPair> out;
  for (std::size_t j = 0; j < v.f(); ++j) out.push_back({v.omega[j], v.a[j]});
  return out;
}

int defect(const std::vector<SigmaPair>& labels) {
  int n = 0;
  for (const auto& s : labels) n += is_inner(s) ? 1 : 0;
  return n;
}

std::string to_dot(const std::vector<GraphVertex>& vertices, const std::vector<DotEdge>* edges,
                   const std::vector<int>* ranks) {
  std::ostringstream os;
  const bool directed = edges != nullptr;
  os << (directed ? "digraph" : "graph") << " G {\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    os << "  v" << i << " [label=\"" << to_string(vertices[i]) << "\"";
    if (ranks) os << ", layer=" << (*ranks)[i];
    os << "];\n";
  }
  if (ranks) {
    std::map<int, std::vector<std::size_t>> by_rank;
    for (std::size_t i = 0; i < vertices.size(); ++i) by_rank[(*ranks)[i]].push_back(i);
    for (const auto& [r, ids] : by_rank) {
      os << "  { rank=same;";
      for (auto i : ids) os << " v" << i << ";";
      os << " }\n";
    }
  }
  if (directed) {
    for (const auto& e : *edges) os << "  v" << e.from << " -> v" << e.to << ";\n";
  } else {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t k = i + 1; k < vertices.size(); ++k)
        if (adjacent(vertices[i], vertices[k])) os << "  v" << i << " -- v" << k << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace serre
