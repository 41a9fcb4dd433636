#include "serre/types.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace serre {

TameType affine_type(const AffElem& w, const FWeight& mu) {
  if (w.f() != mu.size()) throw std::invalid_argument("affine_type: mismatched f");
  TameType t{{}, mu + at_zero(w)};
  for (const auto& c : w.comps) t.s.push_back(c.w);
  return t;
}

std::string to_string(const TameType& t) {
  std::ostringstream os;
  os << "R_(";
  for (std::size_t j = 0; j < t.f(); ++j) os << (j ? "," : "") << cycle_name(t.s[j]);
  os << ")(";
  for (std::size_t j = 0; j < t.f(); ++j) os << (j ? "," : "") << to_string(t.mu[j]);
  os << ")";
  return os.str();
}

DepthCheck check_center(const FWeight& center, Int p) {
  FWeight base = center - eta(center.size());
  AlcoveDescriptor alc = alcove_of(base, p);  // throws on walls
  if (alc.letters() != std::string(center.size(), 'A'))
    throw std::domain_error("center - eta is not in the lowest alcove");
  return {depth(base, p)};
}

namespace {

void require_f(const TameType& t) {
  if (t.f() == 0 || t.s.size() != t.mu.size()) throw std::invalid_argument("type has inconsistent f");
}

std::set<SerreWeightNF> weight_set(const std::vector<LabeledWeight>& ws) {
  std::set<SerreWeightNF> out;
  for (const auto& w : ws) out.insert(w.weight);
  return out;
}

}  // namespace

std::vector<LabeledWeight> jh(const TameType& t, Int p) {
  require_f(t);
  check_center(t.mu, p);
  std::vector<LabeledWeight> out;
  for (auto& labels : sigma_product(t.f())) {
    GraphVertex v;
    for (std::size_t j = 0; j < t.f(); ++j) {
      v.omega.push_back(act(t.s[j], labels[j].omega));
      v.a.push_back(labels[j].a);
    }
    SerreWeightNF w = trns(t.mu, v, p);
    out.push_back({std::move(labels), std::move(v), std::move(w)});
  }
  return out;
}

RhoData RhoData::from_niveau(int niveau, const FWeight& lambda) {
  if (lambda.empty()) throw std::invalid_argument("from_niveau: empty weight");
  Perm s0;
  switch (niveau) {
    case 1:
      break;
    case 2:
      s0 = kAlphaPerm;
      break;
    case 3:
      s0 = perm_from_cycle("(123)");
      break;
    default:
      throw std::invalid_argument("niveau must be 1, 2 or 3");
  }
  TameType v{std::vector<Perm>(lambda.size()), lambda};
  v.s[0] = s0;
  return {v};
}

std::vector<LabeledWeight> w_question(const RhoData& rho, Int p) {
  const TameType& v = rho.v;
  require_f(v);
  FWeight center = v.mu - constant_weight(v.f(), kOne);
  check_center(center, p);
  std::vector<LabeledWeight> out;
  for (const auto& labels : sigma_product(v.f())) {
    LabeledWeight lw;
    for (std::size_t j = 0; j < v.f(); ++j) {
      SigmaPair r = r_flip(labels[j]);
      lw.labels.push_back(r);
      lw.vertex.omega.push_back(act(v.s[j], r.omega));
      lw.vertex.a.push_back(r.a);
    }
    lw.weight = trns(center, lw.vertex, p);
    out.push_back(std::move(lw));
  }
  return out;
}

std::vector<SerreWeightNF> obvious_weights(const RhoData& rho, Int p) {
  const TameType& v = rho.v;
  require_f(v);
  const std::size_t f = v.f();
  check_center(v.mu - constant_weight(f, kOne), p);
  const Vec3 eta_prime{2, 1, 0};
  std::vector<SerreWeightNF> out;
  std::vector<int> choice(f, 0);
  while (true) {
    FWeight lam(f);
    for (std::size_t i = 0; i < f; ++i) {
      const PPRow& here = table_pp()[choice[i]];
      const PPRow& next = table_pp()[choice[(i + 1) % f]];
      Vec3 x = v.mu[i] + act(v.s[i], sec(here.omega0)) - eta_prime;
      lam[i] = act(next.w, x - p * sec(next.omega0) + kEta) - kEta;
    }
    out.push_back(serre_nf(lam, p));
    std::size_t k = 0;
    while (k < f && ++choice[k] == 6) choice[k++] = 0;
    if (k == f) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::set<SigmaPair>> intersect_types(const TameType& t1, const AffElem& w, Int p) {
  require_f(t1);
  const std::size_t f = t1.f();
  if (w.f() != f) throw std::invalid_argument("intersect_types: mismatched f");
  for (const auto& c : w.comps)
    if (c.nu[0] + c.nu[1] + c.nu[2] != 0) throw std::invalid_argument("intersect_types: element not in W_a");

  TameType v{{}, {}};
  FWeight shift = at_zero(w);
  for (std::size_t j = 0; j < f; ++j) {
    v.s.push_back(compose(t1.s[j], w.comps[j].w));
    v.mu.push_back(t1.mu[j] + kOne + act(t1.s[j], shift[j]));
  }
  const auto jh1 = jh(t1, p);
  const auto wq = weight_set(w_question(RhoData{v}, p));

  std::vector<std::set<SigmaPair>> out(f);
  std::size_t hits = 0;
  for (const auto& lw : jh1) {
    if (!wq.count(lw.weight)) continue;
    ++hits;
    for (std::size_t j = 0; j < f; ++j) out[j].insert(lw.labels[j]);
  }
  if (hits > 0) {
    std::size_t prod = 1;
    for (const auto& s : out) prod *= s.size();
    if (prod != hits) throw std::logic_error("intersect_types: intersection is not a product set");
    return out;
  }
  if (f == 1) return out;
  // An empty product hides its factors; recover them one embedding at a time.
  for (std::size_t j = 0; j < f; ++j)
    out[j] = intersect_types(TameType{{t1.s[j]}, {t1.mu[j]}}, AffElem{{w.comps[j]}}, p).front();
  return out;
}

Orientation orient(const TypeData& t) {
  const std::size_t f = t.mu.size();
  if (f == 0) throw std::invalid_argument("orient: empty weight");
  Orientation o;
  for (std::size_t j = 0; j < f; ++j) {
    const Vec3& m = t.mu[f - 1 - j];
    bool found = false;
    for (const Perm& s : all_perms()) {
      Vec3 v = act(inverse(s), m);
      if (v[0] > v[1] && v[1] > v[2]) {
        o.s.push_back(s);
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("orient: tie in " + to_string(m));
  }
  for (std::size_t j = 0; j < f; ++j) {
    if (j + 1 < f)
      o.s_tau_mu.push_back(compose(inverse(o.s[j + 1]), o.s[j]));
    else
      o.s_tau_mu.push_back(compose(compose(inverse(o.s[0]), inverse(t.s_tau)), o.s[f - 1]));
  }
  for (std::size_t j = 0; j < f; ++j) {
    o.s_star.push_back(inverse(o.s_tau_mu[f - 1 - j]));
    o.s_star_mu.push_back(act(inverse(o.s[f - 1 - j]), t.mu[j]));
  }
  return o;
}

TameType type_of(const TypeData& t) {
  TameType r{std::vector<Perm>(t.mu.size()), t.mu};
  if (!r.s.empty()) r.s[0] = t.s_tau;
  return r;
}

TameType reflected_type(const TypeData& t) {
  Orientation o = orient(t);
  return {o.s_star, o.s_star_mu};
}

namespace {

void require_shape(const std::vector<AffElem1>& shape, std::size_t f) {
  if (shape.size() != f) throw std::invalid_argument("shape has wrong number of embeddings");
  for (const auto& x : shape)
    if (!is_admissible(x, kEta, Base::minus))
      throw std::invalid_argument("shape component " + to_string(x) + " not in Adm^-(eta)");
}

}  // namespace

RhoData shape_rho(const std::vector<AffElem1>& shape, const TypeData& t) {
  require_shape(shape, t.mu.size());
  Orientation o = orient(t);
  AffElem ws = star(AffElem{shape});
  TameType v;
  FWeight shift = at_zero(ws);
  for (std::size_t j = 0; j < shape.size(); ++j) {
    v.s.push_back(compose(o.s_star[j], ws.comps[j].w));
    v.mu.push_back(o.s_star_mu[j] + kOne + act(o.s_star[j], shift[j]));
  }
  return {v};
}

std::vector<LabeledWeight> shape_weights(const std::vector<AffElem1>& shape, const TypeData& t, Int p) {
  require_shape(shape, t.mu.size());
  Orientation o = orient(t);
  TameType base{o.s_star, o.s_star_mu};
  auto sets = intersect_types(base, star(AffElem{shape}), p);

  std::vector<std::vector<SigmaPair>> combos{{}};
  for (const auto& s : sets) {
    std::vector<std::vector<SigmaPair>> next;
    for (const auto& prefix : combos) {
      for (const auto& x : s) {
        auto v = prefix;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    }
    combos = std::move(next);
  }
  std::vector<LabeledWeight> out;
  for (auto& labels : combos) {
    GraphVertex v;
    for (std::size_t j = 0; j < labels.size(); ++j) {
      v.omega.push_back(act(o.s_star[j], labels[j].omega));
      v.a.push_back(labels[j].a);
    }
    SerreWeightNF w = trns(base.mu, v, p);
    out.push_back({std::move(labels), std::move(v), std::move(w)});
  }
  return out;
}

namespace {

bool in_r_sigma(const SigmaPair& x) {
  for (const auto& s : sigma0())
    if (r_flip(s) == x) return true;
  return false;
}

bool in_sigma(const SigmaPair& x) {
  for (const auto& s : sigma0())
    if (s == x) return true;
  return false;
}

// Elements of W_a in a small window, ordered by translation size.
const std::vector<AffElem1>& wa_window() {
  static const std::vector<AffElem1> elems = [] {
    std::vector<AffElem1> out;
    for (Int a = -3; a <= 3; ++a)
      for (Int b = -3; b <= 3; ++b) {
        Vec3 nu{a, b, -a - b};
        if (std::abs(nu[2]) > 3) continue;
        for (const Perm& w : all_perms()) out.push_back({w, nu});
      }
    auto size = [](const AffElem1& x) { return std::abs(x.nu[0]) + std::abs(x.nu[1]) + std::abs(x.nu[2]); };
    std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return size(x) < size(y); });
    return out;
  }();
  return elems;
}

// x in w~(Sigma_0)
bool covers(const AffElem1& w, const SigmaPair& x) { return in_sigma({act(inverse(w), x.omega), x.a}); }

// w~(Sigma_0) disjoint from r(Sigma_0)
bool separates(const AffElem1& w) {
  for (const auto& s : sigma0())
    if (in_r_sigma({act(w, s.omega), s.a})) return false;
  return true;
}

std::optional<Elimination> try_mismatch_type(const SerreWeightNF& sw, const std::set<SerreWeightNF>& wq, Int p) {
  const std::size_t f = sw.f();
  FWeight rep = representative(sw);
  AffElem up = identity_elem(f);
  for (auto& c : up.comps) c = inverse(AffElem1{kW0, -kEta});
  for (const FWeight& base : {rep, dot(up, rep, p)}) {
    TameType t{std::vector<Perm>(f), base + eta(f)};
    try {
      auto ws = weight_set(jh(t, p));
      if (!ws.count(sw)) continue;
      bool clash = false;
      for (const auto& w : ws) clash = clash || wq.count(w);
      if (!clash) return Elimination{t, AffElem{}, 0, true};
    } catch (const std::domain_error&) {
    }
  }
  return std::nullopt;
}

}  // namespace

Elimination eliminate(const SerreWeightNF& sw, const RhoData& rho, Int p) {
  const TameType& v = rho.v;
  require_f(v);
  const std::size_t f = v.f();
  const auto wq = weight_set(w_question(rho, p));
  if (wq.count(sw)) throw std::invalid_argument("eliminate: weight lies in W?(rho)");
  FWeight center = v.mu - constant_weight(f, kOne);

  if (central_class(sw) != central_class(center - eta(f), p)) {
    if (auto e = try_mismatch_type(sw, wq, p)) return *e;
    throw std::domain_error("eliminate: no containing type found for " + to_string(sw));
  }

  GraphVertex pos = trns_inverse(center, sw, p);
  std::vector<SigmaPair> x(f);
  for (std::size_t j = 0; j < f; ++j) x[j] = {act(inverse(v.s[j]), pos.omega[j]), pos.a[j]};

  std::vector<AffElem1> fill(f);
  for (std::size_t j = 0; j < f; ++j) {
    bool found = false;
    for (const auto& w : wa_window())
      if (covers(w, x[j])) {
        fill[j] = w;
        found = true;
        break;
      }
    if (!found) throw std::logic_error("eliminate: no covering element in window");
  }

  for (std::size_t j0 = 0; j0 < f; ++j0) {
    if (in_r_sigma(x[j0])) continue;
    for (const auto& w : wa_window()) {
      if (!covers(w, x[j0]) || !separates(w)) continue;
      AffElem wt{fill};
      wt.comps[j0] = w;
      TameType t;
      FWeight shift = at_zero(wt);
      for (std::size_t j = 0; j < f; ++j) {
        t.s.push_back(compose(v.s[j], wt.comps[j].w));
        t.mu.push_back(center[j] + act(v.s[j], shift[j]));
      }
      try {
        auto ws = weight_set(jh(t, p));
        if (!ws.count(sw)) continue;
        bool clash = false;
        for (const auto& w2 : ws) clash = clash || wq.count(w2);
        if (!clash) return {t, wt, j0, false};
      } catch (const std::domain_error&) {
      }
    }
  }
  throw std::logic_error("eliminate: no witness in window for " + to_string(sw));
}

}  // namespace serre
