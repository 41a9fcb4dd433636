#include "serre/frobenius.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace serre {

Coef operator*(const Coef& x, const Coef& y) {
  Coef r = x;
  for (const auto& [name, e] : y.units) {
    int& slot = r.units[name];
    slot += e;
    if (slot == 0) r.units.erase(name);
  }
  return r;
}

std::string to_string(const Coef& c) {
  if (c.units.empty()) return "1";
  std::string out;
  for (const auto& [name, e] : c.units) {
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

MonoMat operator*(const MonoMat& a, const MonoMat& b) {
  MonoMat r;
  r.w = compose(a.w, b.w);
  for (int m = 0; m < 3; ++m) {
    int k = b.w(m + 1) - 1;
    r.exps[m] = b.exps[m] + a.exps[k];
    r.coef[m] = b.coef[m] * a.coef[k];
  }
  return r;
}

MonoMat from_aff(const AffElem1& x) {
  MonoMat m;
  m.w = x.w;
  m.exps = x.nu;
  return m;
}

AffElem1 to_aff(const MonoMat& m) { return {m.w, m.exps}; }

MonoMat frobenius_twist(const MonoMat& m, Int p, unsigned k) {
  MonoMat r = m;
  const Int scale = ipow(p, k);
  for (int i = 0; i < 3; ++i) {
    r.exps[i] = m.exps[i] * scale;
    if (k == 0) continue;
    Coef c;
    for (const auto& [name, e] : m.coef[i].units) c.units["phi" + std::to_string(k) + "(" + name + ")"] = e;
    r.coef[i] = c;
  }
  return r;
}

std::string render(const MonoMat& m) {
  std::vector<std::array<std::string, 3>> grid(3, {"0", "0", "0"});
  std::size_t width = 1;
  for (int col = 0; col < 3; ++col) {
    std::string entry = to_string(m.coef[col]) + "*v^" + std::to_string(m.exps[col]);
    grid[m.w(col + 1) - 1][col] = entry;
    width = std::max(width, entry.size());
  }
  std::ostringstream os;
  for (const auto& row : grid) {
    os << "[";
    for (int col = 0; col < 3; ++col) {
      os << (col ? "  " : " ") << row[col] << std::string(width - row[col].size(), ' ');
    }
    os << " ]\n";
  }
  return os.str();
}

std::vector<MonoMat> phi_matrices(const std::vector<AffElem1>& shape, const TypeData& t) {
  const std::size_t f = t.mu.size();
  if (shape.size() != f) throw std::invalid_argument("phi_matrices: shape has wrong number of embeddings");
  Orientation o = orient(t);
  std::vector<MonoMat> out;
  for (std::size_t j = 0; j < f; ++j) {
    MonoMat d;
    for (int row = 0; row < 3; ++row)
      d.coef[row].units["u" + std::to_string(j) + "_" + std::to_string(row + 1)] = 1;
    MonoMat b = d * from_aff(shape[j]) * from_aff(finite(o.s_tau_mu[j])) *
                from_aff(translation(act(inverse(o.s[j]), t.mu[f - 1 - j])));
    out.push_back(b);
  }
  return out;
}

MonoMat compose_phi_f(const std::vector<MonoMat>& mats, Int p) {
  const std::size_t f = mats.size();
  MonoMat x;
  for (std::size_t j = 0; j < f; ++j) x = x * frobenius_twist(mats[f - 1 - j], p, static_cast<unsigned>(j));
  return x;
}

TameType inertial_type_of(const MonoMat& phi_f, Int p, std::size_t f) {
  if (f == 0) throw std::invalid_argument("inertial_type_of: f must be positive");
  TameType t{std::vector<Perm>(f), FWeight(f)};
  t.s[0] = inverse(phi_f.w);
  for (int i = 0; i < 3; ++i) {
    Int n = phi_f.exps[i];
    for (std::size_t j = 0; j + 1 < f; ++j) {
      Int d = mod(n, p);
      t.mu[j][i] = d;
      n = (n - d) / p;
    }
    t.mu[f - 1][i] = n;
  }
  return t;
}

namespace {

using Wide = __int128;

Wide wide_pow(Int p, unsigned e) {
  Wide r = 1;
  while (e--) r *= p;
  return r;
}

Wide wide_mod(Wide a, Wide m) {
  Wide r = a % m;
  return r < 0 ? r + m : r;
}

TypeInvariant characters(const Perm& s0, const Vec3& mu, Int p, std::size_t f) {
  const int k = order(s0);
  const Wide n = wide_pow(p, static_cast<unsigned>(k * f)) - 1;
  if (n > std::numeric_limits<Int>::max()) throw std::overflow_error("type_invariant: p^(kf) too large");
  TypeInvariant out;
  for (int i = 1; i <= 3; ++i) {
    Wide e = 0;
    int x = s0(i);
    for (int m = 0; m < k; ++m) {
      e += wide_pow(p, static_cast<unsigned>(f * m)) * mu[x - 1];
      x = s0(x);
    }
    e = wide_mod(e, n);
    for (int d = 1; d <= k; ++d) {
      if (k % d != 0) continue;
      Wide q = n / (wide_pow(p, static_cast<unsigned>(d * f)) - 1);
      if (e % q == 0) {
        out.emplace_back(d, static_cast<Int>(e / q));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TypeInvariant type_invariant(const TameType& t, Int p) {
  const std::size_t f = t.f();
  if (f == 0 || t.mu.size() != f) throw std::invalid_argument("type_invariant: inconsistent type");
  // Twist to the form R_{(w0,1,...,1)}(lambda') and read off the characters.
  std::vector<Perm> s(f);
  for (std::size_t j = 1; j < f; ++j) s[j] = compose(s[j - 1], inverse(t.s[j]));
  Perm w0 = compose(t.s[0], inverse(s[f - 1]));
  Vec3 mu{0, 0, 0};
  Int pj = 1;
  for (std::size_t j = 0; j < f; ++j) {
    mu = mu + pj * act(s[j], t.mu[j]);
    pj *= p;
  }
  return characters(w0, mu, p, f);
}

bool type_equivalent(const TameType& x, const TameType& y, Int p) {
  return x.f() == y.f() && type_invariant(x, p) == type_invariant(y, p);
}

TameType twist_type(const TameType& t, const std::vector<Perm>& s) {
  const std::size_t f = t.f();
  if (s.size() != f) throw std::invalid_argument("twist_type: mismatched f");
  TameType r = t;
  for (std::size_t j = 0; j < f; ++j) {
    r.s[j] = compose(compose(s[j], t.s[j]), inverse(s[(j + f - 1) % f]));
    r.mu[j] = act(s[j], t.mu[j]);
  }
  return r;
}

TameType expected_reflection(const std::vector<AffElem1>& shape, const TypeData& t) {
  const std::size_t f = t.mu.size();
  if (shape.size() != f) throw std::invalid_argument("expected_reflection: shape has wrong number of embeddings");
  Orientation o = orient(t);
  AffElem ws = star(AffElem{shape});
  TameType r;
  for (std::size_t j = 0; j < f; ++j) {
    AffElem1 x = compose(finite(o.s_star[j]), ws.comps[j]);
    r.s.push_back(x.w);
    r.mu.push_back(o.s_star_mu[j] + act(x.w, x.nu));
  }
  return r;
}

}  // namespace serre
