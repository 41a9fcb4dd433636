#include "serre/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace serre::ideal {

bool divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
  r.deg = b.deg - a.deg;
  return r;
}

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  r.deg = a.deg + b.deg;
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

Ring::Ring(std::uint32_t p, std::vector<std::string> vars, std::size_t block)
    : p_(p), vars_(std::move(vars)), block_(block) {
  if (p < 2) throw std::invalid_argument("Ring: modulus must be a prime");
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("Ring: modulus must be a prime");
  if (vars_.empty() || vars_.size() > kMaxVars) throw std::invalid_argument("Ring: between 1 and 16 variables");
  if (block_ >= vars_.size() && block_ != 0) throw std::invalid_argument("Ring: elimination block too large");
}

namespace {

int grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint32_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}

}  // namespace

int Ring::compare(const Monomial& a, const Monomial& b) const {
  if (block_ == 0) return grevlex(a, b, 0, vars_.size());
  if (int c = grevlex(a, b, 0, block_)) return c;
  return grevlex(a, b, block_, vars_.size());
}

std::uint32_t Ring::reduce(std::int64_t c) const {
  std::int64_t r = c % static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
}

std::uint32_t Ring::inv(std::uint32_t c) const {
  if (c % p_ == 0) throw std::domain_error("Ring: division by zero");
  std::uint64_t result = 1, base = c % p_;
  for (std::uint32_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
  }
  return static_cast<std::uint32_t>(result);
}

Poly Ring::constant(std::int64_t c) const {
  Poly r;
  if (std::uint32_t v = reduce(c)) r.terms.push_back({Monomial{}, v});
  return r;
}

Poly Ring::var(std::size_t i) const {
  if (i >= vars_.size()) throw std::out_of_range("Ring::var: index");
  Monomial m;
  m.e[i] = 1;
  m.deg = 1;
  return Poly{{{m, 1}}};
}

Poly Ring::var(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return var(i);
  if (auto it = aliases_.find(std::string(name)); it != aliases_.end()) return it->second;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

Poly Ring::add(const Poly& a, const Poly& b) const {
  Poly r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, k = 0;
  while (i < a.terms.size() && k < b.terms.size()) {
    int c = compare(a.terms[i].m, b.terms[k].m);
    if (c > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(b.terms[k++]);
    } else {
      std::uint32_t s = (a.terms[i].c + b.terms[k].c) % p_;
      if (s) r.terms.push_back({a.terms[i].m, s});
      ++i;
      ++k;
    }
  }
  r.terms.insert(r.terms.end(), a.terms.begin() + static_cast<std::ptrdiff_t>(i), a.terms.end());
  r.terms.insert(r.terms.end(), b.terms.begin() + static_cast<std::ptrdiff_t>(k), b.terms.end());
  return r;
}

Poly Ring::neg(const Poly& a) const {
  Poly r = a;
  for (auto& t : r.terms) t.c = p_ - t.c;
  return r;
}

Poly Ring::sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

Poly Ring::scale(const Poly& a, std::uint32_t c) const {
  c %= p_;
  if (c == 0) return {};
  Poly r = a;
  for (auto& t : r.terms) t.c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(t.c) * c % p_);
  return r;
}

Poly Ring::mul_term(const Poly& a, const Monomial& m, std::uint32_t c) const {
  c %= p_;
  if (c == 0) return {};
  Poly r;
  r.terms.reserve(a.terms.size());
  // Multiplying by a monomial preserves the order.
  for (const auto& t : a.terms)
    r.terms.push_back({product(t.m, m), static_cast<std::uint32_t>(static_cast<std::uint64_t>(t.c) * c % p_)});
  return r;
}

Poly Ring::mul(const Poly& a, const Poly& b) const {
  Poly r;
  for (const auto& t : a.terms) r = add(r, mul_term(b, t.m, t.c));
  return r;
}

Poly Ring::monic(const Poly& a) const {
  if (a.is_zero()) return a;
  return scale(a, inv(a.lead().c));
}

void Ring::define(const std::string& name, const Poly& value) {
  if (std::find(vars_.begin(), vars_.end(), name) != vars_.end())
    throw std::invalid_argument("define: '" + name + "' is already a variable");
  aliases_[name] = value;
}

namespace {

class Parser {
 public:
  Parser(const Ring& R, std::string_view s) : R_(R), s_(s) {}

  Poly run() {
    Poly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  const Ring& R_;
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly r;
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    Poly t = term();
    r = negate ? R_.neg(t) : t;
    while (true) {
      if (eat('+')) r = R_.add(r, term());
      else if (eat('-')) r = R_.sub(r, term());
      else return r;
    }
  }

  Poly term() {
    Poly r = power();
    while (true) {
      if (eat('*')) {
        r = R_.mul(r, power());
      } else if (eat('/')) {
        Poly d = power();
        if (d.terms.size() != 1 || d.lead().m.deg != 0) fail("division only by nonzero constants");
        r = R_.scale(r, R_.inv(d.lead().c));
      } else {
        return r;
      }
    }
  }

  Poly power() {
    Poly base = atom();
    if (!eat('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    Poly r = R_.constant(1);
    for (int i = 0; i < e; ++i) r = R_.mul(r, base);
    return r;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      Poly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (eat('-')) return R_.neg(power());
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = (v * 10 + (s_[pos_++] - '0')) % static_cast<std::int64_t>(R_.p());
      return R_.constant(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return R_.var(s_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Poly Ring::parse(std::string_view text) const { return Parser(*this, text).run(); }

std::string Ring::to_string(const Poly& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : a.terms) {
    // Print coefficients in the symmetric range so small negatives read naturally.
    std::int64_t c = t.c;
    if (c > static_cast<std::int64_t>(p_ / 2)) c -= p_;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    std::int64_t ac = c < 0 ? -c : c;
    bool any_var = t.m.deg > 0;
    if (ac != 1 || !any_var) os << ac;
    bool need_star = ac != 1 || !any_var;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!t.m.e[i]) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (t.m.e[i] > 1) os << "^" << t.m.e[i];
      need_star = true;
    }
  }
  return os.str();
}

Poly normal_form(const Ring& R, const Poly& f, const std::vector<Poly>& G) {
  Poly rem;
  Poly g = f;
  while (!g.is_zero()) {
    const Term lt = g.lead();
    bool reduced = false;
    for (const Poly& h : G) {
      if (h.is_zero() || !divides(h.lead().m, lt.m)) continue;
      std::uint32_t c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(lt.c) * R.inv(h.lead().c) % R.p());
      g = R.sub(g, R.mul_term(h, quotient(lt.m, h.lead().m), c));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.terms.push_back(lt);
      g.terms.erase(g.terms.begin());
    }
  }
  return rem;
}

Poly s_polynomial(const Ring& R, const Poly& f, const Poly& g) {
  const Monomial l = lcm(f.lead().m, g.lead().m);
  Poly a = R.mul_term(f, quotient(l, f.lead().m), R.inv(f.lead().c));
  Poly b = R.mul_term(g, quotient(l, g.lead().m), R.inv(g.lead().c));
  return R.sub(a, b);
}

namespace {

struct Pair {
  std::size_t i, k;
  Monomial lcm;
};

// Gebauer-Moeller update: add h (index `hi`) to the basis indices G and pair list B.
void update(const Ring& R, const std::vector<Poly>& polys, std::vector<std::size_t>& G, std::vector<Pair>& B,
            std::size_t hi) {
  const Monomial& lh = polys[hi].lead().m;
  std::vector<Pair> C;
  for (std::size_t g : G) C.push_back({g, hi, lcm(polys[g].lead().m, lh)});

  // Chain criterion inside the new pairs, keeping coprime ones for now.
  std::vector<Pair> D;
  for (std::size_t x = 0; x < C.size(); ++x) {
    const Pair& pr = C[x];
    bool keep = coprime(polys[pr.i].lead().m, lh);
    if (!keep) {
      keep = true;
      for (std::size_t y = 0; y < C.size() && keep; ++y)
        if (y > x && divides(C[y].lcm, pr.lcm)) keep = false;
      for (const Pair& q : D)
        if (keep && divides(q.lcm, pr.lcm)) keep = false;
    }
    if (keep) D.push_back(pr);
  }
  // Product criterion.
  std::vector<Pair> E;
  for (const Pair& pr : D)
    if (!coprime(polys[pr.i].lead().m, lh)) E.push_back(pr);

  std::vector<Pair> B2;
  for (const Pair& pr : B) {
    bool drop = divides(lh, pr.lcm) && !(lcm(polys[pr.i].lead().m, lh) == pr.lcm) &&
                !(lcm(polys[pr.k].lead().m, lh) == pr.lcm);
    if (!drop) B2.push_back(pr);
  }
  B2.insert(B2.end(), E.begin(), E.end());
  B = std::move(B2);

  std::vector<std::size_t> G2;
  for (std::size_t g : G)
    if (!divides(lh, polys[g].lead().m)) G2.push_back(g);
  G2.push_back(hi);
  G = std::move(G2);
  (void)R;
}

std::vector<Poly> reduce_basis(const Ring& R, std::vector<Poly> G) {
  // Drop elements whose leading monomial is divisible by another's, then interreduce.
  std::vector<Poly> min;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i) continue;
      if (divides(G[k].lead().m, G[i].lead().m) && (!(G[k].lead().m == G[i].lead().m) || k < i))
        redundant = true;
    }
    if (!redundant) min.push_back(R.monic(G[i]));
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < min.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t k = 0; k < min.size(); ++k)
      if (k != i) others.push_back(min[k]);
    Poly tail = min[i];
    Term lead = tail.lead();
    tail.terms.erase(tail.terms.begin());
    Poly r = normal_form(R, tail, others);
    r.terms.insert(r.terms.begin(), lead);
    out.push_back(R.monic(r));
  }
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) { return R.compare(a.lead().m, b.lead().m) < 0; });
  return out;
}

}  // namespace

std::vector<Poly> groebner(const Ring& R, const std::vector<Poly>& gens) {
  std::vector<Poly> polys;
  std::vector<std::size_t> G;
  std::vector<Pair> B;
  for (const Poly& g : gens) {
    Poly h = normal_form(R, g, polys);
    if (h.is_zero()) continue;
    if (h.lead().m.deg == 0) return {R.constant(1)};
    polys.push_back(R.monic(h));
    update(R, polys, G, B, polys.size() - 1);
  }
  while (!B.empty()) {
    // Normal strategy: smallest lcm first.
    auto it = std::min_element(B.begin(), B.end(),
                               [&](const Pair& x, const Pair& y) { return R.compare(x.lcm, y.lcm) < 0; });
    Pair pr = *it;
    B.erase(it);
    std::vector<Poly> current;
    for (std::size_t g : G) current.push_back(polys[g]);
    Poly h = normal_form(R, s_polynomial(R, polys[pr.i], polys[pr.k]), current);
    if (h.is_zero()) continue;
    if (h.lead().m.deg == 0) return {R.constant(1)};
    polys.push_back(R.monic(h));
    update(R, polys, G, B, polys.size() - 1);
  }
  std::vector<Poly> basis;
  for (std::size_t g : G) basis.push_back(polys[g]);
  return reduce_basis(R, std::move(basis));
}

bool is_groebner(const Ring& R, const std::vector<Poly>& G) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t k = i + 1; k < G.size(); ++k)
      if (!normal_form(R, s_polynomial(R, G[i], G[k]), G).is_zero()) return false;
  return true;
}

Ideal::Ideal(std::shared_ptr<const Ring> ring, std::vector<Poly> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
  if (!ring_) throw std::invalid_argument("Ideal: null ring");
}

const std::vector<Poly>& Ideal::basis() const {
  if (!basis_) basis_ = groebner(*ring_, gens_);
  return *basis_;
}

Poly Ideal::reduce(const Poly& f) const { return normal_form(*ring_, f, basis()); }

bool Ideal::contains(const Poly& f) const { return reduce(f).is_zero(); }

namespace {

void require_same_ring(const Ideal& I, const Ideal& J) {
  if (I.ring_ptr() != J.ring_ptr()) throw std::invalid_argument("ideals live in different rings");
}

Poly shift(const Poly& f, int by) {
  Poly r;
  for (const auto& t : f.terms) {
    Monomial m;
    m.deg = t.m.deg;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      std::size_t dst = static_cast<std::size_t>(static_cast<int>(i) + by);
      if (t.m.e[i] == 0) continue;
      if (dst >= kMaxVars) throw std::length_error("intersection: too many variables");
      m.e[dst] = t.m.e[i];
    }
    r.terms.push_back({m, t.c});
  }
  return r;
}

}  // namespace

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  std::vector<Poly> g = I.gens();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring_ptr(), std::move(g));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  const Ring& R = I.ring();
  std::vector<std::string> vars{"_t"};
  vars.insert(vars.end(), R.vars().begin(), R.vars().end());
  Ring E(R.p(), vars, 1);
  const Poly t = E.var(0);
  const Poly one_minus_t = E.sub(E.constant(1), t);
  // Shifted polys keep their order relative to each other only after re-sorting.
  auto embed = [&](const Poly& f) {
    Poly r;
    for (const auto& term : shift(f, 1).terms) r = E.add(r, Poly{{term}});
    return r;
  };
  std::vector<Poly> gens;
  for (const Poly& f : I.gens()) gens.push_back(E.mul(t, embed(f)));
  for (const Poly& f : J.gens()) gens.push_back(E.mul(one_minus_t, embed(f)));
  std::vector<Poly> out;
  for (const Poly& g : groebner(E, gens)) {
    bool has_t = std::any_of(g.terms.begin(), g.terms.end(), [](const Term& x) { return x.m.e[0] != 0; });
    if (has_t) continue;
    Poly back;
    for (const auto& term : shift(g, -1).terms) back = R.add(back, Poly{{term}});
    out.push_back(back);
  }
  return Ideal(I.ring_ptr(), std::move(out));
}

EqualityReport compare_ideals(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  const Ring& R = I.ring();
  EqualityReport rep{true, {}, {}};
  for (const Poly& g : I.gens()) {
    Poly r = J.reduce(g);
    rep.left_in_right.push_back({R.to_string(g), r.is_zero(), R.to_string(r)});
    rep.equal = rep.equal && r.is_zero();
  }
  for (const Poly& g : J.gens()) {
    Poly r = I.reduce(g);
    rep.right_in_left.push_back({R.to_string(g), r.is_zero(), R.to_string(r)});
    rep.equal = rep.equal && r.is_zero();
  }
  return rep;
}

bool ideal_eq(const Ideal& I, const Ideal& J) { return compare_ideals(I, J).equal; }

}  // namespace serre::ideal
