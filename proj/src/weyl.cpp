#include "serre/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace serre {

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator-(const Vec3& a) { return {-a[0], -a[1], -a[2]}; }
Vec3 operator*(Int k, const Vec3& a) { return {k * a[0], k * a[1], k * a[2]}; }

FWeight operator+(const FWeight& a, const FWeight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight length mismatch");
  FWeight r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j] + b[j];
  return r;
}

FWeight operator-(const FWeight& a, const FWeight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("weight length mismatch");
  FWeight r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j] - b[j];
  return r;
}

FWeight constant_weight(std::size_t f, const Vec3& v) { return FWeight(f, v); }
FWeight eta(std::size_t f) { return FWeight(f, kEta); }

Perm compose(const Perm& a, const Perm& b) {
  Perm r;
  for (int m = 1; m <= 3; ++m) r.img[m - 1] = a(b(m));
  return r;
}

Perm inverse(const Perm& s) {
  Perm r;
  for (int m = 1; m <= 3; ++m) r.img[s(m) - 1] = m;
  return r;
}

Vec3 act(const Perm& s, const Vec3& v) {
  Vec3 r{};
  for (int m = 1; m <= 3; ++m) r[s(m) - 1] = v[m - 1];
  return r;
}

int order(const Perm& s) {
  int k = 1;
  for (Perm x = s; x != Perm::identity(); x = compose(x, s)) ++k;
  return k;
}

const std::array<Perm, 6>& all_perms() {
  static const std::array<Perm, 6> perms{Perm{{1, 2, 3}}, Perm{{1, 3, 2}}, Perm{{2, 1, 3}},
                                         Perm{{2, 3, 1}}, Perm{{3, 1, 2}}, Perm{{3, 2, 1}}};
  return perms;
}

Perm perm_from_images(const std::vector<int>& img) {
  if (img.size() != 3) throw std::invalid_argument("permutation needs 3 images");
  Perm s{{img[0], img[1], img[2]}};
  std::array<int, 3> sorted = s.img;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3}) throw std::invalid_argument("not a permutation of {1,2,3}");
  return s;
}

std::string cycle_name(const Perm& s) {
  if (s == Perm::identity()) return "()";
  std::string out = "(";
  int fixed = 0;
  for (int m = 1; m <= 3; ++m)
    if (s(m) == m) fixed = m;
  if (fixed != 0) {
    for (int m = 1; m <= 3; ++m)
      if (m != fixed) out += char('0' + m);
  } else {
    out += '1';
    out += char('0' + s(1));
    out += char('0' + s(s(1)));
  }
  return out + ")";
}

Perm perm_from_cycle(std::string_view text) {
  std::vector<int> cyc;
  for (char c : text) {
    if (c >= '1' && c <= '3') {
      cyc.push_back(c - '0');
    } else if (c != '(' && c != ')' && c != ' ') {
      throw std::invalid_argument("bad cycle: " + std::string(text));
    }
  }
  Perm s;
  for (std::size_t i = 0; i < cyc.size(); ++i) s.img[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
  return perm_from_images({s.img[0], s.img[1], s.img[2]});
}

AffElem1 compose(const AffElem1& x, const AffElem1& y) {
  return {compose(x.w, y.w), act(inverse(y.w), x.nu) + y.nu};
}

AffElem1 inverse(const AffElem1& x) { return {inverse(x.w), -act(x.w, x.nu)}; }
AffElem1 translation(const Vec3& nu) { return {Perm::identity(), nu}; }
AffElem1 finite(const Perm& w) { return {w, {0, 0, 0}}; }
Vec3 apply(const AffElem1& x, const Vec3& v) { return act(x.w, v + x.nu); }
Vec3 dot(const AffElem1& x, const Vec3& mu, Int p) { return act(x.w, mu + p * x.nu + kEta) - kEta; }

AffElem1 generator(char c, Base base) {
  switch (c) {
    case 'a':
      return finite(kAlphaPerm);
    case 'b':
      return finite(kBetaPerm);
    case 'g':
      return base == Base::plus ? compose(translation(kEta), finite(kW0))
                                : compose(finite(kW0), translation(kEta));
    default:
      throw std::invalid_argument(std::string("unknown generator letter: ") + c);
  }
}

AffElem1 word_element(std::string_view word, Base base) {
  AffElem1 x;
  for (char c : word) x = compose(x, generator(c, base));
  return x;
}

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Multiples of 3 strictly between lo and hi.
Int walls_between(Int a, Int b) {
  Int lo = std::min(a, b), hi = std::max(a, b);
  if (hi - lo < 2) return 0;
  return floor_div(hi - 1, 3) - floor_div(lo, 3);
}

std::set<AffElem1> subword_products(const ReducedWord& rw, Base base) {
  std::set<AffElem1> prods{AffElem1{}};
  for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) {
    AffElem1 g = generator(*it, base);
    std::vector<AffElem1> add;
    for (const auto& z : prods) add.push_back(compose(g, z));
    prods.insert(add.begin(), add.end());
  }
  std::set<AffElem1> out;
  for (const auto& z : prods) out.insert(compose(z, rw.omega));
  return out;
}

}  // namespace

int length(const AffElem1& x, Base base) {
  // Alcoves scaled by 3 so that the base alcove's barycenter is integral.
  Vec3 c = base == Base::plus ? Vec3{1, 0, -1} : Vec3{-1, 0, 1};
  Vec3 img = act(x.w, c + 3 * x.nu);
  Int total = 0;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}})
    total += walls_between(c[i] - c[j], img[i] - img[j]);
  return static_cast<int>(total);
}

ReducedWord reduced_word(const AffElem1& x, Base base) {
  ReducedWord rw{"", x};
  int len = length(x, base);
  while (len > 0) {
    bool found = false;
    for (char c : {'a', 'b', 'g'}) {
      AffElem1 y = compose(generator(c, base), rw.omega);
      int ly = length(y, base);
      if (ly < len) {
        rw.word += c;
        rw.omega = y;
        len = ly;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no descent found for " + to_string(x));
  }
  return rw;
}

bool same_coset(const AffElem1& x, const AffElem1& y, Base base) {
  return reduced_word(x, base).omega == reduced_word(y, base).omega;
}

bool bruhat_leq(const AffElem1& x, const AffElem1& y, Base base) {
  ReducedWord rx = reduced_word(x, base), ry = reduced_word(y, base);
  if (rx.omega != ry.omega) throw std::invalid_argument("bruhat_leq: incomparable length-zero parts");
  if (rx.word.size() > ry.word.size()) return false;
  return subword_products(ry, base).count(x) > 0;
}

namespace {

void require_dominant(const Vec3& lambda) {
  if (lambda[0] < lambda[1] || lambda[1] < lambda[2])
    throw std::invalid_argument("admissible set needs a dominant triple, got " + to_string(lambda));
}

}  // namespace

std::vector<AffElem1> admissible_set(const Vec3& lambda, Base base) {
  require_dominant(lambda);
  std::vector<AffElem1> tops;
  for (const Perm& s : all_perms()) tops.push_back(translation(act(s, lambda)));
  const int max_len = length(tops.front(), base);
  // Translation parts below t_{s(lambda)} have coordinate spreads at most that of lambda, with slack.
  const Int spread = 2 * (lambda[0] - lambda[2]);
  const Vec3 bound{spread, spread, spread};
  const Int total = lambda[0] + lambda[1] + lambda[2];
  const Int lo = lambda[2] - spread, hi = lambda[0] + spread;

  std::vector<AffElem1> out;
  for (const Perm& w : all_perms()) {
    for (Int n0 = lo; n0 <= hi; ++n0) {
      for (Int n1 = lo; n1 <= hi; ++n1) {
        Vec3 nu{n0, n1, total - n0 - n1};
        if (std::abs(nu[0] - nu[1]) > bound[0] || std::abs(nu[1] - nu[2]) > bound[1] ||
            std::abs(nu[0] - nu[2]) > bound[2])
          continue;
        AffElem1 x{w, nu};
        if (length(x, base) > max_len || !same_coset(x, tops.front(), base)) continue;
        for (const auto& t : tops) {
          if (bruhat_leq(x, t, base)) {
            out.push_back(x);
            break;
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_admissible(const AffElem1& x, const Vec3& lambda, Base base) {
  require_dominant(lambda);
  AffElem1 top = translation(lambda);
  if (!same_coset(x, top, base)) return false;
  for (const Perm& s : all_perms())
    if (bruhat_leq(x, translation(act(s, lambda)), base)) return true;
  return false;
}

AffElem1 star(const AffElem1& x) { return {inverse(x.w), act(x.w, x.nu)}; }

AffElem identity_elem(std::size_t f) { return {std::vector<AffElem1>(f)}; }

namespace {

void require_same_f(const AffElem& x, const AffElem& y) {
  if (x.f() != y.f()) throw std::invalid_argument("mismatched f in affine Weyl tuple");
}

}  // namespace

AffElem compose(const AffElem& x, const AffElem& y) {
  require_same_f(x, y);
  AffElem r;
  for (std::size_t j = 0; j < x.f(); ++j) r.comps.push_back(compose(x.comps[j], y.comps[j]));
  return r;
}

AffElem inverse(const AffElem& x) {
  AffElem r;
  for (const auto& c : x.comps) r.comps.push_back(inverse(c));
  return r;
}

AffElem star(const AffElem& x) {
  AffElem r;
  const std::size_t f = x.f();
  for (std::size_t j = 0; j < f; ++j) r.comps.push_back(star(x.comps[f - 1 - j]));
  return r;
}

AffElem pi(const AffElem& x) {
  AffElem r = x;
  const std::size_t f = x.f();
  for (std::size_t j = 0; j < f; ++j) r.comps[j] = x.comps[(j + f - 1) % f];
  return r;
}

AffElem pi_inverse(const AffElem& x) {
  AffElem r = x;
  const std::size_t f = x.f();
  for (std::size_t j = 0; j < f; ++j) r.comps[j] = x.comps[(j + 1) % f];
  return r;
}

FWeight pi(const FWeight& v) {
  FWeight r = v;
  const std::size_t f = v.size();
  for (std::size_t j = 0; j < f; ++j) r[j] = v[(j + f - 1) % f];
  return r;
}

FWeight pi_inverse(const FWeight& v) {
  FWeight r = v;
  const std::size_t f = v.size();
  for (std::size_t j = 0; j < f; ++j) r[j] = v[(j + 1) % f];
  return r;
}

FWeight dot(const AffElem& x, const FWeight& mu, Int p) {
  if (x.f() != mu.size()) throw std::invalid_argument("mismatched f in dot action");
  FWeight r(mu.size());
  for (std::size_t j = 0; j < mu.size(); ++j) r[j] = dot(x.comps[j], mu[j], p);
  return r;
}

FWeight at_zero(const AffElem& x) {
  FWeight r;
  for (const auto& c : x.comps) r.push_back(act(c.w, c.nu));
  return r;
}

std::string to_string(const Vec3& v) {
  std::ostringstream os;
  os << "(" << v[0] << "," << v[1] << "," << v[2] << ")";
  return os.str();
}

std::string to_string(const AffElem1& x) {
  const bool no_w = x.w == Perm::identity();
  const bool no_nu = x.nu == Vec3{0, 0, 0};
  if (no_w && no_nu) return "Id";
  std::string out = no_w ? "" : cycle_name(x.w);
  if (!no_nu) out += "t" + to_string(x.nu);
  return out;
}

AffElem1 parse_aff1(std::string_view text, Base base) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "Id" || s == "id") return {};
  if (s.find_first_not_of("abg") == std::string::npos) return word_element(s, base);

  AffElem1 x;
  std::size_t pos = 0;
  if (s[0] == '(') {
    std::size_t close = s.find(')');
    if (close == std::string::npos) throw std::invalid_argument("bad element: " + s);
    x.w = perm_from_cycle(s.substr(0, close + 1));
    pos = close + 1;
  }
  if (pos < s.size()) {
    if (s[pos] != 't' || pos + 1 >= s.size() || s[pos + 1] != '(' || s.back() != ')')
      throw std::invalid_argument("bad element: " + s);
    std::string inner = s.substr(pos + 2, s.size() - pos - 3);
    std::replace(inner.begin(), inner.end(), ',', ' ');
    std::istringstream is(inner);
    if (!(is >> x.nu[0] >> x.nu[1] >> x.nu[2])) throw std::invalid_argument("bad translation in: " + s);
    std::string rest;
    if (is >> rest) throw std::invalid_argument("bad translation in: " + s);
  }
  return x;
}

}  // namespace serre
