#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace serre {

using Int = std::int64_t;
using Vec3 = std::array<Int, 3>;

// Per-embedding weights (Z^3)^f, index j = 0..f-1.
using FWeight = std::vector<Vec3>;

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a);
Vec3 operator*(Int k, const Vec3& a);

inline constexpr Vec3 kEta{1, 0, -1};
inline constexpr Vec3 kOne{1, 1, 1};

FWeight operator+(const FWeight& a, const FWeight& b);
FWeight operator-(const FWeight& a, const FWeight& b);
FWeight constant_weight(std::size_t f, const Vec3& v);
FWeight eta(std::size_t f);

// Permutation of {1,2,3}; img[m-1] = s(m).
struct Perm {
  std::array<int, 3> img{1, 2, 3};

  int operator()(int m) const { return img[m - 1]; }
  auto operator<=>(const Perm&) const = default;

  static Perm identity() { return {}; }
};

Perm compose(const Perm& a, const Perm& b);  // a after b
Perm inverse(const Perm& s);
// (s v)_{s(m)} = v_m, i.e. the permutation matrix with (k,m)-entry delta_{k,s(m)}.
Vec3 act(const Perm& s, const Vec3& v);
int order(const Perm& s);
const std::array<Perm, 6>& all_perms();
Perm perm_from_images(const std::vector<int>& img);
// Cycle notation: "()", "(12)", "(13)", "(23)", "(123)", "(132)".
std::string cycle_name(const Perm& s);
Perm perm_from_cycle(std::string_view text);

inline const Perm kAlphaPerm{{2, 1, 3}};
inline const Perm kBetaPerm{{1, 3, 2}};
inline const Perm kW0{{3, 2, 1}};

// w * t_nu
struct AffElem1 {
  Perm w;
  Vec3 nu{0, 0, 0};

  auto operator<=>(const AffElem1&) const = default;
};

AffElem1 compose(const AffElem1& x, const AffElem1& y);
AffElem1 inverse(const AffElem1& x);
AffElem1 translation(const Vec3& nu);
AffElem1 finite(const Perm& w);
// Linear action on Z^3: (w t_nu)(v) = w(v + nu).
Vec3 apply(const AffElem1& x, const Vec3& v);
// p-dot action: (w t_nu) . mu = w(mu + p nu + eta) - eta.
Vec3 dot(const AffElem1& x, const Vec3& mu, Int p);

// Which base alcove the length function and the generator gamma refer to.
enum class Base { plus, minus };

AffElem1 generator(char c, Base base);  // 'a' = alpha, 'b' = beta, 'g' = gamma^+ or gamma
AffElem1 word_element(std::string_view word, Base base);
int length(const AffElem1& x, Base base = Base::plus);

// x = word * omega with omega of length zero.
struct ReducedWord {
  std::string word;
  AffElem1 omega;
};
ReducedWord reduced_word(const AffElem1& x, Base base = Base::plus);

// Throws std::invalid_argument when the length-zero parts differ.
bool bruhat_leq(const AffElem1& x, const AffElem1& y, Base base = Base::plus);
bool same_coset(const AffElem1& x, const AffElem1& y, Base base = Base::plus);

// Adm(lambda) = { x : x <= t_{s(lambda)} for some s }, lambda dominant.
std::vector<AffElem1> admissible_set(const Vec3& lambda, Base base);
bool is_admissible(const AffElem1& x, const Vec3& lambda, Base base);

// (w t_nu)^* = t_nu w^{-1}
AffElem1 star(const AffElem1& x);

struct AffElem {
  std::vector<AffElem1> comps;

  std::size_t f() const { return comps.size(); }
  auto operator<=>(const AffElem&) const = default;
};

AffElem identity_elem(std::size_t f);
AffElem compose(const AffElem& x, const AffElem& y);
AffElem inverse(const AffElem& x);
AffElem star(const AffElem& x);
AffElem pi(const AffElem& x);  // (pi x)_j = x_{j-1}
AffElem pi_inverse(const AffElem& x);
FWeight pi(const FWeight& v);
FWeight pi_inverse(const FWeight& v);
FWeight dot(const AffElem& x, const FWeight& mu, Int p);
// x(0) componentwise: w_j(nu_j).
FWeight at_zero(const AffElem& x);

std::string to_string(const Vec3& v);
std::string to_string(const AffElem1& x);  // "(13)t(1,0,-1)", "t(0,0,0)", "(12)"
// Accepts "Id", a word over {a,b,g} (e.g. "gaba"), or "(13)t(1,0,-1)".
AffElem1 parse_aff1(std::string_view text, Base base = Base::plus);

}  // namespace serre
