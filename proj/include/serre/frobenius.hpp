#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "serre/types.hpp"

namespace serre {

// Formal product of unit symbols; units never affect exponents.
struct Coef {
  std::map<std::string, int> units;

  auto operator<=>(const Coef&) const = default;
};

Coef operator*(const Coef& x, const Coef& y);
std::string to_string(const Coef& c);

// Monomial matrix: column m has the single entry coef[m] v^{exps[m]} in row w(m).
struct MonoMat {
  Perm w;
  Vec3 exps{0, 0, 0};
  std::array<Coef, 3> coef{};

  auto operator<=>(const MonoMat&) const = default;
};

MonoMat operator*(const MonoMat& a, const MonoMat& b);
MonoMat from_aff(const AffElem1& x);  // w v^nu
AffElem1 to_aff(const MonoMat& m);     // drops the coefficients
// v -> v^{p^k} on every exponent.
MonoMat frobenius_twist(const MonoMat& m, Int p, unsigned k);
// Text grid "c*v^k" with zeros elsewhere.
std::string render(const MonoMat& m);

// The partial Frobenius matrices B^(j) = D_j w~_j s_{tau,mu,j} v^{s_j^{-1}(mu_{f-1-j})}.
// D_j is a diagonal of unit symbols "u<j>_<row>".
std::vector<MonoMat> phi_matrices(const std::vector<AffElem1>& shape, const TypeData& t);
// phi^f = prod_{j=0}^{f-1} frob^j(B^(f-1-j)), left to right.
MonoMat compose_phi_f(const std::vector<MonoMat>& mats, Int p);

// phi^f = D s0^{-1} v^mu gives R_{(s0,1,...,1)}(lambda) with mu = sum_j p^j lambda_j.
// Digits lambda_j for j < f-1 lie in [0,p); the top digit takes the remainder.
TameType inertial_type_of(const MonoMat& phi_f, Int p, std::size_t f);

// Inertial characters (niveau d, exponent mod p^{df}-1), each at minimal niveau, sorted.
using TypeInvariant = std::vector<std::pair<int, Int>>;
TypeInvariant type_invariant(const TameType& t, Int p);
bool type_equivalent(const TameType& x, const TameType& y, Int p);
// Herzig's twist R_w(lambda) -> R_{s w pi(s)^{-1}}(s lambda).
TameType twist_type(const TameType& t, const std::vector<Perm>& s);

// R_{s*_{tau,mu} w~*}(s*(mu)), the type predicted for a shape.
TameType expected_reflection(const std::vector<AffElem1>& shape, const TypeData& t);

}  // namespace serre
