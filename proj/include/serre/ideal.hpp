#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace serre::ideal {

inline constexpr std::size_t kMaxVars = 16;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  bool operator==(const Monomial& o) const { return e == o.e; }
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial product(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  std::uint32_t c;
};

// Terms sorted strictly decreasing in the ring's order, no zero coefficients.
struct Poly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
};

// Polynomial ring over F_p. Order: grevlex, or with `block` > 0 an elimination
// order (grevlex on the first `block` variables, then grevlex on the rest).
class Ring {
 public:
  Ring(std::uint32_t p, std::vector<std::string> vars, std::size_t block = 0);

  std::uint32_t p() const { return p_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t block() const { return block_; }

  // <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;

  std::uint32_t reduce(std::int64_t c) const;
  std::uint32_t inv(std::uint32_t c) const;

  Poly constant(std::int64_t c) const;
  Poly var(std::size_t i) const;
  Poly var(std::string_view name) const;
  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly scale(const Poly& a, std::uint32_t c) const;
  Poly mul_term(const Poly& a, const Monomial& m, std::uint32_t c) const;
  Poly monic(const Poly& a) const;

  // Named shorthand usable in parsed expressions, e.g. a tilde variable.
  void define(const std::string& name, const Poly& value);
  // Grammar: sums/differences of products of integers, identifiers, (expr), x^k.
  Poly parse(std::string_view text) const;
  std::string to_string(const Poly& a) const;

 private:
  std::uint32_t p_;
  std::vector<std::string> vars_;
  std::size_t block_;
  std::map<std::string, Poly> aliases_;
};

// Full reduction of f by G (G need not be a Groebner basis).
Poly normal_form(const Ring& R, const Poly& f, const std::vector<Poly>& G);
Poly s_polynomial(const Ring& R, const Poly& f, const Poly& g);
// Buchberger with the normal selection strategy and Gebauer-Moeller pair criteria; reduced basis.
std::vector<Poly> groebner(const Ring& R, const std::vector<Poly>& gens);
bool is_groebner(const Ring& R, const std::vector<Poly>& G);

class Ideal {
 public:
  Ideal(std::shared_ptr<const Ring> ring, std::vector<Poly> gens);

  const Ring& ring() const { return *ring_; }
  std::shared_ptr<const Ring> ring_ptr() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  const std::vector<Poly>& basis() const;
  bool contains(const Poly& f) const;
  Poly reduce(const Poly& f) const;

 private:
  std::shared_ptr<const Ring> ring_;
  std::vector<Poly> gens_;
  mutable std::optional<std::vector<Poly>> basis_;
};

Ideal ideal_sum(const Ideal& I, const Ideal& J);
// I cap J by eliminating t from t I + (1 - t) J.
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
bool ideal_eq(const Ideal& I, const Ideal& J);

// Membership of each generator of one side in the other side.
struct GeneratorCheck {
  std::string generator;
  bool member;
  std::string remainder;
};

struct EqualityReport {
  bool equal;
  std::vector<GeneratorCheck> left_in_right;
  std::vector<GeneratorCheck> right_in_left;
};

EqualityReport compare_ideals(const Ideal& I, const Ideal& J);

}  // namespace serre::ideal
