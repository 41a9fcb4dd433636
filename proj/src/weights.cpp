#include "serre/weights.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace serre {

WallError::WallError(const std::string& root_, Int n_, std::size_t embedding_)
    : std::domain_error("weight on wall H(" + root_ + "," + std::to_string(n_) + ") at embedding " +
                        std::to_string(embedding_)),
      root(root_),
      n(n_),
      embedding(embedding_) {}

std::array<Int, 3> pairings(const Vec3& lam) {
  Vec3 x = lam + kEta;
  return {x[0] - x[1], x[1] - x[2], x[0] - x[2]};
}

namespace {

const char* const kRootNames[3] = {"alpha1", "alpha2", "alpha0"};

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Int ipow(Int base, unsigned e) {
  Int r = 1;
  while (e--) r *= base;
  return r;
}

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

bool AlcoveDescriptor::restricted() const {
  return std::all_of(n.begin(), n.end(), [](const auto& x) { return x[0] == 0 && x[1] == 0; });
}

std::string AlcoveDescriptor::letters() const {
  std::string out;
  for (const auto& x : n) {
    if (x[0] == 0 && x[1] == 0 && x[2] == 0)
      out += 'A';
    else if (x[0] == 0 && x[1] == 0 && x[2] == 1)
      out += 'B';
    else
      out += '?';
  }
  return out;
}

AlcoveDescriptor alcove_of(const FWeight& lam, Int p) {
  AlcoveDescriptor d;
  for (std::size_t j = 0; j < lam.size(); ++j) {
    auto pr = pairings(lam[j]);
    std::array<Int, 3> n{};
    for (int r = 0; r < 3; ++r) {
      if (mod(pr[r], p) == 0) throw WallError(kRootNames[r], pr[r] / p, j);
      n[r] = floor_div(pr[r], p);
    }
    d.n.push_back(n);
  }
  return d;
}

bool is_regular(const FWeight& lam, Int p) {
  for (const auto& l : lam)
    for (Int x : pairings(l))
      if (mod(x, p) == 0) return false;
  return true;
}

bool is_restricted(const FWeight& lam, Int p) {
  for (const auto& l : lam)
    if (l[0] - l[1] < 0 || l[0] - l[1] > p - 1 || l[1] - l[2] < 0 || l[1] - l[2] > p - 1) return false;
  return true;
}

Int depth(const FWeight& lam, Int p) {
  Int best = std::numeric_limits<Int>::max();
  for (std::size_t j = 0; j < lam.size(); ++j) {
    auto pr = pairings(lam[j]);
    for (int r = 0; r < 3; ++r) {
      Int rem = mod(pr[r], p);
      if (rem == 0) throw WallError(kRootNames[r], pr[r] / p, j);
      best = std::min(best, std::min(rem, p - rem) - 1);
    }
  }
  return best;
}

SerreWeightNF serre_nf(const FWeight& lam, Int p) {
  if (!is_restricted(lam, p)) {
    std::string s;
    for (const auto& l : lam) s += to_string(l);
    throw std::domain_error("serre_nf: weight not p-restricted: " + s);
  }
  const std::size_t f = lam.size();
  const Int modulus = ipow(p, static_cast<unsigned>(f)) - 1;
  SerreWeightNF nf{{}, 0, p};
  Int pj = 1;
  for (std::size_t j = 0; j < f; ++j) {
    const Vec3& l = lam[j];
    nf.base.push_back({l[0] - l[2], l[1] - l[2], 0});
    nf.twist = mod(nf.twist + mod(l[2], modulus) * pj, modulus);
    pj *= p;
  }
  return nf;
}

FWeight representative(const SerreWeightNF& nf) {
  FWeight r = nf.base;
  if (!r.empty()) r[0] = r[0] + nf.twist * kOne;
  return r;
}

std::string to_string(const SerreWeightNF& nf) {
  std::ostringstream os;
  os << "F[";
  for (std::size_t j = 0; j < nf.base.size(); ++j) os << (j ? "," : "") << to_string(nf.base[j]);
  os << ";" << nf.twist << "]";
  return os.str();
}

Int central_class(const FWeight& lam, Int p) {
  const Int modulus = ipow(p, static_cast<unsigned>(lam.size())) - 1;
  Int c = 0, pj = 1;
  for (const auto& l : lam) {
    c = mod(c + mod(l[0] + l[1] + l[2], modulus) * pj, modulus);
    pj *= p;
  }
  return c;
}

Int central_class(const SerreWeightNF& nf) { return central_class(representative(nf), nf.p); }

}  // namespace serre
