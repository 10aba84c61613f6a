#include "knotarc/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace knotarc {

LaurentPoly2 LaurentPoly2::constant(long long c) { return monomial(0, 0, c); }

LaurentPoly2 LaurentPoly2::monomial(int v_exp, int z_exp, long long c) {
  LaurentPoly2 p;
  if (c != 0) p.terms_[{v_exp, z_exp}] = c;
  return p;
}

void LaurentPoly2::set(Exp e, long long c) {
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    long long s = (it == terms_.end() ? 0 : it->second) + c;
    set(e, s);
  }
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    long long s = (it == terms_.end() ? 0 : it->second) - c;
    set(e, s);
  }
  return *this;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  r += o;
  return r;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
  LaurentPoly2 r = *this;
  r -= o;
  return r;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
  LaurentPoly2 r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exp e{e1.first + e2.first, e1.second + e2.second};
      auto it = r.terms_.find(e);
      long long s = (it == r.terms_.end() ? 0 : it->second) + c1 * c2;
      r.set(e, s);
    }
  return r;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& o) {
  *this = *this * o;
  return *this;
}

void LaurentPoly2::shift(int dv, int dz, long long c) {
  Map out;
  for (const auto& [e, k] : terms_)
    if (k * c != 0) out[{e.first + dv, e.second + dz}] = k * c;
  terms_ = std::move(out);
}

long long LaurentPoly2::coeff(int v_exp, int z_exp) const {
  auto it = terms_.find({v_exp, z_exp});
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly2::min_v() const {
  if (terms_.empty()) throw std::domain_error("v-degree of zero polynomial");
  int m = terms_.begin()->first.first;
  for (const auto& [e, c] : terms_) m = std::min(m, e.first);
  return m;
}

int LaurentPoly2::max_v() const {
  if (terms_.empty()) throw std::domain_error("v-degree of zero polynomial");
  int m = terms_.begin()->first.first;
  for (const auto& [e, c] : terms_) m = std::max(m, e.first);
  return m;
}

std::string LaurentPoly2::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    long long a = c < 0 ? -c : c;
    bool havevar = e.first != 0 || e.second != 0;
    if (a != 1 || !havevar) os << a;
    if (e.first != 0) os << "v^" << e.first;
    if (e.second != 0) os << "z^" << e.second;
    first = false;
  }
  return os.str();
}

std::string LaurentPoly2::json() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << ",";
    os << "[" << e.first << "," << e.second << "," << c << "]";
    first = false;
  }
  os << "]";
  return os.str();
}

}  // namespace knotarc
