#include "retoric/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace retoric {

namespace {
constexpr char kVarNames[4] = {'x', 'y', 'z', 't'};
}

CountPolynomial CountPolynomial::constant(Int c) { return monomial(0, 0, 0, 0, std::move(c)); }

CountPolynomial CountPolynomial::monomial(int ex, int ey, int ez, int et, Int c) {
  CountPolynomial p;
  p.add_term({ex, ey, ez, et}, c);
  return p;
}

void CountPolynomial::add_term(const Exp& e, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CountPolynomial CountPolynomial::operator+(const CountPolynomial& o) const {
  CountPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

CountPolynomial& CountPolynomial::operator+=(const CountPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CountPolynomial CountPolynomial::operator-(const CountPolynomial& o) const {
  CountPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, Int(-c));
  return r;
}

CountPolynomial CountPolynomial::operator*(const CountPolynomial& o) const {
  CountPolynomial r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exp e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
      r.add_term(e, c1 * c2);
    }
  return r;
}

Int CountPolynomial::coeff(int ex, int ey, int ez, int et) const {
  auto it = terms_.find({ex, ey, ez, et});
  return it == terms_.end() ? Int(0) : it->second;
}

int CountPolynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
  return d;
}

CountPolynomial CountPolynomial::substitute(
    const std::array<std::optional<CountPolynomial>, 4>& repl) const {
  CountPolynomial out;
  for (const auto& [e, c] : terms_) {
    CountPolynomial term = constant(c);
    for (int v = 0; v < 4; ++v) {
      if (e[v] == 0) continue;
      CountPolynomial base = repl[v] ? *repl[v]
                                     : monomial(v == 0, v == 1, v == 2, v == 3);
      for (int k = 0; k < e[v]; ++k) term = term * base;
    }
    out += term;
  }
  return out;
}

Int CountPolynomial::evaluate(const std::array<Int, 4>& vals) const {
  Int total = 0;
  for (const auto& [e, c] : terms_) {
    Int t = c;
    for (int v = 0; v < 4; ++v)
      for (int k = 0; k < e[v]; ++k) t *= vals[v];
    total += t;
  }
  return total;
}

namespace {

void print_term(std::ostringstream& os, const CountPolynomial::Exp& e, const Int& c, bool first) {
  Int a = c;
  if (first) {
    if (a < 0) {
      os << "-";
      a = -a;
    }
  } else {
    os << (a < 0 ? "-" : "+");
    if (a < 0) a = -a;
  }
  bool has_var = e[0] || e[1] || e[2] || e[3];
  if (a != 1 || !has_var) os << a;
  for (int v = 0; v < 4; ++v) {
    if (!e[v]) continue;
    os << kVarNames[v];
    if (e[v] > 1) os << "^" << e[v];
  }
}

std::string print_sorted(const std::map<CountPolynomial::Exp, Int>& terms, bool ascending) {
  if (terms.empty()) return "0";
  std::vector<std::pair<CountPolynomial::Exp, Int>> v(terms.begin(), terms.end());
  std::sort(v.begin(), v.end(), [&](const auto& l, const auto& r) {
    int dl = l.first[0] + l.first[1] + l.first[2] + l.first[3];
    int dr = r.first[0] + r.first[1] + r.first[2] + r.first[3];
    if (dl != dr) return ascending ? dl < dr : dl > dr;
    return l.first > r.first;  // within a degree: x before y before z before t
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : v) {
    print_term(os, e, c, first);
    first = false;
  }
  return os.str();
}

}  // namespace

std::string CountPolynomial::to_string() const { return print_sorted(terms_, false); }

std::string CountPolynomial::to_string_ascending() const { return print_sorted(terms_, true); }

}  // namespace retoric
