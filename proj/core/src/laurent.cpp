#include "opuc/laurent.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "opuc/errors.hpp"

namespace opuc {

LaurentPoly::LaurentPoly(Rational constant) {
  if (!constant.is_zero()) terms_.emplace(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int exponent) {
  LaurentPoly f;
  f.set_coeff(exponent, coeff);
  return f;
}

LaurentPoly LaurentPoly::from_coefficients(int min_exp, const std::vector<Rational>& coeffs) {
  LaurentPoly f;
  for (std::size_t i = 0; i < coeffs.size(); ++i) f.set_coeff(min_exp + static_cast<int>(i), coeffs[i]);
  return f;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational{} : it->second;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of the zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of the zero Laurent polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::set_coeff(int exponent, const Rational& value) {
  if (value.is_zero()) {
    terms_.erase(exponent);
  } else {
    terms_[exponent] = value;
  }
}

void LaurentPoly::add_term(int exponent, const Rational& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LaurentPoly::add_scaled(const LaurentPoly& g, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [k, v] : g.terms_) add_term(k, v * c);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly r;
  for (const auto& [i, a] : lhs.terms_) {
    for (const auto& [j, b] : rhs.terms_) r.add_term(i + j, a * b);
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

namespace {

std::string monomial_text(const Rational& c, int k) {
  if (k == 0) return c.to_string();
  std::string zpart = k == 1 ? "z" : "z^" + std::to_string(k);
  if (c == Rational{1}) return zpart;
  if (c == Rational{-1}) return "-" + zpart;
  return c.to_string() + "*" + zpart;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first) {
      out += monomial_text(c, k);
      first = false;
    } else if (c.sign() < 0) {
      out += " - " + monomial_text(-c, k);
    } else {
      out += " + " + monomial_text(c, k);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  // Grammar: term (('+'|'-') term)*, term := [coeff '*'] 'z' ['^' int] | coeff.
  LaurentPoly result;
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty Laurent polynomial text");
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("bad Laurent polynomial '" + std::string(text) + "': " + why);
  };
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    std::size_t end = pos;
    // A term ends at the next '+'/'-' that is not part of an exponent or fraction.
    while (end < s.size()) {
      if ((s[end] == '+' || s[end] == '-') && end > pos && s[end - 1] != '^' && s[end - 1] != '/') break;
      ++end;
    }
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) fail("empty term");
    Rational coeff{1};
    int exponent = 0;
    const auto zpos = term.find('z');
    if (zpos == std::string::npos) {
      coeff = Rational::parse(term);
    } else {
      if (zpos > 0) {
        if (term[zpos - 1] != '*') fail("expected '*' before z");
        coeff = Rational::parse(term.substr(0, zpos - 1));
      }
      std::string rest = term.substr(zpos + 1);
      if (rest.empty()) {
        exponent = 1;
      } else {
        if (rest.front() != '^') fail("expected '^' after z");
        try {
          std::size_t used = 0;
          exponent = std::stoi(rest.substr(1), &used);
          if (used != rest.size() - 1) fail("trailing characters in exponent");
        } catch (const std::logic_error&) {
          fail("bad exponent");
        }
      }
    }
    result.add_term(exponent, sign < 0 ? -coeff : coeff);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << f.to_string(); }

LaurentPoly z_poly() { return LaurentPoly::monomial(Rational{1}, 1); }
LaurentPoly z_pow(int k) { return LaurentPoly::monomial(Rational{1}, k); }
LaurentPoly x_of_z() { return z_pow(1) + z_pow(-1); }

LaurentPoly reflect(const LaurentPoly& f) {
  LaurentPoly r;
  for (const auto& [k, c] : f.terms()) r.set_coeff(-k, c);
  return r;
}

LaurentPoly mul_z(const LaurentPoly& f) { return shift(f, 1); }

LaurentPoly shift(const LaurentPoly& f, int k) {
  LaurentPoly r;
  for (const auto& [e, c] : f.terms()) r.set_coeff(e + k, c);
  return r;
}

LaurentPoly theta(const LaurentPoly& f) {
  LaurentPoly r;
  for (const auto& [k, c] : f.terms()) r.set_coeff(k, c * Rational{k});
  return r;
}

LaurentPoly derivative(const LaurentPoly& f) {
  LaurentPoly r;
  for (const auto& [k, c] : f.terms()) r.set_coeff(k - 1, c * Rational{k});
  return r;
}

LaurentPoly div_exact(const LaurentPoly& f, const LaurentPoly& d) {
  if (d.is_zero()) throw ZeroArgument("Laurent division by the zero polynomial");
  if (f.is_zero()) return {};
  // Write f = z^fmin F and d = z^dmin D with F(0), D(0) != 0; a Laurent
  // quotient exists iff D divides F as ordinary polynomials.
  const int fmin = f.min_exp();
  const int dmin = d.min_exp();
  const int ddeg = d.max_exp() - dmin;
  std::vector<Rational> rem(static_cast<std::size_t>(f.max_exp() - fmin + 1));
  for (const auto& [k, c] : f.terms()) rem[static_cast<std::size_t>(k - fmin)] = c;
  std::vector<Rational> den(static_cast<std::size_t>(ddeg + 1));
  for (const auto& [k, c] : d.terms()) den[static_cast<std::size_t>(k - dmin)] = c;

  const int fdeg = static_cast<int>(rem.size()) - 1;
  if (fdeg < ddeg) throw NotDivisible("no Laurent quotient: " + f.to_string() + " / " + d.to_string());
  std::vector<Rational> quot(static_cast<std::size_t>(fdeg - ddeg + 1));
  const Rational lead_inv = den.back().reciprocal();
  for (int i = fdeg - ddeg; i >= 0; --i) {
    const Rational q = rem[static_cast<std::size_t>(i + ddeg)] * lead_inv;
    quot[static_cast<std::size_t>(i)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= ddeg; ++j) rem[static_cast<std::size_t>(i + j)] -= q * den[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) throw NotDivisible("no Laurent quotient: " + f.to_string() + " / " + d.to_string());
  }
  return LaurentPoly::from_coefficients(fmin - dmin, quot);
}

Rational eval(const LaurentPoly& f, const Rational& z0) {
  if (z0.is_zero()) throw ZeroArgument("Laurent polynomial evaluated at z = 0");
  Rational sum;
  for (const auto& [k, c] : f.terms()) sum += c * pow(z0, k);
  return sum;
}

}  // namespace opuc
