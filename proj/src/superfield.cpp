#include "ospcohom/superfield.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ospcohom {

// ---------------------------------------------------------------- Poly

Poly::Poly(Scalar c) {
  if (!c.is_zero()) terms_.emplace(0, std::move(c));
}

Poly Poly::monomial(int exponent, Scalar c) {
  Poly p;
  p.add_term(exponent, c);
  return p;
}

Scalar Poly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar{} : it->second;
}

void Poly::add_term(int exponent, const Scalar& c) {
  if (exponent < 0) throw std::invalid_argument("Poly: negative exponent");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::derivative(int times) const {
  Poly out;
  for (const auto& [e, c] : terms_) {
    if (e < times) continue;
    Scalar factor = 1;
    for (int k = 0; k < times; ++k) factor *= Scalar(e - k);
    out.terms_.emplace(e - times, c * factor);
  }
  return out;
}

Poly Poly::antiderivative() const {
  Poly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + 1, c / Scalar(e + 1));
  return out;
}

Scalar Poly::evaluate(const Scalar& at) const {
  Scalar acc;
  int prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (int k = it->first; k < prev; ++k) acc *= at;
    acc += it->second;
    prev = it->first;
  }
  for (int k = 0; k < prev; ++k) acc *= at;
  return acc;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Scalar mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Scalar(1);
    if (e == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << "x";
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

Poly Poly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  Poly out;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sgn = 1;
    if (s[i] == '+' || s[i] == '-') {
      sgn = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("malformed polynomial: '" + std::string(text) + "'");
    }
    first = false;
    std::size_t end = s.find_first_of("+-", i);
    std::string term = s.substr(i, end == std::string::npos ? std::string::npos : end - i);
    i = end == std::string::npos ? s.size() : end;
    if (term.empty()) throw std::invalid_argument("malformed polynomial: '" + std::string(text) + "'");
    Scalar c = 1;
    int exponent = 0;
    auto xpos = term.find('x');
    if (xpos == std::string::npos) {
      c = Scalar::parse(term);
    } else {
      if (xpos > 0) {
        if (term[xpos - 1] != '*') throw std::invalid_argument("malformed term '" + term + "'");
        c = Scalar::parse(term.substr(0, xpos - 1));
      }
      exponent = 1;
      if (xpos + 1 < term.size()) {
        if (term[xpos + 1] != '^') throw std::invalid_argument("malformed term '" + term + "'");
        exponent = static_cast<int>(Scalar::parse(term.substr(xpos + 2)).to_long());
      }
    }
    out.add_term(exponent, sgn < 0 ? -c : c);
  }
  return out;
}

// ---------------------------------------------------------------- Parity

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

// ---------------------------------------------------------------- SuperFunction

SuperFunction::SuperFunction(Scalar c) { comps_[theta::one] = Poly(std::move(c)); }
SuperFunction::SuperFunction(Poly p) { comps_[theta::one] = std::move(p); }
SuperFunction::SuperFunction(Poly c1, Poly ct1, Poly ct2, Poly ct12)
    : comps_{std::move(c1), std::move(ct1), std::move(ct2), std::move(ct12)} {}

SuperFunction SuperFunction::monomial(int mask, int x_exponent, Scalar c) {
  SuperFunction f;
  f.comps_[mask] = Poly::monomial(x_exponent, std::move(c));
  return f;
}

bool SuperFunction::is_zero() const {
  for (const auto& p : comps_)
    if (!p.is_zero()) return false;
  return true;
}

int SuperFunction::x_degree() const {
  int d = -1;
  for (const auto& p : comps_) d = std::max(d, p.degree());
  return d;
}

SuperFunction SuperFunction::even_part() const {
  return SuperFunction(comps_[0], Poly{}, Poly{}, comps_[3]);
}

SuperFunction SuperFunction::odd_part() const {
  return SuperFunction(Poly{}, comps_[1], comps_[2], Poly{});
}

SuperFunction SuperFunction::sigma() const {
  return SuperFunction(comps_[0], -comps_[1], -comps_[2], comps_[3]);
}

SuperFunction SuperFunction::operator-() const {
  return SuperFunction(-comps_[0], -comps_[1], -comps_[2], -comps_[3]);
}

SuperFunction& SuperFunction::operator+=(const SuperFunction& o) {
  for (int m = 0; m < 4; ++m) comps_[m] += o.comps_[m];
  return *this;
}

SuperFunction& SuperFunction::operator-=(const SuperFunction& o) {
  for (int m = 0; m < 4; ++m) comps_[m] -= o.comps_[m];
  return *this;
}

SuperFunction& SuperFunction::operator*=(const Scalar& c) {
  for (auto& p : comps_) p *= c;
  return *this;
}

SuperFunction operator*(const SuperFunction& a, const SuperFunction& b) {
  SuperFunction out;
  for (int ma = 0; ma < 4; ++ma) {
    if (a.comps_[ma].is_zero()) continue;
    for (int mb = 0; mb < 4; ++mb) {
      if ((ma & mb) != 0 || b.comps_[mb].is_zero()) continue;
      // t2 (in a) must move past t1 (in b) to reach canonical order t1 t2.
      const bool swap = (ma & theta::t2) && (mb & theta::t1);
      Poly prod = a.comps_[ma] * b.comps_[mb];
      if (swap) prod = -prod;
      out.comps_[ma | mb] += prod;
    }
  }
  return out;
}

std::string SuperFunction::str() const {
  static const char* names[4] = {"", "t1", "t2", "t1t2"};
  std::ostringstream os;
  bool any = false;
  for (int m = 0; m < 4; ++m) {
    if (comps_[m].is_zero()) continue;
    if (any) os << " + ";
    any = true;
    if (m == 0) {
      os << "(" << comps_[m].str() << ")";
    } else {
      os << "(" << comps_[m].str() << ")*" << names[m];
    }
  }
  return any ? os.str() : "0";
}

SuperFunction sf_mul(const SuperFunction& f, const SuperFunction& g) { return f * g; }

SuperFunction partial_x(const SuperFunction& f, int times) {
  return SuperFunction(f.component(0).derivative(times), f.component(1).derivative(times),
                       f.component(2).derivative(times), f.component(3).derivative(times));
}

SuperFunction partial_theta(const SuperFunction& f, int i) {
  SuperFunction out;
  if (i == 1) {
    out.component(theta::one) = f.component(theta::t1);
    out.component(theta::t2) = f.component(theta::t12);
  } else if (i == 2) {
    out.component(theta::one) = f.component(theta::t2);
    // d/dt2 (t1 t2) = -t1
    out.component(theta::t1) = -f.component(theta::t12);
  } else {
    throw std::invalid_argument("partial_theta: index must be 1 or 2");
  }
  return out;
}

SuperFunction eta_bar(const SuperFunction& f, int i) {
  const SuperFunction ti = i == 1 ? SuperFunction::t1() : SuperFunction::t2();
  return partial_theta(f, i) - ti * partial_x(f);
}

std::optional<Parity> parity_of(const SuperFunction& f) {
  const bool has_even = !f.component(0).is_zero() || !f.component(3).is_zero();
  const bool has_odd = !f.component(1).is_zero() || !f.component(2).is_zero();
  if (has_even && has_odd) return std::nullopt;
  return has_odd ? Parity::odd : Parity::even;
}

Parity require_parity(const SuperFunction& f, std::string_view context) {
  auto p = parity_of(f);
  if (!p) throw std::invalid_argument(std::string(context) + ": mixed-parity superfunction " + f.str());
  return *p;
}

nlohmann::json to_json(const SuperFunction& f) {
  return nlohmann::json{{"1", f.component(0).str()},
                        {"t1", f.component(1).str()},
                        {"t2", f.component(2).str()},
                        {"t12", f.component(3).str()}};
}

SuperFunction superfunction_from_json(const nlohmann::json& j) {
  return SuperFunction(Poly::parse(j.at("1").get<std::string>()), Poly::parse(j.at("t1").get<std::string>()),
                       Poly::parse(j.at("t2").get<std::string>()), Poly::parse(j.at("t12").get<std::string>()));
}

}  // namespace ospcohom
