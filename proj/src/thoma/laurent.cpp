#include "qgm/thoma/laurent.hpp"

#include "qgm/error.hpp"

namespace qgm {

LaurentElement LaurentElement::monomial(const FinAbelian& group, const Coords& lambda, const Rational& c) {
  LaurentElement e(group);
  if (c != 0) e.terms_.emplace(group.reduce(lambda), c);
  return e;
}

Rational LaurentElement::identity_coefficient() const {
  auto it = terms_.find(group_.identity());
  return it == terms_.end() ? Rational(0) : it->second;
}

Cyc LaurentElement::evaluate(const Character& chi) const {
  if (group_.has_free_part()) throw Error(Errc::FreePartPresent, "character evaluation needs a finite group");
  Cyc total;
  for (const auto& [lambda, c] : terms_) total += Cyc(c) * chi(lambda);
  return total;
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& b) {
  for (const auto& [lambda, c] : b.terms_) {
    auto& slot = terms_[lambda];
    slot += c;
    if (slot == 0) terms_.erase(lambda);
  }
  return *this;
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
  if (a.group_ != b.group_) throw Error(Errc::ShapeMismatch, "group algebra elements over different groups");
  LaurentElement r(a.group_);
  for (const auto& [la, ca] : a.terms_) {
    for (const auto& [lb, cb] : b.terms_) {
      auto key = a.group_.add(la, lb);
      auto& slot = r.terms_[key];
      slot += ca * cb;
      if (slot == 0) r.terms_.erase(key);
    }
  }
  return r;
}

std::string LaurentElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [lambda, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += format_rational(c) + "*";
    out += "[";
    for (std::size_t i = 0; i < lambda.size(); ++i) out += (i ? "," : "") + std::to_string(lambda[i]);
    out += "]";
  }
  return out;
}

}  // namespace qgm
