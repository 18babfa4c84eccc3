#include "lke/spin.hpp"

#include <cmath>
#include <sstream>

namespace lke {
namespace {

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

}  // namespace

QSqrt2 QSqrt2::operator/(const QSqrt2& o) const {
  // (a+b*sqrt2)^-1 = (a-b*sqrt2)/(a^2-2b^2); the norm vanishes only for 0.
  const Rational norm = o.a * o.a - 2 * o.b * o.b;
  if (norm == Rational{0}) throw std::domain_error("QSqrt2: division by zero");
  return *this * QSqrt2{o.a / norm, -o.b / norm};
}

double QSqrt2::to_double() const {
  return boost::rational_cast<double>(a) +
         boost::rational_cast<double>(b) * std::sqrt(2.0);
}

std::string QSqrt2::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  const Rational zero{0};
  if (a != zero) os << rational_str(a);
  if (b != zero) {
    if (a != zero) {
      os << (b > zero ? " + " : " - ") << rational_str(b > zero ? b : -b);
    }
    else os << rational_str(b);
    os << "*sqrt(2)";
  }
  return os.str();
}

SpinState::SpinState(std::vector<SpinAxis> axes,
                     std::map<std::string, QSqrt2> amplitudes)
    : axes_(std::move(axes)) {
  for (auto& [label, amp] : amplitudes) {
    if (label.size() != axes_.size()) {
      throw std::invalid_argument("SpinState: label length != site count");
    }
    for (char c : label) {
      if (c != '+' && c != '-') {
        throw std::invalid_argument("SpinState: labels use '+'/'-' only");
      }
    }
    if (!amp.is_zero()) amps_.emplace(label, amp);
  }
}

SpinState SpinState::basis(SpinAxis axis, char sign, QSqrt2 amp) {
  return SpinState{{axis}, {{std::string(1, sign), amp}}};
}

QSqrt2 SpinState::amplitude(const std::string& label) const {
  auto it = amps_.find(label);
  return it == amps_.end() ? QSqrt2{} : it->second;
}

SpinState SpinState::operator+(const SpinState& o) const {
  if (axes_ != o.axes_) {
    throw std::invalid_argument("SpinState: axis mismatch in sum");
  }
  std::map<std::string, QSqrt2> out = amps_;
  for (const auto& [label, amp] : o.amps_) {
    auto [it, inserted] = out.emplace(label, amp);
    if (!inserted) {
      it->second = it->second + amp;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  SpinState r;
  r.axes_ = axes_;
  r.amps_ = std::move(out);
  return r;
}

SpinState SpinState::operator-(const SpinState& o) const {
  return *this + o.scaled(QSqrt2{-1});
}

SpinState SpinState::scaled(const QSqrt2& c) const {
  SpinState r;
  r.axes_ = axes_;
  if (c.is_zero()) return r;
  for (const auto& [label, amp] : amps_) r.amps_.emplace(label, amp * c);
  return r;
}

QSqrt2 SpinState::norm_sq() const {
  QSqrt2 total;
  for (const auto& [label, amp] : amps_) total = total + amp * amp;
  return total;
}

std::string SpinState::to_string() const {
  if (amps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, amp] : amps_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << amp.to_string() << ")|";
    for (std::size_t i = 0; i < label.size(); ++i) {
      os << label[i] << (axes_[i] == SpinAxis::Z ? 'z' : 'x');
    }
    os << ">";
  }
  return os.str();
}

SpinState tensor(const SpinState& s, const SpinState& t) {
  SpinState r;
  r.axes_ = s.axes_;
  r.axes_.insert(r.axes_.end(), t.axes_.begin(), t.axes_.end());
  for (const auto& [ls, as] : s.amps_) {
    for (const auto& [lt, at] : t.amps_) {
      r.amps_.emplace(ls + lt, as * at);
    }
  }
  return r;
}

SpinState change_basis(const SpinState& s, std::size_t site, SpinAxis to) {
  if (site >= s.n_sites()) {
    throw std::out_of_range("change_basis: site out of range");
  }
  if (s.axes_[site] == to) return s;
  SpinState r;
  r.axes_ = s.axes_;
  r.axes_[site] = to;
  const QSqrt2 c = QSqrt2::inv_sqrt2();
  for (const auto& [label, amp] : s.amps_) {
    // |+> -> (|+> + |->)/sqrt2, |-> -> (|+> - |->)/sqrt2 in the new axis
    for (char target : {'+', '-'}) {
      QSqrt2 coeff = (label[site] == '-' && target == '-') ? -c : c;
      std::string new_label = label;
      new_label[site] = target;
      auto [it, inserted] = r.amps_.emplace(new_label, coeff * amp);
      if (!inserted) {
        it->second = it->second + coeff * amp;
        if (it->second.is_zero()) r.amps_.erase(it);
      }
    }
  }
  return r;
}

SpinState change_basis_all(const SpinState& s, SpinAxis to) {
  SpinState r = s;
  for (std::size_t i = 0; i < r.n_sites(); ++i) r = change_basis(r, i, to);
  return r;
}

SpinState project(const SpinState& s, std::size_t site, char outcome) {
  if (site >= s.n_sites()) {
    throw std::out_of_range("project: site out of range");
  }
  SpinState r;
  r.axes_ = s.axes_;
  for (const auto& [label, amp] : s.amps_) {
    if (label[site] == outcome) r.amps_.emplace(label, amp);
  }
  if (r.amps_.empty()) {
    throw ZeroProjection("project: outcome has probability zero");
  }
  return r;
}

std::map<std::string, Rational> outcome_probabilities(
    const SpinState& s, const std::vector<std::size_t>& sites) {
  if (s.is_zero()) throw ZeroState("outcome_probabilities: zero state");
  const QSqrt2 total = s.norm_sq();
  std::map<std::string, QSqrt2> sums;
  for (const auto& [label, amp] : s.amplitudes()) {
    std::string key;
    key.reserve(sites.size());
    for (std::size_t site : sites) key += label.at(site);
    auto [it, inserted] = sums.emplace(key, amp * amp);
    if (!inserted) it->second = it->second + amp * amp;
  }
  std::map<std::string, Rational> probs;
  for (const auto& [key, sum] : sums) {
    const QSqrt2 p = sum / total;
    if (p.b != Rational{0}) {
      throw IrrationalProbability(
          "outcome_probabilities: sqrt(2) part did not cancel");
    }
    probs.emplace(key, p.a);
  }
  return probs;
}

}  // namespace lke
