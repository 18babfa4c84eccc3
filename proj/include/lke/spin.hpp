#pragma once

#include <boost/rational.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lke {

using Rational = boost::rational<long long>;

// Exact scalar a + b*sqrt(2). Closed under the ring operations and under
// division, which is all the spin basis changes require.
struct QSqrt2 {
  Rational a{0};
  Rational b{0};

  constexpr QSqrt2() = default;
  QSqrt2(Rational a_, Rational b_ = Rational{0}) : a(a_), b(b_) {}
  QSqrt2(long long n) : a(n) {}

  static QSqrt2 inv_sqrt2() { return QSqrt2{Rational{0}, Rational{1, 2}}; }

  QSqrt2 operator+(const QSqrt2& o) const { return {a + o.a, b + o.b}; }
  QSqrt2 operator-(const QSqrt2& o) const { return {a - o.a, b - o.b}; }
  QSqrt2 operator-() const { return {-a, -b}; }
  QSqrt2 operator*(const QSqrt2& o) const {
    return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
  }
  QSqrt2 operator/(const QSqrt2& o) const;
  bool operator==(const QSqrt2& o) const = default;

  bool is_zero() const { return a == Rational{0} && b == Rational{0}; }
  double to_double() const;
  std::string to_string() const;  // "p/q + r/s*sqrt(2)"
};

enum class SpinAxis { Z, X };

struct ZeroProjection : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroState : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IrrationalProbability : std::logic_error {
  using std::logic_error::logic_error;
};

// Unnormalised multi-site spin-1/2 state with a per-site quantisation axis.
// Basis labels are strings of '+'/'-'; absent labels carry zero amplitude.
class SpinState {
 public:
  SpinState() = default;
  SpinState(std::vector<SpinAxis> axes,
            std::map<std::string, QSqrt2> amplitudes);

  // Single-site kets: |+z> = up, |-z> = down, |+x> = right, |-x> = left.
  static SpinState basis(SpinAxis axis, char sign, QSqrt2 amp = QSqrt2{1});

  std::size_t n_sites() const { return axes_.size(); }
  SpinAxis axis(std::size_t site) const { return axes_.at(site); }
  const std::map<std::string, QSqrt2>& amplitudes() const { return amps_; }
  QSqrt2 amplitude(const std::string& label) const;
  bool is_zero() const { return amps_.empty(); }

  SpinState operator+(const SpinState& o) const;
  SpinState operator-(const SpinState& o) const;
  SpinState scaled(const QSqrt2& c) const;
  bool operator==(const SpinState& o) const = default;

  // Sum of |amplitude|^2 as an exact QSqrt2.
  QSqrt2 norm_sq() const;

  std::string to_string() const;

 private:
  std::vector<SpinAxis> axes_;
  std::map<std::string, QSqrt2> amps_;  // zero amplitudes are pruned

  friend SpinState tensor(const SpinState&, const SpinState&);
  friend SpinState change_basis(const SpinState&, std::size_t, SpinAxis);
  friend SpinState project(const SpinState&, std::size_t, char);
};

SpinState tensor(const SpinState& s, const SpinState& t);

// Rewrites one site in the other axis via |+z> = (|+x> + |-x>)/sqrt(2),
// |-z> = (|+x> - |-x>)/sqrt(2) (the substitution is its own inverse).
SpinState change_basis(const SpinState& s, std::size_t site, SpinAxis to);

SpinState change_basis_all(const SpinState& s, SpinAxis to);

// Keeps only the amplitudes matching the outcome at the measured site;
// unnormalised. The site must already be expressed in the measured axis.
SpinState project(const SpinState& s, std::size_t site, char outcome);

// Marginal Born probabilities for the listed sites, exact rationals
// summing to 1.
std::map<std::string, Rational> outcome_probabilities(
    const SpinState& s, const std::vector<std::size_t>& sites);

}  // namespace lke
