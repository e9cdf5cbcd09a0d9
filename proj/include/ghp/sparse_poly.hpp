#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <type_traits>
#include <utility>

namespace ghp {

/// Univariate polynomial stored as exponent -> coefficient with no explicit
/// zeros. Coeff is an exact ring type (mpz_class, mpq_class) or any type with
/// the usual arithmetic and comparison against 0.
template <typename Coeff>
class SparsePoly {
 public:
  using exponent_type = std::size_t;
  using coeff_type = Coeff;
  using map_type = std::map<exponent_type, Coeff>;

  SparsePoly() = default;
  SparsePoly(const Coeff& constant) { add_term(0, constant); }

  static SparsePoly monomial(exponent_type e, const Coeff& c) {
    SparsePoly p;
    p.add_term(e, c);
    return p;
  }

  /// Adds c*x^e, erasing the entry if it cancels.
  void add_term(exponent_type e, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const map_type& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(exponent_type e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  // Both undefined for the zero polynomial; callers check is_zero() first.
  exponent_type degree() const { return terms_.rbegin()->first; }
  exponent_type lowest_exponent() const { return terms_.begin()->first; }
  const Coeff& leading_coefficient() const { return terms_.rbegin()->second; }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, Coeff(-c));
    return *this;
  }
  SparsePoly& operator*=(const Coeff& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Coeff& s) { return a *= s; }
  friend SparsePoly operator*(const Coeff& s, SparsePoly a) { return a *= s; }
  friend SparsePoly operator-(SparsePoly a) { return a *= Coeff(-1); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, Coeff(ca * cb));
    return out;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

/// p(x) * c * x^k
template <typename Coeff>
SparsePoly<Coeff> shifted(const SparsePoly<Coeff>& p, std::size_t k, const Coeff& c = Coeff(1)) {
  SparsePoly<Coeff> out;
  if (c == 0) return out;
  for (const auto& [e, a] : p.terms()) out.add_term(e + k, Coeff(a * c));
  return out;
}

template <typename Coeff>
SparsePoly<Coeff> derivative(const SparsePoly<Coeff>& p) {
  SparsePoly<Coeff> out;
  for (const auto& [e, c] : p.terms())
    if (e > 0) out.add_term(e - 1, Coeff(c * Coeff(static_cast<unsigned long>(e))));
  return out;
}

namespace detail {

template <typename T, typename Coeff>
T coeff_as(const Coeff& c) {
  if constexpr (std::is_floating_point_v<T> && requires { c.get_d(); })
    return static_cast<T>(c.get_d());
  else
    return T(c);
}

}  // namespace detail

/// Sparse Horner evaluation in any ring T that Coeff converts into.
template <typename T, typename Coeff>
T evaluate(const SparsePoly<Coeff>& p, const T& x) {
  T acc(0);
  if (p.is_zero()) return acc;
  auto pow_gap = [&x](std::size_t k) {
    T result(1), base = x;
    while (k) {
      if (k & 1u) result = result * base;
      k >>= 1u;
      if (k) base = base * base;
    }
    return result;
  };
  auto it = p.terms().rbegin();
  std::size_t current = it->first;
  acc = detail::coeff_as<T>(it->second);
  for (++it; it != p.terms().rend(); ++it) {
    acc = acc * pow_gap(current - it->first) + detail::coeff_as<T>(it->second);
    current = it->first;
  }
  return acc * pow_gap(current);
}

template <typename To, typename From>
SparsePoly<To> convert(const SparsePoly<From>& p) {
  SparsePoly<To> out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, To(c));
  return out;
}

}  // namespace ghp
