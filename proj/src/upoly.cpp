#include "ghp/detail/upoly.hpp"

#include <stdexcept>

namespace ghp::detail {

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }
int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly derivative(const ZPoly& p) {
  ZPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

ZPoly primitive_part(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0 || g == 1) return p;
  ZPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c / g);
  return out;
}

QPoly to_rational(const ZPoly& p) {
  QPoly q;
  q.reserve(p.size());
  for (const auto& c : p) q.emplace_back(c);
  return q;
}

ZPoly to_primitive_integer(const QPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  z.reserve(p.size());
  for (const auto& c : p) {
    mpq_class scaled = c * l;
    z.push_back(scaled.get_num());
  }
  trim(z);
  return primitive_part(z);
}

QPoly monic(const QPoly& p) {
  if (p.empty()) return p;
  QPoly out(p);
  const mpq_class lc = p.back();
  for (auto& c : out) c /= lc;
  return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] -= b[i];
  }
  trim(out);
  return out;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  remainder = a;
  trim(remainder);
  const int db = degree(b);
  quotient.assign(remainder.size() >= b.size() ? remainder.size() - b.size() + 1 : 0, mpq_class(0));
  while (degree(remainder) >= db) {
    const int shift = degree(remainder) - db;
    const mpq_class factor = remainder.back() / b.back();
    quotient[shift] = factor;
    for (int i = 0; i <= db; ++i) remainder[shift + i] -= factor * b[i];
    remainder.pop_back();  // leading term cancels exactly
    trim(remainder);
  }
  trim(quotient);
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  QPoly q, rem;
  divmod(a, b, q, rem);
  if (!rem.empty()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    QPoly q, rem;
    divmod(x, y, q, rem);
    x = std::move(y);
    y = monic(rem);
  }
  return monic(x);
}

std::vector<QPoly> squarefree_factors(const QPoly& p) {
  std::vector<QPoly> factors;
  QPoly f = monic(p);
  if (degree(f) < 1) return factors;
  QPoly fp = derivative(f);
  QPoly a = gcd(f, fp);
  QPoly b = exact_div(f, a);
  QPoly c = exact_div(fp, a);
  QPoly d = sub(c, derivative(b));
  while (degree(b) >= 1) {
    QPoly ai = gcd(b, d);
    factors.push_back(ai);
    b = exact_div(b, ai);
    c = exact_div(d, ai);
    d = sub(c, derivative(b));
  }
  return factors;
}

int sign_at(const ZPoly& p, const mpq_class& x) {
  // b^d p(a/b) = sum p_i a^i b^{d-i}, b > 0
  if (p.empty()) return 0;
  const mpz_class& a = x.get_num();
  const mpz_class& b = x.get_den();
  mpz_class acc = p.back();
  mpz_class bpow = 1;
  for (int i = degree(p) - 1; i >= 0; --i) {
    bpow *= b;
    acc = acc * a + p[i] * bpow;
  }
  return sgn(acc);
}

int sign_at_infinity(const ZPoly& p) { return p.empty() ? 0 : sgn(p.back()); }

namespace {

// lc(b)^{deg a - deg b + 1} * a mod b, over Z.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  ZPoly rem = a;
  const int db = degree(b);
  const mpz_class& lc = b.back();
  int steps = degree(a) - db + 1;
  while (degree(rem) >= db) {
    const int shift = degree(rem) - db;
    const mpz_class lead = rem.back();
    for (auto& c : rem) c *= lc;
    for (int i = 0; i <= db; ++i) rem[shift + i] -= lead * b[i];
    rem.pop_back();
    trim(rem);
    --steps;
  }
  // Pad to the full lc^{delta+1} multiplier so the sign bookkeeping is exact.
  for (; steps > 0; --steps)
    for (auto& c : rem) c *= lc;
  return rem;
}

}  // namespace

std::vector<ZPoly> sturm_sequence(const ZPoly& p) {
  std::vector<ZPoly> seq;
  ZPoly head = p;
  trim(head);
  if (head.empty()) return seq;
  seq.push_back(primitive_part(head));
  ZPoly d = derivative(seq.back());
  if (d.empty()) return seq;
  seq.push_back(primitive_part(d));
  while (true) {
    const ZPoly& a = seq[seq.size() - 2];
    const ZPoly& b = seq.back();
    ZPoly rem = pseudo_remainder(a, b);
    if (rem.empty()) break;
    const int delta = degree(a) - degree(b);
    const bool flip = sgn(b.back()) < 0 && (delta + 1) % 2 == 1;
    // next = -rem(a, b) up to a positive factor
    if (!flip)
      for (auto& c : rem) c = -c;
    seq.push_back(primitive_part(rem));
  }
  return seq;
}

namespace {
int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}
}  // namespace

int sign_variations(const std::vector<ZPoly>& seq, const mpq_class& x) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& p : seq) signs.push_back(sign_at(p, x));
  return count_changes(signs);
}

int sign_variations_at_infinity(const std::vector<ZPoly>& seq) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& p : seq) signs.push_back(sign_at_infinity(p));
  return count_changes(signs);
}

int count_roots(const std::vector<ZPoly>& seq, const mpq_class& lo, const mpq_class& hi) {
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

mpq_class root_bound(const ZPoly& p) {
  if (degree(p) < 1) return 1;
  mpq_class m = 0;
  for (int i = 0; i < degree(p); ++i) {
    mpq_class ratio(abs(p[i]), abs(p.back()));
    ratio.canonicalize();
    if (ratio > m) m = ratio;
  }
  mpq_class bound = 1 + m;
  mpq_class pow2 = 1;
  while (pow2 <= bound) pow2 *= 2;
  return pow2;
}

ZPoly reflect(const ZPoly& p) {
  ZPoly out(p);
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return out;
}

}  // namespace ghp::detail
