#include "bracekit/probability.hpp"

#include <numeric>
#include <stdexcept>

namespace bracekit {

CentralizerSuite centralizer_suite(const SkewBrace& b, Element x) {
  if (x >= b.order()) {
    throw BraceError(ErrorKind::IndexOutOfRange, "element " + std::to_string(x));
  }
  const Element n = b.order();
  std::vector<Element> cb, cbl, cbr, fl, fr;
  for (Element y = 0; y < n; ++y) {
    const bool fix_l = b.lambda(y, x) == x;
    const bool fix_r = b.lambda(x, y) == y;
    const bool comm_circ = b.circ(x, y) == b.circ(y, x);
    const bool comm_plus = b.plus(x, y) == b.plus(y, x);
    if (fix_l) fl.push_back(y);
    if (fix_r) fr.push_back(y);
    if (fix_l && comm_circ) cbl.push_back(y);
    if (fix_r && comm_plus) cbr.push_back(y);
    if (b.star(x, y) == 0 && b.gamma_circ(x, y) == 0 && b.gamma_plus(x, y) == 0) cb.push_back(y);
  }
  CentralizerSuite s{ElementSet(n, std::move(cb)), ElementSet(n, std::move(cbl)),
                     ElementSet(n, std::move(cbr)), ElementSet(n, std::move(fl)),
                     ElementSet(n, std::move(fr))};
  if (s.cb != s.cb_left.intersect(s.cb_right)) {
    throw std::logic_error("Cb(x) differs from Cbˡ(x) ∩ Cbʳ(x)");
  }
  if (!is_subgroup(b.multiplicative(), s.cb)) {
    throw std::logic_error("Cb(x) is not a subgroup of (B,∘)");
  }
  return s;
}

ElementSet brace_centralizer(const SkewBrace& b, Element x) {
  std::vector<Element> cb;
  for (Element y = 0; y < b.order(); ++y) {
    if (b.star(x, y) == 0 && b.gamma_circ(x, y) == 0 && b.gamma_plus(x, y) == 0) cb.push_back(y);
  }
  return ElementSet(b.order(), std::move(cb));
}

Rational commuting_probability(const SkewBrace& b) {
  const Element n = b.order();
  std::int64_t pairs = 0;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (b.star(x, y) == 0 && b.star(y, x) == 0 && b.gamma_plus(x, y) == 0) ++pairs;
    }
  }
  std::int64_t centralizer_sum = 0;
  for (Element x = 0; x < n; ++x) {
    centralizer_sum += static_cast<std::int64_t>(brace_centralizer(b, x).size());
  }
  if (pairs != centralizer_sum) {
    throw std::logic_error("pair count and centralizer sum disagree");
  }
  const std::int64_t nn = std::int64_t{n} * n;
  return make_rational(pairs, nn);
}

Rational cyclic_pb_formula(Element n, Element d) {
  if (!is_valid_cyclic_parameter(n, d)) {
    throw BraceError(ErrorKind::BadCyclicParameter,
                     "d = " + std::to_string(d) + ", n = " + std::to_string(n));
  }
  std::int64_t sum = 0;
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t t = (std::uint64_t{d} * x) % n;
    sum += t == 0 ? n : std::gcd(t, std::uint64_t{n});
  }
  return make_rational(sum, std::int64_t{n} * n);
}

// ---------------------------------------------------------------------------

bool is_prime(Element n) {
  if (n < 2) return false;
  for (Element p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<Element> prime_divisors(Element n) {
  std::vector<Element> out;
  for (Element p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Element smallest_prime_divisor(Element n) {
  const auto ps = prime_divisors(n);
  return ps.empty() ? 0 : ps.front();
}

bool is_prime_power(Element n) { return prime_divisors(n).size() == 1; }

bool BoundReport::all_hold() const {
  for (const auto& c : checks) {
    if (c.applicable && !c.holds) return false;
  }
  return true;
}

const BoundCheck* BoundReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

bool is_elementary_abelian(const GroupTable& g, Element p) {
  if (!g.is_abelian()) return false;
  for (Element x = 1; x < g.order(); ++x) {
    if (g.element_order(x) != p) return false;
  }
  return true;
}

Rational pow_int(Element base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return Rational(r);
}

BoundCheck leq(std::string name, bool applicable, Rational lhs, Rational rhs) {
  const bool holds = !applicable || lhs <= rhs;
  return {std::move(name), applicable, holds, std::move(lhs), std::move(rhs), "<="};
}

BoundCheck less(std::string name, bool applicable, Rational lhs, Rational rhs) {
  const bool holds = !applicable || lhs < rhs;
  return {std::move(name), applicable, holds, std::move(lhs), std::move(rhs), "<"};
}

BoundCheck equal(std::string name, bool applicable, Rational lhs, Rational rhs) {
  const bool holds = !applicable || lhs == rhs;
  return {std::move(name), applicable, holds, std::move(lhs), std::move(rhs), "="};
}

}  // namespace

BoundReport bound_report(const SkewBrace& b) {
  BoundReport r;
  const Element n = b.order();
  const ElementSet ann = annihilator(b);
  const auto a = static_cast<Element>(ann.size());
  r.order = n;
  r.d = n / a;
  r.pb = commuting_probability(b);
  const Rational pb = r.pb;
  const Rational d(r.d);
  const Rational bn(n);

  std::vector<Element> cb_sizes(n);
  for (Element x = 0; x < n; ++x) cb_sizes[x] = static_cast<Element>(brace_centralizer(b, x).size());

  r.checks.push_back(leq("card-lower", n > 1, Rational(2) / bn, pb));
  r.checks.push_back(leq("index-lower", true, (2 * d - 1) / (d * d), pb));
  r.checks.push_back(leq("index-upper", true, pb, (d + 1) / (2 * d)));
  {
    const Rational pr_add = group_commuting_probability(b.additive());
    const Rational pr_mul = group_commuting_probability(b.multiplicative());
    r.checks.push_back(leq("group-min", true, pb, pr_add < pr_mul ? pr_add : pr_mul));
  }

  // Largest centralizer of an element outside Ann(B).
  Element max_outer = 0;
  bool all_proper_over_ann = r.d > 1;
  for (Element x = 0; x < n; ++x) {
    if (ann.contains(x)) continue;
    max_outer = std::max(max_outer, cb_sizes[x]);
    if (cb_sizes[x] == a) all_proper_over_ann = false;
  }
  r.checks.push_back(less("outer-centralizer", r.d > 1, pb, Rational(2 * max_outer) / bn));

  const Element p = smallest_prime_divisor(n);
  if (p != 0) {
    const Rational rp(p);
    r.checks.push_back(leq("prime-upper", true, pb, (rp + d - 1) / (rp * d)));
    r.checks.push_back(
        leq("prime-upper-chain", r.d > 1, (rp + d - 1) / (rp * d), (2 * rp - 1) / (rp * rp)));
    r.checks.push_back(leq("proper-centralizer-lower", all_proper_over_ann,
                           (rp * d + d - rp) / (d * d), pb));

    const auto d_primes = prime_divisors(r.d);
    const auto n_primes = prime_divisors(n);
    const bool non_prime_power_quotient = d_primes.size() >= 2;
    Rational bound3;
    if (non_prime_power_quotient) {
      const Element q = n_primes[1];
      const Element s = std::min<Element>(q, p * p);
      bound3 = Rational(1) / rp + (Rational(a) * (rp - 1) - 1) / (rp * bn) +
               Rational(1) / (Rational(s) * bn);
    }
    r.checks.push_back(leq("non-prime-power-upper", non_prime_power_quotient, pb, bound3));

    const bool p_group = n_primes.size() == 1;
    unsigned exponent = 0;
    for (Element m = n; p_group && m > 1; m /= p) ++exponent;
    {
      const Rational two_over = (2 * rp - 1) / (rp * rp);
      const Rational rhs = (rp * rp + rp - 1) / (rp * rp * rp);
      BoundCheck c = leq("prime-power-trichotomy", p_group, pb, rhs);
      c.holds = !p_group || pb == 1 || pb == two_over || pb <= rhs;
      r.checks.push_back(std::move(c));
    }
    const bool frattini =
        p_group && a == 1 && !is_elementary_abelian(b.multiplicative(), p);
    Rational bound5;
    if (frattini) bound5 = Rational(1) / rp + Rational((p - 1) * (p - 1)) / pow_int(p, exponent + 2);
    r.checks.push_back(leq("frattini-upper", frattini, pb, bound5));
  }

  if (is_prime(r.d)) {
    r.checks.push_back(equal("prime-index-exact", true, pb, (2 * d - 1) / (d * d)));
  } else {
    r.checks.push_back(equal("prime-index-exact", false, pb, Rational(0)));
  }

  {
    BoundCheck c = leq("gap", true, pb, Rational(5, 8));
    c.holds = pb == 1 || pb == Rational(3, 4) || pb <= Rational(5, 8);
    r.checks.push_back(std::move(c));
  }
  return r;
}

const char* to_string(GapClass c) {
  switch (c) {
    case GapClass::One: return "ONE";
    case GapClass::ThreeQuarters: return "THREE_QUARTERS";
    case GapClass::AtMostFiveEighths: return "AT_MOST_5_8";
  }
  return "?";
}

GapClass gap_classify(const SkewBrace& b) {
  const Rational pb = commuting_probability(b);
  const ElementSet ann = annihilator(b);
  const Element n = b.order();
  const Element d = n / static_cast<Element>(ann.size());
  auto fail = [&](const std::string& why) {
    throw BraceError(ErrorKind::GapViolation, why + " (Pb = " + to_string(pb) + ")");
  };
  if ((pb == 1) != (d == 1)) fail("Pb = 1 must coincide with Ann(B) = B");
  if ((pb == Rational(3, 4)) != (d == 2)) fail("Pb = 3/4 must coincide with |B/Ann(B)| = 2");
  bool outer_half = d == 4;
  for (Element x = 0; x < n && outer_half; ++x) {
    if (!ann.contains(x) && 2 * brace_centralizer(b, x).size() != n) outer_half = false;
  }
  if ((pb == Rational(5, 8)) != outer_half) {
    fail("Pb = 5/8 must coincide with d = 4 and |Cb(x)| = |B|/2 outside Ann(B)");
  }
  if (pb == 1) return GapClass::One;
  if (pb == Rational(3, 4)) return GapClass::ThreeQuarters;
  if (pb <= Rational(5, 8)) return GapClass::AtMostFiveEighths;
  fail("Pb lies in (5/8, 1) \\ {3/4}");
  return GapClass::AtMostFiveEighths;
}

BraceReport brace_report(const SkewBrace& b) {
  SocleData s = socle_and_annihilator(b);
  BraceReport r;
  r.ker_lambda = std::move(s.ker_lambda);
  r.socle = std::move(s.socle);
  r.annihilator = std::move(s.annihilator);
  r.flags = structure_flags(b);
  r.nilpotency_class = nilpotency(b);
  r.pb = commuting_probability(b);
  return r;
}

}  // namespace bracekit
