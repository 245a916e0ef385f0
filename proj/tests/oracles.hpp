#pragma once

// Brute-force reference computations written directly from the definitions
// against raw tables. They share nothing with the library beyond the table
// accessors and the rational type, so agreement is meaningful.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "bracekit/brace.hpp"

namespace oracle {

using bracekit::Rational;
using Table = std::vector<std::vector<unsigned>>;
using Set = std::vector<unsigned>;

inline Table table_of(const bracekit::GroupTable& g) {
  Table t(g.order(), std::vector<unsigned>(g.order()));
  for (unsigned x = 0; x < g.order(); ++x) {
    for (unsigned y = 0; y < g.order(); ++y) t[x][y] = g.op(x, y);
  }
  return t;
}

inline unsigned inverse(const Table& t, unsigned x) {
  for (unsigned y = 0; y < t.size(); ++y) {
    if (t[x][y] == 0) return y;
  }
  return ~0u;
}

struct Raw {
  Table add, mul;
  unsigned n;

  explicit Raw(const bracekit::SkewBrace& b) : add(table_of(b.additive())), mul(table_of(b.multiplicative())), n(b.order()) {}

  unsigned plus(unsigned a, unsigned b) const { return add[a][b]; }
  unsigned neg(unsigned a) const { return inverse(add, a); }
  unsigned circ(unsigned a, unsigned b) const { return mul[a][b]; }
  unsigned cinv(unsigned a) const { return inverse(mul, a); }
  unsigned lambda(unsigned a, unsigned b) const { return plus(neg(a), circ(a, b)); }
  unsigned star(unsigned a, unsigned b) const { return plus(lambda(a, b), neg(b)); }
  unsigned cplus(unsigned a, unsigned b) const { return plus(plus(a, b), plus(neg(a), neg(b))); }
  unsigned ccirc(unsigned a, unsigned b) const { return circ(circ(a, b), circ(cinv(a), cinv(b))); }
};

inline Set full(unsigned n) {
  Set s(n);
  std::iota(s.begin(), s.end(), 0u);
  return s;
}

inline bool member(const Set& s, unsigned x) { return std::find(s.begin(), s.end(), x) != s.end(); }

inline Set cb(const Raw& r, unsigned x) {
  Set s;
  for (unsigned b = 0; b < r.n; ++b) {
    if (r.star(x, b) == 0 && r.ccirc(x, b) == 0 && r.cplus(x, b) == 0) s.push_back(b);
  }
  return s;
}

inline Rational pb(const Raw& r) {
  long long pairs = 0;
  for (unsigned a = 0; a < r.n; ++a) {
    for (unsigned b = 0; b < r.n; ++b) pairs += (r.star(a, b) == 0 && r.star(b, a) == 0 && r.cplus(a, b) == 0);
  }
  return Rational(pairs, static_cast<long long>(r.n) * r.n);
}

inline Rational group_pr(const Table& t) {
  long long pairs = 0;
  for (unsigned a = 0; a < t.size(); ++a) {
    for (unsigned b = 0; b < t.size(); ++b) pairs += t[a][b] == t[b][a];
  }
  return Rational(pairs, static_cast<long long>(t.size() * t.size()));
}

inline Set centralizer(const Table& t, unsigned x) {
  Set s;
  for (unsigned y = 0; y < t.size(); ++y) {
    if (t[x][y] == t[y][x]) s.push_back(y);
  }
  return s;
}

inline Set center(const Table& t) {
  Set s;
  for (unsigned y = 0; y < t.size(); ++y) {
    bool ok = true;
    for (unsigned x = 0; x < t.size(); ++x) ok = ok && t[x][y] == t[y][x];
    if (ok) s.push_back(y);
  }
  return s;
}

inline bool is_subgroup(const Table& t, const Set& s) {
  if (!member(s, 0)) return false;
  for (unsigned a : s) {
    for (unsigned b : s) {
      if (!member(s, t[a][b])) return false;
    }
  }
  return true;
}

inline bool is_normal(const Table& t, const Set& s) {
  for (unsigned g = 0; g < t.size(); ++g) {
    for (unsigned h : s) {
      if (!member(s, t[t[g][h]][inverse(t, g)])) return false;
    }
  }
  return true;
}

inline bool is_left_ideal(const Raw& r, const Set& s) {
  if (!is_subgroup(r.add, s)) return false;
  for (unsigned a = 0; a < r.n; ++a) {
    for (unsigned x : s) {
      if (!member(s, r.lambda(a, x))) return false;
    }
  }
  return true;
}

inline bool is_ideal(const Raw& r, const Set& s) {
  return is_left_ideal(r, s) && is_subgroup(r.mul, s) && is_normal(r.add, s) && is_normal(r.mul, s);
}

/// Every subset containing 0 that is a subgroup of both groups (n <= 10).
inline std::vector<Set> sub_braces(const Raw& r) {
  std::vector<Set> out;
  for (unsigned mask = 1; mask < (1u << r.n); mask += 2) {
    Set s;
    for (unsigned x = 0; x < r.n; ++x) {
      if (mask >> x & 1u) s.push_back(x);
    }
    if (is_subgroup(r.add, s) && is_subgroup(r.mul, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Set annihilator(const Raw& r) {
  Set s;
  for (unsigned a = 0; a < r.n; ++a) {
    bool ok = true;
    for (unsigned b = 0; b < r.n && ok; ++b) {
      ok = r.plus(a, b) == r.circ(a, b) && r.plus(a, b) == r.plus(b, a) && r.circ(a, b) == r.circ(b, a);
    }
    if (ok) s.push_back(a);
  }
  return s;
}

/// Ann_k from the closed form, k = 1, 2, ... until it repeats.
inline std::vector<Set> ann_series(const Raw& r) {
  std::vector<Set> out;
  Set prev{0};
  for (;;) {
    Set next;
    for (unsigned a = 0; a < r.n; ++a) {
      bool ok = true;
      for (unsigned b = 0; b < r.n && ok; ++b) {
        ok = member(prev, r.star(a, b)) && member(prev, r.star(b, a)) && member(prev, r.cplus(a, b));
      }
      if (ok) next.push_back(a);
    }
    if (!out.empty() && next == out.back()) return out;
    out.push_back(next);
    prev = next;
  }
}

inline Set additive_closure(const Raw& r, Set gens) {
  std::set<unsigned> s(gens.begin(), gens.end());
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<unsigned> cur(s.begin(), s.end());
    for (unsigned a : cur) {
      for (unsigned b : cur) grew |= s.insert(r.plus(a, b)).second;
    }
  }
  return Set(s.begin(), s.end());
}

inline std::vector<Set> gamma_series(const Raw& r) {
  std::vector<Set> out{full(r.n)};
  for (;;) {
    Set gens;
    for (unsigned a = 0; a < r.n; ++a) {
      for (unsigned g : out.back()) {
        gens.push_back(r.star(a, g));
        gens.push_back(r.star(g, a));
        gens.push_back(r.cplus(a, g));
      }
    }
    Set next = additive_closure(r, gens);
    if (next == out.back()) return out;
    out.push_back(next);
  }
}

inline bool distributive(const Raw& r) {
  for (unsigned a = 0; a < r.n; ++a) {
    for (unsigned b = 0; b < r.n; ++b) {
      for (unsigned c = 0; c < r.n; ++c) {
        if (r.circ(a, r.plus(b, c)) != r.plus(r.plus(r.circ(a, b), r.neg(a)), r.circ(a, c))) return false;
      }
    }
  }
  return true;
}

/// Counts bijections f with f(x·y) = f(x)·f(y) in both table pairs, by
/// scanning all n! permutations. Pass equal tables twice for a single group.
inline std::size_t count_isomorphisms(const Table& g1, const Table& h1, const Table& g2, const Table& h2) {
  const unsigned n = static_cast<unsigned>(g1.size());
  if (h1.size() != n) return 0;
  std::vector<unsigned> f = full(n);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (unsigned x = 0; x < n && ok; ++x) {
      for (unsigned y = 0; y < n && ok; ++y) {
        ok = f[g1[x][y]] == h1[f[x]][f[y]] && f[g2[x][y]] == h2[f[x]][f[y]];
      }
    }
    count += ok;
  } while (std::next_permutation(f.begin(), f.end()));
  return count;
}

inline std::size_t count_isomorphisms(const Table& g, const Table& h) { return count_isomorphisms(g, h, g, h); }

inline Rational cyclic_formula(unsigned n, unsigned d) {
  long long sum = 0;
  for (unsigned x = 0; x < n; ++x) {
    const unsigned t = static_cast<unsigned>((static_cast<unsigned long long>(d) * x) % n);
    sum += t == 0 ? n : std::gcd(t, n);
  }
  return Rational(sum, static_cast<long long>(n) * n);
}

inline std::vector<unsigned> to_vec(const bracekit::ElementSet& s) { return {s.begin(), s.end()}; }

}  // namespace oracle
