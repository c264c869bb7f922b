#include "pgt/builtins.hpp"

#include <charconv>
#include <array>
#include <numeric>

#include "pgt/arith.hpp"
#include "pgt/errors.hpp"

namespace pgt {

namespace {

Permutation from_map(std::size_t n, const auto& f) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(f(static_cast<unsigned>(i)));
  return Permutation(std::move(img));
}

unsigned mod_inverse(unsigned a, unsigned p) {
  for (unsigned x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw InvalidArgument("no inverse mod p");
}

unsigned primitive_root(unsigned p) {
  for (unsigned g = 2; g < p; ++g) {
    unsigned x = 1, ord = 0;
    do {
      x = (x * g) % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) return g;
  }
  return 1;
}

// Vectors of F_q^2 minus zero, indexed as a*q + b - 1.
PermGroup linear2(unsigned q, const std::vector<std::array<unsigned, 4>>& mats) {
  const unsigned n = q * q - 1;
  std::vector<Permutation> gens;
  for (const auto& m : mats) {
    gens.push_back(from_map(n, [&](unsigned i) {
      unsigned v = i + 1, a = v / q, b = v % q;
      // Row vector times matrix.
      unsigned x = (a * m[0] + b * m[2]) % q, y = (a * m[1] + b * m[3]) % q;
      return x * q + y - 1;
    }));
  }
  return PermGroup(n, std::move(gens));
}

unsigned parse_uint(std::string_view s, std::string_view label) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InvalidArgument("unknown group label \"" + std::string(label) + "\"");
  return v;
}

}  // namespace

PermGroup symmetric(unsigned n) {
  if (n == 0) throw InvalidArgument("symmetric: degree must be positive");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<Permutation> gens{from_map(n, [n](unsigned i) { return (i + 1) % n; })};
  if (n > 2) gens.push_back(from_map(n, [](unsigned i) { return i < 2 ? 1 - i : i; }));
  return PermGroup(n, std::move(gens));
}

PermGroup alternating(unsigned n) {
  if (n == 0) throw InvalidArgument("alternating: degree must be positive");
  if (n < 3) return PermGroup::trivial(n);
  std::vector<Permutation> gens;
  for (unsigned k = 2; k < n; ++k)
    gens.push_back(from_map(n, [k](unsigned i) { return i == 0 ? 1u : i == 1 ? k : i == k ? 0u : i; }));
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic(unsigned n) {
  if (n == 0) throw InvalidArgument("cyclic: order must be positive");
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup(n, {from_map(n, [n](unsigned i) { return (i + 1) % n; })});
}

PermGroup dihedral(unsigned order) {
  if (order < 2 || order % 2) throw InvalidArgument("dihedral: order must be even and at least 2");
  const unsigned n = order / 2;
  if (n == 1) return cyclic(2);
  if (n == 2) return elementary_abelian(2, 2);
  return PermGroup(n, {from_map(n, [n](unsigned i) { return (i + 1) % n; }),
                       from_map(n, [n](unsigned i) { return (2 * n + 2 - i) % n; })});
}

PermGroup generalized_quaternion(unsigned order) {
  if (order < 8 || !is_power_of(order, 2)) throw InvalidArgument("generalized_quaternion: order must be 2^k >= 8");
  // Elements a^i b^j (0 <= i < 2m, j in {0,1}) indexed i + 2m j; right multiplication.
  const unsigned m2 = order / 2, m = order / 4;
  auto idx = [m2](unsigned i, unsigned j) { return (i % m2) + m2 * j; };
  Permutation a = from_map(order, [&](unsigned e) {
    unsigned i = e % m2, j = e / m2;
    return j == 0 ? idx(i + 1, 0) : idx(i + m2 - 1, 1);
  });
  Permutation b = from_map(order, [&](unsigned e) {
    unsigned i = e % m2, j = e / m2;
    return j == 0 ? idx(i, 1) : idx(i + m, 0);
  });
  PermGroup Q(order, {a, b});
  if (Q.order() != order) throw std::logic_error("generalized_quaternion: wrong order");
  return Q;
}

PermGroup elementary_abelian(unsigned p, unsigned k) {
  if (!is_prime(p)) throw InvalidArgument("elementary_abelian: p must be prime");
  if (k == 0) return PermGroup::trivial(1);
  const unsigned n = p * k;
  std::vector<Permutation> gens;
  for (unsigned b = 0; b < k; ++b)
    gens.push_back(from_map(n, [&](unsigned i) { return i / p == b ? b * p + (i % p + 1) % p : i; }));
  return PermGroup(n, std::move(gens));
}

PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
  const std::size_t da = A.degree(), db = B.degree(), n = da + db;
  std::vector<Permutation> gens;
  for (const auto& a : A.generators())
    gens.push_back(from_map(n, [&](unsigned i) { return i < da ? a[i] : i; }));
  for (const auto& b : B.generators())
    gens.push_back(from_map(n, [&](unsigned i) { return i < da ? i : static_cast<unsigned>(da + b[i - da]); }));
  return PermGroup(n, std::move(gens));
}

PermGroup wreath_product(const PermGroup& base, const PermGroup& top) {
  const std::size_t m = base.degree(), t = top.degree(), n = m * t;
  std::vector<Permutation> gens;
  // Base generators act on the first block; top conjugates them to the others.
  for (const auto& b : base.generators())
    gens.push_back(from_map(n, [&](unsigned i) { return i < m ? b[i] : i; }));
  for (const auto& s : top.generators())
    gens.push_back(from_map(n, [&](unsigned i) { return static_cast<unsigned>(s[i / m] * m + i % m); }));
  return PermGroup(n, std::move(gens));
}

PermGroup wreath_cyclic(unsigned p) {
  if (!is_prime(p)) throw InvalidArgument("wreath_cyclic: p must be prime");
  return wreath_product(cyclic(p), cyclic(p));
}

PermGroup heisenberg(unsigned p) {
  if (!is_prime(p)) throw InvalidArgument("heisenberg: p must be prime");
  // Points (x, y) of F_p^2 as x p + y: a translates x, b shears y by x.
  Permutation a = from_map(p * p, [p](unsigned i) { return ((i / p + 1) % p) * p + i % p; });
  Permutation b = from_map(p * p, [p](unsigned i) { return (i / p) * p + (i % p + i / p) % p; });
  return PermGroup(p * p, {a, b});
}

PermGroup psl2(unsigned q) {
  if (!is_prime(q) || q == 2) throw InvalidArgument("psl2: q must be an odd prime");
  const unsigned inf = q;
  Permutation t = from_map(q + 1, [&](unsigned z) { return z == inf ? inf : (z + 1) % q; });
  Permutation s = from_map(q + 1, [&](unsigned z) {
    if (z == inf) return 0u;
    if (z == 0) return inf;
    return (q - mod_inverse(z, q)) % q;
  });
  PermGroup G(q + 1, {t, s});
  const std::uint64_t expected = static_cast<std::uint64_t>(q) * (q * q - 1) / 2;
  if (G.order() != expected) throw std::logic_error("psl2: wrong order");
  return G;
}

PermGroup sl2(unsigned q) {
  if (!is_prime(q)) throw InvalidArgument("sl2: q must be prime");
  return linear2(q, {{1, 1, 0, 1}, {1, 0, 1, 1}});
}

PermGroup gl2(unsigned q) {
  if (!is_prime(q)) throw InvalidArgument("gl2: q must be prime");
  const unsigned g = primitive_root(q);
  return linear2(q, {{1, 1, 0, 1}, {1, 0, 1, 1}, {g, 0, 0, 1}});
}

PermGroup affine(unsigned p, unsigned d) {
  if (!is_prime(p) || d == 0 || (p - 1) % d) throw InvalidArgument("affine: need p prime and d dividing p-1");
  unsigned a = 1, g = primitive_root(p);
  for (unsigned k = 0; k < (p - 1) / d; ++k) a = (a * g) % p;
  std::vector<Permutation> gens{from_map(p, [p](unsigned x) { return (x + 1) % p; })};
  if (d > 1) gens.push_back(from_map(p, [&](unsigned x) { return (a * x) % p; }));
  return PermGroup(p, std::move(gens));
}

PermGroup builtin_group(std::string_view label) {
  if (auto x = label.find('x'); x != std::string_view::npos)
    return direct_product(builtin_group(label.substr(0, x)), builtin_group(label.substr(x + 1)));
  if (auto w = label.find("wr"); w != std::string_view::npos)
    return wreath_product(builtin_group(label.substr(0, w)), builtin_group(label.substr(w + 2)));
  auto starts = [&](std::string_view prefix) { return label.substr(0, prefix.size()) == prefix; };
  auto rest = [&](std::size_t k) { return parse_uint(label.substr(k), label); };
  if (starts("PSL2_")) return psl2(rest(5));
  if (starts("SL2_")) return sl2(rest(4));
  if (starts("GL2_")) return gl2(rest(4));
  if (starts("He")) return heisenberg(rest(2));
  if (starts("AGL1_")) {
    unsigned p = rest(5);
    return affine(p, p - 1);
  }
  if (label == "F21") return affine(7, 3);
  if (label == "F20") return affine(5, 4);
  if (label.empty()) throw InvalidArgument("empty group label");
  switch (label[0]) {
    case 'S': return symmetric(rest(1));
    case 'A': return alternating(rest(1));
    case 'C': return cyclic(rest(1));
    case 'D': return dihedral(rest(1));
    case 'Q': return generalized_quaternion(rest(1));
    case 'E': {
      auto caret = label.find('^');
      if (caret == std::string_view::npos) break;
      return elementary_abelian(parse_uint(label.substr(1, caret - 1), label), parse_uint(label.substr(caret + 1), label));
    }
    default: break;
  }
  throw InvalidArgument("unknown group label \"" + std::string(label) + "\"");
}

std::vector<std::string> builtin_families() {
  return {
      "S<n>        symmetric group on n points",
      "A<n>        alternating group on n points",
      "C<n>        cyclic group of order n",
      "D<2n>       dihedral group of order 2n",
      "Q<2^k>      generalized quaternion group of order 2^k >= 8 (regular representation)",
      "E<p>^<k>    elementary abelian group of order p^k",
      "<X>wr<Y>    wreath product, e.g. C3wrC3 = Z3 wr Z3 of order 3^4",
      "<X>x<Y>     direct product, e.g. S3xC2",
      "PSL2_<q>    PSL(2,q) on q+1 points, q an odd prime",
      "SL2_<q>     SL(2,q) on the nonzero vectors of F_q^2",
      "GL2_<q>     GL(2,q) on the nonzero vectors of F_q^2",
      "He<p>       Heisenberg group of order p^3 on p^2 points",
      "AGL1_<p>    affine group x -> ax+b over F_p",
      "F20, F21    Frobenius groups of order 20 and 21",
  };
}

}  // namespace pgt
