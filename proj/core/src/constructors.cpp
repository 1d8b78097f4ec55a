// Semidirect convention used throughout the catalog: H acts on N on the
// right. An element is a pair (h, a) with h in H and a in N, read as the
// word h*a, so (h, a)(h', a') = (hh', a^h' a') where a^h = h^-1 a h. The
// images in an ActionSpec give a -> a^t for each acting generator t, and
// must compose as a right action: a^(tu) = (a^t)^u.

#include "commprob/constructors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>

#include "commprob/isomorphism.hpp"
#include "commprob/structure.hpp"

namespace commprob {

namespace {

struct Coordinates {
  std::size_t p;
  std::size_t k;
  std::size_t size() const {
    std::size_t n = 1;
    for (std::size_t i = 0; i < k; ++i) n *= p;
    return n;
  }
  std::vector<std::size_t> decode(std::size_t code) const {
    std::vector<std::size_t> v(k);
    for (std::size_t i = k; i-- > 0;) {
      v[i] = code % p;
      code /= p;
    }
    return v;
  }
  std::size_t encode(const std::vector<std::size_t>& v) const {
    std::size_t code = 0;
    for (std::size_t x : v) code = code * p + (x % p);
    return code;
  }
};

// Elementary abelian p^k with codes in base-p coordinates.
RegularGroup elementary_abelian(const Coordinates& co, const Limits& limits) {
  auto add = [co](std::size_t a, std::size_t b) {
    auto va = co.decode(a);
    auto vb = co.decode(b);
    for (std::size_t i = 0; i < co.k; ++i) va[i] += vb[i];
    return co.encode(va);
  };
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < co.k; ++i) {
    std::vector<std::size_t> e(co.k, 0);
    e[i] = 1;
    gens.push_back(co.encode(e));
  }
  return regular_group(co.size(), add, gens, limits);
}

Permutation code_map_to_permutation(const RegularGroup& rg,
                                    const std::function<std::size_t(std::size_t)>& f) {
  std::vector<Point> images(rg.group.order());
  for (std::size_t c = 0; c < rg.embedding.size(); ++c) images[rg.embedding[c]] = rg.embedding[f(c)];
  return Permutation(std::move(images));
}

SemidirectProduct cyclic_extension(const FiniteGroup& n, std::size_t m, const Permutation& aut,
                                   const Limits& limits) {
  FiniteGroup h = cyclic(m);
  ActionSpec action{{h.generators().front()}, {aut}};
  return semidirect_product(n, h, action, limits);
}

// (a, b) -> (-b, a - b): order 3 and fixed-point-free on F_p^2 for p != 3.
std::size_t order_three_matrix(const Coordinates& co, std::size_t code) {
  auto v = co.decode(code);
  std::size_t p = co.p;
  return co.encode({(p - v[1]) % p, (v[0] + p - v[1]) % p});
}

FiniteGroup extension_of_c5c5_by_c3(const Limits& limits) {
  Coordinates co{5, 2};
  RegularGroup n = elementary_abelian(co, limits);
  Permutation aut = code_map_to_permutation(n, [&](std::size_t c) { return order_three_matrix(co, c); });
  return cyclic_extension(n.group, 3, aut, limits).group;
}

// Heisenberg group of order 125 (exponent 5) extended by an order-3
// automorphism acting as (a, b) -> (-b, a - b) on the quotient by the center.
FiniteGroup heisenberg5_by_c3(const Limits& limits) {
  auto code = [](std::size_t a, std::size_t b, std::size_t c) { return (a % 5) * 25 + (b % 5) * 5 + (c % 5); };
  auto mul = [&](std::size_t x, std::size_t y) {
    std::size_t a = x / 25, b = (x / 5) % 5, c = x % 5;
    std::size_t a2 = y / 25, b2 = (y / 5) % 5, c2 = y % 5;
    return code(a + a2, b + b2, c + c2 + a * b2);
  };
  const std::size_t gx = code(1, 0, 0);
  const std::size_t gy = code(0, 1, 0);
  const std::size_t gens[] = {gx, gy};
  RegularGroup he = regular_group(125, mul, gens, limits);

  auto inverse = [&](std::size_t x) {
    for (std::size_t y = 0; y < 125; ++y) {
      if (mul(x, y) == 0) return y;
    }
    throw Error("no inverse in Heisenberg group");
  };
  // x -> y, y -> x^-1 y^-1
  const Index from[] = {he.embedding[gx], he.embedding[gy]};
  const Index to[] = {he.embedding[gy], he.embedding[mul(inverse(gx), inverse(gy))]};
  auto map = extend_homomorphism(he.group, from, to, he.group);
  if (!map || !is_isomorphism(he.group, he.group, *map)) {
    throw Error("Heisenberg automorphism is not well defined");
  }
  std::vector<Point> images(map->begin(), map->end());
  return cyclic_extension(he.group, 3, Permutation(std::move(images)), limits).group;
}

FiniteGroup c2cube_by_c7(const Limits& limits) {
  Coordinates co{2, 3};
  RegularGroup n = elementary_abelian(co, limits);
  // Companion matrix of t^3 + t + 1: e1 -> e2, e2 -> e3, e3 -> e1 + e2.
  Permutation aut = code_map_to_permutation(n, [&](std::size_t c) {
    auto v = co.decode(c);
    return co.encode({v[2], v[0] + v[2], v[1]});
  });
  return cyclic_extension(n.group, 7, aut, limits).group;
}

FiniteGroup c3c3_by_c4(const Limits& limits) {
  Coordinates co{3, 2};
  RegularGroup n = elementary_abelian(co, limits);
  Permutation aut = code_map_to_permutation(n, [&](std::size_t c) {
    auto v = co.decode(c);
    return co.encode({3 - v[1], v[0]});
  });
  return cyclic_extension(n.group, 4, aut, limits).group;
}

FiniteGroup quaternion8() {
  return generate_group(8, {Permutation::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}),
                            Permutation::from_cycles(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})});
}

// SL(2,3) acting on the eight nonzero vectors of F_3^2.
FiniteGroup sl2_3() {
  std::vector<std::pair<int, int>> vectors;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      if (x != 0 || y != 0) vectors.emplace_back(x, y);
    }
  }
  auto act = [&](int a, int b, int c, int d) {
    std::vector<Point> images(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      auto [x, y] = vectors[i];
      std::pair<int, int> w{(a * x + b * y) % 3, (c * x + d * y) % 3};
      images[i] = static_cast<Point>(std::find(vectors.begin(), vectors.end(), w) - vectors.begin());
    }
    return Permutation(std::move(images));
  };
  return generate_group(8, {act(1, 1, 0, 1), act(1, 0, 1, 1)});
}

// x -> x + 1 and x -> 2x on Z/7.
FiniteGroup c7_by_c3() {
  std::vector<Point> shift(7), scale(7);
  for (Point x = 0; x < 7; ++x) {
    shift[x] = (x + 1) % 7;
    scale[x] = (2 * x) % 7;
  }
  return generate_group(7, {Permutation(shift), Permutation(scale)});
}

FiniteGroup product_of(std::initializer_list<std::string_view> keys, const Limits& limits) {
  auto it = keys.begin();
  FiniteGroup g = named(*it, limits);
  for (++it; it != keys.end(); ++it) g = direct_product(g, named(*it, limits), limits);
  return g;
}

struct Builder {
  CatalogEntry entry;
  std::function<FiniteGroup(const Limits&)> build;
};

const std::vector<Builder>& builders() {
  static const std::vector<Builder> list = [] {
    std::vector<Builder> b;
    auto add = [&](std::string key, std::string description, std::function<FiniteGroup(const Limits&)> f) {
      b.push_back({{std::move(key), std::move(description)}, std::move(f)});
    };
    auto cyc = [](std::size_t n) { return [n](const Limits&) { return cyclic(n); }; };
    add("C1", "trivial group", cyc(1));
    add("C2", "cyclic of order 2", cyc(2));
    add("C3", "cyclic of order 3", cyc(3));
    add("C4", "cyclic of order 4", cyc(4));
    add("C6", "cyclic of order 6", cyc(6));
    add("C15", "cyclic of order 15", cyc(15));
    add("C2xC2", "Klein four-group", [](const Limits& l) { return product_of({"C2", "C2"}, l); });
    add("C3xC3", "elementary abelian of order 9", [](const Limits& l) { return product_of({"C3", "C3"}, l); });
    add("C5xC5", "elementary abelian of order 25", [](const Limits& l) { return product_of({"C5", "C5"}, l); });
    add("C2xC2xC3", "abelian of order 12", [](const Limits& l) { return product_of({"C2", "C2", "C3"}, l); });
    add("S3", "symmetric group on 3 points", [](const Limits&) { return symmetric(3); });
    add("D8", "dihedral of order 8", [](const Limits&) { return dihedral(8); });
    add("D10", "dihedral of order 10", [](const Limits&) { return dihedral(10); });
    add("Q8", "quaternion group", [](const Limits&) { return quaternion8(); });
    add("A4", "alternating group on 4 points", [](const Limits&) { return alternating(4); });
    add("S4", "symmetric group on 4 points", [](const Limits&) { return symmetric(4); });
    add("A5", "alternating group on 5 points", [](const Limits&) { return alternating(5); });
    add("SL2(3)", "special linear group of degree 2 over F3", [](const Limits&) { return sl2_3(); });
    add("C7:C3", "nonabelian group of order 21", [](const Limits&) { return c7_by_c3(); });
    add("C2xA4", "direct product C2 x A4", [](const Limits& l) { return product_of({"C2", "A4"}, l); });
    add("C2xS3", "direct product C2 x S3", [](const Limits& l) { return product_of({"C2", "S3"}, l); });
    add("C3xS3", "direct product C3 x S3", [](const Limits& l) { return product_of({"C3", "S3"}, l); });
    add("C2xQ8", "direct product C2 x Q8", [](const Limits& l) { return product_of({"C2", "Q8"}, l); });
    add("(C3xC3):C4", "C4 acting fixed-point-freely on C3xC3", c3c3_by_c4);
    add("C2^3:C7", "C7 acting irreducibly on C2^3 (order 56)", c2cube_by_c7);
    add("(C5xC5):C3", "C3 acting fixed-point-freely on C5xC5 (order 75)", extension_of_c5c5_by_c3);
    add("(C5xC5):C15", "order-375 group with commuting probability 23/375: the exponent-5 "
                       "Heisenberg group of order 125 extended by C3",
        heisenberg5_by_c3);
    return b;
  }();
  return list;
}

std::string_view strip_parens(std::string_view s) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool outer = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && i + 1 < s.size()) {
        outer = false;
        break;
      }
    }
    if (!outer) break;
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

// Positions of `sep` outside parentheses.
std::vector<std::size_t> top_level(std::string_view s, char sep) {
  std::vector<std::size_t> out;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == sep && depth == 0) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

[[noreturn]] void unknown_key(std::string_view key) {
  std::string msg = "unknown group key '" + std::string(key) + "'; catalog keys:";
  for (const auto& e : catalog()) msg += " " + e.key;
  msg += " (grammar: Cn, Cn^k, AxB, N:Cm/k)";
  throw PreconditionError(msg);
}

FiniteGroup parse_key(std::string_view key, const Limits& limits) {
  std::string_view s = strip_parens(key);
  if (s.empty()) unknown_key(key);
  for (const auto& b : builders()) {
    if (b.entry.key == s) return b.build(limits);
  }
  if (auto colons = top_level(s, ':'); colons.size() == 1) {
    std::string_view left = s.substr(0, colons[0]);
    std::string_view right = s.substr(colons[0] + 1);
    auto slash = right.find('/');
    if (slash == std::string_view::npos || right.size() < 2 || right[0] != 'C') unknown_key(key);
    auto m = parse_count(right.substr(1, slash - 1));
    auto k = parse_count(right.substr(slash + 1));
    if (!m || !k || *m == 0) unknown_key(key);
    FiniteGroup n = named(left, limits);
    FiniteGroup aut = automorphism_group(n, limits);
    std::vector<Index> eligible;
    for (Index x = 0; x < aut.order(); ++x) {
      if (*m % element_order(aut, x) == 0) eligible.push_back(x);
    }
    if (*k >= eligible.size()) {
      throw PreconditionError("action id " + std::to_string(*k) + " out of range: " +
                              std::to_string(eligible.size()) + " automorphisms of order dividing " +
                              std::to_string(*m));
    }
    return cyclic_extension(n, *m, aut.element(eligible[*k]), limits).group;
  }
  if (auto xs = top_level(s, 'x'); !xs.empty()) {
    std::size_t start = 0;
    std::optional<FiniteGroup> g;
    xs.push_back(s.size());
    for (std::size_t pos : xs) {
      FiniteGroup factor = named(s.substr(start, pos - start), limits);
      g = g ? direct_product(*g, factor, limits) : factor;
      start = pos + 1;
    }
    return *g;
  }
  if (s[0] == 'C') {
    auto caret = s.find('^');
    auto n = parse_count(s.substr(1, caret == std::string_view::npos ? s.npos : caret - 1));
    if (!n || *n == 0) unknown_key(key);
    if (caret == std::string_view::npos) return cyclic(*n);
    auto power = parse_count(s.substr(caret + 1));
    if (!power || *power == 0) unknown_key(key);
    FiniteGroup g = cyclic(*n);
    for (std::size_t i = 1; i < *power; ++i) g = direct_product(g, cyclic(*n), limits);
    return g;
  }
  unknown_key(key);
}

}  // namespace

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group order must be positive");
  if (n == 1) return generate_group(1, {});
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
  Limits limits;
  limits.max_order = std::max(limits.max_order, n);
  return generate_group(n, {Permutation(std::move(images))}, limits);
}

FiniteGroup symmetric(std::size_t n) {
  if (n == 0) throw PreconditionError("symmetric group degree must be positive");
  if (n == 1) return generate_group(1, {});
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<Point> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Point>(i);
    gens.push_back(Permutation::from_cycles(n, {cycle}));
  }
  return generate_group(n, gens);
}

FiniteGroup alternating(std::size_t n) {
  if (n == 0) throw PreconditionError("alternating group degree must be positive");
  if (n < 3) return generate_group(n, {});
  // 3-cycles (0 1 i) generate A_n.
  std::vector<Permutation> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return generate_group(n, gens);
}

FiniteGroup dihedral(std::size_t order) {
  if (order < 2 || order % 2 != 0) throw PreconditionError("dihedral order must be even and positive");
  const std::size_t m = order / 2;
  if (m == 1) return cyclic(2);
  if (m == 2) return named("C2xC2");
  std::vector<Point> rotation(m), reflection(m);
  for (std::size_t i = 0; i < m; ++i) {
    rotation[i] = static_cast<Point>((i + 1) % m);
    reflection[i] = static_cast<Point>((m - i) % m);
  }
  return generate_group(m, {Permutation(rotation), Permutation(reflection)});
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, const Limits& limits) {
  const std::size_t da = a.degree();
  const std::size_t db = b.degree();
  std::vector<Permutation> gens;
  for (Index s : a.generators()) {
    std::vector<Point> images(da + db);
    for (std::size_t i = 0; i < da; ++i) images[i] = a.element(s)(static_cast<Point>(i));
    for (std::size_t i = 0; i < db; ++i) images[da + i] = static_cast<Point>(da + i);
    gens.emplace_back(std::move(images));
  }
  for (Index s : b.generators()) {
    std::vector<Point> images(da + db);
    for (std::size_t i = 0; i < da; ++i) images[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < db; ++i) images[da + i] = static_cast<Point>(da + b.element(s)(static_cast<Point>(i)));
    gens.emplace_back(std::move(images));
  }
  return generate_group(da + db, gens, limits);
}

RegularGroup regular_group(std::size_t order,
                           const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                           std::span<const std::size_t> generator_codes, const Limits& limits) {
  if (order == 0) throw PreconditionError("regular_group: order must be positive");
  if (order > limits.max_order) {
    throw LimitError("group order exceeds the cap of " + std::to_string(limits.max_order) + " elements");
  }
  auto right_mult = [&](std::size_t g) {
    std::vector<Point> images(order);
    for (std::size_t x = 0; x < order; ++x) images[x] = static_cast<Point>(mul(x, g));
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (std::size_t c : generator_codes) gens.push_back(right_mult(c));
  FiniteGroup g = generate_group(order, gens, limits);
  if (g.order() != order) {
    throw PreconditionError("regular_group: generators produce " + std::to_string(g.order()) +
                            " of " + std::to_string(order) + " elements");
  }
  std::vector<Index> embedding(order);
  for (std::size_t c = 0; c < order; ++c) embedding[c] = *g.index_of(right_mult(c));
  return RegularGroup{std::move(g), std::move(embedding)};
}

FiniteGroup automorphism_group(const FiniteGroup& a, const Limits& limits) {
  if (a.order() > limits.automorphism_cap) {
    throw LimitError("automorphism_group: order " + std::to_string(a.order()) +
                     " exceeds the automorphism cap of " + std::to_string(limits.automorphism_cap));
  }
  std::vector<Permutation> autos;
  enumerate_isomorphisms(a, a, [&](const std::vector<Index>& map) {
    autos.emplace_back(std::vector<Point>(map.begin(), map.end()));
    return true;
  });
  Limits cap = limits;
  cap.max_order = std::max(cap.max_order, autos.size());
  FiniteGroup out = generate_group(a.order(), autos, cap);
  if (out.order() != autos.size()) throw Error("automorphisms are not closed under composition");
  return out;
}

ActionSpec trivial_action(const FiniteGroup& n, const FiniteGroup& h) {
  ActionSpec spec;
  for (Index t : h.generators()) {
    spec.acting_generators.push_back(t);
    spec.automorphism_images.push_back(Permutation::identity(n.order()));
  }
  return spec;
}

SemidirectProduct semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                                     const ActionSpec& action, const Limits& limits) {
  if (action.acting_generators.size() != action.automorphism_images.size()) {
    throw PreconditionError("action: generator and image counts differ");
  }
  for (Index t : action.acting_generators) {
    if (!h.valid(t)) throw PreconditionError("action: invalid acting generator " + std::to_string(t));
  }
  if (subgroup_generated(h, action.acting_generators).order() != h.order()) {
    throw PreconditionError("action: acting generators do not generate H");
  }
  for (std::size_t i = 0; i < action.automorphism_images.size(); ++i) {
    const Permutation& img = action.automorphism_images[i];
    if (img.degree() != n.order()) {
      throw PreconditionError("action image " + std::to_string(i) + " has degree " +
                              std::to_string(img.degree()) + ", expected |N| = " + std::to_string(n.order()));
    }
    for (Index a = 0; a < n.order(); ++a) {
      for (Index b = 0; b < n.order(); ++b) {
        if (img(n.mul(a, b)) != n.mul(img(a), img(b))) {
          throw PreconditionError("action image " + std::to_string(i) +
                                  " is not an automorphism of N: fails on elements " + std::to_string(a) +
                                  " and " + std::to_string(b));
        }
      }
    }
  }

  Limits aut_limits = limits;
  aut_limits.max_order = std::max(limits.max_order, h.order());
  FiniteGroup auts = generate_group(n.order(), action.automorphism_images, aut_limits);
  std::vector<Index> image_indices;
  for (const auto& img : action.automorphism_images) image_indices.push_back(*auts.index_of(img));
  HomomorphismFailure failure;
  auto phi = extend_homomorphism(h, action.acting_generators, image_indices, auts, &failure);
  if (!phi) {
    throw PreconditionError("action does not extend to a homomorphism H -> Aut(N): relation fails at "
                            "H element " + std::to_string(failure.element) + " times acting generator " +
                            std::to_string(action.acting_generators[failure.generator]));
  }

  const std::size_t nn = n.order();
  const std::size_t nh = h.order();
  auto code = [nn](std::size_t hi, std::size_t ai) { return hi * nn + ai; };
  auto mul = [&](std::size_t x, std::size_t y) {
    std::size_t h1 = x / nn, a1 = x % nn, h2 = y / nn, a2 = y % nn;
    Index moved = auts.element((*phi)[h2])(static_cast<Point>(a1));
    return code(h.mul(static_cast<Index>(h1), static_cast<Index>(h2)), n.mul(moved, static_cast<Index>(a2)));
  };
  std::vector<std::size_t> gens;
  for (Index t : h.generators()) gens.push_back(code(t, n.identity()));
  for (Index s : n.generators()) gens.push_back(code(h.identity(), s));
  RegularGroup rg = regular_group(nn * nh, mul, gens, limits);

  SemidirectProduct out{std::move(rg.group), {}, {}};
  for (Index a = 0; a < nn; ++a) out.normal_embedding.push_back(rg.embedding[code(h.identity(), a)]);
  for (Index t = 0; t < nh; ++t) out.complement_embedding.push_back(rg.embedding[code(t, n.identity())]);
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& b : builders()) out.push_back(b.entry);
    return out;
  }();
  return entries;
}

FiniteGroup named(std::string_view key, const Limits& limits) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<FiniteGroup>, std::less<>> cache;
  auto check = [&](const FiniteGroup& g) {
    if (g.order() > limits.max_order) {
      throw LimitError("group order exceeds the cap of " + std::to_string(limits.max_order) + " elements");
    }
  };
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) {
      check(*it->second);
      return *it->second;
    }
  }
  FiniteGroup g = parse_key(key, limits);
  check(g);
  std::lock_guard lock(mutex);
  cache.try_emplace(std::string(key), std::make_unique<FiniteGroup>(g));
  return g;
}

}  // namespace commprob
