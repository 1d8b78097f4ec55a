#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace commprob {

using Point = std::uint32_t;
using Index = std::uint32_t;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured cap (order, oracle, automorphism search) was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with arguments violating its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Runtime caps shared by the enumeration routines.
struct Limits {
  std::size_t max_order = 5000;
  std::size_t oracle_cap = 500;
  std::size_t automorphism_cap = 32;
};

/// A bijection of {0, ..., degree-1} stored in one-line image form.
class Permutation {
 public:
  /// Throws Error unless `images` is a bijection of {0, ..., size-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  const std::vector<Point>& images() const { return images_; }
  Point operator()(Point x) const { return images_[x]; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Cycle notation, fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

/// Apply p first, then q: the result maps i to q(p(i)).
Permutation compose(const Permutation& p, const Permutation& q);

struct PointVectorHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept;
};

/// A fully enumerated permutation group. Elements are sorted
/// lexicographically by image sequence, so indices are canonical.
/// Products follow `compose`: mul(a, b) is "a then b".
class FiniteGroup {
 public:
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(Index i) const { return elements_.at(i); }
  Index identity() const { return identity_; }

  /// Generators as supplied at construction (deduplicated, identity dropped).
  const std::vector<Index>& generators() const { return generators_; }

  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inverse_[a]; }
  /// g^-1 x g
  Index conj(Index x, Index g) const { return mul(mul(inverse_[g], x), g); }
  /// [a, b] = a^-1 b^-1 a b
  Index commutator(Index a, Index b) const;

  std::optional<Index> index_of(const Permutation& p) const;
  bool valid(Index i) const { return i < elements_.size(); }
  bool is_abelian() const;

  /// Equal degree and equal element lists.
  bool operator==(const FiniteGroup& other) const {
    return degree_ == other.degree_ && elements_ == other.elements_;
  }

 private:
  friend FiniteGroup generate_group(std::size_t degree,
                                    const std::vector<Permutation>& generators,
                                    const Limits& limits);
  FiniteGroup(std::size_t degree, std::vector<Permutation> sorted,
              const std::vector<Permutation>& generators);
  std::vector<Point> base_image(const Permutation& p) const;
  Index lookup_base(const std::vector<Point>& key) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  Index identity_ = 0;
  std::vector<Index> generators_;
  std::vector<Index> inverse_;
  // Points whose images already separate all elements.
  std::vector<Point> base_;
  std::unordered_map<std::vector<Point>, Index, PointVectorHash> by_base_;
  std::vector<Index> table_;
};

/// Groups at or below this order cache a full multiplication table.
inline constexpr std::size_t kMulTableLimit = 2048;

/// Breadth-first closure of {identity} and `generators`.
FiniteGroup generate_group(std::size_t degree, const std::vector<Permutation>& generators,
                           const Limits& limits = {});

/// Least m >= 1 with x^m = identity.
std::size_t element_order(const FiniteGroup& g, Index x);

/// Element orders indexed by element.
std::vector<std::size_t> element_orders(const FiniteGroup& g);

}  // namespace commprob
