#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "permcomm/errors.hpp"

namespace permcomm {

enum class Parity { even, odd };

// A permutation of {1, ..., n}, acting from the left: (a*b)(x) = a(b(x)),
// so in a product the rightmost factor is applied first and
// (1 2)(2 3) = (1 2 3). Points are 1-based on every external surface;
// the image table is kept 0-based internally. Immutable once built.
class Perm {
public:
  // identity of the given degree
  explicit Perm(int degree);

  // images[i] is the image of point i+1, 1-based; must be a bijection
  static Perm from_images(std::vector<int> images);

  int degree() const noexcept { return static_cast<int>(img_.size()); }

  // image of a 1-based point
  int apply(int point) const { return img_[point - 1] + 1; }

  // 0-based image table access
  int operator[](int i) const { return img_[i]; }

  bool is_identity() const noexcept;

  bool operator==(const Perm &other) const noexcept = default;

  const std::vector<int32_t> &images0() const noexcept { return img_; }

private:
  struct Unchecked {};
  Perm(std::vector<int32_t> img0, Unchecked) : img_(std::move(img0)) {}

  std::vector<int32_t> img_; // img_[x] = image of x, 0-based

  friend Perm compose(const Perm &, const Perm &);
  friend Perm invert(const Perm &);
  friend Perm from_images0(std::vector<int32_t>);
};

// a∘b, i.e. b applied first
Perm compose(const Perm &a, const Perm &b);
Perm invert(const Perm &a);

// [a, b] = a b a^-1 b^-1
Perm commutator(const Perm &a, const Perm &b);

Parity parity(const Perm &a);

inline Perm operator*(const Perm &a, const Perm &b) { return compose(a, b); }

// Adopts a 0-based image table without re-validation; caller guarantees it
// is a bijection. Used by the hot loops in group enumeration.
Perm from_images0(std::vector<int32_t> img0);

// Disjoint-cycle normal form: cycles of length >= 2 only, each rotated so
// its minimum point comes first, sorted by minimum point. Round-trips with
// Perm exactly.
struct CycleForm {
  int degree = 0;
  std::vector<std::vector<int>> cycles; // 1-based points

  bool operator==(const CycleForm &other) const = default;
};

struct CycleDecomposition {
  CycleForm form;
  std::vector<int> support; // moved points, ascending, 1-based
  std::vector<int> fixed;   // fixed points, ascending, 1-based
};

CycleDecomposition cycle_decomposition(const Perm &a);
Perm to_perm(const CycleForm &form);

// Product of cycles, rightmost applied first. Grammar:
//   Product := "()" | Cycle+
//   Cycle   := "(" Point (Sep Point)+ ")"
//   Sep     := one or more spaces or a comma
// Points are decimal integers in [1, degree]; a point may not repeat within
// one cycle but cycles of a product may share points (the product is
// composed). Whitespace between cycles is ignored.
Perm parse_cycles(std::string_view text, int degree);

// Canonical cycle string, e.g. "(1 2 3)(4 5)"; "()" for the identity.
std::string format_cycles(const Perm &a);
std::string format_cycles(const CycleForm &form);

std::ostream &operator<<(std::ostream &os, const Perm &a);

} // namespace permcomm
