#include "permcomm/perm.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace permcomm {

Perm::Perm(int degree) {
  if (degree < 1)
    throw PreconditionViolated("permutation degree must be >= 1, got " +
                               std::to_string(degree));
  img_.resize(degree);
  for (int i = 0; i < degree; ++i)
    img_[i] = i;
}

Perm Perm::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1)
    throw PreconditionViolated("image table must be nonempty");
  std::vector<int32_t> img0(n);
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || v > n)
      throw PointOutOfRange("image " + std::to_string(v) + " of point " +
                            std::to_string(i + 1) + " outside [1, " +
                            std::to_string(n) + "]");
    if (seen[v - 1])
      throw PreconditionViolated("image table is not a bijection: value " +
                                 std::to_string(v) + " repeats");
    seen[v - 1] = 1;
    img0[i] = v - 1;
  }
  return Perm(std::move(img0), Unchecked{});
}

Perm from_images0(std::vector<int32_t> img0) {
  return Perm(std::move(img0), Perm::Unchecked{});
}

bool Perm::is_identity() const noexcept {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i)
      return false;
  return true;
}

Perm compose(const Perm &a, const Perm &b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(a.degree()) +
                         " and " + std::to_string(b.degree()));
  const int n = a.degree();
  std::vector<int32_t> img(n);
  for (int i = 0; i < n; ++i)
    img[i] = a.img_[b.img_[i]];
  return Perm(std::move(img), Perm::Unchecked{});
}

Perm invert(const Perm &a) {
  const int n = a.degree();
  std::vector<int32_t> img(n);
  for (int i = 0; i < n; ++i)
    img[a.img_[i]] = i;
  return Perm(std::move(img), Perm::Unchecked{});
}

Perm commutator(const Perm &a, const Perm &b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("commutator: degrees " + std::to_string(a.degree()) +
                         " and " + std::to_string(b.degree()));
  return compose(compose(a, b), compose(invert(a), invert(b)));
}

Parity parity(const Perm &a) {
  // (-1)^(sum over cycles of (length - 1)); equivalently n minus the number
  // of cycles including fixed points.
  const int n = a.degree();
  std::vector<char> seen(n, 0);
  int transpositions = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i])
      continue;
    int len = 0;
    for (int j = i; !seen[j]; j = a[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return (transpositions % 2 == 0) ? Parity::even : Parity::odd;
}

CycleDecomposition cycle_decomposition(const Perm &a) {
  const int n = a.degree();
  CycleDecomposition out;
  out.form.degree = n;
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i])
      continue;
    if (a[i] == i) {
      seen[i] = 1;
      out.fixed.push_back(i + 1);
      continue;
    }
    std::vector<int> cycle;
    for (int j = i; !seen[j]; j = a[j]) {
      seen[j] = 1;
      cycle.push_back(j + 1);
      out.support.push_back(j + 1);
    }
    out.form.cycles.push_back(std::move(cycle));
  }
  // scanning from the smallest point gives min-first cycles sorted by
  // minimum already; support needs a sort
  std::sort(out.support.begin(), out.support.end());
  return out;
}

Perm to_perm(const CycleForm &form) {
  if (form.degree < 1)
    throw PreconditionViolated("cycle form degree must be >= 1");
  std::vector<int> images(form.degree);
  for (int i = 0; i < form.degree; ++i)
    images[i] = i + 1;
  for (const auto &cycle : form.cycles) {
    if (cycle.size() < 2)
      throw PreconditionViolated("cycle form may not contain trivial cycles");
    for (size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      const int to = cycle[(k + 1) % cycle.size()];
      if (from < 1 || from > form.degree)
        throw PointOutOfRange("cycle point " + std::to_string(from) +
                              " outside [1, " + std::to_string(form.degree) +
                              "]");
      if (images[from - 1] != from)
        throw PreconditionViolated("cycle form cycles are not disjoint");
      images[from - 1] = to;
    }
  }
  return Perm::from_images(std::move(images));
}

namespace {

struct CycleParser {
  std::string_view text;
  size_t pos = 0;
  int degree;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_space();
    return pos == text.size();
  }

  int parse_point() {
    skip_space();
    if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw SyntaxError("expected a point at offset " + std::to_string(pos));
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > degree)
        throw PointOutOfRange("point " + std::to_string(value) +
                              " exceeds degree " + std::to_string(degree));
      ++pos;
    }
    if (value < 1)
      throw PointOutOfRange("points are 1-based; got 0");
    return static_cast<int>(value);
  }

  // one "(p1 p2 ...)" group; empty parens are only legal as the whole product
  std::vector<int> parse_cycle() {
    skip_space();
    if (pos == text.size() || text[pos] != '(')
      throw SyntaxError("expected '(' at offset " + std::to_string(pos));
    ++pos;
    std::vector<int> points;
    std::vector<char> used(degree, 0);
    while (true) {
      skip_space();
      if (pos == text.size())
        throw SyntaxError("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        if (points.empty())
          throw SyntaxError("',' before first point of a cycle");
        ++pos;
        continue;
      }
      const int p = parse_point();
      if (used[p - 1])
        throw RepeatedPointInCycle("point " + std::to_string(p) +
                                   " repeats within one cycle");
      used[p - 1] = 1;
      points.push_back(p);
    }
    if (points.size() == 1)
      throw SyntaxError("a cycle needs at least two points");
    return points;
  }
};

Perm cycle_to_perm(const std::vector<int> &cycle, int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i)
    images[i] = i + 1;
  for (size_t k = 0; k < cycle.size(); ++k)
    images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
  return Perm::from_images(std::move(images));
}

} // namespace

Perm parse_cycles(std::string_view text, int degree) {
  if (degree < 1)
    throw PreconditionViolated("degree must be >= 1");
  CycleParser parser{text, 0, degree};
  if (parser.at_end())
    throw SyntaxError("empty input");

  std::vector<std::vector<int>> cycles;
  bool saw_empty = false;
  while (!parser.at_end()) {
    parser.skip_space();
    // "()" denotes the identity and must stand alone
    if (parser.pos + 1 < parser.text.size() && parser.text[parser.pos] == '(' ) {
      size_t look = parser.pos + 1;
      while (look < parser.text.size() &&
             std::isspace(static_cast<unsigned char>(parser.text[look])))
        ++look;
      if (look < parser.text.size() && parser.text[look] == ')') {
        parser.pos = look + 1;
        saw_empty = true;
        continue;
      }
    }
    cycles.push_back(parser.parse_cycle());
  }
  if (saw_empty && !cycles.empty())
    throw SyntaxError("'()' may only appear as the whole product");

  Perm result(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it)
    result = compose(cycle_to_perm(*it, degree), result);
  return result;
}

std::string format_cycles(const CycleForm &form) {
  if (form.cycles.empty())
    return "()";
  std::ostringstream os;
  for (const auto &cycle : form.cycles) {
    os << '(';
    for (size_t k = 0; k < cycle.size(); ++k) {
      if (k)
        os << ' ';
      os << cycle[k];
    }
    os << ')';
  }
  return os.str();
}

std::string format_cycles(const Perm &a) {
  return format_cycles(cycle_decomposition(a).form);
}

std::ostream &operator<<(std::ostream &os, const Perm &a) {
  return os << format_cycles(a);
}

} // namespace permcomm
