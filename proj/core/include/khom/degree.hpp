#ifndef KHOM_DEGREE_HPP
#define KHOM_DEGREE_HPP

#include <compare>
#include <functional>
#include <vector>

#include "khom/errors.hpp"

namespace khom {

/// Element of N^k. Colors are 1-based everywhere in this library.
class Degree {
 public:
  Degree() = default;
  explicit Degree(std::vector<int> coords);
  static Degree zero(int k);
  static Degree unit(int k, int color);

  int k() const { return static_cast<int>(coords_.size()); }
  int at(int color) const;  // 1-based
  int total() const;
  bool is_zero() const;
  bool le(const Degree& other) const;  // componentwise
  const std::vector<int>& coords() const { return coords_; }

  Degree& operator+=(const Degree& o);
  friend Degree operator+(Degree a, const Degree& b) {
    a += b;
    return a;
  }
  // Componentwise difference; requires o.le(*this).
  Degree minus(const Degree& o) const;

  auto operator<=>(const Degree&) const = default;

 private:
  std::vector<int> coords_;
};

/// Sorted duplicate-free set of colors in {1..k}.
using ColorSet = std::vector<int>;

ColorSet color_type_of(const Degree& d);
Degree indicator_degree(int k, const ColorSet& K);  // sum of e_i over i in K
std::vector<ColorSet> color_subsets(int k, int n);  // lexicographic order

/// Visits every lattice point of [lo, hi] in lexicographic order.
/// No-op unless lo <= hi componentwise.
void for_each_lattice_point(const Degree& lo, const Degree& hi,
                            const std::function<void(const Degree&)>& fn);

}  // namespace khom

#endif
