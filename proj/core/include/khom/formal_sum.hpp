#ifndef KHOM_FORMAL_SUM_HPP
#define KHOM_FORMAL_SUM_HPP

#include <gmpxx.h>

#include <map>
#include <utility>

namespace khom {

using Int = mpz_class;

/// Sparse integer linear combination over an ordered generator set.
/// Zero coefficients are never stored.
template <typename Gen>
class FormalSum {
 public:
  using Terms = std::map<Gen, Int>;

  FormalSum() = default;

  void add(const Gen& g, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
      terms_.emplace(g, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  FormalSum& operator+=(const FormalSum& o) {
    for (const auto& [g, c] : o.terms_) add(g, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    for (const auto& [g, c] : o.terms_) add(g, -c);
    return *this;
  }
  FormalSum& operator*=(const Int& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [g, c] : terms_) c *= s;
    return *this;
  }
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Int coefficient(const Gen& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Int(0) : it->second;
  }

  bool operator==(const FormalSum&) const = default;

 private:
  Terms terms_;
};

}  // namespace khom

#endif
