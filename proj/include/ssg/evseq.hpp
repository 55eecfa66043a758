#ifndef SSG_EVSEQ_HPP
#define SSG_EVSEQ_HPP

#include <cstddef>
#include <numeric>
#include <vector>

namespace ssg {

// Eventually periodic sequence prefix . period period period ...
// Index is 0-based internally; the period is never empty.
template <typename T>
struct EvSeq {
  std::vector<T> prefix;
  std::vector<T> period;

  EvSeq() : period(1, T{}) {}
  EvSeq(std::vector<T> pre, std::vector<T> per)
      : prefix(std::move(pre)), period(std::move(per)) {}

  const T& at(std::size_t i) const {
    if (i < prefix.size()) return prefix[i];
    return period[(i - prefix.size()) % period.size()];
  }

  // Canonical form: primitive period, no prefix entry absorbable into the
  // period. Two sequences are pointwise equal iff normalized forms match.
  void normalize() {
    // primitive root of the period
    for (std::size_t d = 1; d <= period.size() / 2; ++d) {
      if (period.size() % d != 0) continue;
      bool rep = true;
      for (std::size_t i = d; i < period.size() && rep; ++i)
        rep = (period[i] == period[i % d]);
      if (rep) {
        period.resize(d);
        break;
      }
    }
    // absorb prefix tail: dropping the last prefix entry is sound when it
    // equals the last period entry (rotate the period right by one)
    while (!prefix.empty() && prefix.back() == period.back()) {
      period.insert(period.begin(), period.back());
      period.pop_back();
      prefix.pop_back();
    }
  }

  EvSeq normalized() const {
    EvSeq c = *this;
    c.normalize();
    return c;
  }

  bool operator==(const EvSeq& o) const {
    EvSeq a = normalized(), b = o.normalized();
    return a.prefix == b.prefix && a.period == b.period;
  }
  bool operator!=(const EvSeq& o) const { return !(*this == o); }

  template <typename F>
  auto map(F f) const -> EvSeq<decltype(f(std::declval<T>()))> {
    EvSeq<decltype(f(std::declval<T>()))> out;
    out.prefix.clear();
    out.period.clear();
    for (const auto& x : prefix) out.prefix.push_back(f(x));
    for (const auto& x : period) out.period.push_back(f(x));
    return out;
  }

  // Pointwise combination of two sequences; result period = lcm.
  template <typename U, typename F>
  auto zip(const EvSeq<U>& o, F f) const
      -> EvSeq<decltype(f(std::declval<T>(), std::declval<U>()))> {
    EvSeq<decltype(f(std::declval<T>(), std::declval<U>()))> out;
    out.prefix.clear();
    out.period.clear();
    std::size_t p = std::max(prefix.size(), o.prefix.size());
    std::size_t l = std::lcm(period.size(), o.period.size());
    for (std::size_t i = 0; i < p; ++i)
      out.prefix.push_back(f(at(i), o.at(i)));
    for (std::size_t i = p; i < p + l; ++i)
      out.period.push_back(f(at(i), o.at(i)));
    out.normalize();
    return out;
  }
};

}  // namespace ssg

#endif
