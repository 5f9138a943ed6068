#pragma once

// Plain string reference implementations used to cross-check the engines.
// Deliberately slow and simple: no bit packing, no shared code with core/.

#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace oracle {

inline std::size_t budget(std::size_t h, double beta) {
  return static_cast<std::size_t>(std::floor(beta * static_cast<double>(h) + 1e-9));
}

inline std::size_t mismatches(const std::string& s, std::size_t i0, std::size_t h) {
  std::size_t d = 0;
  for (std::size_t t = 0; t < h; ++t) d += s[i0 + t] != s[i0 + h + t];
  return d;
}

inline bool square_free(const std::string& s) {
  for (std::size_t h = 1; 2 * h <= s.size(); ++h)
    for (std::size_t i = 0; i + 2 * h <= s.size(); ++i)
      if (s.compare(i, h, s, i + h, h) == 0) return false;
  return true;
}

// every string reachable by one deduplication (both keep sides)
inline std::vector<std::string> children(const std::string& s, double beta) {
  std::vector<std::string> out;
  for (std::size_t h = 1; 2 * h <= s.size(); ++h) {
    for (std::size_t i = 0; i + 2 * h <= s.size(); ++i) {
      if (mismatches(s, i, h) > budget(h, beta)) continue;
      out.push_back(s.substr(0, i + h) + s.substr(i + 2 * h));
      out.push_back(s.substr(0, i) + s.substr(i + h));
    }
  }
  return out;
}

class Distance {
 public:
  explicit Distance(double beta = 0.0) : beta_(beta) {}

  unsigned operator()(const std::string& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    unsigned best;
    if (square_free(s)) {
      best = 0;
    } else {
      best = ~0u;
      for (const auto& c : children(s, beta_)) {
        const unsigned d = (*this)(c);
        if (d != ~0u && d + 1 < best) best = d + 1;
      }
    }
    memo_[s] = best;
    return best;
  }

 private:
  double beta_;
  std::map<std::string, unsigned> memo_;
};

inline std::string bits(unsigned long long v, std::size_t len) {
  std::string s(len, '0');
  for (std::size_t k = 0; k < len; ++k)
    if ((v >> (len - 1 - k)) & 1ULL) s[k] = '1';
  return s;
}

inline unsigned ceil_log2(unsigned long long x) {
  unsigned r = 0;
  while ((1ULL << r) < x) ++r;
  return r;
}

}  // namespace oracle
