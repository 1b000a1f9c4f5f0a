#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kpack {

inline constexpr std::string_view kVersion = "0.1.0";

// Invalid arguments to an operation (violated preconditions, malformed inputs).
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text input that does not conform to a file format. Lines are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An internal numeric routine failed to converge or certify its result.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bounded search ran out of its node budget before reaching a conclusion.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violation list produced by the various checkers. Empty means valid.
struct ValidityReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void fail(std::string what) { violations.push_back(std::move(what)); }
};

// Deterministic RNG used everywhere randomness is called for.  mt19937_64 is
// fully specified by the C++ standard; bounded draws use rejection sampling
// and shuffles are explicit Fisher-Yates, so identical seeds give identical
// streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  template <class T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(xs[i - 1], xs[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

// Content fingerprint for run manifests (not cryptographic).
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

// Fixed-capacity bitset sized at runtime; backs adjacency rows and edge sets.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_(static_cast<std::size_t>((n + 63) / 64), 0) {}

  int size() const { return n_; }
  void set(int i) { w_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (w_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
  }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // First set bit at index >= from, or -1.
  int next_set(int from) const {
    if (from >= n_) return -1;
    std::size_t wi = static_cast<std::size_t>(from >> 6);
    std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<int>(wi << 6) + std::countr_zero(w);
      if (++wi >= w_.size()) return -1;
      w = w_[wi];
    }
  }

  template <class F>
  void for_each(F f) const {
    for (int i = next_set(0); i >= 0; i = next_set(i + 1)) f(i);
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace kpack
