#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace orderforge {

enum class Err {
  CycleDetected,
  DuplicateElement,
  UnknownElement,
  EmptyPoset,
  EmptyInput,
  NotComparable,
  OverlappingGroundSets,
  NonPositive,
  TooSmall,
  NotConnected,
  NotMinimal,
  PreconditionFailed,
  BudgetExceeded,
  NotPlanar,
  InvalidEmbedding,
  NotDoublyExposed,
  NotInTree,
  Disconnected,
  PigeonholeFailed,
  ConstructionFailed,
  ModelInvalid,
  InternalCheck,
  BadInput,
};

const char* err_name(Err k);

struct Error : std::runtime_error {
  Err kind;
  Error(Err k, const std::string& msg)
      : std::runtime_error(std::string(err_name(k)) + ": " + msg), kind(k) {}
};

[[noreturn]] inline void fail(Err k, const std::string& msg) { throw Error(k, msg); }

inline void check(bool ok, Err k, const std::string& msg) {
  if (!ok) fail(k, msg);
}

// Internal consistency check. A failure here means a bug, not bad input:
// the constructions are backed by proved statements.
inline void bug_check(bool ok, const std::string& msg) {
  if (!ok) fail(Err::InternalCheck, msg);
}

// Node budget for the exact solvers and enumerations.
struct Budget {
  long long limit = 10'000'000;
  long long used = 0;
  explicit Budget(long long lim = 10'000'000) : limit(lim) {}
  void tick(long long k = 1) {
    used += k;
    if (used > limit) fail(Err::BudgetExceeded, "node budget exhausted (" + std::to_string(limit) + ")");
  }
  bool try_tick(long long k = 1) {
    used += k;
    return used <= limit;
  }
};

// Dynamic bitset of fixed width n.
class Bits {
 public:
  Bits() : n_(0) {}
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int width() const { return n_; }
  void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }
  int count() const;

  Bits& operator|=(const Bits& o);
  Bits& operator&=(const Bits& o);
  Bits& subtract(const Bits& o);  // this &= ~o
  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool intersects(const Bits& o) const;
  bool subset_of(const Bits& o) const;

  std::vector<int> to_vector() const;
  template <class F>
  void for_each(F f) const {
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      uint64_t w = w_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        f((int)(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  static Bits full(int n) {
    Bits b(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
  }
  static Bits of(int n, const std::vector<int>& xs) {
    Bits b(n);
    for (int x : xs) b.set(x);
    return b;
  }

 private:
  int n_;
  std::vector<uint64_t> w_;
};

// Deterministic RNG. Only raw draws and a portable bounded reduction are
// used so outputs are identical across platforms.
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  uint64_t next() {
    // splitmix64
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, m)
  uint64_t below(uint64_t m) { return m ? next() % m : 0; }
  // Bernoulli with probability num/den
  bool chance(uint64_t num, uint64_t den) { return below(den) < num; }
  double unit() { return (next() >> 11) * (1.0 / 9007199254740992.0); }
};

}  // namespace orderforge
