#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orderforge/poset.hpp"
#include "orderforge/util.hpp"

namespace orderforge {

// Ordered incomparable pairs of one poset, the unit of dimension accounting.
struct IncPairSet {
  const Poset* p = nullptr;
  std::vector<std::pair<int, int>> pairs;

  static IncPairSet all(const Poset& p);
  static IncPairSet minmax(const Poset& p);
  static IncPairSet between(const Poset& p, const Bits& A, const Bits& B);
  // validated: every pair incomparable, no duplicates
  static IncPairSet of(const Poset& p, std::vector<std::pair<int, int>> pairs);

  int size() const { return (int)pairs.size(); }
  IncPairSet subset(const std::vector<int>& idx) const;
};

struct ReversibilityResult {
  bool reversible = false;
  LinearExtension extension;                           // set when reversible
  std::vector<std::pair<int, int>> alternating_cycle;  // pair cycle otherwise
  std::vector<std::string> element_cycle;              // flattened certificate
};

// A set of pairs is reversible iff the order digraph plus the reversed pair
// arcs stays acyclic; the certificate on failure is the alternating cycle.
ReversibilityResult is_reversible(const IncPairSet& I);

struct Realizer {
  std::vector<std::vector<int>> classes;  // pair indices into the input set
  std::vector<LinearExtension> extensions;
};

struct DimResult {
  int d = 0;
  Realizer realizer;
  long long nodes = 0;
};

// Least number of reversible classes partitioning I (exact, deterministic).
// dim_of on the empty set is 0 by convention.
DimResult dim_of(const IncPairSet& I, Budget* budget = nullptr);

int dim_between(const Poset& p, const Bits& A, const Bits& B, Budget* budget = nullptr);

// 1 for nonempty linear orders, else dim_of over all incomparable pairs.
int dim_poset(const Poset& p, Budget* budget = nullptr);

struct StandardExample {
  std::vector<std::pair<int, int>> pairs;  // (a_i, b_i)
  int size() const { return (int)pairs.size(); }
};

// Size and witness of a largest standard example inside I (exact).
std::pair<int, StandardExample> rho(const IncPairSet& I, Budget* budget = nullptr);

// check the standard-example axioms for explicit pairs
bool is_standard_example(const Poset& p, const std::vector<std::pair<int, int>>& pairs);

struct KellyWitness {
  int n = 0;                 // 0 = no witness
  std::vector<int> a, b;     // 1-based, size n+1
  std::vector<int> c, d;     // 1-based, size n; c[1]=a[1], c[n-1]=b[n], d[1]=b[1], d[n-1]=a[n]
  std::vector<int> elements(const Poset& p) const;
};

// Largest n in [3, n_max] such that p has a subposet isomorphic to the Kelly
// poset on [n]; returns (2, nullopt) when there is none.
std::pair<int, std::optional<KellyWitness>> kappa(const Poset& p, int n_max = -1,
                                                  Budget* budget = nullptr);

// n_max default derived from |P| >= 4n-6
int kappa_cap(const Poset& p);

bool verify_kelly_witness(const Poset& p, const KellyWitness& w);

long long bound_f(long long k);       // 4k * (360 * (4k+7))^2
long long bound_height(long long h);  // 2 * f(2h-1)

}  // namespace orderforge
