#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidforge/braid.hpp"

namespace braidforge {

// A band generator w sigma_i^{+-1} w^{-1}, stored structurally so that being a
// conjugate of a standard generator holds by construction.
struct BandGenerator {
  BraidWord conjugator;
  int index;
  int sign;

  BraidWord as_word() const;

  friend bool operator==(const BandGenerator&, const BandGenerator&) = default;
};

// Monodromy datum of a braided surface: an ordered tuple of band generators
// on a common strand count (the covering degree).
class BraidSystem {
 public:
  BraidSystem(int degree, std::vector<BandGenerator> entries);

  int degree() const { return degree_; }
  int length() const { return static_cast<int>(entries_.size()); }
  const std::vector<BandGenerator>& entries() const { return entries_; }

 private:
  int degree_;
  std::vector<BandGenerator> entries_;
};

// (sigma_1, ..., sigma_{m-1}) with trivial conjugators.
BraidSystem standard_braid_system(int m);

// Product of the expanded entries in order, freely reduced.
BraidWord boundary_braid(const BraidSystem& bs);

// Entry i becomes b_i b_{i+1} b_i^{-1}, entry i+1 becomes the old b_i.
BraidSystem hurwitz_act(int i, const BraidSystem& bs);

// Entry i becomes the old b_{i+1}, entry i+1 becomes b_{i+1}^{-1} b_i b_{i+1}.
BraidSystem hurwitz_act_inverse(int i, const BraidSystem& bs);

// Canonical identity of a system: normal forms of the expanded entries. Two
// systems with equal expansions share a key whatever their stored conjugators.
std::string canonical_system_key(const BraidSystem& bs);

struct OrbitResult {
  std::uint64_t size = 0;
  bool truncated = false;
};

// Breadth-first closure under the action and its inverse. Stops discovering
// once cap states are known and reports truncation instead of throwing.
// Frontier expansion parallelizes across BRAIDFORGE_THREADS workers.
OrbitResult hurwitz_orbit(const BraidSystem& bs, std::uint64_t cap);

// (n+1)^(n-1), the orbit size of the standard tuple with n entries.
std::uint64_t orbit_size_formula(int n);

// Image of a loop word under the monodromy homomorphism: signed indices into
// the entries map to expanded band generators and their inverses.
BraidWord braid_representation(const BraidSystem& bs, const std::vector<int>& loop);

struct CoverReport {
  int degree = 0;
  int base_euler = 0;
  int branch_count = 0;
  int cover_euler = 0;
  bool transitive = false;
};

// Degree/branch-count accounting for the branched cover the system encodes;
// each entry is one simple branch point. transitive reports whether the entry
// permutations generate a transitive group (a connected cover).
CoverReport monodromy_report(const BraidSystem& bs, int base_euler);

struct MultisectionSpec {
  int sections;    // l >= 1
  int cone_order;  // nu >= 2
};

// Covering degree l*nu of the cover a multisection determines.
int multisection_degree(const MultisectionSpec& ms);

}  // namespace braidforge
