#include "braidforge/surface.hpp"

#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>

#include "braidforge/error.hpp"
#include "parallel.hpp"

namespace braidforge {

namespace {

constexpr int kConjugatorCanonicalizeThreshold = 48;

// Keeps stored conjugators from growing exponentially across repeated moves:
// free reduction always, full renormalization past a length threshold (the
// canonical word of a product grows additively, not multiplicatively).
BraidWord tidy_conjugator(BraidWord w) {
  w = free_reduce(w);
  if (w.length() > kConjugatorCanonicalizeThreshold) {
    w = garside_normal_form(w).to_word();
  }
  return w;
}

}  // namespace

BraidWord BandGenerator::as_word() const {
  BraidWord core = BraidWord::generator(conjugator.strand_count(), index, sign);
  return compose(compose(conjugator, core), invert(conjugator));
}

BraidSystem::BraidSystem(int degree, std::vector<BandGenerator> entries)
    : degree_(degree), entries_(std::move(entries)) {
  if (degree < 1) throw InputError("braid system degree must be at least 1");
  for (const BandGenerator& b : entries_) {
    if (b.conjugator.strand_count() != degree) {
      throw InputError("band generator strand count differs from system degree");
    }
    if (b.index < 1 || b.index >= degree) {
      throw InputError("band generator index out of range for degree");
    }
    if (b.sign != 1 && b.sign != -1) throw InputError("band generator sign must be +1 or -1");
  }
}

BraidSystem standard_braid_system(int m) {
  if (m < 2) throw InputError("standard braid system needs degree at least 2");
  std::vector<BandGenerator> entries;
  entries.reserve(m - 1);
  for (int i = 1; i < m; ++i) entries.push_back({BraidWord(m), i, 1});
  return BraidSystem(m, std::move(entries));
}

BraidWord boundary_braid(const BraidSystem& bs) {
  BraidWord product(bs.degree());
  for (const BandGenerator& b : bs.entries()) product = compose(product, b.as_word());
  return free_reduce(product);
}

BraidSystem hurwitz_act(int i, const BraidSystem& bs) {
  if (i < 1 || i >= bs.length()) throw InputError("Hurwitz move index out of range");
  std::vector<BandGenerator> entries = bs.entries();
  const BandGenerator left = entries[i - 1];
  const BandGenerator right = entries[i];
  entries[i - 1] = BandGenerator{tidy_conjugator(compose(left.as_word(), right.conjugator)),
                                 right.index, right.sign};
  entries[i] = left;
  return BraidSystem(bs.degree(), std::move(entries));
}

BraidSystem hurwitz_act_inverse(int i, const BraidSystem& bs) {
  if (i < 1 || i >= bs.length()) throw InputError("Hurwitz move index out of range");
  std::vector<BandGenerator> entries = bs.entries();
  const BandGenerator left = entries[i - 1];
  const BandGenerator right = entries[i];
  entries[i - 1] = right;
  entries[i] = BandGenerator{tidy_conjugator(compose(invert(right.as_word()), left.conjugator)),
                             left.index, left.sign};
  return BraidSystem(bs.degree(), std::move(entries));
}

std::string canonical_system_key(const BraidSystem& bs) {
  std::ostringstream os;
  for (const BandGenerator& b : bs.entries()) {
    os << garside_normal_form(b.as_word()).key() << '/';
  }
  return os.str();
}

OrbitResult hurwitz_orbit(const BraidSystem& bs, std::uint64_t cap) {
  if (cap == 0) throw InputError("orbit cap must be positive");
  std::unordered_set<std::string> seen;
  seen.insert(canonical_system_key(bs));
  std::vector<BraidSystem> frontier{bs};
  const int n = bs.length();
  const int workers = parallel_workers();
  bool truncated = false;

  while (!frontier.empty() && !truncated) {
    // Expand the whole level first, then merge in deterministic order.
    std::vector<std::vector<std::pair<std::string, BraidSystem>>> produced(frontier.size());
    auto expand = [&](std::size_t from, std::size_t to) {
      for (std::size_t s = from; s < to; ++s) {
        auto& out = produced[s];
        for (int i = 1; i < n; ++i) {
          BraidSystem child = hurwitz_act(i, frontier[s]);
          out.emplace_back(canonical_system_key(child), std::move(child));
          BraidSystem rchild = hurwitz_act_inverse(i, frontier[s]);
          out.emplace_back(canonical_system_key(rchild), std::move(rchild));
        }
      }
    };
    if (workers <= 1 || frontier.size() < 2) {
      expand(0, frontier.size());
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (frontier.size() + workers - 1) / workers;
      for (int t = 0; t < workers; ++t) {
        std::size_t from = t * chunk;
        std::size_t to = std::min(frontier.size(), from + chunk);
        if (from >= to) break;
        pool.emplace_back(expand, from, to);
      }
      for (std::thread& th : pool) th.join();
    }

    std::vector<BraidSystem> next;
    for (auto& children : produced) {
      for (auto& [key, child] : children) {
        if (seen.contains(key)) continue;
        if (seen.size() >= cap) {
          truncated = true;
          continue;
        }
        seen.insert(key);
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return OrbitResult{seen.size(), truncated};
}

std::uint64_t orbit_size_formula(int n) {
  if (n < 1) throw InputError("orbit size formula needs at least one entry");
  std::uint64_t result = 1;
  const std::uint64_t base = static_cast<std::uint64_t>(n) + 1;
  for (int k = 0; k < n - 1; ++k) {
    if (result > UINT64_MAX / base) throw DomainError("orbit size exceeds 64-bit range");
    result *= base;
  }
  return result;
}

BraidWord braid_representation(const BraidSystem& bs, const std::vector<int>& loop) {
  BraidWord image(bs.degree());
  for (int k : loop) {
    int idx = std::abs(k);
    if (idx < 1 || idx > bs.length()) throw InputError("loop index out of range");
    BraidWord w = bs.entries()[idx - 1].as_word();
    image = compose(image, k > 0 ? w : invert(w));
  }
  return image;
}

CoverReport monodromy_report(const BraidSystem& bs, int base_euler) {
  const int m = bs.degree();
  std::vector<int> root(m);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const BandGenerator& b : bs.entries()) {
    Permutation p = underlying_permutation(b.as_word());
    for (int j = 1; j <= m; ++j) {
      int a = find(j - 1), c = find(p(j) - 1);
      if (a != c) root[a] = c;
    }
  }
  int components = 0;
  for (int j = 0; j < m; ++j) {
    if (find(j) == j) ++components;
  }
  CoverReport report;
  report.degree = m;
  report.base_euler = base_euler;
  report.branch_count = bs.length();
  report.cover_euler = m * base_euler - bs.length();
  report.transitive = components == 1;
  return report;
}

int multisection_degree(const MultisectionSpec& ms) {
  if (ms.sections < 1) throw InputError("section count must be at least 1");
  if (ms.cone_order < 2) throw InputError("cone order must be at least 2");
  return ms.sections * ms.cone_order;
}

}  // namespace braidforge
