#include "braidforge/presentation.hpp"

#include <map>
#include <numeric>
#include <random>
#include <utility>

#include "braidforge/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace braidforge;
using boost::multiprecision::cpp_int;

namespace {

std::vector<std::vector<cpp_int>> exponent_matrix(const GroupPresentation& p) {
  std::vector<std::vector<cpp_int>> m(p.relators().size(),
                                      std::vector<cpp_int>(p.generator_count(), 0));
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    for (int letter : p.relators()[i]) {
      m[i][std::abs(letter) - 1] += letter > 0 ? 1 : -1;
    }
  }
  return m;
}

GroupPresentation random_presentation(std::mt19937_64& rng) {
  int gens = static_cast<int>(rng() % 6);
  int relator_count = static_cast<int>(rng() % 6);
  std::vector<std::vector<int>> relators;
  for (int r = 0; r < relator_count; ++r) {
    std::vector<int> word;
    if (gens > 0) {
      int length = static_cast<int>(rng() % 7);
      for (int k = 0; k < length; ++k) {
        int idx = 1 + static_cast<int>(rng() % gens);
        word.push_back((rng() & 1) ? idx : -idx);
      }
    }
    relators.push_back(std::move(word));
  }
  return GroupPresentation(gens, std::move(relators));
}

std::vector<WreathElement> all_elements(const WreathGroupSpec& spec) {
  const int n = spec.copies;
  std::vector<std::vector<long long>> label_choices{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<long long>> next;
    for (const std::vector<long long>& prefix : label_choices) {
      for (long long v = 0; v < spec.base_order; ++v) {
        std::vector<long long> extended = prefix;
        extended.push_back(v);
        next.push_back(std::move(extended));
      }
    }
    label_choices = std::move(next);
  }
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<WreathElement> elements;
  do {
    for (const std::vector<long long>& labels : label_choices) {
      elements.push_back(WreathElement{labels, Permutation(images)});
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return elements;
}

}  // namespace

TEST_SUITE("presentation") {
  TEST_CASE("presentation letters are validated") {
    CHECK_THROWS_AS(GroupPresentation(2, {{1, 0}}), InputError);
    CHECK_THROWS_AS(GroupPresentation(2, {{3}}), InputError);
    CHECK_THROWS_AS(GroupPresentation(2, {{-3}}), InputError);
    CHECK_THROWS_AS(GroupPresentation(-1, {}), InputError);
    CHECK_NOTHROW(GroupPresentation(0, {{}}));
  }

  TEST_CASE("conjugation-shaped relators are recognized") {
    CHECK(validate_c_group(GroupPresentation(3, {})));
    CHECK(validate_c_group(GroupPresentation(3, {{1, 2, -1, -3}})));
    CHECK(validate_c_group(GroupPresentation(2, {{1, 1, -1, -2}, {2, 1, -2, -1}})));
    CHECK_FALSE(validate_c_group(GroupPresentation(1, {{1, 1}})));
    CHECK_FALSE(validate_c_group(GroupPresentation(3, {{1, 2, -2, -3}})));
    CHECK_FALSE(validate_c_group(GroupPresentation(3, {{-1, 2, 1, -3}})));
    CHECK_FALSE(validate_c_group(GroupPresentation(3, {{1, 2, -1, 3}})));
    CHECK_FALSE(validate_c_group(GroupPresentation(3, {{1, -2, -1, -3}})));
    CHECK_FALSE(validate_c_group(GroupPresentation(3, {{1, 2, -1, -3, 3, -3}})));
  }

  TEST_CASE("abelianization of small fixtures") {
    CHECK(abelianization(GroupPresentation(1, {})) == AbelianizationResult{1, {}});
    CHECK(abelianization(GroupPresentation(0, {})) == AbelianizationResult{0, {}});
    // Wirtinger presentation of a knot group abelianizes to the integers.
    CHECK(abelianization(GroupPresentation(2, {{1, 2, 1, -2, -1, -2}})) ==
          AbelianizationResult{1, {}});
    CHECK(abelianization(GroupPresentation(1, {{1, 1}})) == AbelianizationResult{0, {2}});
    CHECK(abelianization(GroupPresentation(1, {{1, 1, 1, 1, 1}})) ==
          AbelianizationResult{0, {5}});
    CHECK(abelianization(GroupPresentation(3, {{1, -2}, {2, -3}})) ==
          AbelianizationResult{1, {}});
    // diag(2, 4) already forms a chain; diag(2, 3) must become (1, 6).
    CHECK(abelianization(GroupPresentation(2, {{1, 1}, {2, 2, 2, 2}})) ==
          AbelianizationResult{0, {2, 4}});
    CHECK(abelianization(GroupPresentation(2, {{1, 1}, {2, 2, 2}})) ==
          AbelianizationResult{0, {6}});
  }

  TEST_CASE("abelianization matches the determinantal-divisor oracle") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 300; ++t) {
      GroupPresentation p = random_presentation(rng);
      AbelianizationResult got = abelianization(p);
      testing::MinorsSmithResult expected = testing::smith_by_minors(exponent_matrix(p));
      CHECK(got.free_rank == p.generator_count() - expected.rank);
      std::vector<cpp_int> expected_torsion;
      for (const cpp_int& e : expected.elementary_divisors) {
        if (e > 1) expected_torsion.push_back(e);
      }
      CHECK(got.torsion_coefficients == expected_torsion);
      for (std::size_t i = 0; i + 1 < got.torsion_coefficients.size(); ++i) {
        CHECK(got.torsion_coefficients[i + 1] % got.torsion_coefficients[i] == 0);
      }
    }
  }

  TEST_CASE("component count of conjugation presentations") {
    std::mt19937_64 rng(43);
    for (int components = 1; components <= 3; ++components) {
      for (int t = 0; t < 20; ++t) {
        int gens = components + 1 + static_cast<int>(rng() % 5);
        std::vector<int> component_of(gens);
        // Every component gets at least one generator; the rest are random.
        for (int i = 0; i < gens; ++i) {
          component_of[i] = i < components ? i : static_cast<int>(rng() % components);
        }
        std::vector<std::vector<int>> chains(components);
        for (int i = 0; i < gens; ++i) chains[component_of[i]].push_back(i + 1);
        std::vector<std::vector<int>> relators;
        for (const std::vector<int>& chain : chains) {
          for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            int a = 1 + static_cast<int>(rng() % gens);
            relators.push_back({a, chain[k], -a, -chain[k + 1]});
          }
        }
        for (int extra = 0; extra < 3; ++extra) {
          int c = static_cast<int>(rng() % components);
          int b = chains[c][rng() % chains[c].size()];
          int d = chains[c][rng() % chains[c].size()];
          int a = 1 + static_cast<int>(rng() % gens);
          relators.push_back({a, b, -a, -d});
        }
        GroupPresentation p(gens, std::move(relators));
        REQUIRE(validate_c_group(p));
        AbelianizationResult ab = abelianization(p);
        CHECK(ab.free_rank == components);
        CHECK(ab.torsion_coefficients.empty());
      }
    }
  }

  TEST_CASE("orbifold quotients append powered loops") {
    GroupPresentation p(1, {});
    GroupPresentation q = orbifold_quotient(p, {{1}}, {2});
    REQUIRE(q.relators() == std::vector<std::vector<int>>{{1, 1}});
    CHECK(abelianization(q) == AbelianizationResult{0, {2}});
    for (int nu = 2; nu <= 7; ++nu) {
      CHECK(abelianization(orbifold_quotient(p, {{1}}, {nu})) ==
            AbelianizationResult{0, {cpp_int(nu)}});
    }
    GroupPresentation unchanged = orbifold_quotient(p, {}, {});
    CHECK(unchanged.generator_count() == 1);
    CHECK(unchanged.relators().empty());
    GroupPresentation two(2, {{1, -2}});
    GroupPresentation mixed = orbifold_quotient(two, {{1, 2}, {2}}, {2, 3});
    CHECK(mixed.relators() ==
          std::vector<std::vector<int>>{{1, -2}, {1, 2, 1, 2}, {2, 2, 2}});
    CHECK_THROWS_AS(orbifold_quotient(p, {{1}}, {2, 3}), InputError);
    CHECK_THROWS_AS(orbifold_quotient(p, {{2}}, {2}), InputError);
    CHECK_THROWS_AS(orbifold_quotient(p, {{1}}, {1}), InputError);
  }

  TEST_CASE("braid groups of configuration spaces with cyclic base") {
    WreathGroupSpec trivial = configuration_braid_group(AbelianizationResult{0, {}}, 4);
    CHECK(trivial.base_order == 1);
    CHECK(trivial.order() == 24);
    CHECK_FALSE(trivial.homotopy_note.empty());

    WreathGroupSpec cyclic = configuration_braid_group(AbelianizationResult{0, {2}}, 3);
    CHECK(cyclic.base_order == 2);
    CHECK(cyclic.order() == 48);

    WreathGroupSpec infinite = configuration_braid_group(AbelianizationResult{1, {}}, 2);
    CHECK(infinite.infinite_base);
    CHECK_THROWS_AS(infinite.order(), DomainError);

    CHECK_THROWS_AS(configuration_braid_group(AbelianizationResult{2, {}}, 2), DomainError);
    CHECK_THROWS_AS(configuration_braid_group(AbelianizationResult{1, {2}}, 2), DomainError);
    CHECK_THROWS_AS(configuration_braid_group(AbelianizationResult{0, {2, 4}}, 2), DomainError);
    CHECK_THROWS_AS(configuration_braid_group(AbelianizationResult{0, {2}}, 0), InputError);
  }

  TEST_CASE("wreath multiplication fixtures") {
    WreathGroupSpec spec{2, 2, false, ""};
    WreathElement id{{0, 0}, Permutation(2)};
    WreathElement g{{1, 0}, Permutation(2)};
    CHECK(wreath_multiply(id, g, spec) == g);
    CHECK(wreath_multiply(g, id, spec) == g);
    CHECK(wreath_multiply(g, g, spec) == id);
    CHECK_THROWS_AS(wreath_multiply(WreathElement{{0}, Permutation(1)}, g, spec), InputError);
    CHECK_THROWS_AS(wreath_multiply(WreathElement{{2, 0}, Permutation(2)}, g, spec),
                    InputError);

    WreathGroupSpec over_z{0, 2, true, ""};
    WreathElement a{{5, -3}, Permutation(2)};
    WreathElement b{{-1, 9}, Permutation::transposition(2, 1)};
    WreathElement ab = wreath_multiply(a, b, over_z);
    CHECK(ab.labels == std::vector<long long>{4, 6});
    CHECK(ab.perm == Permutation::transposition(2, 1));
  }

  TEST_CASE("wreath groups are groups") {
    for (long long nu = 1; nu <= 3; ++nu) {
      for (int n = 1; n <= 3; ++n) {
        WreathGroupSpec spec{nu, n, false, ""};
        std::vector<WreathElement> elements = all_elements(spec);
        REQUIRE(cpp_int(elements.size()) == spec.order());
        WreathElement id{std::vector<long long>(n, 0), Permutation(n)};
        for (const WreathElement& g : elements) {
          bool has_inverse = false;
          for (const WreathElement& h : elements) {
            if (wreath_multiply(g, h, spec) == id && wreath_multiply(h, g, spec) == id) {
              has_inverse = true;
              break;
            }
          }
          CHECK(has_inverse);
        }
        if (cpp_int(elements.size()) <= 48) {
          for (const WreathElement& a : elements) {
            for (const WreathElement& b : elements) {
              for (const WreathElement& c : elements) {
                CHECK(wreath_multiply(wreath_multiply(a, b, spec), c, spec) ==
                      wreath_multiply(a, wreath_multiply(b, c, spec), spec));
              }
            }
          }
        }
      }
    }
    // Spot-check associativity in the largest case.
    WreathGroupSpec spec{3, 3, false, ""};
    std::vector<WreathElement> elements = all_elements(spec);
    std::mt19937_64 rng(47);
    for (int t = 0; t < 20000; ++t) {
      const WreathElement& a = elements[rng() % elements.size()];
      const WreathElement& b = elements[rng() % elements.size()];
      const WreathElement& c = elements[rng() % elements.size()];
      CHECK(wreath_multiply(wreath_multiply(a, b, spec), c, spec) ==
            wreath_multiply(a, wreath_multiply(b, c, spec), spec));
    }
  }

  TEST_CASE("cyclic subgroup generated by a labelled transposition closes") {
    WreathGroupSpec spec{2, 3, false, ""};
    WreathElement g{{1, 0, 0}, Permutation::transposition(3, 1)};
    WreathElement id{{0, 0, 0}, Permutation(3)};
    WreathElement power = g;
    cpp_int steps = 1;
    while (!(power == id)) {
      power = wreath_multiply(power, g, spec);
      ++steps;
      REQUIRE(steps <= spec.order());
    }
    CHECK(spec.order() % steps == 0);
  }
}
