#include <doctest.h>

#include <algorithm>
#include <array>

#include "mgrack/finite_group.hpp"

using namespace mgrack;

namespace {

// Independent reconstruction of the S3 table from explicit permutations,
// composed "first g, then h".
std::vector<Elt> s3_table_from_permutations() {
  using Perm = std::array<Elt, 3>;
  auto compose = [](const Perm& g, const Perm& h) {
    return Perm{h[g[0]], h[g[1]], h[g[2]]};
  };
  const Perm id{0, 1, 2};
  const Perm a{1, 2, 0};
  const Perm x{0, 2, 1};
  const std::array<Perm, 6> elems = {id, a, compose(a, a), x, compose(a, x),
                                     compose(compose(a, a), x)};
  std::vector<Elt> table;
  for (const Perm& g : elems) {
    for (const Perm& h : elems) {
      const Perm gh = compose(g, h);
      for (Elt i = 0; i < 6; ++i) {
        if (elems[i] == gh) table.push_back(i);
      }
    }
  }
  return table;
}

}  // namespace

TEST_CASE("s3 table matches an independent permutation model") {
  const FiniteGroup s3 = s3_presented();
  CHECK(s3.order() == 6);
  CHECK(s3.table() == s3_table_from_permutations());
  CHECK(verify_group_axioms(s3.table(), 6, s3.identity()));
}

TEST_CASE("s3 satisfies the presentation relations") {
  const FiniteGroup s3 = s3_presented();
  const Elt a = 1, x = 3;
  CHECK(s3.mul(a, s3.mul(a, a)) == s3.identity());  // a^3 = e
  CHECK(s3.mul(x, x) == s3.identity());             // x^2 = e
  CHECK(s3.mul(s3.mul(x, a), x) == 2);              // xax = a^2
  CHECK(s3.label(2) == "a2");
  CHECK_FALSE(s3.is_abelian());
}

TEST_CASE("group axiom verification") {
  const FiniteGroup s3 = s3_presented();
  SUBCASE("trivial group") {
    CHECK(verify_group_axioms({0}, 1, 0));
  }
  SUBCASE("corrupted cell fails") {
    std::vector<Elt> bad = s3.table();
    bad[1 * 6 + 2] = (bad[1 * 6 + 2] + 1) % 6;
    CHECK_FALSE(verify_group_axioms(bad, 6, 0));
    const auto report = verify_group_axioms_report(bad, 6, 0);
    REQUIRE(report.violation.has_value());
    CHECK_FALSE(report.ok);
  }
  SUBCASE("dimension mismatch is a format error") {
    CHECK_THROWS_AS(verify_group_axioms({0, 1, 2}, 2, 0), std::invalid_argument);
  }
  SUBCASE("every corruption of a non-identity cell is caught") {
    for (Elt g = 1; g < 6; ++g) {
      for (Elt h = 1; h < 6; ++h) {
        std::vector<Elt> bad = s3.table();
        bad[g * 6 + h] = (bad[g * 6 + h] + 1) % 6;
        CHECK_FALSE(verify_group_axioms(bad, 6, 0));
      }
    }
  }
}

TEST_CASE("cyclic groups") {
  const FiniteGroup z1 = cyclic_group(1);
  CHECK(z1.order() == 1);
  CHECK(verify_group_axioms(z1.table(), 1, 0));
  const FiniteGroup z3 = cyclic_group(3);
  CHECK(z3.mul(1, 2) == 0);
  CHECK(z3.is_abelian());
  CHECK(verify_group_axioms(z3.table(), 3, 0));
}

TEST_CASE("conjugation") {
  const FiniteGroup s3 = s3_presented();
  const Elt a = 1, x = 3;
  CHECK(s3.conjugate(a, x) == 2);  // x^-1 a x = a^2
  SUBCASE("identity conjugator fixes everything") {
    for (Elt g = 0; g < 6; ++g) CHECK(s3.conjugate(g, s3.identity()) == g);
  }
  SUBCASE("value fixed by the composition convention") {
    // a^-1 x a evaluates to ax under first-then composition.
    CHECK(s3.conjugate(x, a) == 4);
  }
  SUBCASE("conjugation by h is a bijection and inverts") {
    for (Elt h = 0; h < 6; ++h) {
      std::vector<char> seen(6, 0);
      for (Elt g = 0; g < 6; ++g) {
        const Elt c = s3.conjugate(g, h);
        CHECK_FALSE(seen[c]);
        seen[c] = 1;
        CHECK(s3.conjugate(c, s3.inverse(h)) == g);
      }
    }
  }
}

TEST_CASE("commutators") {
  const FiniteGroup s3 = s3_presented();
  for (Elt g = 0; g < 6; ++g) CHECK(s3.commutator(g, g) == s3.identity());
  const FiniteGroup z6 = cyclic_group(6);
  for (Elt g = 0; g < 6; ++g) {
    for (Elt h = 0; h < 6; ++h) CHECK(z6.commutator(g, h) == 0);
  }
  CHECK(s3.commutator(1, 3) != s3.identity());
  CHECK(s3.commutator(1, 3) == 2);  // a x a^2 x = a^2
}

TEST_CASE("subgroups and normality") {
  const FiniteGroup s3 = s3_presented();
  CHECK(is_normal_subgroup(s3, {0, 1, 2}));
  CHECK(is_normal_subgroup(s3, {0, 1, 2, 3, 4, 5}));
  CHECK_FALSE(is_normal_subgroup(s3, {0, 3}));  // a^-1 x a not in {e, x}
  CHECK_FALSE(is_normal_subgroup(s3, {0, 1}));  // not even a subgroup
  CHECK_THROWS_AS(make_subgroup_witness(s3, {0, 1}), std::invalid_argument);
  SUBCASE("normality implies conjugation stays inside") {
    const auto a3 = make_subgroup_witness(s3, {0, 1, 2});
    for (Elt n : a3.members) {
      for (Elt g = 0; g < 6; ++g) {
        CHECK(std::binary_search(a3.members.begin(), a3.members.end(), s3.conjugate(n, g)));
      }
    }
  }
}

TEST_CASE("semidirect product with right conjugation") {
  const FiniteGroup s3 = s3_presented();
  const FiniteGroup h = semidirect_right_conj(full_subgroup(s3));
  CHECK(h.order() == 36);
  CHECK(verify_group_axioms(h.table(), 36, h.identity()));
  CHECK(h.label(h.identity()) == "(e,e)");

  SUBCASE("identity acts as expected") {
    for (Elt p = 0; p < 36; ++p) {
      CHECK(h.mul(h.identity(), p) == p);
      CHECK(h.mul(p, h.identity()) == p);
    }
  }
  SUBCASE("pair product follows the twisted law") {
    // (a,x)(a,x) = (a^2, x^a x) = (a^2, a); pair (g,n) has index 6g + n.
    const Elt ax = 1 * 6 + 3;
    CHECK(h.mul(ax, ax) == 2 * 6 + 1);
    for (Elt g1 = 0; g1 < 6; ++g1) {
      for (Elt n1 = 0; n1 < 6; ++n1) {
        for (Elt g2 = 0; g2 < 6; ++g2) {
          for (Elt n2 = 0; n2 < 6; ++n2) {
            const Elt expect = s3.mul(g1, g2) * 6 + s3.mul(s3.conjugate(n1, g2), n2);
            CHECK(h.mul(g1 * 6 + n1, g2 * 6 + n2) == expect);
          }
        }
      }
    }
  }
  SUBCASE("trivial normal subgroup reproduces the group") {
    const FiniteGroup g1 = semidirect_right_conj(trivial_subgroup(s3));
    CHECK(g1.order() == 6);
    CHECK(g1.table() == s3.table());
  }
  SUBCASE("abelian full subgroup gives the direct product") {
    const FiniteGroup z4 = cyclic_group(4);
    const FiniteGroup d = semidirect_right_conj(full_subgroup(z4));
    CHECK(d.order() == 16);
    for (Elt g1 = 0; g1 < 4; ++g1) {
      for (Elt n1 = 0; n1 < 4; ++n1) {
        for (Elt g2 = 0; g2 < 4; ++g2) {
          for (Elt n2 = 0; n2 < 4; ++n2) {
            CHECK(d.mul(g1 * 4 + n1, g2 * 4 + n2) == z4.mul(g1, g2) * 4 + z4.mul(n1, n2));
          }
        }
      }
    }
  }
  SUBCASE("non-normal subgroup is rejected") {
    const SubgroupWitness w = make_subgroup_witness(s3, {0, 3});
    CHECK_THROWS_AS(semidirect_right_conj(w), std::invalid_argument);
  }
}

TEST_CASE("order cap is enforced") {
  std::vector<Elt> table = {0, 1, 1, 0};
  CHECK_THROWS_AS(FiniteGroup(2, table, 0, {}, /*max_order=*/1), std::invalid_argument);
}
