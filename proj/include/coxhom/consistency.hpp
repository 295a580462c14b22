#ifndef COXHOM_CONSISTENCY_HPP_
#define COXHOM_CONSISTENCY_HPP_

// Self-checks run by `coxhom check`: identities between the invariants,
// agreement with the brute-force oracles, and the generator-word contract.
// A failure here always means a bug, never a property of the input.

#include <string>
#include <vector>

#include "coxhom/chains.hpp"
#include "coxhom/graph.hpp"
#include "coxhom/invariants.hpp"
#include "coxhom/oracles.hpp"
#include "coxhom/words.hpp"

namespace coxhom {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline std::string expect_eq(std::int64_t got, std::int64_t want) {
  return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

inline bool omega_counts_ok(OmegaSets const& o, InvariantProfile const& p) {
  return static_cast<std::int64_t>(o.omega1.size()) == p.p + p.q1 &&
         static_cast<std::int64_t>(o.omega2.size()) == p.q2 &&
         static_cast<std::int64_t>(o.omega3.size()) == p.q3 &&
         static_cast<std::int64_t>(o.total()) == p.p + p.q;
}

inline bool all_abelianize_to_zero(OmegaSets const& o, std::size_t rank) {
  for (auto const& w : o.omega1) {
    if (!abelianize(w.word, rank).is_zero()) return false;
  }
  for (auto const& w : o.omega2) {
    if (!abelianize(w.word, rank).is_zero()) return false;
  }
  for (auto const& w : o.omega3) {
    if (!abelianize(w.word, rank).is_zero()) return false;
  }
  return true;
}

}  // namespace detail

/// Artin omega sets project onto the Coxeter ones: omega1/omega2 words equal
/// verbatim, omega3 relator exponents equal mod 2.
inline bool projection_matches(OmegaSets const& artin,
                               OmegaSets const& coxeter) {
  if (artin.omega1.size() != coxeter.omega1.size() ||
      artin.omega2.size() != coxeter.omega2.size() ||
      artin.omega3.size() != coxeter.omega3.size()) {
    return false;
  }
  for (std::size_t i = 0; i < artin.omega1.size(); ++i) {
    if (project_word(artin.omega1[i].word) != coxeter.omega1[i].word) {
      return false;
    }
  }
  for (std::size_t i = 0; i < artin.omega2.size(); ++i) {
    if (project_word(artin.omega2[i].word) != coxeter.omega2[i].word) {
      return false;
    }
  }
  for (std::size_t i = 0; i < artin.omega3.size(); ++i) {
    if (reduce_bits(artin.omega3[i].exponents) !=
        reduce_bits(coxeter.omega3[i].exponents)) {
      return false;
    }
  }
  return true;
}

/// The recorded omega3 exponents equal the fundamental basis (Artin) or its
/// {0,1} lift (Coxeter), and rebuild the emitted word.
inline bool omega3_exponents_recover(CoxeterGraph const& g,
                                     OmegaSets const& omega) {
  auto const odd = odd_subgraph(g);
  auto const basis = fundamental_cycle_basis(odd);
  if (basis.basis.size() != omega.omega3.size()) {
    return false;
  }
  for (std::size_t i = 0; i < basis.basis.size(); ++i) {
    auto const& cw = omega.omega3[i];
    Chain1 const expected =
        omega.flavor == Flavor::Artin
            ? basis.basis[i]
            : mod2_lift(Mod2Cycle::from_bits(odd, reduce_bits(basis.basis[i])));
    if (cw.exponents != expected ||
        cycle_word(g, odd, cw.exponents, cw.square_exponents) != cw.word) {
      return false;
    }
  }
  return true;
}

inline std::vector<CheckResult> run_consistency_checks(CoxeterGraph const& g) {
  std::vector<CheckResult> out;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
  };

  auto const classes = pair_classes(g);
  auto const profile = invariant_profile(g, classes);
  auto const summary = homology_summary(g, classes, profile);
  auto const odd = odd_subgraph(g);

  add("howlett_identity", profile.howlett_identity_holds(),
      detail::expect_eq(profile.howlett_rank(), profile.mod2_rank()));
  add("n1_equals_odd_vertices",
      profile.n1 == static_cast<std::int64_t>(odd.vertex_count()),
      detail::expect_eq(profile.n1,
                        static_cast<std::int64_t>(odd.vertex_count())));
  add("n2_equals_q2_plus_odd_edges",
      profile.n2 == profile.q2 + static_cast<std::int64_t>(odd.edge_count()),
      detail::expect_eq(profile.n2, profile.q2 + static_cast<std::int64_t>(
                                                     odd.edge_count())));
  add("n3_equals_p_plus_q1", profile.n3 == profile.p + profile.q1,
      detail::expect_eq(profile.n3, profile.p + profile.q1));
  add("n4_equals_h1_rank", profile.n4 == profile.h1_artin_free_rank,
      detail::expect_eq(profile.n4, profile.h1_artin_free_rank));

  add("pair_classes_match_naive_closure",
      classes == oracle::naive_pair_closure(g),
      "union-find and fixed-point closure disagree");

  auto const rational = oracle::rational_cycle_rank(odd);
  add("q3_matches_rational_rank", profile.q3 == rational,
      detail::expect_eq(profile.q3, rational));
  auto const gf2_dim = oracle::gf2_cycle_space_dimension(odd);
  add("q3_matches_gf2_dimension", profile.q3 == gf2_dim,
      detail::expect_eq(profile.q3, gf2_dim));

  auto const basis = fundamental_cycle_basis(odd);
  bool cycles_closed = true;
  for (auto const& alpha : basis.basis) {
    for (auto c : boundary(odd, alpha).coefficients) {
      cycles_closed = cycles_closed && c == 0;
    }
  }
  add("cycle_basis_closed", cycles_closed, "a basis element has nonzero boundary");
  auto const reduced = mod2_reduce(odd, basis);
  auto const rank2 = static_cast<std::int64_t>(
      gf2_rank(std::span<Mod2Cycle const>(reduced)));
  add("cycle_basis_mod2_rank", rank2 == profile.q3 &&
          static_cast<std::int64_t>(basis.basis.size()) == profile.q3,
      detail::expect_eq(rank2, profile.q3));

  auto const artin = omega_sets(g, Flavor::Artin);
  auto const coxeter = omega_sets(g, Flavor::Coxeter);
  add("omega_counts_artin", detail::omega_counts_ok(artin, profile),
      "omega set sizes differ from p+q1, q2, q3");
  add("omega_counts_coxeter", detail::omega_counts_ok(coxeter, profile),
      "omega set sizes differ from p+q1, q2, q3");
  add("omega_abelianization_zero",
      detail::all_abelianize_to_zero(artin, g.size()) &&
          detail::all_abelianize_to_zero(coxeter, g.size()),
      "an omega word has nonzero abelianization");
  add("omega_projection", projection_matches(artin, coxeter),
      "Artin omega sets do not project onto Coxeter omega sets");
  add("omega3_exponent_recovery",
      omega3_exponents_recover(g, artin) && omega3_exponents_recover(g, coxeter),
      "omega3 exponents do not reproduce the cycle basis");

  bool const ranks_ok =
      summary.h2_artin_mod2_rank ==
          summary.h2_orbit.free_rank + summary.h2_orbit.torsion2_rank &&
      summary.h2_artin_mod2_rank == summary.h2_coxeter.torsion2_rank &&
      summary.h2_artin_integral.has_value() == summary.corollary.applies;
  add("homology_summary_ranks", ranks_ok, "homology descriptors inconsistent");
  return out;
}

inline bool all_passed(std::vector<CheckResult> const& results) {
  for (auto const& r : results) {
    if (!r.passed) {
      return false;
    }
  }
  return true;
}

}  // namespace coxhom

#endif  // COXHOM_CONSISTENCY_HPP_
