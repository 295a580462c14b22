#ifndef COXHOM_WORDS_HPP_
#define COXHOM_WORDS_HPP_

// Free-group words over the vertex alphabet, Artin/Coxeter relators, and the
// explicit generator words of the second homology obtained from Hopf's
// formula.
//
// The same alphabet (vertex indices) serves the Artin generators a_s and the
// Coxeter generators s; project_word is the lift of a_s -> s.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "coxhom/chains.hpp"
#include "coxhom/error.hpp"
#include "coxhom/graph.hpp"
#include "coxhom/invariants.hpp"

namespace coxhom {

struct Letter {
  std::size_t generator = 0;
  int sign = 1;  // +1 or -1

  [[nodiscard]] Letter inverse() const noexcept { return {generator, -sign}; }

  friend bool operator==(Letter const&, Letter const&) = default;
};

class Word;
Word free_reduce(std::span<Letter const> letters);

/// Freely reduced word. Every constructor path goes through free_reduce.
class Word {
 public:
  Word() = default;

  static Word generator(std::size_t s, int sign = 1) {
    Word w;
    w.letters_.push_back({s, sign < 0 ? -1 : 1});
    return w;
  }

  [[nodiscard]] std::vector<Letter> const& letters() const noexcept {
    return letters_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }

  [[nodiscard]] Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      w.letters_.push_back(it->inverse());
    }
    return w;
  }

  Word& operator*=(Word const& rhs) {
    for (auto const& l : rhs.letters_) {
      if (!letters_.empty() && letters_.back() == l.inverse()) {
        letters_.pop_back();
      } else {
        letters_.push_back(l);
      }
    }
    return *this;
  }

  friend Word operator*(Word lhs, Word const& rhs) {
    lhs *= rhs;
    return lhs;
  }

  [[nodiscard]] Word pow(std::int64_t k) const {
    Word base = k < 0 ? inverse() : *this;
    Word out;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) {
      out *= base;
    }
    return out;
  }

  friend bool operator==(Word const&, Word const&) = default;

 private:
  friend Word free_reduce(std::span<Letter const> letters);
  std::vector<Letter> letters_;
};

/// Cancels adjacent inverse pairs until none remain.
inline Word free_reduce(std::span<Letter const> letters) {
  Word out;
  for (auto const& l : letters) {
    if (l.sign != 1 && l.sign != -1) {
      throw Error(ErrorKind::InvalidParameter, "letter sign must be +1 or -1");
    }
    if (!out.letters_.empty() && out.letters_.back() == l.inverse()) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

inline Word free_reduce(std::initializer_list<Letter> letters) {
  return free_reduce(std::span<Letter const>(letters.begin(), letters.size()));
}

/// (st)_m: s t s t ... of length m.
inline Word alternating_word(std::size_t s, std::size_t t, std::int64_t m) {
  if (s == t) {
    throw Error(ErrorKind::SameVertex, "alternating word needs s != t");
  }
  if (m < 1) {
    throw Error(ErrorKind::NonPositiveLength,
                "alternating word length must be positive");
  }
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    letters.push_back({i % 2 == 0 ? s : t, 1});
  }
  return free_reduce(letters);
}

/// R(s,t) = (st)_m ((ts)_m)^-1 for s < t and finite m >= 2.
inline Word relator(std::size_t s, std::size_t t, CoxeterLabel m) {
  if (m.is_infinite()) {
    throw Error(ErrorKind::InfiniteLabel, "no relator for an infinite label");
  }
  if (s >= t) {
    throw Error(ErrorKind::OrderViolation, "relator needs s < t");
  }
  if (m.value() < 2) {
    throw Error(ErrorKind::BadLabel, "relator label must be >= 2");
  }
  return alternating_word(s, t, m.value()) *
         alternating_word(t, s, m.value()).inverse();
}

inline Word commutator(Word const& x, Word const& y) {
  return x * y * x.inverse() * y.inverse();
}

/// Image in the free abelian group on the generators.
struct AbelianVector {
  std::vector<std::int64_t> coefficients;

  [[nodiscard]] bool is_zero() const noexcept {
    for (auto c : coefficients) {
      if (c != 0) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(AbelianVector const&, AbelianVector const&) = default;
};

/// Signed letter counts per generator; `rank` is the alphabet size.
inline AbelianVector abelianize(Word const& w, std::size_t rank) {
  AbelianVector out{std::vector<std::int64_t>(rank, 0)};
  for (auto const& l : w.letters()) {
    if (l.generator >= rank) {
      throw Error(ErrorKind::LengthMismatch,
                  "letter outside the alphabet of size " +
                      std::to_string(rank));
    }
    out.coefficients[l.generator] += l.sign;
  }
  return out;
}

/// Membership in [F,F], which for a free group F is exactly the kernel of
/// abelianization.
inline bool in_commutator_subgroup(Word const& w) {
  std::size_t rank = 0;
  for (auto const& l : w.letters()) {
    rank = std::max(rank, l.generator + 1);
  }
  return abelianize(w, rank).is_zero();
}

enum class Flavor { Artin, Coxeter };

inline std::string to_string(Flavor f) {
  return f == Flavor::Artin ? "artin" : "coxeter";
}

/// Relators in pair order, then (Coxeter only) the squares s^2 in vertex
/// order. Infinite labels contribute nothing.
inline std::vector<Word> presentation_relators(CoxeterGraph const& g,
                                               Flavor flavor) {
  std::vector<Word> out;
  for (std::size_t s = 0; s < g.size(); ++s) {
    for (std::size_t t = s + 1; t < g.size(); ++t) {
      auto const m = g.label(s, t);
      if (m.is_finite()) {
        out.push_back(relator(s, t, m));
      }
    }
  }
  if (flavor == Flavor::Coxeter) {
    for (std::size_t s = 0; s < g.size(); ++s) {
      out.push_back(Word::generator(s).pow(2));
    }
  }
  return out;
}

/// The lift F_A -> F_W of a_s -> s. Both alphabets are the vertex indices.
inline Word project_word(Word const& w) { return w; }

struct PairWord {
  VertexPair pair;
  Word word;
};

/// A cycle generator: prod over odd edges of R(s,t)^exponents[e] (edge
/// order), followed by prod over vertices of (s^2)^square_exponents[s].
/// The squares only occur for the Coxeter flavour.
struct CycleWord {
  std::size_t defining_edge = 0;
  Chain1 exponents;
  std::vector<std::int64_t> square_exponents;
  Word word;
};

struct OmegaSets {
  Flavor flavor = Flavor::Artin;
  std::vector<PairWord> omega1;
  std::vector<PairWord> omega2;
  std::vector<CycleWord> omega3;

  [[nodiscard]] std::size_t total() const noexcept {
    return omega1.size() + omega2.size() + omega3.size();
  }
};

/// Rebuilds a cycle generator word from its exponent data over the odd
/// subgraph of `g`.
inline Word cycle_word(CoxeterGraph const& g, PlainGraph const& odd,
                       Chain1 const& exponents,
                       std::span<std::int64_t const> square_exponents) {
  if (exponents.coefficients.size() != odd.edge_count()) {
    throw Error(ErrorKind::LengthMismatch,
                "exponent vector does not match odd edge count");
  }
  Word out;
  for (std::size_t e = 0; e < odd.edge_count(); ++e) {
    auto const n = exponents.coefficients[e];
    if (n != 0) {
      auto const [s, t] = odd.edges[e];
      out *= relator(s, t, g.label(s, t)).pow(n);
    }
  }
  for (std::size_t s = 0; s < square_exponents.size(); ++s) {
    if (square_exponents[s] != 0) {
      out *= Word::generator(s).pow(detail::checked_mul(2, square_exponents[s]));
    }
  }
  return out;
}

/// Generator words of H2 for the Artin group (Flavor::Artin) or the Coxeter
/// group (Flavor::Coxeter):
///  - omega1: [x_s, x_t] for the smallest pair of each commuting-pair class;
///  - omega2: R(x_s, x_t) for each even label m >= 4;
///  - omega3: one word per fundamental cycle of the odd subgraph. Artin uses
///    the integral cycle. Coxeter uses its {0,1} mod-2 lift together with the
///    squares (s^2)^(d alpha_s / 2) that make the word abelianize to zero.
inline OmegaSets omega_sets(CoxeterGraph const& g, Flavor flavor) {
  OmegaSets out;
  out.flavor = flavor;

  auto const classes = pair_classes(g);
  for (auto const& block : classes.classes) {
    auto const rep = block.front();
    out.omega1.push_back(
        {rep, commutator(Word::generator(rep.first),
                         Word::generator(rep.second))});
  }

  for (auto const& [pair, m] : g.labels()) {
    if (m.is_even_edge()) {
      out.omega2.push_back({pair, relator(pair.first, pair.second, m)});
    }
  }

  auto const odd = odd_subgraph(g);
  auto const basis = fundamental_cycle_basis(odd);
  for (std::size_t i = 0; i < basis.basis.size(); ++i) {
    CycleWord cw;
    cw.defining_edge = basis.defining_edge[i];
    cw.square_exponents.assign(g.size(), 0);
    if (flavor == Flavor::Artin) {
      cw.exponents = basis.basis[i];
    } else {
      cw.exponents = mod2_lift(
          Mod2Cycle::from_bits(odd, reduce_bits(basis.basis[i])));
      auto const d = boundary(odd, cw.exponents);
      for (std::size_t s = 0; s < g.size(); ++s) {
        cw.square_exponents[s] = d.coefficients[s] / 2;
      }
    }
    cw.word = cycle_word(g, odd, cw.exponents, cw.square_exponents);
    out.omega3.push_back(std::move(cw));
  }
  return out;
}

/// Letters as `name` / `name^-1` separated by spaces; the empty word is `1`.
inline std::string render_word(Word const& w,
                               std::vector<std::string> const& names) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (auto const& l : w.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += names.at(l.generator);
    if (l.sign < 0) {
      out += "^-1";
    }
  }
  return out;
}

}  // namespace coxhom

#endif  // COXHOM_WORDS_HPP_
