#ifndef COXHOM_CATALOG_HPP_
#define COXHOM_CATALOG_HPP_

// Standard finite and affine Coxeter diagrams.
//
// Finite types use vertices s1..sn, affine types s0..sn, in Bourbaki order.
// Unlisted pairs carry the implicit label 2.
//
//   A<n>   n>=1  path s1-...-sn
//   B<n>   n>=2  path, first edge 4
//   D<n>   n>=4  path s1-...-s(n-1), plus sn joined to s2
//   E6/7/8       path s1-s3-s4-...-sn, plus s2 joined to s4
//   F4           path with labels 3,4,3
//   H3/H4        path with labels 5,3[,3]
//   I2(m)  m>=3  single edge labelled m (or inf)
//   ~A<n>  n>=2  cycle s0-s1-...-sn-s0
//   ~B<n>  n>=3  s0,s1 joined to s2, path s2-...-sn, last edge 4
//   ~C<n>  n>=2  path s0-...-sn, labels 4,3,...,3,4
//   ~D<n>  n>=4  s0,s1 joined to s2; path s2-...-s(n-2); s(n-1),sn joined
//                to s(n-2)
//   ~E6/7/8      E_n plus s0 joined to s2 / s1 / s8

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coxhom/error.hpp"
#include "coxhom/graph.hpp"

namespace coxhom {
namespace detail {

inline std::string vname(std::int64_t i) { return "s" + std::to_string(i); }

struct DiagramBuilder {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;

  DiagramBuilder(std::int64_t first, std::int64_t last) {
    for (auto i = first; i <= last; ++i) {
      vertices.push_back(vname(i));
    }
  }

  DiagramBuilder& join(std::int64_t a, std::int64_t b, std::int64_t m = 3) {
    edges.push_back({vname(a), vname(b), CoxeterLabel::finite(m)});
    return *this;
  }

  DiagramBuilder& join_inf(std::int64_t a, std::int64_t b) {
    edges.push_back({vname(a), vname(b), CoxeterLabel::infinity()});
    return *this;
  }

  DiagramBuilder& path(std::int64_t a, std::int64_t b) {
    for (auto i = a; i < b; ++i) {
      join(i, i + 1);
    }
    return *this;
  }

  CoxeterGraph build() const { return build_graph(vertices, edges); }
};

[[noreturn]] inline void invalid(std::string_view name, std::string_view why) {
  throw Error(ErrorKind::InvalidParameter,
              "'" + std::string(name) + "': " + std::string(why));
}

inline std::int64_t parse_rank(std::string_view full, std::string_view digits) {
  std::int64_t n = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc{} ||
      ptr != digits.data() + digits.size()) {
    throw Error(ErrorKind::UnknownCatalogName,
                "unrecognised catalog name '" + std::string(full) + "'");
  }
  // Keeps vertex counts sane.
  if (n > 100000) {
    invalid(full, "rank too large");
  }
  return n;
}

inline CoxeterGraph type_e(std::int64_t n, bool affine) {
  DiagramBuilder d(affine ? 0 : 1, n);
  d.join(1, 3).path(3, n).join(2, 4);
  if (affine) {
    if (n == 6) d.join(0, 2);
    if (n == 7) d.join(0, 1);
    if (n == 8) d.join(0, 8);
  }
  return d.build();
}

inline CoxeterGraph finite_type(std::string_view full, char family,
                                std::int64_t n) {
  switch (family) {
    case 'A': {
      if (n < 1) invalid(full, "A<n> needs n >= 1");
      return DiagramBuilder(1, n).path(1, n).build();
    }
    case 'B': {
      if (n < 2) invalid(full, "B<n> needs n >= 2");
      return DiagramBuilder(1, n).join(1, 2, 4).path(2, n).build();
    }
    case 'D': {
      if (n < 4) invalid(full, "D<n> needs n >= 4");
      return DiagramBuilder(1, n).path(1, n - 1).join(2, n).build();
    }
    case 'E': {
      if (n < 6 || n > 8) invalid(full, "E<n> needs n in {6,7,8}");
      return type_e(n, false);
    }
    case 'F': {
      if (n != 4) invalid(full, "only F4 exists");
      return DiagramBuilder(1, 4).join(1, 2).join(2, 3, 4).join(3, 4).build();
    }
    case 'H': {
      if (n != 3 && n != 4) invalid(full, "H<n> needs n in {3,4}");
      return DiagramBuilder(1, n).join(1, 2, 5).path(2, n).build();
    }
    default:
      break;
  }
  throw Error(ErrorKind::UnknownCatalogName,
              "unrecognised catalog name '" + std::string(full) + "'");
}

inline CoxeterGraph affine_type(std::string_view full, char family,
                                std::int64_t n) {
  switch (family) {
    case 'A': {
      if (n < 2) invalid(full, "~A<n> needs n >= 2");
      return DiagramBuilder(0, n).path(0, n).join(0, n).build();
    }
    case 'B': {
      if (n < 3) invalid(full, "~B<n> needs n >= 3");
      DiagramBuilder d(0, n);
      d.join(0, 2).join(1, 2).path(2, n - 1).join(n - 1, n, 4);
      return d.build();
    }
    case 'C': {
      if (n < 2) invalid(full, "~C<n> needs n >= 2");
      DiagramBuilder d(0, n);
      d.join(0, 1, 4).path(1, n - 1).join(n - 1, n, 4);
      return d.build();
    }
    case 'D': {
      if (n < 4) invalid(full, "~D<n> needs n >= 4");
      DiagramBuilder d(0, n);
      d.join(0, 2).join(1, 2).path(2, n - 2).join(n - 2, n - 1).join(n - 2, n);
      return d.build();
    }
    case 'E': {
      if (n < 6 || n > 8) invalid(full, "~E<n> needs n in {6,7,8}");
      return type_e(n, true);
    }
    default:
      break;
  }
  throw Error(ErrorKind::UnknownCatalogName,
              "unrecognised catalog name '" + std::string(full) + "'");
}

}  // namespace detail

/// Builds a standard diagram from its catalog name, e.g. "A3", "I2(7)",
/// "I2(inf)", "~D4". Throws UnknownCatalogName for names outside the grammar
/// and InvalidParameter for out-of-range ranks.
inline CoxeterGraph from_catalog(std::string_view name) {
  std::string_view rest = name;
  bool const affine = !rest.empty() && rest.front() == '~';
  if (affine) {
    rest.remove_prefix(1);
  }
  if (rest.empty()) {
    throw Error(ErrorKind::UnknownCatalogName, "empty catalog name");
  }

  if (!affine && rest.starts_with("I2(") && rest.ends_with(")")) {
    auto const param = rest.substr(3, rest.size() - 4);
    detail::DiagramBuilder d(1, 2);
    if (param == "inf") {
      return d.join_inf(1, 2).build();
    }
    auto const m = detail::parse_rank(name, param);
    if (m < 3) {
      detail::invalid(name, "I2(m) needs m >= 3");
    }
    return d.join(1, 2, m).build();
  }

  char const family = rest.front();
  auto const n = detail::parse_rank(name, rest.substr(1));
  return affine ? detail::affine_type(name, family, n)
                : detail::finite_type(name, family, n);
}

/// Grammar of accepted catalog names, one line per family.
inline std::vector<std::string> catalog_names() {
  return {"A<n>    (n >= 1)",  "B<n>    (n >= 2)", "D<n>    (n >= 4)",
          "E6 E7 E8",          "F4",               "H3 H4",
          "I2(<m>) (m >= 3)",  "I2(inf)",          "~A<n>   (n >= 2)",
          "~B<n>   (n >= 3)",  "~C<n>   (n >= 2)", "~D<n>   (n >= 4)",
          "~E6 ~E7 ~E8"};
}

}  // namespace coxhom

#endif  // COXHOM_CATALOG_HPP_
