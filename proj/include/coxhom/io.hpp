#ifndef COXHOM_IO_HPP_
#define COXHOM_IO_HPP_

// Graph text format and JSON rendering.
//
// Graph files are UTF-8 and line oriented:
//
//   # comment
//   vertex <name>
//   edge <u> <v> <m>      m is an integer >= 2 or `inf`
//
// Vertex declaration order is the generator order. Unlisted pairs have
// label 2. Vertices must be declared before edges use them.

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "coxhom/catalog.hpp"
#include "coxhom/error.hpp"
#include "coxhom/graph.hpp"
#include "coxhom/invariants.hpp"
#include "coxhom/words.hpp"

namespace coxhom {

struct SourcePosition {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based, first character of the directive
};

struct GraphDocument {
  std::string source;
  CoxeterGraph graph;
  std::vector<SourcePosition> vertex_positions;
  std::vector<SourcePosition> edge_positions;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
      ++i;
    }
    std::size_t const start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
      ++i;
    }
    if (i > start) {
      out.push_back(line.substr(start, i - start));
    }
  }
  return out;
}

inline CoxeterLabel parse_label(std::string_view token, std::size_t line) {
  if (token == "inf") {
    return CoxeterLabel::infinity();
  }
  std::int64_t m = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), m);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::BadLabel,
                "label '" + std::string(token) + "' is not an integer or inf",
                line);
  }
  if (m < 2) {
    throw Error(ErrorKind::BadLabel,
                "label " + std::to_string(m) + " is below 2", line);
  }
  return CoxeterLabel::finite(m);
}

}  // namespace detail

inline GraphDocument parse_graph_document(std::string text) {
  GraphDocument doc;
  std::vector<std::string> vertices;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<EdgeSpec> edges;
  std::map<VertexPair, std::pair<CoxeterLabel, std::size_t>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto const end = std::min(text.find('\n', pos), text.size());
    std::string_view line(text.data() + pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }

    auto const tokens = detail::split_ws(line);
    if (tokens.empty() || tokens.front().starts_with("#")) {
      continue;
    }
    SourcePosition const where{
        line_no, static_cast<std::size_t>(tokens.front().data() - line.data()) + 1};
    auto const directive = tokens.front();

    if (directive == "vertex") {
      if (tokens.size() != 2) {
        throw Error(ErrorKind::SyntaxError,
                    "expected 'vertex <name>'", line_no);
      }
      std::string name(tokens[1]);
      if (!index.emplace(name, vertices.size()).second) {
        throw Error(ErrorKind::DuplicateVertex,
                    "duplicate vertex '" + name + "'", line_no);
      }
      vertices.push_back(std::move(name));
      doc.vertex_positions.push_back(where);
    } else if (directive == "edge") {
      if (tokens.size() != 4) {
        throw Error(ErrorKind::SyntaxError,
                    "expected 'edge <u> <v> <m>'", line_no);
      }
      std::string u(tokens[1]);
      std::string v(tokens[2]);
      auto const iu = index.find(u);
      auto const iv = index.find(v);
      if (iu == index.end() || iv == index.end()) {
        throw Error(ErrorKind::UnknownVertex,
                    "unknown vertex '" + (iu == index.end() ? u : v) + "'",
                    line_no);
      }
      if (iu->second == iv->second) {
        throw Error(ErrorKind::SelfLoop, "self-loop on vertex '" + u + "'",
                    line_no);
      }
      auto const m = detail::parse_label(tokens[3], line_no);
      auto const key = VertexPair::of(iu->second, iv->second);
      auto [it, inserted] = seen.emplace(key, std::pair{m, line_no});
      if (!inserted && it->second.first != m) {
        throw Error(ErrorKind::ConflictingLabel,
                    "pair " + u + "-" + v + " already labelled " +
                        it->second.first.to_string() + " on line " +
                        std::to_string(it->second.second),
                    line_no);
      }
      edges.push_back({std::move(u), std::move(v), m});
      doc.edge_positions.push_back(where);
    } else {
      throw Error(ErrorKind::SyntaxError,
                  "unknown directive '" + std::string(directive) + "'",
                  line_no);
    }
  }

  doc.graph = build_graph(std::move(vertices), edges);
  doc.source = std::move(text);
  return doc;
}

inline CoxeterGraph parse_graph(std::string text) {
  return parse_graph_document(std::move(text)).graph;
}

inline CoxeterGraph read_graph_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::SyntaxError, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

inline CoxeterGraph parse_catalog(std::string_view name) {
  return from_catalog(name);
}

/// Canonical text form: vertex lines in order, then stored labels in pair
/// order.
inline std::string render_graph(CoxeterGraph const& g) {
  std::string out;
  for (auto const& v : g.vertices()) {
    out += "vertex " + v + "\n";
  }
  for (auto const& [pair, m] : g.labels()) {
    out += "edge " + g.name(pair.first) + " " + g.name(pair.second) + " " +
           m.to_string() + "\n";
  }
  return out;
}

using Json = nlohmann::ordered_json;

inline Json label_json(CoxeterLabel m) {
  return m.is_infinite() ? Json("inf") : Json(m.value());
}

inline Json descriptor_json(GroupDescriptor const& d) {
  Json out;
  out["free_rank"] = d.free_rank;
  out["torsion2_rank"] = d.torsion2_rank;
  return out;
}

inline Json graph_json_fields(CoxeterGraph const& g) {
  Json out;
  out["vertices"] = g.vertices();
  Json edges = Json::array();
  for (auto const& [pair, m] : g.labels()) {
    Json e;
    e["u"] = g.name(pair.first);
    e["v"] = g.name(pair.second);
    e["m"] = label_json(m);
    edges.push_back(std::move(e));
  }
  out["edges"] = std::move(edges);
  return out;
}

inline Json profile_json(CoxeterGraph const& g, InvariantProfile const& p,
                         HomologySummary const& h) {
  Json out = graph_json_fields(g);
  out["p"] = p.p;
  out["q1"] = p.q1;
  out["q2"] = p.q2;
  out["q3"] = p.q3;
  out["q"] = p.q;
  Json n;
  n["n1"] = p.n1;
  n["n2"] = p.n2;
  n["n3"] = p.n3;
  n["n4"] = p.n4;
  out["n"] = std::move(n);
  out["howlett_identity"] = p.howlett_identity_holds();
  out["h1_artin_free_rank"] = h.h1_artin_free_rank;
  out["h2_orbit"] = descriptor_json(h.h2_orbit);
  out["h2_coxeter"] = descriptor_json(h.h2_coxeter);
  out["h2_artin_mod2_rank"] = h.h2_artin_mod2_rank;
  Json cor;
  cor["all_torsion"] = h.corollary.all_torsion;
  cor["odd_equals_gamma"] = h.corollary.odd_equals_gamma;
  cor["tree"] = h.corollary.tree;
  cor["applies"] = h.corollary.applies;
  out["corollary"] = std::move(cor);
  out["h2_artin_integral"] =
      h.h2_artin_integral ? descriptor_json(*h.h2_artin_integral) : Json(nullptr);
  return out;
}

inline std::string render_json(CoxeterGraph const& g,
                               InvariantProfile const& p,
                               HomologySummary const& h) {
  return profile_json(g, p, h).dump(2) + "\n";
}

inline std::string render_json(CoxeterGraph const& g) {
  auto const classes = pair_classes(g);
  auto const profile = invariant_profile(g, classes);
  return render_json(g, profile, homology_summary(g, classes, profile));
}

inline Json pair_json(CoxeterGraph const& g, VertexPair pair) {
  return Json::array({g.name(pair.first), g.name(pair.second)});
}

inline Json omega_json(CoxeterGraph const& g, OmegaSets const& omega,
                       std::int64_t p_plus_q) {
  auto const& names = g.vertices();
  auto const odd = odd_subgraph(g);

  Json out;
  out["vertices"] = names;
  out["flavor"] = to_string(omega.flavor);
  Json counts;
  counts["omega1"] = omega.omega1.size();
  counts["omega2"] = omega.omega2.size();
  counts["omega3"] = omega.omega3.size();
  counts["total"] = omega.total();
  counts["p_plus_q"] = p_plus_q;
  out["counts"] = std::move(counts);

  auto pair_words = [&](std::vector<PairWord> const& words) {
    Json arr = Json::array();
    for (auto const& pw : words) {
      Json item;
      item["pair"] = pair_json(g, pw.pair);
      item["m"] = label_json(g.label(pw.pair.first, pw.pair.second));
      item["word"] = render_word(pw.word, names);
      item["abelianization_zero"] = in_commutator_subgroup(pw.word);
      arr.push_back(std::move(item));
    }
    return arr;
  };
  out["omega1"] = pair_words(omega.omega1);
  out["omega2"] = pair_words(omega.omega2);

  Json cycles = Json::array();
  for (auto const& cw : omega.omega3) {
    Json item;
    item["defining_edge"] = pair_json(g, odd.edges[cw.defining_edge]);
    Json exps = Json::array();
    for (std::size_t e = 0; e < odd.edge_count(); ++e) {
      if (cw.exponents.coefficients[e] != 0) {
        Json x;
        x["u"] = g.name(odd.edges[e].first);
        x["v"] = g.name(odd.edges[e].second);
        x["n"] = cw.exponents.coefficients[e];
        exps.push_back(std::move(x));
      }
    }
    item["relator_exponents"] = std::move(exps);
    Json squares = Json::array();
    for (std::size_t s = 0; s < cw.square_exponents.size(); ++s) {
      if (cw.square_exponents[s] != 0) {
        Json x;
        x["vertex"] = g.name(s);
        x["n"] = cw.square_exponents[s];
        squares.push_back(std::move(x));
      }
    }
    item["square_exponents"] = std::move(squares);
    item["word"] = render_word(cw.word, names);
    item["abelianization_zero"] = in_commutator_subgroup(cw.word);
    cycles.push_back(std::move(item));
  }
  out["omega3"] = std::move(cycles);
  return out;
}

inline Json stability_json(CoxeterGraph const& seed, std::int64_t n_max,
                           StabilityReport const& report) {
  Json out;
  out["seed"] = graph_json_fields(seed);
  out["n_max"] = n_max;
  Json ranks = Json::array();
  for (auto const& point : report.ranks) {
    Json x;
    x["n"] = point.n;
    x["rank"] = point.rank;
    ranks.push_back(std::move(x));
  }
  out["ranks"] = std::move(ranks);
  out["verdict"] = report.verdict;
  return out;
}

}  // namespace coxhom

#endif  // COXHOM_IO_HPP_
