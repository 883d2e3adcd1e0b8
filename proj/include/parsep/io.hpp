#pragma once

// JSON encodings of the library's value types.

#include <string>

#include "json.hpp"
#include "parsep/classes.hpp"
#include "parsep/maps.hpp"
#include "parsep/partition.hpp"
#include "parsep/qseries.hpp"

namespace parsep::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

inline Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

/// {order, caps: {a, b, z}, terms: [[q, a, b, z, "coeff"], ...]}
inline Json to_json(const GradedSeries& s) {
  Json terms = Json::array();
  for (const auto& [m, c] : s.terms()) terms.push_back(Json::array({m.q, m.a, m.b, m.z, c.get_str()}));
  return Json{{"order", s.box().order},
              {"caps", {{"a", s.box().cap_a}, {"b", s.box().cap_b}, {"z", s.box().z_window}}},
              {"terms", std::move(terms)}};
}

inline GradedSeries series_from_json(const Json& j) {
  Box box{j.at("order").get<int>(), j.at("caps").at("a").get<int>(), j.at("caps").at("b").get<int>(),
          j.at("caps").at("z").get<int>()};
  GradedSeries s(box);
  for (const auto& t : j.at("terms")) {
    Monomial m{t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>(), t.at(3).get<int>()};
    if (!box.contains(m)) throw series_error("serialized term lies outside the box");
    s += GradedSeries::monomial(box, m, Integer(t.at(4).get<std::string>()));
  }
  return s;
}

/// {family, n, statistic, entries: [[m, count, oddPartTotal], ...]}
inline Json to_json(const CrankTable& t) {
  Json entries = Json::array();
  for (const auto& [m, c] : t.counts) {
    auto it = t.odd_part_totals.find(m);
    entries.push_back(Json::array({m, c, it == t.odd_part_totals.end() ? 0 : it->second}));
  }
  return Json{{"family", family_name(t.family)},
              {"n", t.n},
              {"statistic", statistic_name(t.statistic)},
              {"entries", std::move(entries)}};
}

/// {parts: [[size, "B" | "AB"], ...]}
inline Json to_json(const ColoredDiagram& d) {
  Json parts = Json::array();
  for (const auto& p : d.parts()) parts.push_back(Json::array({p.size, p.color == PartColor::ab ? "AB" : "B"}));
  return Json{{"parts", std::move(parts)}};
}

inline ColoredDiagram diagram_from_json(const Json& j) {
  std::vector<ColoredPart> parts;
  for (const auto& p : j.at("parts")) {
    const std::string color = p.at(1).get<std::string>();
    if (color != "B" && color != "AB") throw std::invalid_argument("unknown part color: " + color);
    parts.push_back({p.at(0).get<int>(), color == "AB" ? PartColor::ab : PartColor::b});
  }
  return ColoredDiagram(std::move(parts));
}

inline Json to_json(const DiagramPair& pair) { return Json{{"left", to_json(pair.left)}, {"right", to_json(pair.right)}}; }

inline DiagramPair pair_from_json(const Json& j) {
  return DiagramPair{diagram_from_json(j.at("left")), diagram_from_json(j.at("right"))};
}

inline Json to_json(const Statistics& s) {
  return Json{{"rank", s.rank},
              {"srank", s.srank},
              {"eoc", s.eoc},
              {"oddParts", s.odd_count},
              {"evenParts", s.even_count},
              {"largestEvenPart", s.largest_even_part}};
}

}  // namespace parsep::io
