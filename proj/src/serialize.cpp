#include "strandfloer/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace strandfloer {

Json circle_to_json(const PointedMatchedCircle& pmc) {
  Json pairs = Json::array();
  for (const auto& p : pmc.pairs()) pairs.push_back({p[0], p[1]});
  return Json{{"g", pmc.genus()}, {"mode", to_string(pmc.mode())}, {"pairs", pairs}};
}

PointedMatchedCircle circle_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw std::invalid_argument("matching must be a JSON object");
    std::vector<std::array<int, 2>> pairs;
    for (const auto& p : j.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw std::invalid_argument("each pair needs two positions");
      pairs.push_back({p[0].get<int>(), p[1].get<int>()});
    }
    const CircleMode mode = circle_mode_from_string(j.value("mode", std::string("single")));
    PointedMatchedCircle pmc(std::move(pairs), mode);
    if (j.contains("g") && j.at("g").get<int>() != pmc.genus()) {
      throw std::invalid_argument("matching declares g = " + std::to_string(j.at("g").get<int>()) +
                                  " but has " + std::to_string(pmc.num_pairs()) + " pairs");
    }
    return pmc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed matching: ") + e.what());
  }
}

PointedMatchedCircle parse_matching(const std::string& text_or_path) {
  std::string text = text_or_path;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') {
    std::ifstream in(text_or_path);
    if (!in) throw std::invalid_argument("cannot read matching file '" + text_or_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("matching is not valid JSON: ") + e.what());
  }
  return circle_from_json(j);
}

Json generator_to_json(const MatchedGenerator& gen) {
  Json chords = Json::array();
  for (const Chord& c : gen.chords) chords.push_back({c.start, c.end});
  return Json{{"chords", chords}, {"dotted", gen.dotted}};
}

Json floer_generator_to_json(const FloerGenerator& x) {
  Json points = Json::array();
  for (const GridPoint& p : x.points) points.push_back({p.a, p.b});
  return points;
}

Json algebra_to_json(const StrandsAlgebra& alg, bool include_product) {
  Json out;
  out["schema"] = kSchemaVersion;
  out["meta"] = Json{{"g", alg.circle().genus()},
                     {"k", alg.k()},
                     {"variant", to_string(alg.variant())},
                     {"matching", circle_to_json(alg.circle())},
                     {"num_idempotents", alg.num_idempotents()},
                     {"num_generators", alg.size()},
                     {"product_included", include_product}};

  Json idems = Json::array();
  for (const auto& s : alg.idempotents()) idems.push_back(s.labels());
  out["idempotents"] = idems;

  Json gens = Json::array();
  for (int i = 0; i < static_cast<int>(alg.size()); ++i) {
    Json g{{"index", i}, {"source", alg.source(i)}, {"target", alg.target(i)}};
    const Json items = generator_to_json(alg.generator(i));
    g["chords"] = items["chords"];
    g["dotted"] = items["dotted"];
    gens.push_back(std::move(g));
  }
  out["generators"] = gens;

  Json diff = Json::array();
  for (int i = 0; i < static_cast<int>(alg.size()); ++i) {
    for (int j : alg.differential(i)) diff.push_back({i, j});
  }
  out["differential"] = diff;

  Json prod = Json::array();
  if (include_product) {
    for (int i = 0; i < static_cast<int>(alg.size()); ++i) {
      const int t = alg.target(i);
      for (int j = alg.row_begin(t); j < alg.row_end(t); ++j) {
        for (int p : alg.product(i, j)) prod.push_back({i, j, p});
      }
    }
  }
  out["product"] = prod;

  Json dims = Json::array();
  for (int s = 0; s < alg.num_idempotents(); ++s) {
    Json row = Json::array();
    for (int t = 0; t < alg.num_idempotents(); ++t) row.push_back(alg.dim(s, t));
    dims.push_back(row);
  }
  out["dims"] = dims;
  return out;
}

namespace {

std::string idempotent_label(const IdempotentClass& s) {
  std::string out = "{";
  bool first = true;
  for (int l : s.labels()) {
    out += (first ? "" : ",") + std::to_string(l);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string algebra_to_dot(const StrandsAlgebra& alg) {
  std::set<int> hit;
  for (int i = 0; i < static_cast<int>(alg.size()); ++i) {
    for (int j : alg.differential(i)) hit.insert(j);
  }
  std::ostringstream os;
  os << "digraph strands {\n";
  os << "  // g=" << alg.circle().genus() << " k=" << alg.k() << " variant=" << to_string(alg.variant())
     << "\n";
  for (int s = 0; s < alg.num_idempotents(); ++s) {
    os << "  s" << s << " [label=\"" << idempotent_label(alg.idempotents()[s]) << "\"];\n";
  }
  for (int i = 0; i < static_cast<int>(alg.size()); ++i) {
    os << "  s" << alg.source(i) << " -> s" << alg.target(i) << " [label=\""
       << describe(alg.generator(i)) << "\"";
    if (hit.count(i)) os << ", style=dotted";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

Json grid_to_json(const GridSpec& spec) {
  const auto& pmc = spec.circle();
  Json out;
  out["schema"] = kSchemaVersion;
  out["meta"] = Json{{"g", pmc.genus()}, {"mode", to_string(spec.mode())}, {"matching", circle_to_json(pmc)}};

  Json cells = Json::array();
  for (int a = 1; a <= spec.size(); ++a) {
    for (int b = a; b <= spec.size(); ++b) {
      if (spec.allowed(a, b)) cells.push_back({a, b});
    }
  }
  out["allowed_cells"] = cells;

  Json pattern = Json::array();
  Json points = Json::array();
  for (int i = 1; i <= pmc.num_pairs(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= pmc.num_pairs(); ++j) {
      const auto pts = intersection_points(spec, i, j);
      row.push_back(pts.size());
      for (const GridPoint& p : pts) {
        Json entry{{"cell", {p.a, p.b}}, {"labels", {i, j}}};
        if (p.is_branch()) {
          entry["dotted"] = i;
        } else {
          entry["chord"] = {p.a, p.b};
        }
        points.push_back(std::move(entry));
      }
    }
    pattern.push_back(row);
  }
  out["intersection_pattern"] = pattern;
  out["points"] = points;
  return out;
}

Json rigidity_to_json(const RigidityReport& report) {
  return Json{{"ell_max", report.ell_max},
              {"checked", report.checked},
              {"counted", report.counted},
              {"violation_count", report.violation_count},
              {"violations", report.violations}};
}

}  // namespace strandfloer
