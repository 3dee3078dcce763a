#include "eqtower/json_io.hpp"

#include <fstream>
#include <utility>

#include "eqtower/errors.hpp"

namespace eqtower {

namespace {

// Rewraps the json library's exceptions so loaders report a single error type.
template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json eqrel_to_json(const EqRel& e) {
  Json j;
  j["n"] = e.n;
  j["class_of"] = e.class_of;
  return j;
}

EqRel eqrel_from_json(const Json& j) {
  return guarded("bad relation", [&] {
    const int n = j.at("n").get<int>();
    std::vector<int> class_of = j.at("class_of").get<std::vector<int>>();
    if (static_cast<int>(class_of.size()) != n)
      throw ValidationError("class_of length must equal n");
    return eq_from_class_of(std::move(class_of));
  });
}

Json hstructure_to_json(const HStructure& s) {
  Json j;
  j["h"] = s.h();
  j["n"] = s.n();
  if (!s.ground.labels.empty()) j["labels"] = s.ground.labels;
  Json levels = Json::array();
  for (const EqRel& e : s.levels) levels.push_back(e.class_of);
  j["levels"] = std::move(levels);
  return j;
}

HStructure hstructure_from_json(const Json& j) {
  return guarded("bad structure", [&] {
    const int h = j.at("h").get<int>();
    const int n = j.at("n").get<int>();
    GroundSet g;
    g.size = n;
    if (j.contains("labels")) g.labels = j.at("labels").get<std::vector<std::string>>();
    const Json& levels = j.at("levels");
    if (!levels.is_array() || static_cast<int>(levels.size()) != h)
      throw ValidationError("levels must be an array of h relations");
    std::vector<EqRel> parsed;
    parsed.reserve(h);
    for (const Json& lvl : levels) {
      std::vector<int> class_of = lvl.get<std::vector<int>>();
      if (static_cast<int>(class_of.size()) != n)
        throw ValidationError("level length must equal n");
      parsed.push_back(eq_from_class_of(std::move(class_of)));
    }
    return make_hstructure(std::move(g), std::move(parsed));
  });
}

Json coloring_to_json(const Coloring& f) {
  Json j;
  j["n"] = f.n;
  j["values"] = f.values;
  return j;
}

Coloring coloring_from_json(const Json& j) {
  return guarded("bad coloring", [&] {
    Coloring f;
    f.n = j.at("n").get<int>();
    f.values = j.at("values").get<std::vector<long long>>();
    validate_coloring(f);
    return f;
  });
}

Json lattice_to_json(const FiniteLattice& L) {
  Json j;
  j["n"] = L.n;
  Json rows = Json::array();
  for (int a = 0; a < L.n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < L.n; ++b) row.push_back(L.le(a, b));
    rows.push_back(std::move(row));
  }
  j["leq"] = std::move(rows);
  return j;
}

FiniteLattice lattice_from_json(const Json& j) {
  return guarded("bad lattice", [&] {
    const int n = j.at("n").get<int>();
    const Json& rows = j.at("leq");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
      throw ValidationError("leq must be an n*n table");
    std::vector<uint8_t> leq;
    leq.reserve(static_cast<size_t>(n) * n);
    for (const Json& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw ValidationError("leq must be an n*n table");
      for (const Json& cell : row) leq.push_back(cell.get<bool>() ? 1 : 0);
    }
    return make_lattice(n, leq);
  });
}

Json representation_to_json(const Representation& rep) {
  Json j;
  j["lattice"] = lattice_to_json(rep.lattice);
  j["ground"] = rep.ground;
  Json alpha = Json::array();
  for (const EqRel& e : rep.alpha) alpha.push_back(e.class_of);
  j["alpha"] = std::move(alpha);
  return j;
}

Representation representation_from_json(const Json& j) {
  return guarded("bad representation", [&] {
    Representation rep;
    rep.lattice = lattice_from_json(j.at("lattice"));
    rep.ground = j.at("ground").get<int>();
    const Json& alpha = j.at("alpha");
    if (!alpha.is_array() || static_cast<int>(alpha.size()) != rep.lattice.n)
      throw ValidationError("alpha must list one relation per lattice element");
    for (const Json& lvl : alpha) {
      std::vector<int> class_of = lvl.get<std::vector<int>>();
      if (static_cast<int>(class_of.size()) != rep.ground)
        throw ValidationError("alpha relation length must equal ground");
      rep.alpha.push_back(eq_from_class_of(std::move(class_of)));
    }
    return rep;
  });
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError(path + ": cannot open for writing");
  out << j.dump(2) << "\n";
}

}  // namespace eqtower
