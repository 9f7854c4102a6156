#include "baire/io.hpp"

#include <cstdint>

namespace baire {

Point parse_point(const PointSpace& space, const std::string& text) {
  switch (space.kind()) {
    case SpaceKind::RealLine:
    case SpaceKind::UnitInterval: {
      Point p = Rational::parse(text);
      require_member(space, p, "point");
      return p;
    }
    case SpaceKind::Baire:
      return parse_baire(text);
    case SpaceKind::CantorGrid:
      return parse_grid(text);
    case SpaceKind::FinitePoints:
      return FiniteLabel{space.metric().index_of(text)};
    case SpaceKind::Trees:
      return Tree::parse(text);
  }
  throw std::logic_error("unreachable");
}

std::string format_point(const PointSpace& space, const Point& p) {
  if (space.kind() == SpaceKind::FinitePoints) return space.metric().labels.at(std::get<FiniteLabel>(p).index);
  return point_str(p);
}

namespace {

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

Json intervals(const std::vector<Interval>& v) {
  Json out = Json::array();
  for (const auto& i : v) out.push_back(Json::array({i.lo.str(), i.hi.str()}));
  return out;
}

std::string need_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

const Json& need_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key, "missing field");
  return *it;
}

Rational rational_at(const Json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return Rational::parse(need_string(j, path));
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(path, e.what());
  }
}

template <class T>
T guarded(const std::string& path, const std::function<T()>& f) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(path, e.what());
  }
}

Nat natural_at(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0)) {
    throw SchemaError(path, "expected a natural number");
  }
  return j.get<Nat>();
}

}  // namespace

namespace {

Json row_json(const RowSpec& r) { return {{"prefix", bits_string(r.prefix())}, {"period", bits_string(r.period())}}; }

RowSpec row_from(const Json& j, const std::string& path) {
  const std::string prefix = j.contains("prefix") ? need_string(j["prefix"], path + ".prefix") : "";
  const std::string period = need_string(field(j, "period", path), path + ".period");
  return guarded<RowSpec>(path, [&] { return make_row(prefix, period); });
}

}  // namespace

Json grid_to_json(const CantorGridPoint& g) {
  Json rows = Json::object();
  for (const auto& [m, r] : g.explicit_rows()) rows[std::to_string(m)] = row_json(r);
  return {{"explicit_rows", rows}, {"default_row", row_json(g.default_row())}};
}

CantorGridPoint grid_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected a grid object");
  std::map<Nat, RowSpec> rows;
  if (auto it = j.find("explicit_rows"); it != j.end()) {
    if (!it->is_object()) throw SchemaError(path + ".explicit_rows", "expected an object");
    for (const auto& [key, val] : it->items()) {
      const std::string at = path + ".explicit_rows." + key;
      const Nat m = guarded<Nat>(at, [&] {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(key, &used);
        if (used != key.size()) throw std::invalid_argument("row index must be a natural number");
        return static_cast<Nat>(v);
      });
      rows.emplace(m, row_from(val, at));
    }
  }
  RowSpec def = RowSpec::constant(0);
  if (auto it = j.find("default_row"); it != j.end()) def = row_from(*it, path + ".default_row");
  return CantorGridPoint(std::move(rows), std::move(def));
}

Json set_to_json(const PointSpace& space, const ClosedSet& s) {
  if (auto* f = std::get_if<FiniteRealSet>(&s)) return {{"kind", "finite_real"}, {"points", rationals(f->points)}};
  if (auto* c = std::get_if<ClosedIntervalUnion>(&s)) {
    return {{"kind", "closed_intervals"}, {"intervals", intervals(c->intervals)}};
  }
  if (auto* o = std::get_if<OpenIntervalUnion>(&s)) {
    return {{"kind", "open_intervals"}, {"intervals", intervals(o->intervals)}};
  }
  if (auto* b = std::get_if<FiniteBaireSet>(&s)) {
    Json pts = Json::array();
    for (const auto& p : b->points) pts.push_back(to_string(p));
    return {{"kind", "finite_baire"}, {"points", pts}};
  }
  if (auto* t = std::get_if<TreeBody>(&s)) return {{"kind", "tree_body"}, {"tree", t->tree.str()}};
  if (auto* p = std::get_if<FinitePointSet>(&s)) {
    Json pts = Json::array();
    for (auto i : p->indices) pts.push_back(format_point(space, FiniteLabel{i}));
    return {{"kind", "finite_points"}, {"points", pts}};
  }
  return {{"kind", "empty"}};
}

ClosedSet set_from_json(const PointSpace& space, const Json& j, const std::string& path) {
  const std::string kind = need_string(field(j, "kind", path), path + ".kind");
  if (kind == "empty") return empty_set();
  if (kind == "tree_body") {
    const std::string at = path + ".tree";
    return guarded<ClosedSet>(at, [&] { return tree_body(Tree::parse(need_string(field(j, "tree", path), at))); });
  }
  if (kind == "finite_real" || kind == "finite_baire" || kind == "finite_points") {
    const std::string sub = path + ".points";
    const Json& val = need_array(field(j, "points", path), sub);
    return guarded<ClosedSet>(sub, [&]() -> ClosedSet {
      std::vector<Rational> r;
      std::vector<BairePoint> b;
      std::vector<std::size_t> f;
      for (std::size_t i = 0; i < val.size(); ++i) {
        const std::string at = sub + "[" + std::to_string(i) + "]";
        if (kind == "finite_real") r.push_back(rational_at(val[i], at));
        if (kind == "finite_baire") b.push_back(parse_baire(need_string(val[i], at)));
        if (kind == "finite_points") f.push_back(space.metric().index_of(need_string(val[i], at)));
      }
      if (kind == "finite_real") return finite_real(std::move(r));
      if (kind == "finite_baire") return finite_baire(std::move(b));
      return finite_points(std::move(f));
    });
  }
  if (kind == "closed_intervals" || kind == "open_intervals") {
    const std::string sub = path + ".intervals";
    const Json& val = need_array(field(j, "intervals", path), sub);
    std::vector<Interval> iv;
    for (std::size_t i = 0; i < val.size(); ++i) {
      const std::string at = sub + "[" + std::to_string(i) + "]";
      if (!val[i].is_array() || val[i].size() != 2) throw SchemaError(at, "an interval is [lo, hi]");
      iv.push_back({rational_at(val[i][0], at + "[0]"), rational_at(val[i][1], at + "[1]")});
    }
    return guarded<ClosedSet>(sub, [&] {
      return kind == "closed_intervals" ? closed_intervals(std::move(iv)) : open_intervals(std::move(iv));
    });
  }
  throw SchemaError(path + ".kind", "unknown set kind '" + kind + "'");
}

Json space_to_json(const PointSpace& space) {
  if (space.kind() != SpaceKind::FinitePoints) return space.name();
  Json table = Json::array();
  for (const auto& row : space.metric().table) table.push_back(rationals(row));
  return {{"labels", space.metric().labels}, {"metric", table}};
}

PointSpace space_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "real_line") return PointSpace::real_line();
    if (name == "unit_interval") return PointSpace::unit_interval();
    if (name == "baire") return PointSpace::baire();
    if (name == "cantor_grid") return PointSpace::cantor_grid();
    if (name == "trees") return PointSpace::trees();
    throw SchemaError(path, "unknown space '" + name + "'");
  }
  const Json& labels = need_array(field(j, "labels", path), path + ".labels");
  const Json& metric = need_array(field(j, "metric", path), path + ".metric");
  std::vector<std::string> ls;
  for (std::size_t i = 0; i < labels.size(); ++i) ls.push_back(need_string(labels[i], path + ".labels[" + std::to_string(i) + "]"));
  std::vector<std::vector<Rational>> table;
  for (std::size_t i = 0; i < metric.size(); ++i) {
    const std::string at = path + ".metric[" + std::to_string(i) + "]";
    need_array(metric[i], at);
    std::vector<Rational> row;
    for (std::size_t k = 0; k < metric[i].size(); ++k) row.push_back(rational_at(metric[i][k], at + "[" + std::to_string(k) + "]"));
    table.push_back(std::move(row));
  }
  return guarded<PointSpace>(path, [&] { return PointSpace::finite(FiniteMetric(std::move(ls), std::move(table))); });
}

Json config_to_json(const CheckConfig& cfg) {
  return {{"eps_schedule", rationals(cfg.eps_schedule)},
          {"delta_schedule", rationals(cfg.delta_schedule)},
          {"probe_budget", cfg.probe_budget},
          {"net_resolution", cfg.net_resolution.str()},
          {"dense_bound", cfg.dense_bound},
          {"n_bound", cfg.n_bound},
          {"m_bound", cfg.m_bound},
          {"dense_sequence", cfg.alternative_dense ? "alternative" : "canonical"}};
}

CheckConfig config_from_json(const Json& j, const std::string& path, CheckConfig cfg) {
  if (j.is_null()) return cfg;
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  for (const auto& [key, val] : j.items()) {
    const std::string at = path + "." + key;
    if (key == "eps_schedule" || key == "delta_schedule") {
      std::vector<Rational> sched;
      need_array(val, at);
      for (std::size_t i = 0; i < val.size(); ++i) sched.push_back(rational_at(val[i], at + "[" + std::to_string(i) + "]"));
      (key == "eps_schedule" ? cfg.eps_schedule : cfg.delta_schedule) = std::move(sched);
    } else if (key == "probe_budget") {
      cfg.probe_budget = natural_at(val, at);
    } else if (key == "net_resolution") {
      cfg.net_resolution = rational_at(val, at);
    } else if (key == "dense_bound") {
      cfg.dense_bound = natural_at(val, at);
    } else if (key == "n_bound") {
      cfg.n_bound = natural_at(val, at);
    } else if (key == "m_bound") {
      cfg.m_bound = natural_at(val, at);
    } else if (key == "dense_sequence") {
      const std::string v = need_string(val, at);
      if (v != "canonical" && v != "alternative") throw SchemaError(at, "expected canonical or alternative");
      cfg.alternative_dense = v == "alternative";
    } else {
      throw SchemaError(at, "unknown config field");
    }
  }
  guarded<int>(path, [&] {
    cfg.validate();
    return 0;
  });
  return cfg;
}

namespace {

Json table_json(const MultiMap& F, const ContinuityWitness& w) {
  Json rows = Json::array();
  for (const auto& r : w.table) rows.push_back({{"eps", r.eps.str()}, {"delta", r.delta.str()}});
  return {{"y", format_point(F.codomain, w.y)}, {"table", rows}};
}

Json counterexamples_json(const MultiMap& F, const std::vector<Counterexample>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back({{"delta", c.delta.str()}, {"x_prime", format_point(F.domain, c.x_prime)}});
  return out;
}

std::vector<Counterexample> counterexamples_from(const MultiMap& F, const Json& j, const std::string& path) {
  std::vector<Counterexample> out;
  need_array(j, path);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = path + "[" + std::to_string(i) + "]";
    out.push_back({rational_at(field(j[i], "delta", at), at + ".delta"),
                   guarded<Point>(at + ".x_prime", [&] {
                     return parse_point(F.domain, need_string(field(j[i], "x_prime", at), at + ".x_prime"));
                   })});
  }
  return out;
}

ContinuityWitness table_from(const MultiMap& F, const Json& j, const std::string& path) {
  ContinuityWitness w{guarded<Point>(path + ".y", [&] {
                        return parse_point(F.codomain, need_string(field(j, "y", path), path + ".y"));
                      }),
                      {}};
  const Json& rows = need_array(field(j, "table", path), path + ".table");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string at = path + ".table[" + std::to_string(i) + "]";
    w.table.push_back({rational_at(field(rows[i], "eps", at), at + ".eps"),
                       rational_at(field(rows[i], "delta", at), at + ".delta")});
  }
  return w;
}

}  // namespace

Json witness_to_json(const MultiMap& F, const Witness& w) {
  if (auto* c = std::get_if<ContinuityWitness>(&w)) {
    Json out = table_json(F, *c);
    out["type"] = "continuity";
    return out;
  }
  if (auto* s = std::get_if<StrongContinuityWitness>(&w)) {
    Json tables = Json::array();
    for (const auto& t : s->tables) tables.push_back(table_json(F, t));
    return {{"type", "strong_continuity"}, {"net_resolution", s->net_resolution.str()}, {"tables", tables}};
  }
  const auto& d = std::get<DiscontinuityWitness>(w);
  Json entries = Json::array();
  for (const auto& r : d.entries) {
    entries.push_back({{"y", format_point(F.codomain, r.y)},
                       {"eps_star", r.eps_star.str()},
                       {"counterexamples", counterexamples_json(F, r.counterexamples)}});
  }
  return {{"type", "discontinuity"},
          {"strong", d.strong},
          {"net_resolution", d.net_resolution.str()},
          {"entries", entries}};
}

Witness witness_from_json(const MultiMap& F, const Json& j, const std::string& path) {
  const std::string type = need_string(field(j, "type", path), path + ".type");
  if (type == "continuity") return table_from(F, j, path);
  if (type == "strong_continuity") {
    StrongContinuityWitness s{rational_at(field(j, "net_resolution", path), path + ".net_resolution"), {}};
    const Json& tables = need_array(field(j, "tables", path), path + ".tables");
    for (std::size_t i = 0; i < tables.size(); ++i) {
      s.tables.push_back(table_from(F, tables[i], path + ".tables[" + std::to_string(i) + "]"));
    }
    return s;
  }
  if (type != "discontinuity") throw SchemaError(path + ".type", "unknown witness type '" + type + "'");
  const Json& strong = field(j, "strong", path);
  if (!strong.is_boolean()) throw SchemaError(path + ".strong", "expected a boolean");
  DiscontinuityWitness d{rational_at(field(j, "net_resolution", path), path + ".net_resolution"),
                         strong.get<bool>(),
                         {}};
  const Json& entries = need_array(field(j, "entries", path), path + ".entries");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string at = path + ".entries[" + std::to_string(i) + "]";
    d.entries.push_back({guarded<Point>(at + ".y", [&] {
                           return parse_point(F.codomain, need_string(field(entries[i], "y", at), at + ".y"));
                         }),
                         rational_at(field(entries[i], "eps_star", at), at + ".eps_star"),
                         counterexamples_from(F, field(entries[i], "counterexamples", at), at + ".counterexamples")});
  }
  return d;
}

namespace {

Json pass_json(const MultiMap& F, const LevelPass& p) {
  return {{"m", p.m},
          {"n", p.n},
          {"s", p.s},
          {"y_s", format_point(F.codomain, p.y_s)},
          {"delta", p.delta.str()},
          {"sup", p.sup.str()}};
}

Json ball_json(const MultiMap& F, const LowerFellBall& b) {
  return {{"center", format_point(F.codomain, b.center)}, {"radius", b.radius.str()}};
}

Json evidence_json(const MultiMap& F, const CriterionEvidence& ev) {
  Json out = Json::object();
  if (!ev.passes.empty()) {
    Json ps = Json::array();
    for (const auto& p : ev.passes) ps.push_back(pass_json(F, p));
    out["passes"] = ps;
  }
  if (!ev.refutations.empty()) {
    Json rs = Json::array();
    for (const auto& r : ev.refutations) {
      Json cover = Json::array();
      for (const auto& c : r.cover) {
        cover.push_back({{"z", format_point(F.codomain, c.z)},
                         {"delta", c.delta.str()},
                         {"x_prime", format_point(F.domain, c.x_prime)},
                         {"dist", c.dist.str()}});
      }
      rs.push_back({{"m", r.m}, {"n", r.n}, {"tau", r.tau.str()}, {"rho", r.rho.str()}, {"cover", cover}});
    }
    out["refutations"] = rs;
  }
  if (ev.strong_failure) out["strong_failure"] = pass_json(F, *ev.strong_failure);
  if (!ev.fell_passes.empty()) {
    Json ps = Json::array();
    for (const auto& p : ev.fell_passes) ps.push_back({{"ball", ball_json(F, p.ball)}, {"delta", p.delta.str()}});
    out["fell_passes"] = ps;
  }
  if (ev.fell_failure) {
    out["fell_failure"] = {{"ball", ball_json(F, ev.fell_failure->ball)},
                           {"counterexamples", counterexamples_json(F, ev.fell_failure->counterexamples)}};
  }
  return out;
}

}  // namespace

Json verdict_to_json(const MultiMap& F, const Verdict& v) {
  Json out = {{"verdict", verdict_name(v.kind)}};
  if (v.witness) out["witness"] = witness_to_json(F, *v.witness);
  if (v.evidence) out["evidence"] = evidence_json(F, *v.evidence);
  if (!v.report.empty()) out["report"] = v.report;
  return out;
}

Json classification_to_json(const Classification& c) {
  Json trace = Json::array();
  for (const auto& st : c.trace) {
    trace.push_back({{"id", st.id},
                     {"rule", st.rule},
                     {"expr", st.expr},
                     {"inputs", st.inputs},
                     {"result", st.result.str()}});
  }
  return {{"class", c.result.str()}, {"trace", trace}};
}

namespace {

std::optional<Witness> strong_form(const Witness& w, const Rational& r) {
  if (auto* c = std::get_if<ContinuityWitness>(&w)) return StrongContinuityWitness{r, {*c}};
  if (auto* d = std::get_if<DiscontinuityWitness>(&w)) {
    DiscontinuityWitness s = *d;
    s.strong = true;
    s.entries.resize(1);
    return s;
  }
  return w;
}

}  // namespace

BuiltMap map_from_json(const Json& j, const std::string& path) {
  const std::string kind = need_string(field(j, "kind", path), path + ".kind");
  auto opt = [&](const char* key) -> const Json* {
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
  };
  if (kind == "f1") {
    const Nat M = opt("window") ? natural_at(*opt("window"), path + ".window") : 8;
    return {f1_multimap(M), f1_probes(M), [M](const Point& x, Mode mode, const CheckConfig& cfg) -> std::optional<Witness> {
              if (mode != Mode::Plain) return std::nullopt;
              return f1_witness(std::get<CantorGridPoint>(x), M, cfg);
            },
            f1_check_config()};
  }
  if (kind == "f2") {
    return {f2_multimap(), f2_probes(), [](const Point& x, Mode mode, const CheckConfig& cfg) -> std::optional<Witness> {
              if (mode != Mode::Plain) return std::nullopt;
              return f2_witness(std::get<Tree>(x), cfg);
            },
            f2_check_config()};
  }
  if (kind == "dense_split") {
    const DenseSpec spec = guarded<DenseSpec>(path + ".set", [&] {
      return parse_dense_spec(need_string(field(j, "set", path), path + ".set"));
    });
    return {dense_split(spec), dense_split_probes(spec),
            [spec](const Point& x, Mode mode, const CheckConfig& cfg) -> std::optional<Witness> {
              const auto& q = std::get<Rational>(x);
              if (mode == Mode::Strong) return dense_split_witness(spec, q, cfg);
              if (mode != Mode::Plain) return std::nullopt;
              ContinuityWitness w{Rational(0), {}};
              for (const auto& eps : cfg.eps_schedule) w.table.push_back({eps, Rational(1)});
              return w;
            },
            std::nullopt};
  }
  if (kind == "spike") {
    SpikeSpec spec;
    if (const Json* h = opt("harmonic"); h && h->is_boolean() && h->get<bool>()) {
      spec = SpikeSpec::harmonic_list();
    } else {
      const Json& pts = need_array(field(j, "points", path), path + ".points");
      std::vector<Rational> rs;
      for (std::size_t i = 0; i < pts.size(); ++i) rs.push_back(rational_at(pts[i], path + ".points[" + std::to_string(i) + "]"));
      spec = guarded<SpikeSpec>(path + ".points", [&] { return SpikeSpec::listed(std::move(rs)); });
    }
    return {spike_function(spec), spike_probes(spec),
            [spec](const Point& x, Mode mode, const CheckConfig& cfg) -> std::optional<Witness> {
              if (mode != Mode::Plain && mode != Mode::Strong) return std::nullopt;
              Witness w = spike_witness(spec, std::get<Rational>(x), cfg);
              // Single-valued, so the strong and plain notions coincide.
              return mode == Mode::Strong ? strong_form(w, cfg.net_resolution) : w;
            },
            std::nullopt};
  }
  if (kind == "tabular") {
    const PointSpace dom = space_from_json(field(j, "domain", path), path + ".domain");
    const PointSpace cod = space_from_json(field(j, "codomain", path), path + ".codomain");
    const Json& vals = need_array(field(j, "values", path), path + ".values");
    std::vector<ClosedSet> values;
    for (std::size_t i = 0; i < vals.size(); ++i) values.push_back(set_from_json(cod, vals[i], path + ".values[" + std::to_string(i) + "]"));
    auto F = guarded<MultiMap>(path, [&] { return tabular(dom, cod, std::move(values)); });
    return {F, finite_domain_probes(dom), {}, std::nullopt};
  }
  if (kind == "extend") {
    BuiltMap base = map_from_json(field(j, "base", path), path + ".base");
    const PointSpace target = space_from_json(field(j, "target", path), path + ".target");
    if (target.kind() != SpaceKind::FinitePoints) throw SchemaError(path + ".target", "extend needs a finite target space");
    const Json& image = need_array(field(j, "image", path), path + ".image");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < image.size(); ++i) {
      const std::string at = path + ".image[" + std::to_string(i) + "]";
      idx.push_back(guarded<std::size_t>(at, [&] { return target.metric().index_of(need_string(image[i], at)); }));
    }
    auto G = guarded<MultiMap>(path, [&] { return extend(base.map, FiniteEmbedding(base.map.domain, target, idx)); });
    return {G, finite_domain_probes(target), {}, std::nullopt};
  }
  if (kind == "compose" || kind == "closure") {
    BuiltMap inner = map_from_json(field(j, "inner", path), path + ".inner");
    if (kind == "closure") return {closure_of(inner.map), inner.probes, {}, inner.preferred};
    const Json& pi = field(j, "pi", path);
    if (pi.is_string() && pi.get<std::string>() == "baire_embed") {
      // Embedded values move on a finer scale than the inner map's preferred eps.
      return {guarded<MultiMap>(path + ".pi", [&] { return compose_baire_embed(inner.map); }), inner.probes, {},
              std::nullopt};
    }
    const Json& aff = field(pi, "affine", path + ".pi");
    AffineMap A{rational_at(field(aff, "a", path + ".pi.affine"), path + ".pi.affine.a"),
                rational_at(field(aff, "b", path + ".pi.affine"), path + ".pi.affine.b")};
    return {guarded<MultiMap>(path + ".pi", [&] { return compose_affine(A, inner.map); }), inner.probes, {},
            inner.preferred};
  }
  throw SchemaError(path + ".kind", "unknown multimap kind '" + kind + "'");
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("$", "instance must be an object");
  for (const auto& [key, val] : j.items()) {
    (void)val;
    if (key != "multimap" && key != "points" && key != "mode" && key != "config" && key != "probe_spec") {
      throw SchemaError("$." + key, "unknown field");
    }
  }
  Instance inst{j, map_from_json(field(j, "multimap", "$"), "$.multimap"), {}};
  if (auto it = j.find("points"); it != j.end()) {
    need_array(*it, "$.points");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string at = "$.points[" + std::to_string(i) + "]";
      const Json& pj = (*it)[i];
      if (pj.is_object() && inst.built.map.domain.kind() == SpaceKind::CantorGrid) {
        inst.points.emplace_back(grid_from_json(pj, at));
      } else {
        inst.points.push_back(guarded<Point>(at, [&] { return parse_point(inst.built.map.domain, need_string(pj, at)); }));
      }
    }
  }
  if (auto it = j.find("mode"); it != j.end()) {
    inst.mode = guarded<Mode>("$.mode", [&] { return parse_mode(need_string(*it, "$.mode")); });
  }
  inst.cfg = inst.built.preferred.value_or(CheckConfig::defaults());
  if (auto it = j.find("config"); it != j.end()) inst.cfg = config_from_json(*it, "$.config", inst.cfg);
  if (auto it = j.find("probe_spec"); it != j.end()) {
    const std::string ps = need_string(*it, "$.probe_spec");
    if (ps == "full_domain") {
      if (inst.built.map.domain.kind() != SpaceKind::FinitePoints) {
        throw SchemaError("$.probe_spec", "full_domain probes need a finite domain");
      }
      inst.built.probes = finite_domain_probes(inst.built.map.domain);
    } else if (ps == "none") {
      inst.built.probes = nullptr;
    } else if (ps != "gallery") {
      throw SchemaError("$.probe_spec", "expected gallery, full_domain or none");
    }
  }
  return inst;
}

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string digest(const Json& j) { return digest(j.dump()); }

}  // namespace baire
