#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sqa/errors.hpp"
#include "sqa/fixtures.hpp"
#include "sqa/impression.hpp"
#include "sqa/mutation.hpp"
#include "sqa/resolution.hpp"
#include "sqa/simples.hpp"
#include "sqa/toric.hpp"
#include "sqa/ypq.hpp"

using namespace sqa;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  int max_degree = 8;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
};

struct QuiverSource {
  std::string in;
  std::string fixture;
  int p = 0, q = -1;
  std::string tiles;
};

void add_source(CLI::App* cmd, QuiverSource& src) {
  cmd->add_option("--in", src.in, "quiver JSON file");
  cmd->add_option("--fixture", src.fixture, "built-in torus quiver by name");
  cmd->add_option("--p", src.p, "Y^{p,q}: p");
  cmd->add_option("--q", src.q, "Y^{p,q}: q");
  cmd->add_option("--tiles", src.tiles, "tile letters P, A, B for Y^{p,q}");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::optional<TileSequence> tile_sequence(const QuiverSource& src) {
  if (src.tiles.empty()) return std::nullopt;
  TileSequence seq;
  std::string letters = src.tiles;
  auto colon = letters.find(':');
  if (colon != std::string::npos) {
    seq.shift = std::stoi(letters.substr(colon + 1));
    letters = letters.substr(0, colon);
  }
  seq.tiles = parse_tiles(letters);
  return seq;
}

TorusQuiver load(const QuiverSource& src) {
  if (!src.in.empty()) return import_json(read_file(src.in));
  if (!src.fixture.empty()) {
    for (auto& f : fixtures::torus_fixtures())
      if (f.name == src.fixture) return f.quiver;
    throw NotFound("no torus fixture named " + src.fixture);
  }
  if (src.p > 0 && src.q >= 0) return generate_ypq(src.p, src.q, tile_sequence(src));
  throw CLI::ValidationError("quiver", "give --in, --fixture, or --p and --q");
}

std::string fixed(double x, int digits = 12) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

json monomial_json(const Monomial4& m) {
  return {{"monomial", monomial_string(m)}, {"exponents", {m[0], m[1], m[2], m[3]}}};
}

json monomials_json(const std::vector<Monomial4>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(monomial_json(m));
  return a;
}

std::string relation_side(const std::vector<int>& mult) {
  std::string s;
  for (std::size_t k = 0; k < mult.size(); ++k)
    for (int e = 0; e < mult[k]; ++e) s += (s.empty() ? "" : " ") + std::string("z") + std::to_string(k + 1);
  return s;
}

json relations_json(const std::vector<BinomialRelation>& rels) {
  json a = json::array();
  for (const auto& r : rels)
    a.push_back({{"lhs", relation_side(r.lhs)}, {"rhs", relation_side(r.rhs)}, {"value", monomial_string(r.value)}});
  return a;
}

json abstract_quiver_json(const Quiver& q) {
  json j;
  j["vertices"] = q.num_vertices;
  j["arrows"] = json::array();
  for (const auto& a : q.arrows) {
    json ja = {{"id", a.id}, {"tail", a.tail}, {"head", a.head}};
    if (!a.name.empty()) ja["name"] = a.name;
    j["arrows"].push_back(ja);
  }
  return j;
}

ExactPoint parse_point(const std::string& text) {
  ExactPoint pt;
  std::stringstream ss(text);
  std::string item;
  int k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == 4) throw ParseError("a point has four coordinates");
    pt[k++] = parse_rational(item);
  }
  if (k != 4) throw ParseError("a point has four coordinates");
  return pt;
}

json complex_json(std::complex<double> z) { return {fixed(z.real()), fixed(z.imag())}; }

class Output {
 public:
  explicit Output(const RunConfig& cfg) : cfg_(cfg) {}
  void text(const std::string& s) {
    if (cfg_.out.empty()) {
      std::cout << s;
    } else {
      std::ofstream f(cfg_.out);
      if (!f) throw ParseError("cannot write " + cfg_.out);
      f << s;
    }
  }
  void emit(const json& j) { text(j.dump(2) + "\n"); }

 private:
  const RunConfig& cfg_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square superpotential algebras on the two-torus"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--max-degree", cfg.max_degree, "degree bound D")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--out", cfg.out, "write the report to this file");
  app.add_option("--format", cfg.format, "json, dot, text or csv")
      ->check(CLI::IsMember({"json", "dot", "text", "csv"}));

  QuiverSource src;
  auto* validate = app.add_subcommand("validate", "check the square conditions");
  add_source(validate, src);

  auto* ypq = app.add_subcommand("ypq", "generate a Y^{p,q} quiver");
  std::string emit = "json";
  ypq->add_option("--p", src.p)->required();
  ypq->add_option("--q", src.q)->required();
  ypq->add_option("--tiles", src.tiles, "tile letters, optionally followed by :shift");
  ypq->add_option("--emit", emit, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* center = app.add_subcommand("center", "center monoid generators and relations");
  add_source(center, src);

  auto* toric = app.add_subcommand("toric", "rank, saturation, regular sequence, socle");
  add_source(toric, src);
  int bound = 12, cap = 30;
  toric->add_option("--bound", bound, "saturation bound");
  toric->add_option("--cap", cap, "socle degree cap");

  auto* bd = app.add_subcommand("bd", "build and check the BD complex at a vertex");
  add_source(bd, src);
  int vertex = 1;
  std::string report = "json";
  bd->add_option("--vertex", vertex)->required();
  bd->add_option("--report", report)->check(CLI::IsMember({"json"}));

  auto* mutate = app.add_subcommand("mutate", "mutate at a vertex");
  add_source(mutate, src);
  int at = 1;
  bool tau_mode = false;
  mutate->add_option("--at", at)->required();
  mutate->add_flag("--tau", tau_mode, "tau-mutation keeping the torus embedding");

  auto* rep = app.add_subcommand("rep", "representation at a point");
  add_source(rep, src);
  std::string point;
  rep->add_option("--point", point, "x1,x2,y1,y2 as integers or p/q")->required();

  auto* scan = app.add_subcommand("scan", "moment map level scan");
  add_source(scan, src);
  double level = 1;
  int samples = 20;
  scan->add_option("--level", level, "r; the level is sign(r) r^2 / 2");
  scan->add_option("--samples", samples)->check(CLI::PositiveNumber);

  auto* rcharge = app.add_subcommand("rcharge", "R-charges of Y^{p,q}");
  rcharge->add_option("--p", src.p)->required();
  rcharge->add_option("--q", src.q)->required();

  auto* fx = app.add_subcommand("fixtures", "list or emit built-in quivers");
  std::string name;
  fx->add_option("--name", name, "emit this torus fixture as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  Output out(cfg);
  try {
    const int D = cfg.max_degree;
    if (*validate) {
      TorusQuiver q = load(src);
      ValidationReport r = validate_square(q);
      json j = {{"ok", r.ok}, {"violations", json::array()}};
      for (const auto& v : r.violations)
        j["violations"].push_back({{"condition", std::string(1, v.condition)}, {"message", v.message}});
      out.emit(j);
      return r.ok ? 0 : 1;
    }
    if (*ypq) {
      TorusQuiver q = generate_ypq(src.p, src.q, tile_sequence(src));
      out.text(emit == "dot" || cfg.format == "dot" ? export_dot(q) : export_json(q));
      return 0;
    }
    if (*center) {
      TorusQuiver q = load(src);
      auto gens = center_generators(q.quiver(), build_tau(q), D);
      ExponentMonoid Z(gens);
      json j;
      j["max_degree"] = D;
      j["generators"] = monomials_json(gens);
      j["rank"] = monoid_rank(Z);
      j["relations"] = relations_json(binomial_relations(Z, 2));
      out.emit(j);
      return 0;
    }
    if (*toric) {
      TorusQuiver q = load(src);
      ExponentMonoid Z(center_generators(q.quiver(), build_tau(q), D));
      auto [n, m] = effective_periods(q.n, q.m, q.shift);
      SaturationReport sat = saturation_check(Z, bound);
      RegularSequence rs = regular_sequence_cycles(Z, n, m);
      SocleReport soc = try_gorenstein_socle(Z, rs, cap);
      json j;
      j["rank"] = monoid_rank(Z);
      j["saturated"] = sat.saturated;
      j["saturation_bound"] = bound;
      if (sat.witness) j["saturation_witness"] = monomial_json(*sat.witness);
      j["periods"] = {n, m};
      j["regular_sequence"] = {{"alpha1", monomial_string(rs.alpha1)}, {"alpha2", monomial_string(rs.alpha2)},
                               {"beta1", monomial_string(rs.beta1)},   {"beta2", monomial_string(rs.beta2)},
                               {"s", rs.s}, {"t", rs.t}, {"swapped", rs.swapped}};
      j["socle"] = {{"finite", soc.finite}, {"cap", soc.cap}, {"expected", monomial_string(soc.expected)}};
      if (soc.finite) {
        j["socle"]["quotient_dimension"] = soc.quotient_basis.size();
        j["socle"]["basis"] = monomials_json(soc.socle);
      } else if (soc.unbounded) {
        j["socle"]["surviving_at_cap"] = monomial_string(*soc.unbounded);
      }
      out.emit(j);
      return 0;
    }
    if (*bd) {
      TorusQuiver q = load(src);
      BDComplex C = build_bd_complex(q, vertex);
      GradedAlgebra A(square_algebra(q));
      ComplexCheck chk = verify_complex(A, C);
      ExactnessReport er = exactness_report(A, C, D);
      json j;
      j["vertex"] = vertex;
      j["max_degree"] = D;
      j["is_complex"] = chk.ok;
      if (!chk.ok) j["offending"] = chk.detail;
      j["delta2"] = matrix_string(A.quiver(), C.delta2);
      j["delta1"] = matrix_string(A.quiver(), C.delta1);
      j["delta0"] = matrix_string(A.quiver(), C.delta0);
      j["bidiagonal_with_corner"] = bidiagonal_with_corner(C);
      j["junctions"] = json::array();
      for (const auto& h : er.junctions)
        j["junctions"].push_back({{"junction", h.label}, {"homology_by_degree", h.dims}, {"exact", h.exact()}});
      j["exact"] = er.exact();
      out.emit(j);
      return 0;
    }
    if (*mutate) {
      TorusQuiver q = load(src);
      if (tau_mode) {
        auto [tq, tau] = tau_mutate(q, build_tau(q), at);
        (void)tau;
        out.text(export_json(tq));
      } else {
        out.emit(abstract_quiver_json(quiver_mutate(q.quiver(), at)));
      }
      return 0;
    }
    if (*rep) {
      TorusQuiver q = load(src);
      Representation r = large_simple(q, parse_point(point));
      Quiver abstract = q.quiver();
      json j;
      j["point"] = json::array();
      for (const auto& c : parse_point(point)) j["point"].push_back(sqa::to_string(c));
      j["in_U"] = r.in_U;
      j["irreducible"] = is_irreducible(r);
      j["arrows"] = json::array();
      for (const auto& a : abstract.arrows)
        j["arrows"].push_back({{"id", a.id}, {"name", abstract.arrow_name(a.id)}, {"tail", a.tail},
                               {"head", a.head}, {"value", sqa::to_string(r.exact[a.id - 1])}});
      out.emit(j);
      return 0;
    }
    if (*scan) {
      if (src.p < 1 || src.q < 0) throw CLI::ValidationError("scan", "--p and --q are required");
      TorusQuiver q = load(src);
      ModuliScan s = moduli_scan(q, src.p, src.q, level, samples, cfg.seed);
      json j;
      j["p"] = s.p;
      j["q"] = s.q;
      j["r"] = fixed(s.r);
      j["level"] = fixed(s.level);
      j["groups"] = json::array();
      for (const auto& g : s.groups) {
        json jg;
        jg["support"] = g.support;
        std::vector<int> vanishing;
        for (const auto& a : q.arrows)
          if (std::find(g.support.begin(), g.support.end(), a.id) == g.support.end()) vanishing.push_back(a.id);
        jg["vanishing"] = vanishing;
        jg["samples"] = json::array();
        for (const auto& smp : g.samples) {
          json js;
          js["point"] = json::array();
          for (const auto& z : smp.point) js["point"].push_back(complex_json(z));
          js["mu"] = fixed(smp.mu);
          js["irreducible"] = smp.irreducible;
          jg["samples"].push_back(js);
        }
        j["groups"].push_back(jg);
      }
      out.emit(j);
      return 0;
    }
    if (*rcharge) {
      RChargeTable t = rcharge_table(src.p, src.q);
      if (cfg.format == "csv" || cfg.format == "text") {
        out.text("field,value\nx1y1," + fixed(t.x1y1) + "\nx2y1," + fixed(t.x1y1) + "\nx1," + fixed(t.x1) +
                 "\nx2," + fixed(t.x1) + "\ny1," + fixed(t.y1) + "\ny2," + fixed(t.y2) + "\nx1y2," + fixed(t.x1y2) +
                 "\nx2y2," + fixed(t.x1y2) + "\n");
      } else {
        out.emit({{"p", t.p}, {"q", t.q}, {"x1y1", fixed(t.x1y1)}, {"x2y1", fixed(t.x1y1)}, {"x1", fixed(t.x1)},
                  {"x2", fixed(t.x1)}, {"y1", fixed(t.y1)}, {"y2", fixed(t.y2)}, {"x1y2", fixed(t.x1y2)},
                  {"x2y2", fixed(t.x1y2)}});
      }
      return 0;
    }
    if (*fx) {
      if (!name.empty()) {
        for (auto& f : fixtures::torus_fixtures())
          if (f.name == name) {
            out.text(export_json(f.quiver));
            return 0;
          }
        throw NotFound("no torus fixture named " + name);
      }
      json j;
      j["torus"] = json::array();
      for (auto& f : fixtures::torus_fixtures())
        j["torus"].push_back({{"name", f.name}, {"vertices", f.quiver.num_vertices()},
                              {"arrows", f.quiver.arrows.size()}});
      j["resolutions"] = json::array();
      for (auto& f : fixture_resolutions())
        j["resolutions"].push_back({{"name", f.name}, {"length", f.complex.length()}, {"period", f.period},
                                    {"terminal", f.complex.terminal}});
      out.emit(j);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
