#include "hamfix/io.hpp"

#include <set>

#include "hamfix/errors.hpp"

namespace hamfix::io {

const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object()) fail(ErrorKind::InvalidInput, std::string("expected an object holding '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  return *it;
}

Rational rational_from(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorKind::InvalidInput, std::string(what) + ": expected an integer or a rational string");
}

Integer integer_from(const Json& j, const char* what) {
  Rational q = rational_from(j, what);
  if (!is_integer(q)) fail(ErrorKind::InvalidInput, std::string(what) + ": expected an integer");
  return q.get_num();
}

int int_from(const Json& j, const char* what) {
  Integer z = integer_from(j, what);
  if (!z.fits_sint_p()) fail(ErrorKind::InvalidInput, std::string(what) + ": out of range");
  return static_cast<int>(z.get_si());
}

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return to_string(z);
}
Json to_json(const qla::QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}
Json to_json(const qla::ZVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Novikov novikov_from(const Json& j, const char* what) {
  if (j.is_number_integer()) return Novikov(rational_from(j, what));
  if (j.is_string()) return parse_novikov(j.get<std::string>());
  fail(ErrorKind::InvalidInput, std::string(what) + ": expected Novikov text");
}

namespace {

std::vector<Rational> rationals_from(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, std::string(what) + ": expected an array");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from(x, what));
  return out;
}

const std::string& string_from(const Json& j, const char* what) {
  if (!j.is_string()) fail(ErrorKind::InvalidInput, std::string(what) + ": expected a string");
  return j.get_ref<const std::string&>();
}

}  // namespace

RingPtr ring_from_json(const Json& j) {
  QuantumRing::Data d;
  const Json& basis = member(j, "basis");
  if (!basis.is_array() || basis.empty()) fail(ErrorKind::InvalidInput, "basis: expected a nonempty array");
  std::map<std::string, std::size_t> index;
  for (const auto& b : basis) {
    BasisElement e{string_from(member(b, "label"), "basis label"), int_from(member(b, "degree"), "basis degree")};
    if (!index.emplace(e.label, d.basis.size()).second) fail(ErrorKind::InvalidInput, "duplicate basis label " + e.label);
    d.basis.push_back(e);
  }
  d.dim_n = int_from(member(j, "dim_n"), "dim_n");
  d.period = rational_from(member(j, "period"), "period");
  d.fundamental = string_from(member(j, "fundamental"), "fundamental");
  d.point = string_from(member(j, "point"), "point");
  if (j.contains("chern_per_area")) d.chern_per_area = rational_from(j["chern_per_area"], "chern_per_area");

  const std::size_t n = d.basis.size();
  auto lookup = [&](const Json& label) {
    const std::string& s = string_from(label, "product label");
    auto it = index.find(s);
    if (it == index.end()) fail(ErrorKind::InvalidInput, "unknown basis label " + s);
    return it->second;
  };
  std::vector<std::vector<std::optional<QuantumRing::Product>>> given(n, std::vector<std::optional<QuantumRing::Product>>(n));
  const Json& products = member(j, "products");
  if (!products.is_array()) fail(ErrorKind::InvalidInput, "products: expected an array");
  for (const auto& entry : products) {
    std::size_t a = lookup(member(entry, "left")), b = lookup(member(entry, "right"));
    if (given[a][b]) fail(ErrorKind::InvalidInput, "product " + d.basis[a].label + "*" + d.basis[b].label + " listed twice");
    QuantumRing::Product prod(n, Novikov(Rational(0)));
    for (const auto& t : member(entry, "terms")) {
      std::size_t c = lookup(member(t, "label"));
      Rational e = rational_from(member(t, "exponent"), "exponent");
      Rational coef = rational_from(member(t, "coefficient"), "coefficient");
      prod[c] += Novikov::monomial(coef, e);
    }
    given[a][b] = std::move(prod);
  }
  d.table.assign(n, std::vector<QuantumRing::Product>(n, QuantumRing::Product(n, Novikov(Rational(0)))));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (given[a][b]) d.table[a][b] = *given[a][b];
      else if (given[b][a]) d.table[a][b] = *given[b][a];
    }
  return std::make_shared<const QuantumRing>(std::move(d));
}

Json ring_to_json(const QuantumRing& ring) {
  Json j;
  Json basis = Json::array();
  for (const auto& b : ring.basis()) basis.push_back({{"label", b.label}, {"degree", b.degree}});
  j["basis"] = basis;
  j["dim_n"] = ring.dim_n();
  j["period"] = to_json(ring.period());
  j["fundamental"] = ring.label(ring.fundamental());
  j["point"] = ring.label(ring.point());
  if (ring.chern_per_area()) j["chern_per_area"] = to_json(*ring.chern_per_area());
  Json products = Json::array();
  for (std::size_t a = 0; a < ring.dim(); ++a)
    for (std::size_t b = a; b < ring.dim(); ++b) {
      const auto& prod = ring.structure(a, b);
      Json terms = Json::array();
      for (std::size_t c = 0; c < ring.dim(); ++c)
        for (const auto& [e, coef] : prod[c].terms())
          terms.push_back({{"label", ring.label(c)}, {"exponent", to_json(e)}, {"coefficient", to_json(coef)}});
      if (!terms.empty()) products.push_back({{"left", ring.label(a)}, {"right", ring.label(b)}, {"terms", terms}});
    }
  j["products"] = products;
  return j;
}

GradedClass class_from_json(const RingPtr& ring, const Json& j) {
  if (j.is_string()) return GradedClass::basis(ring, ring->index(j.get<std::string>()));
  if (!j.is_object()) fail(ErrorKind::InvalidInput, "class: expected a label or an object label -> coefficient");
  GradedClass out = GradedClass::zero(ring);
  for (const auto& [label, coef] : j.items())
    out = out + GradedClass::basis(ring, ring->index(label), novikov_from(coef, "class coefficient"));
  return out;
}

Json class_to_json(const GradedClass& a) {
  Json out = Json::object();
  for (std::size_t i = 0; i < a.coords().size(); ++i)
    if (!a.coord(i).is_zero()) out[a.ring()->label(i)] = to_string(a.coord(i));
  return out;
}

OrbitSpec orbit_from_json(const Json& j) {
  LieType type = parse_lie_type(string_from(member(j, "type"), "type"));
  int rank = j.contains("rank") ? int_from(j["rank"], "rank") : 0;
  OrbitSpec o{build_root_system(type, rank), rationals_from(member(j, "lambda"), "lambda")};
  if (o.lambda.size() != o.rs.ambient)
    fail(ErrorKind::DimensionMismatch, "lambda has " + std::to_string(o.lambda.size()) + " coordinates, expected " +
                                           std::to_string(o.rs.ambient));
  return o;
}

ToricSpec toric_from_json(const Json& j) {
  ToricSpec s;
  s.k = int_from(member(j, "k"), "k");
  s.n = int_from(member(j, "n"), "n");
  const Json& w = member(j, "weights");
  if (!w.is_array()) fail(ErrorKind::InvalidInput, "weights: expected an array");
  for (const auto& row : w) {
    if (!row.is_array()) fail(ErrorKind::InvalidInput, "weights: expected arrays of integers");
    qla::ZVector v;
    for (const auto& x : row) v.push_back(integer_from(x, "weight"));
    s.weights.push_back(v);
  }
  s.tau = rationals_from(member(j, "tau"), "tau");
  if (s.weights.size() != static_cast<std::size_t>(s.n))
    fail(ErrorKind::InvalidInput, "toric: n does not match the number of weights");
  for (const auto& v : s.weights)
    if (v.size() != static_cast<std::size_t>(s.k)) fail(ErrorKind::DimensionMismatch, "toric: every weight must have k coordinates");
  if (s.tau.size() != static_cast<std::size_t>(s.k)) fail(ErrorKind::DimensionMismatch, "toric: tau must have k coordinates");
  return s;
}

Json toric_to_json(const ToricSpec& spec) {
  Json w = Json::array();
  for (const auto& v : spec.weights) w.push_back(to_json(v));
  return {{"k", spec.k}, {"n", spec.n}, {"weights", w}, {"tau", to_json(spec.tau)}};
}

FilteredComplex complex_from_json(const Json& j) {
  FilteredComplex c;
  const Json& gens = member(j, "generators");
  if (!gens.is_array() || gens.empty()) fail(ErrorKind::InvalidInput, "generators: expected a nonempty array");
  std::set<std::string> seen;
  for (const auto& g : gens) {
    Generator gen{string_from(member(g, "label"), "generator label"), int_from(member(g, "degree"), "generator degree"),
                  rational_from(member(g, "level"), "generator level")};
    if (!seen.insert(gen.label).second) fail(ErrorKind::InvalidInput, "duplicate generator label " + gen.label);
    c.generators.push_back(gen);
  }
  const std::size_t n = c.size();
  c.boundary.assign(n, qla::QVector(n, Rational(0)));
  const Json& bd = member(j, "boundary");
  if (!bd.is_array()) fail(ErrorKind::InvalidInput, "boundary: expected an array of triples");
  for (const auto& t : bd) {
    if (!t.is_array() || t.size() != 3) fail(ErrorKind::InvalidInput, "boundary: expected [target, source, coefficient]");
    std::size_t row = c.index(string_from(t[0], "boundary target"));
    std::size_t col = c.index(string_from(t[1], "boundary source"));
    c.boundary[row][col] += rational_from(t[2], "boundary coefficient");
  }
  return c;
}

Json complex_to_json(const FilteredComplex& c) {
  Json gens = Json::array();
  for (const auto& g : c.generators) gens.push_back({{"label", g.label}, {"degree", g.degree}, {"level", to_json(g.level)}});
  Json bd = Json::array();
  for (std::size_t col = 0; col < c.size(); ++col)
    for (std::size_t row = 0; row < c.size(); ++row)
      if (c.boundary[row][col] != 0)
        bd.push_back(Json::array({c.generators[row].label, c.generators[col].label, to_json(c.boundary[row][col])}));
  return {{"generators", gens}, {"boundary", bd}};
}

HomologyClass homology_class_from_json(const FilteredComplex& c, const Json& j) {
  if (!j.is_object() || j.empty()) fail(ErrorKind::InvalidInput, "class: expected an object label -> coefficient");
  HomologyClass a;
  a.cycle.assign(c.size(), Rational(0));
  bool first = true;
  for (const auto& [label, coef] : j.items()) {
    std::size_t i = c.index(label);
    if (first) a.degree = c.generators[i].degree;
    else if (c.generators[i].degree != a.degree) fail(ErrorKind::InvalidInput, "class mixes degrees");
    first = false;
    a.cycle[i] += rational_from(coef, "class coefficient");
  }
  return a;
}

}  // namespace hamfix::io
