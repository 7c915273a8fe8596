#include "hamfix/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "hamfix/bounds.hpp"
#include "hamfix/errors.hpp"

namespace hamfix {

using io::Json;

namespace {

bool has(const Json& req, const char* key) { return req.is_object() && req.contains(key) && !req[key].is_null(); }

int get_int(const Json& req, const char* key) { return io::int_from(io::member(req, key), key); }
int get_int(const Json& req, const char* key, int fallback) { return has(req, key) ? get_int(req, key) : fallback; }
Rational get_rat(const Json& req, const char* key) { return io::rational_from(io::member(req, key), key); }
Rational get_rat(const Json& req, const char* key, const Rational& fallback) {
  return has(req, key) ? get_rat(req, key) : fallback;
}
std::string get_str(const Json& req, const char* key, const std::string& fallback = "") {
  if (!has(req, key)) return fallback;
  if (!req[key].is_string()) fail(ErrorKind::InvalidInput, std::string(key) + ": expected a string");
  return req[key].get<std::string>();
}
bool get_bool(const Json& req, const char* key) {
  if (!has(req, key)) return false;
  const Json& v = req[key];
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_string()) return v == "true" || v == "1";
  fail(ErrorKind::InvalidInput, std::string(key) + ": expected a boolean");
}

/// Arrays may arrive as JSON arrays or as JSON text (from --param key=[1,2]).
Json get_array(const Json& req, const char* key) {
  Json v = io::member(req, key);
  if (v.is_string()) {
    try {
      v = Json::parse(v.get<std::string>());
    } catch (const nlohmann::json::exception&) {
      fail(ErrorKind::InvalidInput, std::string(key) + ": expected a JSON array");
    }
  }
  if (!v.is_array()) fail(ErrorKind::InvalidInput, std::string(key) + ": expected an array");
  return v;
}
Json get_object(const Json& req, const char* key) {
  Json v = io::member(req, key);
  if (v.is_string() && !v.get<std::string>().empty() && v.get<std::string>()[0] == '{') {
    try {
      v = Json::parse(v.get<std::string>());
    } catch (const nlohmann::json::exception&) {
      fail(ErrorKind::InvalidInput, std::string(key) + ": expected a JSON object");
    }
  }
  return v;
}
std::vector<int> int_list(const Json& arr, const char* what) {
  std::vector<int> out;
  for (const auto& x : arr) out.push_back(io::int_from(x, what));
  return out;
}
std::vector<Integer> integer_list(const Json& arr, const char* what) {
  std::vector<Integer> out;
  for (const auto& x : arr) out.push_back(io::integer_from(x, what));
  return out;
}
qla::QVector rational_list(const Json& arr, const char* what) {
  qla::QVector out;
  for (const auto& x : arr) out.push_back(io::rational_from(x, what));
  return out;
}

std::size_t search_limit(const Json& req, std::size_t fallback) {
  int v = get_int(req, "search_limit", static_cast<int>(fallback));
  if (v < 1) fail(ErrorKind::InvalidInput, "search_limit must be >= 1");
  return static_cast<std::size_t>(v);
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

/// key: value lines for a flat report; nested values are written compactly.
std::string render(const Json& data) {
  std::size_t width = 0;
  for (const auto& [k, v] : data.items()) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : data.items()) out << std::left << std::setw(static_cast<int>(width)) << k << "  " << scalar_text(v) << "\n";
  return out.str();
}

std::string vec_text(const qla::QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

// ---------------------------------------------------------------- orbit

struct OrbitInput {
  OrbitSpec orbit;
  std::optional<bounds::CaseValue> case_value;
  std::string name;
};

OrbitInput orbit_input(const Json& req) {
  if (has(req, "input")) return {io::orbit_from_json(req["input"]), std::nullopt, "custom"};
  std::string preset = get_str(req, "preset");
  if (preset == "projective") {
    int n = get_int(req, "n");
    return {preset_projective(n), bounds::case_projective(n), "CP^" + std::to_string(n - 1)};
  }
  if (preset == "grassmannian") {
    int k = get_int(req, "k"), n = get_int(req, "n");
    return {preset_grassmannian(k, n), bounds::case_grassmannian(k, n),
            "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")"};
  }
  if (preset == "flag-1-n1") {
    int n = get_int(req, "n");
    return {preset_flag_1_n1(n), bounds::case_flag_1_n1(n), "F(1," + std::to_string(n - 1) + "," + std::to_string(n) + ")"};
  }
  if (preset == "block-flag") {
    int k = get_int(req, "k"), m = get_int(req, "m");
    return {preset_block_flag(k, m), bounds::case_block_flag(k, m),
            "U(" + std::to_string(k * m) + ")/U(" + std::to_string(k) + ")^" + std::to_string(m)};
  }
  if (preset == "complete-flag") {
    int n = get_int(req, "n");
    return {preset_complete_flag(n), bounds::case_complete_flag(n), "F_" + std::to_string(n)};
  }
  if (preset == "partial-flag") {
    auto dims = int_list(get_array(req, "dims"), "dims");
    int n = get_int(req, "n");
    return {preset_partial_flag(dims, n), std::nullopt, "partial flag"};
  }
  if (preset.empty()) fail(ErrorKind::InvalidInput, "orbit: give a preset or an input document");
  fail(ErrorKind::InvalidInput, "orbit: unknown preset '" + preset + "'");
}

Report orbit_command(const Json& req) {
  OrbitInput in = orbit_input(req);
  OrbitReport rep = orbit_fixed_point_bound(in.orbit, search_limit(req, 64));
  const RootSystem& rs = in.orbit.rs;
  Json d;
  d["name"] = in.name;
  d["type"] = to_string(rs.type);
  d["rank"] = rs.rank;
  d["lambda"] = io::to_json(rep.lambda);
  d["period"] = io::to_json(rep.period.period);
  d["period_single_root_min"] = io::to_json(rep.period.single_root_min);
  d["formulas_differ"] = rep.period.formulas_differ;
  d["cuplength"] = rep.cuplength;
  d["kappa"] = io::to_json(rep.kappa);
  Json decs = Json::array();
  for (std::size_t i = 0; i < rep.decompositions.size(); ++i) {
    Json roots = Json::array();
    for (auto r : rep.decompositions[i].roots) roots.push_back(io::to_json(rs.roots[r]));
    decs.push_back({{"roots", roots}, {"theta", io::to_json(rep.thetas[i])}});
  }
  d["decompositions"] = decs;
  d["best"] = rep.best;
  d["bound"] = io::to_json(rep.bound);
  if (in.case_value) {
    d["closed_form"] = {{"ceiling_form", io::to_json(in.case_value->ceiling_form)},
                        {"simplified", io::to_json(in.case_value->closed_form)}};
  }

  std::ostringstream t;
  t << "orbit      " << in.name << "  (" << to_string(rs.type) << rs.rank << ")\n";
  t << "lambda     " << vec_text(rep.lambda) << "\n";
  t << "period     " << to_string(rep.period.period);
  if (rep.period.formulas_differ) t << "  (single-root minimum " << to_string(rep.period.single_root_min) << ")";
  t << "\ncuplength  " << rep.cuplength << "\nkappa      " << to_string(rep.kappa) << "\n\n";
  std::size_t w = 5;
  for (const auto& th : rep.thetas) w = std::max(w, to_string(th).size());
  t << "  #  " << std::left << std::setw(static_cast<int>(w)) << "theta" << "  roots\n";
  for (std::size_t i = 0; i < rep.decompositions.size(); ++i) {
    t << (i == rep.best ? "* " : "  ") << std::right << std::setw(2) << i << " " << std::left
      << std::setw(static_cast<int>(w)) << to_string(rep.thetas[i]) << "  ";
    for (std::size_t r = 0; r < rep.decompositions[i].roots.size(); ++r)
      t << (r ? " " : "") << vec_text(rs.roots[rep.decompositions[i].roots[r]]);
    t << "\n";
  }
  t << "\nbound      " << rep.bound << "\n";
  if (in.case_value)
    t << "closed     " << in.case_value->ceiling_form << " (ceiling form), " << in.case_value->closed_form
      << " (simplified)\n";
  return {d, t.str()};
}

// ---------------------------------------------------------------- toric

ToricSpec toric_input(const Json& req) {
  if (has(req, "input")) return io::toric_from_json(req["input"]);
  std::string preset = get_str(req, "preset");
  if (preset == "cp") return toric_cp(get_int(req, "n"), get_rat(req, "tau", 1));
  if (preset == "cp2") return toric_cp(2, get_rat(req, "tau", 1));
  if (preset == "cp1xcp1") return toric_cp1xcp1(get_rat(req, "a", 1), get_rat(req, "b", 1));
  if (preset == "product") {
    auto dims = int_list(get_array(req, "dims"), "dims");
    qla::QVector taus = has(req, "taus") ? rational_list(get_array(req, "taus"), "taus") : qla::QVector(dims.size(), Rational(1));
    return toric_product(dims, taus);
  }
  if (preset == "hirzebruch") {
    int a = get_int(req, "a");
    if (has(req, "tau")) return toric_hirzebruch(a, rational_list(get_array(req, "tau"), "tau"));
    return toric_hirzebruch(a);
  }
  if (preset.empty()) fail(ErrorKind::InvalidInput, "toric: give a preset or an input document");
  fail(ErrorKind::InvalidInput, "toric: unknown preset '" + preset + "'");
}

Report toric_command(const Json& req) {
  ToricSpec spec = toric_input(req);
  ToricOptions opt;
  opt.allow_nonfree = get_bool(req, "allow_nonfree");
  LatticeData data = analyze(spec, opt);
  GiventalReport g = givental_bound(spec, data);  // NotFano propagates
  Json d;
  d["spec"] = io::toric_to_json(spec);
  d["fano"] = true;
  d["monotone"] = is_monotone(spec, data);
  d["period"] = io::to_json(g.period);
  d["minimal_chern_number"] = io::to_json(minimal_chern_number(spec, data));
  d["first_chern"] = io::to_json(first_chern(spec));
  Json basis = Json::array();
  for (const auto& v : data.delta_basis) basis.push_back(io::to_json(v));
  d["delta_basis"] = basis;
  Json rays = Json::array();
  for (const auto& v : data.chamber_rays) rays.push_back(io::to_json(v));
  d["chamber_rays"] = rays;
  Json eff = Json::array();
  for (const auto& v : data.effective) eff.push_back(io::to_json(v));
  d["effective_generators"] = eff;
  Json rels = Json::array();
  std::ostringstream rt;
  for (const auto& r : quantum_sr_relations(spec, data)) {
    rels.push_back({{"xi", io::to_json(r.xi)},
                    {"d", io::to_json(r.d)},
                    {"d_plus", io::to_json(r.d_plus)},
                    {"d_minus", io::to_json(r.d_minus)},
                    {"area", io::to_json(r.area)}});
    auto mono = [](const qla::ZVector& e) {
      std::string s;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += " ";
        s += "X" + std::to_string(i + 1);
        if (e[i] != 1) s += "^" + to_string(e[i]);
      }
      return s.empty() ? std::string("1") : s;
    };
    std::string rhs = to_string(Novikov::monomial(1, r.area));
    if (mono(r.d_minus) != "1") rhs += "*" + mono(r.d_minus);
    rt << "  " << mono(r.d_plus) << " = " << rhs << "\n";
  }
  d["relations"] = rels;
  d["max_ratio"] = io::to_json(g.max_ratio);
  d["argmax"] = io::to_json(g.argmax);
  d["bound"] = io::to_json(g.bound);
  d["warnings"] = data.warnings;

  std::ostringstream t;
  t << "weights    ";
  for (std::size_t i = 0; i < spec.weights.size(); ++i) t << (i ? " " : "") << vec_text(qla::to_rational(spec.weights[i]));
  t << "\ntau        " << vec_text(spec.tau) << "\n";
  t << "fano       yes\nmonotone   " << (d["monotone"].get<bool>() ? "yes" : "no") << "\n";
  t << "period     " << to_string(g.period) << "\nchern N    " << d["minimal_chern_number"].dump() << "\n";
  t << "effective  ";
  for (std::size_t i = 0; i < data.effective.size(); ++i) t << (i ? " " : "") << vec_text(qla::to_rational(data.effective[i]));
  t << "\nrelations\n" << rt.str();
  t << "max ratio  " << to_string(g.max_ratio) << " at " << vec_text(qla::to_rational(g.argmax)) << "\n";
  t << "bound      " << g.bound << "\n";
  for (const auto& w : data.warnings) t << "warning    " << w << "\n";
  return {d, t.str()};
}

// ---------------------------------------------------------------- ring

RingPtr ring_input(const Json& req) {
  if (has(req, "input")) return io::ring_from_json(req["input"]);
  std::string preset = get_str(req, "preset");
  if (preset == "projective") {
    int n = get_int(req, "n");
    return qh_projective(n, get_rat(req, "p", n + 1));
  }
  if (preset == "grassmannian") {
    int k = get_int(req, "k"), n = get_int(req, "n");
    return qh_grassmannian(k, n, get_rat(req, "p", n));
  }
  if (preset == "toric") {
    ToricSpec spec = io::toric_from_json(get_object(req, "toric"));
    return toric_quantum_ring(spec, analyze(spec));
  }
  if (preset.empty()) fail(ErrorKind::InvalidInput, "ring: give a preset or an input document");
  fail(ErrorKind::InvalidInput, "ring: unknown preset '" + preset + "'");
}

GradedClass class_arg(const RingPtr& ring, const Json& req, const char* key) {
  Json v = io::member(req, key);
  if (v.is_string() && !v.get<std::string>().empty() && v.get<std::string>()[0] == '{') v = get_object(req, key);
  return io::class_from_json(ring, v);
}

Report ring_command(const Json& req) {
  RingPtr ring = ring_input(req);
  const std::string op = get_str(req, "op", "describe");
  const int default_len = 2 * ring->dim_n() + 2;
  Json d;
  std::ostringstream t;
  if (op == "describe") {
    d = io::ring_to_json(*ring);
    t << "dim_n " << ring->dim_n() << ", period " << to_string(ring->period()) << ", rank " << ring->dim() << "\n";
    for (std::size_t a = 0; a < ring->dim(); ++a)
      for (std::size_t b = a; b < ring->dim(); ++b)
        t << ring->label(a) << " * " << ring->label(b) << " = "
          << to_string(product(GradedClass::basis(ring, a), GradedClass::basis(ring, b))) << "\n";
  } else if (op == "product") {
    GradedClass a = class_arg(ring, req, "a"), b = class_arg(ring, req, "b");
    GradedClass c = product(a, b);
    d["a"] = io::class_to_json(a);
    d["b"] = io::class_to_json(b);
    d["product"] = io::class_to_json(c);
    d["i_nu"] = to_string(i_nu(c));
    t << "(" << to_string(a) << ") * (" << to_string(b) << ") = " << to_string(c) << "\n";
  } else if (op == "power") {
    GradedClass a = class_arg(ring, req, "a");
    int k = get_int(req, "power");
    GradedClass c = power(a, k);
    d["a"] = io::class_to_json(a);
    d["power"] = k;
    d["result"] = io::class_to_json(c);
    t << "(" << to_string(a) << ")^" << k << " = " << to_string(c) << "\n";
  } else if (op == "pair") {
    GradedClass a = class_arg(ring, req, "a"), b = class_arg(ring, req, "b");
    d["pairing"] = io::to_json(pair_pi(a, b));
    d["i_nu_a"] = to_string(i_nu(a));
    d["i_nu_b"] = to_string(i_nu(b));
    t << render(d);
  } else if (op == "cuplength") {
    Rational g = get_rat(req, "g", 0);
    CuplengthReport r = quantum_cuplength(*ring, g, get_int(req, "max_len", default_len));
    d["g"] = io::to_json(r.g);
    d["lower_bound"] = r.lower_bound;
    d["witness"] = r.witness;
    t << "qcl(" << to_string(g) << ") >= " << r.lower_bound;
    if (!r.witness.empty()) {
      t << "  witness ";
      for (std::size_t i = 0; i < r.witness.size(); ++i) t << (i ? " * " : "") << r.witness[i];
    }
    t << "\n";
  } else if (op == "pfqf") {
    auto f = pfqf_search(*ring, get_int(req, "max_len", default_len));
    d["found"] = f.has_value();
    if (f) {
      d["length"] = f->length;
      d["order"] = io::to_json(f->order);
      d["bound"] = io::to_json(f->bound);
      d["lambda"] = to_string(f->lambda);
      d["factors"] = f->factors;
      t << "length " << f->length << ", order " << f->order << ", bound " << f->bound << "\n[M]-coefficient "
        << to_string(f->lambda) << "\nfactors ";
      for (std::size_t i = 0; i < f->factors.size(); ++i) t << (i ? " * " : "") << f->factors[i];
      t << "\n";
    } else {
      t << "no factorization within the length limit\n";
    }
  } else if (op == "nonnilpotent") {
    GradedClass a = class_arg(ring, req, "a");
    NilpotenceReport r = nonnilpotent_test(a, get_int(req, "max_len", default_len));
    d["verdict"] = to_string(r.verdict);
    d["level"] = r.level;
    if (r.verdict == NilpotenceVerdict::ProvenNonnilpotent) {
      d["rule"] = r.rule;
      d["k"] = r.k;
      d["m"] = r.m;
      d["z"] = io::to_json(r.z);
      d["c"] = io::to_json(r.c);
    }
    t << render(d);
  } else if (op == "associativity") {
    auto show = [&](const char* name, const std::optional<std::string>& res) {
      d[name] = res ? Json(*res) : Json("ok");
    };
    show("associativity", check_associativity(*ring));
    show("commutativity", check_commutativity(*ring));
    show("unity", check_unity(*ring));
    show("degrees", check_degrees(*ring));
    t << render(d);
  } else {
    fail(ErrorKind::InvalidInput, "ring: unknown op '" + op + "'");
  }
  return {d, t.str()};
}

// ---------------------------------------------------------------- bound

Report bound_command(const Json& req) {
  const std::string ev = get_str(req, "evaluator");
  Json d;
  d["evaluator"] = ev;
  if (ev == "main") {
    d["bound"] = io::to_json(bounds::main_bound(get_rat(req, "p"), get_rat(req, "theta"), get_rat(req, "cuplength").get_num()));
  } else if (ev == "arnold") {
    auto r = bounds::arnold_predicate(get_rat(req, "p"), get_rat(req, "gamma"), get_rat(req, "cuplength").get_num());
    d["applies"] = r.has_value();
    d["bound"] = r ? io::to_json(*r) : Json(nullptr);
  } else if (ev == "bcl") {
    Json table = get_object(req, "qcl");
    if (!table.is_object()) fail(ErrorKind::InvalidInput, "qcl: expected an object g -> qcl(g)");
    std::map<Rational, Integer> qcl;
    for (const auto& [g, v] : table.items()) qcl[parse_rational(g)] = io::integer_from(v, "qcl value");
    auto r = bounds::bcl_bound(get_rat(req, "p"), qcl, get_rat(req, "hofer", 0));
    d["bound"] = io::to_json(r.bound);
    d["best_g"] = io::to_json(r.best_g);
  } else if (ev == "schwarz") {
    auto r = bounds::schwarz_type_bound(get_rat(req, "N").get_num(), get_int(req, "dim2n"), get_int(req, "deg_a"));
    d["bound"] = io::to_json(r.bound);
    d["raw"] = io::to_json(r.raw);
  } else if (ev == "onepoint") {
    std::optional<Integer> c1a;
    if (has(req, "c1A")) c1a = io::integer_from(req["c1A"], "c1A");
    std::vector<int> codims;
    if (has(req, "codims")) codims = int_list(get_array(req, "codims"), "codims");
    auto r = bounds::one_point_bounds(get_rat(req, "p"), get_int(req, "l"), get_rat(req, "area"), c1a, codims);
    d["b1"] = io::to_json(r.b1);
    d["b2"] = r.b2 ? io::to_json(*r.b2) : Json(nullptr);
  } else if (ev == "pfqf") {
    d["bound"] = io::to_json(bounds::pfqf_bound(get_rat(req, "l").get_num(), get_rat(req, "g").get_num()));
  } else if (ev == "blowup") {
    auto ks = integer_list(get_array(req, "ks"), "ks");
    d["bound"] = io::to_json(bounds::blowup_bound(get_rat(req, "p"), get_rat(req, "theta"), get_rat(req, "m").get_num(), ks,
                                                  get_rat(req, "cuplength").get_num()));
  } else if (ev == "unitary") {
    auto r = bounds::unitary_formula(rational_list(get_array(req, "lambda"), "lambda"));
    d["period"] = io::to_json(r.period);
    d["theta"] = io::to_json(r.theta);
    d["cuplength"] = io::to_json(r.cuplength);
    d["bound"] = io::to_json(r.bound);
  } else if (ev == "case") {
    int c = get_int(req, "case");
    bounds::CaseValue v;
    switch (c) {
      case 1: v = bounds::case_projective(get_int(req, "n")); break;
      case 2: v = bounds::case_grassmannian(get_int(req, "k"), get_int(req, "n")); break;
      case 3: v = bounds::case_flag_1_n1(get_int(req, "n")); break;
      case 4: v = bounds::case_block_flag(get_int(req, "k"), get_int(req, "m")); break;
      case 5: v = bounds::case_complete_flag(get_int(req, "n")); break;
      default: fail(ErrorKind::InvalidInput, "case must be 1..5");
    }
    d["ceiling_form"] = io::to_json(v.ceiling_form);
    d["simplified"] = io::to_json(v.closed_form);
  } else {
    if (ev.empty()) fail(ErrorKind::InvalidInput, "bound: missing evaluator");
    fail(ErrorKind::InvalidInput, "bound: unknown evaluator '" + ev + "'");
  }
  return {d, render(d)};
}

// ---------------------------------------------------------------- ls

FilteredComplex complex_input(const Json& req) {
  if (has(req, "input")) return io::complex_from_json(req["input"]);
  std::string preset = get_str(req, "preset");
  if (preset == "circle") return complex_circle();
  if (preset == "circle-two-minima") return complex_circle_two_minima();
  if (preset == "sphere") return complex_sphere();
  if (preset == "sphere-cancelling") return complex_sphere_cancelling();
  if (preset == "torus") return complex_torus();
  if (preset.empty()) fail(ErrorKind::InvalidInput, "ls: give a preset or an input document");
  fail(ErrorKind::InvalidInput, "ls: unknown preset '" + preset + "'");
}

Report ls_command(const Json& req) {
  FilteredComplex c = complex_input(req);
  validate(c);
  HomologyClass pt = point_class(c), top = fundamental_class(c);
  Json d;
  d["generators"] = c.size();
  d["top_degree"] = c.top_degree();
  d["c_ls_point"] = io::to_json(c_ls(c, pt));
  d["c_ls_fundamental"] = io::to_json(c_ls(c, top));
  const Json* cls = nullptr;
  if (has(req, "class")) cls = &req["class"];
  else if (has(req, "input") && req["input"].contains("class")) cls = &req["input"]["class"];
  if (cls) {
    Json cj = *cls;
    HomologyClass a;
    if (cj == "point") a = pt;
    else if (cj == "fundamental") a = top;
    else {
      if (cj.is_string()) cj = Json::parse(cj.get<std::string>());
      a = io::homology_class_from_json(c, cj);
    }
    d["class_degree"] = a.degree;
    d["c_ls_class"] = io::to_json(c_ls(c, a));
    d["sandwich"] = sandwich_check(c, a);
  }
  return {d, render(d)};
}

// ---------------------------------------------------------------- novikov

Report novikov_command(const Json& req) {
  const std::string op = get_str(req, "op", "parse");
  Novikov a = io::novikov_from(io::member(req, "a"), "a");
  Json d;
  if (op == "parse") {
    d["value"] = to_string(a);
  } else if (op == "add" || op == "mul") {
    Novikov b = io::novikov_from(io::member(req, "b"), "b");
    Novikov r = op == "add" ? a + b : a * b;
    if (has(req, "cutoff")) r = r.truncated(get_rat(req, "cutoff"));
    d["value"] = to_string(r);
  } else if (op == "exp") {
    d["value"] = to_string(exp_truncated(a, get_rat(req, "cutoff")));
  } else if (op == "invert") {
    d["value"] = to_string(invert_truncated(a, get_rat(req, "cutoff")));
  } else if (op == "valuation") {
    d["value"] = to_string(a.valuation());
  } else {
    fail(ErrorKind::InvalidInput, "novikov: unknown op '" + op + "'");
  }
  return {d, d["value"].get<std::string>() + "\n"};
}

// ---------------------------------------------------------------- selfcheck

Report selfcheck_command() {
  auto rows = run_selfcheck();
  Json d;
  Json arr = Json::array();
  bool ok = true;
  std::size_t w = 4;
  for (const auto& r : rows) w = std::max(w, r.name.size());
  std::ostringstream t;
  std::size_t passed = 0, counted = 0;
  for (const auto& r : rows) {
    arr.push_back({{"name", r.name}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}, {"counted", r.counted}});
    if (r.counted) {
      ++counted;
      if (r.pass) ++passed;
      else ok = false;
    }
    t << (r.counted ? (r.pass ? "PASS  " : "FAIL  ") : "INFO  ") << std::left << std::setw(static_cast<int>(w)) << r.name
      << "  expected " << r.expected << ", got " << r.actual << "\n";
  }
  t << passed << "/" << counted << " checks passed\n";
  d["rows"] = arr;
  d["passed"] = passed;
  d["counted"] = counted;
  d["ok"] = ok;
  return {d, t.str(), ok};
}

}  // namespace

Report run_command(const std::string& command, const Json& request) {
  if (!request.is_object()) fail(ErrorKind::InvalidInput, "request must be a JSON object");
  if (command == "orbit") return orbit_command(request);
  if (command == "toric") return toric_command(request);
  if (command == "ring") return ring_command(request);
  if (command == "bound") return bound_command(request);
  if (command == "ls") return ls_command(request);
  if (command == "novikov") return novikov_command(request);
  if (command == "selfcheck") return selfcheck_command();
  fail(ErrorKind::InvalidInput, "unknown command '" + command + "'");
}

}  // namespace hamfix
