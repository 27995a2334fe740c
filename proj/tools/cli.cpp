#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include "jungdesing/jung.hpp"
#include "jungdesing/parse.hpp"
#include "jungdesing/puiseux.hpp"

namespace jd::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string input;
  int order = 10;
  std::string format = "text";
  bool verify = false;
  long max_precision = 0;
  std::string focus;
  std::string lattice;
};

struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::string text, line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    text += line + "\n";
  }
  return text;
}

std::set<std::string> identifiers(const std::string& text) {
  static const std::regex id("[A-Za-z][A-Za-z0-9]*");
  std::set<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), id); it != std::sregex_iterator(); ++it)
    out.insert(it->str());
  return out;
}

// base variables and the polynomial variable, in a fixed order
struct Vars {
  std::vector<std::string> base;
  std::string z;
  Tower tower;
  std::vector<std::string> all() const {
    auto v = base;
    v.push_back(z);
    return v;
  }
};

Vars detect_vars(const std::string& text) {
  auto ids = identifiers(text);
  Vars vs;
  vs.tower = ids.count("s") ? adjoin_transcendental(rational_field(), "s") : rational_field();
  ids.erase("s");
  if (ids.count("z"))
    vs.z = "z";
  else if (ids.count("w"))
    vs.z = "w";
  else
    throw std::invalid_argument("input needs a polynomial variable z or w");
  ids.erase(vs.z);
  for (const char* b : {"x1", "x2", "u", "v", "t"})
    if (ids.erase(b)) vs.base.push_back(b);
  if (!ids.empty()) throw std::invalid_argument("unknown variable " + *ids.begin());
  if (vs.base.empty()) vs.base.push_back(vs.z == "z" ? "x1" : "u");
  if (vs.base.size() > 2) throw std::invalid_argument("at most two base variables are supported");
  return vs;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int do_param(const Options& o, std::ostream& out) {
  std::string text = read_input(o.input);
  Vars vs = detect_vars(text);
  ZPoly f = ZPoly::from_mpoly(parse_poly(text, vs.all(), vs.tower));
  ParamSet ps = param(f);
  Q bound(o.order);
  std::string zname = vs.z;

  if (o.format == "json") {
    json j;
    j["polynomial"] = f.str(vs.base, zname);
    j["order"] = o.order;
    j["degree"] = f.degree();
    j["parametrizations"] = json::array();
    for (size_t i = 0; i < ps.params.size(); ++i) {
      const auto& p = ps.params[i];
      json sig = json::array();
      for (const auto& v : p.sigma.values()) sig.push_back(fld::str(*p.sigma.tower(), v));
      j["parametrizations"].push_back({{"field_tower", tower_json(p.tower)},
                                       {"lattice", p.lattice.str()},
                                       {"sigma", sig},
                                       {"alpha", p.alpha.str(bound, vs.base)},
                                       {"field_degree", ps.field_degrees[i]},
                                       {"lattice_index", ps.lattice_indices[i]}});
    }
    emit(out, j);
  } else {
    out << "f = " << f.str(vs.base, zname) << "\n";
    for (size_t i = 0; i < ps.params.size(); ++i) {
      const auto& p = ps.params[i];
      out << "parametrization " << i + 1 << "\n";
      out << "  tower: " << tower_str(p.tower) << "\n";
      out << "  lattice: " << p.lattice.str() << "\n";
      out << "  sigma: " << p.sigma.str(vs.base) << "\n";
      out << "  alpha: " << p.alpha.str(bound, vs.base) << "\n";
      out << "  field degree " << ps.field_degrees[i] << ", lattice index " << ps.lattice_indices[i] << "\n";
    }
    out << "degree identity: " << ps.total() << " = " << f.degree() << "\n";
  }
  if (o.verify) {
    ParamReport rep = verify_param_set(ps, bound);
    if (!rep.ok) throw VerifyFailure(rep.message);
  }
  return kOk;
}

std::pair<std::string, std::string> split_spec(const std::string& text) {
  std::string poly, initial;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) throw std::invalid_argument("expected key: value, got " + line);
      continue;
    }
    std::string key = line.substr(0, colon);
    key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
    if (key == "poly")
      poly = line.substr(colon + 1);
    else if (key == "initial")
      initial = line.substr(colon + 1);
    else
      throw std::invalid_argument("unknown key " + key);
  }
  if (poly.empty()) throw std::invalid_argument("expand input needs a poly: line");
  if (initial.empty()) initial = "0";
  return {poly, initial};
}

void print_series(const Options& o, std::ostream& out, const Series& a, const std::vector<std::string>& names) {
  std::string s = a.str(Q(o.order), names);
  if (o.format == "json")
    emit(out, {{"series", s}, {"order", o.order}, {"field_tower", tower_json(a.tower())}});
  else
    out << s << "\n";
}

int do_expand(const Options& o, std::ostream& out) {
  auto [poly, initial] = split_spec(read_input(o.input));
  Vars vs = detect_vars(poly);
  ZPoly f = ZPoly::from_mpoly(parse_poly(poly, vs.all(), vs.tower));
  FracPoly a0 = parse_fracpoly(initial, vs.base, vs.tower);
  print_series(o, out, series_new(a0, f), vs.base);
  return kOk;
}

int do_implicit(const Options& o, std::ostream& out) {
  std::string text = read_input(o.input);
  Vars vs = detect_vars(text);
  ZPoly g = ZPoly::from_mpoly(parse_poly(text, vs.all(), vs.tower));
  print_series(o, out, implicit_function(g), vs.base);
  return kOk;
}

std::string form_str(const IntVec& n) {
  std::string s = "(";
  for (size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
  return s + ")";
}

std::string st_monomial(std::int64_t a, std::int64_t b) {
  std::string s;
  auto part = [&](const char* v, std::int64_t e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e != 1) s += "^" + std::to_string(e);
  };
  part("s", a);
  part("t", b);
  return s.empty() ? "1" : s;
}

int do_toric(const Options& o, std::ostream& out) {
  Lattice g = Lattice::parse(o.lattice);
  if (g.dim() != 2) throw std::invalid_argument("toric charts need a 2-dimensional lattice");
  auto gens = dual_cone_generators(g);
  std::vector<std::pair<std::string, std::vector<std::string>>> charts;
  for (size_t i = 0; i + 2 < gens.size(); ++i) {
    std::vector<std::string> images;
    for (int k = 0; k < 2; ++k) images.push_back(st_monomial(gens[i][k], gens[i + 1][k]));
    charts.push_back({form_str(gens[i]) + "," + form_str(gens[i + 1]), images});
  }
  if (o.format == "json") {
    json j;
    j["lattice"] = g.str();
    j["generators"] = json::array();
    for (const auto& n : gens) j["generators"].push_back(n);
    j["charts"] = json::array();
    for (const auto& [forms, im] : charts) j["charts"].push_back({{"forms", forms}, {"x1", im[0]}, {"x2", im[1]}});
    emit(out, j);
  } else {
    out << "lattice: " << g.str() << "\n";
    out << "generators:";
    for (const auto& n : gens) out << " " << form_str(n);
    out << "\n";
    for (const auto& [forms, im] : charts) out << "chart " << forms << ": x1 -> " << im[0] << ", x2 -> " << im[1] << "\n";
  }
  return kOk;
}

int do_desing(const Options& o, std::ostream& out) {
  std::string text = read_input(o.input);
  auto ids = identifiers(text);
  bool global = ids.count("x0") || ids.count("x1") || ids.count("x2") || ids.count("x3");
  const std::vector<std::string> xs{"x0", "x1", "x2", "x3"}, uvw{"u", "v", "w"};
  MPoly f = parse_poly(text, global ? xs : uvw);
  std::vector<FormalPrimeDivisor> ds;
  if (global) {
    ds = desing_global(f);
  } else {
    std::vector<MPoly> focus;
    std::stringstream fs(o.focus);
    std::string g;
    while (std::getline(fs, g, ','))
      if (g.find_first_not_of(" ") != std::string::npos) focus.push_back(parse_poly(g, {"u", "v"}));
    ds = desing_local(f, focus);
  }
  Q bound(o.order);

  std::vector<std::string> failures;
  if (o.verify)
    for (size_t i = 0; i < ds.size(); ++i)
      if (!divisor_residual(f, ds[i], bound).is_zero()) failures.push_back("divisor " + std::to_string(i + 1) + " leaves a residual");

  if (o.format == "json") {
    json arr = json::array();
    for (const auto& d : ds) {
      auto inv = divisor_invariants(d);
      json images = json::object();
      for (size_t i = 0; i < d.names.size(); ++i) images[d.names[i]] = d.images[i].str(bound, {"t"});
      json orders = json::object();
      for (size_t i = 0; i < 3; ++i) orders[uvw[i]] = inv.orders[i].str();
      arr.push_back({{"chart", d.chart},
                     {"origin", d.origin},
                     {"substitution_chain", d.chain},
                     {"field_tower", tower_json(d.tower)},
                     {"images", images},
                     {"orders", orders},
                     {"degree", inv.degree},
                     {"truncation", o.order}});
    }
    emit(out, {{"divisors", arr}});
  } else {
    out << ds.size() << " divisors\n";
    for (size_t i = 0; i < ds.size(); ++i) {
      auto inv = divisor_invariants(ds[i]);
      out << "[" << i + 1 << "] " << divisor_str(ds[i], bound);
      out << "  ord_t(u,v,w) = (" << inv.orders[0].str() << "," << inv.orders[1].str() << "," << inv.orders[2].str()
          << "), [F:Q(s)] = " << inv.degree << "\n";
    }
  }
  if (!failures.empty()) {
    std::string msg;
    for (const auto& m : failures) msg += (msg.empty() ? "" : "; ") + m;
    throw VerifyFailure(msg);
  }
  return kOk;
}

void common_flags(CLI::App* sub, Options& o, bool with_input = true) {
  if (with_input) sub->add_option("--input", o.input, "input file")->required();
  sub->add_option("--order", o.order, "truncation order")->check(CLI::PositiveNumber);
  sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_flag("--verify", o.verify, "run residual and degree checks");
  sub->add_option("--max-precision", o.max_precision, "precision escalation cap")->check(CLI::PositiveNumber);
}

}  // namespace

json tower_json(const Tower& t) {
  std::vector<const TowerNode*> chain;
  for (const TowerNode* p = t.get(); p; p = p->parent.get()) chain.push_back(p);
  json out = json::array();
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const TowerNode* n = *it;
    if (n->kind == LevelKind::Rational)
      out.push_back({{"kind", "Q"}});
    else if (n->kind == LevelKind::Transcendental)
      out.push_back({{"kind", "trans"}, {"var", n->name}});
    else
      out.push_back({{"kind", "alg"}, {"var", n->name}, {"minpoly", upoly::str(*n->parent, n->minpoly, n->name)}});
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jung desingularization and quasi-ordinary Puiseux expansions", "jdesing"};
  app.require_subcommand(1);
  Options o;
  auto* desing = app.add_subcommand("desing", "formal prime divisors of a surface or chart");
  common_flags(desing, o);
  desing->add_option("--focus", o.focus, "comma-separated focus generators in u, v (local charts)");
  auto* par = app.add_subcommand("param", "rational parametrizations of a quasi-ordinary polynomial");
  common_flags(par, o);
  auto* exp = app.add_subcommand("expand", "expand the root with a given initial segment");
  common_flags(exp, o);
  auto* imp = app.add_subcommand("implicit", "implicit function of g(x, z) = 0 through the origin");
  common_flags(imp, o);
  auto* tor = app.add_subcommand("toric", "dual cone generators and chart maps of a lattice");
  common_flags(tor, o, false);
  tor->add_option("lattice", o.lattice, "basis rows, e.g. 0,1/2;1/3,1/6")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  // the cap is process-wide; put it back when the command is done
  struct CapGuard {
    Q saved = precision_cap();
    ~CapGuard() { set_precision_cap(saved); }
  } guard;
  try {
    if (o.max_precision > 0) set_precision_cap(Q(o.max_precision));
    if (*desing) return do_desing(o, out);
    if (*par) return do_param(o, out);
    if (*exp) return do_expand(o, out);
    if (*imp) return do_implicit(o, out);
    return do_toric(o, out);
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PrecisionError& e) {
    err << "precision: " << e.what() << "\n";
    return kVerifyError;
  } catch (const VerifyFailure& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerifyError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerifyError;
  }
}

}  // namespace jd::cli
