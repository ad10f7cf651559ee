// covers: command-line front end for enumeration, counting, sweeps and checks.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ellcover/acceptance.hpp"
#include "ellcover/cache.hpp"
#include "ellcover/char_counts.hpp"
#include "ellcover/closed_forms.hpp"
#include "ellcover/geometry.hpp"
#include "ellcover/monodromy.hpp"
#include "ellcover/origami.hpp"

using namespace ellcover;
using nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kInvalid = 2, kCapacity = 3, kCorrupt = 4 };

struct Opts {
  int d = 0;
  std::string d_range;
  bool primes_only = false;
  std::string sigma;
  int genus = -1;
  std::string method;
  std::string format = "table";
  std::string cache_dir;
  int jobs = 0;
  bool primitive = false;
  bool mark_weierstrass = false;
  std::string family;
  std::string primes;
  std::string output;
  int bound = kDefaultBruteBound;
  std::string criterion;
  std::string alpha, beta;
  int index = 0;
};

// ---------------------------------------------------------------------------
// Reports

struct Report {
  ordered_json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;  // table format only
  bool ok = true;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string format_report(const Report& r, const std::string& fmt) {
  std::ostringstream os;
  if (fmt == "json") {
    os << r.doc.dump(2) << "\n";
  } else if (fmt == "csv") {
    for (std::size_t i = 0; i < r.header.size(); ++i) os << (i ? "," : "") << csv_field(r.header[i]);
    os << "\n";
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
      os << "\n";
    }
  } else {
    std::vector<std::size_t> width(r.header.size(), 0);
    for (std::size_t i = 0; i < r.header.size(); ++i) width[i] = r.header[i].size();
    for (const auto& row : r.rows)
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      std::string s;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        s += cells[i];
        if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
      }
      os << s << "\n";
    };
    if (!r.header.empty()) {
      line(r.header);
      std::vector<std::string> rule;
      for (std::size_t w : width) rule.push_back(std::string(w, '-'));
      line(rule);
    }
    for (const auto& row : r.rows) line(row);
    for (const auto& n : r.notes) os << n << "\n";
  }
  return os.str();
}

void emit(const std::string& text, const Opts& o) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + o.output);
  out << text;
}

void check_format(const std::string& fmt) {
  if (fmt != "json" && fmt != "csv" && fmt != "table")
    throw InvalidInput("unknown format '" + fmt + "' (expected json, csv or table)");
}

// ---------------------------------------------------------------------------
// Option resolution

std::string jstr(const BigInt& z) { return z.get_str(); }
ordered_json jint(const BigInt& z) { return z.fits_slong_p() ? ordered_json(z.get_si()) : ordered_json(z.get_str()); }
ordered_json jrat(const std::optional<Rational>& q) { return q ? ordered_json(to_string(*q)) : ordered_json(); }
std::string srat(const std::optional<Rational>& q) { return q ? to_string(*q) : ""; }

std::optional<Family> family_opt(const Opts& o) {
  if (o.family.empty()) return std::nullopt;
  return parse_family(o.family);
}

std::string sigma_text(const Opts& o) {
  if (!o.sigma.empty()) return o.sigma;
  if (auto f = family_opt(o)) return family_sigma(*f);
  throw InvalidInput("--sigma or --family is required");
}

std::vector<int> degrees(const Opts& o) {
  std::vector<int> out;
  if (!o.d_range.empty()) {
    const auto dots = o.d_range.find("..");
    if (dots == std::string::npos) throw InvalidInput("--d-range expects a..b, got '" + o.d_range + "'");
    int lo = 0, hi = 0;
    try {
      lo = std::stoi(o.d_range.substr(0, dots));
      hi = std::stoi(o.d_range.substr(dots + 2));
    } catch (const std::exception&) {
      throw InvalidInput("--d-range expects integers a..b, got '" + o.d_range + "'");
    }
    if (lo < 1 || hi < lo) throw InvalidInput("--d-range needs 1 <= a <= b");
    for (int d = lo; d <= hi; ++d) out.push_back(d);
  } else if (o.d > 0) {
    out.push_back(o.d);
  } else {
    throw InvalidInput("--d or --d-range is required");
  }
  if (o.primes_only) std::erase_if(out, [](int d) { return !is_prime(d); });
  // A range starts at the smallest degree the profile fits in.
  if (!o.d_range.empty() && (!o.sigma.empty() || !o.family.empty())) {
    const int least = RamificationProfile::parse(sigma_text(o), kMaxDegree).type().nontrivial().degree();
    std::erase_if(out, [least](int d) { return d < least; });
  }
  if (out.empty()) throw InvalidInput("no degrees selected");
  return out;
}

RamificationProfile profile(const Opts& o, int d) {
  const auto sigma = RamificationProfile::parse(sigma_text(o), d);
  if (!sigma.parity_ok())
    throw InvalidInput("sigma=(" + sigma.to_string() + ") has odd total ramification; no covers exist");
  if (o.genus >= 0 && sigma.genus() != o.genus)
    throw InvalidInput("sigma=(" + sigma.to_string() + ") gives genus " + std::to_string(sigma.genus()) +
                       ", not " + std::to_string(o.genus));
  return sigma;
}

EnumerateOptions enum_opts(const Opts& o, int jobs_override = -1) {
  EnumerateOptions e;
  e.bound = o.bound;
  e.jobs = jobs_override >= 0 ? jobs_override : o.jobs;
  return e;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void estimate_note(int d, const Opts& o) {
  if (d < 9 || d > o.bound) return;
  // Calibrated on d = 9: about 4e-9 s per (alpha, beta type, point) step on one core.
  const double steps = static_cast<double>(factorial(d)) * static_cast<double>(partitions(d).size()) * d;
  const unsigned cores = o.jobs > 0 ? static_cast<unsigned>(o.jobs) : std::max(1u, std::thread::hardware_concurrency());
  const double seconds = steps * 4e-9 / cores;
  std::cerr << "note: brute-force enumeration at d=" << d << " is estimated at " << std::fixed
            << std::setprecision(1) << seconds << " s on " << cores << " thread(s)\n";
}

std::unique_ptr<ResultCache> open_cache(const Opts& o) {
  if (o.cache_dir.empty()) return nullptr;
  return std::make_unique<ResultCache>(o.cache_dir);
}

std::string method_or(const Opts& o, const std::string& fallback) {
  const std::string m = o.method.empty() ? fallback : o.method;
  if (m != "brute" && m != "burnside" && m != "formula")
    throw InvalidInput("unknown method '" + m + "' (expected brute, burnside or formula)");
  return m;
}

Family formula_family(const RamificationProfile& sigma, int d) {
  const auto f = family_for(sigma);
  if (!f) throw InvalidInput("no closed formulas for sigma=(" + sigma.to_string() + ")");
  if (!is_prime(d)) throw InvalidInput("formula method needs prime d (got " + std::to_string(d) + ")");
  return *f;
}

ClassTable classes(const Opts& o, int d) {
  const auto sigma = profile(o, d);
  estimate_note(d, o);
  return enumerate_classes(sigma, enum_opts(o));
}

// ---------------------------------------------------------------------------
// Counting

CountsTable formula_counts(int d, const RamificationProfile& sigma) {
  const Family f = formula_family(sigma, d);
  CountsTable ct;
  ct.d = d;
  ct.sigma = sigma;
  for_each_classified_type(d, f, [&](const TypeShape& t, const BigInt& n) {
    if (n != 0) ct.types.push_back({t.to_cycle_type(), n, t.weight()});
  });
  std::sort(ct.types.begin(), ct.types.end(), [](const TypeCount& a, const TypeCount& b) { return a.type > b.type; });
  for (const auto& tc : ct.types) {
    ct.N += tc.n;
    ct.M += tc.weight * tc.n;
  }
  ct.M.canonicalize();
  return ct;
}

ordered_json counts_doc(const Opts& o, int d, const std::string& method, ResultCache* cache) {
  const auto sigma = profile(o, d);
  return cached(cache, {"counts-" + method, d, sigma.to_string()}, [&] {
    CountsTable ct;
    if (method == "formula") {
      ct = formula_counts(d, sigma);
    } else {
      if (method == "brute") estimate_note(d, o);
      ct = count_table(sigma, method == "brute" ? CountMethod::Brute : CountMethod::BurnsidePrime, enum_opts(o));
    }
    auto doc = ct.to_json();
    doc["slope"] = jrat(slope(ct).slope);
    doc["method"] = method;
    return doc;
  });
}

Report cmd_counts(const Opts& o) {
  const auto method = method_or(o, "brute");
  auto cache = open_cache(o);
  Report r;
  r.header = {"d", "sigma", "beta_type", "n", "weight"};
  auto docs = ordered_json::array();
  for (int d : degrees(o)) {
    const auto doc = counts_doc(o, d, method, cache.get());
    const auto ct = CountsTable::from_json(nlohmann::json::parse(doc.dump()));
    for (const auto& tc : ct.types)
      r.rows.push_back({std::to_string(d), ct.sigma.to_string(), tc.type.to_string(), jstr(tc.n), to_string(tc.weight)});
    r.notes.push_back("d=" + std::to_string(d) + " N=" + jstr(ct.N) + " M=" + to_string(ct.M) +
                      " slope=" + (doc["slope"].is_null() ? "none" : doc["slope"].get<std::string>()));
    docs.push_back(doc);
  }
  r.doc = docs.size() == 1 ? docs[0] : docs;
  return r;
}

Report cmd_slope(const Opts& o) {
  auto cache = open_cache(o);
  Report r;
  r.header = {"d", "sigma", "N", "M", "slope", "delta", "kappa", "lambda"};
  auto docs = ordered_json::array();
  for (int d : degrees(o)) {
    const auto sigma = profile(o, d);
    const std::string method = method_or(o, family_for(sigma) && is_prime(d) && d > kDefaultBruteBound ? "formula" : "brute");
    const auto counts = CountsTable::from_json(nlohmann::json::parse(counts_doc(o, d, method, cache.get()).dump()));
    const auto s = slope(counts);
    auto doc = slope_json(s);
    ordered_json row;
    row["d"] = d;
    row["sigma"] = sigma.parts();
    row["method"] = method;
    row.update(doc);
    docs.push_back(row);
    r.rows.push_back({std::to_string(d), sigma.to_string(), jstr(s.N), to_string(s.M), srat(s.slope),
                      to_string(s.delta), to_string(s.kappa), to_string(s.lambda)});
  }
  r.doc = docs.size() == 1 ? docs[0] : docs;
  return r;
}

// ---------------------------------------------------------------------------
// Enumeration, components, genus, orbifold

Report cmd_enumerate(const Opts& o) {
  Report r;
  r.header = {"d", "index", "alpha", "beta", "beta_type", "commutator", "group", "stabilizer", "primitive"};
  auto docs = ordered_json::array();
  for (int d : degrees(o)) {
    const auto t = classes(o, d);
    ordered_json doc;
    doc["d"] = d;
    doc["sigma"] = t.sigma().parts();
    doc["count"] = t.size();
    auto arr = ordered_json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto& c = t[i];
      if (o.primitive && !c.primitive) continue;
      ordered_json e;
      e["alpha"] = to_cycle_string(c.alpha);
      e["beta"] = to_cycle_string(c.beta);
      e["beta_type"] = c.beta_type.parts();
      e["commutator"] = to_cycle_string(c.commutator);
      e["group"] = to_string(c.group);
      e["stabilizer"] = c.stabilizer;
      e["primitive"] = c.primitive;
      arr.push_back(e);
      r.rows.push_back({std::to_string(d), std::to_string(i + 1), e["alpha"], e["beta"], c.beta_type.to_string(),
                        e["commutator"], e["group"], std::to_string(c.stabilizer), c.primitive ? "yes" : "no"});
    }
    doc["classes"] = std::move(arr);
    r.notes.push_back("d=" + std::to_string(d) + ": " + std::to_string(t.size()) + " classes");
    docs.push_back(doc);
  }
  r.doc = docs.size() == 1 ? docs[0] : docs;
  return r;
}

ordered_json components_value(const Opts& o, int d) {
  const auto t = classes(o, d);
  const auto dec = decompose(t);
  auto comps = dec.components;
  if (o.primitive) comps = primitive_components(t, comps);
  ordered_json doc;
  doc["d"] = d;
  doc["sigma"] = t.sigma().parts();
  doc["classes"] = t.size();
  doc["genus"] = t.size() ? ordered_json(genus(t, dec)) : ordered_json();
  doc["primitive_only"] = o.primitive;
  doc["primitive_components"] = primitive_components(t, dec.components).size();
  auto listed = components_json(t, comps);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    listed[i]["slope"] = jrat(component_slope(t, comps[i]).slope);
    listed[i]["genus"] = genus(t, dec, comps[i]);
  }
  doc["components"] = std::move(listed);
  auto slopes = ordered_json::array();
  for (const auto& c : doc["components"]) slopes.push_back(c["slope"]);
  doc["slopes"] = std::move(slopes);
  return doc;
}

Report cmd_components(const Opts& o) {
  auto cache = open_cache(o);
  Report r;
  r.header = {"d", "component", "size", "slope", "genus", "primitive", "group"};
  auto docs = ordered_json::array();
  for (int d : degrees(o)) {
    const auto sigma = profile(o, d);
    const auto doc = cached(cache.get(), {o.primitive ? "components-primitive" : "components", d, sigma.to_string()},
                            [&] { return components_value(o, d); });
    std::size_t k = 0;
    for (const auto& c : doc["components"])
      r.rows.push_back({std::to_string(d), std::to_string(++k), std::to_string(c["size"].get<std::size_t>()),
                        c["slope"].is_null() ? "" : c["slope"].get<std::string>(),
                        std::to_string(c["genus"].get<long>()), c["primitive"].get<bool>() ? "yes" : "no",
                        c["group"].get<std::string>()});
    r.notes.push_back("d=" + std::to_string(d) + ": " + std::to_string(doc["components"].size()) +
                      " components, slopes " + doc["slopes"].dump());
    docs.push_back(doc);
  }
  r.doc = docs.size() == 1 ? docs[0] : docs;
  return r;
}

Report cmd_genus(const Opts& o) {
  Report r;
  r.header = {"d", "sigma", "classes", "genus_orbit", "components", "printed", "derivation", "corrected", "match"};
  auto docs = ordered_json::array();
  for (int d : degrees(o)) {
    const auto sigma = profile(o, d);
    const auto fam = family_for(sigma);
    const bool closed = fam && *fam != Family::G3_5 && d >= 5 && is_prime(d);
    const std::string method = method_or(o, closed && d > o.bound ? "formula" : "brute");
    ordered_json doc;
    doc["d"] = d;
    doc["sigma"] = sigma.parts();
    std::optional<long> orbit;
    std::vector<std::string> row{std::to_string(d), sigma.to_string(), "", "", "", "", "", "", ""};
    if (method != "formula") {
      estimate_note(d, o);
      const auto t = enumerate_classes(sigma, enum_opts(o));
      doc["classes"] = t.size();
      row[2] = std::to_string(t.size());
      if (t.size()) {
        const auto dec = decompose(t);
        orbit = genus(t, dec);
        doc["genus_orbit"] = *orbit;
        doc["components"] = dec.components.size();
        row[3] = std::to_string(*orbit);
        row[4] = std::to_string(dec.components.size());
      }
    }
    if (closed) {
      const auto g = genus_closed(d, *fam, orbit);
      ordered_json c;
      c["printed"] = jint(g.printed);
      c["derivation"] = jint(g.derivation);
      c["corrected"] = jint(g.corrected);
      c["gcd_sum"] = jint(g.gcd_sum);
      if (orbit) c["printed_matches_orbit"] = g.printed_matches();
      if (orbit) c["corrected_matches_orbit"] = g.corrected == *orbit;
      doc["closed"] = std::move(c);
      row[5] = jstr(g.printed);
      row[6] = jstr(g.derivation);
      row[7] = jstr(g.corrected);
      row[8] = orbit ? (g.printed_matches() ? "printed" : g.corrected == *orbit ? "corrected" : "none") : "";
    } else if (method == "formula") {
      throw InvalidInput("no closed genus formula for sigma=(" + sigma.to_string() + ") at d=" + std::to_string(d));
    }
    r.rows.push_back(row);
    docs.push_back(doc);
  }
  r.doc = docs.size() == 1 ? docs[0] : docs;
  return r;
}

Report cmd_orbifold(const Opts& o) {
  Report r;
  r.header = {"d", "sigma", "genus", "chi", "order", "points_per_fiber"};
  auto docs = ordered_json::array();
  for (int d : degrees(o)) {
    const auto t = classes(o, d);
    if (t.size() == 0) throw InvalidInput("no covers for sigma=(" + t.sigma().to_string() + ") at d=" + std::to_string(d));
    const auto dec = decompose(t);
    auto doc = invariant_report(t, dec);
    ordered_json head;
    head["d"] = d;
    head["sigma"] = t.sigma().parts();
    head.update(doc);
    const auto ci = curve_invariants(t, dec);
    if (ci.orbifold_points.empty())
      r.rows.push_back({std::to_string(d), t.sigma().to_string(), std::to_string(ci.genus), to_string(ci.euler_orbifold), "", "0"});
    for (const auto& p : ci.orbifold_points)
      r.rows.push_back({std::to_string(d), t.sigma().to_string(), std::to_string(ci.genus),
                        to_string(ci.euler_orbifold), std::to_string(p.order), std::to_string(p.count)});
    docs.push_back(head);
  }
  r.doc = docs.size() == 1 ? docs[0] : docs;
  return r;
}

// ---------------------------------------------------------------------------
// Characters and generating functions

Report cmd_characters(const Opts& o) {
  const auto ds = degrees(o);
  if (ds.size() != 1) throw InvalidInput("characters takes a single --d");
  const int d = ds.front();
  if (d > 20) throw CapacityError(d, 20);
  const auto table = CharacterTable::build(d);
  Report r;
  r.header = {"shape \\ class"};
  for (const auto& c : table.classes) r.header.push_back(c.to_string());
  auto values = ordered_json::array();
  for (std::size_t i = 0; i < table.shapes.size(); ++i) {
    std::vector<std::string> row{table.shapes[i].to_string()};
    auto jrow = ordered_json::array();
    for (std::size_t j = 0; j < table.classes.size(); ++j) {
      row.push_back(jstr(table.at(i, j)));
      jrow.push_back(jint(table.at(i, j)));
    }
    r.rows.push_back(row);
    values.push_back(jrow);
  }
  auto shapes = ordered_json::array(), cls = ordered_json::array(), degs = ordered_json::array();
  for (const auto& s : table.shapes) shapes.push_back(s.parts());
  for (const auto& c : table.classes) cls.push_back(c.parts());
  for (const auto& g : table.degrees) degs.push_back(jint(g));
  r.doc = {{"d", d}, {"shapes", shapes}, {"classes", cls}, {"degrees", degs}, {"values", values}};
  return r;
}

Report cmd_genfun_check(const Opts& o) {
  const int dmax = o.d > 0 ? o.d : 6;
  if (dmax > o.bound) throw CapacityError(dmax, o.bound);
  Report r;
  r.header = {"check", "result", "detail"};
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    r.rows.push_back({name, ok ? "PASS" : "FAIL", detail});
    r.doc[name] = {{"pass", ok}, {"detail", detail}};
    r.ok = r.ok && ok;
  };
  long cells = 0, agree = 0;
  const int direct_max = std::min(dmax, kDirectPairBound - 1);
  for (int d = 1; d <= direct_max; ++d) {
    const auto direct = disconnected_counts_direct(d);
    const auto table = CharacterTable::build(d);
    for (const auto& p : partitions(d))
      for (int k : {0, 2}) {
        const BigInt chars = 2 * k <= d ? disconnected_count(table, k, p) : BigInt(0);
        const auto it = direct.find({p, k});
        ++cells;
        if (chars == (it == direct.end() ? BigInt(0) : it->second)) ++agree;
      }
  }
  add("characters_vs_direct", agree == cells,
      std::to_string(agree) + "/" + std::to_string(cells) + " cells, d <= " + std::to_string(direct_max) + ", k in {0,2}");
  const auto gf = build_generating_functions(dmax, enum_opts(o));
  add("exp_relation", exp_minus_one(gf.connected) == gf.disconnected,
      "exp(connected) - 1 = disconnected through degree " + std::to_string(dmax));
  add("log_inversion", connected_from_disconnected(gf.disconnected) == gf.connected,
      "log(1 + disconnected) = connected through degree " + std::to_string(dmax));
  if (o.format == "json") r.doc["disconnected"] = gf.disconnected.to_json(), r.doc["connected"] = gf.connected.to_json();
  return r;
}

// ---------------------------------------------------------------------------
// Verification

std::vector<long> prime_list(const Opts& o) {
  std::vector<long> out;
  std::stringstream ss(o.primes.empty() ? std::string("5,7") : o.primes);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      out.push_back(std::stol(tok));
    } catch (const std::exception&) {
      throw InvalidInput("--primes expects a comma-separated list, got '" + o.primes + "'");
    }
    if (!is_prime(out.back())) throw InvalidInput(tok + " is not prime");
  }
  return out;
}

Report cmd_verify(const Opts& o) {
  Report r;
  r.header = {"check", "result", "detail"};
  r.doc = ordered_json::array();
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    r.rows.push_back({name, ok ? "PASS" : "FAIL", detail});
    r.doc.push_back({{"check", name}, {"pass", ok}, {"detail", detail}});
    r.ok = r.ok && ok;
  };
  if (!o.criterion.empty()) {
    std::vector<int> ids;
    if (o.criterion == "all")
      for (int i = 1; i <= kCriteriaCount; ++i) ids.push_back(i);
    else
      try {
        ids.push_back(std::stoi(o.criterion));
      } catch (const std::exception&) {
        throw InvalidInput("--criterion expects 1.." + std::to_string(kCriteriaCount) + " or all");
      }
    for (int id : ids) {
      const auto res = run_criterion(id, enum_opts(o));
      add("criterion " + std::to_string(id), res.pass, res.title);
      r.doc.back()["seconds"] = res.seconds;
      r.doc.back()["lines"] = res.detail;
      for (const auto& line : res.detail) r.notes.push_back("  criterion " + std::to_string(id) + ": " + line);
    }
    return r;
  }
  const auto fam = family_opt(o);
  if (!fam) throw InvalidInput("verify needs --family or --criterion");
  for (long p : prime_list(o)) {
    const int d = static_cast<int>(p);
    const auto sigma = RamificationProfile::parse(family_sigma(*fam), d);
    estimate_note(d, o);
    const auto brute = count_table(sigma, CountMethod::Brute, enum_opts(o));
    const std::string tag = to_string(*fam) + " d=" + std::to_string(d);
    const auto assembled = assemble_counts(d, *fam);
    if (*fam != Family::G3_5) {
      const auto [N, M] = closed_N_M(d, *fam);
      add(tag + " N closed form", brute.N == N, "brute " + jstr(brute.N) + ", closed " + jstr(N));
      add(tag + " M closed form", brute.M == M, "brute " + to_string(brute.M) + ", closed " + to_string(M));
    }
    add(tag + " assembled N, M", assembled.N == brute.N && assembled.M == brute.M,
        "assembled " + jstr(assembled.N) + ", " + to_string(assembled.M));
    long types = 0, agree = 0;
    std::string bad;
    for (const auto& t : partitions(d)) {
      BigInt f = 0;
      try {
        f = per_type_N(d, *fam, t);
      } catch (const UnclassifiedType&) {
      }
      ++types;
      if (brute.count_for(t).value_or(BigInt(0)) == f) ++agree;
      else bad += " " + t.to_string();
    }
    add(tag + " per-type table", agree == types,
        std::to_string(agree) + "/" + std::to_string(types) + " beta types" + (bad.empty() ? "" : ", differ:" + bad));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sweep

ordered_json sweep_row(const Opts& o, int d, const RamificationProfile& sigma, const std::string& method,
                       std::optional<Family> fam) {
  ordered_json row;
  row["d"] = d;
  row["family"] = fam ? to_string(*fam) : sigma.to_string();
  BigInt N;
  Rational M;
  std::optional<Rational> s;
  if (method == "formula") {
    const auto sr = slope_row(d, formula_family(sigma, d));
    N = sr.N, M = sr.M, s = sr.slope;
  } else {
    const auto ct = count_table(sigma, method == "brute" ? CountMethod::Brute : CountMethod::BurnsidePrime,
                                enum_opts(o, 1));
    N = ct.N, M = ct.M, s = slope(ct).slope;
  }
  row["N"] = jint(N);
  row["M"] = to_string(M);
  row["slope_num"] = s ? ordered_json(s->get_num().get_str()) : ordered_json("");
  row["slope_den"] = s ? ordered_json(s->get_den().get_str()) : ordered_json("");
  std::optional<long> orbit;
  if (d <= o.bound && N > 0) {
    const auto t = enumerate_classes(sigma, enum_opts(o, 1));
    orbit = genus(t, decompose(t));
  }
  const bool closed = fam && *fam != Family::G3_5 && d >= 5 && is_prime(d);
  std::optional<GenusClosed> g;
  if (closed) g = genus_closed(d, *fam, orbit);
  if (!orbit && g) row["genus_orbit"] = jint(g->corrected);
  else row["genus_orbit"] = orbit ? ordered_json(*orbit) : ordered_json("");
  row["genus_printed"] = g ? jint(g->printed) : ordered_json("");
  if (g) {
    const BigInt reference = orbit ? BigInt(*orbit) : g->corrected;
    row["match"] = g->printed == reference;
  } else {
    row["match"] = "";
  }
  return row;
}

std::string cell(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

Report cmd_sweep(const Opts& o) {
  const auto ds = degrees(o);
  const auto fam = family_opt(o);
  std::vector<RamificationProfile> sigmas;
  for (int d : ds) sigmas.push_back(profile(o, d));
  const bool all_prime = std::all_of(ds.begin(), ds.end(), [](int d) { return is_prime(d); });
  const std::string method = method_or(o, fam && all_prime ? "formula" : "brute");
  if (method == "formula" && !all_prime)
    throw InvalidInput("formula sweeps need prime degrees; add --primes-only or use --method brute");
  if (method != "formula")
    for (int d : ds)
      if (d > o.bound) throw CapacityError(d, o.bound);
  if (method != "formula") estimate_note(ds.back(), o);

  auto cache = open_cache(o);
  std::vector<ordered_json> rows(ds.size());
  std::vector<std::exception_ptr> errors(ds.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(o.jobs > 0 ? static_cast<unsigned>(o.jobs)
                                                                       : std::thread::hardware_concurrency(),
                                                           static_cast<unsigned>(ds.size())));
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < ds.size();) {
      try {
        rows[i] = cached(cache.get(), {"sweep-" + method, ds[i], sigmas[i].to_string()},
                         [&] { return sweep_row(o, ds[i], sigmas[i], method, fam); });
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  Report r;
  r.header = {"d", "family", "N", "M", "slope_num", "slope_den", "genus_orbit", "genus_printed", "match"};
  r.doc = ordered_json::array();
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    for (const auto& h : r.header) cells.push_back(cell(row[h]));
    r.rows.push_back(cells);
    r.doc.push_back(row);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Origami and the genus-3 probe

SquareTiledSurface surface_from(const Opts& o) {
  if (!o.alpha.empty() || !o.beta.empty()) {
    if (o.alpha.empty() || o.beta.empty()) throw InvalidInput("--alpha and --beta go together");
    int d = o.d;
    if (d <= 0)
      for (const auto* text : {&o.alpha, &o.beta})
        for (const auto& c : parse_cycles(*text))
          for (int x : c) d = std::max(d, x);
    return SquareTiledSurface::from_pair(Permutation::parse(o.alpha, d), Permutation::parse(o.beta, d));
  }
  if (o.d <= 0 || o.index <= 0) throw InvalidInput("give --alpha/--beta, or --d, --sigma and --index");
  const auto t = classes(o, o.d);
  if (static_cast<std::size_t>(o.index) > t.size())
    throw InvalidInput("--index " + std::to_string(o.index) + " out of range (there are " + std::to_string(t.size()) +
                       " classes)");
  return SquareTiledSurface::from_class(t[static_cast<std::size_t>(o.index - 1)]);
}

Report cmd_origami_components(const Opts& o) {
  Report r;
  r.header = {"d", "component", "size", "group", "primitive", "weierstrass"};
  auto docs = ordered_json::array();
  for (int d : degrees(o)) {
    const auto t = classes(o, d);
    const auto comps = origami_components(t);
    auto arr = ordered_json::array();
    std::size_t k = 0;
    for (const auto& comp : comps) {
      const auto& c = t[comp.front()];
      std::string parity;
      try {
        parity = std::to_string(weierstrass_parity(c));
      } catch (const InvalidInput&) {
      }
      r.rows.push_back({std::to_string(d), std::to_string(++k), std::to_string(comp.size()), to_string(c.group),
                        c.primitive ? "yes" : "no", parity});
      arr.push_back({{"size", comp.size()},
                     {"group", to_string(c.group)},
                     {"primitive", c.primitive},
                     {"weierstrass", parity.empty() ? ordered_json() : ordered_json(std::stoi(parity))},
                     {"representative", pair_string(c.alpha, c.beta)}});
    }
    docs.push_back({{"d", d}, {"sigma", t.sigma().parts()}, {"components", arr}});
  }
  r.doc = docs.size() == 1 ? docs[0] : docs;
  return r;
}

Report cmd_probe_g3(const Opts& o) {
  long lo = 2, hi = 199;
  if (!o.d_range.empty()) {
    const auto ds = degrees(o);
    lo = ds.front(), hi = ds.back();
  }
  const auto p = g3_slope_probe(lo, hi);
  Report r;
  r.header = {"d", "N", "M", "slope", "slope_decimal"};
  auto rows = ordered_json::array();
  for (const auto& row : p.rows) {
    std::ostringstream dec;
    dec << std::fixed << std::setprecision(6) << row.slope->get_d();
    r.rows.push_back({std::to_string(row.d), jstr(row.N), to_string(row.M), srat(row.slope), dec.str()});
    rows.push_back({{"d", row.d}, {"N", jint(row.N)}, {"M", to_string(row.M)}, {"slope", jrat(row.slope)}});
  }
  r.notes.push_back(std::string("strictly decreasing: ") + (p.strictly_decreasing ? "yes" : "no") +
                    ", above 9: " + (p.above_nine ? "yes" : "no"));
  r.doc = {{"rows", rows}, {"strictly_decreasing", p.strictly_decreasing}, {"above_nine", p.above_nine}};
  r.ok = p.strictly_decreasing && p.above_nine;
  return r;
}

// ---------------------------------------------------------------------------

void add_degree(CLI::App* c, Opts& o, bool range = true) {
  c->add_option("--d", o.d, "Cover degree")->check(CLI::Range(1, 100000));
  if (range) {
    c->add_option("--d-range", o.d_range, "Degree range a..b");
    c->add_flag("--primes-only", o.primes_only, "Keep only prime degrees");
  }
}

void add_sigma(CLI::App* c, Opts& o) {
  c->add_option("--sigma", o.sigma, "Ramification profile, e.g. 3 or 2,2 (padded with ones)");
  c->add_option("--genus", o.genus, "Expected genus of the covering curve (checked against sigma)");
  c->add_option("--family", o.family, "g2_31, g2_22 or g3_5 (sets sigma)");
}

void add_common(CLI::App* c, Opts& o, bool with_format = true) {
  if (with_format)
    c->add_option("--format", o.format, "json, csv or table")->capture_default_str();
  c->add_option("--output", o.output, "Write to this file instead of stdout");
  c->add_option("--cache-dir", o.cache_dir, "Result cache directory")->envname("COVERS_CACHE_DIR");
  c->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)")->envname("COVERS_JOBS")->check(CLI::NonNegativeNumber);
  c->add_option("--bound", o.bound, "Largest degree for brute force")->capture_default_str()->check(CLI::Range(1, 12));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covers: degree-d covers of an elliptic curve branched over one point"};
  app.require_subcommand(1);
  Opts o;
  std::function<Report()> run;
  std::string render_format = "ascii";
  bool render = false;

  auto sub = [&](const char* name, const char* help, std::function<Report()> fn) {
    auto* c = app.add_subcommand(name, help);
    c->callback([&run, fn] { run = fn; });
    return c;
  };

  auto* en = sub("enumerate", "List cover classes", [&] { return cmd_enumerate(o); });
  add_degree(en, o), add_sigma(en, o), add_common(en, o);
  en->add_flag("--primitive", o.primitive, "Only covers not factoring through an isogeny");

  auto* co = sub("counts", "Per beta-type counts, N and M", [&] { return cmd_counts(o); });
  add_degree(co, o), add_sigma(co, o), add_common(co, o);
  co->add_option("--method", o.method, "brute, burnside or formula");

  auto* sl = sub("slope", "Slope of the family", [&] { return cmd_slope(o); });
  add_degree(sl, o), add_sigma(sl, o), add_common(sl, o);
  sl->add_option("--method", o.method, "brute, burnside or formula");

  auto* cm = sub("components", "Monodromy orbits with slopes and genera", [&] { return cmd_components(o); });
  add_degree(cm, o), add_sigma(cm, o), add_common(cm, o);
  cm->add_flag("--primitive", o.primitive, "Only components of primitive covers");

  auto* ge = sub("genus", "Genus of the family curve, with closed forms where known", [&] { return cmd_genus(o); });
  add_degree(ge, o), add_sigma(ge, o), add_common(ge, o);
  ge->add_option("--method", o.method, "brute or formula");

  auto* orb = sub("orbifold", "Orbifold points and Euler characteristic", [&] { return cmd_orbifold(o); });
  add_degree(orb, o), add_sigma(orb, o), add_common(orb, o);

  auto* ch = sub("characters", "Character table of S_d", [&] { return cmd_characters(o); });
  add_degree(ch, o, false), add_common(ch, o);

  auto* gf = sub("genfun-check", "Character sums and the exponential relation", [&] { return cmd_genfun_check(o); });
  add_degree(gf, o, false), add_common(gf, o);

  auto* ve = sub("verify", "Closed forms against brute force, or a numbered criterion", [&] { return cmd_verify(o); });
  ve->add_option("--family", o.family, "g2_31, g2_22 or g3_5");
  ve->add_option("--primes", o.primes, "Comma-separated primes (default 5,7)");
  ve->add_option("--criterion", o.criterion, "1..11 or all");
  add_common(ve, o);

  auto* sw = sub("sweep", "N, M, slope and genus over a degree range", [&] { return cmd_sweep(o); });
  add_degree(sw, o), add_sigma(sw, o), add_common(sw, o);
  sw->add_option("--method", o.method, "formula, brute or burnside");

  auto* og = app.add_subcommand("origami", "Square-tiled surfaces");
  og->require_subcommand(1);
  auto* rd = og->add_subcommand("render", "Draw a cover as a square-tiled surface");
  rd->callback([&] { render = true; });
  add_degree(rd, o, false), add_sigma(rd, o), add_common(rd, o, false);
  rd->add_option("--alpha", o.alpha, "Vertical gluing, cycle notation");
  rd->add_option("--beta", o.beta, "Horizontal gluing, cycle notation");
  rd->add_option("--index", o.index, "1-based class index from enumerate");
  rd->add_option("--format", render_format, "svg or ascii")->capture_default_str();
  rd->add_flag("--mark-weierstrass", o.mark_weierstrass, "Report integer Weierstrass points (genus 2, sigma=(3))");
  auto* oc = og->add_subcommand("components", "Orbits of U and R with the Weierstrass parity");
  oc->callback([&] { run = [&] { return cmd_origami_components(o); }; });
  add_degree(oc, o), add_sigma(oc, o), add_common(oc, o);

  auto* pg = sub("probe-g3", "Genus-3 slope table over primes", [&] { return cmd_probe_g3(o); });
  pg->add_option("--d-range", o.d_range, "Degree range a..b (default 2..199)");
  add_common(pg, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }

  try {
    if (render) {
      const auto s = surface_from(o);
      emit(ellcover::render(s, {parse_render_format(render_format), o.mark_weierstrass}), o);
      return kOk;
    }
    check_format(o.format);
    const Report r = run();
    emit(format_report(r, o.format), o);
    return r.ok ? kOk : kFailure;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const CacheCorruption& e) {
    std::cerr << "error: cache corruption: " << e.what() << "\n";
    return kCorrupt;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
