#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hatilt/cluster_model.hpp"
#include "hatilt/errors.hpp"
#include "hatilt/homological.hpp"
#include "hatilt/pathcomb.hpp"
#include "hatilt/presentation.hpp"
#include "hatilt/typea.hpp"
#include "hatilt/verify.hpp"
#include "json.hpp"

using namespace hatilt;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, claim_failure = 1, usage = 2, budget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Optional on-disk cache rooted at HA_CACHE_DIR. Missing or unreadable entries are recomputed.
class Cache {
 public:
  Cache() {
    if (const char* dir = std::getenv("HA_CACHE_DIR"); dir && *dir) root_ = std::filesystem::path(dir) / tool_version();
  }

  std::optional<std::string> get(const std::string& key) const {
    if (!root_) return std::nullopt;
    std::ifstream in(*root_ / key, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  void put(const std::string& key, const std::string& value) const {
    if (!root_) return;
    std::error_code ec;
    std::filesystem::create_directories(*root_, ec);
    if (ec) return;
    const auto tmp = *root_ / (key + ".tmp");
    {
      std::ofstream out(tmp, std::ios::binary);
      out << value;
      if (!out) return;
    }
    std::filesystem::rename(tmp, *root_ / key, ec);
  }

 private:
  std::optional<std::filesystem::path> root_;
};

void require_positive(int d, int n) {
  if (d < 1 || n < 1) throw UsageError("--d and --n must be positive");
}

// ---- paths ----

struct PathsArgs {
  int d = 0, n = 0;
  bool dyck = false, orbits = false;
  std::string format = "csv";
};

std::string coord_string(const LatticePath& p) {
  const OrderedSeq x = coords(p);
  std::string s;
  for (int v : x.entries()) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

json path_json(const LatticePath& p) { return {{"d", p.d()}, {"n", p.n()}, {"steps", p.steps()}}; }

int cmd_paths(const PathsArgs& a) {
  require_positive(a.d, a.n);
  if ((a.dyck || a.orbits) && gcd_int(a.d, a.n) != 1)
    throw UsageError("Dyck paths and orbit representatives need gcd(d, n) = 1");
  std::vector<std::vector<LatticePath>> groups;
  if (a.orbits) {
    for (const auto& rep : enumerate_dyck(a.d, a.n)) {
      std::vector<LatticePath> orbit;
      LatticePath q = rep;
      do {
        orbit.push_back(q);
        q = rotate(q);
      } while (q != rep);
      groups.push_back(std::move(orbit));
    }
  } else {
    groups.push_back(a.dyck ? enumerate_dyck(a.d, a.n) : enumerate_paths(a.d, a.n));
  }

  if (a.format == "json") {
    json out{{"schema", 1}};
    if (a.orbits) {
      json os = json::array();
      for (const auto& g : groups) {
        json o = json::array();
        for (const auto& p : g) o.push_back(path_json(p));
        os.push_back(o);
      }
      out["orbits"] = os;
    } else {
      json ps = json::array();
      for (const auto& p : groups[0]) ps.push_back(path_json(p));
      out["paths"] = ps;
    }
    std::cout << out.dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << (a.orbits ? "orbit," : "") << "d,n,steps,coords,dyck\n";
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (const auto& p : groups[g]) {
        if (a.orbits) std::cout << g << ",";
        std::cout << p.d() << "," << p.n() << "," << p.steps() << "," << coord_string(p) << ","
                  << (gcd_int(a.d, a.n) == 1 && is_dyck(p) ? 1 : 0) << "\n";
      }
  } else {
    std::cout << "digraph paths {\n";
    for (const auto& g : groups)
      for (const auto& p : g) {
        std::cout << "  \"" << p.steps() << "\"";
        if (gcd_int(a.d, a.n) == 1 && is_dyck(p)) std::cout << " [shape=box]";
        std::cout << ";\n";
      }
    for (const auto& g : groups)
      for (const auto& p : g) std::cout << "  \"" << p.steps() << "\" -> \"" << rotate(p).steps() << "\";\n";
    std::cout << "}\n";
  }
  return ok;
}

// ---- quiver ----

struct QuiverArgs {
  int d = 0, n = 0, r = 1;
  std::string algebra = "A";
  std::string format = "json";
};

struct QuiverData {
  Quiver quiver;
  std::vector<Relation> relations;
};

QuiverData quiver_data(const QuiverArgs& a) {
  if (a.algebra == "A") {
    const auto bqa = build_auslander_algebra(a.n + 1, a.d);
    return {bqa.quiver(), bqa.relations()};
  }
  if (gcd_int(a.d, a.n) != 1) throw PreconditionError("gcd(d, n) must be 1 for the tilting construction");
  const TypeAModel model(a.d, a.n);
  const FDAlgebra b0 = model.b0();
  FDAlgebra alg = b0;
  if (a.algebra == "B") alg = build_B(b0, a.d, a.n);
  else if (a.algebra == "Lambda") alg = build_Lambda(b0, a.d, a.n);
  else if (a.algebra == "Pi") alg = build_Pi(b0, a.d, a.n);
  else if (a.algebra == "Tr") alg = trivial_ext_r(b0, a.r);
  auto pr = presentation(alg);
  return {std::move(pr.quiver), std::move(pr.relations)};
}

std::string relation_text(const Quiver& q, const Relation& rel) {
  std::string s;
  for (const auto& t : rel.terms) {
    std::string c = t.coeff.to_string();
    const bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    if (c != "1") s += c + "*";
    s += path_label(q, t.path);
  }
  return s;
}

std::string render_quiver(const QuiverData& qd, const std::string& format) {
  const Quiver& q = qd.quiver;
  std::ostringstream os;
  if (format == "json") {
    json vs = json::array(), as = json::array(), rs = json::array();
    for (int v = 0; v < q.num_vertices(); ++v) vs.push_back({{"id", v}, {"label", q.vertex_label(v)}});
    for (const auto& ar : q.arrows())
      as.push_back({{"id", ar.id}, {"src", ar.src}, {"tgt", ar.tgt}, {"label", ar.label}});
    for (const auto& rel : qd.relations) {
      json terms = json::array();
      for (const auto& t : rel.terms) terms.push_back({{"coeff", t.coeff.to_string()}, {"path", t.path}});
      rs.push_back(terms);
    }
    const json out{{"schema", 1}, {"vertices", vs}, {"arrows", as}, {"relations", rs}};
    os << out.dump(2) << "\n";
  } else if (format == "dot") {
    os << "digraph quiver {\n";
    for (int v = 0; v < q.num_vertices(); ++v) os << "  v" << v << " [label=\"" << q.vertex_label(v) << "\"];\n";
    for (const auto& ar : q.arrows())
      os << "  v" << ar.src << " -> v" << ar.tgt << " [label=\"" << ar.label << "\"];\n";
    for (const auto& rel : qd.relations) os << "  // relation: " << relation_text(q, rel) << "\n";
    os << "}\n";
  } else {
    os << "\\begin{tabular}{rl}\n\\hline\nvertex & label \\\\\n\\hline\n";
    for (int v = 0; v < q.num_vertices(); ++v) os << v << " & \\texttt{" << q.vertex_label(v) << "} \\\\\n";
    os << "\\hline\n\\end{tabular}\n\n\\begin{tabular}{rrrl}\n\\hline\narrow & source & target & label \\\\\n\\hline\n";
    for (const auto& ar : q.arrows())
      os << ar.id << " & " << ar.src << " & " << ar.tgt << " & \\texttt{" << ar.label << "} \\\\\n";
    os << "\\hline\n\\end{tabular}\n\n\\begin{tabular}{l}\n\\hline\nrelations \\\\\n\\hline\n";
    for (const auto& rel : qd.relations) os << "\\texttt{" << relation_text(q, rel) << "} \\\\\n";
    os << "\\hline\n\\end{tabular}\n";
  }
  return os.str();
}

int cmd_quiver(const QuiverArgs& a, const Cache& cache) {
  require_positive(a.d, a.n);
  if (a.r < 1) throw UsageError("--r must be positive");
  const std::string key = "quiver_n" + std::to_string(a.n) + "_d" + std::to_string(a.d) + "_" + a.algebra +
                          (a.algebra == "Tr" ? "_r" + std::to_string(a.r) : "") + "." + a.format;
  if (auto hit = cache.get(key)) {
    std::cout << *hit;
    return ok;
  }
  const std::string text = render_quiver(quiver_data(a), a.format);
  cache.put(key, text);
  std::cout << text;
  return ok;
}

// ---- verify ----

struct VerifyArgs {
  int d = 0, n = 0;
  std::string claims = "all";
  std::string report;
  int max_len = 0;
  int search_depth = 2;
  int jobs = 1;
  bool no_timings = false;
};

json claim_json(const ClaimResult& r) {
  return {{"name", r.name}, {"status", to_string(r.status)}, {"value", r.value}, {"ms", r.ms}};
}

std::optional<ClaimResult> claim_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    ClaimResult r;
    r.name = j.at("name").get<std::string>();
    const auto s = j.at("status").get<std::string>();
    r.status = s == "pass" ? ClaimStatus::pass : s == "fail" ? ClaimStatus::fail : ClaimStatus::skipped;
    r.value = j.at("value").get<std::string>();
    r.ms = j.at("ms").get<long long>();
    return r;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

int cmd_verify(const VerifyArgs& a, const Cache& cache) {
  require_positive(a.d, a.n);
  if (gcd_int(a.d, a.n) != 1) throw UsageError("gcd(d, n) must be 1");
  if (a.jobs < 1) throw UsageError("--jobs must be positive");
  std::vector<std::string> names;
  try {
    names = parse_claims(a.claims);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  VerifyConfig cfg;
  cfg.d = a.d;
  cfg.n = a.n;
  cfg.max_len = a.max_len;
  cfg.search_depth = a.search_depth;

  auto key_of = [&](const std::string& name) {
    return "claim_n" + std::to_string(a.n) + "_d" + std::to_string(a.d) + "_L" +
           std::to_string(cfg.effective_max_len()) + "_s" + std::to_string(cfg.search_depth) + "_" + name + ".json";
  };
  auto run_one = [&](const std::string& name) {
    if (auto hit = cache.get(key_of(name)))
      if (auto r = claim_from_json(*hit); r && r->name == name) return *r;
    ClaimResult r = run_claim(name, cfg);
    // skipped results depend on the budget only, which is part of the key
    cache.put(key_of(name), claim_json(r).dump());
    return r;
  };

  std::vector<ClaimResult> results(names.size());
  for (std::size_t start = 0; start < names.size(); start += static_cast<std::size_t>(a.jobs)) {
    std::vector<std::future<ClaimResult>> batch;
    const std::size_t end = std::min(names.size(), start + static_cast<std::size_t>(a.jobs));
    for (std::size_t i = start; i < end; ++i)
      batch.push_back(std::async(a.jobs > 1 ? std::launch::async : std::launch::deferred, run_one, names[i]));
    for (std::size_t i = start; i < end; ++i) results[i] = batch[i - start].get();
  }

  json claims = json::array();
  bool failed = false, skipped = false;
  for (auto& r : results) {
    if (a.no_timings) r.ms = 0;
    failed = failed || r.status == ClaimStatus::fail;
    skipped = skipped || r.status == ClaimStatus::skipped;
    claims.push_back(claim_json(r));
    std::cout << r.name << ": " << to_string(r.status) << " (" << r.value << ")";
    if (!a.no_timings) std::cout << " " << r.ms << " ms";
    std::cout << "\n";
  }
  const json report{{"schema", 1},
                    {"version", tool_version()},
                    {"params", {{"n", a.n}, {"d", a.d}}},
                    {"config",
                     {{"claims", a.claims},
                      {"max_len", cfg.effective_max_len()},
                      {"search_depth", cfg.search_depth},
                      {"timings", !a.no_timings}}},
                    {"claims", claims}};
  if (!a.report.empty()) {
    std::ofstream out(a.report, std::ios::binary);
    out << report.dump(2) << "\n";
    if (!out) {
      std::cerr << "cannot write report to " << a.report << "\n";
      return usage;
    }
  }
  if (failed) return claim_failure;
  if (skipped) return budget;
  return ok;
}

// ---- homdim ----

struct HomdimArgs {
  int d = 0, n = 0;
  std::string from, to;
  bool linear_algebra = false;
};

struct ParsedObject {
  std::vector<int> coords;
  int shift = 0;
};

ParsedObject parse_object(const std::string& text) {
  const auto at = text.find('@');
  if (at == std::string::npos) throw UsageError("expected c1,c2,...@shift, got '" + text + "'");
  ParsedObject out;
  try {
    std::size_t used = 0;
    const std::string shift = text.substr(at + 1);
    out.shift = std::stoi(shift, &used);
    if (used != shift.size()) throw UsageError("bad shift in '" + text + "'");
    std::stringstream ss(text.substr(0, at));
    std::string item;
    while (std::getline(ss, item, ',')) {
      out.coords.push_back(std::stoi(item, &used));
      if (used != item.size()) throw UsageError("bad coordinate in '" + text + "'");
    }
  } catch (const std::logic_error&) {
    throw UsageError("malformed object '" + text + "'");
  }
  if (out.coords.empty()) throw UsageError("no coordinates in '" + text + "'");
  return out;
}

int cmd_homdim(HomdimArgs a) {
  const ParsedObject x = parse_object(a.from), y = parse_object(a.to);
  if (x.coords.size() != y.coords.size()) throw UsageError("--from and --to have different lengths");
  const int inferred_d = static_cast<int>(x.coords.size()) - 1;
  if (a.d == 0) a.d = inferred_d;
  if (a.d != inferred_d) throw UsageError("objects need d + 1 coordinates");
  if (a.n == 0) {
    int top = 0;
    for (int v : x.coords) top = std::max(top, v);
    for (int v : y.coords) top = std::max(top, v);
    a.n = std::max(1, top - a.d - 1);
  }
  require_positive(a.d, a.n);
  UObject u, v;
  try {
    u = {path_from_coords(a.d + 1, a.n, x.coords), x.shift};
    v = {path_from_coords(a.d + 1, a.n, y.coords), y.shift};
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  const int comb = hom_dim(u, v);
  if (!a.linear_algebra) {
    std::cout << comb << "\n";
    return ok;
  }
  const TypeAModel model(a.d, a.n);
  const int lin = hom_complex_dim(model.complex_of(u), model.complex_of(v), 0);
  std::cout << "combinatorial " << comb << "\nlinear-algebra " << lin << "\n";
  if (comb != lin) {
    std::cerr << "routes disagree\n";
    return claim_failure;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tilting and higher Auslander algebras of type A"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  const Cache cache;

  PathsArgs pa;
  auto* paths = app.add_subcommand("paths", "enumerate lattice paths");
  paths->add_option("--d", pa.d, "horizontal steps")->required();
  paths->add_option("--n", pa.n, "vertical steps")->required();
  paths->add_flag("--dyck", pa.dyck, "only rational Dyck paths");
  paths->add_flag("--orbits", pa.orbits, "group by rotation orbit, Dyck path first");
  paths->add_option("--format", pa.format)->check(CLI::IsMember({"json", "csv", "dot"}));

  QuiverArgs qa;
  auto* quiver = app.add_subcommand("quiver", "quiver with relations of an algebra");
  quiver->add_option("--n", qa.n)->required();
  quiver->add_option("--d", qa.d)->required();
  quiver->add_option("--algebra", qa.algebra)->check(CLI::IsMember({"A", "B", "B0", "Lambda", "Pi", "Tr"}));
  quiver->add_option("--r", qa.r, "number of copies for Tr");
  quiver->add_option("--format", qa.format)->check(CLI::IsMember({"dot", "json", "tex"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run verification claims");
  verify->add_option("--n", va.n)->required();
  verify->add_option("--d", va.d)->required();
  verify->add_option("--claims", va.claims, "comma separated claim names or 'all'");
  verify->add_option("--report", va.report, "write the JSON report here");
  verify->add_option("--max-len", va.max_len, "bound on resolution lengths (default nd + 2)");
  verify->add_option("--search-depth", va.search_depth, "depth for generation_search");
  verify->add_option("--jobs", va.jobs, "claims run concurrently");
  verify->add_flag("--no-timings", va.no_timings, "report ms as 0 for byte-identical output");
  verify->add_flag_callback("--list", [] {
    for (const auto& c : claim_names()) std::cout << c << "\n";
    throw CLI::Success();
  }, "list claim names");

  HomdimArgs ha;
  auto* homdim = app.add_subcommand("homdim", "dimension of Hom between objects c1,...,c_{d+1}@shift");
  homdim->add_option("--n", ha.n, "inferred from the coordinates when omitted");
  homdim->add_option("--d", ha.d, "inferred from the coordinates when omitted");
  homdim->add_option("--from", ha.from)->required();
  homdim->add_option("--to", ha.to)->required();
  homdim->add_flag("--linear-algebra", ha.linear_algebra, "also compute via resolutions and compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*paths) return cmd_paths(pa);
    if (*quiver) return cmd_quiver(qa, cache);
    if (*verify) return cmd_verify(va, cache);
    if (*homdim) return cmd_homdim(ha);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return budget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return claim_failure;
  }
  return usage;
}
