#include "iwahori/admissible.hpp"
#include "iwahori/classes.hpp"
#include "iwahori/config.hpp"
#include "iwahori/mazur.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

using namespace iwahori;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kEnumVersion = "IWENUM01";

// ---------- rendering helpers ----------

std::string word_string(const AffineWeyl& aw, const WElem& x) {
  const auto word = aw.reduced_word(x);
  std::string out;
  for (int s : word.letters) {
    if (!out.empty()) out += " ";
    if (s < aw.rank()) out += "s" + std::to_string(s + 1);
    else out += "a" + std::to_string(s - aw.rank());
  }
  if (word.omega != 0) {
    if (!out.empty()) out += " ";
    out += "w" + std::to_string(word.omega);
  }
  if (out.empty()) out = "e";
  return out;
}

ordered_json lambda_json(const IntVec& v) {
  ordered_json a = ordered_json::array();
  for (Int x : v) a.push_back(static_cast<long long>(x));
  return a;
}

std::string lambda_csv(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

ordered_json class_json(const AffineWeyl& aw, const SigmaClass& o) {
  ordered_json c;
  c["newton"] = ratvec_to_string(o.newton);
  c["kappa"] = lambda_json(o.kappa.label);
  c["min_length"] = o.min_length;
  c["straight"] = o.straight;
  ordered_json reps = ordered_json::array();
  for (const WElem& r : o.min_reps) reps.push_back(aw.describe(r));
  c["min_reps"] = std::move(reps);
  return c;
}

std::string poset_dot(const AffineWeyl& aw, const StraightPoset& p) {
  std::string out = "digraph preceq {\n";
  for (size_t i = 0; i < p.classes.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"nu=" +
           ratvec_to_string(p.classes[i].newton) + " kappa=" +
           lambda_csv(p.classes[i].kappa.label) + "\"];\n";
  for (auto [a, b] : p.hasse)
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  (void)aw;
  return out;
}

// ---------- advisory enumeration cache ----------

uint64_t fnv1a(const void* data, size_t n, uint64_t h = 14695981039346656037ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) h = (h ^ p[i]) * 1099511628211ull;
  return h;
}

std::string datum_cache_key(const RootDatum& d) {
  std::string key = d.type_string() + "/" +
                    std::to_string(static_cast<int>(d.lattice_choice()));
  for (const auto& row : d.basis_in_coweight())
    for (Int x : row) key += "," + std::to_string(x);
  return key;
}

void put_i64(std::string& buf, int64_t v) {
  for (int i = 0; i < 8; ++i) buf += static_cast<char>((v >> (8 * i)) & 0xff);
}

bool get_i64(const std::string& buf, size_t& pos, int64_t& v) {
  if (pos + 8 > buf.size()) return false;
  uint64_t u = 0;
  for (int i = 0; i < 8; ++i)
    u |= static_cast<uint64_t>(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
  v = static_cast<int64_t>(u);
  pos += 8;
  return true;
}

std::string enum_cache_path(const std::string& dir, const RootDatum& d, int bound) {
  std::string key = std::string(kEnumVersion) + "|" + datum_cache_key(d) + "|" +
                    std::to_string(bound);
  char name[32];
  std::snprintf(name, sizeof name, "%016llx",
                static_cast<unsigned long long>(fnv1a(key.data(), key.size())));
  return dir + "/" + name + ".enum";
}

bool load_enum_cache(const AffineWeyl& aw, const std::string& path, int bound) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string buf = ss.str();
  if (buf.size() < 8 || buf.compare(0, 8, kEnumVersion) != 0) return false;
  size_t pos = 8;
  int64_t rank, fbound, count, checksum;
  if (!get_i64(buf, pos, rank) || !get_i64(buf, pos, fbound) ||
      !get_i64(buf, pos, count) || !get_i64(buf, pos, checksum))
    return false;
  if (rank != aw.rank() || fbound != bound || count < 0) return false;
  if (static_cast<int64_t>(fnv1a(buf.data() + pos, buf.size() - pos)) != checksum)
    return false;
  std::vector<WElem> elems;
  for (int64_t r = 0; r < count; ++r) {
    int64_t reclen;
    if (!get_i64(buf, pos, reclen)) return false;
    if (reclen != 8 * (rank + 2)) return false;
    WElem x;
    x.lambda.resize(rank);
    int64_t v;
    for (int64_t k = 0; k < rank; ++k) {
      if (!get_i64(buf, pos, v)) return false;
      x.lambda[k] = v;
    }
    if (!get_i64(buf, pos, v)) return false;
    if (v < 0 || v >= aw.w0().size()) return false;
    x.w = static_cast<int>(v);
    if (!get_i64(buf, pos, v)) return false;
    if (aw.length(x) != v) return false;
    elems.push_back(std::move(x));
  }
  if (pos != buf.size()) return false;
  try {
    aw.preload_enumeration(bound, std::move(elems));
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

void store_enum_cache(const AffineWeyl& aw, const std::string& path, int bound) {
  const auto elems = aw.enumerate_by_length(bound);
  std::string payload;
  for (const WElem& x : elems) {
    put_i64(payload, 8 * (aw.rank() + 2));
    for (Int v : x.lambda) put_i64(payload, v);
    put_i64(payload, x.w);
    put_i64(payload, aw.length(x));
  }
  std::string buf = kEnumVersion;
  put_i64(buf, aw.rank());
  put_i64(buf, bound);
  put_i64(buf, static_cast<int64_t>(elems.size()));
  put_i64(buf, static_cast<int64_t>(fnv1a(payload.data(), payload.size())));
  buf += payload;

  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;  // cache is advisory: failure to write is not an error
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

void use_enum_cache(const AffineWeyl& aw, const std::string& dir, int bound) {
  if (dir.empty() || bound < 0) return;
  const std::string path = enum_cache_path(dir, aw.datum(), bound);
  if (load_enum_cache(aw, path, bound)) return;
  store_enum_cache(aw, path, bound);
}

// ---------- commands ----------

struct Options {
  std::string config_path;
  int length_bound = -1;  // -1: take from config
  std::string format;     // empty: take from config
  std::string cache_dir;
  int jobs = 1;
};

JobConfig load_config(const Options& opt, bool required) {
  if (opt.config_path.empty()) {
    if (required) throw std::invalid_argument("config: --config is required");
    return parse_config(R"({"datum":{"type":"A1"}})");
  }
  std::ifstream in(opt.config_path);
  if (!in) throw std::invalid_argument("config: cannot open " + opt.config_path);
  std::stringstream ss;
  ss << in.rdbuf();
  JobConfig cfg = parse_config(ss.str());
  if (opt.length_bound >= 0) cfg.length_bound = opt.length_bound;
  if (!opt.format.empty()) {
    cfg.format = opt.format;
    cfg.format_explicit = true;
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "dot")
      throw std::invalid_argument("format: must be json, csv, or dot");
  }
  return cfg;
}

int cmd_adm(const Options& opt) {
  JobConfig cfg = load_config(opt, true);
  use_enum_cache(*cfg.aw, opt.cache_dir, cfg.aw->length(cfg.aw->translation(cfg.mu)));
  AdmissibleSet adm = admissible_set_J(*cfg.aw, cfg.mu, cfg.j);
  if (cfg.format == "csv") {
    std::string out = "lambda,word,length\n";
    for (const WElem& x : adm.elements)
      out += "\"" + lambda_csv(x.lambda) + "\"," + word_string(*cfg.aw, x) + "," +
             std::to_string(cfg.aw->length(x)) + "\n";
    std::cout << out;
    return 0;
  }
  ordered_json doc;
  doc["mu"] = lambda_json(cfg.mu);
  doc["j"] = cfg.j;
  ordered_json rows = ordered_json::array();
  for (const WElem& x : adm.elements) {
    ordered_json row;
    row["lambda"] = lambda_json(x.lambda);
    row["word"] = word_string(*cfg.aw, x);
    row["length"] = cfg.aw->length(x);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  std::cout << doc.dump() << "\n";
  return 0;
}

int cmd_newton(const Options& opt) {
  JobConfig cfg = load_config(opt, true);
  use_enum_cache(*cfg.aw, opt.cache_dir, cfg.aw->length(cfg.aw->translation(cfg.mu)));
  AdmissibleSet adm = admissible_set_J(*cfg.aw, cfg.mu, cfg.j);
  if (cfg.format == "csv") {
    std::string out = "lambda,word,newton,kappa,straight\n";
    for (const WElem& x : adm.elements)
      out += "\"" + lambda_csv(x.lambda) + "\"," + word_string(*cfg.aw, x) + ",\"" +
             ratvec_to_string(newton_point(*cfg.twist, x)) + "\",\"" +
             lambda_csv(cfg.twist->kottwitz_kappa(x).label) + "\"," +
             (is_straight(*cfg.twist, x) ? "true" : "false") + "\n";
    std::cout << out;
    return 0;
  }
  ordered_json doc;
  doc["mu"] = lambda_json(cfg.mu);
  doc["j"] = cfg.j;
  ordered_json rows = ordered_json::array();
  for (const WElem& x : adm.elements) {
    ordered_json row;
    row["lambda"] = lambda_json(x.lambda);
    row["word"] = word_string(*cfg.aw, x);
    row["newton"] = ratvec_to_string(newton_point(*cfg.twist, x));
    row["kappa"] = lambda_json(cfg.twist->kottwitz_kappa(x).label);
    row["straight"] = is_straight(*cfg.twist, x);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  std::cout << doc.dump() << "\n";
  return 0;
}

int cmd_classes(const Options& opt, bool poset_only) {
  JobConfig cfg = load_config(opt, true);
  use_enum_cache(*cfg.aw, opt.cache_dir, cfg.length_bound);
  StraightPoset p = straight_poset(*cfg.twist, cfg.length_bound);
  // the poset verb renders dot by default; an explicit format wins
  const bool want_dot =
      cfg.format == "dot" || (poset_only && !cfg.format_explicit);
  if (want_dot) {
    std::cout << poset_dot(*cfg.aw, p);
    return 0;
  }
  if (cfg.format == "csv") {
    std::string out = "newton,kappa,min_length,size\n";
    for (const SigmaClass& o : p.classes)
      out += "\"" + ratvec_to_string(o.newton) + "\",\"" +
             lambda_csv(o.kappa.label) + "\"," + std::to_string(o.min_length) +
             "," + std::to_string(o.min_reps.size()) + "\n";
    std::cout << out;
    return 0;
  }
  ordered_json doc;
  doc["length_bound"] = cfg.length_bound;
  ordered_json cls = ordered_json::array();
  for (const SigmaClass& o : p.classes) cls.push_back(class_json(*cfg.aw, o));
  doc["classes"] = std::move(cls);
  ordered_json edges = ordered_json::array();
  for (auto [a, b] : p.hasse) edges.push_back(ordered_json::array({a, b}));
  doc["hasse"] = std::move(edges);
  std::cout << doc.dump() << "\n";
  return 0;
}

int cmd_bgmu(const Options& opt) {
  JobConfig cfg = load_config(opt, true);
  use_enum_cache(*cfg.aw, opt.cache_dir,
                 static_cast<int>(cfg.datum->rho_pairing(cfg.mu)));
  AcceptableSet b = b_g_mu(*cfg.twist, cfg.mu);
  ordered_json doc;
  doc["mu"] = lambda_json(cfg.mu);
  doc["mu_diamond"] = ratvec_to_string(cfg.twist->mu_diamond(cfg.mu));
  doc["mu_sharp"] = lambda_json(cfg.twist->mu_sharp(cfg.mu).label);
  doc["maximal_newton"] = ratvec_to_string(b.maximal_newton);
  ordered_json cls = ordered_json::array();
  for (const SigmaClass& o : b.classes) cls.push_back(class_json(*cfg.aw, o));
  doc["classes"] = std::move(cls);
  std::cout << doc.dump() << "\n";
  return 0;
}

// ---------- the check suite ----------

struct GridCtx {
  std::shared_ptr<RootDatum> datum;
  std::shared_ptr<AffineWeyl> aw;
  std::shared_ptr<FrobeniusTwist> twist;
};

GridCtx make_grid_ctx(const std::string& type, LatticeChoice lattice,
                      std::vector<int> sigma0, bool nontrivial_tau) {
  GridCtx g;
  std::vector<CartanComponent> comps;
  for (size_t i = 0; i < type.size();) {
    char series = type[i++];
    int rank = type[i++] - '0';
    comps.push_back({series, rank});
    if (i < type.size() && type[i] == 'x') ++i;
  }
  g.datum = std::make_shared<RootDatum>(std::move(comps), lattice);
  g.aw = std::make_shared<AffineWeyl>(*g.datum);
  WElem tau = nontrivial_tau ? g.aw->omega().at(1) : g.aw->identity_elem();
  g.twist = std::make_shared<FrobeniusTwist>(*g.aw, std::move(sigma0), tau);
  return g;
}

std::vector<IntVec> dominant_grid(const RootDatum& d) {
  std::vector<IntVec> out;
  const int n = d.rank();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    IntVec mu(n, 0);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) mu[i] = 1;
    if (d.is_dominant(mu)) out.push_back(mu);
  }
  return out;
}

std::vector<std::vector<int>> stable_finite_j(const AffineWeyl& aw,
                                              const FrobeniusTwist& tw) {
  std::vector<std::vector<int>> out;
  const int m = aw.num_simple();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> j;
    for (int s = 0; s < m; ++s)
      if (mask & (1u << s)) j.push_back(s);
    if (aw.wj_finite(j) && tw.stabilizes(j)) out.push_back(j);
  }
  return out;
}

int run_checks(const Options& opt, const std::string& which) {
  std::vector<std::function<Report()>> tasks;
  auto want = [&](const std::string& name) {
    return which == "all" || which == name;
  };

  if (!opt.config_path.empty()) {
    // one configured cell
    JobConfig cfg = load_config(opt, true);
    use_enum_cache(*cfg.aw, opt.cache_dir, cfg.length_bound);
    // keep the whole context alive in every task: the group and twist hold
    // references into the root datum
    auto ctx = std::make_shared<JobConfig>(std::move(cfg));
    IntVec mu = ctx->mu;
    std::vector<int> j = ctx->j;
    int bound = ctx->length_bound;
    if (want("add"))
      tasks.push_back([=] { return check_additivity(*ctx->aw, mu, mu); });
    if (want("comp"))
      tasks.push_back([=] { return check_compatibility(*ctx->aw, mu, j); });
    if (want("tri"))
      tasks.push_back([=] { return verify_tri_order(*ctx->twist, bound); });
    if (want("A"))
      tasks.push_back([=] { return verify_theorem_A(*ctx->twist, mu, j); });
    if (want("mazur"))
      tasks.push_back([=] { return verify_mazur_iwahori(*ctx->twist, mu); });
    if (want("p41"))
      tasks.push_back([=] { return verify_prop_4_1(*ctx->twist, mu); });
  } else {
    // the default verification matrix
    struct TwistSpec {
      std::vector<int> sigma0;
      bool tau = false;
    };
    const std::vector<std::string> types{"A1", "A2", "B2", "A1xA1"};
    for (const std::string& type : types)
      for (LatticeChoice lattice :
           {LatticeChoice::SimplyConnected, LatticeChoice::Adjoint}) {
        std::vector<TwistSpec> twists{{}};
        if (type == "A2") twists.push_back({{1, 0}, false});
        if (type == "A1" && lattice == LatticeChoice::Adjoint)
          twists.push_back({{}, true});
        for (const TwistSpec& ts : twists) {
          GridCtx g = make_grid_ctx(type, lattice, ts.sigma0, ts.tau);
          use_enum_cache(*g.aw, opt.cache_dir, 6);
          const auto mus = dominant_grid(*g.datum);
          const auto js = stable_finite_j(*g.aw, *g.twist);
          if (want("tri"))
            tasks.push_back([g] { return verify_tri_order(*g.twist, 6); });
          if (want("add") && ts.sigma0.empty() && !ts.tau)
            for (const IntVec& mu : mus)
              for (const IntVec& mu2 : mus)
                tasks.push_back(
                    [g, mu, mu2] { return check_additivity(*g.aw, mu, mu2); });
          for (const IntVec& mu : mus) {
            if (want("mazur"))
              tasks.push_back([g, mu] { return verify_mazur_iwahori(*g.twist, mu); });
            if (want("p41"))
              tasks.push_back([g, mu] { return verify_prop_4_1(*g.twist, mu); });
            for (const auto& j : js) {
              if (want("comp"))
                tasks.push_back(
                    [g, mu, j] { return check_compatibility(*g.aw, mu, j); });
              if (want("A"))
                tasks.push_back(
                    [g, mu, j] { return verify_theorem_A(*g.twist, mu, j); });
            }
          }
        }
      }
  }
  if (tasks.empty()) throw std::invalid_argument("check: nothing to run");

  std::vector<Report> reports(tasks.size());
  const int jobs = std::max(1, opt.jobs);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
      reports[i] = tasks[i]();
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  bool all_pass = true;
  std::string out = "[";
  for (size_t i = 0; i < reports.size(); ++i) {
    if (i) out += ",";
    out += report_to_json(reports[i]);
    all_pass = all_pass && reports[i].pass;
  }
  out += "]";
  std::cout << out << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of Iwahori-Weyl groups with Frobenius twist"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--config", opt.config_path, "path to a JSON job config");
  app.add_option("--length-bound", opt.length_bound, "override the length bound");
  app.add_option("--format", opt.format, "output format: json, csv, or dot");
  app.add_option("--cache-dir", opt.cache_dir, "directory for advisory caches");
  app.add_option("--jobs", opt.jobs, "parallel workers for check grids");

  auto* adm = app.add_subcommand("adm", "emit the admissible set");
  auto* classes = app.add_subcommand("classes", "straight classes and their order");
  auto* newton = app.add_subcommand("newton", "Newton data over the admissible set");
  auto* bgmu = app.add_subcommand("bgmu", "the acceptable classes of mu");
  auto* poset = app.add_subcommand("poset", "the straight-class poset");
  auto* check = app.add_subcommand("check", "run theorem checks");
  std::string which = "all";
  check->add_option("which", which, "all|A|tri|add|comp|mazur|p41")
      ->check(CLI::IsMember({"all", "A", "tri", "add", "comp", "mazur", "p41"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("IWAHORI_CACHE_DIR")) opt.cache_dir = env;

  try {
    if (adm->parsed()) return cmd_adm(opt);
    if (newton->parsed()) return cmd_newton(opt);
    if (classes->parsed()) return cmd_classes(opt, false);
    if (poset->parsed()) return cmd_classes(opt, true);
    if (bgmu->parsed()) return cmd_bgmu(opt);
    if (check->parsed()) return run_checks(opt, which);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
