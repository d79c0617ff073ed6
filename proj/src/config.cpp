#include "iwahori/config.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace iwahori {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument(path + ": " + what);
}

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "must be an object");
  return j;
}

std::string require_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "must be a string");
  return j.get<std::string>();
}

std::vector<long long> require_int_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "must be an array of integers");
  std::vector<long long> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(path, "must be an array of integers");
    out.push_back(x.get<long long>());
  }
  return out;
}

std::vector<CartanComponent> parse_type(const std::string& s,
                                        const std::string& path) {
  std::vector<CartanComponent> out;
  size_t i = 0;
  while (i < s.size()) {
    const char series = s[i++];
    if (series < 'A' || series > 'G') fail(path, "unknown series in '" + s + "'");
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail(path, "missing rank in '" + s + "'");
    out.push_back({series, std::stoi(s.substr(start, i - start))});
    if (i < s.size()) {
      if (s[i] != 'x') fail(path, "expected 'x' between components in '" + s + "'");
      ++i;
      if (i == s.size()) fail(path, "trailing 'x' in '" + s + "'");
    }
  }
  if (out.empty()) fail(path, "empty type");
  return out;
}

}  // namespace

JobConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  require_object(doc, "config");

  if (!doc.contains("datum")) fail("datum", "required");
  const json& jd = require_object(doc["datum"], "datum");
  if (!jd.contains("type")) fail("datum.type", "required");
  auto type = parse_type(require_string(jd["type"], "datum.type"), "datum.type");

  LatticeChoice choice = LatticeChoice::SimplyConnected;
  std::optional<IntMat> basis;
  if (jd.contains("lattice")) {
    const std::string lat = require_string(jd["lattice"], "datum.lattice");
    if (lat == "simply_connected") choice = LatticeChoice::SimplyConnected;
    else if (lat == "adjoint") choice = LatticeChoice::Adjoint;
    else if (lat == "intermediate") choice = LatticeChoice::Intermediate;
    else fail("datum.lattice", "unknown value '" + lat + "'");
  }
  if (choice == LatticeChoice::Intermediate) {
    if (!jd.contains("basis")) fail("datum.basis", "required for intermediate");
    if (!jd["basis"].is_array()) fail("datum.basis", "must be an array of rows");
    IntMat rows;
    for (size_t r = 0; r < jd["basis"].size(); ++r) {
      auto row = require_int_array(jd["basis"][r],
                                   "datum.basis[" + std::to_string(r) + "]");
      rows.emplace_back(row.begin(), row.end());
    }
    basis = std::move(rows);
  }

  JobConfig cfg;
  try {
    cfg.datum = std::make_shared<RootDatum>(std::move(type), choice, basis);
  } catch (const std::invalid_argument& e) {
    fail("datum", e.what());
  }
  cfg.aw = std::make_shared<AffineWeyl>(*cfg.datum);
  const int rank = cfg.datum->rank();

  std::vector<int> sigma0;
  WElem tau = cfg.aw->identity_elem();
  if (doc.contains("twist")) {
    const json& jt = require_object(doc["twist"], "twist");
    if (jt.contains("sigma0")) {
      auto raw = require_int_array(jt["sigma0"], "twist.sigma0");
      for (long long v : raw) {
        if (v < 1 || v > rank) fail("twist.sigma0", "node index out of range");
        sigma0.push_back(static_cast<int>(v) - 1);
      }
    }
    if (jt.contains("tau")) {
      const json& jtau = require_object(jt["tau"], "twist.tau");
      if (jtau.contains("lambda")) {
        auto lam = require_int_array(jtau["lambda"], "twist.tau.lambda");
        if (static_cast<int>(lam.size()) != rank)
          fail("twist.tau.lambda", "wrong dimension");
        tau = cfg.aw->mul(tau, cfg.aw->translation(IntVec(lam.begin(), lam.end())));
      }
      if (jtau.contains("w")) {
        for (long long v : require_int_array(jtau["w"], "twist.tau.w")) {
          if (v < 1 || v > rank) fail("twist.tau.w", "letter out of range");
          tau = cfg.aw->mul(tau, cfg.aw->simple(static_cast<int>(v) - 1));
        }
      }
    }
  }
  try {
    cfg.twist = std::make_shared<FrobeniusTwist>(*cfg.aw, std::move(sigma0), tau);
  } catch (const std::invalid_argument& e) {
    fail("twist", e.what());
  }

  cfg.mu = IntVec(rank, 0);
  if (doc.contains("mu")) {
    auto mu = require_int_array(doc["mu"], "mu");
    if (static_cast<int>(mu.size()) != rank) fail("mu", "wrong dimension");
    cfg.mu.assign(mu.begin(), mu.end());
  }
  if (!cfg.datum->is_dominant(cfg.mu)) fail("mu", "must be dominant");

  if (doc.contains("j")) {
    for (long long v : require_int_array(doc["j"], "j")) {
      int node;
      if (v >= 1) {
        if (v > rank) fail("j", "finite node index out of range");
        node = static_cast<int>(v) - 1;
      } else {
        const int comp = static_cast<int>(-v);
        if (comp >= cfg.datum->num_components())
          fail("j", "affine component index out of range");
        node = cfg.aw->affine_node(comp);
      }
      cfg.j.push_back(node);
    }
    std::sort(cfg.j.begin(), cfg.j.end());
    cfg.j.erase(std::unique(cfg.j.begin(), cfg.j.end()), cfg.j.end());
  }

  if (doc.contains("length_bound")) {
    if (!doc["length_bound"].is_number_integer())
      fail("length_bound", "must be an integer");
    const long long lb = doc["length_bound"].get<long long>();
    if (lb < 0 || lb > 64) fail("length_bound", "out of range [0, 64]");
    cfg.length_bound = static_cast<int>(lb);
  }

  if (doc.contains("format")) {
    cfg.format = require_string(doc["format"], "format");
    cfg.format_explicit = true;
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "dot")
      fail("format", "must be json, csv, or dot");
  }
  return cfg;
}

}  // namespace iwahori
