#include "iwahori/report.hpp"

#include <cstdio>

namespace iwahori {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void append_string_array(std::string& out, const std::vector<std::string>& v) {
  out += "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += "\"" + json_escape(v[i]) + "\"";
  }
  out += "]";
}

}  // namespace

std::string report_to_json(const Report& r) {
  std::string out = "{\"theorem\":\"" + json_escape(r.theorem) + "\",";
  out += "\"parameters\":{";
  for (size_t i = 0; i < r.parameters.size(); ++i) {
    if (i) out += ",";
    out += "\"" + json_escape(r.parameters[i].first) + "\":\"" +
           json_escape(r.parameters[i].second) + "\"";
  }
  out += "},";
  out += std::string("\"status\":\"") + (r.pass ? "pass" : "fail") + "\",";
  out += "\"witnesses\":";
  append_string_array(out, r.witnesses);
  out += ",\"diff\":";
  append_string_array(out, r.diff);
  out += "}";
  return out;
}

}  // namespace iwahori
