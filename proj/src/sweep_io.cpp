#include "quadspin/sweep_io.hpp"

#include <cstdio>
#include <fstream>

namespace quadspin {

namespace {

void append_json_escaped(std::string& out, std::string_view text) {
  for (char ch : text) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += ch; break;
    }
  }
}

}  // namespace

std::string format_value(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", v);
  return buffer;
}

std::string to_csv(const SweepResult& result) {
  std::string out = "alpha,beta,eta,theta,phi,concurrence,magnetization,e1,e2,e3,e4\n";
  for (const SweepRecord& r : result.records) {
    out += format_value(r.alpha);
    out += ',';
    out += format_value(r.beta);
    out += ',';
    out += format_value(r.eta);
    out += ',';
    out += format_value(r.theta);
    out += ',';
    out += format_value(r.phi);
    out += ',';
    out += format_value(r.concurrence);
    out += ',';
    out += format_value(r.magnetization);
    for (double level : r.levels) {
      out += ',';
      out += format_value(level);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const SweepResult& result) {
  std::string out = "{\n  \"metadata\": {\"grid\": \"";
  append_json_escaped(out, result.metadata.grid);
  out += "\", \"conventions\": \"";
  append_json_escaped(out, result.metadata.conventions);
  out += "\", \"spin\": ";
  out += format_value(result.metadata.spin);
  out += ", \"version\": \"";
  append_json_escaped(out, result.metadata.version);
  out += "\"},\n  \"records\": [";
  for (std::size_t k = 0; k < result.records.size(); ++k) {
    const SweepRecord& r = result.records[k];
    out += (k == 0) ? "\n" : ",\n";
    out += "    {\"alpha\": " + format_value(r.alpha);
    out += ", \"beta\": " + format_value(r.beta);
    out += ", \"eta\": " + format_value(r.eta);
    out += ", \"theta\": " + format_value(r.theta);
    out += ", \"phi\": " + format_value(r.phi);
    out += ", \"concurrence\": " + format_value(r.concurrence);
    out += ", \"magnetization\": " + format_value(r.magnetization);
    out += ", \"levels\": [";
    for (std::size_t i = 0; i < r.levels.size(); ++i) {
      if (i > 0) out += ", ";
      out += format_value(r.levels[i]);
    }
    out += "]}";
  }
  out += "\n  ]\n}\n";
  return out;
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoFailure("cannot open '" + path + "' for writing");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) {
    throw IoFailure("write to '" + path + "' failed");
  }
}

}  // namespace quadspin
