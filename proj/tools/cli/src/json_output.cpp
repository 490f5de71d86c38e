#include <charconv>
#include <cmath>
#include <string>

#include "chebroot/cli.hpp"
#include "json.hpp"

namespace chebroot::cli {

namespace {

using Json = nlohmann::ordered_json;

void write_indent(std::string& out, int depth) { out.append(static_cast<std::size_t>(2 * depth), ' '); }

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

void write(std::string& out, const Json& j, int depth) {
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        write_indent(out, depth + 1);
        out += Json(key).dump();
        out += ": ";
        write(out, value, depth + 1);
      }
      out += "\n";
      write_indent(out, depth);
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool flat = true;
      for (const auto& v : j) flat = flat && is_scalar(v);
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          write(out, j[i], depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        write_indent(out, depth + 1);
        write(out, j[i], depth + 1);
      }
      out += "\n";
      write_indent(out, depth);
      out += "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_real(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

std::string dump(const Json& j) {
  std::string out;
  write(out, j, 0);
  out += "\n";
  return out;
}

Json reals(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(x);
  return a;
}

Json real_or_null(const std::optional<double>& v) {
  return v && std::isfinite(*v) ? Json(*v) : Json(nullptr);
}

}  // namespace

std::string format_real(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string report_to_json(const ClassificationReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["n_int"] = r.n_int;
  j["n_ext_plus"] = r.n_ext_plus;
  j["n_ext_minus"] = r.n_ext_minus;
  j["n_real"] = r.n_real;
  j["n_complex"] = r.degree - r.n_real;
  j["trig_n_real"] = r.trig_n_real ? Json(*r.trig_n_real) : Json(nullptr);
  j["oracle_n_real"] = r.oracle_n_real;
  j["f0"] = real_or_null(r.reduction ? std::optional(r.reduction->f0) : std::nullopt);
  j["fpi"] = real_or_null(r.reduction ? std::optional(r.reduction->fpi) : std::nullopt);

  Json dep;
  dep["m"] = r.depressed.m;
  if (r.degree == 5) dep["n"] = r.depressed.n;
  dep["p"] = r.depressed.p;
  dep["q"] = r.depressed.q;
  dep["shift"] = r.depressed.shift;
  j["depressed"] = dep;

  if (r.reduction) {
    Json red;
    red["u"] = r.reduction->u;
    if (r.degree == 5) {
      red["alpha"] = r.reduction->alpha;
      red["beta"] = r.reduction->beta;
      red["gamma"] = r.reduction->gamma;
    } else {
      red["a"] = r.reduction->alpha;
      red["b"] = r.reduction->beta;
    }
    j["reduction"] = red;
  } else {
    j["reduction"] = nullptr;
  }

  j["critical_thetas"] = reals(r.critical_thetas);
  Json brackets = Json::array();
  for (const Bracket& b : r.interior_brackets) brackets.push_back(Json::array({b.lo, b.hi}));
  j["interior_brackets"] = brackets;
  j["interior_thetas"] = reals(r.interior_thetas);
  j["t_roots"] = reals(r.t_roots);
  j["roots"] = reals(r.roots);
  Json flags = Json::array();
  for (Degeneracy d : r.degenerate) flags.push_back(std::string(to_string(d)));
  j["degenerate"] = flags;
  j["method"] = std::string(to_string(r.method));
  j["scenario"] = r.scenario;
  return dump(j);
}

std::string oracle_to_json(int degree, const OracleResult& r) {
  Json j;
  j["degree"] = degree;
  j["distinct_real"] = r.distinct_real;
  j["multiple_roots"] = r.multiple_roots;
  Json roots = Json::array();
  for (const OracleRoot& root : r.roots) {
    Json e;
    e["value"] = root.value;
    e["multiplicity"] = root.multiplicity;
    roots.push_back(e);
  }
  j["roots"] = roots;
  return dump(j);
}

std::string canonicalize_json(std::string_view text) { return dump(Json::parse(text)); }

}  // namespace chebroot::cli
