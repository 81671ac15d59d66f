#include "linkdraw/io.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace linkdraw {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail_at(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, "at " + where + ": " + what);
}

Rational rational_at(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
      fail_at(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail_at(where, "expected a rational string \"p/q\"");
}

std::vector<Rational> rationals_at(const Json& j, const std::string& where, std::optional<size_t> size = {}) {
  if (!j.is_array()) fail_at(where, "expected an array");
  if (size && j.size() != *size) fail_at(where, "expected " + std::to_string(*size) + " entries");
  std::vector<Rational> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(rational_at(j[i], where + "/" + std::to_string(i)));
  return out;
}

Json to_json(const Rational& r) { return r.str(); }

template <class Container>
Json to_json_array(const Container& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "at byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

const Json& field(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) fail_at(where.empty() ? "/" : where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail_at(where + "/" + key, "missing field");
  return *it;
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) fail_at(where, "expected a string");
  return j.get<std::string>();
}

Vec3 vec3_at(const Json& j, const std::string& where) {
  auto v = rationals_at(j, where, 3);
  return {v[0], v[1], v[2]};
}

DualQuaternion dq_at(const Json& j, const std::string& where) {
  auto v = rationals_at(j, where, 8);
  std::array<Rational, 8> a;
  std::copy(v.begin(), v.end(), a.begin());
  return DualQuaternion::from_array(a);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::optional<M0Mode> parse_mode(std::string_view text) {
  if (text == "generic") return M0Mode::Generic;
  if (text == "spherical") return M0Mode::Spherical;
  if (text == "planar") return M0Mode::Planar;
  return std::nullopt;
}

std::vector<Rational> parse_rationals(std::string_view text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  for (const auto& s : split(text, ',')) out.push_back(Rational::parse(s));
  return out;
}

std::vector<Param> parse_params(std::string_view text) {
  std::vector<Param> out;
  if (text.empty()) return out;
  for (const auto& s : split(text, ',')) {
    if (s == "inf") out.emplace_back(std::nullopt);
    else out.emplace_back(Rational::parse(s));
  }
  return out;
}

DualQuaternion parse_dual_quaternion(std::string_view text) {
  auto v = parse_rationals(text);
  if (v.size() != 8) throw Error(ErrorCode::ParseError, "dual quaternion needs 8 components, got " + std::to_string(v.size()));
  std::array<Rational, 8> a;
  std::copy(v.begin(), v.end(), a.begin());
  return DualQuaternion::from_array(a);
}

CurveSpec read_curve_spec(std::string_view text) {
  Json j = parse_json(text);
  CurveSpec spec;
  for (size_t i = 0; i < 4; ++i) {
    std::string key = "x" + std::to_string(i);
    spec.x[i] = RealPoly(rationals_at(field(j, key, ""), "/" + key));
  }
  if (auto it = j.find("mode"); it != j.end()) {
    spec.mode = parse_mode(string_at(*it, "/mode"));
    if (!spec.mode) fail_at("/mode", "expected generic, planar or spherical");
  }
  if (auto it = j.find("m0"); it != j.end()) spec.m0 = dq_at(*it, "/m0");
  if (auto it = j.find("picker"); it != j.end()) {
    if (!it->is_array()) fail_at("/picker", "expected an array of 3-vectors");
    for (size_t i = 0; i < it->size(); ++i) spec.picker.push_back(vec3_at((*it)[i], "/picker/" + std::to_string(i)));
  }
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned()) fail_at("/seed", "expected a non-negative integer");
    spec.seed = it->get<std::uint64_t>();
  }
  return spec;
}

std::string write_curve_spec(const CurveSpec& spec) {
  Json j;
  for (size_t i = 0; i < 4; ++i) j["x" + std::to_string(i)] = to_json_array(spec.x[i].coeffs());
  if (spec.mode) j["mode"] = std::string(to_string(*spec.mode));
  if (spec.m0) j["m0"] = to_json_array(spec.m0->to_array());
  if (!spec.picker.empty()) {
    Json p = Json::array();
    for (const auto& v : spec.picker) p.push_back(to_json_array(v));
    j["picker"] = p;
  }
  j["seed"] = spec.seed;
  return j.dump(2) + "\n";
}

std::string write_linkage_doc(const LinkageDoc& doc) {
  const Linkage& l = doc.linkage;
  auto joints = l.joints();
  auto links = l.links();
  CountBounds bounds = count_bounds(doc.d, doc.c);

  Json j;
  Json meta;
  meta["d"] = doc.d;
  meta["c"] = doc.c;
  meta["n"] = l.n();
  meta["mode"] = l.m.empty() ? "single" : std::string(to_string(l.mode));
  meta["deg_C"] = doc.deg_c;
  meta["deg_H"] = l.cofactor.deg();
  meta["links"] = links.size();
  meta["joints"] = joints.size();
  meta["bounds"] = {{"links", bounds.links}, {"joints", bounds.joints}};
  j["metadata"] = meta;
  j["frame"] = {{"translation", to_json_array(l.frame.translation)}, {"scale", to_json(l.frame.scale)}};
  Json cof = Json::array();
  for (const auto& c : l.cofactor.coeffs()) cof.push_back(to_json_array(std::array<Rational, 4>{c[0], c[1], c[2], c[3]}));
  j["cofactor"] = cof;

  Json js = Json::array();
  for (const auto& joint : joints) {
    DualQuaternion original = l.frame.unapply_to(joint.value.value());
    Json e;
    e["label"] = joint.label;
    e["quaternion"] = to_json_array(original.to_array());
    e["pluecker"] = to_json_array(axis(original).coords());
    e["links"] = {joint.links.first, joint.links.second};
    js.push_back(e);
  }
  j["joints"] = js;
  Json ls = Json::array();
  for (const auto& link : links) ls.push_back({{"label", link.label}, {"joints", link.joints}});
  j["links"] = ls;
  j["drawn_point"] = to_json_array(l.drawn_point());
  return j.dump(2) + "\n";
}

LinkageDoc read_linkage_doc(std::string_view text) {
  Json j = parse_json(text);
  LinkageDoc doc;
  const Json& meta = field(j, "metadata", "");
  auto int_at = [&](const char* key) {
    const Json& v = field(meta, key, "/metadata");
    if (!v.is_number_integer()) fail_at(std::string("/metadata/") + key, "expected an integer");
    return v.get<int>();
  };
  doc.d = int_at("d");
  doc.c = int_at("c");
  doc.deg_c = int_at("deg_C");
  Linkage& l = doc.linkage;
  std::string mode = string_at(field(meta, "mode", "/metadata"), "/metadata/mode");
  if (mode == "user") l.mode = M0Mode::UserSupplied;
  else if (mode != "single") {
    auto m = parse_mode(mode);
    if (!m) fail_at("/metadata/mode", "unknown mode '" + mode + "'");
    l.mode = *m;
  }

  const Json& frame = field(j, "frame", "");
  l.frame.translation = vec3_at(field(frame, "translation", "/frame"), "/frame/translation");
  l.frame.scale = rational_at(field(frame, "scale", "/frame"), "/frame/scale");
  const Json& cof = field(j, "cofactor", "");
  if (!cof.is_array()) fail_at("/cofactor", "expected an array");
  std::vector<Quaternion> coeffs;
  for (size_t i = 0; i < cof.size(); ++i) {
    auto v = rationals_at(cof[i], "/cofactor/" + std::to_string(i), 4);
    coeffs.emplace_back(v[0], v[1], v[2], v[3]);
  }
  l.cofactor = QuatPoly(coeffs);

  std::map<std::string, RotationQuaternion> by_label;
  const Json& js = field(j, "joints", "");
  if (!js.is_array()) fail_at("/joints", "expected an array");
  for (size_t i = 0; i < js.size(); ++i) {
    std::string where = "/joints/" + std::to_string(i);
    std::string label = string_at(field(js[i], "label", where), where + "/label");
    DualQuaternion value = l.frame.apply_to(dq_at(field(js[i], "quaternion", where), where + "/quaternion"));
    try {
      by_label.emplace(label, RotationQuaternion(value));
    } catch (const Error& e) {
      fail_at(where + "/quaternion", e.what());
    }
  }
  auto take = [&](const std::string& label) -> std::optional<RotationQuaternion> {
    auto it = by_label.find(label);
    if (it == by_label.end()) return std::nullopt;
    return it->second;
  };
  for (size_t i = 1;; ++i) {
    auto h = take("h" + std::to_string(i));
    if (!h) break;
    l.h.push_back(*h);
  }
  if (l.h.empty()) fail_at("/joints", "no joint h1");
  if (auto m0 = take("m0")) {
    l.m.push_back(*m0);
    for (size_t i = 1; i <= l.h.size(); ++i) {
      auto k = take("k" + std::to_string(i));
      auto m = take("m" + std::to_string(i));
      if (!k || !m) fail_at("/joints", "missing k" + std::to_string(i) + " or m" + std::to_string(i));
      l.k.push_back(*k);
      l.m.push_back(*m);
    }
  }
  if (by_label.size() != l.joints().size()) fail_at("/joints", "unexpected joint labels");
  return doc;
}

std::string emit_trace(const Linkage& linkage, const std::vector<Param>& samples) {
  std::ostringstream out;
  out << "t,x,y,z,x_float,y_float,z_float\n";
  for (const auto& t : samples) {
    Vec3 p = configuration_at(linkage, t).drawn;
    out << param_str(t);
    for (const auto& c : p) out << ',' << c.str();
    for (const auto& c : p) out << ',' << format_double(c.to_double());
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IOError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IOError, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorCode::IOError, "failed writing " + path.string());
}

}  // namespace linkdraw
