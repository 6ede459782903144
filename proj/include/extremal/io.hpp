#pragma once

// Instance files and run reports. Instances are parsed with nlohmann/json;
// all output goes through a small ordered writer with fixed number formatting
// (17 significant digits), so identical inputs produce byte-identical output.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "extremal/bodies.hpp"
#include "extremal/ellipsoid.hpp"
#include "extremal/solvers.hpp"
#include "extremal/theorems.hpp"

namespace extremal {

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ----------------------------------------------------- deterministic writer

class JValue {
 public:
  enum class Type { null, boolean, integer, number, string, array, object };

  JValue() = default;
  JValue(bool b) : type_(Type::boolean), bool_(b) {}
  JValue(double v) : type_(Type::number), num_(v) {}
  JValue(int v) : type_(Type::integer), int_(v) {}
  JValue(long v) : type_(Type::integer), int_(v) {}
  JValue(long long v) : type_(Type::integer), int_(v) {}
  JValue(unsigned v) : type_(Type::integer), int_(v) {}
  JValue(unsigned long v) : type_(Type::integer), int_(static_cast<long long>(v)) {}
  JValue(unsigned long long v) : type_(Type::integer), int_(static_cast<long long>(v)) {}
  JValue(const char* s) : type_(Type::string), str_(s) {}
  JValue(std::string s) : type_(Type::string), str_(std::move(s)) {}

  static JValue array() {
    JValue v;
    v.type_ = Type::array;
    return v;
  }
  static JValue object() {
    JValue v;
    v.type_ = Type::object;
    return v;
  }

  JValue& operator[](const std::string& key) {
    if (type_ == Type::null) type_ = Type::object;
    if (type_ != Type::object) throw std::logic_error("JValue: not an object");
    for (auto& kv : members_)
      if (kv.first == key) return kv.second;
    members_.emplace_back(key, JValue());
    return members_.back().second;
  }

  void push_back(JValue v) {
    if (type_ == Type::null) type_ = Type::array;
    if (type_ != Type::array) throw std::logic_error("JValue: not an array");
    items_.push_back(std::move(v));
  }

  static std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
  }

  std::string dump(int indent = 2) const {
    std::ostringstream out;
    write(out, indent, 0);
    out << "\n";
    return out.str();
  }

 private:
  static void write_escaped(std::ostringstream& out, const std::string& s) {
    out << '"';
    for (char c : s) {
      switch (c) {
        case '"': out << "\\\""; break;
        case '\\': out << "\\\\"; break;
        case '\n': out << "\\n"; break;
        case '\t': out << "\\t"; break;
        case '\r': out << "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out << buf;
          } else {
            out << c;
          }
      }
    }
    out << '"';
  }

  void write(std::ostringstream& out, int indent, int depth) const {
    const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    const std::string closing(static_cast<std::size_t>(indent) * depth, ' ');
    switch (type_) {
      case Type::null: out << "null"; break;
      case Type::boolean: out << (bool_ ? "true" : "false"); break;
      case Type::integer: out << int_; break;
      case Type::number: out << format_number(num_); break;
      case Type::string: write_escaped(out, str_); break;
      case Type::array: {
        if (items_.empty()) { out << "[]"; break; }
        bool flat = true;
        for (const auto& v : items_)
          if (v.type_ == Type::array || v.type_ == Type::object) flat = false;
        out << '[';
        for (std::size_t i = 0; i < items_.size(); ++i) {
          if (!flat) out << '\n' << pad;
          items_[i].write(out, indent, depth + 1);
          if (i + 1 < items_.size()) out << (flat ? ", " : ",");
        }
        if (!flat) out << '\n' << closing;
        out << ']';
        break;
      }
      case Type::object: {
        if (members_.empty()) { out << "{}"; break; }
        out << "{\n";
        for (std::size_t i = 0; i < members_.size(); ++i) {
          out << pad;
          write_escaped(out, members_[i].first);
          out << ": ";
          members_[i].second.write(out, indent, depth + 1);
          if (i + 1 < members_.size()) out << ',';
          out << '\n';
        }
        out << closing << '}';
        break;
      }
    }
  }

  Type type_ = Type::null;
  bool bool_ = false;
  double num_ = 0.0;
  long long int_ = 0;
  std::string str_;
  std::vector<std::pair<std::string, JValue>> members_;
  std::vector<JValue> items_;
};

// ----------------------------------------------------------------- instances

enum class FieldTag { real, complex };
enum class InstanceKind { points, polytope };

struct Instance {
  std::string name;
  FieldTag field = FieldTag::real;
  InstanceKind kind = InstanceKind::points;
  std::vector<Vec<double>> real_points;
  std::vector<Vec<complex_t>> complex_points;
  HPolytope polytope;

  std::size_t dim() const {
    if (kind == InstanceKind::polytope) return polytope.dim();
    if (field == FieldTag::real)
      return real_points.empty() ? 0 : real_points.front().size();
    return complex_points.empty() ? 0 : complex_points.front().size();
  }

  PointCloud<double> real_cloud() const {
    if (kind != InstanceKind::points || field != FieldTag::real)
      throw input_error("instance is not a real point cloud");
    return PointCloud<double>{real_points};
  }
  PointCloud<complex_t> complex_cloud() const {
    if (kind != InstanceKind::points || field != FieldTag::complex)
      throw input_error("instance is not a complex point cloud");
    return PointCloud<complex_t>{complex_points};
  }
};

inline Instance parse_instance(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("malformed instance file: ") + e.what());
  }
  try {
    Instance inst;
    inst.name = j.value("name", std::string("unnamed"));
    const std::string field = j.value("field", std::string("real"));
    if (field == "real")
      inst.field = FieldTag::real;
    else if (field == "complex")
      inst.field = FieldTag::complex;
    else
      throw input_error("instance field must be \"real\" or \"complex\"");
    const std::string kind = j.value("kind", std::string("points"));
    if (kind == "points")
      inst.kind = InstanceKind::points;
    else if (kind == "polytope")
      inst.kind = InstanceKind::polytope;
    else
      throw input_error("instance kind must be \"points\" or \"polytope\"");

    if (inst.kind == InstanceKind::points) {
      if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
        throw input_error("points instance needs a nonempty \"points\" array");
      std::size_t dim = 0;
      for (const auto& row : j["points"]) {
        if (!row.is_array() || row.empty()) throw input_error("each point must be an array");
        if (dim == 0) dim = row.size();
        if (row.size() != dim) throw input_error("inconsistent point dimensions");
        if (inst.field == FieldTag::real) {
          Vec<double> p;
          for (const auto& v : row) {
            if (!v.is_number()) throw input_error("real coordinates must be numbers");
            p.push_back(v.get<double>());
          }
          inst.real_points.push_back(std::move(p));
        } else {
          Vec<complex_t> p;
          for (const auto& v : row) {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
              throw input_error("complex coordinates must be [re, im] pairs");
            p.push_back({v[0].get<double>(), v[1].get<double>()});
          }
          inst.complex_points.push_back(std::move(p));
        }
      }
    } else {
      if (inst.field != FieldTag::real)
        throw input_error("polytope instances are real (use --complex at solve time)");
      if (!j.contains("constraints") || !j["constraints"].is_array() || j["constraints"].empty())
        throw input_error("polytope instance needs a nonempty \"constraints\" array");
      std::size_t dim = 0;
      for (const auto& row : j["constraints"]) {
        if (!row.is_object() || !row.contains("a") || !row.contains("b"))
          throw input_error("each constraint must be {\"a\": [...], \"b\": number}");
        Halfspace h;
        for (const auto& v : row["a"]) {
          if (!v.is_number()) throw input_error("constraint normals must be numbers");
          h.normal.push_back(v.get<double>());
        }
        if (!row["b"].is_number()) throw input_error("constraint offset must be a number");
        h.offset = row["b"].get<double>();
        if (dim == 0) dim = h.normal.size();
        if (h.normal.size() != dim || dim == 0)
          throw input_error("inconsistent constraint dimensions");
        inst.polytope.rows.push_back(std::move(h));
      }
    }
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("malformed instance file: ") + e.what());
  }
}

inline std::string serialize_instance(const Instance& inst) {
  JValue root = JValue::object();
  root["schema"] = "extremal-instance/1";
  root["name"] = inst.name;
  root["field"] = inst.field == FieldTag::real ? "real" : "complex";
  root["kind"] = inst.kind == InstanceKind::points ? "points" : "polytope";
  if (inst.kind == InstanceKind::points) {
    JValue pts = JValue::array();
    if (inst.field == FieldTag::real) {
      for (const auto& p : inst.real_points) {
        JValue row = JValue::array();
        for (double v : p) row.push_back(v);
        pts.push_back(std::move(row));
      }
    } else {
      for (const auto& p : inst.complex_points) {
        JValue row = JValue::array();
        for (const complex_t& v : p) {
          JValue pair = JValue::array();
          pair.push_back(v.real());
          pair.push_back(v.imag());
          row.push_back(std::move(pair));
        }
        pts.push_back(std::move(row));
      }
    }
    root["points"] = std::move(pts);
  } else {
    JValue rows = JValue::array();
    for (const auto& h : inst.polytope.rows) {
      JValue row = JValue::object();
      JValue a = JValue::array();
      for (double v : h.normal) a.push_back(v);
      row["a"] = std::move(a);
      row["b"] = h.offset;
      rows.push_back(std::move(row));
    }
    root["constraints"] = std::move(rows);
  }
  return root.dump();
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

// ------------------------------------------------------------- report pieces

template <class K>
JValue to_json(const Ellipsoid<K>& e) {
  JValue out = JValue::object();
  out["field"] = field_traits<K>::name;
  JValue center = JValue::array();
  for (const K& v : e.center) {
    if constexpr (field_traits<K>::is_complex) {
      JValue pair = JValue::array();
      pair.push_back(v.real());
      pair.push_back(v.imag());
      center.push_back(std::move(pair));
    } else {
      center.push_back(v);
    }
  }
  out["center"] = std::move(center);
  JValue shape = JValue::array();
  for (std::size_t i = 0; i < e.shape.rows(); ++i) {
    JValue row = JValue::array();
    for (std::size_t j = 0; j < e.shape.cols(); ++j) {
      if constexpr (field_traits<K>::is_complex) {
        JValue pair = JValue::array();
        pair.push_back(e.shape(i, j).real());
        pair.push_back(e.shape(i, j).imag());
        row.push_back(std::move(pair));
      } else {
        row.push_back(e.shape(i, j));
      }
    }
    shape.push_back(std::move(row));
  }
  out["shape"] = std::move(shape);
  JValue axes = JValue::array();
  for (double a : semi_axes(e)) axes.push_back(a);
  out["semi_axes"] = std::move(axes);
  out["nvol"] = nvol(e);
  return out;
}

// wall time is deliberately not serialized: reports must be byte-identical
// for identical (instance, flags, seed)
inline JValue to_json(const SolveReport& r) {
  JValue out = JValue::object();
  out["iterations"] = r.iterations;
  out["epsilon"] = r.epsilon;
  out["dual_gap"] = r.dual_gap;
  out["seed"] = r.seed;
  out["converged"] = r.converged;
  return out;
}

inline JValue to_json(const DualWeights& w) {
  JValue arr = JValue::array();
  for (double v : w.weights) arr.push_back(v);
  return arr;
}

inline JValue to_json(const VerificationReport& r) {
  JValue out = JValue::object();
  out["check"] = r.name;
  out["trials"] = r.trials;
  out["max_residual"] = r.max_residual;
  out["threshold"] = r.threshold;
  out["pass"] = r.pass;
  out["seed"] = r.seed;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

inline JValue to_json(const SpreadReport& r) {
  JValue out = JValue::object();
  out["restarts"] = r.restarts;
  out["shape_spread"] = r.shape_spread;
  out["center_spread"] = r.center_spread;
  out["seed"] = r.seed;
  JValue samples = JValue::array();
  for (const auto& s : r.samples) {
    JValue one = JValue::object();
    JValue axes = JValue::array();
    for (double a : s.axes) axes.push_back(a);
    one["semi_axes"] = std::move(axes);
    JValue center = JValue::array();
    for (double c : s.center) center.push_back(c);
    one["center"] = std::move(center);
    samples.push_back(std::move(one));
  }
  out["samples"] = std::move(samples);
  return out;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot open output file: " + path);
  out << text;
}

}  // namespace extremal
