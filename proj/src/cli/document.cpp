#include "quatlin/cli/document.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

namespace quatlin::cli {

namespace {

Quaternion parse_component_array(const Json& node, const std::string& field) {
  if (!node.is_array() || node.size() != 4) {
    throw ParseError(fmt::format("{}: expected an array of 4 numbers", field));
  }
  Vec4 v{};
  for (std::size_t c = 0; c < 4; ++c) {
    const Json& entry = node[c];
    if (!entry.is_number()) {
      throw ParseError(fmt::format("{}[{}]: expected a number", field, c));
    }
    v[c] = entry.get<double>();
    if (!std::isfinite(v[c])) {
      throw ParseError(fmt::format("{}[{}]: value is not finite", field, c));
    }
  }
  return Quaternion::from_vector(v);
}

void write_number(std::string& out, const Json& value) {
  if (value.is_number_float()) {
    // Adding zero folds -0 into 0.
    out += fmt::format("{:.17g}", value.get<double>() + 0.0);
  } else {
    out += value.dump();
  }
}

bool is_scalar_array(const Json& value) {
  for (const auto& item : value) {
    if (item.is_structured()) return false;
  }
  return true;
}

void write_value(std::string& out, const Json& value, int depth) {
  const std::string indent(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string closing(static_cast<std::size_t>(2 * depth), ' ');
  if (value.is_object()) {
    if (value.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, item] : value.items()) {
      if (!first) out += ",\n";
      first = false;
      out += indent;
      out += Json(key).dump();
      out += ": ";
      write_value(out, item, depth + 1);
    }
    out += "\n" + closing + "}";
  } else if (value.is_array()) {
    if (value.empty()) {
      out += "[]";
    } else if (is_scalar_array(value)) {
      out += "[";
      for (std::size_t n = 0; n < value.size(); ++n) {
        if (n > 0) out += ", ";
        write_value(out, value[n], depth + 1);
      }
      out += "]";
    } else {
      out += "[\n";
      for (std::size_t n = 0; n < value.size(); ++n) {
        if (n > 0) out += ",\n";
        out += indent;
        write_value(out, value[n], depth + 1);
      }
      out += "\n" + closing + "]";
    }
  } else if (value.is_number()) {
    write_number(out, value);
  } else {
    out += value.dump();
  }
}

}  // namespace

GeneralLinearFunction parse_function_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    // The library message already carries the line and column.
    throw ParseError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("document: expected an object with a \"terms\" array");
  }
  const auto terms = doc.find("terms");
  if (terms == doc.end() || !terms->is_array()) {
    throw ParseError("terms: missing or not an array");
  }
  GeneralLinearFunction f;
  for (std::size_t p = 0; p < terms->size(); ++p) {
    const Json& term = (*terms)[p];
    const std::string field = fmt::format("terms[{}]", p);
    if (!term.is_object()) {
      throw ParseError(field + ": expected an object with \"left\" and \"right\"");
    }
    for (const char* side : {"left", "right"}) {
      if (!term.contains(side)) {
        throw ParseError(fmt::format("{}.{}: missing", field, side));
      }
    }
    f.add_term(parse_component_array(term["left"], field + ".left"),
               parse_component_array(term["right"], field + ".right"));
  }
  return f;
}

std::string read_text(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(stdin_stream), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) {
    throw std::runtime_error("error reading " + path);
  }
  return buffer.str();
}

Json quaternion_json(const Quaternion& q) { return Json::array({q.w(), q.x(), q.y(), q.z()}); }

Json matrix_json(const Matrix4& m) {
  Json rows = Json::array();
  for (const auto& row : m) rows.push_back(Json::array({row[0], row[1], row[2], row[3]}));
  return rows;
}

Json function_json(const GeneralLinearFunction& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    terms.push_back(Json{{"left", quaternion_json(t.left)}, {"right", quaternion_json(t.right)}});
  }
  return Json{{"terms", std::move(terms)}};
}

std::string dump_json(const Json& value) {
  std::string out;
  write_value(out, value, 0);
  out += "\n";
  return out;
}

std::string format_real(double value) { return fmt::format("{:.6g}", value + 0.0); }

std::string format_quaternion(const Quaternion& q) {
  std::string out = format_real(q.w());
  constexpr const char* units[] = {"i", "j", "k"};
  for (std::size_t c = 1; c < 4; ++c) {
    const double v = q[c] + 0.0;
    out += std::signbit(v) ? " - " : " + ";
    out += format_real(std::abs(v));
    out += units[c - 1];
  }
  return out;
}

}  // namespace quatlin::cli
