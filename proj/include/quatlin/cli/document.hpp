#pragma once

// On-disk function documents:
//
//   {"terms": [{"left": [w, x, y, z], "right": [w, x, y, z]}, ...]}
//
// and the JSON writer shared by every command. Floating-point values are
// written with 17 significant digits so documents round-trip exactly.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "quatlin/linear_function.hpp"

namespace quatlin::cli {

using Json = nlohmann::ordered_json;

// Malformed or invalid input document; the message names the line or field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GeneralLinearFunction parse_function_document(std::string_view text);

// Reads path, or stdin when path is "-". Throws std::runtime_error on I/O failure.
std::string read_text(const std::string& path, std::istream& stdin_stream);

Json quaternion_json(const Quaternion& q);
Json matrix_json(const Matrix4& m);
Json function_json(const GeneralLinearFunction& f);

// Pretty-prints with two-space indent; scalar-only arrays stay on one line.
std::string dump_json(const Json& value);

// "w + xi + yj + zk" with 6 significant digits.
std::string format_quaternion(const Quaternion& q);
std::string format_real(double value);

}  // namespace quatlin::cli
