#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace yang::emit {

// All floating-point output goes through this: 12 significant digits,
// locale-independent, so repeated runs are byte-identical.
std::string fmt(double v);

// "re" for real values, "re+imi" / "re-imi" otherwise.
std::string fmt_complex(std::complex<double> v);

// Minimal insertion-ordered JSON value tree. Only what the CLI needs.
class Json {
 public:
  static Json object();
  static Json array();
  static Json str(std::string s);
  static Json num(double v);
  static Json boolean(bool b);

  Json& set(std::string key, Json v);
  Json& push(Json v);
  std::string dump() const;  // pretty, 2-space indent, trailing newline

 private:
  enum class Kind { object, array, string, number, boolean };
  Kind kind_ = Kind::object;
  std::vector<std::pair<std::string, Json>> obj_;
  std::vector<Json> arr_;
  std::string str_;
  double num_ = 0.0;
  bool bool_ = false;

  void dump_to(std::string& out, int indent) const;
};

// Empty path writes to stdout; otherwise writes to path atomically
// (temp file + rename, temp removed on failure).
void write_output(const std::string& content, const std::string& path);

}  // namespace yang::emit
