#include "emit.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "yang/errors.hpp"

namespace yang::emit {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt_complex(std::complex<double> v) {
  if (v.imag() == 0.0) return fmt(v.real());
  std::string out = fmt(v.real());
  if (v.imag() >= 0.0) out += "+";
  out += fmt(v.imag()) + "i";
  return out;
}

Json Json::object() {
  Json j;
  j.kind_ = Kind::object;
  return j;
}

Json Json::array() {
  Json j;
  j.kind_ = Kind::array;
  return j;
}

Json Json::str(std::string s) {
  Json j;
  j.kind_ = Kind::string;
  j.str_ = std::move(s);
  return j;
}

Json Json::num(double v) {
  Json j;
  j.kind_ = Kind::number;
  j.num_ = v;
  return j;
}

Json Json::boolean(bool b) {
  Json j;
  j.kind_ = Kind::boolean;
  j.bool_ = b;
  return j;
}

Json& Json::set(std::string key, Json v) {
  obj_.emplace_back(std::move(key), std::move(v));
  return *this;
}

Json& Json::push(Json v) {
  arr_.push_back(std::move(v));
  return *this;
}

namespace {

void escape_to(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

void pad(std::string& out, int indent) { out.append(indent, ' '); }

}  // namespace

void Json::dump_to(std::string& out, int indent) const {
  switch (kind_) {
    case Kind::object: {
      if (obj_.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      for (std::size_t k = 0; k < obj_.size(); ++k) {
        pad(out, indent + 2);
        escape_to(out, obj_[k].first);
        out += ": ";
        obj_[k].second.dump_to(out, indent + 2);
        if (k + 1 < obj_.size()) out += ",";
        out += "\n";
      }
      pad(out, indent);
      out += "}";
      return;
    }
    case Kind::array: {
      if (arr_.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t k = 0; k < arr_.size(); ++k) {
        pad(out, indent + 2);
        arr_[k].dump_to(out, indent + 2);
        if (k + 1 < arr_.size()) out += ",";
        out += "\n";
      }
      pad(out, indent);
      out += "]";
      return;
    }
    case Kind::string:
      escape_to(out, str_);
      return;
    case Kind::number:
      out += fmt(num_);
      return;
    case Kind::boolean:
      out += bool_ ? "true" : "false";
      return;
  }
}

std::string Json::dump() const {
  std::string out;
  dump_to(out, 0);
  out += "\n";
  return out;
}

void write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ValidationError("cannot open output file: " + tmp);
    f << content;
    f.flush();
    if (!f.good()) {
      f.close();
      std::remove(tmp.c_str());
      throw ValidationError("failed writing output file: " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw ValidationError("cannot move output into place: " + path);
  }
}

}  // namespace yang::emit
