#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "covkit/chan.hpp"
#include "covkit/error.hpp"

namespace covkit {

std::string format_double(double x) {
  if (x == 0.0) return "0";  // also folds -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string channel_to_json(const Channel& ch) {
  std::string s = "{\"in_dim\": " + std::to_string(ch.in_dim) + ", \"out_dim\": " + std::to_string(ch.out_dim) +
                  ", \"choi\": [";
  for (std::size_t i = 0; i < ch.choi.rows(); ++i) {
    s += i ? ",\n  [" : "\n  [";
    for (std::size_t j = 0; j < ch.choi.cols(); ++j) {
      if (j) s += ", ";
      s += "[" + format_double(ch.choi(i, j).real()) + ", " + format_double(ch.choi(i, j).imag()) + "]";
    }
    s += "]";
  }
  s += "]}\n";
  return s;
}

Channel channel_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed channel JSON: ") + e.what());
  }
  try {
    const auto in = j.at("in_dim").get<std::size_t>();
    const auto out = j.at("out_dim").get<std::size_t>();
    const auto& rows = j.at("choi");
    const std::size_t n = in * out;
    if (!rows.is_array() || rows.size() != n) throw InvalidArgument("choi must have in_dim*out_dim rows");
    ComplexMatrix c(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!rows[r].is_array() || rows[r].size() != n) throw InvalidArgument("choi row has the wrong length");
      for (std::size_t k = 0; k < n; ++k) {
        const auto& z = rows[r][k];
        if (!z.is_array() || z.size() != 2) throw InvalidArgument("choi entries must be [re, im] pairs");
        c(r, k) = Complex(z[0].get<double>(), z[1].get<double>());
      }
    }
    return Channel(in, out, std::move(c));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed channel JSON: ") + e.what());
  } catch (const DimensionError& e) {
    throw InvalidArgument(std::string("malformed channel JSON: ") + e.what());
  }
}

void write_channel_file(const std::string& path, const Channel& ch) {
  std::ofstream f(path);
  if (!f) throw Error("cannot open " + path + " for writing");
  f << channel_to_json(ch);
  if (!f) throw Error("write failed: " + path);
}

Channel read_channel_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return channel_from_json(ss.str());
}

}  // namespace covkit
