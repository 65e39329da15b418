#include "format.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace hdet::cli {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, 14);
  return std::string(buf, res.ptr);
}

std::string format_complex(cplx z) {
  std::string im = format_double(z.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_double(z.real()) + im + "i";
}

namespace {

double parse_real(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("bad number: " + std::string(whole));
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad number: " + std::string(whole));
  }
  return v;
}

}  // namespace

cplx parse_complex(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) throw std::invalid_argument("empty number");
  if (s.back() != 'i' && s.back() != 'j') return parse_real(s, text);
  s.remove_suffix(1);
  // split at the last sign that is not the leading one and not part of an exponent
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t, text);
  };
  if (split == std::string_view::npos) return {0.0, imag_part(s)};
  return {parse_real(s.substr(0, split), text), imag_part(s.substr(split))};
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    out.push_back(parse_real(text.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

void CsvWriter::header(const std::vector<std::string>& cols) {
  for (std::size_t i = 0; i < cols.size(); ++i) out_ << (i ? "," : "") << cols[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_double(values[i]);
  out_ << '\n';
}

void CsvWriter::row(double param, int index, const std::vector<double>& values) {
  out_ << format_double(param) << ',' << index;
  for (double v : values) out_ << ',' << format_double(v);
  out_ << '\n';
}

}  // namespace hdet::cli
