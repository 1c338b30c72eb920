#include "hg/report.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hg {

std::optional<Rat> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto is_int = [](const std::string& t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s, den = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
  }
  if (!is_int(num) || !is_int(den)) return std::nullopt;
  Rat q;
  try {
    q = Rat(mpz_class(num), mpz_class(den));
  } catch (const std::exception&) {
    return std::nullopt;  // zero denominator
  }
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q_in) {
  Rat q = q_in;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_decimal(const Rat& q_in, int digits) {
  Rat q = q_in;
  q.canonicalize();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class num = q.get_num() * scale * 2;
  mpz_class scaled = num / q.get_den();  // truncates toward zero
  // round half away from zero
  if (scaled >= 0)
    scaled = (scaled + 1) / 2;
  else
    scaled = (scaled - 1) / 2;
  bool neg = scaled < 0;
  mpz_class a = abs(scaled);
  mpz_class ip = a / scale, fp = a % scale;
  std::string out = ip.get_str();
  if (digits > 0) {
    std::string frac = fp.get_str();
    if (frac.size() < static_cast<std::size_t>(digits))
      frac.insert(frac.begin(), digits - frac.size(), '0');
    out += "." + frac;
  }
  if (neg && (ip != 0 || fp != 0)) out.insert(out.begin(), '-');
  return out;
}

std::string Report::str() const {
  std::ostringstream os;
  for (const auto& [k, v] : kv) os << k << "=" << v << "\n";
  return os.str();
}

void Report::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open report file: " + path);
  out << str();
  if (!out) throw std::runtime_error("cannot write report file: " + path);
}

}  // namespace hg
