#include "opsq/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace opsq {

Sequence make_sequence(const std::vector<int64_t>& raw) {
  if (raw.empty()) throw std::invalid_argument("empty sequence");
  std::vector<int64_t> sorted(raw);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Sequence s;
  s.sigma = static_cast<int32_t>(sorted.size());
  s.chars.reserve(raw.size());
  for (int64_t v : raw) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    s.chars.push_back(static_cast<Symbol>(it - sorted.begin()) + 1);
  }
  return s;
}

Sequence make_sequence_dense(std::vector<Symbol> chars, int32_t sigma) {
  if (chars.empty()) throw std::invalid_argument("empty sequence");
  if (sigma < 1) throw std::invalid_argument("sigma must be positive");
  for (Symbol c : chars) {
    if (c < 1 || c > sigma) throw std::invalid_argument("character outside [1, sigma]");
  }
  Sequence s;
  s.chars = std::move(chars);
  s.sigma = sigma;
  return s;
}

Sequence sequence_from_ascii(std::string_view bytes) {
  std::vector<int64_t> raw;
  raw.reserve(bytes.size());
  for (unsigned char b : bytes) {
    if (std::isspace(b)) continue;
    raw.push_back(static_cast<int64_t>(b));
  }
  if (raw.empty()) throw std::invalid_argument("empty sequence");
  return make_sequence(raw);
}

std::string to_int_string(const Sequence& s) {
  std::string out;
  for (size_t i = 0; i < s.chars.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(s.chars[i]);
  }
  return out;
}

}  // namespace opsq
