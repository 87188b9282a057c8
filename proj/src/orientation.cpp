#include "cyclerecon/orientation.hpp"

#include <algorithm>

namespace cyclerecon {

Orient orient_from_char(char c) {
  switch (c) {
    case '+': return Orient::Forward;
    case '-': return Orient::Backward;
    case '*': return Orient::Symmetric;
    default:
      throw std::invalid_argument(std::string("invalid symbol '") + c +
                                  "', expected one of '+', '-', '*'");
  }
}

OrientationString::OrientationString(std::vector<Orient> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty())
    throw std::invalid_argument("orientation string must be non-empty");
}

OrientationString OrientationString::parse(std::string_view text) {
  if (text.empty())
    throw std::invalid_argument("orientation string must be non-empty");
  std::vector<Orient> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    try {
      out.push_back(orient_from_char(text[i]));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("invalid symbol '" + std::string(1, text[i]) +
                                  "' at position " + std::to_string(i + 1));
    }
  }
  return OrientationString(std::move(out));
}

std::string OrientationString::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Orient o : symbols_) out.push_back(to_char(o));
  return out;
}

bool OrientationString::is_directed() const {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](Orient o) { return o == Orient::Forward; }) ||
         std::all_of(symbols_.begin(), symbols_.end(),
                     [](Orient o) { return o == Orient::Backward; });
}

bool OrientationString::is_all_symmetric() const {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](Orient o) { return o == Orient::Symmetric; });
}

OrientationString shift(const OrientationString& s, std::size_t i) {
  const std::size_t m = s.size();
  i %= m;
  std::vector<Orient> out;
  out.reserve(m);
  for (std::size_t j = 0; j < m; ++j) out.push_back(s[(j + i) % m]);
  return OrientationString(std::move(out));
}

OrientationString reverse(const OrientationString& s) {
  const std::size_t m = s.size();
  std::vector<Orient> out;
  out.reserve(m);
  for (std::size_t j = 0; j < m; ++j) out.push_back(flipped(s[m - 1 - j]));
  return OrientationString(std::move(out));
}

OrientationString concat_power(const OrientationString& s, std::size_t k,
                               const OrientationString* suffix) {
  if (k == 0) throw std::invalid_argument("power must be at least 1");
  std::vector<Orient> out;
  out.reserve(k * s.size() + (suffix ? suffix->size() : 0));
  for (std::size_t t = 0; t < k; ++t)
    out.insert(out.end(), s.symbols().begin(), s.symbols().end());
  if (suffix)
    out.insert(out.end(), suffix->symbols().begin(), suffix->symbols().end());
  return OrientationString(std::move(out));
}

RootFactorization primitive_root(const OrientationString& s) {
  const std::size_t m = s.size();
  for (std::size_t i = 1; i <= m; ++i) {
    if (m % i != 0) continue;
    bool periodic = true;
    for (std::size_t j = 0; j < m; ++j) {
      if (s[j] != s[(j + i) % m]) {
        periodic = false;
        break;
      }
    }
    if (periodic) {
      std::vector<Orient> root(s.symbols().begin(), s.symbols().begin() + i);
      return RootFactorization{OrientationString(std::move(root)), m / i};
    }
  }
  return RootFactorization{s, 1};  // unreachable: i == m always succeeds
}

TargetClass classify_target(const OrientationString& d) {
  if (d.size() < 3)
    throw std::invalid_argument("a cycle has length at least 3, got " +
                                std::to_string(d.size()));
  if (d.size() >= 4) return TargetClass::LongCycle;
  if (d.is_directed()) return TargetClass::DirectedTriangle;
  return TargetClass::Contractible;
}

const char* to_string(TargetClass c) {
  switch (c) {
    case TargetClass::Contractible: return "Contractible";
    case TargetClass::DirectedTriangle: return "NonContractibleDirected3Cycle";
    default: return "NonContractibleLong";
  }
}

}  // namespace cyclerecon
