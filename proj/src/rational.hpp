#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dk {

using Rat = mpq_class;
using Int = mpz_class;
using Vec = std::vector<Rat>;

/// Base for all domain errors; `code` is the stable machine-readable name
/// surfaced through reports and the C API.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Rat parseRat(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw Error("BadRational", "cannot parse '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string ratStr(const Rat& q) { return q.get_str(); }

inline bool isZeroVec(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec addVec(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec subVec(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scaleVec(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline Vec negVec(const Vec& a) { return scaleVec(Rat(-1), a); }

/// Exact comparisons assume canonical mpq values; two-argument mpq_class
/// construction does not canonicalize, so normalize every externally
/// supplied vector at the API boundary.
inline Vec canonVec(Vec v) {
  for (auto& x : v) x.canonicalize();
  return v;
}

}  // namespace dk
