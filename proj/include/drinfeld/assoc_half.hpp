#pragma once

#include <map>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "drinfeld/mzv.hpp"
#include "drinfeld/series.hpp"

namespace drinfeld {

/// kz: u_w, akz: Φ_KZ(-x,-y), psi: c_w (ψ·Φ_KZ = Φ_AKZ), half_psi: d_w
/// (ψ^{1/2}), half: f_w (Φ_{1/2} = ψ^{1/2}·Φ_KZ).
enum class Family { KZ, AKZ, Psi, HalfPsi, Half };

std::string family_name(Family f);
/// Accepts "kz", "akz", "psi", "half-psi", "half". Throws ParseError.
Family parse_family(std::string_view name);

/// δ_{pq} = 1 iff p + q + 1 is odd, i.e. x^p y x^q has odd length.
inline bool delta(int p, int q) { return (p + q + 1) % 2 != 0; }

/// Coefficient families of the KZ-derived associators on words of y-degree <= 2.
/// Values are memoized per family; concurrent queries are safe.
class AssociatorFamilies {
public:
  explicit AssociatorFamilies(const ReductionTable& table);

  const ReductionTable& table() const { return *table_; }

  /// (-1)^{n_w} ζ(w)/(2πi)^{|w|}, n_w the y-degree.
  Scalar u(const Word& w) const;
  /// (-1)^{|w|} u_w.
  Scalar akz(const Word& w) const;
  Scalar c(const Word& w) const;
  Scalar d(const Word& w) const;
  Scalar f(const Word& w) const;
  Scalar coeff(Family fam, const Word& w) const;

  /// Every word of length <= max_len and y-degree <= max_y_deg, constant 1.
  NCSeries series(Family fam, int max_len = kDefaultMaxLen, int max_y_deg = kDefaultMaxYDeg) const;

private:
  template <class F>
  Scalar memo(Family fam, const Word& w, F compute) const;
  void check(const Word& w) const;

  const ReductionTable* table_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<Family, Word>, Scalar> cache_;
};

}  // namespace drinfeld
