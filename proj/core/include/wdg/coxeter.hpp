#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdg/matrix.hpp"

namespace wdg {

// Subset of the generator set as a bitmask over declaration indices.
using GenSet = std::uint32_t;

inline constexpr unsigned kInfiniteOrder = std::numeric_limits<unsigned>::max();

// The function n(r,s) on a finite ordered generator set. n(s,s) = 1 is
// implicit; off-diagonal entries are set explicitly (0 = not yet set, which
// validate_coxeter_matrix reports).
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  explicit CoxeterMatrix(std::vector<std::string> generators);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& generators() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index(const std::string& name) const;

  // Throws std::invalid_argument on i == j, out of range, or double set.
  void set_order(std::size_t i, std::size_t j, unsigned m);
  unsigned order(std::size_t i, std::size_t j) const;

  bool all_orders_finite() const;
  GenSet full_set() const;
  CoxeterMatrix restricted(GenSet J) const;  // J must be a subset of S

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<unsigned> orders_;  // full symmetric storage
};

// Invariant check; violations returned as data. With require_finite,
// infinite entries are flagged too.
std::vector<std::string> validate_coxeter_matrix(const CoxeterMatrix& cm,
                                                 bool require_finite = false);

using Word = std::vector<std::string>;

// (rsrs..., srsr...), m letters each; throws std::invalid_argument if m < 2.
std::pair<Word, Word> braid_word(const std::string& r, const std::string& s,
                                 unsigned m);

struct LinearChar {
  std::map<std::string, RatFun> values;
};

LinearChar ind_char(const CoxeterMatrix& cm);  // T_s -> u^2
LinearChar sgn_char(const CoxeterMatrix& cm);  // T_s -> -1

// Product of character values over the letters; throws on unknown generator.
RatFun char_on_word(const LinearChar& chi, const Word& w);

// Generator matrices in cm declaration order.
using Rep = std::vector<Matrix>;

struct RepCheck {
  std::vector<std::string> violations;
  // Pairs whose braid relation could not be checked (infinite order).
  std::vector<std::pair<std::string, std::string>> unchecked;
  bool ok() const { return violations.empty(); }
};

// Verifies (rho_s - u^2 I)(rho_s + I) = 0 for each s and, for each pair with
// n(r,s) finite, the alternating-product braid identity.
RepCheck check_representation(const CoxeterMatrix& cm, const Rep& rho);

// Trace of rho(T_{w_1}) ... rho(T_{w_k}); throws on unknown generator.
RatFun char_trace(const CoxeterMatrix& cm, const Rep& rho, const Word& w);

// Rendering helper: "{}", "{s}", "{s,t}" with names sorted lexicographically.
std::string subset_to_string(const CoxeterMatrix& cm, GenSet J);

// All subsets of {0,..,n-1}, sorted by (size, lexicographic name list).
std::vector<GenSet> subsets_sorted(const CoxeterMatrix& cm);

}  // namespace wdg
