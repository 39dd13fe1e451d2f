#include "wdg/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace wdg {

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> generators)
    : names_(std::move(generators)), orders_(names_.size() * names_.size(), 0) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    orders_[i * names_.size() + i] = 1;
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw std::invalid_argument("coxeter: duplicate generator '" +
                                    names_[i] + "'");
}

std::optional<std::size_t> CoxeterMatrix::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void CoxeterMatrix::set_order(std::size_t i, std::size_t j, unsigned m) {
  if (i >= size() || j >= size())
    throw std::invalid_argument("coxeter: generator index out of range");
  if (i == j) throw std::invalid_argument("coxeter: cannot set n(s,s)");
  if (orders_[i * size() + j] != 0)
    throw std::invalid_argument("coxeter: order for {" + names_[i] + "," +
                                names_[j] + "} already set");
  orders_[i * size() + j] = m;
  orders_[j * size() + i] = m;
}

unsigned CoxeterMatrix::order(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size())
    throw std::invalid_argument("coxeter: generator index out of range");
  return orders_[i * size() + j];
}

bool CoxeterMatrix::all_orders_finite() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (order(i, j) == kInfiniteOrder || order(i, j) == 0) return false;
  return true;
}

GenSet CoxeterMatrix::full_set() const {
  return size() == 0 ? 0 : (GenSet{1} << size()) - 1;
}

CoxeterMatrix CoxeterMatrix::restricted(GenSet J) const {
  if ((J & ~full_set()) != 0)
    throw std::invalid_argument("coxeter: restriction set not a subset");
  std::vector<std::size_t> keep;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size(); ++i)
    if (J & (GenSet{1} << i)) {
      keep.push_back(i);
      names.push_back(names_[i]);
    }
  CoxeterMatrix r(names);
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      const unsigned m = order(keep[a], keep[b]);
      if (m != 0) r.set_order(a, b, m);
    }
  return r;
}

std::vector<std::string> validate_coxeter_matrix(const CoxeterMatrix& cm,
                                                 bool require_finite) {
  std::vector<std::string> violations;
  if (cm.size() == 0) violations.push_back("empty generator set");
  for (std::size_t i = 0; i < cm.size(); ++i)
    for (std::size_t j = i + 1; j < cm.size(); ++j) {
      const unsigned m = cm.order(i, j);
      const std::string pair =
          "{" + cm.name(i) + "," + cm.name(j) + "}";
      if (m == 0)
        violations.push_back("missing order for " + pair);
      else if (m < 2)
        violations.push_back("order " + std::to_string(m) + " for " + pair +
                             " violates 1 < n(r,s)");
      else if (require_finite && m == kInfiniteOrder)
        violations.push_back("infinite order for " + pair +
                             " where finiteness is required");
    }
  return violations;
}

std::pair<Word, Word> braid_word(const std::string& r, const std::string& s,
                                 unsigned m) {
  if (m < 2) throw std::invalid_argument("braid_word: m must be at least 2");
  Word a, b;
  for (unsigned i = 0; i < m; ++i) {
    a.push_back(i % 2 == 0 ? r : s);
    b.push_back(i % 2 == 0 ? s : r);
  }
  return {a, b};
}

LinearChar ind_char(const CoxeterMatrix& cm) {
  LinearChar chi;
  const RatFun u2 = RatFun::u() * RatFun::u();
  for (const auto& name : cm.generators()) chi.values[name] = u2;
  return chi;
}

LinearChar sgn_char(const CoxeterMatrix& cm) {
  LinearChar chi;
  for (const auto& name : cm.generators()) chi.values[name] = RatFun(-1);
  return chi;
}

RatFun char_on_word(const LinearChar& chi, const Word& w) {
  RatFun value(1);
  for (const auto& letter : w) {
    auto it = chi.values.find(letter);
    if (it == chi.values.end())
      throw std::invalid_argument("character: unknown generator '" + letter +
                                  "'");
    value *= it->second;
  }
  return value;
}

namespace {

Matrix alternating_product(const Matrix& first, const Matrix& second,
                           unsigned m) {
  Matrix prod = Matrix::identity(first.rows());
  for (unsigned i = 0; i < m; ++i) prod = prod * (i % 2 == 0 ? first : second);
  return prod;
}

}  // namespace

RepCheck check_representation(const CoxeterMatrix& cm, const Rep& rho) {
  if (rho.size() != cm.size())
    throw std::invalid_argument("check_representation: generator count mismatch");
  RepCheck result;
  std::size_t n = 0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (rho[i].rows() != rho[i].cols())
      throw std::invalid_argument("check_representation: non-square matrix");
    if (i == 0)
      n = rho[i].rows();
    else if (rho[i].rows() != n)
      throw std::invalid_argument("check_representation: size mismatch");
  }

  const RatFun u2 = RatFun::u() * RatFun::u();
  const Matrix id = Matrix::identity(n);
  for (std::size_t s = 0; s < rho.size(); ++s) {
    const Matrix quad = (rho[s] - u2 * id) * (rho[s] + id);
    if (!quad.is_zero())
      result.violations.push_back("quadratic relation fails for " +
                                  cm.name(s));
  }
  for (std::size_t r = 0; r < rho.size(); ++r)
    for (std::size_t s = r + 1; s < rho.size(); ++s) {
      const unsigned m = cm.order(r, s);
      if (m == 0 || m == kInfiniteOrder) {
        result.unchecked.emplace_back(cm.name(r), cm.name(s));
        continue;
      }
      if (alternating_product(rho[r], rho[s], m) !=
          alternating_product(rho[s], rho[r], m))
        result.violations.push_back("braid relation of length " +
                                    std::to_string(m) + " fails for {" +
                                    cm.name(r) + "," + cm.name(s) + "}");
    }
  return result;
}

RatFun char_trace(const CoxeterMatrix& cm, const Rep& rho, const Word& w) {
  std::size_t n = rho.empty() ? 0 : rho[0].rows();
  Matrix prod = Matrix::identity(n);
  for (const auto& letter : w) {
    const auto idx = cm.index(letter);
    if (!idx) throw std::invalid_argument("trace: unknown generator '" + letter + "'");
    prod = prod * rho[*idx];
  }
  return prod.trace();
}

std::string subset_to_string(const CoxeterMatrix& cm, GenSet J) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < cm.size(); ++i)
    if (J & (GenSet{1} << i)) names.push_back(cm.name(i));
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  out += "}";
  return out;
}

std::vector<GenSet> subsets_sorted(const CoxeterMatrix& cm) {
  std::vector<GenSet> all;
  for (GenSet J = 0; J <= cm.full_set(); ++J) {
    all.push_back(J);
    if (J == cm.full_set()) break;
  }
  std::stable_sort(all.begin(), all.end(), [&](GenSet a, GenSet b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return subset_to_string(cm, a) < subset_to_string(cm, b);
  });
  return all;
}

}  // namespace wdg
