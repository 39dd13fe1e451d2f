#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "wdg/linalg.hpp"
#include "wdg/wdigraph.hpp"
#include "wdg/wgraph.hpp"

namespace wdg {

using AlgStruct = std::variant<WDigraph, WGraph>;

const CoxeterMatrix& struct_cm(const AlgStruct& s);
std::size_t struct_dim(const AlgStruct& s);
Rep struct_action(const AlgStruct& s);
std::map<GenSet, std::size_t> struct_n_table(const AlgStruct& s);
std::string struct_kind(const AlgStruct& s);

struct SideInvariants {
  std::string kind;
  std::size_t dimension = 0;
  std::map<GenSet, std::size_t> n_table;
  std::size_t ind_dim = 0;
  std::size_t sgn_dim = 0;
  std::optional<std::size_t> components;
  std::optional<std::size_t> acyclic_components;
  std::optional<std::size_t> ind_comb;
  std::optional<std::size_t> sgn_comb;
  std::vector<std::pair<Word, RatFun>> traces;  // words of length 1..L
};

SideInvariants side_invariants(const AlgStruct& s, std::size_t max_word_len);

struct InvariantReport {
  SideInvariants a, b;
  // Exact non-isomorphism witnesses.
  std::vector<std::string> mismatches;
  bool compatible() const { return mismatches.empty(); }
};

// Requires equal Coxeter matrices (throws std::invalid_argument).
InvariantReport invariant_report(const AlgStruct& a, const AlgStruct& b,
                                 std::size_t max_word_len = 4);

struct IsoCertificate {
  Matrix a;     // intertwiner: rho_b(T_s) A = A rho_a(T_s) for all s
  RatFun det;   // nonzero
  std::uint64_t seed = 0;
  std::vector<long> coeffs;  // hom-basis combination that produced A
};

enum class IsoOutcome { certificate, not_isomorphic, inconclusive };

struct IsoResult {
  IsoOutcome outcome = IsoOutcome::inconclusive;
  std::optional<IsoCertificate> cert;
  std::string reason;
  std::size_t hom_dim = 0;
  std::size_t tries_used = 0;
};

// Deterministic given (seed, tries): tries the all-ones combination of the
// hom basis first, then random coefficient vectors from {-R..R}^k with R
// widening every few attempts. Never reports non-isomorphism from sampling
// failure alone.
IsoResult find_iso(const AlgStruct& a, const AlgStruct& b,
                   std::uint64_t seed = 1, std::size_t tries = 64);

// Exact re-check of the intertwining identities, the stored determinant,
// and its nonvanishing. Empty result means the certificate is valid.
std::vector<std::string> verify_certificate(const AlgStruct& a,
                                            const AlgStruct& b,
                                            const IsoCertificate& cert);

struct TheoremAssertion {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct TheoremReport {
  std::vector<TheoremAssertion> assertions;
  bool passed() const;
};

// Checks the full set of conclusions for a certified digraph/W-graph pair:
// equal N tables for every subset, acyclicity, the sgn-count chain, the
// restriction identities, and sources >= components. Throws
// std::invalid_argument on an unverifiable certificate or infinite orders.
TheoremReport theorem_check(const WDigraph& g, const WGraph& p,
                            const IsoCertificate& cert);

}  // namespace wdg
