#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "webflat/field.hpp"

namespace webflat {

// Cooperative resource guard for the polynomial kernel. The CLI installs a
// deadline / term budget; long-running kernels check it between term-merge
// batches and abort with ErrorCode::ResourceLimit.
struct ComputeLimits {
  std::size_t max_terms = 5'000'000;
  long long deadline_ms = -1; // epoch milliseconds of steady clock, -1 = none
};
ComputeLimits& compute_limits();
void check_limits(std::size_t live_terms);

using VarSet = std::vector<std::string>;
using Ring = std::shared_ptr<const VarSet>;

Ring make_ring(std::vector<std::string> names);
bool same_ring(const Ring& a, const Ring& b);
int var_index(const Ring& r, const std::string& name); // -1 when absent

using Monomial = std::vector<std::uint32_t>;

// graded lexicographic, descending (leading term first)
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MPoly {
public:
  using TermMap = std::map<Monomial, FieldElem, GrlexGreater>;

  MPoly() = default;
  explicit MPoly(Ring ring) : ring_(std::move(ring)) {}
  static MPoly constant(Ring ring, const FieldElem& c);
  static MPoly variable(Ring ring, const std::string& name);
  static MPoly variable(Ring ring, int index);
  static MPoly from_terms(Ring ring, TermMap terms);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  int nvars() const { return ring_ ? static_cast<int>(ring_->size()) : 0; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  FieldElem constant_value() const; // requires is_constant (zero poly -> 0)

  int total_degree() const;            // -1 for the zero polynomial
  int degree(int var) const;           // -1 for the zero polynomial
  bool is_homogeneous() const;

  const FieldElem& leading_coefficient() const; // grlex leading term
  const Monomial& leading_monomial() const;

  // coefficient of var^k, a polynomial in the remaining variables (same ring)
  MPoly coefficient_of(int var, int k) const;
  FieldElem coefficient(const Monomial& m) const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly operator*(const FieldElem& c) const;
  MPoly pow(unsigned e) const;

  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  // f == c*g for some nonzero field constant c
  bool proportional_to(const MPoly& o) const;

  MPoly derivative(int var) const;
  MPoly derivative(const std::string& var) const;

  // simultaneous substitution; every unbound variable must exist (by name) in
  // the target ring
  MPoly substitute(const std::map<std::string, MPoly>& bindings, const Ring& target) const;
  MPoly substitute(const std::map<std::string, MPoly>& bindings) const;
  FieldElem evaluate(const std::vector<FieldElem>& point) const;

  // rename/permute variables into target ring by name
  MPoly into_ring(const Ring& target) const;

  std::string str() const;

private:
  void insert_term(const Monomial& m, const FieldElem& c);

  Ring ring_;
  TermMap terms_;
  friend MPoly add_scaled(const MPoly& f, const MPoly& g, const FieldElem& c);
};

std::ostream& operator<<(std::ostream& os, const MPoly& f);

// f + c*g in one pass
MPoly add_scaled(const MPoly& f, const MPoly& g, const FieldElem& c);

// exact division; nullopt when g does not divide f
std::optional<MPoly> divexact(const MPoly& f, const MPoly& g);

// pseudo-remainder: lc_v(g)^(deg_v f - deg_v g + 1) * f  =  q*g + r
MPoly prem(const MPoly& f, const MPoly& g, int var);

// gcd, normalized so the grlex leading coefficient is 1; gcd(0,0) = 0
MPoly gcd(const MPoly& f, const MPoly& g);

// content of f wrt var (gcd of the var-coefficients) and primitive part
MPoly content(const MPoly& f, int var);
MPoly primitive_part(const MPoly& f, int var);

// gcd of a list (normalized monic)
MPoly gcd_list(const std::vector<MPoly>& fs);

// Sylvester-matrix resultant eliminating var (fraction-free Bareiss)
MPoly resultant(const MPoly& f, const MPoly& g, int var);

// determinant of a square matrix of polynomials in one common ring
MPoly determinant(std::vector<std::vector<MPoly>> m);

// squarefree decomposition of a univariate polynomial or a binary form:
// f = unit * prod S_k^k, pairwise coprime squarefree S_k (trivial S_k omitted)
std::vector<std::pair<int, MPoly>> squarefree_decomposition(const MPoly& f);

struct FieldRoots {
  std::vector<std::pair<FieldElem, int>> roots; // (root, multiplicity)
  MPoly residual;                               // what did not split over the field
};
// roots of a univariate polynomial that lie in Q(i, sqrt3)
FieldRoots find_field_roots(const MPoly& f);

// roots of a binary form as projective directions [a:b] with multiplicity;
// residual collects factors that do not split
struct DirectionRoots {
  std::vector<std::pair<std::pair<FieldElem, FieldElem>, int>> roots;
  MPoly residual;
};
DirectionRoots binary_form_roots(const MPoly& f, int var_x, int var_y);

// z^pad * homogenization of f(x, y) into (x, y, z)-like rings
MPoly homogenize(const MPoly& f, const Ring& target, int hz, int target_degree);

// JSON: {ring:[vars], terms:[{exp:[...], coeff:{c0..c3 as strings}}]}
std::string mpoly_to_json(const MPoly& f);

} // namespace webflat
