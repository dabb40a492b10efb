#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dt4/error.hpp"

namespace dt4 {

// Exponent vector of a monomial over the variables of a VarTable.
// Exponents are stored in quarter units (4 = first power): brackets halve
// exponents once, nested brackets like [y^{1/2}q] halve twice, and no
// formula in the engine goes finer than 1/4.
struct Mono {
  std::vector<int32_t> e;

  Mono() = default;
  explicit Mono(std::size_t n) : e(n, 0) {}
  explicit Mono(std::vector<int32_t> v) : e(std::move(v)) {}

  std::size_t size() const { return e.size(); }
  bool trivial() const {
    for (int32_t x : e)
      if (x != 0) return false;
    return true;
  }
  Mono inverse() const {
    Mono m = *this;
    for (auto& x : m.e) x = -x;
    return m;
  }
  Mono operator*(const Mono& o) const {
    Mono m = *this;
    for (std::size_t i = 0; i < e.size(); ++i) m.e[i] += o.e[i];
    return m;
  }
  Mono pow_scaled(int32_t k) const {  // m^k for integer k
    Mono m = *this;
    for (auto& x : m.e) x *= k;
    return m;
  }
  // m^{1/2}; only valid on the half lattice of the stored exponents
  Mono half() const {
    Mono m = *this;
    for (auto& x : m.e) {
      if (x % 2 != 0) fail(errc::lattice_violation, "monomial has no square root on the 1/4 lattice");
      x /= 2;
    }
    return m;
  }
  bool operator==(const Mono&) const = default;
  auto operator<=>(const Mono&) const = default;
};

struct MonoHash {
  std::size_t operator()(const Mono& m) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int32_t x : m.e) h = (h ^ static_cast<std::size_t>(static_cast<uint32_t>(x))) * 0x100000001b3ull;
    return h;
  }
};

// Variable universe of a computation: coefficient variables first, then
// series variables. An optional relation eliminates one coefficient
// variable by a monomial substitution (t4 -> (t1 t2 t3)^{-1} on the
// Calabi-Yau torus), which keeps the reduced ring free.
class VarTable {
 public:
  VarTable(std::vector<std::string> coeff, std::vector<std::string> series)
      : names_(std::move(coeff)), n_coeff_(names_.size()) {
    for (auto& s : series) names_.push_back(std::move(s));
  }

  static std::shared_ptr<const VarTable> make(std::vector<std::string> coeff,
                                              std::vector<std::string> series) {
    return std::make_shared<const VarTable>(std::move(coeff), std::move(series));
  }

  std::size_t size() const { return names_.size(); }
  std::size_t coeff_count() const { return n_coeff_; }
  std::size_t series_count() const { return names_.size() - n_coeff_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  bool is_series(std::size_t i) const { return i >= n_coeff_; }

  int index_of(const std::string& nm) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == nm) return static_cast<int>(i);
    return -1;
  }

  // Declares `var` constrained by the integral monomial with exponent vector
  // `image` (quarter units, divisible by 4). With apply=true every stored
  // monomial is rewritten to eliminate the variable; with apply=false the
  // relation only steers evaluation points, so unreduced representatives
  // still evaluate consistently.
  void set_relation(const std::string& var, Mono image, bool apply = true) {
    int i = index_of(var);
    if (i < 0 || is_series(static_cast<std::size_t>(i)))
      fail(errc::bad_input, "relation must eliminate a coefficient variable");
    for (std::size_t k = 0; k < image.size(); ++k) {
      if (image.e[k] % 4 != 0) fail(errc::lattice_violation, "relation image must be integral");
      if (static_cast<int>(k) == i && image.e[k] != 0)
        fail(errc::bad_input, "relation image involves the eliminated variable");
    }
    reduced_var_ = i;
    relation_ = std::move(image);
    apply_ = apply;
  }
  bool has_relation() const { return reduced_var_ >= 0; }
  int reduced_var() const { return reduced_var_; }
  const Mono& relation_image() const { return relation_; }

  // monomial builders -------------------------------------------------------

  Mono unit() const { return Mono(size()); }

  // integral monomial from (name, exponent) pairs, reduced
  Mono mono(std::initializer_list<std::pair<const char*, int>> powers) const {
    Mono m(size());
    for (auto& [nm, p] : powers) {
      int i = index_of(nm);
      if (i < 0) fail(errc::bad_input, std::string("unknown variable ") + nm);
      m.e[static_cast<std::size_t>(i)] += 4 * p;
    }
    return reduce(m);
  }

  Mono var(const std::string& nm, int p = 1) const {
    int i = index_of(nm);
    if (i < 0) fail(errc::bad_input, "unknown variable " + nm);
    Mono m(size());
    m.e[static_cast<std::size_t>(i)] = 4 * p;
    return reduce(m);
  }

  // applies the relation; idempotent
  Mono reduce(Mono m) const {
    if (reduced_var_ < 0 || !apply_) return m;
    int32_t r = m.e[static_cast<std::size_t>(reduced_var_)];
    if (r == 0) return m;
    m.e[static_cast<std::size_t>(reduced_var_)] = 0;
    for (std::size_t k = 0; k < m.size(); ++k) m.e[k] += r * (relation_.e[k] / 4);
    return m;
  }

  bool reduced(const Mono& m) const {
    return reduced_var_ < 0 || !apply_ || m.e[static_cast<std::size_t>(reduced_var_)] == 0;
  }

  // total series degree in quarter units
  int64_t series_degree_quarters(const Mono& m) const {
    int64_t d = 0;
    for (std::size_t i = n_coeff_; i < m.size(); ++i) d += m.e[i];
    return d;
  }
  bool coeff_only(const Mono& m) const {
    for (std::size_t i = n_coeff_; i < m.size(); ++i)
      if (m.e[i] != 0) return false;
    return true;
  }

  std::string mono_str(const Mono& m) const;

 private:
  std::vector<std::string> names_;
  std::size_t n_coeff_;
  int reduced_var_ = -1;
  Mono relation_;
  bool apply_ = true;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

// The standard Calabi-Yau reduced table on t1..t4, y plus the given series
// variables: t4 is eliminated by t4 = (t1 t2 t3)^{-1}.
VarTablePtr cy_table(std::vector<std::string> series_vars, bool reduce_t4 = true);

// Equivariant-cohomology table on l1, l2, l3, m (l4 = -l1-l2-l3 is
// eliminated structurally when linear forms are built).
VarTablePtr cohom_table(std::vector<std::string> series_vars);

}  // namespace dt4
