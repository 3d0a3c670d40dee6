#pragma once

#include "rpga/core.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace rpga {

enum class DictionaryKind { canonical_basis, union_of_bases, random_unit, custom };

std::string_view to_string(DictionaryKind kind);
DictionaryKind parse_dictionary_kind(std::string_view name);

/// Finite, indexed collection of unit-norm atoms in R^n.
///
/// Atoms are stored as the columns of an n x count matrix. Every atom has
/// norm 1 within 1e-12. Non-custom dictionaries must span R^n; custom ones
/// may not, and `spans()` reports which case holds.
class Dictionary {
 public:
  Dictionary(std::vector<Vector> atoms, DictionaryKind kind);

  std::size_t dimension() const { return static_cast<std::size_t>(atoms_.rows()); }
  std::size_t size() const { return static_cast<std::size_t>(atoms_.cols()); }
  DictionaryKind kind() const { return kind_; }
  bool spans() const { return spans_; }

  Vector atom(std::size_t i) const;
  const Eigen::MatrixXd& matrix() const { return atoms_; }

  /// <g, phi_i> for every atom, in index order.
  Eigen::VectorXd inner_products(const Vector& g) const;

 private:
  Eigen::MatrixXd atoms_;
  DictionaryKind kind_;
  bool spans_ = false;
};

Dictionary canonical_basis(std::size_t n);
/// Concatenates the atom lists; duplicates are kept.
Dictionary union_of_bases(std::span<const Dictionary> bases);
/// `count` Gaussian directions normalized to unit length. Deterministic per seed;
/// rank-deficient draws are regenerated up to a fixed retry cap.
Dictionary random_unit(std::size_t n, std::size_t count, std::uint64_t seed);
/// Random orthonormal basis (QR of a Gaussian matrix), kind custom.
Dictionary random_orthonormal_basis(std::size_t n, std::uint64_t seed);

/// Numerical rank of the columns of `m`.
std::size_t matrix_rank(const Eigen::MatrixXd& m);

/// Minimal sum |c_phi| over finite representations x = sum c_phi phi.
///
/// Exact for the canonical basis (coordinate l1 norm); otherwise solved as a
/// linear program. Throws std::domain_error when x is not in the atom span.
double l1_seminorm_upper_bound(const Dictionary& d, const Vector& x);

/// Plain-text matrix format: header `n count kind`, then one atom per line.
void save_dictionary(std::ostream& out, const Dictionary& d);
/// Atoms are rescaled to unit norm on load; zero atoms are rejected.
Dictionary load_dictionary(std::istream& in);

}  // namespace rpga
