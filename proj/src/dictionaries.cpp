#include "rpga/dictionaries.hpp"

#include "rpga/simplex.hpp"

#include <Eigen/QR>
#include <fmt/format.h>

#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

namespace rpga {

namespace {

constexpr double kUnitTolerance = 1e-12;
constexpr int kRandomRetries = 16;

Eigen::MatrixXd gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  // Column-major fill keeps atom j's draws contiguous in the stream.
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = normal(rng);
  return m;
}

std::vector<Vector> columns_of(const Eigen::MatrixXd& m) {
  std::vector<Vector> atoms;
  atoms.reserve(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) atoms.emplace_back(Eigen::VectorXd(m.col(j)));
  return atoms;
}

}  // namespace

std::string_view to_string(DictionaryKind kind) {
  switch (kind) {
    case DictionaryKind::canonical_basis: return "canonical_basis";
    case DictionaryKind::union_of_bases: return "union_of_bases";
    case DictionaryKind::random_unit: return "random_unit";
    case DictionaryKind::custom: return "custom";
  }
  return "custom";
}

DictionaryKind parse_dictionary_kind(std::string_view name) {
  if (name == "canonical_basis") return DictionaryKind::canonical_basis;
  if (name == "union_of_bases") return DictionaryKind::union_of_bases;
  if (name == "random_unit") return DictionaryKind::random_unit;
  if (name == "custom") return DictionaryKind::custom;
  throw std::invalid_argument(fmt::format("unknown dictionary kind '{}'", name));
}

std::size_t matrix_rank(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(1e-10);
  return static_cast<std::size_t>(qr.rank());
}

Dictionary::Dictionary(std::vector<Vector> atoms, DictionaryKind kind) : kind_(kind) {
  if (atoms.empty()) throw std::invalid_argument("dictionary needs at least one atom");
  const std::size_t n = atoms.front().size();
  atoms_.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(atoms.size()));
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    require_same_dimension(n, atoms[j].size(), "dictionary atom");
    const double len = norm(atoms[j]);
    if (std::abs(len - 1.0) > kUnitTolerance)
      throw std::invalid_argument(fmt::format("atom {} has norm {:.17g}, expected 1", j, len));
    atoms_.col(static_cast<Eigen::Index>(j)) = atoms[j].values();
  }
  spans_ = matrix_rank(atoms_) == n;
  if (!spans_ && kind_ != DictionaryKind::custom)
    throw std::invalid_argument(fmt::format("{} dictionary does not span R^{}", to_string(kind_), n));
}

Vector Dictionary::atom(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("atom index out of range");
  return Vector(Eigen::VectorXd(atoms_.col(static_cast<Eigen::Index>(i))));
}

Eigen::VectorXd Dictionary::inner_products(const Vector& g) const {
  require_same_dimension(dimension(), g.size(), "inner_products");
  return atoms_.transpose() * g.values();
}

Dictionary canonical_basis(std::size_t n) {
  if (n == 0) throw std::invalid_argument("canonical_basis: n must be positive");
  std::vector<Vector> atoms;
  atoms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(Vector::basis(n, i));
  return Dictionary(std::move(atoms), DictionaryKind::canonical_basis);
}

Dictionary union_of_bases(std::span<const Dictionary> bases) {
  if (bases.empty()) throw std::invalid_argument("union_of_bases: no bases given");
  if (bases.size() == 1) return bases.front();
  std::vector<Vector> atoms;
  for (const Dictionary& b : bases) {
    require_same_dimension(bases.front().dimension(), b.dimension(), "union_of_bases");
    for (std::size_t i = 0; i < b.size(); ++i) atoms.push_back(b.atom(i));
  }
  return Dictionary(std::move(atoms), DictionaryKind::union_of_bases);
}

Dictionary random_unit(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_unit: n must be positive");
  if (count < n) throw std::invalid_argument(fmt::format("random_unit: count {} < dimension {}", count, n));
  for (int attempt = 0; attempt < kRandomRetries; ++attempt) {
    Eigen::MatrixXd m = gaussian_matrix(n, count, seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL);
    bool zero_column = false;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double len = m.col(j).norm();
      if (len == 0.0) {
        zero_column = true;
        break;
      }
      m.col(j) /= len;
    }
    if (zero_column || matrix_rank(m) < n) continue;
    return Dictionary(columns_of(m), DictionaryKind::random_unit);
  }
  throw std::runtime_error(fmt::format("random_unit: no spanning sample after {} attempts", kRandomRetries));
}

Dictionary random_orthonormal_basis(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_orthonormal_basis: n must be positive");
  const Eigen::MatrixXd g = gaussian_matrix(n, n, seed);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(g.rows(), g.cols());
  for (Eigen::Index j = 0; j < q.cols(); ++j) q.col(j).normalize();
  return Dictionary(columns_of(q), DictionaryKind::custom);
}

double l1_seminorm_upper_bound(const Dictionary& d, const Vector& x) {
  require_same_dimension(d.dimension(), x.size(), "l1_seminorm_upper_bound");
  if (d.kind() == DictionaryKind::canonical_basis) return x.values().lpNorm<1>();
  if (x.values().isZero(0.0)) return 0.0;
  return min_l1_representation(d.matrix(), x.values()).l1_norm;
}

void save_dictionary(std::ostream& out, const Dictionary& d) {
  out << d.dimension() << ' ' << d.size() << ' ' << to_string(d.kind()) << '\n';
  for (std::size_t j = 0; j < d.size(); ++j) {
    const auto col = d.matrix().col(static_cast<Eigen::Index>(j));
    for (Eigen::Index i = 0; i < col.size(); ++i) out << (i ? " " : "") << fmt::format("{:.17g}", col[i]);
    out << '\n';
  }
}

Dictionary load_dictionary(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("dictionary file: missing header");
  std::istringstream hs(header);
  std::size_t n = 0;
  std::size_t count = 0;
  std::string kind_name;
  if (!(hs >> n >> count >> kind_name) || n == 0 || count == 0)
    throw std::runtime_error("dictionary file: header must be 'n count kind'");
  const DictionaryKind kind = parse_dictionary_kind(kind_name);

  std::vector<Vector> atoms;
  atoms.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      if (!(in >> v[static_cast<Eigen::Index>(i)]))
        throw std::runtime_error(fmt::format("dictionary file: atom {} is truncated", j));
    }
    const double len = v.norm();
    if (!(len > 0.0) || !std::isfinite(len)) throw std::runtime_error(fmt::format("dictionary file: atom {} is zero", j));
    atoms.emplace_back(Eigen::VectorXd(v / len));
  }
  return Dictionary(std::move(atoms), kind);
}

}  // namespace rpga
