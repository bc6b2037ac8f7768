#include "lieforge/derivation.hpp"

#include <map>
#include <stdexcept>

namespace lieforge {

HomDerivation::HomDerivation(int rank, int degree) : degree_(degree) {
  images_.reserve(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) images_.emplace_back(rank);
}

HomDerivation::HomDerivation(int degree, std::vector<LieElement> images)
    : degree_(degree), images_(std::move(images)) {
  for (const auto& x : images_) {
    if (x.rank() != rank()) throw std::invalid_argument("HomDerivation: image rank differs");
    if (!x.is_zero() && (!x.is_homogeneous() || x.degree() != degree + 1))
      throw std::invalid_argument("HomDerivation: images must be homogeneous of degree k+1");
  }
}

HomDerivation HomDerivation::tangential(int degree, const std::vector<LieElement>& t) {
  const int n = static_cast<int>(t.size());
  std::vector<LieElement> im;
  im.reserve(t.size());
  for (int i = 1; i <= n; ++i) im.push_back(lie_bracket(LieElement::generator(n, i), t[static_cast<std::size_t>(i - 1)]));
  return HomDerivation(degree, std::move(im));
}

void HomDerivation::set_image(int i, LieElement x) {
  if (x.rank() != rank()) throw std::invalid_argument("HomDerivation::set_image: rank mismatch");
  if (!x.is_zero() && (!x.is_homogeneous() || x.degree() != degree_ + 1))
    throw std::invalid_argument("HomDerivation::set_image: image must be homogeneous of degree k+1");
  images_.at(static_cast<std::size_t>(i - 1)) = std::move(x);
}

bool HomDerivation::is_zero() const {
  for (const auto& x : images_)
    if (!x.is_zero()) return false;
  return true;
}

HomDerivation& HomDerivation::operator+=(const HomDerivation& o) {
  if (o.rank() != rank() || o.degree_ != degree_) throw std::invalid_argument("HomDerivation: shape mismatch");
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] += o.images_[i];
  return *this;
}

HomDerivation& HomDerivation::operator-=(const HomDerivation& o) {
  if (o.rank() != rank() || o.degree_ != degree_) throw std::invalid_argument("HomDerivation: shape mismatch");
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] -= o.images_[i];
  return *this;
}

HomDerivation operator*(const BigInt& s, const HomDerivation& d) {
  HomDerivation out = d;
  for (auto& x : out.images_) x = s * x;
  return out;
}

std::string HomDerivation::str() const {
  std::string s;
  for (int i = 1; i <= rank(); ++i) {
    if (i > 1) s += ", ";
    s += "X" + std::to_string(i) + " -> " + image(i).str();
  }
  return s;
}

// ---------------------------------------------------------------------------

const LieElement& DerivationAction::on_basis(const Word& w) {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  LieElement out(d_.rank());
  if (w.size() == 1) {
    out = d_.image(w[0]);
  } else {
    const auto [u, v] = standard_factorization(w);
    const LieElement& du = on_basis(u);
    const LieElement& dv = on_basis(v);
    out = lie_bracket(du, LieElement::basis(d_.rank(), v));
    out += lie_bracket(LieElement::basis(d_.rank(), u), dv);
  }
  return memo_.emplace(w, std::move(out)).first->second;
}

LieElement DerivationAction::operator()(const LieElement& a) {
  if (a.rank() != d_.rank()) throw std::invalid_argument("apply_derivation: rank mismatch");
  LieElement out(a.rank());
  for (const auto& [w, c] : a.terms()) out += c * on_basis(w);
  return out;
}

LieElement apply_derivation(const HomDerivation& d, const LieElement& a) { return DerivationAction(d)(a); }

HomDerivation der_bracket(const HomDerivation& d1, const HomDerivation& d2) {
  if (d1.rank() != d2.rank()) throw std::invalid_argument("der_bracket: rank mismatch");
  DerivationAction a1(d1);
  DerivationAction a2(d2);
  std::vector<LieElement> im;
  im.reserve(static_cast<std::size_t>(d1.rank()));
  for (int i = 1; i <= d1.rank(); ++i) im.push_back(a1(d2.image(i)) - a2(d1.image(i)));
  return HomDerivation(d1.degree() + d2.degree(), std::move(im));
}

LieElement ev_boundary(const HomDerivation& d) {
  LieElement out(d.rank());
  for (const auto& x : d.images()) out += x;
  return out;
}

HomDerivation ad_derivation(const LieElement& x) {
  if (x.is_zero()) throw std::invalid_argument("ad_derivation: degree of the zero element is undefined");
  const int n = x.rank();
  std::vector<LieElement> im;
  for (int i = 1; i <= n; ++i) im.push_back(lie_bracket(x, LieElement::generator(n, i)));
  return HomDerivation(x.degree(), std::move(im));
}

// ---------------------------------------------------------------------------

std::size_t derivation_dim(int n, int k) {
  return static_cast<std::size_t>(n) * lyndon_index(n, k + 1).size();
}

SparseIntVector derivation_coordinates(const HomDerivation& d) {
  const std::size_t block = lyndon_index(d.rank(), d.degree() + 1).size();
  SparseIntVector v;
  for (int i = 1; i <= d.rank(); ++i) {
    const SparseIntVector part = lie_coordinates(d.image(i), d.degree() + 1);
    for (const auto& [pos, c] : part.entries()) v.push_back(static_cast<std::size_t>(i - 1) * block + pos, c);
  }
  return v;
}

HomDerivation derivation_from_coordinates(int n, int k, const SparseIntVector& v) {
  const std::size_t block = lyndon_index(n, k + 1).size();
  std::vector<SparseIntVector> parts(static_cast<std::size_t>(n));
  for (const auto& [pos, c] : v.entries()) {
    const std::size_t i = pos / block;
    if (i >= parts.size()) throw std::out_of_range("derivation_from_coordinates: index beyond ambient space");
    parts[i].push_back(pos % block, c);
  }
  std::vector<LieElement> im;
  for (const auto& p : parts) im.push_back(lie_from_coordinates(n, k + 1, p));
  return HomDerivation(k, std::move(im));
}

HomDerivation TangentialBasis::derivation(std::size_t c) const {
  const auto& [i, u] = coords.at(c);
  HomDerivation d(n, k);
  d.set_image(i, lie_bracket(LieElement::generator(n, i), LieElement::basis(n, u)));
  return d;
}

std::vector<HomDerivation> TangentialBasis::derivations() const {
  std::vector<HomDerivation> out;
  out.reserve(coords.size());
  for (std::size_t c = 0; c < coords.size(); ++c) out.push_back(derivation(c));
  return out;
}

HomDerivation TangentialBasis::combine(const SparseIntVector& v) const {
  HomDerivation d(n, k);
  for (const auto& [c, x] : v.entries()) d += x * derivation(c);
  return d;
}

TangentialBasis tangential_basis(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("tangential_basis: n and k must be positive");
  TangentialBasis tb{n, k, {}};
  for (int i = 1; i <= n; ++i) {
    if (k == 1) {
      for (int j = 1; j <= n; ++j)
        if (j != i) tb.coords.emplace_back(i, Word::letter(j));
    } else {
      for (const Word& u : lyndon_index(n, k).words()) tb.coords.emplace_back(i, u);
    }
  }
  return tb;
}

namespace {

// Tangential coordinates grouped by the multidegree of [X_i, P_u]; the
// boundary evaluation is block-diagonal for this grading.
std::map<std::vector<int>, std::vector<std::size_t>> boundary_blocks(const TangentialBasis& tb) {
  std::map<std::vector<int>, std::vector<std::size_t>> blocks;
  for (std::size_t c = 0; c < tb.size(); ++c) {
    const auto& [i, u] = tb.coords[c];
    auto md = multidegree(u, tb.n);
    ++md[static_cast<std::size_t>(i - 1)];
    blocks[md].push_back(c);
  }
  return blocks;
}

SparseIntVector boundary_column(const TangentialBasis& tb, std::size_t c) {
  const auto& [i, u] = tb.coords[c];
  return lie_coordinates(lie_bracket(LieElement::generator(tb.n, i), LieElement::basis(tb.n, u)), tb.k + 1);
}

}  // namespace

IntLattice braidlike_lattice(int n, int k) {
  const TangentialBasis tb = tangential_basis(n, k);
  const std::size_t target = lyndon_index(n, k + 1).size();
  std::vector<SparseIntVector> gens;
  for (const auto& [md, cols] : boundary_blocks(tb)) {
    std::vector<SparseIntVector> columns;
    columns.reserve(cols.size());
    for (std::size_t c : cols) columns.push_back(boundary_column(tb, c));
    const IntLattice block_kernel = kernel_of_columns(target, columns);
    for (const auto& row : block_kernel.rows()) {
      SparseIntVector g;
      for (const auto& [j, x] : row.entries()) g.push_back(cols[j], x);
      gens.push_back(std::move(g));
    }
  }
  return IntLattice::from_generators(tb.size(), gens);
}

IntLattice braidlike_image_lattice(int n, int k) {
  const TangentialBasis tb = tangential_basis(n, k);
  std::vector<SparseIntVector> columns;
  columns.reserve(tb.size());
  for (std::size_t c = 0; c < tb.size(); ++c) columns.push_back(derivation_coordinates(tb.derivation(c)));
  return lattice_image(braidlike_lattice(n, k), columns, derivation_dim(n, k));
}

IntLattice ev_boundary_image(int n, int k) {
  const TangentialBasis tb = tangential_basis(n, k);
  const std::size_t target = lyndon_index(n, k + 1).size();
  // Blocks land on disjoint coordinates, so their echelon rows just collect.
  std::vector<SparseIntVector> gens;
  for (const auto& [md, cols] : boundary_blocks(tb)) {
    LatticeBuilder b(target);
    for (std::size_t c : cols) b.insert(boundary_column(tb, c));
    for (const auto& [p, row] : b.rows()) gens.push_back(row);
  }
  return IntLattice::from_generators(target, gens);
}

IntLattice ad_lattice(int n, int k) {
  LatticeBuilder b(derivation_dim(n, k));
  for (const Word& u : lyndon_index(n, k).words())
    b.insert(derivation_coordinates(ad_derivation(LieElement::basis(n, u))));
  return b.build();
}

IntLattice inner_cap_braidlike(int n, int k) {
  // ad(x) is tangential with t_i = -x, so it is braid-like iff [x, X_1+...+X_n] = 0.
  return centralizer_of_linear(boundary_element(n), k);
}

}  // namespace lieforge
