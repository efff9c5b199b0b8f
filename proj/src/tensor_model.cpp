#include "spw/tensor_model.hpp"

#include <stdexcept>

namespace spw {

TensorModel::TensorModel(const Field& f, int n, const FqMatrix& beta, FqRaw a, std::size_t cache_entries)
    : f_(&f), n_(n), k_(beta.rows()), beta_(beta), a_(a), dim_(1) {
  if (a == 0) throw std::invalid_argument("central character trivial");
  if (!beta.is_square()) throw std::invalid_argument("beta not square");
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j)
      if (i != j && beta(i, j) != 0) throw std::invalid_argument("beta not diagonal");
  for (int i = 0; i < n * k_; ++i) {
    dim_ *= static_cast<uint64_t>(f.q());
    if (dim_ > (uint64_t(1) << 31)) throw std::length_error("tensor model too large");
  }
  std::map<FqRaw, std::shared_ptr<SchrodingerRep>> reps;
  for (int j = 0; j < k_; ++j) {
    FqRaw b = beta(j, j);
    if (b == 0) throw std::invalid_argument("beta degenerate");
    auto& r = reps[b];
    if (!r) r = std::make_shared<SchrodingerRep>(f, n, f.mul(a, b), cache_entries);
    rows_.push_back(r);
  }
}

FqMatrix TensorModel::map_at(uint64_t idx) const {
  return FqMatrix(*f_, k_, n_, vector_at(*f_, k_ * n_, idx));
}

uint64_t TensorModel::index_of(const FqMatrix& t) const {
  if (t.rows() != k_ || t.cols() != n_) throw std::invalid_argument("map dimension mismatch");
  return vector_index(*f_, t.raw());
}

MonomialMatrix TensorModel::n_action(const FqMatrix& a) const {
  const Field& f = *f_;
  MonomialMatrix m = monomial_identity(f.p(), dim_);
  const FqRaw scale = f.mul(a_, f.half());
  for (uint64_t i = 0; i < dim_; ++i) m.exponent[i] = char_of_form_exponent(beta_t(map_at(i), beta_), a, scale);
  return m;
}

MonomialMatrix TensorModel::levi_action(const FqMatrix& c) const {
  const Field& f = *f_;
  FqMatrix ci = inverse(c);
  const bool negate = k_ % 2 == 1 && f.quadratic_character(determinant(c)) < 0;
  MonomialMatrix m = monomial_identity(2, dim_);
  // delta_T -> chi(det C)^k delta_{T C^-1}
  for (uint64_t i = 0; i < dim_; ++i) {
    m.target[i] = static_cast<uint32_t>(index_of(map_at(i) * ci));
    m.exponent[i] = negate;
  }
  return m;
}

MonomialMatrix TensorModel::o_action(const FqMatrix& r) const {
  const Field& f = *f_;
  if (beta_t(r, beta_) != beta_) throw std::invalid_argument("not in the orthogonal group");
  const bool negate = n_ % 2 == 1 && f.quadratic_character(determinant(r)) < 0;
  MonomialMatrix m = monomial_identity(2, dim_);
  // delta_T -> chi(det r)^n delta_{r T}
  for (uint64_t i = 0; i < dim_; ++i) {
    m.target[i] = static_cast<uint32_t>(index_of(r * map_at(i)));
    m.exponent[i] = negate;
  }
  return m;
}

std::vector<Matrix<CycloNum>> TensorModel::sp_factors(const FqMatrix& g) const {
  std::vector<Matrix<CycloNum>> out;
  for (const auto& r : rows_) out.push_back(r->omega(g));
  return out;
}

Matrix<CycloNum> TensorModel::sp_action(const FqMatrix& g) const {
  std::vector<Matrix<CycloNum>> fs = sp_factors(g);
  if (fs.empty()) return Matrix<CycloNum>::identity(1);
  Matrix<CycloNum> m = fs[0];
  for (std::size_t j = 1; j < fs.size(); ++j) m = kron(m, fs[j]);
  return m;
}

CycloNum TensorModel::sp_character(const FqMatrix& g) const {
  CycloNum c = 1;
  for (const auto& r : rows_) c = c * r->character(g);
  return c;
}

CycloNum TensorModel::trace_with(const FqMatrix& g, const MonomialMatrix& r) const {
  if (r.target.size() != dim_) throw std::invalid_argument("matrix dimension mismatch");
  std::vector<Matrix<CycloNum>> fs = sp_factors(g);
  if (fs.empty()) return r.trace();
  const uint64_t block = dim_ / static_cast<uint64_t>(fs[0].rows());
  const uint64_t row_dim = fs[0].rows();
  CycloNum s = CycloNum::zero(f_->p());
  for (uint64_t j = 0; j < dim_; ++j) {
    // (omega R)[j, j] = omega[j, target j] * c_j
    uint64_t row = j, col = r.target[j], b = block;
    CycloNum v = 1;
    for (std::size_t t = 0; t < fs.size() && !v.is_zero(); ++t) {
      v = v * fs[t](static_cast<int>(row / b), static_cast<int>(col / b));
      row %= b;
      col %= b;
      b /= row_dim;
    }
    if (v.is_zero()) continue;
    if (r.exponent[j]) v = v * CycloNum::root_of_unity(r.order, r.exponent[j]);
    s += v;
  }
  return s;
}

TensorRank tensor_rank(const TensorModel& m) {
  TensorRank r;
  for (uint64_t i = 0; i < m.dim(); ++i) ++r.census[classify(beta_t(m.map_at(i), m.beta()))];
  for (const auto& [label, count] : r.census)
    if (count && label.rank > r.rank) r.rank = label.rank;
  for (const auto& [label, count] : r.census)
    if (count && label.rank == r.rank && label.type != FormType::none) r.top_types.insert(label.type);
  return r;
}

}  // namespace spw
