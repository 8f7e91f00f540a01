#include "freeconv/weingarten.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace freeconv {

double WeingartenTable::value(const Permutation& p) const {
  if (p.degree() != n) throw std::invalid_argument("degree mismatch in Weingarten lookup");
  const ConjugacyClasses& cc = conjugacy_classes(n);
  return class_values[static_cast<std::size_t>(cc.class_of_rank[perm_rank(p)])];
}

GroupAlgebraElement WeingartenTable::element() const {
  const ConjugacyClasses& cc = conjugacy_classes(n);
  GroupAlgebraElement e(n);
  for (std::size_t r = 0; r < e.dim(); ++r)
    e.set_by_rank(r, class_values[static_cast<std::size_t>(cc.class_of_rank[r])]);
  return e;
}

namespace {

double ipow(int base, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= static_cast<double>(base);
  return r;  // exact below 2^53
}

WeingartenTable build_weingarten(int n, int N) {
  if (N < 1) throw std::invalid_argument("matrix dimension must be positive");
  const ConjugacyClasses& cc = conjugacy_classes(n);
  const std::vector<Permutation>& perms = all_permutations(n);
  const int p = static_cast<int>(cc.types.size());

  // Class-sum coordinates: solving A w = e_id with
  // A[l][m] = sum_{h in C_m} N^{#cycles(r_l h^{-1})}. One pass over S_n fills
  // every column bucket. Conjugating by D = diag(sqrt|C_l|) symmetrizes A.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(p, p);
  for (const Permutation& h : perms) {
    Permutation hinv = h.inverse();
    int cls = cc.class_of_rank[perm_rank(h)];
    for (int l = 0; l < p; ++l) {
      int cycles = cc.representatives[static_cast<std::size_t>(l)].compose(hinv).cycle_count();
      a(l, cls) += ipow(N, cycles);
    }
  }
  Eigen::VectorXd d(p);
  for (int l = 0; l < p; ++l) d(l) = std::sqrt(static_cast<double>(cc.sizes[static_cast<std::size_t>(l)]));
  Eigen::MatrixXd sym = d.asDiagonal() * a * d.cwiseInverse().asDiagonal();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  if (es.info() != Eigen::Success) throw std::runtime_error("Weingarten eigensolve failed");
  const Eigen::VectorXd& ev = es.eigenvalues();
  double max_abs = ev.cwiseAbs().maxCoeff();
  const double threshold = 1e-10 * max_abs;

  WeingartenTable t;
  t.n = n;
  t.N = N;
  t.pseudo = N < n;
  t.threshold = threshold;

  // Right-hand side in symmetrized coordinates: the identity class has size 1,
  // so D e_id = e_id.
  int id_class = cc.class_of_rank[0];
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(p);
  rhs(id_class) = 1.0;

  Eigen::VectorXd proj = es.eigenvectors().transpose() * rhs;
  for (int i = 0; i < p; ++i) {
    if (std::abs(ev(i)) <= threshold) {
      ++t.zeroed;
      proj(i) = 0.0;
    } else {
      proj(i) /= ev(i);
    }
  }
  if (!t.pseudo && t.zeroed > 0)
    throw std::runtime_error("Weingarten matrix unexpectedly singular for n <= N");
  Eigen::VectorXd sol = es.eigenvectors() * proj;

  t.class_values.resize(static_cast<std::size_t>(p));
  for (int l = 0; l < p; ++l) t.class_values[static_cast<std::size_t>(l)] = sol(l) / d(l);
  return t;
}

}  // namespace

const WeingartenTable& weingarten_table(int n, int N) {
  static std::map<std::pair<int, int>, WeingartenTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, N);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, build_weingarten(n, N)).first->second;
}

GroupAlgebraElement wg_element(int n, int N) { return weingarten_table(n, N).element(); }

GroupAlgebraElement phi_of_tensor(const std::vector<Matrix>& mats) {
  const int n = static_cast<int>(mats.size());
  if (n < 1 || n > kGroupAlgebraCap) throw std::invalid_argument("phi_of_tensor: unsupported degree");
  const Eigen::Index N = mats[0].rows();
  for (const Matrix& m : mats)
    if (m.rows() != N || m.cols() != N) throw std::invalid_argument("phi_of_tensor: dimension mismatch");
  GroupAlgebraElement out(n);
  const std::vector<Permutation>& perms = all_permutations(n);
  for (std::size_t r = 0; r < perms.size(); ++r) {
    cd c = 1.0;
    for (const auto& cyc : perms[r].cycles()) {
      // cycle entries are 1-based positions in the tensor factor list
      Matrix prod = mats[static_cast<std::size_t>(cyc[0] - 1)];
      for (std::size_t j = 1; j < cyc.size(); ++j)
        prod *= mats[static_cast<std::size_t>(cyc[j] - 1)];
      c *= prod.trace();
    }
    out.set_by_rank(r, c);
  }
  return out;
}

GroupAlgebraElement conditional_expectation(const std::vector<Matrix>& mats) {
  const int n = static_cast<int>(mats.size());
  if (n < 1) throw std::invalid_argument("conditional_expectation: empty tensor");
  return convolve(phi_of_tensor(mats), wg_element(n, static_cast<int>(mats[0].rows())));
}

namespace {

std::size_t tensor_dim(int n, int N) {
  std::size_t d = 1;
  for (int i = 0; i < n; ++i) d *= static_cast<std::size_t>(N);
  return d;
}

// Digits of a basis index in base N, position 0 fastest.
std::vector<int> digits(std::size_t idx, int n, int N) {
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    t[static_cast<std::size_t>(j)] = static_cast<int>(idx % static_cast<std::size_t>(N));
    idx /= static_cast<std::size_t>(N);
  }
  return t;
}

}  // namespace

Matrix rho_matrix(const Permutation& sigma, int N) {
  const int n = sigma.degree();
  const std::size_t dim = tensor_dim(n, N);
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  Permutation inv = sigma.inverse();
  for (std::size_t in = 0; in < dim; ++in) {
    std::vector<int> t = digits(in, n, N);
    // rho(sigma) sends slot j to hold the factor from slot sigma^{-1}(j).
    std::size_t out = 0;
    for (int j = n - 1; j >= 0; --j)
      out = out * static_cast<std::size_t>(N) + static_cast<std::size_t>(t[static_cast<std::size_t>(inv.image(j))]);
    m(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in)) = 1.0;
  }
  return m;
}

Matrix represent(const GroupAlgebraElement& x, int N) {
  const int n = x.degree();
  const std::size_t dim = tensor_dim(n, N);
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const std::vector<Permutation>& perms = all_permutations(n);
  for (std::size_t r = 0; r < perms.size(); ++r) {
    cd c = x.coeff_by_rank(r);
    if (c != cd(0.0)) m += c * rho_matrix(perms[r], N);
  }
  return m;
}

GroupAlgebraElement phi_of_endomorphism(const Matrix& m, int n, int N) {
  if (m.rows() != m.cols() || m.rows() != static_cast<Eigen::Index>(tensor_dim(n, N)))
    throw std::invalid_argument("phi_of_endomorphism: dimension mismatch");
  GroupAlgebraElement out(n);
  const std::vector<Permutation>& perms = all_permutations(n);
  for (std::size_t r = 0; r < perms.size(); ++r)
    out.set_by_rank(r, (m * rho_matrix(perms[r].inverse(), N)).trace());
  return out;
}

}  // namespace freeconv
