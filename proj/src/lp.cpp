#include "genpos/lp.hpp"

#include "genpos/error.hpp"

#include <vector>

namespace genpos::lp {

namespace {

// Tableau in canonical form: rows 0..m-1 are constraints over columns
// 0..cols-1 with the right-hand side in column `cols`; row m holds reduced
// costs (negative entries improve a maximization) and the objective value.
class Tableau {
 public:
  Tableau(Eigen::Index rows, Eigen::Index cols) : t_(MatrixXq::Zero(rows + 1, cols + 1)), basis_(rows, -1) {}

  Rat& at(Eigen::Index r, Eigen::Index c) { return t_(r, c); }
  Rat& rhs(Eigen::Index r) { return t_(r, cols()); }
  Eigen::Index rows() const { return t_.rows() - 1; }
  Eigen::Index cols() const { return t_.cols() - 1; }
  std::vector<Eigen::Index>& basis() { return basis_; }
  const Rat& objective() const { return t_(rows(), cols()); }

  void pivot(Eigen::Index r, Eigen::Index c) {
    t_.row(r) /= Rat(t_(r, c));
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == r || t_(i, c) == 0) continue;
      const Rat f = t_(i, c);
      t_.row(i) -= f * t_.row(r);
    }
    basis_[static_cast<std::size_t>(r)] = c;
  }

  // Reduced-cost row for maximizing costs . y under the current basis.
  void set_objective(const VectorXq& costs) {
    const Eigen::Index m = rows();
    t_.row(m).setZero();
    t_.row(m).head(cols()) = -costs.transpose();
    for (Eigen::Index i = 0; i < m; ++i) {
      const Rat cb = costs(basis_[static_cast<std::size_t>(i)]);
      if (cb != 0) t_.row(m) += cb * t_.row(i);
    }
  }

  // Runs Bland's rule over columns < allowed_cols. False if unbounded.
  bool optimize(Eigen::Index allowed_cols) {
    const Eigen::Index m = rows();
    while (true) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < allowed_cols; ++j) {
        if (t_(m, j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Rat best;
      for (Eigen::Index i = 0; i < m; ++i) {
        if (t_(i, enter) <= 0) continue;
        const Rat ratio = t_(i, cols()) / t_(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

 private:
  MatrixXq t_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

Result maximize(const VectorXq& c, const MatrixXq& a, const VectorXq& b) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (c.size() != n || b.size() != m) throw PreconditionError("lp::maximize: inconsistent shapes");

  // Columns: x+ (n), x- (n), slacks (m), artificials (one per negative row).
  std::vector<Eigen::Index> negative_rows;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (b(i) < 0) negative_rows.push_back(i);
  }
  const Eigen::Index real_cols = 2 * n + m;
  const Eigen::Index cols = real_cols + static_cast<Eigen::Index>(negative_rows.size());
  Tableau tab(m, cols);

  Eigen::Index next_artificial = real_cols;
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool flip = b(i) < 0;
    const Rat s = flip ? Rat(-1) : Rat(1);
    for (Eigen::Index j = 0; j < n; ++j) {
      tab.at(i, j) = s * a(i, j);
      tab.at(i, n + j) = -s * a(i, j);
    }
    tab.at(i, 2 * n + i) = s;
    tab.rhs(i) = s * b(i);
    if (flip) {
      tab.at(i, next_artificial) = 1;
      tab.basis()[static_cast<std::size_t>(i)] = next_artificial++;
    } else {
      tab.basis()[static_cast<std::size_t>(i)] = 2 * n + i;
    }
  }

  if (!negative_rows.empty()) {
    VectorXq phase1 = VectorXq::Zero(cols);
    for (Eigen::Index j = real_cols; j < cols; ++j) phase1(j) = -1;
    tab.set_objective(phase1);
    tab.optimize(cols);
    if (tab.objective() < 0) return {Status::infeasible, Rat(0), VectorXq()};
    // Drive zero-valued artificials out of the basis where possible; rows
    // where that fails are redundant and keep their artificial at zero.
    for (Eigen::Index i = 0; i < m; ++i) {
      if (tab.basis()[static_cast<std::size_t>(i)] < real_cols) continue;
      for (Eigen::Index j = 0; j < real_cols; ++j) {
        if (tab.at(i, j) != 0) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }

  VectorXq costs = VectorXq::Zero(cols);
  costs.head(n) = c;
  costs.segment(n, n) = -c;
  tab.set_objective(costs);
  if (!tab.optimize(real_cols)) return {Status::unbounded, Rat(0), VectorXq()};

  VectorXq y = VectorXq::Zero(cols);
  for (Eigen::Index i = 0; i < m; ++i) y(tab.basis()[static_cast<std::size_t>(i)]) = tab.rhs(i);
  VectorXq x = y.head(n) - y.segment(n, n);
  return {Status::optimal, tab.objective(), std::move(x)};
}

}  // namespace genpos::lp
