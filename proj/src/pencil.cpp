#include "tricanon/pencil.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

namespace tricanon {

std::strong_ordering compare_blocks(const PencilBlock& a, const PencilBlock& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  if (a.size != b.size) return a.size <=> b.size;
  if (a.kind == BlockKind::FiniteEigen) return eigen_compare(a.lambda, b.lambda);
  return std::strong_ordering::equal;
}

void sort_blocks(std::vector<PencilBlock>& blocks) {
  std::stable_sort(blocks.begin(), blocks.end(), [](const PencilBlock& a, const PencilBlock& b) {
    return compare_blocks(a, b) < 0;
  });
}

std::string kind_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::RightSingular:
      return "RightSingular";
    case BlockKind::LeftSingular:
      return "LeftSingular";
    case BlockKind::InfiniteEigen:
      return "InfiniteEigen";
    case BlockKind::FiniteEigen:
      return "FiniteEigen";
  }
  return "?";
}

std::string to_string(const PencilBlock& b) {
  std::string head = kind_name(b.kind);
  if (b.kind == BlockKind::FiniteEigen) head += "(" + to_string(b.lambda) + ")";
  return head + " size " + std::to_string(b.size);
}

template <class T>
std::pair<Matrix<T>, Matrix<T>> materialize_block(const PencilBlock& b) {
  switch (b.kind) {
    case BlockKind::FiniteEigen:
      return {Matrix<T>::identity(b.size), build_jordan<T>(b.size, T(b.lambda))};
    case BlockKind::InfiniteEigen:
      return {build_jordan<T>(b.size, T(0)), Matrix<T>::identity(b.size)};
    case BlockKind::RightSingular:
      return build_FG<T>(b.size);
    case BlockKind::LeftSingular: {
      auto [f, g] = build_FG<T>(b.size);
      return {f.transpose(), g.transpose()};
    }
  }
  throw Error("unknown block kind");
}

template <class T>
std::pair<Matrix<T>, Matrix<T>> materialize_blocks(const std::vector<PencilBlock>& blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix<T> a(rows, cols);
  Matrix<T> bb(rows, cols);
  std::size_t r = 0;
  std::size_t c = 0;
  for (const auto& blk : blocks) {
    auto [x, y] = materialize_block<T>(blk);
    a.set_block(r, c, x);
    bb.set_block(r, c, y);
    r += blk.rows();
    c += blk.cols();
  }
  return {a, bb};
}

template <class T>
std::size_t normal_rank(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("pencil members differ in shape");
  std::size_t limit = std::min(a.rows(), a.cols());
  std::size_t best = 0;
  // A - sB drops rank for at most `limit` values of s.
  for (std::size_t s = 0; s <= limit && best < limit; ++s) {
    best = std::max(best, rank(a - b * T(static_cast<long>(s))));
  }
  return best;
}

template <class T>
JordanForm<T> jordan_form(const Matrix<T>& m) {
  if (!m.is_square()) throw ShapeError("Jordan form of a non-square matrix");
  std::size_t n = m.rows();
  JordanForm<T> out;
  out.P = Matrix<T>(n, 0);
  if (n == 0) return out;
  auto roots = roots_in_field(to_gaussian_poly(charpoly(m)));
  for (const auto& root : roots) {
    Matrix<T> nmat = m - Matrix<T>::identity(n) * T(root.value);
    std::vector<Matrix<T>> kernels{Matrix<T>(n, 0)};
    Matrix<T> pw = Matrix<T>::identity(n);
    while (kernels.back().cols() < root.multiplicity) {
      pw = pw * nmat;
      kernels.push_back(nullspace(pw));
      if (kernels.size() > n + 1) throw InvariantViolation("generalized eigenspace did not stabilize");
    }
    std::size_t top = kernels.size() - 1;
    struct Chain {
      Matrix<T> v;
      std::size_t length;
    };
    std::vector<Chain> chains;
    for (std::size_t level = top; level >= 1; --level) {
      Matrix<T> base = kernels[level - 1];
      for (const auto& ch : chains) {
        base = hstack(base, power(nmat, ch.length - level) * ch.v);
      }
      Matrix<T> tops = extend_columns(base, kernels[level]);
      for (std::size_t j = 0; j < tops.cols(); ++j) chains.push_back({tops.column(j), level});
    }
    std::stable_sort(chains.begin(), chains.end(),
                     [](const Chain& a, const Chain& b) { return a.length < b.length; });
    for (const auto& ch : chains) {
      std::vector<Matrix<T>> cols(ch.length);
      cols[ch.length - 1] = ch.v;
      for (std::size_t j = ch.length - 1; j > 0; --j) cols[j - 1] = nmat * cols[j];
      for (const auto& c : cols) out.P = hstack(out.P, c);
      out.blocks.emplace_back(root.value, ch.length);
    }
  }
  if (out.P.cols() != n) throw InvariantViolation("Jordan chains do not span the space");
  Matrix<T> j(n, n);
  std::size_t off = 0;
  for (const auto& [l, s] : out.blocks) {
    j.set_block(off, off, build_jordan<T>(s, T(l)));
    off += s;
  }
  if (!(m * out.P == out.P * j)) throw InvariantViolation("Jordan witness check failed");
  return out;
}

namespace {

template <class T>
Matrix<T> block_diag_identity(std::size_t k, const Matrix<T>& rest) {
  return direct_sum(Matrix<T>::identity(k), rest);
}

// Basis of the column span of v (independent columns kept greedily).
template <class T>
Matrix<T> column_basis(const Matrix<T>& v) {
  return extend_columns(Matrix<T>(v.rows(), 0), v);
}

template <class T>
struct Work {
  Matrix<T> A, B, R, S;
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  struct Placed {
    PencilBlock block;
    std::size_t row;
    std::size_t col;
  };
  std::vector<Placed> placed;

  std::size_t sub_rows() const { return A.rows() - r0; }
  std::size_t sub_cols() const { return A.cols() - c0; }
  Matrix<T> subA() const { return A.block(r0, c0, sub_rows(), sub_cols()); }
  Matrix<T> subB() const { return B.block(r0, c0, sub_rows(), sub_cols()); }

  // Replaces the remaining pencil P by Rl P Sl and updates the witnesses.
  void apply(const Matrix<T>& rl, const Matrix<T>& sl) {
    std::size_t mr = sub_rows();
    std::size_t nc = sub_cols();
    A.set_block(r0, c0, rl * subA() * sl);
    B.set_block(r0, c0, rl * subB() * sl);
    R.set_block(r0, 0, rl * R.block(r0, 0, mr, R.cols()));
    S.set_block(0, c0, S.block(0, c0, S.rows(), nc) * sl);
  }

  void place(const PencilBlock& b) {
    placed.push_back({b, r0, c0});
    r0 += b.rows();
    c0 += b.cols();
  }
};

// Minimal chain B x1 = 0, A xj = B x(j+1), A x(k+1) = 0 of length k+1.
template <class T>
std::optional<std::vector<Matrix<T>>> find_chain(const Matrix<T>& a, const Matrix<T>& b, std::size_t k) {
  std::size_t m = a.rows();
  std::size_t n = a.cols();
  Matrix<T> sys((k + 2) * m, (k + 1) * n);
  sys.set_block(0, 0, b);
  for (std::size_t j = 0; j < k; ++j) {
    sys.set_block((j + 1) * m, j * n, a);
    sys.set_block((j + 1) * m, (j + 1) * n, -b);
  }
  sys.set_block((k + 1) * m, k * n, a);
  Matrix<T> ns = nullspace(sys);
  if (ns.cols() == 0) return std::nullopt;
  std::vector<Matrix<T>> xs;
  for (std::size_t j = 0; j <= k; ++j) xs.push_back(ns.block(j * n, 0, n, 1));
  return xs;
}

// Local transforms (Rl, Sl) with Rl (A, B) Sl = (F_k, G_k) (+) rest.
template <class T>
std::tuple<Matrix<T>, Matrix<T>, std::size_t> extract_right_block(const Matrix<T>& a, const Matrix<T>& b,
                                                                   std::size_t k_start) {
  std::size_t m = a.rows();
  std::size_t n = a.cols();
  std::optional<std::vector<Matrix<T>>> chain;
  std::size_t k = k_start;
  for (; k < n; ++k) {
    chain = find_chain(a, b, k);
    if (chain) break;
  }
  if (!chain) throw InvariantViolation("no minimal chain found for a singular pencil");
  Matrix<T> x(n, 0);
  for (const auto& v : *chain) x = hstack(x, v);
  x = hstack(x, complement_columns(x));
  Matrix<T> y(m, 0);
  for (std::size_t j = 0; j < k; ++j) y = hstack(y, a * (*chain)[j]);
  y = hstack(y, complement_columns(y));
  Matrix<T> rl = inverse(y);
  Matrix<T> sl = x;
  Matrix<T> a1 = rl * a * sl;
  Matrix<T> b1 = rl * b * sl;

  std::size_t m2 = m - k;
  std::size_t n2 = n - k - 1;
  if (k > 0 && n2 > 0) {
    Matrix<T> ca = a1.block(0, k + 1, k, n2);
    Matrix<T> cb = b1.block(0, k + 1, k, n2);
    Matrix<T> a2 = a1.block(k, k + 1, m2, n2);
    Matrix<T> b2 = b1.block(k, k + 1, m2, n2);
    // Unknowns P (k x m2) and Q ((k+1) x n2) with C + F Q + P A2 = 0 for both members.
    std::size_t np = k * m2;
    std::size_t nq = (k + 1) * n2;
    Matrix<T> sys(2 * k * n2, np + nq);
    Matrix<T> rhs(2 * k * n2, 1);
    std::size_t row = 0;
    for (int member = 0; member < 2; ++member) {
      const Matrix<T>& c = member == 0 ? ca : cb;
      const Matrix<T>& m2mat = member == 0 ? a2 : b2;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n2; ++j, ++row) {
          std::size_t qrow = member == 0 ? i : i + 1;
          sys(row, np + qrow * n2 + j) = T(1);
          for (std::size_t l = 0; l < m2; ++l) sys(row, i * m2 + l) = m2mat(l, j);
          rhs(row, 0) = -c(i, j);
        }
      }
    }
    auto sol = solve(sys, rhs);
    if (!sol) throw InvariantViolation("singular block could not be decoupled");
    Matrix<T> rl2 = Matrix<T>::identity(m);
    Matrix<T> sl2 = Matrix<T>::identity(n);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t l = 0; l < m2; ++l) rl2(i, k + l) = (*sol)(i * m2 + l, 0);
    }
    for (std::size_t r = 0; r <= k; ++r) {
      for (std::size_t j = 0; j < n2; ++j) sl2(r, k + 1 + j) = (*sol)(np + r * n2 + j, 0);
    }
    rl = rl2 * rl;
    sl = sl * sl2;
  }
  return {rl, sl, k};
}

// Subspace iterations V <- {x : Bx in A V} from the whole space and
// W <- {x : Ax in B W} from zero; their limits carry the finite and infinite parts.
template <class T>
Matrix<T> wong_limit(const Matrix<T>& first, const Matrix<T>& second, Matrix<T> start) {
  std::size_t n = first.cols();
  while (true) {
    Matrix<T> image = second * start;
    Matrix<T> sys = hstack(first, -image);
    Matrix<T> ns = nullspace(sys);
    Matrix<T> next = column_basis(ns.block(0, 0, n, ns.cols()));
    if (next.cols() == start.cols()) return next;
    start = std::move(next);
  }
}

}  // namespace

template <class T>
KroneckerForm<T> kronecker_decompose(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("pencil members differ in shape");
  Work<T> w{a, b, Matrix<T>::identity(a.rows()), Matrix<T>::identity(a.cols()), 0, 0, {}};

  // Right singular blocks.
  {
    std::size_t count = w.sub_cols() - normal_rank(w.subA(), w.subB());
    std::size_t k = 0;
    for (std::size_t t = 0; t < count; ++t) {
      auto [rl, sl, kk] = extract_right_block(w.subA(), w.subB(), k);
      w.apply(rl, sl);
      w.place(PencilBlock::right(kk));
      k = kk;
    }
  }
  // Left singular blocks via the transposed pencil.
  {
    std::size_t count = w.sub_rows() - normal_rank(w.subA(), w.subB());
    std::size_t k = 0;
    for (std::size_t t = 0; t < count; ++t) {
      auto [rl, sl, kk] = extract_right_block(w.subA().transpose(), w.subB().transpose(), k);
      w.apply(sl.transpose(), rl.transpose());
      w.place(PencilBlock::left(kk));
      k = kk;
    }
  }
  // Regular part.
  std::size_t d = w.sub_rows();
  if (d != w.sub_cols()) throw InvariantViolation("regular part is not square");
  if (d > 0) {
    Matrix<T> sa = w.subA();
    Matrix<T> sb = w.subB();
    Matrix<T> v = wong_limit(sb, sa, Matrix<T>::identity(d));
    Matrix<T> wi = wong_limit(sa, sb, Matrix<T>(d, 0));
    Matrix<T> sl = hstack(v, wi);
    if (sl.cols() != d) throw InvariantViolation("regular part is not regular");
    Matrix<T> rl = inverse(hstack(sa * v, sb * wi));
    w.apply(rl, sl);
    std::size_t f = v.cols();
    std::size_t inf = wi.cols();
    if (f > 0) {
      auto jf = jordan_form(w.subB().block(0, 0, f, f));
      w.apply(direct_sum(inverse(jf.P), Matrix<T>::identity(inf)),
              direct_sum(jf.P, Matrix<T>::identity(inf)));
      for (const auto& [l, s] : jf.blocks) w.place(PencilBlock::finite(l, s));
    }
    if (inf > 0) {
      auto ji = jordan_form(w.subA());
      w.apply(inverse(ji.P), ji.P);
      for (const auto& [l, s] : ji.blocks) {
        if (!l.is_zero()) throw InvariantViolation("infinite part is not nilpotent");
        w.place(PencilBlock::infinite(s));
      }
    }
  }

  // Canonical order.
  std::vector<std::size_t> order(w.placed.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return compare_blocks(w.placed[x].block, w.placed[y].block) < 0;
  });
  std::vector<std::size_t> rowperm;
  std::vector<std::size_t> colperm;
  KroneckerForm<T> out;
  for (auto idx : order) {
    const auto& p = w.placed[idx];
    for (std::size_t i = 0; i < p.block.rows(); ++i) rowperm.push_back(p.row + i);
    for (std::size_t j = 0; j < p.block.cols(); ++j) colperm.push_back(p.col + j);
    out.blocks.push_back(p.block);
  }
  out.R = permute_rows(w.R, rowperm);
  out.S = permute_cols(w.S, colperm);
  auto [ca, cb] = materialize_blocks<T>(out.blocks);
  if (!(out.R * a * out.S == ca) || !(out.R * b * out.S == cb)) {
    throw InvariantViolation("Kronecker witness check failed");
  }
  return out;
}

template <class T>
std::vector<Root> regular_eigenvalues(const Matrix<T>& a, const Matrix<T>& b) {
  auto kf = kronecker_decompose(a, b);
  std::vector<Root> out;
  auto add = [&](const Gaussian& v, std::size_t mult) {
    for (auto& r : out) {
      if (r.value == v) {
        r.multiplicity += mult;
        return;
      }
    }
    out.push_back({v, mult});
  };
  for (const auto& blk : kf.blocks) {
    if (blk.kind == BlockKind::InfiniteEigen) add(Gaussian(0), blk.size);
    if (blk.kind == BlockKind::FiniteEigen && !blk.lambda.is_zero()) add(blk.lambda.inverse(), blk.size);
  }
  std::sort(out.begin(), out.end(),
            [](const Root& x, const Root& y) { return eigen_compare(x.value, y.value) < 0; });
  return out;
}

#define TRICANON_INSTANTIATE(T)                                                                   \
  template std::pair<Matrix<T>, Matrix<T>> materialize_block<T>(const PencilBlock&);              \
  template std::pair<Matrix<T>, Matrix<T>> materialize_blocks<T>(const std::vector<PencilBlock>&); \
  template std::size_t normal_rank<T>(const Matrix<T>&, const Matrix<T>&);                        \
  template JordanForm<T> jordan_form<T>(const Matrix<T>&);                                        \
  template KroneckerForm<T> kronecker_decompose<T>(const Matrix<T>&, const Matrix<T>&);           \
  template std::vector<Root> regular_eigenvalues<T>(const Matrix<T>&, const Matrix<T>&);

TRICANON_INSTANTIATE(Gaussian)
TRICANON_INSTANTIATE(TowerElement)

#undef TRICANON_INSTANTIATE

}  // namespace tricanon
