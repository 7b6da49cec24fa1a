#include "tricanon/canon.hpp"

#include <algorithm>

#include "tricanon/errors.hpp"

namespace tricanon {

namespace {

bool odd(std::size_t n) { return n % 2 == 1; }

Gaussian sign_power(std::size_t n) { return odd(n) ? Gaussian(1) : Gaussian(-1); }

// Sorted multiset of blocks with removal.
class BlockPool {
 public:
  explicit BlockPool(std::vector<PencilBlock> blocks) : blocks_(std::move(blocks)) { sort_blocks(blocks_); }

  bool empty() const { return blocks_.empty(); }

  PencilBlock pop() {
    PencilBlock b = blocks_.front();
    blocks_.erase(blocks_.begin());
    return b;
  }

  bool take(const PencilBlock& b) {
    auto it = std::find(blocks_.begin(), blocks_.end(), b);
    if (it == blocks_.end()) return false;
    blocks_.erase(it);
    return true;
  }

 private:
  std::vector<PencilBlock> blocks_;
};

template <class E>
[[noreturn]] void unmatched(Relation r, const PencilBlock& b, const std::string& wanted) {
  throw E("pencil block " + to_string(b) + " has no partner " + wanted + " in the " + relation_name(r) + " table");
}

void require_partner_malformed(Relation r, BlockPool& pool, const PencilBlock& b, const PencilBlock& partner) {
  if (!pool.take(partner)) unmatched<MalformedPencil>(r, b, to_string(partner));
}

void require_partner_incompatible(Relation r, BlockPool& pool, const PencilBlock& b, const PencilBlock& partner) {
  if (!pool.take(partner)) unmatched<PencilNotCompatible>(r, b, to_string(partner));
}

std::vector<SummandDescriptor> invert_congruence(const std::vector<PencilBlock>& blocks) {
  const Relation r = Relation::Congruence;
  BlockPool pool(blocks);
  std::vector<SummandDescriptor> out;
  while (!pool.empty()) {
    PencilBlock b = pool.pop();
    const std::size_t k = b.size;
    switch (b.kind) {
      case BlockKind::RightSingular:
        require_partner_malformed(r, pool, b, PencilBlock::left(k));
        out.push_back(make_cm2(2 * k + 1, 0));
        break;
      case BlockKind::LeftSingular:
        unmatched<MalformedPencil>(r, b, to_string(PencilBlock::right(k)));
      case BlockKind::InfiniteEigen:
        require_partner_malformed(r, pool, b, PencilBlock::finite(Gaussian(0), k));
        out.push_back(make_cm1(2 * k, Gaussian(0)));
        break;
      case BlockKind::FiniteEigen:
        if (b.lambda.is_zero()) {
          require_partner_malformed(r, pool, b, PencilBlock::infinite(k));
          out.push_back(make_cm1(2 * k, Gaussian(0)));
        } else if (b.lambda == Gaussian(1)) {
          if (odd(k)) {
            out.push_back(make_cm2(k, 1));
          } else {
            require_partner_malformed(r, pool, b, b);
            out.push_back(make_cm3(2 * k));
          }
        } else if (b.lambda == Gaussian(-1)) {
          if (!odd(k)) {
            out.push_back(make_cm2(k, 1));
          } else {
            require_partner_malformed(r, pool, b, b);
            out.push_back(make_cm2(2 * k, 0));
          }
        } else {
          require_partner_malformed(r, pool, b, PencilBlock::finite(b.lambda.inverse(), k));
          out.push_back(make_cm1(2 * k, b.lambda));
        }
        break;
    }
  }
  return out;
}

std::vector<SummandDescriptor> invert_star(const std::vector<PencilBlock>& blocks) {
  const Relation r = Relation::Star;
  BlockPool pool(blocks);
  std::vector<SummandDescriptor> out;
  while (!pool.empty()) {
    PencilBlock b = pool.pop();
    const std::size_t k = b.size;
    switch (b.kind) {
      case BlockKind::RightSingular:
        require_partner_malformed(r, pool, b, PencilBlock::left(k));
        out.push_back(make_cmi1(2 * k + 1, Gaussian(0)));
        break;
      case BlockKind::LeftSingular:
        unmatched<MalformedPencil>(r, b, to_string(PencilBlock::right(k)));
      case BlockKind::InfiniteEigen:
        require_partner_malformed(r, pool, b, PencilBlock::finite(Gaussian(0), k));
        out.push_back(make_cmi1(2 * k, Gaussian(0)));
        break;
      case BlockKind::FiniteEigen:
        if (b.lambda.is_zero()) {
          require_partner_malformed(r, pool, b, PencilBlock::infinite(k));
          out.push_back(make_cmi1(2 * k, Gaussian(0)));
        } else if (modulus_squared(b.lambda) == 1) {
          Gaussian square = sign_power(k) * b.lambda;
          auto mu = sqrt_in_field(square);
          if (!mu) {
            throw EigenvalueOutsideField("CMI2 parameter sqrt(" + to_string(square) + ") is not in Q(i)");
          }
          out.push_back(make_cmi2(k, *mu, SignState::Unknown));
        } else {
          require_partner_malformed(r, pool, b, PencilBlock::finite(conjugate(b.lambda).inverse(), k));
          out.push_back(make_cmi1(2 * k, b.lambda));
        }
        break;
    }
  }
  return out;
}

std::vector<SummandDescriptor> invert_sym_sym(const std::vector<PencilBlock>& blocks, bool second) {
  const Relation r = second ? Relation::SymSymSecond : Relation::SymSym;
  BlockPool pool(blocks);
  std::vector<SummandDescriptor> out;
  while (!pool.empty()) {
    PencilBlock b = pool.pop();
    const std::size_t n = b.size;
    switch (b.kind) {
      case BlockKind::RightSingular:
        require_partner_malformed(r, pool, b, PencilBlock::left(n));
        out.push_back(second ? make_ssnew(2 * n + 1) : make_sss1n(2 * n + 1, 0, Gaussian(0)));
        break;
      case BlockKind::LeftSingular:
        unmatched<MalformedPencil>(r, b, to_string(PencilBlock::right(n)));
      case BlockKind::InfiniteEigen:
        if (second) {
          out.push_back(make_nn_ident(n));
        } else {
          out.push_back(odd(n) ? make_sss1n(n, 1, Gaussian(0)) : make_ss2n(n, Gaussian(0)));
        }
        break;
      case BlockKind::FiniteEigen:
        if (second) {
          out.push_back(make_lyg(n, b.lambda));
        } else {
          out.push_back(odd(n) ? make_ss2n(n, b.lambda) : make_sss1n(n, 1, b.lambda));
        }
        break;
    }
  }
  return out;
}

std::vector<SummandDescriptor> invert_sym_skew(const std::vector<PencilBlock>& blocks) {
  const Relation r = Relation::SymSkew;
  BlockPool pool(blocks);
  std::vector<SummandDescriptor> out;
  while (!pool.empty()) {
    PencilBlock b = pool.pop();
    const std::size_t n = b.size;
    switch (b.kind) {
      case BlockKind::RightSingular:
        require_partner_incompatible(r, pool, b, PencilBlock::left(n));
        out.push_back(make_sc2(2 * n + 1, 0));
        break;
      case BlockKind::LeftSingular:
        unmatched<PencilNotCompatible>(r, b, to_string(PencilBlock::right(n)));
      case BlockKind::InfiniteEigen:
        if (!odd(n)) {
          out.push_back(make_sc2(n, 1));
        } else {
          require_partner_incompatible(r, pool, b, b);
          out.push_back(make_sc2(2 * n, 0));
        }
        break;
      case BlockKind::FiniteEigen:
        if (!b.lambda.is_zero()) {
          require_partner_incompatible(r, pool, b, PencilBlock::finite(-b.lambda, n));
          out.push_back(make_sc1(2 * n, b.lambda));
        } else if (odd(n)) {
          out.push_back(make_sc2(n, 1));
        } else {
          require_partner_incompatible(r, pool, b, b);
          out.push_back(make_sc3(2 * n));
        }
        break;
    }
  }
  return out;
}

std::vector<SummandDescriptor> invert_skew_skew(const std::vector<PencilBlock>& blocks) {
  const Relation r = Relation::SkewSkew;
  BlockPool pool(blocks);
  std::vector<SummandDescriptor> out;
  while (!pool.empty()) {
    PencilBlock b = pool.pop();
    const std::size_t n = b.size;
    switch (b.kind) {
      case BlockKind::RightSingular:
        require_partner_incompatible(r, pool, b, PencilBlock::left(n));
        out.push_back(make_cc23(2 * n + 1));
        break;
      case BlockKind::LeftSingular:
        unmatched<PencilNotCompatible>(r, b, to_string(PencilBlock::right(n)));
      case BlockKind::InfiniteEigen:
        require_partner_incompatible(r, pool, b, b);
        out.push_back(make_cc23(2 * n));
        break;
      case BlockKind::FiniteEigen:
        require_partner_incompatible(r, pool, b, b);
        out.push_back(make_cc1(2 * n, b.lambda));
        break;
    }
  }
  return out;
}

std::vector<SummandDescriptor> invert_hermitian(const std::vector<PencilBlock>& blocks) {
  const Relation r = Relation::Hermitian;
  BlockPool pool(blocks);
  std::vector<SummandDescriptor> out;
  while (!pool.empty()) {
    PencilBlock b = pool.pop();
    const std::size_t n = b.size;
    switch (b.kind) {
      case BlockKind::RightSingular:
        require_partner_incompatible(r, pool, b, PencilBlock::left(n));
        out.push_back(make_he1(2 * n + 1, Gaussian::i(), SignState::Unknown));
        break;
      case BlockKind::LeftSingular:
        unmatched<PencilNotCompatible>(r, b, to_string(PencilBlock::right(n)));
      case BlockKind::InfiniteEigen:
        out.push_back(make_he2_infinite(n, SignState::Unknown));
        break;
      case BlockKind::FiniteEigen:
        if (b.lambda.is_real()) {
          out.push_back(make_he2(n, b.lambda.re(), SignState::Unknown));
        } else {
          require_partner_incompatible(r, pool, b, PencilBlock::finite(conjugate(b.lambda), n));
          out.push_back(make_he1(2 * n, b.lambda));
        }
        break;
    }
  }
  return out;
}

std::vector<std::string> notes_for(const std::vector<SummandDescriptor>& ds) {
  std::vector<std::string> notes;
  bool cmi2 = false;
  bool he2 = false;
  bool he1 = false;
  for (const auto& d : ds) {
    if (d.sign_determined()) continue;
    cmi2 = cmi2 || d.family == Family::CMI2;
    he2 = he2 || d.family == Family::HE2;
    he1 = he1 || d.family == Family::HE1;
  }
  if (cmi2) {
    notes.push_back("CMI2 summands are determined up to multiplication by -1; the pencil fixes only mu^2");
  }
  if (he2) notes.push_back("HE2 summands are determined up to replacing (a, b) by (-a, -b)");
  if (he1) notes.push_back("odd-size HE1 summands are determined up to replacing mu = i by mu = -i");
  return notes;
}

std::size_t total_size(const std::vector<SummandDescriptor>& ds) {
  std::size_t n = 0;
  for (const auto& d : ds) n += d.n;
  return n;
}

template <class T>
CanonicalDecomposition finish(Relation relation, const KroneckerForm<T>& form, std::size_t dim) {
  CanonicalDecomposition out;
  out.relation = relation;
  out.blocks = form.blocks;
  out.summands = summands_from_blocks(relation, form.blocks);
  if (total_size(out.summands) != dim) {
    throw InvariantViolation("canonical summands cover " + std::to_string(total_size(out.summands)) +
                             " dimensions instead of " + std::to_string(dim));
  }
  out.notes = notes_for(out.summands);
  return out;
}

template <class T>
void require_square(const Matrix<T>& a) {
  if (!a.is_square()) throw ShapeError("expected a square matrix");
}

template <class T>
void require_pair(const Matrix<T>& a, const Matrix<T>& b) {
  require_square(a);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("pair members differ in size");
}

template <class T>
void require(bool ok, const std::string& what) {
  if (!ok) throw StructureError(what);
}

std::vector<PencilBlock> sorted(std::vector<PencilBlock> blocks) {
  sort_blocks(blocks);
  return blocks;
}

}  // namespace

std::vector<SummandDescriptor> summands_from_blocks(Relation relation, const std::vector<PencilBlock>& blocks) {
  std::vector<SummandDescriptor> out;
  switch (relation) {
    case Relation::Congruence:
      out = invert_congruence(blocks);
      break;
    case Relation::Star:
      out = invert_star(blocks);
      break;
    case Relation::SymSym:
      out = invert_sym_sym(blocks, false);
      break;
    case Relation::SymSymSecond:
      out = invert_sym_sym(blocks, true);
      break;
    case Relation::SymSkew:
      out = invert_sym_skew(blocks);
      break;
    case Relation::SkewSkew:
      out = invert_skew_skew(blocks);
      break;
    case Relation::Hermitian:
      out = invert_hermitian(blocks);
      break;
  }
  for (const auto& d : out) validate(d);
  sort_descriptors(out);
  return out;
}

template <class T>
CanonicalDecomposition canon_congruence(const Matrix<T>& a) {
  require_square(a);
  return finish(Relation::Congruence, kronecker_decompose(a.transpose(), a), a.rows());
}

template <class T>
CanonicalDecomposition canon_star_congruence(const Matrix<T>& a) {
  require_square(a);
  return finish(Relation::Star, kronecker_decompose(a.conjugate_transpose(), a), a.rows());
}

template <class T>
CanonicalDecomposition canon_pair_sym_sym(const Matrix<T>& a, const Matrix<T>& b, bool second_form) {
  require_pair(a, b);
  require<T>(is_symmetric(a) && is_symmetric(b), "sym-sym needs two symmetric matrices");
  return finish(second_form ? Relation::SymSymSecond : Relation::SymSym, kronecker_decompose(a, b), a.rows());
}

template <class T>
CanonicalDecomposition canon_pair_sym_skew(const Matrix<T>& a, const Matrix<T>& b) {
  require_pair(a, b);
  require<T>(is_symmetric(a), "sym-skew needs a symmetric first matrix");
  require<T>(is_skew_symmetric(b), "sym-skew needs a skew-symmetric second matrix");
  return finish(Relation::SymSkew, kronecker_decompose(a, b), a.rows());
}

template <class T>
CanonicalDecomposition canon_pair_skew_skew(const Matrix<T>& a, const Matrix<T>& b) {
  require_pair(a, b);
  require<T>(is_skew_symmetric(a) && is_skew_symmetric(b), "skew-skew needs two skew-symmetric matrices");
  return finish(Relation::SkewSkew, kronecker_decompose(a, b), a.rows());
}

template <class T>
CanonicalDecomposition canon_pair_hermitian(const Matrix<T>& a, const Matrix<T>& b) {
  require_pair(a, b);
  require<T>(is_hermitian(a) && is_hermitian(b), "herm-herm needs two Hermitian matrices");
  return finish(Relation::Hermitian, kronecker_decompose(a, b), a.rows());
}

template <class T>
CanonicalDecomposition canonicalize(Relation relation, const Matrix<T>& a, const Matrix<T>& b) {
  switch (relation) {
    case Relation::Congruence:
      return canon_congruence(a);
    case Relation::Star:
      return canon_star_congruence(a);
    case Relation::SymSym:
      return canon_pair_sym_sym(a, b, false);
    case Relation::SymSymSecond:
      return canon_pair_sym_sym(a, b, true);
    case Relation::SymSkew:
      return canon_pair_sym_skew(a, b);
    case Relation::SkewSkew:
      return canon_pair_skew_skew(a, b);
    case Relation::Hermitian:
      return canon_pair_hermitian(a, b);
  }
  throw Error("unknown relation");
}

#define TRICANON_INSTANTIATE(T)                                                                      \
  template CanonicalDecomposition canon_congruence<T>(const Matrix<T>&);                             \
  template CanonicalDecomposition canon_star_congruence<T>(const Matrix<T>&);                        \
  template CanonicalDecomposition canon_pair_sym_sym<T>(const Matrix<T>&, const Matrix<T>&, bool);   \
  template CanonicalDecomposition canon_pair_sym_skew<T>(const Matrix<T>&, const Matrix<T>&);        \
  template CanonicalDecomposition canon_pair_skew_skew<T>(const Matrix<T>&, const Matrix<T>&);       \
  template CanonicalDecomposition canon_pair_hermitian<T>(const Matrix<T>&, const Matrix<T>&);       \
  template CanonicalDecomposition canonicalize<T>(Relation, const Matrix<T>&, const Matrix<T>&);

TRICANON_INSTANTIATE(Gaussian)
TRICANON_INSTANTIATE(TowerElement)
#undef TRICANON_INSTANTIATE

std::vector<PencilBlock> predicted_blocks(const SummandDescriptor& d) {
  validate(d);
  const std::size_t n = d.n;
  const std::size_t k = n / 2;
  const Gaussian zero(0);
  using B = PencilBlock;
  std::vector<PencilBlock> out;
  auto singular_pair = [&] {
    out.push_back(B::right(k));
    out.push_back(B::left(k));
  };
  auto twice = [&](const PencilBlock& b) {
    out.push_back(b);
    out.push_back(b);
  };
  switch (d.family) {
    case Family::CM1:
      out.push_back(B::finite(d.lambda, k));
      out.push_back(d.lambda.is_zero() ? B::infinite(k) : B::finite(d.lambda.inverse(), k));
      break;
    case Family::CM2:
      if (d.eps == 1) {
        out.push_back(B::finite(sign_power(n), n));
      } else if (odd(n)) {
        singular_pair();
      } else {
        twice(B::finite(Gaussian(-1), k));
      }
      break;
    case Family::CM3:
      twice(B::finite(Gaussian(1), k));
      break;
    case Family::CMI1:
      if (odd(n)) {
        singular_pair();
      } else {
        out.push_back(B::finite(d.lambda, k));
        out.push_back(d.lambda.is_zero() ? B::infinite(k) : B::finite(conjugate(d.lambda).inverse(), k));
      }
      break;
    case Family::CMI2:
      out.push_back(B::finite(sign_power(n) * d.mu * d.mu, n));
      break;
    case Family::SSS1N:
      if (!odd(n)) {
        out.push_back(B::finite(d.lambda, n));
      } else if (d.eps == 0) {
        singular_pair();
      } else {
        out.push_back(B::infinite(n));
      }
      break;
    case Family::SS2N:
      out.push_back(odd(n) ? B::finite(d.lambda, n) : B::infinite(n));
      break;
    case Family::LYG:
      out.push_back(B::finite(d.lambda, n));
      break;
    case Family::NN_IDENT:
      out.push_back(B::infinite(n));
      break;
    case Family::SSNEW:
      singular_pair();
      break;
    case Family::SC1:
      out.push_back(B::finite(d.lambda, k));
      out.push_back(B::finite(-d.lambda, k));
      break;
    case Family::SC2:
      if (d.eps == 1) {
        out.push_back(odd(n) ? B::finite(zero, n) : B::infinite(n));
      } else if (odd(n)) {
        singular_pair();
      } else {
        twice(B::infinite(k));
      }
      break;
    case Family::SC3:
      twice(B::finite(zero, k));
      break;
    case Family::CC1:
      twice(B::finite(d.lambda, k));
      break;
    case Family::CC23:
      if (odd(n)) {
        singular_pair();
      } else {
        twice(B::infinite(k));
      }
      break;
    case Family::HE1:
      if (odd(n)) {
        singular_pair();
      } else {
        out.push_back(B::finite(d.mu, k));
        out.push_back(B::finite(conjugate(d.mu), k));
      }
      break;
    case Family::HE2:
      out.push_back(d.c_infinite ? B::infinite(n) : B::finite(Gaussian(d.c), n));
      break;
  }
  return sorted(out);
}

std::vector<PencilBlock> actual_blocks(const SummandDescriptor& d) {
  switch (relation_of(d.family)) {
    case Relation::Congruence: {
      GMatrix m = materialize(d);
      return kronecker_decompose(m.transpose(), m).blocks;
    }
    case Relation::Star: {
      GMatrix m = materialize(d);
      return kronecker_decompose(m.conjugate_transpose(), m).blocks;
    }
    default:
      break;
  }
  if (needs_tower(d)) {
    auto [a, b] = materialize_pair_tower(d);
    return kronecker_decompose(a, b).blocks;
  }
  auto [a, b] = materialize_pair(d);
  return kronecker_decompose(a, b).blocks;
}

TableCheck verify_table(const SummandDescriptor& d) {
  TableCheck check;
  check.predicted = predicted_blocks(d);
  check.actual = sorted(actual_blocks(d));
  check.ok = check.predicted == check.actual;
  return check;
}

std::vector<SummandDescriptor> table_samples(Family family, std::size_t max_size) {
  const std::vector<Gaussian> params{Gaussian(0),
                                     Gaussian(2),
                                     Gaussian::from_fraction(-1, 2),
                                     Gaussian::i(),
                                     Gaussian(1, 1),
                                     Gaussian(Rational(3, 5), Rational(4, 5))};
  std::vector<SummandDescriptor> out;
  auto add = [&](const SummandDescriptor& d) {
    try {
      validate(d);
    } catch (const InvariantViolation&) {
      return;
    }
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
  };
  const std::vector<SignState> signs{SignState::Plus, SignState::Minus};
  for (std::size_t n = 1; n <= max_size; ++n) {
    switch (family) {
      case Family::CM1:
        for (const auto& l : params) {
          if (!(l == Gaussian(1)) && !(l == Gaussian(-1)) && !odd(n)) add(make_cm1(n, l));
        }
        break;
      case Family::CM2:
        add(make_cm2(n, 0));
        add(make_cm2(n, 1));
        break;
      case Family::CM3:
        add(make_cm3(n));
        break;
      case Family::CMI1:
        for (const auto& l : params) {
          if (modulus_squared(l) != 1) add(make_cmi1(n, l));
        }
        break;
      case Family::CMI2:
        for (const auto& mu : {Gaussian(1), Gaussian::i(), Gaussian(Rational(3, 5), Rational(4, 5))}) {
          for (auto s : signs) add(make_cmi2(n, mu, s));
        }
        break;
      case Family::SSS1N:
        for (const auto& l : params) {
          add(make_sss1n(n, 0, l));
          add(make_sss1n(n, 1, l));
        }
        break;
      case Family::SS2N:
        for (const auto& l : params) add(make_ss2n(n, l));
        break;
      case Family::LYG:
        for (const auto& l : params) add(make_lyg(n, l));
        break;
      case Family::NN_IDENT:
        add(make_nn_ident(n));
        break;
      case Family::SSNEW:
        add(make_ssnew(n));
        break;
      case Family::SC1:
        for (const auto& l : params) {
          if (!l.is_zero() && !odd(n)) add(make_sc1(n, l));
        }
        break;
      case Family::SC2:
        add(make_sc2(n, 0));
        add(make_sc2(n, 1));
        break;
      case Family::SC3:
        add(make_sc3(n));
        break;
      case Family::CC1:
        for (const auto& l : params) add(make_cc1(n, l));
        break;
      case Family::CC23:
        add(make_cc23(n));
        break;
      case Family::HE1:
        if (odd(n)) {
          for (auto s : signs) add(make_he1(n, Gaussian::i(), s));
        } else {
          for (const auto& mu : params) {
            if (!mu.is_real()) add(make_he1(n, mu));
          }
        }
        break;
      case Family::HE2:
        for (const auto& c : params) {
          if (!c.is_real()) continue;
          for (auto s : signs) add(make_he2(n, c.re(), s));
        }
        for (auto s : signs) add(make_he2_infinite(n, s));
        break;
    }
  }
  return out;
}

SummandDescriptor congruence_counterpart(const SummandDescriptor& d) {
  validate(d);
  switch (d.family) {
    case Family::SC1:
      return make_cm1(d.n, cayley(d.lambda));
    case Family::SC2:
      return make_cm2(d.n, d.eps);
    case Family::SC3:
      return make_cm3(d.n);
    default:
      throw PreconditionViolation(family_name(d.family) + " is not a symmetric/skew pair family");
  }
}

SummandDescriptor hermitian_counterpart(const SummandDescriptor& d) {
  validate(d);
  switch (d.family) {
    case Family::CMI1:
      if (odd(d.n)) return make_he1(d.n, Gaussian::i(), SignState::Unknown);
      return make_he1(d.n, mu_from_lambda(d.lambda));
    case Family::CMI2: {
      Gaussian nu = sign_power(d.n) * d.mu * d.mu;
      if (nu == Gaussian(-1)) return make_he2_infinite(d.n, SignState::Unknown);
      Gaussian c = (nu - Gaussian(1)) / (Gaussian::i() * (nu + Gaussian(1)));
      if (!c.is_real()) throw InvariantViolation("HE2 parameter " + to_string(c) + " is not real");
      return make_he2(d.n, c.re(), SignState::Unknown);
    }
    default:
      throw PreconditionViolation(family_name(d.family) + " is not a *congruence family");
  }
}

bool same_class(const std::vector<SummandDescriptor>& a, const std::vector<SummandDescriptor>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (!used[j] && equal_modulo_sign(x, b[j])) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace tricanon
