#include "qlie/classify.hpp"

#include <algorithm>

#include "qlie/constructions.hpp"
#include "qlie/witt.hpp"

namespace qlie {

const char* family_name(Family f) {
  switch (f) {
    case Family::A1: return "A1";
    case Family::Diamond: return "Diamond";
    case Family::G5: return "G5";
    case Family::G6Nilpotent: return "G6Nilpotent";
    case Family::G6Diagonalizable: return "G6Diagonalizable";
    case Family::G6Jordan: return "G6Jordan";
  }
  return "?";
}

std::vector<QuadraticLieAlgebra> decompose(const QuadraticLieAlgebra& g) {
  require_valid(g);
  if (!derived_series(g).solvable) fail(errc::not_solvable, "algebra is not solvable");

  Reduction red = reduce(g);
  std::vector<QuadraticLieAlgebra> parts;
  for (std::size_t a = 0; a < red.central_part.dim(); ++a) {
    Matrix gram(1, 1);
    gram.at(0, 0) = red.central_part.gram().at(a, a);
    parts.emplace_back(1, std::vector<BracketEntry>{}, std::move(gram));
  }
  if (red.reduced_part.dim() > 0) {
    if (red.reduced_part.dim() > 6)
      fail(errc::unsupported_dimension,
           "reduced non-Abelian part has dimension " + std::to_string(red.reduced_part.dim()));
    parts.push_back(red.reduced_part);
  }
  return parts;
}

ExtensionFrame extract_frame(const QuadraticLieAlgebra& g) {
  std::size_t n = g.dim();
  Subspace z = center(g);

  for (std::size_t cand = 0; cand < z.dim(); ++cand) {
    Vec f = z.basis_vector(cand);
    // the center of a reduced algebra is totally isotropic, so span{f} always
    // extends to a hyperbolic pair
    WittDecomposition wd = witt_extend(g.gram(), Subspace::span(n, {f}));
    Vec e = wd.w.row(0);

    Subspace ef = Subspace::span(n, {f, e});
    Subspace q = orthogonal_complement(g, ef);
    Subspace f_line = Subspace::span(n, {f});

    // a valid frame needs every bracket of q-vectors to fall on the f-line
    bool abelian_mod_f = true;
    for (std::size_t a = 0; a < q.dim() && abelian_mod_f; ++a)
      for (std::size_t b = a + 1; b < q.dim(); ++b) {
        Vec w = g.bracket(q.basis_vector(a), q.basis_vector(b));
        if (!f_line.contains(w)) {
          abelian_mod_f = false;
          break;
        }
      }
    if (!abelian_mod_f) continue;

    Matrix qt = q.basis().transpose();
    Matrix c(q.dim(), q.dim());
    for (std::size_t a = 0; a < q.dim(); ++a) {
      Vec img = g.bracket(e, q.basis_vector(a));
      Vec coords = solve(qt, img); // [e, q] stays in q
      for (std::size_t r = 0; r < q.dim(); ++r) c.at(r, a) = coords[r];
    }
    Matrix q_gram = q.basis() * g.gram() * qt;
    return ExtensionFrame{std::move(f), std::move(e), q.basis(), std::move(c), std::move(q_gram)};
  }
  fail(errc::no_frame, "no central candidate exhibits a double extension of an abelian space");
}

namespace {

Subspace image_space(const Matrix& m) {
  return Subspace::row_space(m.transpose());
}

// canonical representative of {±lambda, ±1/lambda} from kappa, when it
// exists in Q(i): the root of x^2 + (2-kappa)x + 1 of norm >= 1 that is a
// perfect square, sign-normalized
std::optional<Scalar> recover_lambda(const Scalar& kappa) {
  Scalar p = Scalar(2) - kappa;
  Scalar disc = p * p - Scalar(4);
  auto root = sqrt_exact(disc);
  if (!root) return std::nullopt;
  Scalar half = Scalar(1) / Scalar(2);
  Scalar x1 = (-p + *root) * half;
  Scalar x2 = (-p - *root) * half;
  Scalar x = x1;
  if (x1.norm() != x2.norm())
    x = x1.norm() > x2.norm() ? x1 : x2;
  else if (scalar_less(x1, x2))
    x = x2;
  auto lambda = sqrt_exact(x);
  if (!lambda) return std::nullopt;
  // sqrt_exact already picks re > 0, or re = 0 with im >= 0
  return lambda;
}

} // namespace

ClassLabel classify_skew_orbit(const LinearMap& c, const Matrix& q_gram) {
  if (c.rows() != 4 || c.cols() != 4 || q_gram.rows() != 4 || q_gram.cols() != 4)
    fail(errc::dimension_mismatch, "orbit classification expects 4x4 data");
  Matrix skew = q_gram * c + c.transpose() * q_gram;
  if (!skew.is_zero()) fail(errc::not_skew, "map is not skew with respect to the form");

  Subspace ker = Subspace::row_space(kernel_basis(c));
  if (!image_space(c).contains(ker))
    fail(errc::kernel_not_in_image, "kernel not contained in image: extension is decomposable");

  Polynomial p = char_poly(c);
  if (!p.coeff(1).is_zero() || !p.coeff(3).is_zero())
    fail(errc::unexpected_orbit, "characteristic polynomial of a skew map must be even");
  Scalar a = p.coeff(2);
  Scalar b = p.coeff(0);

  if (a.is_zero() && b.is_zero()) return ClassLabel{Family::G6Nilpotent, {}, {}};

  if (is_squarefree(p)) {
    Scalar kappa = a * a / b; // b = det(c) != 0 when p is squarefree
    return ClassLabel{Family::G6Diagonalizable, kappa, recover_lambda(kappa)};
  }

  // repeated roots with b != 0 force p = (t^2 - mu^2)^2; the minimal
  // polynomial decides between the semisimple orbit (kappa = 4) and the
  // Jordan one, which share this characteristic polynomial
  if (b.is_zero() || a * a != Scalar(4) * b)
    fail(errc::unexpected_orbit, "skew orbit outside the three families: " + to_string(p));
  Polynomial squarefree_part = poly_divmod(p, poly_gcd(p, p.derivative())).quotient;
  if (poly_eval(squarefree_part, c).is_zero()) {
    Scalar kappa = a * a / b;
    return ClassLabel{Family::G6Diagonalizable, kappa, recover_lambda(kappa)};
  }
  return ClassLabel{Family::G6Jordan, {}, {}};
}

std::vector<ClassLabel> classify(const QuadraticLieAlgebra& g) {
  std::vector<ClassLabel> labels;
  for (const auto& part : decompose(g)) {
    if (part.dim() == 1) {
      labels.push_back(ClassLabel{Family::A1, {}, {}});
      continue;
    }
    // reduced non-Abelian component: dimension decides the family up to the
    // six-dimensional case, which needs its orbit invariant
    switch (part.dim()) {
      case 4:
        labels.push_back(ClassLabel{Family::Diamond, {}, {}});
        break;
      case 5:
        labels.push_back(ClassLabel{Family::G5, {}, {}});
        break;
      case 6: {
        ExtensionFrame frame = extract_frame(part);
        labels.push_back(classify_skew_orbit(frame.c, frame.q_gram));
        break;
      }
      default:
        fail(errc::unexpected_orbit,
             "reduced solvable component of impossible dimension " + std::to_string(part.dim()));
    }
  }
  std::sort(labels.begin(), labels.end(), [](const ClassLabel& a, const ClassLabel& b) {
    if (a.family != b.family) return static_cast<int>(a.family) < static_cast<int>(b.family);
    if (a.kappa.has_value() != b.kappa.has_value()) return b.kappa.has_value();
    if (a.kappa && b.kappa && *a.kappa != *b.kappa) return scalar_less(*a.kappa, *b.kappa);
    return false;
  });
  return labels;
}

bool same_class(const ClassLabel& a, const ClassLabel& b) {
  if (a.family != b.family) return false;
  if (a.family == Family::G6Diagonalizable) return a.kappa == b.kappa;
  return true;
}

} // namespace qlie
