#include "braidforge/tl.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace braidforge {

namespace {

// Boundary position of a point when the rectangle is traversed along the top
// left to right and back along the bottom right to left.
int boundary_position(int point, int n) { return point <= n ? point - 1 : 3 * n - point; }

void check_noncrossing(const std::vector<int>& pairing) {
  const int n = static_cast<int>(pairing.size()) / 2;
  std::vector<int> point_at(2 * n);
  for (int p = 1; p <= 2 * n; ++p) point_at[boundary_position(p, n)] = p;
  std::vector<int> stack;
  for (int pos = 0; pos < 2 * n; ++pos) {
    int p = point_at[pos];
    int q = pairing[p - 1];
    if (boundary_position(q, n) > pos) {
      stack.push_back(p);
    } else {
      if (stack.empty() || stack.back() != q) {
        throw InputError("pairing has crossing strands");
      }
      stack.pop_back();
    }
  }
}

}  // namespace

PlanarDiagram::PlanarDiagram(std::vector<int> pairing) : pairing_(std::move(pairing)) {
  const int points = static_cast<int>(pairing_.size());
  if (points < 2 || points % 2 != 0) {
    throw InputError("a diagram needs an even, positive number of points");
  }
  for (int p = 1; p <= points; ++p) {
    int q = pairing_[p - 1];
    if (q < 1 || q > points || q == p || pairing_[q - 1] != p) {
      throw InputError("pairing is not a perfect matching");
    }
  }
  check_noncrossing(pairing_);
}

PlanarDiagram PlanarDiagram::identity(int n) {
  if (n < 1) throw InputError("strand count must be at least 1");
  std::vector<int> pairing(2 * n);
  for (int i = 1; i <= n; ++i) {
    pairing[i - 1] = n + i;
    pairing[n + i - 1] = i;
  }
  return PlanarDiagram(std::move(pairing));
}

PlanarDiagram PlanarDiagram::cap_cup(int n, int i) {
  if (i < 1 || i >= n) {
    throw InputError("generator index " + std::to_string(i) + " out of range for " +
                     std::to_string(n) + " strands");
  }
  std::vector<int> pairing(2 * n);
  for (int j = 1; j <= n; ++j) {
    pairing[j - 1] = n + j;
    pairing[n + j - 1] = j;
  }
  pairing[i - 1] = i + 1;
  pairing[i] = i;
  pairing[n + i - 1] = n + i + 1;
  pairing[n + i] = n + i;
  return PlanarDiagram(std::move(pairing));
}

std::pair<PlanarDiagram, int> compose_diagrams(const PlanarDiagram& x, const PlanarDiagram& y) {
  if (x.strand_count() != y.strand_count()) {
    throw InputError("cannot compose diagrams on different strand counts");
  }
  const int n = x.strand_count();
  std::vector<int> result(2 * n, 0);
  std::vector<char> seam_visited(n, 0);

  // Follows a strand through the stacked picture; layer 0 is x, layer 1 is y.
  // Returns the result label where the strand leaves the composite.
  auto walk = [&](int layer, int point) {
    while (true) {
      int q = layer == 0 ? x.partner(point) : y.partner(point);
      if (layer == 0) {
        if (q <= n) return q;  // out at the top
        seam_visited[q - n - 1] = 1;
        layer = 1;
        point = q - n;
      } else {
        if (q > n) return q;  // out at the bottom
        seam_visited[q - 1] = 1;
        layer = 0;
        point = n + q;
      }
    }
  };

  for (int p = 1; p <= 2 * n; ++p) {
    if (result[p - 1] != 0) continue;
    int q = p <= n ? walk(0, p) : walk(1, p);
    result[p - 1] = q;
    result[q - 1] = p;
  }

  int loops = 0;
  for (int j = 1; j <= n; ++j) {
    if (seam_visited[j - 1]) continue;
    int cur = j;
    do {
      seam_visited[cur - 1] = 1;
      int q = y.partner(cur);  // stays among seams on a closed loop
      seam_visited[q - 1] = 1;
      cur = x.partner(n + q) - n;
    } while (cur != j);
    ++loops;
  }
  return {PlanarDiagram(std::move(result)), loops};
}

TLParams make_tl_params(std::complex<double> a_value) {
  if (std::abs(std::abs(a_value) - 1.0) > 1e-12) {
    throw InputError("the bracket parameter must lie on the unit circle");
  }
  std::complex<double> a2 = a_value * a_value;
  return TLParams{a_value, std::real(-(a2 + 1.0 / a2))};
}

TLElement tl_multiply(const TLElement& x, const TLElement& y, const TLParams& params) {
  return tl_multiply(x, y, std::complex<double>(params.loop_value, 0.0));
}

TLElement kauffman_sigma(int i, int n, const TLParams& params, int sign) {
  if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
  std::complex<double> a = params.a_value;
  std::complex<double> a_inv = 1.0 / a;
  if (sign < 0) std::swap(a, a_inv);
  TLElement out = TLElement::identity(n).scaled(a);
  out.add_term(PlanarDiagram::cap_cup(n, i), a_inv);
  return out;
}

SymbolicTLElement kauffman_sigma_symbolic(int i, int n, int sign) {
  if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
  LaurentPoly a = LaurentPoly::monomial(sign);
  LaurentPoly a_inv = LaurentPoly::monomial(-sign);
  SymbolicTLElement out = SymbolicTLElement::identity(n).scaled(a);
  out.add_term(PlanarDiagram::cap_cup(n, i), a_inv);
  return out;
}

LaurentPoly symbolic_loop_value() {
  return LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
}

double max_term_difference(const TLElement& a, const TLElement& b) {
  if (a.strand_count() != b.strand_count()) {
    throw InputError("cannot compare elements on different strand counts");
  }
  double worst = 0.0;
  for (const auto& [d, c] : a.terms()) {
    auto it = b.terms().find(d);
    std::complex<double> other = it == b.terms().end() ? 0.0 : it->second;
    worst = std::max(worst, std::abs(c - other));
  }
  for (const auto& [d, c] : b.terms()) {
    if (!a.terms().contains(d)) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

LinkPattern::LinkPattern(std::vector<int> partners) : partners_(std::move(partners)) {
  const int n = static_cast<int>(partners_.size());
  if (n < 1) throw InputError("a link pattern needs at least one point");
  std::vector<int> stack;
  for (int i = 1; i <= n; ++i) {
    int q = partners_[i - 1];
    if (q < 0 || q > n || q == i) throw InputError("invalid link-pattern partner");
    if (q == 0) {
      if (!stack.empty()) throw InputError("a cup encloses a through-strand");
      continue;
    }
    if (partners_[q - 1] != i) throw InputError("link-pattern cups must be mutual");
    if (q > i) {
      stack.push_back(i);
    } else {
      if (stack.empty() || stack.back() != q) throw InputError("link-pattern cups cross");
      stack.pop_back();
    }
  }
  if (!stack.empty()) throw InputError("unclosed cup in link pattern");
}

int LinkPattern::through_strands() const {
  return static_cast<int>(std::count(partners_.begin(), partners_.end(), 0));
}

namespace {

void enumerate_patterns(int pos, int n, int defects_left, std::vector<int>& partners,
                        std::vector<int>& open_cups, std::vector<LinkPattern>& out) {
  const int remaining = n - pos + 1;
  const int open = static_cast<int>(open_cups.size());
  if (remaining < open + defects_left || (remaining - open - defects_left) % 2 != 0) return;
  if (pos > n) {
    out.emplace_back(partners);
    return;
  }
  open_cups.push_back(pos);
  enumerate_patterns(pos + 1, n, defects_left, partners, open_cups, out);
  open_cups.pop_back();
  if (!open_cups.empty()) {
    int a = open_cups.back();
    open_cups.pop_back();
    partners[a - 1] = pos;
    partners[pos - 1] = a;
    enumerate_patterns(pos + 1, n, defects_left, partners, open_cups, out);
    partners[a - 1] = 0;
    partners[pos - 1] = 0;
    open_cups.push_back(a);
  }
  if (open_cups.empty() && defects_left > 0) {
    enumerate_patterns(pos + 1, n, defects_left - 1, partners, open_cups, out);
  }
}

}  // namespace

std::vector<LinkPattern> link_pattern_module(int n, int p) {
  if (n < 1) throw InputError("strand count must be at least 1");
  if (p < 0 || p > n || (n - p) % 2 != 0) {
    throw InputError("through-strand count " + std::to_string(p) + " is invalid for " +
                     std::to_string(n) + " points");
  }
  std::vector<int> partners(n, 0);
  std::vector<int> open_cups;
  std::vector<LinkPattern> out;
  enumerate_patterns(1, n, p, partners, open_cups, out);
  return out;
}

namespace {

// Stacks the pattern on top of the diagram. Returns the resulting pattern and
// loop count, or nothing when through-strands turn back.
std::optional<std::pair<LinkPattern, int>> apply_diagram(const PlanarDiagram& d,
                                                         const LinkPattern& v) {
  const int n = v.point_count();
  std::vector<int> result(n, 0);
  std::vector<char> assigned(n, 0);
  std::vector<char> top_visited(n, 0);

  // Follows the strand entering the diagram at bottom point n+r upward;
  // returns the bottom point where it exits, or -t when it leaves through the
  // pattern's through-strand at top point t.
  auto trace = [&](int r) {
    int point = n + r;
    while (true) {
      int q = d.partner(point);
      if (q > n) return q;
      top_visited[q - 1] = 1;
      int q2 = v.partner(q);
      if (q2 == 0) return -q;
      top_visited[q2 - 1] = 1;
      point = q2;
    }
  };

  int defects = 0;
  for (int r = 1; r <= n; ++r) {
    if (assigned[r - 1]) continue;
    int exit = trace(r);
    if (exit < 0) {
      assigned[r - 1] = 1;
      ++defects;
    } else {
      int q = exit - n;
      result[r - 1] = q;
      result[q - 1] = r;
      assigned[r - 1] = 1;
      assigned[q - 1] = 1;
    }
  }
  if (defects != v.through_strands()) return std::nullopt;

  int loops = 0;
  for (int t = 1; t <= n; ++t) {
    if (top_visited[t - 1] || v.partner(t) == 0) continue;
    int cur = t;
    do {
      top_visited[cur - 1] = 1;
      int u = v.partner(cur);
      top_visited[u - 1] = 1;
      cur = d.partner(u);  // stays on top along a closed loop
    } while (cur != t);
    ++loops;
  }
  return std::pair{LinkPattern(std::move(result)), loops};
}

// Closes u against v: loops give powers of delta, a strand returning to the
// side it came from gives zero.
double pattern_pairing(const LinkPattern& u, const LinkPattern& v, double delta) {
  const int n = u.point_count();
  std::vector<char> visited(n, 0);
  for (int i = 1; i <= n; ++i) {
    if (visited[i - 1]) continue;
    const bool u_defect = u.partner(i) == 0;
    const bool v_defect = v.partner(i) == 0;
    if (!u_defect && !v_defect) continue;  // interior of a path, or on a loop
    visited[i - 1] = 1;
    if (u_defect && v_defect) continue;  // straight through-line
    bool via_u = u_defect ? false : true;
    bool started_in_u = u_defect;
    int cur = i;
    while (true) {
      int nxt = via_u ? u.partner(cur) : v.partner(cur);
      visited[nxt - 1] = 1;
      int cont = via_u ? v.partner(nxt) : u.partner(nxt);
      if (cont == 0) {
        const bool ends_in_u = !via_u;
        if (ends_in_u == started_in_u) return 0.0;
        break;
      }
      cur = nxt;
      via_u = !via_u;
    }
  }
  int loops = 0;
  for (int i = 1; i <= n; ++i) {
    if (visited[i - 1]) continue;
    int cur = i;
    do {
      visited[cur - 1] = 1;
      int j = u.partner(cur);
      visited[j - 1] = 1;
      cur = v.partner(j);
    } while (cur != i);
    ++loops;
  }
  return std::pow(delta, loops);
}

}  // namespace

Eigen::MatrixXcd module_matrix(const TLElement& element, int p, const TLParams& params) {
  const int n = element.strand_count();
  const std::vector<LinkPattern> basis = link_pattern_module(n, p);
  std::map<LinkPattern, int> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
  for (const auto& [diagram, coeff] : element.terms()) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto image = apply_diagram(diagram, basis[j]);
      if (!image) continue;
      const auto& [pattern, loops] = *image;
      m(index.at(pattern), static_cast<int>(j)) +=
          coeff * std::pow(params.loop_value, loops);
    }
  }
  return m;
}

Eigen::MatrixXd gram_matrix(int n, int p, const TLParams& params) {
  const std::vector<LinkPattern> basis = link_pattern_module(n, p);
  const int d = static_cast<int>(basis.size());
  Eigen::MatrixXd g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      g(i, j) = g(j, i) = pattern_pairing(basis[i], basis[j], params.loop_value);
    }
  }
  return g;
}

RepMatrices rep_matrices(int n, int p, const TLParams& params) {
  RepMatrices rm;
  rm.strand_count = n;
  rm.through_strands = p;
  rm.dimension = static_cast<int>(link_pattern_module(n, p).size());
  for (int i = 1; i < n; ++i) {
    rm.sigma_images.push_back(module_matrix(kauffman_sigma(i, n, params, +1), p, params));
    rm.sigma_inverse_images.push_back(module_matrix(kauffman_sigma(i, n, params, -1), p, params));
  }
  return rm;
}

RepMatrices unitarize(const RepMatrices& rm, const TLParams& params) {
  Eigen::MatrixXd gram = gram_matrix(rm.strand_count, rm.through_strands, params);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  const Eigen::VectorXd eigenvalues = solver.eigenvalues();
  const double scale = std::max(1.0, std::abs(eigenvalues.maxCoeff()));
  if (eigenvalues.minCoeff() <= 1e-12 * scale) {
    throw DomainError("not unitarizable at this parameter");
  }
  const Eigen::MatrixXd vectors = solver.eigenvectors();
  Eigen::MatrixXcd root =
      (vectors * eigenvalues.cwiseSqrt().asDiagonal() * vectors.transpose())
          .cast<std::complex<double>>();
  Eigen::MatrixXcd inverse_root =
      (vectors * eigenvalues.cwiseSqrt().cwiseInverse().asDiagonal() * vectors.transpose())
          .cast<std::complex<double>>();
  RepMatrices out;
  out.strand_count = rm.strand_count;
  out.through_strands = rm.through_strands;
  out.dimension = rm.dimension;
  for (const Eigen::MatrixXcd& m : rm.sigma_images) {
    out.sigma_images.push_back(root * m * inverse_root);
  }
  for (const Eigen::MatrixXcd& m : rm.sigma_inverse_images) {
    out.sigma_inverse_images.push_back(root * m * inverse_root);
  }
  out.unitary = true;
  return out;
}

Eigen::MatrixXcd rep_of_word(const BraidWord& w, const RepMatrices& rm) {
  if (w.strand_count() != rm.strand_count) {
    throw InputError("word and representation strand counts differ");
  }
  Eigen::MatrixXcd product = Eigen::MatrixXcd::Identity(rm.dimension, rm.dimension);
  for (const BraidLetter& letter : w.letters()) {
    const auto& images = letter.sign > 0 ? rm.sigma_images : rm.sigma_inverse_images;
    product = product * images[letter.index - 1];
  }
  return product;
}

}  // namespace braidforge
