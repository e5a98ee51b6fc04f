#pragma once

// Gabrielov–Picard–Lefschetz moves on cyclically ordered bases, the move
// words that carry the factorized bases of A4*A2*A1 and A3*A2*A1 onto E8 and
// E6 root bases, Weyl-word arithmetic, and conjugator search.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "cartan/lattice.hpp"
#include "cartan/matrix.hpp"
#include "cartan/rootsys.hpp"

namespace cartan::gabrielov {

enum class MoveKind { alpha, beta, gamma };

struct Move {
  MoveKind kind;
  int index;  // 1-based

  friend bool operator==(const Move&, const Move&) = default;
};

using MoveWord = std::vector<Move>;
using WeylWord = std::vector<int>;  // simple-reflection indices, 1-based

enum class CompositionOrder { rightmost_first, leftmost_first };

/// Sign σ in α/β and the order in which a tabulated word is applied.
/// The defaults are the only pair that reproduces Gᵗ A_* G = A(E8).
struct MoveConvention {
  int sigma = -1;
  CompositionOrder order = CompositionOrder::rightmost_first;

  std::string describe() const {
    return std::string("sigma=") + (sigma > 0 ? "+1" : "-1") +
           (order == CompositionOrder::rightmost_first ? ",rightmost-first" : ",leftmost-first");
  }
};

/// Parses "g2 g1 b4 a1" (also accepts the Greek letters α β γ). Whitespace
/// between moves is optional.
inline MoveWord parse_move_word(std::string_view text) {
  MoveWord w;
  std::size_t i = 0;
  auto starts_with = [&](std::string_view p) { return text.substr(i, p.size()) == p; };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    MoveKind k;
    if (text[i] == 'a') {
      k = MoveKind::alpha, i += 1;
    } else if (text[i] == 'b') {
      k = MoveKind::beta, i += 1;
    } else if (text[i] == 'g') {
      k = MoveKind::gamma, i += 1;
    } else if (starts_with("α")) {
      k = MoveKind::alpha, i += std::string_view("α").size();
    } else if (starts_with("β")) {
      k = MoveKind::beta, i += std::string_view("β").size();
    } else if (starts_with("γ")) {
      k = MoveKind::gamma, i += std::string_view("γ").size();
    } else {
      throw std::invalid_argument("bad move symbol in '" + std::string(text) + "'");
    }
    int idx = 0;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      idx = idx * 10 + (text[i] - '0');
      ++i, ++digits;
    }
    if (digits == 0) throw std::invalid_argument("move without index in '" + std::string(text) + "'");
    w.push_back({k, idx});
  }
  return w;
}

inline std::string to_string(const MoveWord& w) {
  std::string s;
  for (const auto& m : w) {
    if (!s.empty()) s += ' ';
    s += m.kind == MoveKind::alpha ? 'a' : m.kind == MoveKind::beta ? 'b' : 'g';
    s += std::to_string(m.index);
  }
  return s;
}

inline std::string to_string(const WeylWord& w) {
  std::string s;
  for (int i : w) {
    if (!s.empty()) s += ' ';
    s += "s" + std::to_string(i);
  }
  return s.empty() ? "e" : s;
}

/// Word carrying f_1..f_8 of A4*A2*A1 to a Gabrielov-ordered E8 root basis.
inline MoveWord e8_word() { return parse_move_word("g2 g1 b4 b3 a3 a4 b4 a5 a6 a7 a1 a2 a3 a4 b6 b3 a1"); }
/// Same for A3*A2*A1 -> E6.
inline MoveWord e6_word() { return parse_move_word("g4 g1 a1 a2 a3 a4 b6 b3 a1"); }

// ---------------------------------------------------------------------------

/// An ordered basis of a lattice with a fixed ambient form. Row i of `basis`
/// holds the ambient coordinates of x_i. Pairings are always taken with the
/// ambient form on the current basis vectors.
class BasedLattice {
 public:
  BasedLattice(IntMatrix ambient_gram, IntMatrix basis) : gram_(std::move(ambient_gram)), basis_(std::move(basis)) {
    if (!gram_.square() || !gram_.symmetric()) throw std::domain_error("ambient form must be square symmetric");
    if (basis_.rows() != gram_.rows() || basis_.cols() != gram_.rows())
      throw std::invalid_argument("basis has wrong size");
  }

  static BasedLattice standard(IntMatrix ambient_gram) {
    const std::size_t n = ambient_gram.rows();
    return {std::move(ambient_gram), IntMatrix::identity(n)};
  }

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& ambient_gram() const { return gram_; }
  const IntMatrix& basis() const { return basis_; }
  IntMatrix& basis() { return basis_; }

  /// basis · A · basisᵗ
  IntMatrix gram() const { return basis_ * gram_ * basis_.transpose(); }

  Int pairing(std::size_t i, std::size_t j) const {
    Int s = 0;
    for (std::size_t p = 0; p < rank(); ++p) {
      if (basis_(i, p) == 0) continue;
      for (std::size_t q = 0; q < rank(); ++q)
        s = detail::add(s, detail::mul(detail::mul(basis_(i, p), gram_(p, q)), basis_(j, q)));
    }
    return s;
  }

  friend bool operator==(const BasedLattice&, const BasedLattice&) = default;

 private:
  IntMatrix gram_;
  IntMatrix basis_;
};

namespace detail {

inline std::size_t slot(const BasedLattice& b, int m) {
  if (m < 1 || static_cast<std::size_t>(m) > b.rank()) throw std::out_of_range("move index out of range");
  return static_cast<std::size_t>(m - 1);
}

}  // namespace detail

/// α_m: x_m <- x_{m+1} + σ (x_{m+1}, x_m) x_m,  x_{m+1} <- x_m (indices mod rank).
inline BasedLattice alpha(BasedLattice b, int m, const MoveConvention& conv = {}) {
  const std::size_t i = detail::slot(b, m);
  const std::size_t j = (i + 1) % b.rank();
  const Int c = cartan::detail::mul(Int{conv.sigma}, b.pairing(j, i));
  auto& x = b.basis();
  for (std::size_t p = 0; p < b.rank(); ++p) {
    const Int xi = x(i, p);
    x(i, p) = cartan::detail::add(x(j, p), cartan::detail::mul(c, xi));
    x(j, p) = xi;
  }
  return b;
}

/// β_m: x_{m-1} <- x_m,  x_m <- x_{m-1} + σ (x_{m-1}, x_m) x_m.
inline BasedLattice beta(BasedLattice b, int m, const MoveConvention& conv = {}) {
  const std::size_t i = detail::slot(b, m);
  const std::size_t j = (i + b.rank() - 1) % b.rank();
  const Int c = cartan::detail::mul(Int{conv.sigma}, b.pairing(j, i));
  auto& x = b.basis();
  for (std::size_t p = 0; p < b.rank(); ++p) {
    const Int xi = x(i, p);
    x(i, p) = cartan::detail::add(x(j, p), cartan::detail::mul(c, xi));
    x(j, p) = xi;
  }
  return b;
}

/// γ_m: x_m <- -x_m.
inline BasedLattice gamma(BasedLattice b, int m, const MoveConvention& = {}) {
  const std::size_t i = detail::slot(b, m);
  for (std::size_t p = 0; p < b.rank(); ++p) b.basis()(i, p) = -b.basis()(i, p);
  return b;
}

inline BasedLattice apply_move(BasedLattice b, const Move& mv, const MoveConvention& conv = {}) {
  switch (mv.kind) {
    case MoveKind::alpha: return alpha(std::move(b), mv.index, conv);
    case MoveKind::beta: return beta(std::move(b), mv.index, conv);
    case MoveKind::gamma: return gamma(std::move(b), mv.index, conv);
  }
  return b;
}

/// Applies a tabulated word. With rightmost_first the last symbol acts first.
inline BasedLattice apply_word(BasedLattice b, const MoveWord& w, const MoveConvention& conv = {}) {
  if (conv.order == CompositionOrder::rightmost_first) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) b = apply_move(std::move(b), *it, conv);
  } else {
    for (const auto& mv : w) b = apply_move(std::move(b), mv, conv);
  }
  return b;
}

// ---------------------------------------------------------------------------
// Weyl group words.

inline IntMatrix simple_reflection(const RootSystemId& id, int i) { return reflection(cartan_matrix(id), i); }

inline IntMatrix weyl_apply(const RootSystemId& id, const WeylWord& w) {
  return reflection_product(cartan_matrix(id), w);
}

/// Gabrielov's Coxeter element s1 s3 s4 s2 s5 ... s_n in Bourbaki numbering.
inline WeylWord gabrielov_coxeter_word(int rank) {
  WeylWord w{1, 3, 4, 2};
  for (int i = 5; i <= rank; ++i) w.push_back(i);
  return w;
}

/// Bipartite word: white vertices (ascending) then black vertices (ascending).
inline WeylWord bipartite_word(const RootSystemId& id) {
  const auto col = bipartition(id);
  WeylWord w;
  for (int pass = 0; pass < 2; ++pass)
    for (int v = 0; v < id.rank; ++v)
      if ((col[v] == Color::white) == (pass == 0)) w.push_back(v + 1);
  return w;
}

/// Conjugator w with w⁻¹ C_BW(E8) w = C_G(E8).
inline WeylWord e8_tabulated_conjugator() { return {7, 5, 3, 2, 6, 4, 5, 1, 3, 2, 4, 1, 3, 2, 1, 2}; }
/// The E6 conjugator v exactly as tabulated (contains the cancelling pair s3 s3).
inline WeylWord e6_tabulated_conjugator() { return {5, 3, 2, 4, 1, 3, 3, 1, 2}; }

/// True iff w⁻¹ C1 w = C2, i.e. C1 W = W C2.
inline bool conjugates(const IntMatrix& a, const WeylWord& w, const IntMatrix& c1, const IntMatrix& c2) {
  const IntMatrix m = reflection_product(a, w);
  return c1 * m == m * c2;
}

/// Breadth-first search over Weyl words of length <= max_len for w with
/// w⁻¹ C1 w = C2. Words are extended on the right in ascending generator
/// order and group elements are deduplicated by exact matrix entries, so the
/// returned word is the shortlex-smallest among the shortest.
inline std::optional<WeylWord> find_conjugator(const IntMatrix& a, const IntMatrix& c1, const IntMatrix& c2,
                                               int max_len = 20, std::size_t max_nodes = 2'000'000) {
  const std::size_t n = a.rows();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 1; i <= n; ++i) gens.push_back(reflection(a, static_cast<int>(i)));

  struct Hash {
    std::size_t operator()(const std::vector<Int>& v) const {
      std::size_t h = 1469598103934665603ull;
      for (Int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ull;
      return h;
    }
  };
  std::unordered_set<std::vector<Int>, Hash> seen;

  const IntMatrix id = IntMatrix::identity(n);
  if (c1 == c2) return WeylWord{};
  seen.insert(id.data());
  std::vector<std::pair<WeylWord, IntMatrix>> frontier{{WeylWord{}, id}};
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::pair<WeylWord, IntMatrix>> next;
    for (const auto& [w, m] : frontier) {
      for (std::size_t g = 0; g < n; ++g) {
        IntMatrix nm = m * gens[g];
        if (!seen.insert(nm.data()).second) continue;
        WeylWord nw = w;
        nw.push_back(static_cast<int>(g + 1));
        if (c1 * nm == nm * c2) return nw;
        if (seen.size() > max_nodes) return std::nullopt;
        next.emplace_back(std::move(nw), std::move(nm));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Factorizations.

struct IdentityCheck {
  std::string identity;
  bool passed = false;
  double max_abs_deviation = 0.0;
  std::string convention_flags;
};

struct Factorization {
  RootSystemId target;
  std::vector<RootSystemId> factors;
  IntMatrix ambient_cartan;    // A_* = A(factor_1) * A(factor_2) * ...
  IntMatrix ambient_coxeter;   // C_* = C(factor_1) ⊗ C(factor_2) ⊗ ...
  IntMatrix g_prime;           // columns: new basis in f-coordinates, Gabrielov order
  IntMatrix gabrielov_cartan;  // G'ᵗ A_* G'
  std::vector<int> relabel;    // Gabrielov label (0-based) -> Bourbaki label (0-based)
  IntMatrix g;                 // G = G' P
  std::vector<IdentityCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
  }
};

/// Permutations π with target(π(i), π(j)) = source(i, j), found by exhaustive
/// search, ordered by number of moved points then lexicographically.
inline std::vector<std::vector<int>> relabelings(const IntMatrix& source, const IntMatrix& target) {
  const std::size_t n = source.rows();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> found;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = target(p[i], p[j]) == source(i, j);
    if (ok) found.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto moved = [](const std::vector<int>& q) {
    int c = 0;
    for (std::size_t i = 0; i < q.size(); ++i) c += q[i] != static_cast<int>(i);
    return c;
  };
  std::stable_sort(found.begin(), found.end(), [&](const auto& x, const auto& y) { return moved(x) < moved(y); });
  return found;
}

/// Runs the word on the factorized basis of `factors`, relabels Gabrielov's
/// ordering to Bourbaki's by graph matching, and checks
///   (a) Gᵗ A_* G = A(target)  and  (b) G⁻¹ C_* G = C_G(target).
inline Factorization factorize(const RootSystemId& target, const std::vector<RootSystemId>& factors,
                               const MoveWord& word, const MoveConvention& conv = {}) {
  Factorization f;
  f.target = target;
  f.factors = factors;
  const PolarizedLattice star = join_of(factors);
  f.ambient_cartan = star.cartan();
  f.ambient_coxeter = IntMatrix::identity(1);
  for (const auto& id : factors) f.ambient_coxeter = kron(f.ambient_coxeter, coxeter(standard_polarization(id)).matrix());

  const BasedLattice moved = apply_word(BasedLattice::standard(f.ambient_cartan), word, conv);
  f.g_prime = moved.basis().transpose();
  f.gabrielov_cartan = moved.gram();

  const IntMatrix bourbaki = cartan_matrix(target);
  const std::string flags = conv.describe();
  const auto perms = relabelings(f.gabrielov_cartan, bourbaki);
  if (perms.empty()) {
    std::ostringstream os;
    os << "Gram matrix of the moved basis is not a relabeling of A(" << target.name() << "):\n"
       << f.gabrielov_cartan;
    f.checks.push_back({"G'^t A_* G' ~ A(" + target.name() + ")", false,
                        max_abs_diff(f.gabrielov_cartan, bourbaki), flags + "; " + os.str()});
    return f;
  }
  f.relabel = perms.front();

  const std::size_t n = bourbaki.rows();
  IntMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, f.relabel[i]) = 1;
  f.g = f.g_prime * p;

  const IntMatrix gram = f.g.transpose() * f.ambient_cartan * f.g;
  const double dev_a = max_abs_diff(gram, bourbaki);
  f.checks.push_back({"A(" + target.name() + ") = G^t A_* G", dev_a == 0.0, dev_a, flags});

  const IntMatrix cg = reflection_product(bourbaki, gabrielov_coxeter_word(target.rank));
  const RationalMatrix ginv = rational_inverse(f.g);
  if (!ginv.integral()) {
    f.checks.push_back({"C_G = G^-1 C_* G", false, 1.0, flags + "; G not unimodular"});
    return f;
  }
  const double dev_c = max_abs_diff(ginv.numerator * f.ambient_coxeter * f.g, cg);
  f.checks.push_back({"C_G(" + target.name() + ") = G^-1 C_* G", dev_c == 0.0, dev_c, flags});
  return f;
}

inline Factorization e8_factorization(const MoveConvention& conv = {}) {
  return factorize(E(8), {A(4), A(2), A(1)}, e8_word(), conv);
}

inline Factorization e6_factorization(const MoveConvention& conv = {}) {
  return factorize(E(6), {A(3), A(2), A(1)}, e6_word(), conv);
}

/// The G matrices exactly as tabulated.
inline IntMatrix e8_tabulated_g() {
  return {{0, 0, 0, 1, -1, 0, 0, 0},  {-1, 1, 0, 0, 0, 0, 0, 0}, {0, 0, -1, 1, 0, 0, 0, 0},
          {-1, 1, -1, 0, 0, 1, 0, 0}, {0, 1, -1, 0, 0, 0, 1, 0}, {-1, 1, -1, 0, 0, 0, 1, 0},
          {0, 1, -1, 0, 0, 0, 0, 1},  {0, 1, -1, 0, 0, 0, 0, 0}};
}

inline IntMatrix e6_tabulated_g() {
  return {{0, -1, 1, 0, 0, 0}, {-1, 0, 1, 0, 0, 0}, {0, -1, 0, 1, 0, 0},
          {-1, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1},  {-1, 0, 0, 0, 0, 1}};
}

// ---------------------------------------------------------------------------
// Root images.

/// All n(n+1) roots of A_n in simple-root coordinates, from e_i - e_j.
inline std::vector<std::vector<Int>> an_roots(int n) {
  std::vector<std::vector<Int>> roots;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      // e_i - e_j = ±(α_min + ... + α_{max-1})
      std::vector<Int> v(n, 0);
      const int lo = std::min(i, j), hi = std::max(i, j);
      for (int k = lo; k < hi; ++k) v[k] = i < j ? 1 : -1;
      roots.push_back(std::move(v));
    }
  return roots;
}

struct RootImage {
  std::size_t domain_size = 0;
  std::size_t image_size = 0;
  bool all_norm_2 = false;
};

/// Maps every x⊗y⊗z over R(A4)×R(A2)×R(A1) through G⁻¹ into Q(E8) and
/// counts distinct images.
inline RootImage root_image_count(const Factorization& f) {
  if (!f.passed()) throw std::runtime_error("factorization unavailable");
  const IntMatrix ginv = integer_inverse(f.g);
  const IntMatrix target = cartan_matrix(f.target);
  std::vector<std::vector<std::vector<Int>>> root_sets;
  for (const auto& id : f.factors) {
    if (id.family != Family::A) throw std::invalid_argument("root images need A_n factors");
    root_sets.push_back(an_roots(id.rank));
  }
  RootImage r;
  r.all_norm_2 = true;
  std::set<std::vector<Int>> image;
  std::vector<std::size_t> idx(root_sets.size(), 0);
  while (true) {
    std::vector<Int> v{1};
    for (std::size_t k = 0; k < root_sets.size(); ++k) v = kron(v, root_sets[k][idx[k]]);
    std::vector<Int> e = ginv * v;
    const std::vector<Int> ae = target * e;
    Int norm = 0;
    for (std::size_t i = 0; i < e.size(); ++i) norm = cartan::detail::add(norm, cartan::detail::mul(e[i], ae[i]));
    r.all_norm_2 = r.all_norm_2 && norm == 2;
    image.insert(std::move(e));
    ++r.domain_size;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == root_sets[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  r.image_size = image.size();
  return r;
}

// ---------------------------------------------------------------------------
// Conjugator reports.

struct ConjugatorReport {
  RootSystemId id;
  WeylWord tabulated;
  bool tabulated_ok = false;
  std::optional<WeylWord> repaired;  // set only when the tabulated word fails
  bool passed() const { return tabulated_ok || repaired.has_value(); }
};

/// Verifies the tabulated w⁻¹ C_BW w = C_G and, on failure, searches for a
/// replacement of length <= max_len.
inline ConjugatorReport check_conjugator(const RootSystemId& id, const WeylWord& tabulated, int max_len) {
  const IntMatrix a = cartan_matrix(id);
  const IntMatrix cbw = reflection_product(a, bipartite_word(id));
  const IntMatrix cg = reflection_product(a, gabrielov_coxeter_word(id.rank));
  ConjugatorReport r{id, tabulated, conjugates(a, tabulated, cbw, cg), std::nullopt};
  if (!r.tabulated_ok) r.repaired = find_conjugator(a, cbw, cg, max_len);
  return r;
}

inline ConjugatorReport e8_conjugator_report() { return check_conjugator(E(8), e8_tabulated_conjugator(), 0); }
inline ConjugatorReport e6_conjugator_report(int max_len = 12) {
  return check_conjugator(E(6), e6_tabulated_conjugator(), max_len);
}

/// A conjugator that is known to work: the tabulated one if it verifies,
/// otherwise the repaired one.
inline WeylWord working_conjugator(const ConjugatorReport& r) {
  if (r.tabulated_ok) return r.tabulated;
  if (!r.repaired) throw std::runtime_error("no conjugator available for " + r.id.name());
  return *r.repaired;
}

}  // namespace cartan::gabrielov
