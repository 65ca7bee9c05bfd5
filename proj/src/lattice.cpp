#include "k3aut/lattice.hpp"

#include <cctype>

namespace k3aut {

GramLattice make_lattice(IntMatrix gram, std::string name) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("Gram matrix must be square");
  if (gram.rows() == 0) throw std::invalid_argument("Gram matrix must be nonempty");
  if (!exact_equal(gram, IntMatrix(gram.transpose())))
    throw std::invalid_argument("Gram matrix must be symmetric");
  if (integer_determinant(gram) == 0) throw std::invalid_argument("Gram matrix must be nondegenerate");
  return GramLattice{std::move(gram), std::move(name)};
}

namespace {

IntMatrix negated_cartan(int rank, const std::vector<std::pair<int, int>>& edges) {
  IntMatrix g = IntMatrix::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) g(i, i) = -2;
  for (auto [i, j] : edges) {
    g(i, j) = 1;
    g(j, i) = 1;
  }
  return g;
}

}  // namespace

GramLattice lattice_u(int scale) {
  if (scale == 0) throw std::invalid_argument("U(0) is degenerate");
  IntMatrix g(2, 2);
  g << 0, scale, scale, 0;
  std::string name = scale == 1 ? "U" : "U(" + std::to_string(scale) + ")";
  return GramLattice{std::move(g), std::move(name)};
}

GramLattice lattice_a(int k) {
  if (k < 1) throw std::invalid_argument("A_k needs k >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  return GramLattice{negated_cartan(k, edges), "A" + std::to_string(k)};
}

GramLattice lattice_d(int k) {
  if (k < 4) throw std::invalid_argument("D_k needs k >= 4");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 2 < k; ++i) edges.push_back({i, i + 1});
  edges.push_back({k - 3, k - 1});
  return GramLattice{negated_cartan(k, edges), "D" + std::to_string(k)};
}

GramLattice lattice_e(int k) {
  if (k < 6 || k > 8) throw std::invalid_argument("E_k needs k in {6,7,8}");
  // Bourbaki numbering: a chain 1-3-4-...-k with node 2 hanging off node 4.
  std::vector<std::pair<int, int>> edges = {{0, 2}, {1, 3}};
  for (int i = 2; i + 1 < k; ++i) edges.push_back({i, i + 1});
  return GramLattice{negated_cartan(k, edges), "E" + std::to_string(k)};
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  const int ra = a.rank(), rb = b.rank();
  IntMatrix g = IntMatrix::Zero(ra + rb, ra + rb);
  g.topLeftCorner(ra, ra) = a.gram;
  g.bottomRightCorner(rb, rb) = b.gram;
  std::string name;
  if (!a.name.empty() && !b.name.empty())
    name = a.name + "+" + b.name;
  return GramLattice{std::move(g), std::move(name)};
}

GramLattice twist(const GramLattice& lattice, int scale) {
  if (scale == 0) throw std::invalid_argument("twist by 0 is degenerate");
  GramLattice out = lattice;
  out.gram *= Int(scale);
  if (!out.name.empty()) out.name += "(" + std::to_string(scale) + ")";
  return out;
}

namespace {

struct ExprCursor {
  const std::string& text;
  size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }
  char take() {
    skip_space();
    if (pos >= text.size()) throw std::invalid_argument("unexpected end of lattice expression");
    return text[pos++];
  }
  int take_int() {
    skip_space();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw std::invalid_argument("expected an integer in lattice expression");
    return std::stoi(text.substr(start, pos - start));
  }
};

}  // namespace

std::vector<LatticeTerm> parse_lattice_expr(const std::string& expr) {
  ExprCursor cur{expr};
  std::vector<LatticeTerm> terms;
  for (;;) {
    char family = cur.take();
    if (family != 'U' && family != 'A' && family != 'D' && family != 'E')
      throw std::invalid_argument(std::string("unknown lattice family '") + family + "'");
    LatticeTerm term{family, 0, 1};
    if (family != 'U') {
      term.index = cur.take_int();
      if (term.index < 0) throw std::invalid_argument("negative lattice subscript");
    }
    if (cur.peek() == '(') {
      cur.take();
      term.scale = cur.take_int();
      if (cur.take() != ')') throw std::invalid_argument("missing ')' in lattice expression");
    }
    terms.push_back(term);
    if (cur.done()) break;
    char sep = cur.take();
    if (sep != '+') throw std::invalid_argument(std::string("expected '+' but found '") + sep + "'");
  }
  return terms;
}

GramLattice build_term(const LatticeTerm& term) {
  GramLattice base = [&] {
    switch (term.family) {
      case 'U':
        return lattice_u(term.scale);
      case 'A':
        return lattice_a(term.index);
      case 'D':
        return lattice_d(term.index);
      case 'E':
        return lattice_e(term.index);
      default:
        throw std::invalid_argument("unknown lattice family");
    }
  }();
  if (term.family != 'U' && term.scale != 1) base = twist(base, term.scale);
  return base;
}

GramLattice build_lattice(const std::string& expr) {
  std::vector<LatticeTerm> terms = parse_lattice_expr(expr);
  GramLattice result = build_term(terms[0]);
  for (size_t i = 1; i < terms.size(); ++i) result = direct_sum(result, build_term(terms[i]));
  result.name = render_lattice_expr(terms);
  return result;
}

std::string render_lattice_expr(const std::vector<LatticeTerm>& terms) {
  std::string out;
  for (const LatticeTerm& term : terms) {
    if (!out.empty()) out += "+";
    out += term.family;
    if (term.family != 'U') out += std::to_string(term.index);
    if (term.scale != 1) out += "(" + std::to_string(term.scale) + ")";
  }
  return out;
}

bool is_even(const GramLattice& lattice) {
  for (int i = 0; i < lattice.rank(); ++i)
    if (lattice.gram(i, i) % 2 != 0) return false;
  return true;
}

Int lattice_determinant(const GramLattice& lattice) { return integer_determinant(lattice.gram); }

std::pair<int, int> lattice_signature(const GramLattice& lattice) {
  Inertia inertia = symmetric_inertia(to_rational(lattice.gram));
  if (inertia.zero != 0) throw std::domain_error("degenerate Gram matrix");
  return {inertia.positive, inertia.negative};
}

DiscriminantGroup discriminant_group(const GramLattice& lattice) {
  SmithDecomposition snf = smith_normal_form(lattice.gram);
  const int n = lattice.rank();
  DiscriminantGroup group;
  std::vector<int> nontrivial;
  for (int i = 0; i < n; ++i) {
    Int d = snf.d(i, i);
    if (d == 0) throw std::domain_error("degenerate Gram matrix");
    group.order *= d;
    if (d > 1) nontrivial.push_back(i);
  }
  group.generator_lifts = RatMatrix::Zero(n, static_cast<Eigen::Index>(nontrivial.size()));
  for (size_t k = 0; k < nontrivial.size(); ++k) {
    int i = nontrivial[k];
    Int d = snf.d(i, i);
    group.invariant_factors.push_back(d);
    for (int row = 0; row < n; ++row)
      group.generator_lifts(row, static_cast<Eigen::Index>(k)) = Rat(snf.v(row, i)) / Rat(d);
  }
  return group;
}

int delta_invariant(const GramLattice& lattice, const DiscriminantGroup& group) {
  for (const Int& d : group.invariant_factors)
    if (d != 2) throw std::domain_error("delta is defined for 2-elementary lattices only");
  if (!is_even(lattice)) throw std::domain_error("delta is defined for even lattices only");
  const int a = static_cast<int>(group.invariant_factors.size());
  if (a > 22) throw std::runtime_error("discriminant group too large to enumerate");

  // Pairwise dual pairings; the square of a subset sum is assembled
  // incrementally along a Gray code walk over all 2^a classes.
  RatMatrix pairings = group.generator_lifts.transpose() * to_rational(lattice.gram) * group.generator_lifts;
  std::vector<Rat> dot(static_cast<size_t>(a), Rat(0));
  Rat norm(0);
  unsigned long members = 0;
  const unsigned long total = 1ul << a;
  for (unsigned long m = 1; m < total; ++m) {
    int bit = __builtin_ctzl(m);
    bool adding = !(members >> bit & 1ul);
    if (adding) {
      norm += pairings(bit, bit) + Rat(2) * dot[static_cast<size_t>(bit)];
      for (int j = 0; j < a; ++j) dot[static_cast<size_t>(j)] += pairings(bit, j);
      members |= 1ul << bit;
    } else {
      for (int j = 0; j < a; ++j) dot[static_cast<size_t>(j)] -= pairings(bit, j);
      norm -= pairings(bit, bit) + Rat(2) * dot[static_cast<size_t>(bit)];
      members &= ~(1ul << bit);
    }
    Rat canon = norm;
    canon.canonicalize();
    if (canon.get_den() != 1) return 1;
  }
  return 0;
}

LatticeInvariants lattice_invariants(const GramLattice& lattice) {
  LatticeInvariants inv;
  inv.rank = lattice.rank();
  auto [plus, minus] = lattice_signature(lattice);
  inv.t_plus = plus;
  inv.t_minus = minus;
  DiscriminantGroup group = discriminant_group(lattice);
  inv.invariant_factors = group.invariant_factors;
  inv.a = static_cast<int>(group.invariant_factors.size());
  if (inv.a > 0) {
    const Int& first = group.invariant_factors.front();
    bool elementary = mpz_probab_prime_p(first.get_mpz_t(), 40) != 0;
    for (const Int& d : group.invariant_factors)
      if (d != first) elementary = false;
    if (elementary) inv.elementary_prime = first;
  }
  bool two_elementary = inv.a == 0 || (inv.elementary_prime && *inv.elementary_prime == 2);
  if (two_elementary && is_even(lattice)) inv.delta = inv.a == 0 ? 0 : delta_invariant(lattice, group);
  return inv;
}

NikulinKey nikulin_key(const GramLattice& lattice) {
  LatticeInvariants inv = lattice_invariants(lattice);
  if (!inv.delta)
    throw std::domain_error("lattice is not an even 2-elementary lattice");
  return NikulinKey{*inv.delta, inv.t_plus, inv.t_minus, inv.a};
}

}  // namespace k3aut
