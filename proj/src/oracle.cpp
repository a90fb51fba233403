#include "fss/oracle.hpp"

#include <deque>
#include <map>

namespace fss::oracle {

Perm Perm::identity(int n) {
  Perm p;
  p.img.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.img[static_cast<std::size_t>(i)] = i;
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) fail(ErrorCode::ShapeMismatch, "composing perms of mixed degree");
  Perm r;
  r.img.resize(b.img.size());
  for (std::size_t x = 0; x < b.img.size(); ++x) {
    r.img[x] = a.img[static_cast<std::size_t>(b.img[x])];
  }
  return r;
}

namespace {

std::vector<std::vector<int>> parse_cycles(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorCode::SyntaxError, "expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (i == start) fail(ErrorCode::SyntaxError, "expected a point label");
      int v = std::stoi(text.substr(start, i - start));
      if (v < 1) fail(ErrorCode::SyntaxError, "points are 1-based");
      cycle.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) fail(ErrorCode::SyntaxError, "unterminated cycle");
    ++i;  // ')'
    cycles.push_back(std::move(cycle));
    skip_ws();
    if (i < text.size()) {
      if (text[i] == '*') {
        ++i;
        skip_ws();
        continue;
      }
      fail(ErrorCode::SyntaxError, "unexpected character '" + std::string(1, text[i]) + "'");
    }
  }
  return cycles;
}

}  // namespace

int points_needed(const std::string& text) {
  int n = 1;
  for (const auto& cycle : parse_cycles(text)) {
    for (int v : cycle) n = std::max(n, v + 1);
  }
  return n;
}

Perm Perm::from_cycles(const std::string& text, int n) {
  std::vector<std::vector<int>> cycles = parse_cycles(text);
  Perm result = Perm::identity(n);
  // rightmost cycle applies first, so later (more-left) cycles compose
  // on the left
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const std::vector<int>& cycle = *it;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    Perm p = Perm::identity(n);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (from >= n || to >= n) fail(ErrorCode::SyntaxError, "point label exceeds degree");
      if (used[static_cast<std::size_t>(from)]) {
        fail(ErrorCode::SyntaxError, "repeated point inside a cycle");
      }
      used[static_cast<std::size_t>(from)] = true;
      p.img[static_cast<std::size_t>(from)] = to;
    }
    result = compose(p, result);
  }
  return result;
}

AlgebraFixture perm_group_fixture(const std::vector<Perm>& gens, const FieldSpec& field) {
  if (gens.empty()) fail(ErrorCode::SyntaxError, "a permutation fixture needs generators");
  int n = gens[0].degree();
  for (const Perm& g : gens) {
    if (g.degree() != n) fail(ErrorCode::SyntaxError, "generators act on different point sets");
  }
  constexpr std::size_t kOrderCap = 10000;

  // breadth-first enumeration starting at the identity
  std::vector<Perm> elems{Perm::identity(n)};
  std::map<std::vector<int>, std::size_t> index{{elems[0].img, 0}};
  std::deque<std::size_t> work{0};
  while (!work.empty()) {
    std::size_t i = work.front();
    work.pop_front();
    for (const Perm& g : gens) {
      Perm f = compose(elems[i], g);
      if (index.emplace(f.img, elems.size()).second) {
        elems.push_back(f);
        work.push_back(elems.size() - 1);
        if (elems.size() > kOrderCap) {
          fail(ErrorCode::GroupTooLarge, "group order exceeds " + std::to_string(kOrderCap));
        }
      }
    }
  }

  AlgebraFixture fx;
  fx.field = field;
  fx.group_order = elems.size();
  int order = static_cast<int>(elems.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const Perm& s = gens[gi];
    // left regular representation: column j maps to the index of s*elems[j]
    Matrix reg(order, order, field);
    for (int j = 0; j < order; ++j) {
      Perm target = compose(s, elems[static_cast<std::size_t>(j)]);
      auto it = index.find(target.img);
      if (it == index.end()) fail(ErrorCode::Internal, "group enumeration not closed");
      reg.at(static_cast<int>(it->second), j) = Scalar::one(field);
    }
    fx.faithful.push_back(std::move(reg));
    // permutation action on the points
    Matrix mod(n, n, field);
    for (int j = 0; j < n; ++j) mod.at(s(j), j) = Scalar::one(field);
    fx.module.push_back(std::move(mod));
    fx.names.push_back("g" + std::to_string(gi));
  }
  return fx;
}

int oracle_dim(const std::vector<Matrix>& faithful_gens) {
  return algebra_closure(faithful_gens, false).dim();
}

bool exhaustive_simplicity(const SimpleSubmodule& n) {
  const FieldSpec& spec = n.subspace.spec();
  if (spec.kind != FieldKind::prime) {
    fail(ErrorCode::TooLargeToEnumerate, "exhaustive check only enumerates prime fields");
  }
  int r = n.dim();
  if (r == 0) return false;
  double total = 1;
  for (int i = 0; i < r; ++i) {
    total *= static_cast<double>(spec.p);
    if (total > 6561.0) {
      fail(ErrorCode::TooLargeToEnumerate,
           "p^dim exceeds 3^8; refusing to enumerate " + std::to_string(total));
    }
  }
  // iterate all nonzero coordinate vectors over the local basis of N
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(r), 0);
  while (true) {
    // increment
    int pos = 0;
    while (pos < r) {
      if (++digits[static_cast<std::size_t>(pos)] < spec.p) break;
      digits[static_cast<std::size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == r) break;  // wrapped around: done
    Vec v = vec_zeros(r, spec);
    for (int i = 0; i < r; ++i) v[static_cast<std::size_t>(i)] = Scalar::residue(digits[static_cast<std::size_t>(i)], spec.p);
    if (spin({v}, n.actions).dim() != r) return false;
  }
  return true;
}

BlackBoxAlgebra d8_algebra_2dim_module() {
  AlgebraFixture fx = perm_group_fixture(
      {Perm::from_cycles("(1,2,3,4)", 4), Perm::from_cycles("(1,3)", 4)});
  FieldSpec q = FieldSpec::rationals();
  auto s = [&](long v) { return Scalar::of_int(q, v); };
  Matrix r(2, 2, q), mirror(2, 2, q);
  r.at(0, 1) = s(-1);
  r.at(1, 0) = s(1);
  mirror.at(0, 0) = s(1);
  mirror.at(1, 1) = s(-1);
  return BlackBoxAlgebra(q, fx.names, fx.faithful, {r, mirror});
}

}  // namespace fss::oracle
