#include "fss/word.hpp"

#include <sstream>

namespace fss {

Matrix eval_word(const std::vector<Matrix>& gens, const Word& w) {
  if (gens.empty()) fail(ErrorCode::ShapeMismatch, "eval_word with no generators");
  int n = gens[0].rows();
  Matrix m = Matrix::identity(n, gens[0].spec());
  for (int g : w) {
    if (g < 0 || g >= static_cast<int>(gens.size())) {
      fail(ErrorCode::Internal, "word index out of range");
    }
    m = m * gens[static_cast<std::size_t>(g)];
  }
  return m;
}

std::string word_str(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << "*";
    os << names[static_cast<std::size_t>(w[i])];
  }
  return os.str();
}

FreePoly FreePoly::unit(const FieldSpec& spec) {
  FreePoly p;
  p.add_term({}, Scalar::one(spec));
  return p;
}

FreePoly FreePoly::generator(const FieldSpec& spec, int index) {
  FreePoly p;
  p.add_term({index}, Scalar::one(spec));
  return p;
}

void FreePoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
  FreePoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

FreePoly FreePoly::operator-(const FreePoly& o) const {
  FreePoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

FreePoly FreePoly::operator*(const FreePoly& o) const {
  FreePoly r;
  for (const auto& [w1, c1] : terms_) {
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      r.add_term(w, c1 * c2);
    }
  }
  return r;
}

FreePoly FreePoly::scaled(const Scalar& c) const {
  FreePoly r;
  for (const auto& [w, coef] : terms_) r.add_term(w, coef * c);
  return r;
}

Matrix FreePoly::eval(const std::vector<Matrix>& gens) const {
  if (gens.empty()) fail(ErrorCode::ShapeMismatch, "FreePoly eval with no generators");
  int n = gens[0].rows();
  Matrix acc = Matrix::zeros(n, n, gens[0].spec());
  for (const auto& [w, c] : terms_) {
    acc = acc + eval_word(gens, w).scaled(c);
  }
  return acc;
}

std::string FreePoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    os << (first ? "" : " + ");
    os << "(" << c.str() << ")";
    if (!w.empty()) os << "*" << word_str(w, names);
    first = false;
  }
  return os.str();
}

}  // namespace fss
