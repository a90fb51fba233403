#pragma once

#include <map>
#include <string>
#include <vector>

#include "fss/matrix.hpp"

namespace fss {

// A word over an indexed generating set; empty means the identity.
using Word = std::vector<int>;

Matrix eval_word(const std::vector<Matrix>& gens, const Word& w);
std::string word_str(const Word& w, const std::vector<std::string>& names);

// K-linear combination of words in the free algebra on the indexed
// alphabet.  Used for element provenance and for rewriting.
class FreePoly {
 public:
  FreePoly() = default;
  static FreePoly unit(const FieldSpec& spec);        // the empty word
  static FreePoly generator(const FieldSpec& spec, int index);

  void add_term(const Word& w, const Scalar& c);
  const std::map<Word, Scalar>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  FreePoly operator+(const FreePoly& o) const;
  FreePoly operator-(const FreePoly& o) const;
  FreePoly operator*(const FreePoly& o) const;
  FreePoly scaled(const Scalar& c) const;

  Matrix eval(const std::vector<Matrix>& gens) const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  std::map<Word, Scalar> terms_;
};

}  // namespace fss
