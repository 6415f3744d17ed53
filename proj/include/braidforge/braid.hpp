#pragma once

#include <compare>
#include <string>
#include <vector>

namespace braidforge {

// Permutation of {1..n}. images()[i-1] is the image of i.
// compose(p, q) applies p first, then q: compose(p, q)(i) == q(p(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> images);

  static Permutation transposition(int n, int i);  // swaps i and i+1
  static Permutation reversal(int n);              // i -> n+1-i

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  int inversions() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

Permutation compose(const Permutation& p, const Permutation& q);

struct BraidLetter {
  int index;  // 1-based generator index
  int sign;   // +1 or -1

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
  friend auto operator<=>(const BraidLetter&, const BraidLetter&) = default;
};

// Word in the generators of the braid group on strand_count strands.
// The empty word is the identity. Equality of BraidWord values is literal
// letter-by-letter equality; group equality is words_equal.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strand_count);
  BraidWord(int strand_count, std::vector<BraidLetter> letters);

  static BraidWord generator(int strand_count, int index, int sign = 1);

  int strand_count() const { return strand_count_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strand_count_ = 1;
  std::vector<BraidLetter> letters_;
};

BraidWord compose(const BraidWord& w1, const BraidWord& w2);
BraidWord invert(const BraidWord& w);

// Cancels adjacent inverse pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

// Image of the word under the projection to the symmetric group.
// images()[i-1] names the strand (by starting position) that ends at
// position i, so each generator maps to the transposition (i, i+1) and
// the images of a product compose right-to-left as functions.
Permutation underlying_permutation(const BraidWord& w);

// Left-greedy normal form: delta_power copies of the half twist followed by
// non-trivial, non-full-twist simple factors in left-weighted position.
// Two words represent the same braid iff their GarsideForms are identical.
class GarsideForm {
 public:
  GarsideForm(int strand_count, int delta_power, std::vector<Permutation> factors);

  int strand_count() const { return strand_count_; }
  int delta_power() const { return delta_power_; }
  const std::vector<Permutation>& factors() const { return factors_; }
  int canonical_length() const { return static_cast<int>(factors_.size()); }

  BraidWord to_word() const;
  std::string key() const;  // compact serialization, usable as a hash key

  friend bool operator==(const GarsideForm&, const GarsideForm&) = default;

 private:
  int strand_count_ = 1;
  int delta_power_ = 0;
  std::vector<Permutation> factors_;
};

GarsideForm garside_normal_form(const BraidWord& w);
bool words_equal(const BraidWord& w1, const BraidWord& w2);

// Reduced positive word whose simple braid realizes p; letters are generator
// indices, length equals the inversion count of p.
std::vector<int> permutation_braid_word(const Permutation& p);

}  // namespace braidforge
