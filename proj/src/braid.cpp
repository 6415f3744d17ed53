#include "braidforge/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "braidforge/error.hpp"

namespace braidforge {

Permutation::Permutation(int n) {
  if (n < 1) throw InputError("permutation size must be at least 1");
  images_.resize(n);
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw InputError("permutation size must be at least 1");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v - 1]) {
      throw InputError("images do not form a permutation of 1..n");
    }
    seen[v - 1] = 1;
  }
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw InputError("transposition index out of range");
  Permutation p(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::reversal(int n) {
  if (n < 1) throw InputError("permutation size must be at least 1");
  Permutation p(n);
  std::reverse(p.images_.begin(), p.images_.end());
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if (images_[i - 1] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[images_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

int Permutation::inversions() const {
  int count = 0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (images_[i] > images_[j]) ++count;
    }
  }
  return count;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InputError("permutation size mismatch");
  std::vector<int> img(p.size());
  for (int i = 1; i <= p.size(); ++i) img[i - 1] = q(p(i));
  return Permutation(std::move(img));
}

BraidWord::BraidWord(int strand_count) : strand_count_(strand_count) {
  if (strand_count < 1) throw InputError("strand count must be at least 1");
}

BraidWord::BraidWord(int strand_count, std::vector<BraidLetter> letters)
    : strand_count_(strand_count), letters_(std::move(letters)) {
  if (strand_count < 1) throw InputError("strand count must be at least 1");
  for (const BraidLetter& l : letters_) {
    if (l.index < 1 || l.index >= strand_count_) {
      throw InputError("generator index out of range for strand count");
    }
    if (l.sign != 1 && l.sign != -1) throw InputError("letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::generator(int strand_count, int index, int sign) {
  return BraidWord(strand_count, {BraidLetter{index, sign}});
}

BraidWord compose(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strand_count() != w2.strand_count()) {
    throw InputError("strand-count mismatch in braid composition");
  }
  std::vector<BraidLetter> letters = w1.letters();
  letters.insert(letters.end(), w2.letters().begin(), w2.letters().end());
  return BraidWord(w1.strand_count(), std::move(letters));
}

BraidWord invert(const BraidWord& w) {
  std::vector<BraidLetter> letters(w.letters().rbegin(), w.letters().rend());
  for (BraidLetter& l : letters) l.sign = -l.sign;
  return BraidWord(w.strand_count(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<BraidLetter> out;
  out.reserve(w.letters().size());
  for (const BraidLetter& l : w.letters()) {
    if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return BraidWord(w.strand_count(), std::move(out));
}

namespace {

// End position of the strand starting at each position; products compose
// diagrammatically (first letter acts first). The Garside machinery below
// works in this convention throughout.
Permutation trajectory_permutation(const BraidWord& w) {
  int n = w.strand_count();
  std::vector<int> at(n), pos(n);  // at[p-1]: strand at position p; pos[s-1]: position of strand s
  std::iota(at.begin(), at.end(), 1);
  std::iota(pos.begin(), pos.end(), 1);
  for (const BraidLetter& l : w.letters()) {
    int s1 = at[l.index - 1], s2 = at[l.index];
    at[l.index - 1] = s2;
    at[l.index] = s1;
    pos[s1 - 1] = l.index + 1;
    pos[s2 - 1] = l.index;
  }
  return Permutation(std::move(pos));
}

// Conjugation by the half twist: tau(p)(k) = w0(p(w0(k))). An involution on
// simple factors; tau of the factor equals the factor of the conjugated braid.
Permutation tau_conj(const Permutation& p) {
  int n = p.size();
  std::vector<int> img(n);
  for (int k = 1; k <= n; ++k) img[k - 1] = n + 1 - p(n + 1 - k);
  return Permutation(std::move(img));
}

// Descents of p: positions i with p(i) > p(i+1); these index the generators
// that left-divide the simple braid of p.
void starting_set(const Permutation& p, std::vector<char>& out) {
  int n = p.size();
  out.assign(n + 1, 0);
  for (int i = 1; i < n; ++i) out[i] = p(i) > p(i + 1) ? 1 : 0;
}

// Descents of p^{-1}: the generators that right-divide the simple braid of p.
void finishing_set(const Permutation& p, std::vector<char>& out) {
  int n = p.size();
  std::vector<int> inv(n);
  for (int i = 1; i <= n; ++i) inv[p(i) - 1] = i;
  out.assign(n + 1, 0);
  for (int i = 1; i < n; ++i) out[i] = inv[i - 1] > inv[i] ? 1 : 0;
}

// Makes the adjacent pair (a, b) left-weighted by moving initial generators of
// b into a. Returns true when anything moved.
bool left_weight_pair(Permutation& a, Permutation& b) {
  int n = a.size();
  bool changed = false;
  std::vector<char> sb, fa;
  for (;;) {
    starting_set(b, sb);
    finishing_set(a, fa);
    int pick = 0;
    for (int i = 1; i < n; ++i) {
      if (sb[i] && !fa[i]) {
        pick = i;
        break;
      }
    }
    if (pick == 0) break;
    std::vector<int> ai = a.images(), bi = b.images();
    for (int j = 0; j < n; ++j) {
      if (ai[j] == pick) {
        ai[j] = pick + 1;
      } else if (ai[j] == pick + 1) {
        ai[j] = pick;
      }
    }
    std::swap(bi[pick - 1], bi[pick]);
    a = Permutation(std::move(ai));
    b = Permutation(std::move(bi));
    changed = true;
  }
  return changed;
}

}  // namespace

Permutation underlying_permutation(const BraidWord& w) {
  return trajectory_permutation(w).inverse();
}

GarsideForm::GarsideForm(int strand_count, int delta_power, std::vector<Permutation> factors)
    : strand_count_(strand_count), delta_power_(delta_power), factors_(std::move(factors)) {
  if (strand_count < 1) throw InputError("strand count must be at least 1");
  for (const Permutation& f : factors_) {
    if (f.size() != strand_count) throw InputError("factor size mismatch");
  }
}

BraidWord GarsideForm::to_word() const {
  std::vector<BraidLetter> letters;
  if (strand_count_ > 1) {
    std::vector<int> delta_word = permutation_braid_word(Permutation::reversal(strand_count_));
    if (delta_power_ >= 0) {
      for (int k = 0; k < delta_power_; ++k) {
        for (int i : delta_word) letters.push_back({i, 1});
      }
    } else {
      for (int k = 0; k < -delta_power_; ++k) {
        for (auto it = delta_word.rbegin(); it != delta_word.rend(); ++it) {
          letters.push_back({*it, -1});
        }
      }
    }
  }
  for (const Permutation& f : factors_) {
    for (int i : permutation_braid_word(f)) letters.push_back({i, 1});
  }
  return BraidWord(strand_count_, std::move(letters));
}

std::string GarsideForm::key() const {
  std::ostringstream os;
  os << 'B' << strand_count_ << ':' << delta_power_;
  for (const Permutation& f : factors_) {
    os << ':';
    for (int i = 0; i < f.size(); ++i) {
      if (i) os << '.';
      os << f.images()[i];
    }
  }
  return os.str();
}

std::vector<int> permutation_braid_word(const Permutation& p) {
  std::vector<int> arr = p.images();
  int n = static_cast<int>(arr.size());
  std::vector<int> word;
  word.reserve(p.inversions());
  for (;;) {
    int pick = 0;
    for (int i = 0; i + 1 < n; ++i) {
      if (arr[i] > arr[i + 1]) {
        pick = i + 1;
        break;
      }
    }
    if (pick == 0) break;
    word.push_back(pick);
    std::swap(arr[pick - 1], arr[pick]);
  }
  return word;
}

GarsideForm garside_normal_form(const BraidWord& w) {
  const int n = w.strand_count();
  if (n == 1) return GarsideForm(1, 0, {});
  const Permutation w0 = Permutation::reversal(n);

  // Turn the letter stream into a delta power and a list of simple factors.
  // A negative letter contributes one inverse half twist, which slides to the
  // front past k later factors by conjugating each; conjugations are recorded
  // lazily as parities since tau is an involution.
  int neg_total = 0;
  std::vector<std::pair<Permutation, int>> raw;
  raw.reserve(w.letters().size());
  for (const BraidLetter& l : w.letters()) {
    if (l.sign > 0) {
      raw.emplace_back(Permutation::transposition(n, l.index), neg_total);
    } else {
      ++neg_total;
      // Positive complement of the generator inside the half twist:
      // perm(k) = s_i(w0(k)).
      std::vector<int> img(n);
      for (int k = 1; k <= n; ++k) {
        int v = n + 1 - k;
        if (v == l.index) {
          v = l.index + 1;
        } else if (v == l.index + 1) {
          v = l.index;
        }
        img[k - 1] = v;
      }
      raw.emplace_back(Permutation(std::move(img)), neg_total);
    }
  }

  int delta = -neg_total;
  const int m = static_cast<int>(raw.size());
  std::vector<Permutation> f;
  f.reserve(m);
  for (auto& [perm, at] : raw) {
    f.push_back(((neg_total - at) & 1) ? tau_conj(perm) : perm);
  }

  // Left-weight adjacent pairs with a worklist over a linked list of live
  // factors. Full twists migrate to the front on their own because a pair
  // whose right factor is the half twist is never left-weighted.
  std::vector<int> next(m + 1), prev(m + 1);
  std::vector<char> alive(m, 1);
  const int head = m;  // sentinel
  next[head] = m > 0 ? 0 : head;
  prev[head] = m > 0 ? m - 1 : head;
  for (int j = 0; j < m; ++j) {
    next[j] = j + 1 < m ? j + 1 : head;
    prev[j] = j > 0 ? j - 1 : head;
  }
  auto remove_node = [&](int j) {
    alive[j] = 0;
    next[prev[j]] = next[j];
    prev[next[j]] = prev[j];
  };

  std::vector<int> work;
  work.reserve(2 * m);
  for (int j = m - 1; j >= 0; --j) work.push_back(j);
  while (!work.empty()) {
    int j = work.back();
    work.pop_back();
    if (j == head || !alive[j]) continue;
    int k = next[j];
    if (k == head) continue;
    if (!left_weight_pair(f[j], f[k])) continue;
    if (f[k].is_identity()) remove_node(k);
    if (f[j].is_identity()) remove_node(j);  // unreachable in theory, kept for safety
    if (prev[j] != head) work.push_back(prev[j]);
    work.push_back(j);
    if (alive[k]) work.push_back(k);
  }

  std::vector<Permutation> factors;
  for (int j = next[head]; j != head; j = next[j]) {
    if (!f[j].is_identity()) factors.push_back(f[j]);
  }
  std::size_t lead = 0;
  while (lead < factors.size() && factors[lead] == w0) {
    ++delta;
    ++lead;
  }
  factors.erase(factors.begin(), factors.begin() + static_cast<long>(lead));
  return GarsideForm(n, delta, std::move(factors));
}

bool words_equal(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strand_count() != w2.strand_count()) {
    throw InputError("strand-count mismatch in braid comparison");
  }
  return garside_normal_form(w1) == garside_normal_form(w2);
}

}  // namespace braidforge
