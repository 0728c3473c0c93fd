#ifndef CZS_GROUP_H
#define CZS_GROUP_H

#include <bitset>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace czs {

inline constexpr int kMaxQubits = 32;
inline constexpr int kMaxPairs = kMaxQubits * (kMaxQubits - 1) / 2;

/// Permutation of {0..k-1} stored by images; composition (a*b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int k);
  static Permutation transposition(int k, int i, int j);
  // Cycles as lists, e.g. {{0,3},{2,4}}; unlisted points are fixed.
  static Permutation from_cycles(int k, const std::vector<std::vector<int>> &cycles);

  int k() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int> &images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int inversion_count() const;
  // Non-trivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<int>> cycles() const;
  std::string to_string() const;

  friend Permutation operator*(const Permutation &a, const Permutation &b);
  bool operator==(const Permutation &o) const = default;
  auto operator<=>(const Permutation &o) const = default;

 private:
  std::vector<int> images_;
};

/// Set of unordered pairs {i,j}, i<j, under symmetric difference.
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(int k);
  PairSet(int k, const std::vector<std::pair<int, int>> &pairs);
  static PairSet complete(int k);

  int k() const { return k_; }
  bool contains(int i, int j) const;
  // Toggles membership of {i,j}.
  void toggle(int i, int j);
  size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  // Pairs in lexicographic (i,j) order.
  std::vector<std::pair<int, int>> pairs() const;

  PairSet &operator^=(const PairSet &o);
  friend PairSet operator^(PairSet a, const PairSet &b) { return a ^= b; }
  bool operator==(const PairSet &o) const { return k_ == o.k_ && bits_ == o.bits_; }
  // Written as {{0,1},{0,2}}.
  std::string to_string() const;
  size_t hash() const { return std::hash<std::bitset<kMaxPairs>>()(bits_) ^ static_cast<size_t>(k_); }

 private:
  static int slot(int i, int j);
  int k_ = 0;
  std::bitset<kMaxPairs> bits_;
};

/// Group element Z_E S_sigma of cZS_k.
struct NormalForm {
  PairSet phase;
  Permutation perm;

  static NormalForm identity(int k) { return {PairSet(k), Permutation::identity(k)}; }
  static NormalForm cz(int k, int i, int j) { return {PairSet(k, {{i, j}}), Permutation::identity(k)}; }
  static NormalForm swap(int k, int i, int j) { return {PairSet(k), Permutation::transposition(k, i, j)}; }

  int k() const { return phase.k(); }
  bool is_identity() const { return phase.empty() && perm.is_identity(); }
  bool operator==(const NormalForm &o) const = default;
  // Written as ({{0,2},{1,2}}, (0,1)).
  std::string to_string() const;
};

struct NormalFormHash {
  size_t operator()(const NormalForm &nf) const;
};

PairSet conjugate_pairs(const Permutation &sigma, const PairSet &e);
NormalForm nf_product(const NormalForm &a, const NormalForm &b);
NormalForm nf_inverse(const NormalForm &a);

}  // namespace czs

#endif
