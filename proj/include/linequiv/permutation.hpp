#ifndef LINEQUIV_PERMUTATION_HPP
#define LINEQUIV_PERMUTATION_HPP

#include <compare>
#include <string>
#include <vector>

namespace linequiv {

// A bijection of {1..n}.  Points are stored 0-based internally; all text
// formats (cycle notation) are 1-based.
class Permutation {
 public:
  explicit Permutation(int degree);           // identity
  explicit Permutation(std::vector<int> img); // 0-based image table

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  long long order() const;

  // (a.after(b))(x) = a(b(x)); apply b first.
  Permutation after(const Permutation& b) const;
  Permutation inverse() const;

  // Nontrivial cycles, each rotated so its least point is first, sorted
  // by least point.
  std::vector<std::vector<int>> cycles() const;
  // Full cycle-length partition including fixed points, sorted descending.
  std::vector<int> cycle_type() const;

  std::string cycle_string() const;  // canonical 1-based, "()" for identity
  static Permutation parse(const std::string& text, int degree);

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<int> img_;
};

}  // namespace linequiv

#endif
