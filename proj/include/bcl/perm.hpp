#ifndef GUARD_BCL_PERM_H
#define GUARD_BCL_PERM_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bcl
{

using Point = std::uint32_t;

// A permutation of {0..n-1}. Text input and output use 1-based points and
// disjoint-cycle notation. Products compose left to right: (a * b)[x] is
// b[a[x]], matching the right action x^(ab) = (x^a)^b.
class Perm
{
public:
  explicit Perm(std::size_t degree = 0);
  explicit Perm(std::vector<Point> images);

  // "(1,2)(3,4,5)"; "()" is the identity. Whitespace is ignored.
  static Perm parse(std::string const &cycles, std::size_t degree);

  static Perm transposition(std::size_t degree, Point a, Point b);
  static Perm cycle(std::size_t degree, std::vector<Point> const &points);

  std::size_t degree() const { return _images.size(); }
  Point operator[](std::size_t x) const { return _images[x]; }
  std::vector<Point> const &images() const { return _images; }

  Perm operator*(Perm const &rhs) const;
  Perm inverse() const;

  // x^-1 * this * x
  Perm conjugatedBy(Perm const &x) const;

  int sign() const;
  bool isEven() const { return sign() == 1; }
  bool isIdentity() const;

  // Smallest moved point, or degree() for the identity.
  Point firstMovedPoint() const;

  std::string toCycleString() const;

  bool operator==(Perm const &rhs) const { return _images == rhs._images; }
  bool operator!=(Perm const &rhs) const { return _images != rhs._images; }
  bool operator<(Perm const &rhs) const { return _images < rhs._images; }

private:
  std::vector<Point> _images;
};

struct PermHash
{
  std::size_t operator()(Perm const &p) const;
};

// An ordered list of disjoint nonempty blocks covering {0..n-1}. Each block
// is kept sorted; the block order is significant for intersection matrices.
class SetPartition
{
public:
  SetPartition() = default;
  SetPartition(std::size_t degree, std::vector<std::vector<Point>> blocks);

  // "{1,2,3,4}{5,6,7,8}" with 1-based points.
  static SetPartition parse(std::string const &text, std::size_t degree);

  // k consecutive blocks of size m: {1..m}{m+1..2m}...
  static SetPartition uniform(std::size_t m, std::size_t k);

  // {subset, complement}
  static SetPartition fromSubset(std::size_t degree, std::vector<Point> subset);

  std::size_t degree() const { return _degree; }
  std::size_t blockCount() const { return _blocks.size(); }
  std::vector<std::vector<Point>> const &blocks() const { return _blocks; }
  std::vector<Point> const &block(std::size_t i) const { return _blocks[i]; }
  std::size_t blockOf(Point x) const { return _blockOf[x]; }

  bool isUniform() const;

  // Block j of the result is the image of block j under g.
  SetPartition image(Perm const &g) const;

  // True iff g maps every block onto some block.
  bool isStabilizedBy(Perm const &g) const;

  // Encoding of the unordered partition: blocks sorted, separated by the
  // value degree().
  std::vector<Point> canonicalKey() const;

  std::string toString() const;

private:
  std::size_t _degree = 0;
  std::vector<std::vector<Point>> _blocks;
  std::vector<std::size_t> _blockOf;
};

} // namespace bcl

#endif // GUARD_BCL_PERM_H
