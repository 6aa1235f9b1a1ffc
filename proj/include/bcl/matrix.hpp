#ifndef GUARD_BCL_MATRIX_H
#define GUARD_BCL_MATRIX_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bcl
{

// A square matrix of nonnegative integers, stored row-major. Used for
// intersection matrices |V_i cap W_j| and rank matrices of basis
// permutations.
class IntersectionMatrix
{
public:
  IntersectionMatrix() = default;
  explicit IntersectionMatrix(std::size_t k) : _k(k), _entries(k * k, 0) {}
  IntersectionMatrix(std::vector<std::vector<std::uint64_t>> const &rows);

  std::size_t size() const { return _k; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return _entries[i * _k + j]; }
  std::uint64_t &at(std::size_t i, std::size_t j) { return _entries[i * _k + j]; }

  std::vector<std::uint64_t> row(std::size_t i) const;
  std::vector<std::uint64_t> column(std::size_t j) const;
  std::vector<std::vector<std::uint64_t>> rows() const;

  IntersectionMatrix transpose() const;

  // Result (i, j) is this(rowPerm[i], colPerm[j]).
  IntersectionMatrix permuted(std::vector<std::size_t> const &rowPerm,
                              std::vector<std::size_t> const &colPerm) const;

  // "[[4,1,3],[2,6,0],[2,1,5]]"
  std::string toString() const;

  bool operator==(IntersectionMatrix const &rhs) const
  { return _k == rhs._k && _entries == rhs._entries; }
  bool operator!=(IntersectionMatrix const &rhs) const
  { return !(*this == rhs); }

private:
  std::size_t _k = 0;
  std::vector<std::uint64_t> _entries;
};

} // namespace bcl

#endif // GUARD_BCL_MATRIX_H
