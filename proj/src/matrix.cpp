#include "bcl/matrix.hpp"

#include <sstream>

#include "bcl/error.hpp"

namespace bcl
{

IntersectionMatrix::IntersectionMatrix(std::vector<std::vector<std::uint64_t>> const &rows)
: _k(rows.size()), _entries()
{
  _entries.reserve(_k * _k);
  for (auto const &r : rows) {
    if (r.size() != _k)
      throw Error(ErrorCode::InvalidArgument, "matrix rows must form a square");
    _entries.insert(_entries.end(), r.begin(), r.end());
  }
}

std::vector<std::uint64_t> IntersectionMatrix::row(std::size_t i) const
{ return {_entries.begin() + static_cast<long>(i * _k), _entries.begin() + static_cast<long>((i + 1) * _k)}; }

std::vector<std::uint64_t> IntersectionMatrix::column(std::size_t j) const
{
  std::vector<std::uint64_t> c(_k);
  for (std::size_t i = 0; i < _k; ++i)
    c[i] = at(i, j);
  return c;
}

std::vector<std::vector<std::uint64_t>> IntersectionMatrix::rows() const
{
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t i = 0; i < _k; ++i)
    out.push_back(row(i));
  return out;
}

IntersectionMatrix IntersectionMatrix::transpose() const
{
  IntersectionMatrix t(_k);
  for (std::size_t i = 0; i < _k; ++i) {
    for (std::size_t j = 0; j < _k; ++j)
      t.at(j, i) = at(i, j);
  }
  return t;
}

IntersectionMatrix IntersectionMatrix::permuted(std::vector<std::size_t> const &rowPerm,
                                                std::vector<std::size_t> const &colPerm) const
{
  IntersectionMatrix out(_k);
  for (std::size_t i = 0; i < _k; ++i) {
    for (std::size_t j = 0; j < _k; ++j)
      out.at(i, j) = at(rowPerm[i], colPerm[j]);
  }
  return out;
}

std::string IntersectionMatrix::toString() const
{
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < _k; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < _k; ++j)
      out << (j ? "," : "") << at(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

} // namespace bcl
