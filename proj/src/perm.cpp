#include "bcl/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "bcl/error.hpp"

namespace bcl
{

namespace
{

std::string stripSpaces(std::string const &text)
{
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(c);
  }
  return out;
}

// Parses a comma-separated list of positive integers between open and close
// starting at pos; advances pos past the closing character.
std::vector<std::size_t> parseList(std::string const &s, std::size_t &pos, char open, char close,
                                   ErrorCode malformed)
{
  if (pos >= s.size() || s[pos] != open)
    throw Error(malformed, "expected '" + std::string(1, open) + "' in '" + s + "'");
  ++pos;
  std::vector<std::size_t> values;
  if (pos < s.size() && s[pos] == close) {
    ++pos;
    return values;
  }
  for (;;) {
    std::size_t start = pos;
    std::size_t value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      value = value * 10 + static_cast<std::size_t>(s[pos] - '0');
      if (value > (1u << 30))
        throw Error(ErrorCode::PointOutOfRange, "point too large in '" + s + "'");
      ++pos;
    }
    if (pos == start)
      throw Error(malformed, "expected a number in '" + s + "'");
    values.push_back(value);
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < s.size() && s[pos] == close) {
      ++pos;
      return values;
    }
    throw Error(malformed, "unterminated list in '" + s + "'");
  }
}

} // anonymous namespace

Perm::Perm(std::size_t degree) : _images(degree)
{ std::iota(_images.begin(), _images.end(), Point(0)); }

Perm::Perm(std::vector<Point> images) : _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (Point x : _images) {
    if (x >= _images.size())
      throw Error(ErrorCode::PointOutOfRange, "image outside the domain");
    if (seen[x])
      throw Error(ErrorCode::RepeatedPoint, "images do not form a bijection");
    seen[x] = true;
  }
}

Perm Perm::parse(std::string const &cycles, std::size_t degree)
{
  std::string s = stripSpaces(cycles);
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point(0));
  std::vector<bool> used(degree, false);

  if (s.empty())
    throw Error(ErrorCode::MalformedCycle, "empty cycle text");

  std::size_t pos = 0;
  while (pos < s.size()) {
    auto pts = parseList(s, pos, '(', ')', ErrorCode::MalformedCycle);
    for (std::size_t p : pts) {
      if (p < 1 || p > degree)
        throw Error(ErrorCode::PointOutOfRange,
                    "point " + std::to_string(p) + " outside 1.." + std::to_string(degree));
      if (used[p - 1])
        throw Error(ErrorCode::RepeatedPoint, "point " + std::to_string(p) + " repeated");
      used[p - 1] = true;
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
      images[pts[i] - 1] = static_cast<Point>(pts[(i + 1) % pts.size()] - 1);
  }
  return Perm(std::move(images));
}

Perm Perm::transposition(std::size_t degree, Point a, Point b)
{
  Perm p(degree);
  std::swap(p._images[a], p._images[b]);
  return p;
}

Perm Perm::cycle(std::size_t degree, std::vector<Point> const &points)
{
  Perm p(degree);
  for (std::size_t i = 0; i < points.size(); ++i)
    p._images[points[i]] = points[(i + 1) % points.size()];
  return p;
}

Perm Perm::operator*(Perm const &rhs) const
{
  if (degree() != rhs.degree())
    throw Error(ErrorCode::DegreeMismatch, "product of permutations of different degrees");
  Perm result;
  result._images.resize(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    result._images[i] = rhs._images[_images[i]];
  return result;
}

Perm Perm::inverse() const
{
  Perm result;
  result._images.resize(_images.size());
  for (std::size_t i = 0; i < _images.size(); ++i)
    result._images[_images[i]] = static_cast<Point>(i);
  return result;
}

Perm Perm::conjugatedBy(Perm const &x) const
{ return x.inverse() * *this * x; }

int Perm::sign() const
{
  std::vector<bool> seen(_images.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (seen[i])
      continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = _images[j])
      seen[j] = true;
  }
  return ((_images.size() - cycles) % 2 == 0) ? 1 : -1;
}

bool Perm::isIdentity() const
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

Point Perm::firstMovedPoint() const
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return static_cast<Point>(i);
  }
  return static_cast<Point>(_images.size());
}

std::string Perm::toCycleString() const
{
  std::ostringstream out;
  std::vector<bool> seen(_images.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (seen[i] || _images[i] == i)
      continue;
    any = true;
    out << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      if (!first)
        out << ',';
      first = false;
      out << (j + 1);
    }
    out << ')';
  }
  if (!any)
    return "()";
  return out.str();
}

std::size_t PermHash::operator()(Perm const &p) const
{
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

SetPartition::SetPartition(std::size_t degree, std::vector<std::vector<Point>> blocks)
: _degree(degree), _blocks(std::move(blocks)), _blockOf(degree, degree)
{
  for (std::size_t b = 0; b < _blocks.size(); ++b) {
    auto &block = _blocks[b];
    if (block.empty())
      throw Error(ErrorCode::MalformedPartition, "empty block");
    std::sort(block.begin(), block.end());
    for (Point x : block) {
      if (x >= degree)
        throw Error(ErrorCode::PointOutOfRange, "block point outside the domain");
      if (_blockOf[x] != degree)
        throw Error(ErrorCode::MalformedPartition, "blocks are not disjoint");
      _blockOf[x] = b;
    }
  }
  for (std::size_t x = 0; x < degree; ++x) {
    if (_blockOf[x] == degree)
      throw Error(ErrorCode::MalformedPartition,
                  "point " + std::to_string(x + 1) + " lies in no block");
  }
}

SetPartition SetPartition::parse(std::string const &text, std::size_t degree)
{
  std::string s = stripSpaces(text);
  std::vector<std::vector<Point>> blocks;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto pts = parseList(s, pos, '{', '}', ErrorCode::MalformedPartition);
    std::vector<Point> block;
    for (std::size_t p : pts) {
      if (p < 1 || p > degree)
        throw Error(ErrorCode::PointOutOfRange,
                    "point " + std::to_string(p) + " outside 1.." + std::to_string(degree));
      block.push_back(static_cast<Point>(p - 1));
    }
    blocks.push_back(std::move(block));
  }
  if (blocks.empty())
    throw Error(ErrorCode::MalformedPartition, "no blocks in '" + text + "'");
  return SetPartition(degree, std::move(blocks));
}

SetPartition SetPartition::uniform(std::size_t m, std::size_t k)
{
  std::vector<std::vector<Point>> blocks(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      blocks[i].push_back(static_cast<Point>(i * m + j));
  }
  return SetPartition(m * k, std::move(blocks));
}

SetPartition SetPartition::fromSubset(std::size_t degree, std::vector<Point> subset)
{
  std::vector<bool> in(degree, false);
  for (Point x : subset) {
    if (x >= degree)
      throw Error(ErrorCode::PointOutOfRange, "subset point outside the domain");
    in[x] = true;
  }
  std::vector<Point> rest;
  for (std::size_t x = 0; x < degree; ++x) {
    if (!in[x])
      rest.push_back(static_cast<Point>(x));
  }
  if (subset.empty() || rest.empty())
    throw Error(ErrorCode::DegenerateSubset, "subset must be nonempty and proper");
  return SetPartition(degree, {std::move(subset), std::move(rest)});
}

bool SetPartition::isUniform() const
{
  for (auto const &b : _blocks) {
    if (b.size() != _blocks.front().size())
      return false;
  }
  return true;
}

SetPartition SetPartition::image(Perm const &g) const
{
  if (g.degree() != _degree)
    throw Error(ErrorCode::DegreeMismatch, "partition and permutation degrees differ");
  std::vector<std::vector<Point>> blocks;
  blocks.reserve(_blocks.size());
  for (auto const &b : _blocks) {
    std::vector<Point> img;
    img.reserve(b.size());
    for (Point x : b)
      img.push_back(g[x]);
    blocks.push_back(std::move(img));
  }
  return SetPartition(_degree, std::move(blocks));
}

bool SetPartition::isStabilizedBy(Perm const &g) const
{
  if (g.degree() != _degree)
    throw Error(ErrorCode::DegreeMismatch, "partition and permutation degrees differ");
  for (auto const &b : _blocks) {
    std::size_t target = _blockOf[g[b.front()]];
    if (_blocks[target].size() != b.size())
      return false;
    for (Point x : b) {
      if (_blockOf[g[x]] != target)
        return false;
    }
  }
  return true;
}

std::vector<Point> SetPartition::canonicalKey() const
{
  std::vector<std::vector<Point>> sorted = _blocks;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Point> key;
  key.reserve(_degree + sorted.size());
  for (auto const &b : sorted) {
    key.insert(key.end(), b.begin(), b.end());
    key.push_back(static_cast<Point>(_degree));
  }
  return key;
}

std::string SetPartition::toString() const
{
  std::ostringstream out;
  for (auto const &b : _blocks) {
    out << '{';
    for (std::size_t i = 0; i < b.size(); ++i)
      out << (i ? "," : "") << (b[i] + 1);
    out << '}';
  }
  return out.str();
}

} // namespace bcl
