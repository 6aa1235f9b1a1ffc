#include "bcl/cosetcert.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "bcl/error.hpp"

namespace bcl
{

namespace
{

std::vector<std::vector<std::uint64_t>> sortedRows(IntersectionMatrix const &m)
{
  auto rows = m.rows();
  for (auto &r : rows)
    std::sort(r.begin(), r.end());
  return rows;
}

// Order-preserving map sending cell (rowPerm[i], colPerm[j]) of (v, v^g)
// onto cell (i, j) of (v, v^h).
Perm cellTransport(SetPartition const &v, Perm const &g, Perm const &h, PermPair const &pair)
{
  auto from = cellPoints(v, v.image(g));
  auto to = cellPoints(v, v.image(h));
  std::vector<Point> images(v.degree());
  for (std::size_t i = 0; i < to.size(); ++i) {
    for (std::size_t j = 0; j < to[i].size(); ++j) {
      auto const &src = from[pair.rowPerm[i]][pair.colPerm[j]];
      auto const &dst = to[i][j];
      for (std::size_t t = 0; t < dst.size(); ++t)
        images[src[t]] = dst[t];
    }
  }
  return Perm(std::move(images));
}

void checkWitness(SetPartition const &v, Perm const &g, Perm const &h, Perm const &k1, Perm const &k2)
{
  if (!(k1 * g * k2 == h) || !v.isStabilizedBy(k1) || !v.isStabilizedBy(k2))
    throw Error(ErrorCode::InvalidArgument, "reconstructed double-coset witness failed verification");
}

bool supportedStabilizer(SetPartition const &v)
{
  if (v.blockCount() >= 2 && v.isUniform())
    return v.block(0).size() >= 2;
  return v.blockCount() == 2;
}

} // anonymous namespace

IntersectionMatrix rankMatrixBasisPerm(std::vector<std::size_t> const &blockSizes, Perm const &a)
{
  std::size_t total = std::accumulate(blockSizes.begin(), blockSizes.end(), std::size_t(0));
  if (total != a.degree() || std::find(blockSizes.begin(), blockSizes.end(), 0u) != blockSizes.end())
    throw Error(ErrorCode::BlockSizesMismatch, "block sizes do not partition the basis indices");
  std::vector<std::size_t> blockOf;
  for (std::size_t b = 0; b < blockSizes.size(); ++b)
    blockOf.insert(blockOf.end(), blockSizes[b], b);
  IntersectionMatrix r(blockSizes.size());
  for (std::size_t x = 0; x < a.degree(); ++x)
    ++r.at(blockOf[a[x]], blockOf[x]);
  return r;
}

std::optional<PermPair> permEquivalent(IntersectionMatrix const &p, IntersectionMatrix const &q)
{
  std::size_t k = p.size();
  if (q.size() != k)
    return std::nullopt;
  auto pRows = sortedRows(p), qRows = sortedRows(q);
  auto pCols = sortedRows(p.transpose()), qCols = sortedRows(q.transpose());
  {
    auto a = pRows, b = qRows, c = pCols, d = qCols;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::sort(c.begin(), c.end());
    std::sort(d.begin(), d.end());
    if (a != b || c != d)
      return std::nullopt;
  }

  // Rows of Q are assigned rarest-first: fewer candidate rows of P means an
  // earlier and cheaper failure.
  std::vector<std::vector<std::size_t>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t r = 0; r < k; ++r) {
      if (qRows[i] == pRows[r])
        candidates[i].push_back(r);
    }
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return candidates[a].size() < candidates[b].size();
  });

  std::vector<std::size_t> rho(k, k);
  std::vector<bool> used(k, false);
  auto prefixMatches = [&](std::size_t depth) {
    std::vector<std::vector<std::uint64_t>> lhs(k), rhs(k);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t t = 0; t <= depth; ++t) {
        lhs[j].push_back(q.at(order[t], j));
        rhs[j].push_back(p.at(rho[order[t]], j));
      }
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
  };
  std::function<bool(std::size_t)> dfs = [&](std::size_t depth) {
    if (depth == k)
      return true;
    std::size_t i = order[depth];
    for (std::size_t r : candidates[i]) {
      if (used[r])
        continue;
      rho[i] = r;
      if (!prefixMatches(depth))
        continue;
      used[r] = true;
      if (dfs(depth + 1))
        return true;
      used[r] = false;
    }
    rho[i] = k;
    return false;
  };
  if (!dfs(0))
    return std::nullopt;

  PermPair pair;
  pair.rowPerm = rho;
  pair.colPerm.assign(k, k);
  std::vector<bool> taken(k, false);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t c = 0; c < k; ++c) {
      if (taken[c])
        continue;
      bool match = true;
      for (std::size_t i = 0; i < k && match; ++i)
        match = p.at(rho[i], c) == q.at(i, j);
      if (match) {
        pair.colPerm[j] = c;
        taken[c] = true;
        break;
      }
    }
  }
  return pair;
}

char const *verdictName(Verdict v)
{
  switch (v) {
  case Verdict::Distinct: return "Distinct";
  case Verdict::Equal: return "Equal";
  case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Assumption defaultOvergroupAssumption()
{
  return {"overgroups",
          "Apart from the alternating and symmetric groups of degree |G:H|, every overgroup of G "
          "in Sym(|G:H|) has socle T.",
          "M. W. Liebeck, C. E. Praeger, J. Saxl, A classification of the maximal subgroups of the "
          "finite alternating and symmetric groups, J. Algebra 111 (1987), Tables II-VI"};
}

Assumption maximalityAssumption()
{
  return {"maximality",
          "H is a maximal subgroup of G, so G acts primitively on the cosets of H.",
          "M. W. Liebeck, C. E. Praeger, J. Saxl, A classification of the maximal subgroups of the "
          "finite alternating and symmetric groups, J. Algebra 111 (1987), main theorem"};
}

DoubleCosetCertificate symDoubleCosetEqual(SetPartition const &v, Perm const &g, Perm const &h)
{
  if (g.degree() != v.degree() || h.degree() != v.degree())
    throw Error(ErrorCode::DegreeMismatch, "partition and permutation degrees differ");
  DoubleCosetCertificate cert;
  cert.claim = "h in KgK for K the stabilizer of v in S_n";
  cert.p = intersectionMatrix(v, v.image(g));
  cert.q = intersectionMatrix(v, v.image(h));
  auto pair = permEquivalent(*cert.p, *cert.q);
  if (!pair) {
    cert.verdict = Verdict::Distinct;
    cert.exhaustiveNonEquivalence = true;
    cert.notes.push_back("no row and column permutations carry P(v,v^g) to P(v,v^h)");
    return cert;
  }
  Perm c = cellTransport(v, g, h, *pair);
  Perm k1 = h * c.inverse() * g.inverse();
  checkWitness(v, g, h, k1, c);
  cert.verdict = Verdict::Equal;
  cert.matrixWitness = *pair;
  cert.k1 = k1;
  cert.k2 = c;
  cert.notes.push_back("k2 maps each cell of (v, v^g) onto the matching cell of (v, v^h)");
  return cert;
}

DoubleCosetCertificate altDoubleCosetEqual(SetPartition const &v, Perm const &g, Perm const &h)
{
  if (!g.isEven() || !h.isEven())
    throw Error(ErrorCode::OddInput, "double cosets of K cap A_n need even g and h");
  DoubleCosetCertificate cert = symDoubleCosetEqual(v, g, h);
  cert.claim = "h in HgH for H = K cap A_n, K the stabilizer of v in S_n";
  if (cert.verdict == Verdict::Distinct) {
    cert.notes.push_back("h is outside KgK, hence outside the smaller set HgH");
    return cert;
  }
  if (cert.k2->isEven()) {
    cert.notes.push_back("the witness (k1, k2) is already even, so it lies in H x H");
    return cert;
  }
  // Every witness has the form (h (a k2)^-1 g^-1, a k2) with a in K cap K^g.
  // An odd a flips both parities; without one all witnesses stay odd.
  auto stab = pairStabilizer(v, v.image(g));
  if (!stab.containsOddElement) {
    cert.verdict = Verdict::Distinct;
    cert.notes.push_back(
        "every witness (k1, k2) in K x K is odd because K cap K^g lies in A_n");
    return cert;
  }
  Perm a = *std::find_if(stab.generators.begin(), stab.generators.end(),
                         [](Perm const &x) { return !x.isEven(); });
  Perm k2 = a * *cert.k2;
  Perm k1 = h * k2.inverse() * g.inverse();
  checkWitness(v, g, h, k1, k2);
  cert.k1 = k1;
  cert.k2 = k2;
  cert.notes.push_back("the first witness was odd; multiplying k2 by the odd element " +
                       a.toCycleString() + " of K cap K^g makes it even");
  return cert;
}

bool bruteForceDoubleCoset(PermGroup const &h, Perm const &g, Perm const &x)
{
  if (!h.order().toU64() || *h.order().toU64() > bruteForceElementBound)
    throw Error(ErrorCode::TooLarge, "subgroup too large for explicit double-coset enumeration");
  Perm gInv = g.inverse();
  for (auto const &y : h.elements(bruteForceElementBound)) {
    if (h.contains(x * y.inverse() * gInv))
      return true;
  }
  return false;
}

CriterionCertificate checkBiprimitiveCriterion(SetPartition const &v, Perm const &g,
                                               Assumption const &overgroupAssumption)
{
  std::size_t n = v.degree();
  if (g.degree() != n)
    throw Error(ErrorCode::DegreeMismatch, "partition and permutation degrees differ");
  if (!g.isEven())
    throw Error(ErrorCode::OddInput, "g must lie in A_n");
  if (n < 5 || n == 6 || !supportedStabilizer(v))
    throw Error(ErrorCode::UnsupportedStabilizer,
                "need n >= 5, n != 6, and a uniform partition with blocks of size >= 2 or a "
                "two-block partition");

  CriterionCertificate out;
  out.claim = "B(A_n, H, H, HgH) is semisymmetric for H = Stab(v) cap A_n";
  out.degree = n;
  out.v = v;
  out.g = g;

  auto a = altDoubleCosetEqual(v, g, g.inverse());
  a.claim = "HgH != Hg^-1 H";
  bool condA = a.verdict == Verdict::Distinct;
  out.conditions.push_back({"(a) HgH != Hg^-1 H", condA,
                            condA ? "Hg^-1 H differs from HgH" : "g^-1 lies in HgH"});
  out.certificates.push_back(a);

  out.conditions.push_back({"(b) overgroups have socle T", true,
                            "recorded assumption: " + overgroupAssumption.statement});

  auto stab = pairStabilizer(v, v.image(g));
  bool condC = stab.containsOddElement;
  out.conditions.push_back(
      {"(c) Sym(n) = A_n (K cap K^g)", condC,
       condC ? "K cap K^g contains an odd permutation" : "K cap K^g lies in A_n"});
  out.pairStabilizer = stab;

  out.assumptions = {overgroupAssumption, maximalityAssumption()};
  out.semisymmetric = condA && condC;
  if (out.semisymmetric)
    out.conclusion = "semisymmetric, conditional on the recorded assumptions";
  else if (!condA)
    out.conclusion = "not certified: condition (a) fails";
  else
    out.conclusion = "not certified: condition (c) fails";
  return out;
}

CriterionCertificate checkNormalizerCriterion(SetPartition const &v, Perm const &g,
                                              Assumption const &overgroupAssumption,
                                              std::optional<Perm> const &iota)
{
  std::size_t n = v.degree();
  if (g.degree() != n)
    throw Error(ErrorCode::DegreeMismatch, "partition and permutation degrees differ");
  if (!g.isEven())
    throw Error(ErrorCode::OddInput, "g must lie in A_n");
  if (n <= 6 || !supportedStabilizer(v))
    throw Error(ErrorCode::UnsupportedStabilizer,
                "need n > 6 and a uniform partition with blocks of size >= 2 or a two-block "
                "partition");

  StabilizerDescriptor descriptor =
      (v.blockCount() == 2 && !v.isUniform())
          ? StabilizerDescriptor::setStab(n, v.block(0), true)
          : StabilizerDescriptor::partitionStab(v, true);
  NormalizerResult normalizer = normalizerInSym(descriptor);
  if (iota) {
    if (iota->degree() != n)
      throw Error(ErrorCode::DegreeMismatch, "iota has the wrong degree");
    if (iota->isEven() && v.isStabilizedBy(*iota))
      throw Error(ErrorCode::NormalizerEqualsH, "the supplied iota lies in H");
    if (!normalizer.normalizer.contains(*iota))
      throw Error(ErrorCode::InvalidArgument, "the supplied iota does not normalize H");
  }

  CriterionCertificate out;
  out.claim = "B(A_n, H, H, HgH) is semisymmetric for H = Stab(v) cap A_n";
  out.degree = n;
  out.v = v;
  out.g = g;
  out.assumptions = {overgroupAssumption, maximalityAssumption()};

  auto a = altDoubleCosetEqual(v, g, g.inverse());
  a.claim = "HgH != Hg^-1 H";
  bool condA = a.verdict == Verdict::Distinct;
  out.conditions.push_back({"HgH != Hg^-1 H", condA,
                            condA ? "Hg^-1 H differs from HgH" : "g^-1 lies in HgH"});
  out.certificates.push_back(a);
  out.conditions.push_back({"overgroups have socle G or Alt(|G:H|)", true,
                            "recorded assumption: " + overgroupAssumption.statement});
  out.pairStabilizer = pairStabilizer(v, v.image(g));

  if (!condA) {
    out.conclusion = "not certified: HgH = Hg^-1 H";
    return out;
  }
  if (normalizer.equalsH) {
    out.conditions.push_back({"N_Sym(n)(H) = H", true, "H is self-normalizing in Sym(n)"});
    out.semisymmetric = true;
    out.conclusion = "semisymmetric, conditional on the recorded assumptions";
    return out;
  }

  Perm i = iota ? *iota : *normalizer.iota;
  out.iota = i;
  Perm y = g.conjugatedBy(i);
  auto b = altDoubleCosetEqual(v, g.inverse(), y);
  b.claim = "Hg^-1 H != H g^iota H";
  bool condB = b.verdict == Verdict::Distinct;
  out.conditions.push_back({"Hg^-1 H != H g^iota H", condB,
                            condB ? "g^iota lies outside Hg^-1 H"
                                  : "g^iota lies in Hg^-1 H, which gives a part-swapping "
                                    "automorphism"});
  out.certificates.push_back(b);
  out.semisymmetric = condB;
  out.conclusion = condB ? "semisymmetric, conditional on the recorded assumptions"
                         : "not semisymmetric: the graph is vertex-transitive";
  return out;
}

} // namespace bcl
