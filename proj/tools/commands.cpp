#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <unistd.h>

#include "bcl/bicoset.hpp"
#include "bcl/catalog.hpp"
#include "bcl/cosetcert.hpp"
#include "bcl/graphauto.hpp"
#include "bcl/stabilizers.hpp"

namespace bcl::cli
{

namespace
{

std::string decimal(BigInt const &n)
{
  return n.str();
}

Json matrixJson(IntersectionMatrix const &m)
{
  Json rows = Json::array();
  for (auto const &r : m.rows())
    rows.push_back(r);
  return rows;
}

Json permJson(Perm const &p)
{
  return p.toCycleString();
}

// Graph automorphisms as 0-based image lists, matching the vertex numbering
// of the graph file formats.
Json vertexMapsJson(std::vector<Perm> const &perms)
{
  Json out = Json::array();
  for (auto const &p : perms)
    out.push_back(p.images());
  return out;
}

Json permListJson(std::vector<Perm> const &perms)
{
  Json out = Json::array();
  for (auto const &p : perms)
    out.push_back(permJson(p));
  return out;
}

Json factoredJson(FactoredNat const &n)
{
  return Json{{"value", n.toDecimal()}, {"factorization", n.toFactorString()}};
}

Json assumptionsJson(std::vector<Assumption> const &list)
{
  Json out = Json::array();
  for (auto const &a : list)
    out.push_back({{"id", a.id}, {"statement", a.statement}, {"citation", a.citation}});
  return out;
}

Json doubleCosetJson(DoubleCosetCertificate const &c)
{
  Json out;
  out["claim"] = c.claim;
  out["verdict"] = verdictName(c.verdict);
  if (c.p)
    out["p"] = matrixJson(*c.p);
  if (c.q)
    out["q"] = matrixJson(*c.q);
  if (c.matrixWitness)
    out["matrixWitness"] = {{"rowPerm", c.matrixWitness->rowPerm}, {"colPerm", c.matrixWitness->colPerm}};
  if (c.k1)
    out["k1"] = permJson(*c.k1);
  if (c.k2)
    out["k2"] = permJson(*c.k2);
  out["exhaustiveNonEquivalence"] = c.exhaustiveNonEquivalence;
  out["notes"] = c.notes;
  return out;
}

Json pairStabilizerJson(PairStabilizerReport const &r)
{
  return Json{{"order", factoredJson(r.orderFactored)},
              {"containsOddElement", r.containsOddElement},
              {"cellSizes", matrixJson(r.cellSizes)},
              {"blockPairCount", r.blockPairCount.toDecimal()},
              {"generators", permListJson(r.generators)}};
}

Json criterionJson(CriterionCertificate const &c)
{
  Json out;
  out["claim"] = c.claim;
  out["semisymmetric"] = c.semisymmetric;
  out["conclusion"] = c.conclusion;
  out["degree"] = c.degree;
  out["v"] = c.v.toString();
  out["g"] = permJson(c.g);
  Json conditions = Json::array();
  for (auto const &cond : c.conditions)
    conditions.push_back({{"name", cond.name}, {"holds", cond.holds}, {"detail", cond.detail}});
  out["conditions"] = conditions;
  Json certs = Json::array();
  for (auto const &cert : c.certificates)
    certs.push_back(doubleCosetJson(cert));
  out["certificates"] = certs;
  if (c.pairStabilizer)
    out["pairStabilizer"] = pairStabilizerJson(*c.pairStabilizer);
  if (c.iota)
    out["iota"] = permJson(*c.iota);
  return out;
}

Json manifestJson(Manifest const &m, int outcome)
{
  Json params = Json::array();
  for (auto const &[k, v] : m.parameters)
    params.push_back({{"key", k}, {"value", v}});
  return Json{{"command", m.command}, {"parameters", params}, {"seed", m.seed},
              {"toolVersion", toolVersion}, {"outcome", outcome}};
}

std::string scalarText(Json const &v)
{
  if (v.is_string())
    return v.get<std::string>();
  return v.dump();
}

// Text form: top-level fields and evidence entries as aligned key/value
// lines; arrays of objects get one indented line per element.
std::string renderText(Json const &report)
{
  std::vector<std::pair<std::string, Json>> rows;
  for (char const *key : {"command", "claim", "verdict"})
    rows.emplace_back(key, report[key]);
  for (auto const &[k, v] : report["evidence"].items())
    rows.emplace_back(k, v);
  std::size_t width = 0;
  for (auto const &r : rows)
    width = std::max(width, r.first.size());
  std::ostringstream out;
  for (auto const &[k, v] : rows) {
    out << k << std::string(width - k.size() + 2, ' ');
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << v.size() << " entries\n";
      for (auto const &e : v)
        out << "  " << e.dump() << "\n";
    } else {
      out << scalarText(v) << "\n";
    }
  }
  for (auto const &a : report["assumptions"])
    out << "assumption" << std::string(width > 10 ? width - 8 : 2, ' ') << a["id"].get<std::string>() << ": "
        << a["statement"].get<std::string>() << "\n";
  out << "exit" << std::string(width > 4 ? width - 2 : 2, ' ') << report["manifest"]["outcome"].dump() << "\n";
  return out.str();
}

CommandResult finish(Manifest const &manifest, std::string const &claim, std::string const &verdict,
                     Json evidence, Json assumptions, int exitCode)
{
  CommandResult res;
  res.exitCode = exitCode;
  Json &r = res.report;
  r["schema"] = schemaVersion;
  r["command"] = manifest.command;
  r["claim"] = claim;
  r["verdict"] = verdict;
  r["evidence"] = std::move(evidence);
  r["assumptions"] = std::move(assumptions);
  r["toolVersion"] = toolVersion;
  r["seed"] = manifest.seed;
  r["manifest"] = manifestJson(manifest, exitCode);
  res.text = renderText(r);
  return res;
}

// (1,m+1)(2,m+2,2m+1)(3,2m+2,4,2m+3) on n = 3m points.
Perm example24Element(u64 m)
{
  std::size_t n = 3 * m;
  auto p = [](u64 x) { return static_cast<Point>(x - 1); };
  Perm a = Perm::cycle(n, {p(1), p(m + 1)});
  Perm b = Perm::cycle(n, {p(2), p(m + 2), p(2 * m + 1)});
  Perm c = Perm::cycle(n, {p(3), p(2 * m + 2), p(4), p(2 * m + 3)});
  return a * b * c;
}

IntersectionMatrix example24Formula(u64 m)
{
  return IntersectionMatrix({{m - 4, 1, 3}, {2, m - 2, 0}, {2, 1, m - 3}});
}

} // namespace

int exitCodeFor(ErrorCode code)
{
  return isResourceError(code) ? ExitResource : ExitUsage;
}

CommandResult errorResult(Error const &error, Manifest manifest)
{
  Json evidence{{"errorCode", errorCodeName(error.code())}, {"message", error.what()}};
  return finish(manifest, "command failed", "error", evidence, Json::array(), exitCodeFor(error.code()));
}

CommandResult usageError(std::string const &message, Manifest manifest)
{
  Json evidence{{"errorCode", "Usage"}, {"message", message}};
  return finish(manifest, "command failed", "error", evidence, Json::array(), ExitUsage);
}

CommandResult verifyExample24(u64 m, Manifest manifest)
{
  if (m < 8)
    return usageError("m must be at least 8, got " + std::to_string(m), manifest);
  std::size_t n = 3 * m;
  SetPartition v = SetPartition::uniform(m, 3);
  Perm g = example24Element(m);
  SetPartition w = v.image(g);

  IntersectionMatrix p = intersectionMatrix(v, w);
  IntersectionMatrix expected = example24Formula(m);
  bool transposeEquivalent = permEquivalent(p, p.transpose()).has_value();
  PairStabilizerReport stab = pairStabilizer(v, w);
  CriterionCertificate cert = checkBiprimitiveCriterion(v, g, defaultOvergroupAssumption());

  std::vector<std::string> failures;
  if (p != expected)
    failures.push_back("intersection matrix differs from the formula matrix");
  if (transposeEquivalent)
    failures.push_back("P is permutation-equivalent to its transpose");
  if (!stab.containsOddElement)
    failures.push_back("pair stabilizer contains no odd permutation");
  for (auto const &cond : cert.conditions)
    if (!cond.holds)
      failures.push_back("condition failed: " + cond.name);

  Json evidence;
  evidence["n"] = n;
  evidence["m"] = m;
  evidence["v"] = v.toString();
  evidence["g"] = permJson(g);
  evidence["gIsEven"] = g.isEven();
  evidence["intersectionMatrix"] = matrixJson(p);
  evidence["formulaMatrix"] = matrixJson(expected);
  evidence["matrixMatchesFormula"] = p == expected;
  evidence["transposeEquivalent"] = transposeEquivalent;
  evidence["pairStabilizerContainsOdd"] = stab.containsOddElement;
  evidence["pairStabilizerOrder"] = stab.orderFactored.toDecimal();
  evidence["criterion"] = criterionJson(cert);
  evidence["failures"] = failures;

  bool ok = failures.empty() && cert.semisymmetric;
  std::string verdict = ok ? "semisymmetric-conditional" : "check-failed";
  return finish(manifest, "B(A_n, H, H, HgH) is biprimitive semisymmetric for n = 3m, m = " + std::to_string(m),
                verdict, evidence, assumptionsJson(cert.assumptions), ok ? ExitOk : ExitCheckFailed);
}

CommandResult verifyExample32(Manifest manifest)
{
  std::size_t const n = 32;
  SetPartition v = SetPartition::uniform(4, 8);
  Perm g = Perm::parse("(2,5)(3,9)(4,13)(7,10,15,18,11,17,8,14)(12,29,20,25,19,22,16,21)(23,26)(24,30)(28,31)", n);
  Perm iota = Perm::transposition(n, 0, 1);
  IntersectionMatrix printed({{1, 1, 1, 1, 0, 0, 0, 0},
                              {1, 1, 0, 1, 1, 0, 0, 0},
                              {1, 1, 0, 0, 1, 1, 0, 0},
                              {1, 1, 1, 0, 0, 1, 0, 0},
                              {0, 0, 1, 1, 0, 0, 1, 1},
                              {0, 0, 0, 1, 1, 0, 1, 1},
                              {0, 0, 0, 0, 1, 1, 1, 1},
                              {0, 0, 1, 0, 0, 1, 1, 1}});
  FactoredNat printedIndex = FactoredNat::fromBig(BigInt("59287247761257140625"));

  SetPartition w = v.image(g);
  IntersectionMatrix p = intersectionMatrix(v, w);
  IntersectionMatrix pIota = intersectionMatrix(v, v.image(g.conjugatedBy(iota)));
  bool transposeEquivalent = permEquivalent(p, p.transpose()).has_value();
  PairStabilizerReport stab = pairStabilizer(v, w);
  FactoredNat index = divExact(factorialFactored(n), wreathOrder(4, 8));
  CriterionCertificate biprimitive = checkBiprimitiveCriterion(v, g, defaultOvergroupAssumption());
  CriterionCertificate normalizer = checkNormalizerCriterion(v, g, defaultOvergroupAssumption(), iota);

  bool conditionCFails = false;
  for (auto const &cond : biprimitive.conditions)
    if (cond.name.rfind("(c)", 0) == 0)
      conditionCFails = !cond.holds;

  std::vector<std::string> failures;
  if (!g.isEven())
    failures.push_back("g is not even");
  if (p != printed)
    failures.push_back("intersection matrix differs from the printed matrix");
  if (pIota != p)
    failures.push_back("P(v, v^(g^iota)) differs from P(v, v^g)");
  if (transposeEquivalent)
    failures.push_back("P is permutation-equivalent to its transpose");
  if (stab.containsOddElement)
    failures.push_back("M cap M^g contains an odd permutation");
  if (!conditionCFails)
    failures.push_back("biprimitive criterion condition (c) unexpectedly holds");
  if (!normalizer.semisymmetric)
    failures.push_back("normalizer criterion: " + normalizer.conclusion);
  if (index != printedIndex)
    failures.push_back("index |A_32 : H| differs from the printed value");
  if (index.exponent(2) != 0)
    failures.push_back("index is even, so the graph order is not twice odd");

  Json evidence;
  evidence["n"] = n;
  evidence["v"] = v.toString();
  evidence["g"] = permJson(g);
  evidence["iota"] = permJson(iota);
  evidence["intersectionMatrix"] = matrixJson(p);
  evidence["printedMatrix"] = matrixJson(printed);
  evidence["matrixMatchesPrinted"] = p == printed;
  evidence["intersectionMatrixIota"] = matrixJson(pIota);
  evidence["iotaMatrixEqual"] = pIota == p;
  evidence["transposeEquivalent"] = transposeEquivalent;
  evidence["pairStabilizerContainsOdd"] = stab.containsOddElement;
  evidence["finding"] = stab.containsOddElement ? "M cap M^g contains odd permutations"
                                                : "M cap M^g <= A_32";
  evidence["pairStabilizerOrder"] = stab.orderFactored.toDecimal();
  evidence["index"] = index.toDecimal();
  evidence["vertexCount"] = mul(index, FactoredNat::fromInteger(2)).toDecimal();
  evidence["biprimitiveCriterion"] = criterionJson(biprimitive);
  evidence["normalizerCriterion"] = criterionJson(normalizer);
  evidence["failures"] = failures;

  bool ok = failures.empty();
  return finish(manifest, "B(A_32, H, H, HgH) is semisymmetric of twice odd order", ok ? "semisymmetric-conditional"
                                                                                          : "check-failed",
                evidence, assumptionsJson(normalizer.assumptions), ok ? ExitOk : ExitCheckFailed);
}

CommandResult artinCommand(std::string const &specText, Manifest manifest)
{
  GroupSpec spec = GroupSpec::parse(specText);
  FactoredNat order = orderOf(spec);
  ArtinInvariants inv = artin(order);

  Json computed{{"r", inv.r}, {"ell", inv.ell}, {"omega", inv.omega}, {"psi", inv.psi},
                {"F1", inv.f1.toString()}, {"F2", inv.f2.toString()}};
  Json evidence;
  evidence["group"] = spec.name();
  evidence["order"] = factoredJson(order);
  evidence["lambda"] = logProportion(order);
  evidence["computed"] = computed;

  std::string verdict = "computed";
  int exitCode = ExitOk;
  for (auto const &row : artinReferenceRows()) {
    if (!(GroupSpec::parse(row.group) == spec))
      continue;
    ArtinInvariants const &pr = row.printed;
    bool integersMatch = pr.r == inv.r && pr.ell == inv.ell && pr.omega == inv.omega && pr.psi == inv.psi;
    bool rationalsMatch = pr.f1 == inv.f1 && pr.f2 == inv.f2;
    evidence["reference"] = {{"r", pr.r}, {"ell", pr.ell}, {"omega", pr.omega}, {"psi", pr.psi},
                             {"F1", pr.f1.toString()}, {"F2", pr.f2.toString()}};
    evidence["integersMatch"] = integersMatch;
    evidence["rationalsMatch"] = rationalsMatch;
    evidence["referenceRationalsConsistent"] = row.printedRationalsConsistent;
    if (integersMatch && rationalsMatch) {
      verdict = "matches reference";
    } else if (integersMatch && !row.printedRationalsConsistent) {
      verdict = "matches reference on (r, ell, omega, psi); reference F1, F2 flagged";
      evidence["flag"] = "reference F1 = " + pr.f1.toString() + " differs from ell/omega = " + inv.f1.toString();
    } else {
      verdict = "mismatch";
      exitCode = ExitCheckFailed;
    }
  }
  return finish(manifest, "Artin invariants of |" + spec.name() + "|", verdict, evidence, Json::array(), exitCode);
}

CommandResult scanSameOrder(std::string const &boundText, Manifest manifest)
{
  BigInt bound = parseBound(boundText);
  SameOrderReport rep = sameOrderScan(bound);
  Json collisions = Json::array();
  for (auto const &c : rep.collisions)
    collisions.push_back({{"order", decimal(c.order)}, {"classes", c.classes}});
  Json evidence;
  evidence["bound"] = decimal(rep.bound);
  evidence["groupsEnumerated"] = rep.groupsEnumerated;
  evidence["collisionCount"] = rep.collisions.size();
  evidence["collisions"] = collisions;
  evidence["mergedIsomorphisms"] = rep.mergedIsomorphisms;
  return finish(manifest, "orders <= " + decimal(rep.bound) + " shared by non-isomorphic simple groups",
                std::to_string(rep.collisions.size()) + " collisions", evidence, Json::array(), ExitOk);
}

CommandResult scanCoincidence(u64 nMax, Manifest manifest)
{
  CoincidenceReport rep = coincidenceScan(nMax);
  Json list = Json::array();
  std::size_t unexpected = 0;
  for (auto const &c : rep.coincidences) {
    if (c.classification != "degree 6 exception")
      ++unexpected;
    list.push_back({{"n", c.n},
                    {"ambient", ambientName(c.ambient)},
                    {"order", c.first.order.toDecimal()},
                    {"first", c.first.label},
                    {"firstType", maxTypeName(c.first.type)},
                    {"second", c.second.label},
                    {"secondType", maxTypeName(c.second.type)},
                    {"crossType", c.crossType},
                    {"classification", c.classification}});
  }
  Json evidence;
  evidence["nMax"] = rep.nMax;
  evidence["coincidenceCount"] = rep.coincidences.size();
  evidence["coincidences"] = list;
  evidence["almostSimpleNotEnumerated"] = rep.almostSimpleNotEnumerated;
  evidence["imprimitiveOrdersDistinct"] = rep.imprimitiveOrdersDistinct;
  bool ok = unexpected == 0 && rep.imprimitiveOrdersDistinct;
  std::string verdict = ok ? "only degree 6 coincidences" : std::to_string(unexpected) + " unexpected coincidences";
  std::vector<Assumption> assumptions{maximalityAssumption()};
  return finish(manifest, "maximal subgroups of Alt(n) and Sym(n) of distinct types have distinct orders, 5 <= n <= " +
                              std::to_string(nMax),
                verdict, evidence, assumptionsJson(assumptions), ok ? ExitOk : ExitCheckFailed);
}

CommandResult scanDiophantine(u64 kMax, Manifest manifest)
{
  auto sols = diophantineScan(kMax);
  Json list = Json::array();
  for (auto const &[n, k] : sols)
    list.push_back({n, k});
  bool ok = sols == std::vector<std::pair<u64, u64>>{{1, 1}};
  Json evidence{{"kMax", kMax}, {"solutions", list}, {"expected", Json::array({Json::array({1, 1})})}};
  return finish(manifest, "C(n+k, k) = 2 C(n, k) only for (n, k) = (1, 1), k <= " + std::to_string(kMax),
                ok ? "only (1, 1)" : "unexpected solutions", evidence, Json::array(),
                ok ? ExitOk : ExitCheckFailed);
}

CommandResult scanZsigmondy(u64 qMax, u64 mMax, Manifest manifest)
{
  if (qMax < 2 || mMax < 2)
    return usageError("qmax and mmax must be at least 2", manifest);
  std::set<std::pair<u64, u64>> found;
  std::set<std::pair<u64, u64>> expected;
  for (u64 q = 2; q <= qMax; ++q) {
    for (u64 m = 2; m <= mMax; ++m)
      if (!hasPrimitivePrimeDivisor(q, m))
        found.insert({q, m});
    if (((q + 1) & q) == 0)
      expected.insert({q, 2});
  }
  if (mMax >= 6)
    expected.insert({2, 6});
  Json list = Json::array();
  for (auto const &[q, m] : found)
    list.push_back({q, m});
  Json exp = Json::array();
  for (auto const &[q, m] : expected)
    exp.push_back({q, m});
  bool ok = found == expected;
  Json evidence{{"qMax", qMax}, {"mMax", mMax}, {"exceptions", list}, {"expected", exp}};
  return finish(manifest, "q^m - 1 has a primitive prime divisor except (2,6) and (2^f-1, 2)",
                ok ? "exception set as expected" : "exception set differs", evidence, Json::array(),
                ok ? ExitOk : ExitCheckFailed);
}

CommandResult bicosetCommand(std::string const &inputText, Manifest manifest, std::string *edgeList)
{
  BiCosetInput in = parseBiCosetInput(inputText);
  PermGroup g = PermGroup::build(in.degree, in.group);
  BiCosetGraph gamma = BiCosetGraph::build(g, in.left, in.right, in.dReps);
  Graph graph = gamma.toGraph();
  std::size_t nl = gamma.left().size();
  std::size_t nr = gamma.right().size();

  auto checkJson = [](PropertyCheck const &c) {
    return Json{{"graph", c.graph}, {"group", c.group}, {"agrees", c.agrees()}};
  };
  PropertyCheck regular = checkRegular(gamma);
  PropertyCheck connected = checkConnected(gamma);
  PropertyCheck edgeTransitive = checkEdgeTransitive(gamma);
  bool sufficient = sufficientVertexTransitive(gamma);

  std::vector<std::string> failures;
  if (!regular.agrees())
    failures.push_back("regularity disagrees with |L| = |R|");
  if (!connected.agrees())
    failures.push_back("connectivity disagrees with <D^-1 D> = G");
  if (!edgeTransitive.agrees())
    failures.push_back("edge orbits disagree with the double coset count");

  Json swap;
  swap["predicted"] = sufficient;
  if (sufficient) {
    OrderedPartition parts(2);
    for (std::size_t i = 0; i < nl + nr; ++i)
      parts[i < nl ? 0 : 1].push_back(i);
    OrderedPartition swapped{parts[1], parts[0]};
    auto iso = findIsomorphism(graph, parts, graph, swapped);
    swap["found"] = iso.has_value();
    if (iso)
      swap["automorphism"] = *iso;
    else
      failures.push_back("no part-swapping automorphism although L = R and D = D^-1");
  }

  std::mt19937_64 rng(manifest.seed);
  std::size_t samples = 16;
  std::size_t good = 0;
  for (std::size_t i = 0; i < samples; ++i)
    if (graph.isAutomorphism(vertexAction(gamma, g.randomElement(rng))))
      ++good;
  if (good != samples)
    failures.push_back("a sampled element of G does not act as an automorphism");

  Json faithful;
  try {
    Faithfulness f = faithfulnessCheck(gamma);
    faithful = {{"left", f.left}, {"right", f.right}};
  } catch (Error const &e) {
    if (!isResourceError(e.code()))
      throw;
    faithful = {{"skipped", e.what()}};
  }

  SymmetryReport sym = analyzeSymmetry(graph);

  Json evidence;
  evidence["groupOrder"] = g.order().toDecimal();
  evidence["left"] = in.left.describe();
  evidence["right"] = in.right.describe();
  evidence["dReps"] = permListJson(in.dReps);
  evidence["leftVertices"] = nl;
  evidence["rightVertices"] = nr;
  evidence["edges"] = gamma.edgeCount();
  evidence["regular"] = checkJson(regular);
  evidence["connected"] = checkJson(connected);
  evidence["edgeTransitive"] = checkJson(edgeTransitive);
  evidence["partSwap"] = swap;
  evidence["sampledAutomorphisms"] = {{"samples", samples}, {"automorphisms", good}};
  evidence["faithful"] = faithful;
  evidence["autOrder"] = sym.autOrder.toDecimal();
  evidence["vertexOrbits"] = sym.vertexOrbitCount;
  evidence["edgeOrbits"] = sym.edgeOrbitCount;
  evidence["vertexTransitive"] = sym.vertexTransitive;
  evidence["edgeTransitiveAut"] = sym.edgeTransitive;
  evidence["semisymmetric"] = sym.semisymmetric;
  evidence["failures"] = failures;

  if (edgeList)
    *edgeList = gamma.toEdgeList();
  bool ok = failures.empty();
  return finish(manifest, "graph properties of B(G, L, R, D) agree with the group data",
                ok ? "consistent" : "inconsistent", evidence, Json::array(), ok ? ExitOk : ExitCheckFailed);
}

CommandResult graphCommand(std::string const &inputText, Manifest manifest)
{
  auto graphs = parseGraphFile(inputText);
  Json list = Json::array();
  std::size_t semisymmetric = 0;
  for (auto const &eg : graphs) {
    SymmetryReport sym = analyzeSymmetry(eg.graph);
    if (sym.semisymmetric)
      ++semisymmetric;
    Json entry{{"vertices", sym.vertices},
               {"edges", sym.edges},
               {"regular", sym.regular},
               {"connected", eg.graph.isConnected()},
               {"autOrder", sym.autOrder.toDecimal()},
               {"vertexOrbits", sym.vertexOrbitCount},
               {"edgeOrbits", sym.edgeOrbitCount},
               {"vertexTransitive", sym.vertexTransitive},
               {"edgeTransitive", sym.edgeTransitive},
               {"semisymmetric", sym.semisymmetric},
               {"generators", vertexMapsJson(sym.generators)}};
    if (eg.leftSize)
      entry["leftSize"] = *eg.leftSize;
    list.push_back(entry);
  }
  Json evidence{{"graphCount", graphs.size()}, {"semisymmetricCount", semisymmetric}, {"graphs", list}};
  std::string verdict = graphs.size() == 1 ? (semisymmetric ? "semisymmetric" : "not semisymmetric")
                                           : std::to_string(semisymmetric) + " of " +
                                                 std::to_string(graphs.size()) + " semisymmetric";
  return finish(manifest, "automorphism group and transitivity of the input graphs", verdict, evidence,
                Json::array(), ExitOk);
}

std::vector<std::string> validateReport(Json const &report)
{
  std::vector<std::string> errs;
  if (!report.is_object())
    return {"report is not an object"};
  auto need = [&](Json const &obj, char const *key, auto pred, char const *what, std::string const &where) {
    if (!obj.contains(key))
      errs.push_back(where + key + " missing");
    else if (!pred(obj.at(key)))
      errs.push_back(where + key + " is not " + what);
  };
  auto isString = [](Json const &v) { return v.is_string(); };
  auto isObject = [](Json const &v) { return v.is_object(); };
  auto isArray = [](Json const &v) { return v.is_array(); };
  // In-memory reports may hold nonnegative values as signed integers; parsed
  // ones hold them as unsigned.
  auto isUnsigned = [](Json const &v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<i64>() >= 0);
  };
  need(report, "schema", isString, "a string", "");
  need(report, "command", isString, "a string", "");
  need(report, "claim", isString, "a string", "");
  need(report, "verdict", isString, "a string", "");
  need(report, "evidence", isObject, "an object", "");
  need(report, "assumptions", isArray, "an array", "");
  need(report, "toolVersion", isString, "a string", "");
  need(report, "seed", isUnsigned, "a nonnegative integer", "");
  need(report, "manifest", isObject, "an object", "");
  if (!errs.empty())
    return errs;
  if (report["schema"] != schemaVersion)
    errs.push_back(std::string("schema is not ") + schemaVersion);
  for (auto const &[k, v] : report.items()) {
    static std::set<std::string> const allowed = {"schema", "command", "claim", "verdict", "evidence",
                                                  "assumptions", "toolVersion", "seed", "manifest"};
    if (!allowed.count(k))
      errs.push_back("unexpected field " + k);
  }
  for (auto const &a : report["assumptions"]) {
    if (!a.is_object()) {
      errs.push_back("assumption is not an object");
      continue;
    }
    need(a, "id", isString, "a string", "assumptions[].");
    need(a, "statement", isString, "a string", "assumptions[].");
    need(a, "citation", isString, "a string", "assumptions[].");
  }
  Json const &m = report["manifest"];
  need(m, "command", isString, "a string", "manifest.");
  need(m, "parameters", isArray, "an array", "manifest.");
  need(m, "seed", isUnsigned, "a nonnegative integer", "manifest.");
  need(m, "toolVersion", isString, "a string", "manifest.");
  need(m, "outcome", isUnsigned, "a nonnegative integer", "manifest.");
  if (m.contains("parameters") && m["parameters"].is_array())
    for (auto const &p : m["parameters"]) {
      if (!p.is_object() || !p.contains("key") || !p.contains("value") || !p["key"].is_string() ||
          !p["value"].is_string())
        errs.push_back("manifest.parameters[] must be {key, value} strings");
    }
  if (m.contains("outcome") && isUnsigned(m["outcome"]) && m["outcome"].get<u64>() > 3)
    errs.push_back("manifest.outcome is not an exit code 0..3");
  if (m.contains("command") && m["command"] != report["command"])
    errs.push_back("manifest.command differs from command");
  if (m.contains("seed") && m["seed"] != report["seed"])
    errs.push_back("manifest.seed differs from seed");
  if (m.contains("toolVersion") && m["toolVersion"] != report["toolVersion"])
    errs.push_back("manifest.toolVersion differs from toolVersion");
  return errs;
}

void writeFileAtomically(std::string const &path, std::string const &content)
{
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error(ErrorCode::InvalidArgument, "cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out)
      throw Error(ErrorCode::InvalidArgument, "write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::InvalidArgument, "cannot rename onto " + path);
  }
}

std::string readFile(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace bcl::cli
