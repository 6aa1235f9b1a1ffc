#include "bcl/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "bcl/error.hpp"
#include "bcl/permgroup.hpp"

namespace bcl
{

namespace
{

struct SporadicData
{
  char const *name;
  std::vector<FactoredNat::Factor> factors;
  u64 out;
};

std::vector<SporadicData> const &sporadicTable()
{
  static std::vector<SporadicData> const table = {
    {"M11", {{2, 4}, {3, 2}, {5, 1}, {11, 1}}, 1},
    {"M12", {{2, 6}, {3, 3}, {5, 1}, {11, 1}}, 2},
    {"J1", {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}}, 1},
    {"M22", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}, 2},
    {"J2", {{2, 7}, {3, 3}, {5, 2}, {7, 1}}, 2},
    {"M23", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}, 1},
    {"HS", {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}, 2},
    {"J3", {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}, 2},
    {"M24", {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}, 1},
    {"McL", {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}, 2},
    {"He", {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}}, 2},
    {"Ru", {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}}, 1},
    {"Suz", {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}, 2},
    {"ON", {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}}, 2},
    {"Co3", {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}, 1},
    {"Co2", {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}, 1},
    {"Fi22", {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}, 2},
    {"HN", {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}}, 2},
    {"Ly", {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}}, 1},
    {"Th", {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}}, 1},
    {"Fi23", {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}}, 1},
    {"Co1", {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}, 1},
    {"J4", {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1}, {37, 1}, {43, 1}}, 1},
    {"Fi24'", {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {23, 1}, {29, 1}}, 2},
    {"B",
     {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1}, {47, 1}},
     1},
    {"M",
     {{2, 46},
      {3, 20},
      {5, 9},
      {7, 6},
      {11, 2},
      {13, 3},
      {17, 1},
      {19, 1},
      {23, 1},
      {29, 1},
      {31, 1},
      {41, 1},
      {47, 1},
      {59, 1},
      {71, 1}},
     1},
    // The Tits group 2F4(2)', simple but not of Lie type in the strict sense.
    {"2F4(2)'", {{2, 11}, {3, 3}, {5, 2}, {13, 1}}, 2},
  };
  return table;
}

SporadicData const *findSporadic(std::string const &name)
{
  for (auto const &s : sporadicTable()) {
    if (name == s.name)
      return &s;
  }
  if (name == "Tits")
    return &sporadicTable().back();
  if (name == "O'N")
    return findSporadic("ON");
  if (name == "Fi24")
    return findSporadic("Fi24'");
  return nullptr;
}

struct PrimePower
{
  u64 p = 0;
  u64 f = 0;
};

std::optional<PrimePower> primePowerOf(u64 q)
{
  if (q < 2)
    return std::nullopt;
  for (u64 p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      u64 f = 0;
      while (q % p == 0) {
        q /= p;
        ++f;
      }
      if (q != 1)
        return std::nullopt;
      return PrimePower{p, f};
    }
  }
  return PrimePower{q, 1};
}

PrimePower requirePrimePower(u64 q)
{
  auto pp = primePowerOf(q);
  if (!pp)
    throw Error(ErrorCode::InvalidParameters, "q = " + std::to_string(q) + " is not a prime power");
  return *pp;
}

u64 powMod(u64 base, u64 e, u64 m)
{
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1)
      r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return r;
}

// q^k + 1 when plus, q^k - 1 otherwise, raised to mult (which may be
// negative for quotients).
struct Term
{
  u64 k;
  bool plus;
  int mult;
};

struct LieData
{
  u64 qExponent = 0;
  std::vector<Term> terms;
  u64 d = 1;
  u64 dMax = 1; // largest d over all q, for monotone scan cut-offs
};

bool isClassical(Family f)
{
  return f == Family::PSL || f == Family::PSU || f == Family::PSp || f == Family::POmega ||
         f == Family::POmegaPlus || f == Family::POmegaMinus;
}

bool isExceptional(Family f)
{
  return f == Family::Sz || f == Family::G2 || f == Family::Ree || f == Family::D43 || f == Family::F4 ||
         f == Family::F42 || f == Family::E6 || f == Family::E62 || f == Family::E7 || f == Family::E8;
}

LieData lieData(GroupSpec const &s)
{
  LieData L;
  u64 q = s.q;
  auto minus = [&](u64 k, int mult = 1) { L.terms.push_back({k, false, mult}); };
  auto plus = [&](u64 k) { L.terms.push_back({k, true, 1}); };
  switch (s.family) {
  case Family::PSL: {
    u64 n = s.dim;
    L.qExponent = n * (n - 1) / 2;
    for (u64 i = 2; i <= n; ++i)
      minus(i);
    L.d = std::gcd(n, q - 1);
    L.dMax = n;
    break;
  }
  case Family::PSU: {
    u64 n = s.dim;
    L.qExponent = n * (n - 1) / 2;
    for (u64 i = 2; i <= n; ++i) {
      if (i % 2 == 0)
        minus(i);
      else
        plus(i);
    }
    L.d = std::gcd(n, q + 1);
    L.dMax = n;
    break;
  }
  case Family::PSp:
  case Family::POmega: {
    u64 m = s.dim / 2;
    L.qExponent = m * m;
    for (u64 i = 1; i <= m; ++i)
      minus(2 * i);
    L.d = std::gcd(u64(2), q - 1);
    L.dMax = 2;
    break;
  }
  case Family::POmegaPlus:
  case Family::POmegaMinus: {
    u64 m = s.dim / 2;
    bool isPlus = s.family == Family::POmegaPlus;
    L.qExponent = m * (m - 1);
    if (isPlus)
      minus(m);
    else
      plus(m);
    for (u64 i = 1; i < m; ++i)
      minus(2 * i);
    u64 qm = powMod(q, m, 4);
    L.d = std::gcd(u64(4), isPlus ? (qm + 3) % 4 : (qm + 1) % 4);
    if (L.d == 0)
      L.d = 4;
    L.dMax = 4;
    break;
  }
  case Family::Sz:
    L.qExponent = 2;
    plus(2);
    minus(1);
    break;
  case Family::G2:
    L.qExponent = 6;
    minus(6);
    minus(2);
    break;
  case Family::Ree:
    L.qExponent = 3;
    plus(3);
    minus(1);
    break;
  case Family::D43:
    // q^8 + q^4 + 1 = (q^12 - 1) / (q^4 - 1)
    L.qExponent = 12;
    minus(12);
    minus(4, -1);
    minus(6);
    minus(2);
    break;
  case Family::F4:
    L.qExponent = 24;
    for (u64 k : {12, 8, 6, 2})
      minus(k);
    break;
  case Family::F42:
    L.qExponent = 12;
    plus(6);
    minus(4);
    plus(3);
    minus(1);
    break;
  case Family::E6:
    L.qExponent = 36;
    for (u64 k : {12, 9, 8, 6, 5, 2})
      minus(k);
    L.d = std::gcd(u64(3), q - 1);
    L.dMax = 3;
    break;
  case Family::E62:
    L.qExponent = 36;
    minus(12);
    plus(9);
    minus(8);
    minus(6);
    plus(5);
    minus(2);
    L.d = std::gcd(u64(3), q + 1);
    L.dMax = 3;
    break;
  case Family::E7:
    L.qExponent = 63;
    for (u64 k : {18, 14, 12, 10, 8, 6, 2})
      minus(k);
    L.d = std::gcd(u64(2), q - 1);
    L.dMax = 2;
    break;
  case Family::E8:
    L.qExponent = 120;
    for (u64 k : {30, 24, 20, 18, 14, 12, 8, 2})
      minus(k);
    break;
  default:
    throw Error(ErrorCode::InvalidArgument, "not a group of Lie type");
  }
  return L;
}

BigInt undividedLieOrder(LieData const &L, u64 q)
{
  BigInt num = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(L.qExponent));
  BigInt den = 1;
  for (auto const &t : L.terms) {
    BigInt v = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(t.k));
    if (t.plus)
      v += 1;
    else
      v -= 1;
    for (int i = 0; i < std::abs(t.mult); ++i) {
      if (t.mult > 0)
        num *= v;
      else
        den *= v;
    }
  }
  return num / den;
}

struct NameForm
{
  std::string head;
  std::vector<u64> args;
  std::vector<std::string> suffixes;
};

std::string stripSpaces(std::string const &text)
{
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)))
      out += c;
  }
  return out;
}

u64 parseU64(std::string const &tok, std::string const &context)
{
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18)
    throw Error(ErrorCode::InvalidParameters, "bad number '" + tok + "' in '" + context + "'");
  return std::stoull(tok);
}

NameForm splitName(std::string const &text)
{
  NameForm form;
  auto open = text.find('(');
  std::string rest;
  if (open == std::string::npos) {
    auto dot = text.find('.');
    form.head = text.substr(0, dot);
    rest = dot == std::string::npos ? "" : text.substr(dot);
  } else {
    auto close = text.find(')', open);
    if (close == std::string::npos)
      throw Error(ErrorCode::InvalidParameters, "unbalanced parentheses in '" + text + "'");
    form.head = text.substr(0, open);
    std::string inner = text.substr(open + 1, close - open - 1);
    std::size_t start = 0;
    while (start <= inner.size()) {
      auto comma = inner.find(',', start);
      std::string tok = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      form.args.push_back(parseU64(tok, text));
      if (comma == std::string::npos)
        break;
      start = comma + 1;
    }
    rest = text.substr(close + 1);
    // The Tits group is written 2F4(2)'.
    if (!rest.empty() && rest[0] == '\'') {
      form.head += "'";
      rest = rest.substr(1);
    }
  }
  while (!rest.empty()) {
    if (rest[0] != '.')
      throw Error(ErrorCode::InvalidParameters, "unexpected text '" + rest + "' in '" + text + "'");
    auto next = rest.find('.', 1);
    form.suffixes.push_back(rest.substr(1, next == std::string::npos ? std::string::npos : next - 1));
    rest = next == std::string::npos ? "" : rest.substr(next);
  }
  return form;
}

u64 suffixMultiplier(std::string const &suffix, std::string const &context)
{
  if (!suffix.empty() && suffix[0] == 'D')
    return parseU64(suffix.substr(1), context);
  if (!suffix.empty() && suffix.front() == '[' && suffix.back() == ']')
    return parseU64(suffix.substr(1, suffix.size() - 2), context);
  return parseU64(suffix, context);
}

std::string familyHead(Family f)
{
  switch (f) {
  case Family::Alt: return "Alt";
  case Family::Sym: return "Sym";
  case Family::PSL: return "PSL";
  case Family::PSU: return "PSU";
  case Family::PSp: return "PSp";
  case Family::POmega: return "POmega";
  case Family::POmegaPlus: return "POmegaPlus";
  case Family::POmegaMinus: return "POmegaMinus";
  case Family::Sz: return "Sz";
  case Family::G2: return "G2";
  case Family::Ree: return "Ree";
  case Family::D43: return "3D4";
  case Family::F4: return "F4";
  case Family::F42: return "2F4";
  case Family::E6: return "E6";
  case Family::E62: return "2E6";
  case Family::E7: return "E7";
  case Family::E8: return "E8";
  case Family::Sporadic: return "Sporadic";
  }
  return "?";
}

std::optional<Family> familyFromHead(std::string const &head)
{
  static std::map<std::string, Family> const heads = {
    {"Alt", Family::Alt},       {"A", Family::Alt},
    {"Sym", Family::Sym},       {"S", Family::Sym},
    {"PSL", Family::PSL},       {"L", Family::PSL},
    {"PSU", Family::PSU},       {"U", Family::PSU},
    {"PSp", Family::PSp},       {"POmega", Family::POmega},
    {"POmegaPlus", Family::POmegaPlus}, {"POmega+", Family::POmegaPlus},
    {"POmegaMinus", Family::POmegaMinus}, {"POmega-", Family::POmegaMinus},
    {"Sz", Family::Sz},         {"2B2", Family::Sz},
    {"G2", Family::G2},         {"Ree", Family::Ree},
    {"2G2", Family::Ree},       {"3D4", Family::D43},
    {"F4", Family::F4},         {"2F4", Family::F42},
    {"E6", Family::E6},         {"2E6", Family::E62},
    {"E7", Family::E7},         {"E8", Family::E8},
  };
  auto it = heads.find(head);
  if (it == heads.end())
    return std::nullopt;
  return it->second;
}

FactoredNat lieOrder(GroupSpec const &s)
{
  auto form = *cyclotomicForm(s);
  FactoredNat order = FactoredNat::primePower(form.p, form.f * form.qExponent);
  for (auto const &[m, e] : form.phiExponents)
    order = mul(order, pow(cyclotomicValue(m, static_cast<i64>(s.q)), e));
  return divExact(order, FactoredNat::fromInteger(form.d));
}

std::string factorialLabel(char const *sym, u64 m)
{ return std::string(sym) + "_" + std::to_string(m); }

} // anonymous namespace

GroupSpec GroupSpec::alt(u64 n)
{
  GroupSpec s;
  s.family = Family::Alt;
  s.dim = n;
  return s;
}

GroupSpec GroupSpec::sym(u64 n)
{
  GroupSpec s;
  s.family = Family::Sym;
  s.dim = n;
  return s;
}

GroupSpec GroupSpec::classical(Family family, u64 dim, u64 q)
{
  GroupSpec s;
  s.family = family;
  s.dim = dim;
  s.q = q;
  return s;
}

GroupSpec GroupSpec::exceptional(Family family, u64 q)
{
  GroupSpec s;
  s.family = family;
  s.q = q;
  return s;
}

GroupSpec GroupSpec::sporadicGroup(std::string name)
{
  auto const *data = findSporadic(name);
  if (!data)
    throw Error(ErrorCode::UnknownGroup, "unknown sporadic group '" + name + "'");
  GroupSpec s;
  s.family = Family::Sporadic;
  s.sporadic = data->name;
  return s;
}

GroupSpec GroupSpec::parse(std::string const &raw)
{
  std::string text = stripSpaces(raw);
  if (text.empty())
    throw Error(ErrorCode::InvalidParameters, "empty group name");
  NameForm form = splitName(text);
  GroupSpec s;
  bool named = false;

  auto needArgs = [&](std::size_t count) {
    if (form.args.size() != count)
      throw Error(ErrorCode::InvalidParameters,
                  "'" + text + "' needs " + std::to_string(count) + " parameter(s)");
  };

  if (form.head == "Sporadic") {
    throw Error(ErrorCode::InvalidParameters, "write sporadic groups by name, e.g. 'M11'");
  } else if (form.args.empty() && findSporadic(form.head)) {
    s = sporadicGroup(form.head);
  } else if (form.head == "2F4'" ) {
    needArgs(1);
    if (form.args[0] != 2)
      throw Error(ErrorCode::InvalidParameters, "only 2F4(2)' is written with a prime");
    s = sporadicGroup("2F4(2)'");
  } else if (form.head == "PGL" || form.head == "PGammaL" || form.head == "PGU" || form.head == "PGSp") {
    needArgs(2);
    u64 d = form.args[0], q = form.args[1];
    auto pp = requirePrimePower(q);
    named = true;
    if (form.head == "PGL") {
      s = classical(Family::PSL, d, q);
      s.extensionMultiplier = std::gcd(d, q - 1);
    } else if (form.head == "PGammaL") {
      s = classical(Family::PSL, d, q);
      s.extensionMultiplier = std::gcd(d, q - 1) * pp.f;
    } else if (form.head == "PGU") {
      s = classical(Family::PSU, d, q);
      s.extensionMultiplier = std::gcd(d, q + 1);
    } else {
      s = classical(Family::PSp, d, q);
      s.extensionMultiplier = std::gcd(u64(2), q - 1);
    }
  } else {
    auto family = familyFromHead(form.head);
    if (!family)
      throw Error(ErrorCode::UnknownGroup, "unknown group family '" + form.head + "' in '" + text + "'");
    if (*family == Family::Alt || *family == Family::Sym) {
      needArgs(1);
      s = *family == Family::Alt ? alt(form.args[0]) : sym(form.args[0]);
    } else if (isClassical(*family)) {
      needArgs(2);
      s = classical(*family, form.args[0], form.args[1]);
    } else {
      needArgs(1);
      s = exceptional(*family, form.args[0]);
    }
  }
  for (auto const &suffix : form.suffixes) {
    s.extensionMultiplier *= suffixMultiplier(suffix, text);
    named = true;
  }
  if (named)
    s.label = text;
  validate(s);
  return s;
}

std::string GroupSpec::socleName() const
{
  switch (family) {
  case Family::Alt:
  case Family::Sym:
    return familyHead(family) + "(" + std::to_string(dim) + ")";
  case Family::Sporadic:
    return sporadic;
  default:
    break;
  }
  if (isClassical(family))
    return familyHead(family) + "(" + std::to_string(dim) + "," + std::to_string(q) + ")";
  return familyHead(family) + "(" + std::to_string(q) + ")";
}

std::string GroupSpec::name() const
{
  if (!label.empty())
    return label;
  if (extensionMultiplier > 1)
    return socleName() + "." + std::to_string(extensionMultiplier);
  return socleName();
}

bool GroupSpec::operator==(GroupSpec const &rhs) const
{
  return family == rhs.family && dim == rhs.dim && q == rhs.q && sporadic == rhs.sporadic &&
         extensionMultiplier == rhs.extensionMultiplier;
}

void validate(GroupSpec const &s)
{
  auto fail = [&](std::string const &why) {
    throw Error(ErrorCode::InvalidParameters, s.socleName() + ": " + why);
  };
  if (s.extensionMultiplier == 0)
    fail("extension multiplier must be positive");
  switch (s.family) {
  case Family::Alt:
    if (s.dim < 5)
      fail("Alt(n) needs n >= 5");
    break;
  case Family::Sym:
    if (s.dim < 2)
      fail("Sym(n) needs n >= 2");
    if (s.extensionMultiplier != 1)
      fail("Sym(n) takes no extension multiplier");
    return;
  case Family::Sporadic:
    if (!findSporadic(s.sporadic))
      fail("unknown sporadic group");
    break;
  default: {
    auto pp = requirePrimePower(s.q);
    switch (s.family) {
    case Family::PSL:
      if (s.dim < 2 || (s.dim == 2 && s.q < 4))
        fail("PSL(d,q) needs d >= 2 and q >= 4 when d = 2");
      break;
    case Family::PSU:
      if (s.dim < 3 || (s.dim == 3 && s.q == 2))
        fail("PSU(d,q) needs d >= 3 and (d,q) != (3,2)");
      break;
    case Family::PSp:
      if (s.dim < 4 || s.dim % 2 != 0 || (s.dim == 4 && s.q == 2))
        fail("PSp(2m,q) needs even dimension >= 4 and (2m,q) != (4,2)");
      break;
    case Family::POmega:
      if (s.dim < 7 || s.dim % 2 != 1 || pp.p == 2)
        fail("POmega(2m+1,q) needs odd dimension >= 7 and odd q");
      break;
    case Family::POmegaPlus:
    case Family::POmegaMinus:
      if (s.dim < 8 || s.dim % 2 != 0)
        fail("POmega+-(2m,q) needs even dimension >= 8");
      break;
    case Family::Sz:
    case Family::F42:
      if (pp.p != 2 || pp.f % 2 == 0 || pp.f < 3)
        fail("needs q = 2^f with f odd and f >= 3");
      break;
    case Family::Ree:
      if (pp.p != 3 || pp.f % 2 == 0 || pp.f < 3)
        fail("needs q = 3^f with f odd and f >= 3");
      break;
    case Family::G2:
      if (s.q < 3)
        fail("G2(q) needs q >= 3");
      break;
    default:
      break;
    }
  }
  }
  auto out = outerAutomorphismOrder(s).toU64();
  if (!out || *out % s.extensionMultiplier != 0)
    fail("extension multiplier " + std::to_string(s.extensionMultiplier) + " does not divide |Out| = " +
         outerAutomorphismOrder(s).toDecimal());
}

FactoredNat outerAutomorphismOrder(GroupSpec const &s)
{
  if (s.family == Family::Alt)
    return FactoredNat::fromInteger(s.dim == 6 ? 4 : 2);
  if (s.family == Family::Sym)
    return FactoredNat::fromInteger(1);
  if (s.family == Family::Sporadic) {
    auto const *data = findSporadic(s.sporadic);
    if (!data)
      throw Error(ErrorCode::UnknownGroup, "unknown sporadic group '" + s.sporadic + "'");
    return FactoredNat::fromInteger(data->out);
  }
  auto pp = requirePrimePower(s.q);
  u64 q = s.q, f = pp.f;
  u64 out = 1;
  switch (s.family) {
  case Family::PSL:
    out = s.dim == 2 ? std::gcd(u64(2), q - 1) * f : 2 * std::gcd(s.dim, q - 1) * f;
    break;
  case Family::PSU:
    out = std::gcd(s.dim, q + 1) * 2 * f;
    break;
  case Family::PSp:
    out = (s.dim == 4 && pp.p == 2) ? 2 * f : std::gcd(u64(2), q - 1) * f;
    break;
  case Family::POmega:
    out = std::gcd(u64(2), q - 1) * f;
    break;
  case Family::POmegaPlus:
    out = 2 * lieData(s).d * f * (s.dim == 8 ? 3 : 1);
    break;
  case Family::POmegaMinus:
    out = 2 * lieData(s).d * f;
    break;
  case Family::Sz:
  case Family::Ree:
  case Family::F42:
  case Family::E8:
    out = f;
    break;
  case Family::G2:
    out = (pp.p == 3 ? 2 : 1) * f;
    break;
  case Family::D43:
    out = 3 * f;
    break;
  case Family::F4:
    out = (pp.p == 2 ? 2 : 1) * f;
    break;
  case Family::E6:
    out = 2 * std::gcd(u64(3), q - 1) * f;
    break;
  case Family::E62:
    out = std::gcd(u64(3), q + 1) * 2 * f;
    break;
  case Family::E7:
    out = std::gcd(u64(2), q - 1) * f;
    break;
  default:
    break;
  }
  return FactoredNat::fromInteger(out);
}

std::optional<CyclotomicForm> cyclotomicForm(GroupSpec const &s)
{
  if (!isClassical(s.family) && !isExceptional(s.family))
    return std::nullopt;
  auto pp = requirePrimePower(s.q);
  LieData L = lieData(s);
  std::map<u64, i64> phi;
  for (auto const &t : L.terms) {
    // q^k - 1 = prod_{d | k} Phi_d; q^k + 1 = prod_{d | 2k, d does not divide k} Phi_d
    u64 top = t.plus ? 2 * t.k : t.k;
    for (u64 d = 1; d <= top; ++d) {
      if (top % d != 0)
        continue;
      if (t.plus && t.k % d == 0)
        continue;
      phi[d] += t.mult;
    }
  }
  CyclotomicForm form;
  form.p = pp.p;
  form.f = pp.f;
  form.qExponent = L.qExponent;
  form.d = L.d;
  for (auto const &[m, e] : phi) {
    if (e < 0)
      throw Error(ErrorCode::InvalidArgument, "negative cyclotomic exponent");
    if (e > 0)
      form.phiExponents[m] = static_cast<u64>(e);
  }
  return form;
}

FactoredNat orderOf(GroupSpec const &s)
{
  validate(s);
  FactoredNat socle;
  switch (s.family) {
  case Family::Alt:
    socle = divExact(factorialFactored(s.dim), FactoredNat::fromInteger(2));
    break;
  case Family::Sym:
    socle = factorialFactored(s.dim);
    break;
  case Family::Sporadic:
    socle = FactoredNat::fromFactors(findSporadic(s.sporadic)->factors);
    break;
  default:
    socle = lieOrder(s);
    break;
  }
  return mul(socle, FactoredNat::fromInteger(s.extensionMultiplier));
}

BigInt orderValue(GroupSpec const &s)
{
  BigInt socle;
  switch (s.family) {
  case Family::Alt:
  case Family::Sym: {
    socle = 1;
    for (u64 i = 2; i <= s.dim; ++i)
      socle *= i;
    if (s.family == Family::Alt)
      socle /= 2;
    break;
  }
  case Family::Sporadic:
    socle = FactoredNat::fromFactors(findSporadic(s.sporadic)->factors).toBig();
    break;
  default: {
    LieData L = lieData(s);
    socle = undividedLieOrder(L, s.q) / L.d;
    break;
  }
  }
  return socle * s.extensionMultiplier;
}

ArtinInvariants artin(FactoredNat const &order)
{
  if (order.isOne())
    throw Error(ErrorCode::InvalidArgument, "order must be at least 2");
  auto dom = dominantPrime(order);
  ArtinInvariants a;
  a.r = dom.prime;
  a.ell = order.exponent(dom.prime);
  std::set<u64> orders;
  for (auto const &[s, e] : order.factors()) {
    if (s != a.r)
      orders.insert(multiplicativeOrder(static_cast<i64>(a.r), s));
  }
  if (orders.empty())
    throw Error(ErrorCode::NoCofactorPrimes, "order " + order.toDecimal() + " is a prime power");
  a.omega = *orders.rbegin();
  orders.erase(a.omega);
  a.psi = orders.empty() ? 0 : *orders.rbegin();
  if (a.omega == a.psi)
    throw Error(ErrorCode::OmegaEqualsPsi, "omega equals psi, F2 undefined");
  a.f1 = ExactRational(static_cast<i64>(a.ell), static_cast<i64>(a.omega));
  a.f2 = ExactRational(static_cast<i64>(a.omega), static_cast<i64>(a.omega - a.psi)) -
         ExactRational(2) * a.f1;
  return a;
}

std::vector<ArtinReferenceRow> const &artinReferenceRows()
{
  auto row = [](char const *g, u64 r, u64 ell, u64 omega, u64 psi, ExactRational f1, ExactRational f2,
                bool consistent) {
    ArtinReferenceRow out;
    out.group = g;
    out.printed = {r, ell, omega, psi, f1, f2};
    out.printedRationalsConsistent = consistent;
    return out;
  };
  static std::vector<ArtinReferenceRow> const rows = {
    row("Alt(9)", 3, 4, 6, 4, {1, 3}, {7, 3}, false),
    row("Sym(9)", 2, 7, 4, 3, {7, 4}, {1, 2}, true),
    row("Alt(10)", 2, 7, 4, 3, {7, 4}, {1, 2}, true),
    row("Sym(10)", 2, 8, 4, 3, {2}, {0}, true),
    row("Alt(11)", 2, 7, 10, 4, {7, 10}, {4, 15}, true),
    row("Sym(11)", 2, 8, 10, 4, {4, 5}, {1, 15}, true),
    row("Alt(12)", 2, 9, 10, 4, {9, 10}, {-2, 15}, true),
    row("Sym(12)", 2, 10, 10, 4, {1}, {-1, 3}, true),
    row("Alt(20)", 2, 17, 18, 12, {17, 18}, {10, 9}, true),
    row("Sym(20)", 2, 18, 18, 12, {1}, {1}, true),
  };
  return rows;
}

std::vector<std::vector<std::string>> const &exceptionalIsomorphisms()
{
  static std::vector<std::vector<std::string>> const table = {
    {"Alt(5)", "PSL(2,4)", "PSL(2,5)"},
    {"Alt(6)", "PSL(2,9)"},
    {"PSL(2,7)", "PSL(3,2)"},
    {"Alt(8)", "PSL(4,2)"},
    {"PSU(4,2)", "PSp(4,3)"},
  };
  return table;
}

BigInt parseBound(std::string const &raw)
{
  std::string text = stripSpaces(raw);
  auto expo = [&](std::string const &base, std::string const &e) -> BigInt {
    return boost::multiprecision::pow(BigInt(parseU64(base, text)), static_cast<unsigned>(parseU64(e, text)));
  };
  auto pos = text.find_first_of("eE");
  if (pos != std::string::npos)
    return BigInt(parseU64(text.substr(0, pos), text)) * expo("10", text.substr(pos + 1));
  pos = text.find('^');
  if (pos != std::string::npos)
    return expo(text.substr(0, pos), text.substr(pos + 1));
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorCode::InvalidParameters, "bad bound '" + raw + "'");
  return BigInt(text);
}

SameOrderReport sameOrderScan(BigInt const &bound)
{
  SameOrderReport report;
  report.bound = bound;
  std::map<BigInt, std::vector<std::string>> byOrder;
  auto add = [&](GroupSpec const &s, BigInt const &order) {
    ++report.groupsEnumerated;
    byOrder[order].push_back(s.socleName());
  };

  for (u64 n = 5;; ++n) {
    GroupSpec s = GroupSpec::alt(n);
    BigInt o = orderValue(s);
    if (o > bound)
      break;
    add(s, o);
  }
  for (auto const &sp : sporadicTable()) {
    GroupSpec s = GroupSpec::sporadicGroup(sp.name);
    BigInt o = orderValue(s);
    if (o <= bound)
      add(s, o);
  }

  // Rank-indexed families: dimensions grow until even the smallest field
  // gives an order above the bound. The undivided order is increasing in q,
  // so undivided / dMax > bound ends the q loop.
  auto scanFamily = [&](Family family, u64 firstDim, u64 dimStep) {
    for (u64 dim = firstDim;; dim += dimStep) {
      bool any = false;
      for (u64 q = 2;; ++q) {
        auto pp = primePowerOf(q);
        if (!pp)
          continue;
        GroupSpec s = isClassical(family) ? GroupSpec::classical(family, dim, q) : GroupSpec::exceptional(family, q);
        LieData L = lieData(s);
        BigInt undivided = undividedLieOrder(L, q);
        if (undivided > bound * L.dMax)
          break;
        any = true;
        try {
          validate(s);
        } catch (Error const &) {
          continue;
        }
        BigInt o = undivided / L.d;
        if (o <= bound)
          add(s, o);
      }
      if (!any || !isClassical(family))
        break;
    }
  };
  scanFamily(Family::PSL, 2, 1);
  scanFamily(Family::PSU, 3, 1);
  scanFamily(Family::PSp, 4, 2);
  scanFamily(Family::POmega, 7, 2);
  scanFamily(Family::POmegaPlus, 8, 2);
  scanFamily(Family::POmegaMinus, 8, 2);
  for (Family f : {Family::Sz, Family::G2, Family::Ree, Family::D43, Family::F4, Family::F42, Family::E6,
                   Family::E62, Family::E7, Family::E8})
    scanFamily(f, 0, 0);

  auto classOf = [](std::string const &name) -> std::size_t {
    auto const &iso = exceptionalIsomorphisms();
    for (std::size_t i = 0; i < iso.size(); ++i) {
      if (std::find(iso[i].begin(), iso[i].end(), name) != iso[i].end())
        return i;
    }
    return iso.size();
  };

  for (auto &[order, names] : byOrder) {
    std::vector<std::vector<std::string>> classes;
    std::map<std::size_t, std::size_t> isoClassIndex;
    for (auto const &name : names) {
      std::size_t c = classOf(name);
      if (c < exceptionalIsomorphisms().size()) {
        auto it = isoClassIndex.find(c);
        if (it != isoClassIndex.end()) {
          classes[it->second].push_back(name);
          continue;
        }
        isoClassIndex[c] = classes.size();
      }
      classes.push_back({name});
    }
    for (auto &cls : classes) {
      if (cls.size() > 1) {
        std::string note;
        for (std::size_t i = 0; i < cls.size(); ++i)
          note += (i ? " = " : "") + cls[i];
        report.mergedIsomorphisms.push_back(note);
      }
    }
    if (classes.size() > 1)
      report.collisions.push_back({order, classes});
  }
  return report;
}

char const *ambientName(Ambient a)
{ return a == Ambient::Alt ? "Alt" : "Sym"; }

char const *maxTypeName(MaxType t)
{
  switch (t) {
  case MaxType::Intransitive: return "intransitive";
  case MaxType::Imprimitive: return "imprimitive";
  case MaxType::Affine: return "affine";
  case MaxType::Diagonal: return "diagonal";
  case MaxType::PrimitiveWreath: return "primitive wreath";
  case MaxType::AlmostSimple: return "almost simple";
  }
  return "?";
}

namespace
{

// Whether T^2.(Out(T) x S_2) in its diagonal action on T contains odd
// permutations, for the two simple groups of order at most 200. The group
// is generated by left and right multiplications, one outer automorphism
// and inversion; the answer is read off their signs.
bool diagonalContainsOdd(u64 orderT)
{
  static std::map<u64, bool> cache;
  auto it = cache.find(orderT);
  if (it != cache.end())
    return it->second;

  PermGroup t;
  Perm outer;
  if (orderT == 60) {
    t = PermGroup::alternating(5);
    outer = Perm::transposition(5, 0, 1);
  } else if (orderT == 168) {
    // PSL(2,7) on the projective line {0..6, inf = 7}
    auto mobius = [](auto fn) {
      std::vector<Point> img(8);
      for (Point x = 0; x < 8; ++x)
        img[x] = fn(x);
      return Perm(std::move(img));
    };
    auto inv7 = [](Point x) {
      for (Point y = 1; y < 7; ++y) {
        if (x * y % 7 == 1)
          return y;
      }
      return Point(0);
    };
    Perm shift = mobius([](Point x) { return x == 7 ? Point(7) : (x + 1) % 7; });
    Perm square = mobius([](Point x) { return x == 7 ? Point(7) : (2 * x) % 7; });
    Perm flip = mobius([&](Point x) -> Point {
      if (x == 7)
        return 0;
      if (x == 0)
        return 7;
      return (7 - inv7(x)) % 7;
    });
    t = PermGroup::build(8, {shift, square, flip});
    outer = mobius([](Point x) { return x == 7 ? Point(7) : (3 * x) % 7; });
  } else {
    throw Error(ErrorCode::InvalidArgument, "no diagonal data for |T| = " + std::to_string(orderT));
  }
  auto elements = t.elements();
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index.emplace(elements[i], i);
  auto induced = [&](auto fn) {
    std::vector<Point> img(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i)
      img[i] = static_cast<Point>(index.at(fn(elements[i])));
    return Perm(std::move(img));
  };
  std::vector<Perm> gens;
  for (auto const &s : t.generators()) {
    gens.push_back(induced([&](Perm const &x) { return s * x; }));
    gens.push_back(induced([&](Perm const &x) { return x * s; }));
  }
  gens.push_back(induced([&](Perm const &x) { return x.conjugatedBy(outer); }));
  gens.push_back(induced([&](Perm const &x) { return x.inverse(); }));
  bool odd = std::any_of(gens.begin(), gens.end(), [](Perm const &p) { return !p.isEven(); });
  cache[orderT] = odd;
  return odd;
}

FactoredNat agl(u64 p, u64 k)
{
  BigInt pk = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k));
  BigInt order = pk;
  BigInt pi = 1;
  for (u64 i = 0; i < k; ++i) {
    order *= pk - pi;
    pi *= p;
  }
  return factorBig(order);
}

struct EmbeddedAlmostSimple
{
  u64 n;
  Ambient ambient;
  char const *label;
  u64 order;
};

// Primitive almost simple maximal subgroups of Alt(n) and Sym(n) for
// n <= 12 other than Alt(n) itself, from the ATLAS of Finite Groups
// (Conway et al., 1985) lists of maximal subgroups.
std::vector<EmbeddedAlmostSimple> const &embeddedAlmostSimple()
{
  static std::vector<EmbeddedAlmostSimple> const list = {
    {6, Ambient::Sym, "PGL_2(5)", 120},
    {6, Ambient::Alt, "PSL_2(5)", 60},
    {7, Ambient::Alt, "PSL_3(2)", 168},
    {8, Ambient::Sym, "PGL_2(7)", 336},
    {9, Ambient::Alt, "PGammaL_2(8)", 1512},
    {10, Ambient::Sym, "PGammaL_2(9)", 1440},
    {10, Ambient::Alt, "M_10", 720},
    {11, Ambient::Alt, "M_11", 7920},
    {12, Ambient::Sym, "PGL_2(11)", 1320},
    {12, Ambient::Alt, "M_12", 95040},
  };
  return list;
}

} // anonymous namespace

std::vector<MaxSubgroupEntry> maxSubgroupOrders(u64 n, Ambient ambient)
{
  if (n < 5 || n > maxSubgroupDegreeLimit)
    throw Error(ErrorCode::NOutOfRange, "degree " + std::to_string(n) + " outside 5.." +
                                            std::to_string(maxSubgroupDegreeLimit));
  std::vector<MaxSubgroupEntry> out;
  FactoredNat two = FactoredNat::fromInteger(2);
  auto push = [&](MaxType type, u64 a, u64 b, std::string label, FactoredNat symOrder, bool containsOdd) {
    MaxSubgroupEntry e;
    e.type = type;
    e.ambient = ambient;
    e.n = n;
    e.a = a;
    e.b = b;
    e.label = std::move(label);
    e.order = (ambient == Ambient::Alt && containsOdd) ? divExact(symOrder, two) : symOrder;
    out.push_back(std::move(e));
  };

  for (u64 k = 1; 2 * k < n; ++k) {
    u64 m = n - k;
    push(MaxType::Intransitive, m, k, factorialLabel("S", m) + " x " + factorialLabel("S", k),
         mul(factorialFactored(m), factorialFactored(k)), true);
  }
  for (u64 m = 2; m < n; ++m) {
    if (n % m == 0)
      push(MaxType::Imprimitive, m, n / m, factorialLabel("S", m) + " wr " + factorialLabel("S", n / m),
           wreathOrder(m, n / m), true);
  }
  if (auto pp = primePowerOf(n)) {
    bool even = pp->p == 2 && pp->f >= 3;
    push(MaxType::Affine, pp->p, pp->f,
         "AGL_" + std::to_string(pp->f) + "(" + std::to_string(pp->p) + ")", agl(pp->p, pp->f), !even);
  }
  for (u64 orderT : {u64(60), u64(168)}) {
    // n = |T|^(k-1); for n <= 200 only k = 2 occurs.
    u64 power = orderT;
    for (u64 k = 2; power <= n; ++k, power *= orderT) {
      if (power != n)
        continue;
      u64 outT = 2;
      FactoredNat order = mul(mul(pow(FactoredNat::fromInteger(orderT), k), FactoredNat::fromInteger(outT)),
                              factorialFactored(k));
      std::string t = orderT == 60 ? "Alt(5)" : "PSL(2,7)";
      push(MaxType::Diagonal, orderT, k, t + "^" + std::to_string(k) + ".(Out x S_" + std::to_string(k) + ")",
           order, diagonalContainsOdd(orderT));
    }
  }
  for (u64 m = 5; m * m <= n; ++m) {
    u64 power = m;
    for (u64 k = 1; power <= n; ++k) {
      if (k >= 2 && power == n) {
        // A transposition in one coordinate moves m^(k-1) pairs; a coordinate
        // swap moves m^(k-2) * m(m-1)/2 pairs.
        bool even = m % 2 == 0 && (k >= 3 || m % 4 == 0);
        push(MaxType::PrimitiveWreath, m, k,
             factorialLabel("S", m) + " wr " + factorialLabel("S", k) + " (product action)", wreathOrder(m, k),
             !even);
      }
      if (power > n / m)
        break;
      power *= m;
    }
  }
  for (auto const &e : embeddedAlmostSimple()) {
    if (e.n == n && e.ambient == ambient) {
      MaxSubgroupEntry entry;
      entry.type = MaxType::AlmostSimple;
      entry.ambient = ambient;
      entry.n = n;
      entry.label = e.label;
      entry.order = FactoredNat::fromInteger(e.order);
      entry.provenance = "ATLAS of Finite Groups, maximal subgroups of " + std::string(ambientName(ambient)) +
                         "(" + std::to_string(n) + ")";
      out.push_back(std::move(entry));
    }
  }
  return out;
}

CoincidenceReport coincidenceScan(u64 nMax)
{
  if (nMax < 5 || nMax > 60)
    throw Error(ErrorCode::NOutOfRange, "coincidence scan needs 5 <= nMax <= 60");
  CoincidenceReport report;
  report.nMax = nMax;
  for (u64 n = 5; n <= nMax; ++n) {
    if (n > almostSimpleEmbeddedLimit)
      report.almostSimpleNotEnumerated.push_back(n);
    for (Ambient ambient : {Ambient::Sym, Ambient::Alt}) {
      auto entries = maxSubgroupOrders(n, ambient);
      for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
          if (entries[i].order != entries[j].order)
            continue;
          Coincidence c;
          c.n = n;
          c.ambient = ambient;
          c.first = entries[i];
          c.second = entries[j];
          c.crossType = entries[i].type != entries[j].type;
          bool degreeSix = n == 6 && c.crossType && entries[i].type == MaxType::Intransitive &&
                           (entries[j].type == MaxType::Imprimitive || entries[j].type == MaxType::AlmostSimple);
          c.classification = degreeSix ? "degree 6 exception" : "unexpected";
          report.coincidences.push_back(std::move(c));
        }
      }
    }
  }
  for (u64 n = 4; n <= nMax; ++n) {
    std::set<std::vector<FactoredNat::Factor>> seen;
    for (u64 a = 2; a * 2 <= n; ++a) {
      if (n % a != 0)
        continue;
      if (!seen.insert(wreathOrder(a, n / a).factors()).second)
        report.imprimitiveOrdersDistinct = false;
    }
  }
  return report;
}

} // namespace bcl
