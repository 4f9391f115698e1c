#include "zg/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace zg {

namespace {

struct Line {
  int number;
  std::string text;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    raw = trim(raw);
    if (!raw.empty()) out.push_back({n, raw});
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::int64_t parse_int(const std::string& w, int line) {
  try {
    std::size_t used = 0;
    const auto v = std::stoll(w, &used);
    if (used != w.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, found '" + w + "'");
  }
}

Integer parse_big(const std::string& w, int line) {
  const bool neg = !w.empty() && w[0] == '-';
  const std::string digits = neg || (!w.empty() && w[0] == '+') ? w.substr(1) : w;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(line, "expected an integer, found '" + w + "'");
  Integer v(digits);
  return neg ? Integer(-v) : v;
}

IntRow parse_row(const std::vector<std::string>& ws, std::size_t from, std::size_t m, int line) {
  if (ws.size() - from != m)
    throw ParseError(line, "expected " + std::to_string(m) + " integers, found " + std::to_string(ws.size() - from));
  IntRow r;
  for (std::size_t i = from; i < ws.size(); ++i) r.push_back(parse_int(ws[i], line));
  return r;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StructureConstantAlgebra parse_ring(const std::string& text) {
  std::string name;
  std::optional<std::size_t> rank;
  std::optional<AlgebraKind> kind;
  std::optional<IntVector> identity;
  int identity_line = 0;
  std::vector<std::pair<int, std::vector<std::string>>> body;
  for (const auto& [n, s] : content_lines(text)) {
    auto ws = words(s);
    const std::string& key = ws[0];
    if (key == "name") {
      if (ws.size() != 2) throw ParseError(n, "name takes one word");
      name = ws[1];
    } else if (key == "rank") {
      if (ws.size() != 2) throw ParseError(n, "rank takes one integer");
      const auto r = parse_int(ws[1], n);
      if (r < 0) throw ParseError(n, "rank must be non-negative");
      rank = static_cast<std::size_t>(r);
    } else if (key == "kind") {
      if (ws.size() != 2) throw ParseError(n, "kind takes one word");
      try {
        kind = parse_algebra_kind(ws[1]);
      } catch (const std::exception& e) {
        throw ParseError(n, e.what());
      }
    } else if (key == "identity") {
      IntVector u;
      for (std::size_t i = 1; i < ws.size(); ++i) u.push_back(parse_big(ws[i], n));
      identity = u;
      identity_line = n;
    } else if (std::isdigit(static_cast<unsigned char>(key[0])) || key[0] == '-' || key[0] == '+') {
      if (ws.size() != 4) throw ParseError(n, "structure constant lines are 'i j k value'");
      body.emplace_back(n, ws);
    } else {
      throw ParseError(n, "unknown key '" + key + "'");
    }
  }
  if (!rank) throw ParseError(0, "missing 'rank'");
  if (!kind) throw ParseError(0, "missing 'kind'");
  const std::size_t h = *rank;
  if (identity && identity->size() != h) throw ParseError(identity_line, "identity must have rank entries");
  if (*kind == AlgebraKind::unital && !identity) throw ParseError(0, "unital ring needs an 'identity' line");
  if (*kind != AlgebraKind::unital && identity) throw ParseError(identity_line, "identity given for a non-unital kind");
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, int> seen;
  std::vector<StructureConstant> constants;
  for (const auto& [n, ws] : body) {
    std::size_t idx[3];
    for (int t = 0; t < 3; ++t) {
      const auto v = parse_int(ws[static_cast<std::size_t>(t)], n);
      if (v < 1 || static_cast<std::size_t>(v) > h) throw ParseError(n, "index " + ws[static_cast<std::size_t>(t)] + " out of range 1.." + std::to_string(h));
      idx[t] = static_cast<std::size_t>(v - 1);
    }
    auto key = std::make_tuple(idx[0], idx[1], idx[2]);
    if (auto it = seen.find(key); it != seen.end())
      throw ParseError(n, "constant repeated (first given on line " + std::to_string(it->second) + ")");
    seen[key] = n;
    const Integer value = parse_big(ws[3], n);
    if (value != 0) constants.push_back({idx[0], idx[1], idx[2], value});
  }
  StructureConstantAlgebra L(h, *kind, constants, identity, name);
  const auto report = validate(L);
  if (!report.ok()) throw ParseError(0, "invalid ring: " + report.violations.front());
  return L;
}

std::string emit_ring(const StructureConstantAlgebra& L) {
  std::ostringstream os;
  if (!L.name().empty()) os << "name " << L.name() << "\n";
  os << "rank " << L.rank() << "\n";
  os << "kind " << to_string(L.kind()) << "\n";
  if (L.identity()) {
    os << "identity";
    for (const auto& x : *L.identity()) os << " " << x;
    os << "\n";
  }
  for (const auto& c : L.nonzero_constants())
    os << c.i + 1 << " " << c.j + 1 << " " << c.k + 1 << " " << c.value << "\n";
  return os.str();
}

MonomialConeDatum parse_cone(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty cone file");
  const auto head = words(lines[0].text);
  if (head.size() != 3 || head[0] != "T") throw ParseError(lines[0].number, "header must be 'T m l'");
  const auto m = parse_int(head[1], lines[0].number);
  const auto l = parse_int(head[2], lines[0].number);
  if (m < 1 || l < 0) throw ParseError(lines[0].number, "need m >= 1 and l >= 0");
  MonomialConeDatum D;
  D.dimension = static_cast<std::size_t>(m);
  std::vector<std::optional<IntRow>> f(static_cast<std::size_t>(l + 1)), g(static_cast<std::size_t>(l + 1));
  std::optional<IntRow> nu;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [n, s] = lines[i];
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError(n, "expected 'label : integers'");
    const auto label = words(s.substr(0, colon));
    const auto values = words(s.substr(colon + 1));
    const IntRow row = parse_row(values, 0, D.dimension, n);
    if (label.size() == 1 && label[0] == "nu") {
      if (nu) throw ParseError(n, "nu given twice");
      nu = row;
      continue;
    }
    if (label.size() != 2 || label[0] != "N" || label[1].size() < 3 || (label[1][0] != 'f' && label[1][0] != 'g') ||
        label[1][1] != '_')
      throw ParseError(n, "unknown row label '" + trim(s.substr(0, colon)) + "'");
    const auto j = parse_int(label[1].substr(2), n);
    if (j < 0 || j > l) throw ParseError(n, "index " + std::to_string(j) + " out of range 0.." + std::to_string(l));
    auto& slot = (label[1][0] == 'f' ? f : g)[static_cast<std::size_t>(j)];
    if (slot) throw ParseError(n, "row " + label[1] + " given twice");
    slot = row;
  }
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (!f[j] || !g[j]) throw ParseError(0, "missing row for f_" + std::to_string(j) + " or g_" + std::to_string(j));
    D.nf.push_back(*f[j]);
    D.ng.push_back(*g[j]);
  }
  if (!nu) throw ParseError(0, "missing 'nu' row");
  D.nu = *nu;
  try {
    D.check();
  } catch (const std::exception& e) {
    throw ParseError(0, e.what());
  }
  return D;
}

std::string emit_cone(const MonomialConeDatum& D) {
  std::ostringstream os;
  os << "T " << D.dimension << " " << D.constraint_count() << "\n";
  auto row = [&](const IntRow& r) {
    for (auto x : r) os << " " << x;
    os << "\n";
  };
  for (std::size_t j = 0; j < D.nf.size(); ++j) {
    os << "N f_" << j << " :";
    row(D.nf[j]);
    os << "N g_" << j << " :";
    row(D.ng[j]);
  }
  os << "nu :";
  row(D.nu);
  return os.str();
}

TPPolynomial parse_p_polynomial(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty polynomial in p");
  TPPolynomial out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    Integer c = j > i ? Integer(s.substr(i, j - i)) : Integer(1);
    const std::size_t start = i;
    i = j;
    if (i < s.size() && s[i] == '*') ++i;
    int e = 0;
    if (i < s.size() && s[i] == 'p') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        if (k < s.size() && s[k] == '-') ++k;
        std::size_t d = k;
        while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
        if (d == k) throw std::invalid_argument("bad exponent in '" + text + "'");
        e = std::stoi(s.substr(i, d - i));
        i = d;
      }
    } else if (j == start) {
      throw std::invalid_argument("cannot parse '" + text + "'");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw std::invalid_argument("cannot parse '" + text + "'");
    out = out + TPPolynomial::monomial(0, e, Rational(sign * c));
  }
  return out;
}

GoodReductionCounts parse_grc(const std::string& text) {
  GoodReductionCounts out;
  for (const auto& [n, s] : content_lines(text)) {
    const auto sp = s.find_first_of(" \t");
    if (sp == std::string::npos) throw ParseError(n, "expected '<bitmask> <count>'");
    const auto mask = parse_int(s.substr(0, sp), n);
    if (mask < 0) throw ParseError(n, "bitmask must be non-negative");
    if (out.counts.count(static_cast<std::uint64_t>(mask))) throw ParseError(n, "bitmask repeated");
    try {
      out.counts[static_cast<std::uint64_t>(mask)] = parse_p_polynomial(s.substr(sp + 1));
    } catch (const std::exception& e) {
      throw ParseError(n, e.what());
    }
  }
  return out;
}

ConeIntegralData parse_cint(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.size() < 2 || lines.size() % 2 != 0)
    throw ParseError(0, "need f_0, g_0 and complete f_i, g_i pairs (an even number of polynomial lines)");
  const std::string& first = lines[0].text;
  const auto colon = first.find(':');
  if (colon == std::string::npos) throw ParseError(lines[0].number, "polynomial term lacks ':'");
  const auto semi = first.find(';');
  const std::string exps = first.substr(colon + 1, semi == std::string::npos ? std::string::npos : semi - colon - 1);
  const std::size_t vars = static_cast<std::size_t>(std::count(exps.begin(), exps.end(), ',')) + 1;
  std::vector<Polynomial> polys;
  for (const auto& [n, s] : lines) {
    try {
      polys.push_back(Polynomial::parse(s, vars));
    } catch (const std::exception& e) {
      throw ParseError(n, e.what());
    }
    if (polys.back().is_zero()) throw ParseError(n, "zero polynomial");
  }
  ConeIntegralData D;
  D.variables = vars;
  D.f0 = polys[0];
  D.g0 = polys[1];
  for (std::size_t i = 2; i < polys.size(); i += 2) D.conditions.emplace_back(polys[i], polys[i + 1]);
  return D;
}

std::string emit_cint(const ConeIntegralData& D) {
  std::ostringstream os;
  os << D.f0.to_string() << "\n" << D.g0.to_string() << "\n";
  for (const auto& [f, g] : D.conditions) os << f.to_string() << "\n" << g.to_string() << "\n";
  return os.str();
}

}  // namespace zg
