#include "hypercat/series.hpp"

#include <algorithm>
#include <functional>

#include "hypercat/closed_form.hpp"

namespace hypercat {

namespace {

void requireSame(const PolySeries& a, const PolySeries& b, const char* op) {
  if (a.truncation() != b.truncation()) {
    throw TruncationMismatch(std::string(op) + ": operands have different truncations");
  }
}

using TermRef = const std::pair<const TypeVec, BigInt>*;

// Terms bucketed by face count, index d holding the level-d terms.
std::vector<std::vector<TermRef>> byLevel(const PolySeries& p) {
  std::vector<std::vector<TermRef>> levels(p.truncation().maxFaces + 1);
  for (const auto& term : p.terms()) levels[faces(term.first)].push_back(&term);
  return levels;
}

}  // namespace

std::vector<TypeVec> insideTypes(const Truncation& trunc) {
  std::vector<TypeVec> out;
  std::vector<unsigned> dense(trunc.maxGon >= 2 ? trunc.maxGon - 1 : 0, 0);
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t idx, unsigned budget) {
    if (idx == dense.size()) {
      out.push_back(TypeVec::fromDense(dense));
      return;
    }
    for (unsigned c = 0; c <= budget; ++c) {
      dense[idx] = c;
      fill(idx + 1, budget - c);
    }
    dense[idx] = 0;
  };
  fill(0, trunc.maxFaces);
  std::sort(out.begin(), out.end());
  return out;
}

PolySeries PolySeries::constant(Truncation trunc, const BigInt& c) {
  PolySeries p(trunc);
  p.addTerm(TypeVec{}, c);
  return p;
}

PolySeries PolySeries::monomial(Truncation trunc, const TypeVec& m, const BigInt& c) {
  PolySeries p(trunc);
  p.addTerm(m, c);
  return p;
}

PolySeries PolySeries::faceOne(Truncation trunc) {
  PolySeries p(trunc);
  for (unsigned k = 2; k <= trunc.maxGon; ++k) p.addTerm(TypeVec::basis(k), 1);
  return p;
}

BigInt PolySeries::coeff(const TypeVec& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void PolySeries::addTerm(const TypeVec& m, const BigInt& c) {
  if (c == 0 || !trunc_.inside(m)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolySeries PolySeries::level(unsigned d) const {
  PolySeries out(trunc_);
  for (const auto& [m, c] : terms_) {
    if (faces(m) == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

PolySeries PolySeries::retruncated(Truncation trunc) const {
  PolySeries out(trunc);
  for (const auto& [m, c] : terms_) out.addTerm(m, c);
  return out;
}

PolySeries& PolySeries::operator+=(const PolySeries& other) {
  requireSame(*this, other, "add");
  for (const auto& [m, c] : other.terms_) addTerm(m, c);
  return *this;
}

PolySeries& PolySeries::operator-=(const PolySeries& other) {
  requireSame(*this, other, "sub");
  for (const auto& [m, c] : other.terms_) addTerm(m, -c);
  return *this;
}

PolySeries PolySeries::operator-() const {
  PolySeries out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

PolySeries add(const PolySeries& a, const PolySeries& b) {
  PolySeries out(a);
  out += b;
  return out;
}

PolySeries sub(const PolySeries& a, const PolySeries& b) {
  PolySeries out(a);
  out -= b;
  return out;
}

PolySeries scale(const PolySeries& a, const BigInt& c) {
  PolySeries out(a.truncation());
  for (const auto& [m, v] : a.terms()) out.addTerm(m, v * c);
  return out;
}

PolySeries mul(const PolySeries& a, const PolySeries& b) {
  requireSame(a, b, "mul");
  const unsigned maxFaces = a.truncation().maxFaces;
  auto la = byLevel(a);
  auto lb = byLevel(b);
  PolySeries out(a.truncation());
  for (unsigned i = 0; i <= maxFaces; ++i) {
    for (unsigned j = 0; i + j <= maxFaces; ++j) {
      for (TermRef x : la[i]) {
        for (TermRef y : lb[j]) out.addTerm(x->first + y->first, x->second * y->second);
      }
    }
  }
  return out;
}

PolySeries pow(const PolySeries& a, unsigned r) {
  PolySeries result = PolySeries::constant(a.truncation(), 1);
  PolySeries base = a;
  while (r) {
    if (r & 1u) result = mul(result, base);
    r >>= 1;
    if (r) base = mul(base, base);
  }
  return result;
}

PolySeries shift(const PolySeries& a, const TypeVec& m) {
  PolySeries out(a.truncation());
  for (const auto& [n, c] : a.terms()) out.addTerm(n + m, c);
  return out;
}

PolySeries inverse(const PolySeries& a) {
  if (a.coeff(TypeVec{}) != 1) throw DomainError("inverse requires constant term 1");
  const Truncation trunc = a.truncation();
  auto la = byLevel(a);
  // b_d = -sum_{i=1..d} a_i b_{d-i}, one face level at a time
  std::vector<std::map<TypeVec, BigInt>> lb(trunc.maxFaces + 1);
  lb[0].emplace(TypeVec{}, 1);
  for (unsigned d = 1; d <= trunc.maxFaces; ++d) {
    auto& level = lb[d];
    for (unsigned i = 1; i <= d; ++i) {
      for (TermRef x : la[i]) {
        for (const auto& [n, c] : lb[d - i]) level[x->first + n] -= x->second * c;
      }
    }
    std::erase_if(level, [](const auto& kv) { return kv.second == 0; });
  }
  PolySeries out(trunc);
  for (const auto& level : lb) {
    for (const auto& [m, c] : level) out.addTerm(m, c);
  }
  return out;
}

PolySeries divideByS1(const PolySeries& p) {
  const Truncation trunc = p.truncation();
  if (trunc.maxFaces == 0) throw DomainError("divideByS1 requires maxFaces >= 1");
  if (p.coeff(TypeVec{}) != 0) throw DomainError("divideByS1 requires a zero constant term");
  PolySeries quotient(Truncation{trunc.maxFaces - 1, trunc.maxGon});

  std::vector<std::map<TypeVec, BigInt>> levels(trunc.maxFaces + 1);
  for (const auto& [m, c] : p.terms()) levels[faces(m)].emplace(m, c);

  for (unsigned d = 1; d <= trunc.maxFaces; ++d) {
    auto& rem = levels[d];
    while (!rem.empty()) {
      // Within one level the map's last key is the lex-greatest monomial.
      auto lead = std::prev(rem.end());
      if (lead->first[2] == 0) {
        throw NotDivisible("level " + std::to_string(d) + " leaves remainder term " + lead->first.str());
      }
      const TypeVec q = lead->first.withAdjusted(2, -1);
      const BigInt c = lead->second;
      quotient.addTerm(q, c);
      rem.erase(lead);
      for (unsigned k = 3; k <= trunc.maxGon; ++k) {
        auto [it, inserted] = rem.try_emplace(q.withAdjusted(k, +1), 0);
        it->second -= c;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return quotient;
}

PolySeries buildS(Truncation trunc, BuildMethod method) {
  if (method == BuildMethod::ClosedForm) {
    PolySeries s(trunc);
    for (const auto& m : insideTypes(trunc)) s.addTerm(m, hyperCatalan(m));
    return s;
  }
  // S <- 1 + sum_k t_k S^k; each pass fixes at least one more face level.
  const PolySeries one = PolySeries::constant(trunc, 1);
  PolySeries s = one;
  for (unsigned iter = 0; iter <= trunc.maxFaces + 1; ++iter) {
    PolySeries next = one;
    PolySeries power = s;
    for (unsigned k = 2; k <= trunc.maxGon; ++k) {
      power = mul(power, s);
      next += shift(power, TypeVec::basis(k));
    }
    if (next == s) break;
    s = std::move(next);
  }
  return s;
}

PolySeries residualGeometric(const PolySeries& s) {
  const Truncation trunc = s.truncation();
  PolySeries r = sub(PolySeries::constant(trunc, 1), s);
  PolySeries power = s;
  for (unsigned k = 2; k <= trunc.maxGon; ++k) {
    power = mul(power, s);
    r += shift(power, TypeVec::basis(k));
  }
  return r;
}

BivariatePoly substituteMonomial(const PolySeries& p, const SubstitutionRule& rule) {
  for (unsigned k = 2; k <= p.truncation().maxGon; ++k) {
    if (!rule.contains(k)) throw DomainError("substitution rule has no image for t" + std::to_string(k));
  }
  BivariatePoly out;
  for (const auto& [m, c] : p.terms()) {
    BigInt value = c;
    unsigned v = 0;
    unsigned f = 0;
    for (const auto& e : m.entries()) {
      const MonomialImage& img = rule.at(e.gon);
      value *= boost::multiprecision::pow(img.coeff, e.mult);
      v += img.vExp * e.mult;
      f += img.fExp * e.mult;
    }
    if (value == 0) continue;
    auto& slot = out[{v, f}];
    slot += value;
    if (slot == 0) out.erase({v, f});
  }
  return out;
}

std::map<unsigned, PolySeries> layer(const PolySeries& p, Layering kind) {
  std::map<unsigned, PolySeries> out;
  for (const auto& [m, c] : p.terms()) {
    unsigned w = kind == Layering::Face ? faces(m) : vertices(m) - 2;
    out.try_emplace(w, p.truncation()).first->second.addTerm(m, c);
  }
  return out;
}

}  // namespace hypercat
