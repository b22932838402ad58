#include "hypercat/recurrence.hpp"

#include <algorithm>

#include "hypercat/closed_form.hpp"

namespace hypercat {

namespace {

// Every n with [] <= n <= m componentwise, in TypeVec order.
std::vector<TypeVec> subTypes(const TypeVec& m) {
  std::vector<TypeVec> out{TypeVec{}};
  for (const auto& e : m.entries()) {
    std::vector<TypeVec> next;
    next.reserve(out.size() * (e.mult + 1));
    for (const auto& base : out) {
      for (unsigned c = 0; c <= e.mult; ++c) next.push_back(base + TypeVec::basis(e.gon, c));
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned maxCopies(const TypeVec& part, const TypeVec& remaining, unsigned partsLeft) {
  unsigned best = partsLeft;
  for (const auto& e : part.entries()) best = std::min(best, remaining[e.gon] / e.mult);
  return best;
}

void collectPartitions(const std::vector<TypeVec>& candidates, std::size_t idx, const TypeVec& remaining,
                       unsigned partsLeft, VectorPartition& current, std::vector<VectorPartition>& out) {
  if (partsLeft == 0) {
    if (remaining.empty()) out.push_back(current);
    return;
  }
  if (idx == candidates.size()) return;
  const TypeVec& part = candidates[idx];
  for (unsigned c = maxCopies(part, remaining, partsLeft); c >= 1; --c) {
    current.parts.emplace_back(part, c);
    collectPartitions(candidates, idx + 1, remaining.minus(part.scaled(c)), partsLeft - c, current, out);
    current.parts.pop_back();
  }
  collectPartitions(candidates, idx + 1, remaining, partsLeft, current, out);
}

}  // namespace

unsigned VectorPartition::partCount() const {
  unsigned n = 0;
  for (const auto& [part, k] : parts) n += k;
  return n;
}

TypeVec VectorPartition::total() const {
  TypeVec sum;
  for (const auto& [part, k] : parts) sum += part.scaled(k);
  return sum;
}

std::vector<VectorPartition> vectorPartitions(const TypeVec& m, unsigned j) {
  if (j == 0) throw DomainError("vectorPartitions requires at least one part");
  std::vector<VectorPartition> out;
  VectorPartition current;
  collectPartitions(subTypes(m), 0, m, j, current, out);
  return out;
}

BigInt multinomialOf(const VectorPartition& p) {
  std::vector<unsigned> ks;
  ks.reserve(p.parts.size());
  for (const auto& [part, k] : p.parts) ks.push_back(k);
  return multinomial(ks);
}

BigInt powerCoefficient(const TypeVec& m, unsigned r, const std::function<BigInt(const TypeVec&)>& coeff) {
  BigInt total = 0;
  for (const auto& p : vectorPartitions(m, r)) {
    BigInt term = multinomialOf(p);
    for (const auto& [part, k] : p.parts) term *= boost::multiprecision::pow(coeff(part), k);
    total += term;
  }
  return total;
}

BigInt HyperCatalanRecurrence::operator()(const TypeVec& m) {
  if (m.empty()) return 1;
  if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  // C_m = sum_j [t^(m - j)] S^j; components with m_j = 0 contribute nothing.
  BigInt total = 0;
  for (const auto& [j, rest] : lessers(m)) {
    total += powerCoefficient(rest, j, [this](const TypeVec& n) { return (*this)(n); });
  }
  memo_.emplace(m, total);
  return total;
}

BigInt hyperCatalanRecurrence(const TypeVec& m) {
  HyperCatalanRecurrence session;
  return session(m);
}

bool catalanConvolutionCheck(unsigned maxM) {
  for (unsigned m = 0; m <= maxM; ++m) {
    BigInt sum = 0;
    for (unsigned n = 0; n <= m; ++n) sum += fussNumber(2, n) * fussNumber(2, m - n);
    if (sum != fussNumber(2, m + 1)) return false;
  }
  return true;
}

XStrategy XStrategy::constantIndex(unsigned k) {
  if (k < 2) throw DomainError("constant index strategy needs k >= 2");
  return XStrategy(Kind::ConstantIndex, k);
}

XStrategy XStrategy::parse(const std::string& text) {
  if (text == "max") return largestComponent();
  try {
    std::size_t used = 0;
    unsigned long k = std::stoul(text, &used);
    if (used == text.size()) return constantIndex(static_cast<unsigned>(k));
  } catch (const std::logic_error&) {
  }
  throw ParseError("strategy must be 'max' or a gon index >= 2, got '" + text + "'");
}

unsigned XStrategy::choose(const TypeVec& m) const {
  if (kind_ == Kind::ConstantIndex) return index_;
  unsigned best = 2;
  unsigned bestMult = 0;
  for (const auto& e : m.entries()) {
    if (e.mult > bestMult) {
      best = e.gon;
      bestMult = e.mult;
    }
  }
  return best;
}

std::string XStrategy::name() const {
  return kind_ == Kind::ConstantIndex ? std::to_string(index_) : std::string("max");
}

BigInt evaluate(const SignedCombination& combo) {
  BigInt total = 0;
  for (const auto& [m, c] : combo) total += c * hyperCatalan(m);
  return total;
}

GeodeRecurrence::GeodeRecurrence(XStrategy strategy, std::size_t budget, std::optional<unsigned> maxGon)
    : strategy_(strategy), budget_(budget) {
  if (maxGon && strategy.kind() == XStrategy::Kind::ConstantIndex && strategy.index() > *maxGon) {
    throw DomainError("constant index " + std::to_string(strategy.index()) + " exceeds maxGon " +
                      std::to_string(*maxGon));
  }
}

unsigned GeodeRecurrence::direction(const TypeVec& m) const { return strategy_.choose(m); }

void GeodeRecurrence::charge() {
  if (++expansions_ > budget_) {
    throw NonTermination("geode recurrence exceeded its budget of " + std::to_string(budget_) + " expansions");
  }
}

BigInt GeodeRecurrence::value(const TypeVec& m) {
  if (m.empty()) return 1;
  if (auto it = values_.find(m); it != values_.end()) return it->second;
  charge();
  BigInt v;
  if (distinctShapes(m) == 1) {
    const auto& e = m.entries().front();
    v = fussNumber(e.gon, e.mult + 1);
  } else {
    const TypeVec top = addBasis(m, direction(m));
    v = hyperCatalan(top);
    for (const auto& [j, l] : lessers(top)) {
      if (l != m) v -= value(l);
    }
  }
  values_.emplace(m, v);
  return v;
}

SignedCombination GeodeRecurrence::expand(const TypeVec& m) {
  if (m.empty()) return {{TypeVec{}, 1}};
  if (auto it = combos_.find(m); it != combos_.end()) return it->second;
  charge();
  SignedCombination combo;
  if (distinctShapes(m) == 1) {
    const auto& e = m.entries().front();
    combo.emplace(TypeVec::basis(e.gon, e.mult + 1), 1);
  } else {
    const TypeVec top = addBasis(m, direction(m));
    combo.emplace(top, 1);
    for (const auto& [j, l] : lessers(top)) {
      if (l == m) continue;
      for (const auto& [n, c] : expand(l)) combo[n] -= c;
    }
    std::erase_if(combo, [](const auto& kv) { return kv.second == 0; });
  }
  combos_.emplace(m, combo);
  return combo;
}

BigInt geodeRecurrenceValue(const TypeVec& m, XStrategy x) {
  GeodeRecurrence session(x);
  return session.value(m);
}

SignedCombination geodeExpandToHyperCatalans(const TypeVec& m, XStrategy x) {
  GeodeRecurrence session(x);
  return session.expand(m);
}

SignedCombination geodeExpandLeading(const TypeVec& m, unsigned lead) {
  if (lead < 2) throw DomainError("gon index must be >= 2");
  if (distinctShapes(m) <= 1) return geodeExpandToHyperCatalans(m, XStrategy::largestComponent());
  GeodeRecurrence rest(XStrategy::largestComponent());
  const TypeVec top = addBasis(m, lead);
  SignedCombination combo{{top, 1}};
  for (const auto& [j, l] : lessers(top)) {
    if (l == m) continue;
    for (const auto& [n, c] : rest.expand(l)) combo[n] -= c;
  }
  std::erase_if(combo, [](const auto& kv) { return kv.second == 0; });
  return combo;
}

bool lesserSumCheck(const TypeVec& m, const std::function<BigInt(const TypeVec&)>& geode) {
  if (m.empty()) throw DomainError("lesser sum is defined for nonempty types only");
  BigInt sum = 0;
  for (const auto& [j, l] : lessers(m)) sum += geode(l);
  return sum == hyperCatalan(m);
}

BigInt twoShapeAlternatingSum(unsigned j, unsigned k, unsigned m, unsigned n) {
  if (j == k) throw DomainError("twoShapeAlternatingSum needs two distinct shapes");
  if (j < 2 || k < 2) throw DomainError("gon indices must be >= 2");
  if (m < 1 || n < 1) throw DomainError("twoShapeAlternatingSum needs m, n >= 1");
  BigInt total = 0;
  for (unsigned i = 0; i <= n; ++i) {
    BigInt c = hyperCatalan(TypeVec::basis(j, m + 1 + i) + TypeVec::basis(k, n - i));
    if (i % 2) total -= c;
    else total += c;
  }
  return total;
}

}  // namespace hypercat
