#include "qmod/chardata.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

#include "qmod/weyl.hpp"

namespace qmod {
namespace {

Rational depth(const RootSystemData& rs, const Weight& top, const Weight& mu) {
  Rational h = 0;
  for (const auto& c : root_coordinates(rs, top - mu)) h += c;
  return h;
}

CharacterTable compute_table(const RootSystemData& rs, const Weight& lambda) {
  CharacterTable table;
  table.highest = lambda;
  const auto dominant = dominant_weights_below(rs, lambda);
  std::map<Weight, long> dom_mult;
  const Weight lr = lambda + rs.rho;
  const Rational top_norm = form(rs, lr, lr);
  auto lookup = [&](const Weight& nu) -> long {
    auto it = dom_mult.find(make_dominant(rs, nu).dominant);
    return it == dom_mult.end() ? 0 : it->second;
  };
  for (const auto& mu : dominant) {
    if (mu == lambda) {
      dom_mult[mu] = 1;
      continue;
    }
    Rational acc = 0;
    for (const auto& alpha : rs.positive_roots) {
      Weight nu = mu + alpha;
      while (true) {
        long m = lookup(nu);
        if (m == 0) break;
        acc += m * form(rs, nu, alpha);
        nu += alpha;
      }
    }
    const Weight mr = mu + rs.rho;
    Rational value = 2 * acc / (top_norm - form(rs, mr, mr));
    if (!is_integer(value) || value < 0) {
      throw InternalError("Freudenthal recursion gave non-integral multiplicity at " + mu.to_string());
    }
    if (value > 0) dom_mult[mu] = value.get_num().get_si();
  }
  for (const auto& [mu, m] : dom_mult) {
    for (const auto& w : weyl_group(rs)) table.mults[w.apply(mu)] = m;
  }
  const BigInt expected = weyl_dimension(rs, lambda);
  if (BigInt(table.dimension()) != expected) {
    throw InternalError("character of " + lambda.to_string() + " has total multiplicity " +
                        std::to_string(table.dimension()) + ", Weyl dimension is " + expected.get_str());
  }
  return table;
}

}  // namespace

long CharacterTable::dimension() const {
  long total = 0;
  for (const auto& [w, m] : mults) total += m;
  return total;
}

std::vector<Weight> dominant_weights_below(const RootSystemData& rs, const Weight& lambda) {
  if (!is_dominant(lambda)) throw PreconditionError("weight " + lambda.to_string() + " is not dominant");
  // Dominant weights below λ are connected to λ by chains of positive roots through dominant weights.
  std::set<Weight> seen{lambda};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier) {
      for (const auto& alpha : rs.positive_roots) {
        Weight nu = mu - alpha;
        if (is_dominant(nu) && seen.insert(nu).second) next.push_back(nu);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<Rational, Weight>> keyed;
  for (const auto& mu : seen) keyed.emplace_back(depth(rs, lambda, mu), mu);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  std::vector<Weight> out;
  for (auto& [d, mu] : keyed) out.push_back(std::move(mu));
  return out;
}

BigInt weyl_dimension(const RootSystemData& rs, const Weight& lambda) {
  Rational acc = 1;
  const Weight lr = lambda + rs.rho;
  for (const auto& alpha : rs.positive_roots) acc *= form(rs, lr, alpha) / form(rs, rs.rho, alpha);
  if (!is_integer(acc)) throw InternalError("non-integral Weyl dimension");
  return acc.get_num();
}

const CharacterTable& weight_multiplicities(const RootSystemData& rs, const Weight& lambda) {
  if (!is_dominant(lambda)) throw PreconditionError("weight " + lambda.to_string() + " is not dominant");
  static std::mutex mu;
  static std::map<std::pair<std::string, Weight>, std::unique_ptr<CharacterTable>> cache;
  const auto key = std::make_pair(rs.name(), lambda);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<CharacterTable>(compute_table(rs, lambda));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(table));
  return *it->second;
}

CycNum evaluate_at_epsilon(const RootSystemData& rs, int kappa, const std::map<Weight, long>& terms,
                           const Weight& point) {
  std::vector<EpsilonTerm> eps;
  eps.reserve(terms.size());
  for (const auto& [mu, c] : terms) eps.push_back({form(rs, mu, point, FormVariant::primed), c});
  return epsilon_sum(eps, static_cast<long>(rs.lacing) * kappa);
}

CycNum char_value(const RootSystemData& rs, const Weight& lambda, const Weight& point, int kappa) {
  const long mk = static_cast<long>(rs.lacing) * kappa;
  std::vector<EpsilonTerm> den_terms, num_terms;
  const Weight lr = lambda + rs.rho;
  for (const auto& w : weyl_group(rs)) {
    den_terms.push_back({form(rs, w.apply(rs.rho), point, FormVariant::primed), w.sign()});
    num_terms.push_back({form(rs, w.apply(lr), point, FormVariant::primed), w.sign()});
  }
  CycNum den = epsilon_sum(den_terms, mk);
  if (!den.is_zero()) return epsilon_sum(num_terms, mk) / den;
  // Vanishing denominator: use the weight sum of the dominant representative.
  DominantFold f = make_dominant(rs, lr);
  for (int c : f.dominant.coords) {
    if (c == 0) return CycNum{};
  }
  const auto& table = weight_multiplicities(rs, f.dominant - rs.rho);
  CycNum v = evaluate_at_epsilon(rs, kappa, table.mults, point);
  return f.sign == 1 ? v : -v;
}

CycNum quantum_dim(const RootSystemData& rs, const Weight& lambda, int kappa) {
  if (!is_dominant(lambda)) throw PreconditionError("quantum_dim needs a dominant weight");
  return char_value(rs, lambda, 2 * rs.rho, kappa);
}

CycNum weyl_denominator_value(const RootSystemData& rs, const Weight& point, int kappa) {
  const long mk = static_cast<long>(rs.lacing) * kappa;
  CycNum acc(1);
  for (const auto& alpha : rs.positive_roots) {
    Rational half = form(rs, alpha, point, FormVariant::primed) / 2;
    acc *= epsilon_sum({{half, 1}, {-half, -1}}, mk);
  }
  return acc;
}

bool vanishing_criterion(const RootSystemData& rs, const Weight& lambda, int kappa) {
  if (!is_dominant(lambda)) throw PreconditionError("vanishing_criterion needs a dominant weight");
  const Weight lr = lambda + rs.rho;
  for (const auto& alpha : rs.positive_roots) {
    Rational x = form(rs, lr, alpha) / kappa;
    if (is_integer(x)) return true;
  }
  return false;
}

}  // namespace qmod
