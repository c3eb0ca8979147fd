#include "plc/lusztig_cone.hpp"

#include <cstdlib>
#include <sstream>

namespace plc {

LusztigCone::LusztigCone(ReducedWord word) : word_(std::move(word)) {
  const std::size_t k = word_.size();
  for (std::size_t second = 0; second < k; ++second) {
    const int letter = word_[second];
    std::size_t first = second;
    while (first > 0 && word_[first - 1] != letter) --first;
    if (first == 0) continue;  // no earlier occurrence
    --first;
    LusztigInequality ineq{first, second, {}, zero_vector(k)};
    for (std::size_t p = first + 1; p < second; ++p) {
      if (std::abs(word_[p] - letter) == 1) {
        ineq.between.push_back(p);
        ineq.normal[p] += 1;
      }
    }
    ineq.normal[first] -= 1;
    ineq.normal[second] -= 1;
    ineqs_.push_back(std::move(ineq));
  }
}

HCone LusztigCone::defining_cone() const {
  HCone c{dim(), {}, false};
  for (const auto& q : ineqs_) c.ineqs.push_back(q.normal);
  return c;
}

HCone LusztigCone::cone() const { return intersect(defining_cone(), HCone::orthant(dim())); }

std::string coordinate_name(std::size_t index, std::size_t dim) {
  if (dim <= 26) return std::string(1, static_cast<char>('a' + index));
  return "x" + std::to_string(index + 1);
}

std::vector<std::string> LusztigCone::describe() const {
  std::vector<std::string> out;
  const std::size_t k = dim();
  for (const auto& q : ineqs_) {
    std::ostringstream os;
    if (q.between.empty()) os << '0';
    for (std::size_t i = 0; i < q.between.size(); ++i) {
      os << (i ? "+" : "") << coordinate_name(q.between[i], k);
    }
    os << " >= " << coordinate_name(q.first, k) << '+' << coordinate_name(q.second, k);
    out.push_back(os.str());
  }
  return out;
}

LusztigCone lusztig_cone(const ReducedWord& word) { return LusztigCone(word); }

VCone spanning_rays(const ReducedWord& word) { return extreme_rays(lusztig_cone(word).cone()); }

std::vector<std::size_t> transport_under_commutation(const ReducedWord& word, Move move) {
  if (move.kind != MoveKind::commutation) {
    throw DomainError("transport_under_commutation: braid moves do not act by a coordinate permutation");
  }
  if (!is_legal(word, move)) throw DomainError("transport_under_commutation: illegal commutation move");
  std::vector<std::size_t> perm(word.size());
  for (std::size_t t = 0; t < perm.size(); ++t) perm[t] = t;
  std::swap(perm[move.position], perm[move.position + 1]);
  return perm;
}

HCone permute_coordinates(const HCone& cone, const std::vector<std::size_t>& perm) {
  HCone out{cone.dim, {}, cone.irredundant};
  for (const auto& a : cone.ineqs) {
    Vector b = zero_vector(cone.dim);
    for (std::size_t t = 0; t < cone.dim; ++t) b[perm.at(t)] = a[t];
    out.ineqs.push_back(std::move(b));
  }
  return out;
}

}  // namespace plc
