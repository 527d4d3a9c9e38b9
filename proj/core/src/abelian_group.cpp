#include "wfg/abelian_group.hpp"

#include "wfg/error.hpp"
#include "wfg/smith.hpp"

namespace wfg {

std::string AbelianGroup::to_string() const {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " ⊕ ";
    out += part;
  };
  if (free_rank == 1) append("Z");
  if (free_rank > 1) append("Z^" + std::to_string(free_rank));
  for (const auto& d : torsion) append("Z/" + d.get_str());
  return out.empty() ? "0" : out;
}

AbelianGroup abelian_group_from_matrix(const IntegerMatrix& relations, std::size_t n_generators) {
  if (relations.cols() != n_generators) {
    throw Error(ErrorKind::ShapeMismatch, "relation matrix has " + std::to_string(relations.cols()) +
                                              " columns for " + std::to_string(n_generators) + " generators");
  }
  AbelianGroup g;
  if (relations.rows() == 0) {
    g.free_rank = n_generators;
    return g;
  }
  const auto snf = smith_normal_form(relations);
  std::size_t nonzero = 0;
  for (const auto& d : snf.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) g.torsion.push_back(d);
  }
  g.free_rank = n_generators - nonzero;
  return g;
}

AbelianGroup abelian_group_from_cyclic_orders(const std::vector<mpz_class>& orders) {
  IntegerMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
  return abelian_group_from_matrix(diag, orders.size());
}

}  // namespace wfg
