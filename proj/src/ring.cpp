#include "frobcount/ring.hpp"

#include <cctype>
#include <set>

#include "frobcount/errors.hpp"

namespace frobcount {

bool is_valid_variable_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Ring::Ring(PrimeField field, std::vector<std::string> vars, MonomialOrder order) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_valid_variable_name(v)) throw DomainError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
  if (!order.permutation().empty()) {
    std::set<std::size_t> idx(order.permutation().begin(), order.permutation().end());
    if (idx.size() != vars.size() || (!idx.empty() && *idx.rbegin() != vars.size() - 1))
      throw DomainError("order permutation is not a permutation of the variables");
  }
  data_ = std::make_shared<const Data>(Data{field, std::move(vars), std::move(order)});
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < data_->vars.size(); ++i)
    if (data_->vars[i] == name) return i;
  return std::nullopt;
}

Ring Ring::with_order(MonomialOrder order) const {
  return Ring(data_->field, data_->vars, std::move(order));
}

Ring Ring::restricted_to(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> names;
  for (auto i : keep) names.push_back(data_->vars.at(i));
  MonomialOrder order = data_->order.kind() == MonomialOrder::Kind::Lex
                            ? MonomialOrder::lex()
                            : MonomialOrder::grevlex();
  return Ring(data_->field, std::move(names), std::move(order));
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->field == b.data_->field && a.data_->vars == b.data_->vars &&
         a.data_->order == b.data_->order;
}

}  // namespace frobcount
