#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobcount/field.hpp"
#include "frobcount/monomial.hpp"

namespace frobcount {

// F_p[x_1..x_n] together with its variable names and term order. Cheap to
// copy: the descriptor is shared and immutable.
class Ring {
 public:
  // Throws DomainError on invalid or duplicate variable names.
  Ring(PrimeField field, std::vector<std::string> vars,
       MonomialOrder order = MonomialOrder::grevlex());

  const PrimeField& field() const { return data_->field; }
  std::uint32_t characteristic() const { return data_->field.characteristic(); }
  std::size_t nvars() const { return data_->vars.size(); }
  const std::vector<std::string>& var_names() const { return data_->vars; }
  const std::string& var_name(std::size_t i) const { return data_->vars.at(i); }
  const MonomialOrder& order() const { return data_->order; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  Ring with_order(MonomialOrder order) const;
  // Same field and order kind on a subset of the variables (kept in
  // declaration order). Block orders degrade to grevlex.
  Ring restricted_to(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  struct Data {
    PrimeField field;
    std::vector<std::string> vars;
    MonomialOrder order;
  };
  std::shared_ptr<const Data> data_;
};

bool is_valid_variable_name(const std::string& name);

}  // namespace frobcount
