#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbita {

// Ordered list of distinct variable names. Copies share storage; equality is
// by name sequence. The position in the list is the variable index used by
// monomials, and earlier indices are the senior variables for lex/deglex.
class VarSet {
 public:
  VarSet() : d_(empty_data()) {}

  explicit VarSet(std::vector<std::string> names) {
    auto d = std::make_shared<Data>();
    d->names = std::move(names);
    for (int i = 0; i < (int)d->names.size(); ++i) {
      const std::string& nm = d->names[i];
      if (nm.empty()) throw std::invalid_argument("VarSet: empty variable name");
      if (!d->index.emplace(nm, i).second)
        throw std::invalid_argument("VarSet: duplicate variable '" + nm + "'");
    }
    d_ = std::move(d);
  }

  // y1..yn
  static VarSet y_ring(int n) { return VarSet(numbered("y", 1, n)); }

  // y1..yn, t1..tk
  static VarSet y_t_ring(int n, int k) {
    auto v = numbered("y", 1, n);
    auto t = numbered("t", 1, k);
    v.insert(v.end(), t.begin(), t.end());
    return VarSet(std::move(v));
  }

  // y1..yn, z
  static VarSet y_z_ring(int n) {
    auto v = numbered("y", 1, n);
    v.push_back("z");
    return VarSet(std::move(v));
  }

  int size() const { return (int)d_->names.size(); }
  const std::string& name(int i) const { return d_->names.at(i); }
  const std::vector<std::string>& names() const { return d_->names; }

  // -1 when the name is absent.
  int index_of(const std::string& nm) const {
    auto it = d_->index.find(nm);
    return it == d_->index.end() ? -1 : it->second;
  }

  int index_of_checked(const std::string& nm) const {
    int i = index_of(nm);
    if (i < 0) throw std::invalid_argument("VarSet: unknown variable '" + nm + "'");
    return i;
  }

  bool contains(const std::string& nm) const { return index_of(nm) >= 0; }

  bool operator==(const VarSet& o) const {
    return d_ == o.d_ || d_->names == o.d_->names;
  }
  bool operator!=(const VarSet& o) const { return !(*this == o); }

 private:
  struct Data {
    std::vector<std::string> names;
    std::map<std::string, int> index;
  };

  static std::shared_ptr<const Data> empty_data() {
    static const auto d = std::make_shared<Data>();
    return d;
  }

  static std::vector<std::string> numbered(const std::string& stem, int lo, int hi) {
    std::vector<std::string> out;
    for (int i = lo; i <= hi; ++i) out.push_back(stem + std::to_string(i));
    return out;
  }

  std::shared_ptr<const Data> d_;
};

}  // namespace orbita
