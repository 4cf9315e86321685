#include "msetord/encodings.hpp"

#include <algorithm>
#include <functional>

#include "msetord/arith.hpp"
#include "msetord/basic.hpp"
#include "msetord/gcc.hpp"
#include "msetord/lex.hpp"
#include "msetord/sorted.hpp"

namespace msetord {

std::optional<Encoding> parse_encoding(const std::string& s) {
  if (s == "algorithm") return Encoding::Algorithm;
  if (s == "algorithm-sorted") return Encoding::AlgorithmSorted;
  if (s == "gcc") return Encoding::Gcc;
  if (s == "sort") return Encoding::Sort;
  if (s == "arith") return Encoding::Arith;
  return std::nullopt;
}

std::string to_string(Encoding e) {
  switch (e) {
    case Encoding::Algorithm: return "algorithm";
    case Encoding::AlgorithmSorted: return "algorithm-sorted";
    case Encoding::Gcc: return "gcc";
    case Encoding::Sort: return "sort";
    case Encoding::Arith: return "arith";
  }
  return "?";
}

MsetFamily::MsetFamily(Model& model, std::vector<std::vector<VarId>> vectors, Encoding enc,
                       bool entailment)
    : model_(model), vectors_(std::move(vectors)), enc_(enc), entailment_(entailment),
      aux_(vectors_.size()) {
  std::vector<VarId> all;
  for (const auto& v : vectors_) all.insert(all.end(), v.begin(), v.end());
  values_desc_ = value_map_of(all, model_.store()).values();
  std::reverse(values_desc_.begin(), values_desc_.end());
}

const std::vector<VarId>& MsetFamily::channel(size_t i) {
  if (!aux_[i].empty()) return aux_[i];
  const auto& x = vectors_[i];
  const int n = static_cast<int>(x.size());
  if (enc_ == Encoding::Gcc) {
    for (size_t k = 0; k < values_desc_.size(); ++k) aux_[i].push_back(model_.new_var(0, n));
    model_.emplace<GccPropagator>(GccSpec{x, values_desc_, aux_[i]});
  } else {
    std::vector<int> vals = value_map_of(x, model_.store()).values();
    for (int k = 0; k < n; ++k) aux_[i].push_back(model_.new_var(vals));
    model_.emplace<SortedPropagator>(x, aux_[i]);
  }
  return aux_[i];
}

std::unique_ptr<Propagator> MsetFamily::make(size_t i, size_t j, MsetOrder ord) {
  const auto& x = vectors_[i];
  const auto& y = vectors_[j];
  const bool strict = ord == MsetOrder::Less;
  switch (enc_) {
    case Encoding::Algorithm:
      return std::make_unique<MsetOccPropagator>(model_.store(), x, y, MsetOptions{ord, entailment_});
    case Encoding::AlgorithmSorted:
      return std::make_unique<MsetSortedPropagator>(model_.store(), x, y,
                                                    MsetOptions{ord, entailment_});
    case Encoding::Arith:
      return std::make_unique<ArithMsetPropagator>(model_.store(), x, y, strict);
    case Encoding::Gcc:
    case Encoding::Sort: {
      std::vector<VarId> a = channel(i);
      std::vector<VarId> b = channel(j);
      return std::make_unique<LexPropagator>(a, b, strict);
    }
  }
  return nullptr;
}

void MsetFamily::order(size_t i, size_t j, MsetOrder ord) { model_.post(make(i, j, ord)); }

void MsetFamily::order_if_equal(VarId r1, VarId r2, size_t i, size_t j, MsetOrder ord) {
  model_.post(std::make_unique<ConditionalPropagator>(r1, r2, make(i, j, ord)));
}

void post_mset(Model& model, const std::vector<VarId>& x, const std::vector<VarId>& y,
               MsetOrder ord, Encoding enc, bool entailment) {
  MsetFamily fam(model, {x, y}, enc, entailment);
  fam.order(0, 1, ord);
}

}  // namespace msetord
