#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "msetord/engine.hpp"
#include "msetord/mset.hpp"

namespace msetord {

enum class Encoding {
  Algorithm,        // occurrence-vector propagator
  AlgorithmSorted,  // sorted-vector propagator
  Gcc,              // gcc on each vector + lex on the occurrence vectors
  Sort,             // sorted channel on each vector + lex on the sorts
  Arith,            // weighted sums
};

std::optional<Encoding> parse_encoding(const std::string& s);
std::string to_string(Encoding e);

// Multiset orderings among the vectors of one family. The decompositions
// create one auxiliary vector per member on first use and share it between all
// the orderings that member takes part in.
class MsetFamily {
 public:
  MsetFamily(Model& model, std::vector<std::vector<VarId>> vectors, Encoding enc,
             bool entailment = false);

  // vectors[i] <=m vectors[j] (or <m).
  void order(size_t i, size_t j, MsetOrder ord);
  // r1 = r2 -> vectors[i] <=m vectors[j] (or <m).
  void order_if_equal(VarId r1, VarId r2, size_t i, size_t j, MsetOrder ord);

  // Auxiliary vector of member i (empty for the direct encodings).
  const std::vector<VarId>& auxiliary(size_t i) const { return aux_[i]; }

 private:
  std::unique_ptr<Propagator> make(size_t i, size_t j, MsetOrder ord);
  const std::vector<VarId>& channel(size_t i);

  Model& model_;
  std::vector<std::vector<VarId>> vectors_;
  Encoding enc_;
  bool entailment_;
  std::vector<int> values_desc_;
  std::vector<std::vector<VarId>> aux_;
};

void post_mset(Model& model, const std::vector<VarId>& x, const std::vector<VarId>& y,
               MsetOrder ord, Encoding enc, bool entailment = false);

}  // namespace msetord
