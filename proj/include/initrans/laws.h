#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "initrans/signature.h"
#include "initrans/syntax.h"
#include "initrans/translate.h"
#include "initrans/types.h"

namespace initrans {

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t max_depth = 6;
  std::size_t cases = 1000;
  std::size_t retries = 20000;

  /// Throws std::invalid_argument when cases or max_depth is zero.
  void validate() const;
};

/// SplitMix64. Portable, so generated cases are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

/// Seed of the i-th case of a run.
std::uint64_t case_seed(std::uint64_t seed, std::size_t index);

/// Closed types of depth <= 2 (nullary constructors, and constructors applied
/// to nullary ones).
std::vector<ObjType> small_types(const TypeSignature& types);

/// A random well-typed term in `ctx` (of type `goal` when given), or nullopt
/// once `cfg.retries` dead ends were hit. Deterministic in all inputs.
std::optional<Term> gen_term(const TypedSignature& sig, const Context& ctx,
                             const std::optional<ObjType>& goal, const GenConfig& cfg);

/// Same, drawing from an existing generator state and with an explicit depth.
std::optional<Term> gen_term(const TypedSignature& sig, const Context& ctx,
                             const std::optional<ObjType>& goal, Rng& rng, std::size_t max_depth,
                             std::size_t retries);

struct Counterexample {
  std::size_t case_index = 0;
  std::string law;     // which clause failed
  std::string detail;  // what differed
  std::string inputs;  // the case, printed in canonical syntax
};

struct LawReport {
  std::string law;
  std::size_t cases = 0;    // attempted
  std::size_t skipped = 0;  // generation failures
  std::optional<Counterexample> counterexample;

  std::size_t run() const { return cases - skipped; }
  /// No counterexample and at most half of the cases skipped.
  bool passed() const { return !counterexample && skipped * 2 <= cases; }
};

std::string to_string(const LawReport& r);

using SubstituteFn = std::function<Term(const TypedSignature&, const Term&, std::span<const Term>)>;
using Translator = std::function<Term(const Context&, const Term&)>;

/// Unit laws, associativity and type preservation of substitution. Cases
/// first_case .. first_case + cfg.cases - 1 are run; a counterexample is
/// replayed by running its single case index. `subst` replaces the kernel's
/// substitution (for testing the checker itself).
LawReport check_monad_laws(const TypedSignature& sig, const GenConfig& cfg,
                           const SubstituteFn& subst = {}, std::size_t first_case = 0);

/// Commutation with substitution, type preservation and the variable clause.
LawReport check_translation_laws(const Translation& x, const GenConfig& cfg, std::size_t first_case = 0);

/// Agreement of translate_term with an independently written translator.
LawReport check_agreement(const Translation& x, const Translator& oracle, const GenConfig& cfg,
                          std::size_t first_case = 0);

/// Hand-written translators that do not go through the template engine.
namespace oracles {

/// PCF to ULC by direct recursion; Curry's Y for `rec` when `curry`, else Turing's Theta.
Term pcf_to_ulc(const Term& t, bool curry);

/// Goedel-Gentzen image of a CPC proposition.
ObjType godel_gentzen_type(const ObjType& t);

/// Goedel-Gentzen translation of a CPC proof term into IPC.
Term godel_gentzen_proof(const Term& t);

}  // namespace oracles

}  // namespace initrans
