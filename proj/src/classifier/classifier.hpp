#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "covariant/covariant.hpp"
#include "rep/rep.hpp"

namespace cs {

// Combination of basis covariants with degree/order bookkeeping.
struct CovExpr {
  Poly poly;
  int degree = 0;
  int order = 0;
};

struct Generator {
  std::string name;
  int degree;
  int order;
};

struct IdealSpec {
  std::string name;     // e.g. "I411", "IM6CR"
  std::string display;  // e.g. "I[411]"
  bool persistent;
  std::vector<Generator> generators;
};

const std::vector<IdealSpec>& ideal_specs();
const IdealSpec& ideal_spec(const std::string& name);  // throws DomainError

// The nine persistent ideals in Table 3 column order.
const std::array<std::string, 9>& persistent_ideals();

struct IdealEval {
  std::string name;
  std::vector<Real> residuals;  // per generator: max |coefficient| / kappa
  Real residual;                // max of the above
  bool vanishes;
};

// Evaluates every generator of one ideal; kappa is the generator's largest
// coefficient over a fixed seeded sample of unit-norm Y.
IdealEval ideal_eval(const std::string& name, const HilbertBasis& hb, const Real& y_norm);
IdealEval ideal_eval(const std::string& name, const YSeptet& y);
// Raw generator values, unnormalised.
std::vector<CovExpr> ideal_generators(const std::string& name, const HilbertBasis& hb);
Real generator_kappa(const std::string& ideal, size_t index);

enum class ClassLabel { S, I, II, IV, V, VI, VII, O, OO, A };
const std::array<ClassLabel, 10>& all_classes();
std::string class_name(ClassLabel c);
ClassLabel parse_class(const std::string& s);  // throws DomainError

using Pattern = std::array<bool, 9>;
Pattern table3_row(ClassLabel c);

struct ClassVerdict {
  ClassLabel label;
  Pattern pattern;
  std::array<IdealEval, 9> ideals;
  RootStructure roots;
  std::optional<Complex> multiratio;  // exactly four distinct roots
  std::optional<bool> m6;             // six distinct roots: some ordering gives -1
  Real o0_residual;                   // |O0| / kappa
  bool o0_vanishes;
};

struct InconsistentPattern : DomainError {
  Pattern pattern;
  std::array<Real, 9> residuals;
  InconsistentPattern(const std::string& msg, Pattern p, std::array<Real, 9> r)
      : DomainError(msg), pattern(p), residuals(std::move(r)) {}
};

// Table 3 row for a vanishing pattern; throws InconsistentPattern.
ClassLabel match_pattern(const Pattern& p, const std::array<Real, 9>& residuals = {});

ClassVerdict classify(const YSeptet& y);

// Random sextic on a stratum: a partition of 6 such as "411" or "[411]",
// "0", or one of the special loci "3111+CR", "M6+CR", "Jac".
Sextic sample_root_locus(const std::string& locus, std::mt19937_64& rng);
MobiusMap random_mobius(std::mt19937_64& rng);

// Partition ideals for the coincident-root strata; empty for [111111].
std::string partition_ideal(const std::vector<int>& parts);
// Partitions obtained by splitting one part in two.
std::vector<std::vector<int>> immediate_refinements(const std::vector<int>& parts);
const std::vector<std::vector<int>>& all_partitions();  // the 11 partitions of 6

// Hasse diagram of the degeneration order.
struct HasseNode {
  ClassLabel label;
  std::string factor_structure;
  std::string bocher;  // empty when not applicable
  int hilbert_dim;
};
const std::vector<HasseNode>& hasse_nodes();
// Edges (more degenerate, less degenerate).
const std::vector<std::pair<ClassLabel, ClassLabel>>& hasse_edges();
bool hasse_edge(ClassLabel a, ClassLabel b);  // either direction
std::string hasse_dot();

}  // namespace cs
