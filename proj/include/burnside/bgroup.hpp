#pragma once

#include <string>
#include <vector>

#include "burnside/burnside.hpp"

namespace burnside {

enum class SubgroupClass { nilpotent, solvable };

// Class indices whose representative subgroup lies in the tag class.
std::vector<int> tagged_classes(const GroupPtr& g, SubgroupClass tag);

// Integer lattice of elements whose marks vanish at every tagged subgroup
// class: the kernel of the product of restrictions to those subgroups.
struct KernelBasis {
  GroupPtr group;
  SubgroupClass tag;
  std::vector<BurnsideElement> basis;  // integral, primitive, saturated
  int rank = 0;
  std::vector<int> constrained_classes;
};

KernelBasis kernel_basis(const GroupPtr& g, SubgroupClass tag);

bool marks_vanish_on(const BurnsideElement& u, const std::vector<int>& classes);
bool kernel_contains(const KernelBasis& kb, const BurnsideElement& u);
// Cross-check: membership by exact solve against the basis plus integrality.
bool kernel_contains_by_solve(const KernelBasis& kb, const BurnsideElement& u);

// m_{G,N} = 0 for every nontrivial normal N; decided on minimal normal
// subgroups (multiplicativity pushes zeros upward), full scan as oracle.
bool is_b_group(const GroupPtr& g);
bool is_b_group_full_scan(const GroupPtr& g);

struct BetaResult {
  GroupPtr source;
  GroupPtr beta_group;   // quotient by the witness subgroup
  Bitset witness_members;
  Rat witness_m;         // nonzero deflation number of the witness
};

// Quotient by a maximal normal subgroup with nonzero deflation number,
// scanning normals in decreasing (order, members) order.
BetaResult beta(const GroupPtr& g);

// All inclusion-maximal normal subgroup indices with nonzero deflation
// number; their quotients must be pairwise isomorphic.
std::vector<int> beta_witness_candidates(const GroupPtr& g);

enum class CheckStatus { pass, fail, skipped };

struct VerificationReport {
  std::string group;
  int order = 0;
  std::string check;
  CheckStatus status = CheckStatus::pass;
  nlohmann::json witness;  // null unless the check attached data
  long long millis = 0;
  bool counterexample = false;  // fail flavor: conjectured statement broke
};

// Reusable witness fragments, for reports that can be re-checked offline.
nlohmann::json group_witness(const GroupPtr& g);
nlohmann::json subgroup_witness(const Subgroup& s);

// Restriction of the top idempotent to proper subgroups vanishes, and its
// deflation along any normal N scales the target's top idempotent by m_{G,N}.
VerificationReport check_top_idempotent(const GroupPtr& g);
// Deflation number of a minimal normal abelian N against the complement
// count: m_{G,N} = 1 - |complements| / |N|.
VerificationReport check_complement_count(const GroupPtr& g);
// Cyclic-modulo-p agreement between G and beta(G), all relevant primes.
VerificationReport check_cyclic_mod_p_agreement(const GroupPtr& g);
// Nilpotency agreement between G and beta(G).
VerificationReport check_nilpotency_agreement(const GroupPtr& g);
// Ind/Res/Inf/Def closure of the nilpotent-vanishing kernel.
VerificationReport check_kernel_closure(const GroupPtr& g, SubgroupClass tag);
// Solvability agreement between G and beta(G) plus solvable-kernel closure.
VerificationReport check_solvability_agreement(const GroupPtr& g);
// Catalog-wide: nilpotent B-groups are exactly the squares of squarefree
// cyclic groups.
VerificationReport check_nilpotent_bgroup_classification(
    const std::vector<std::pair<std::string, GroupPtr>>& groups);

}  // namespace burnside
