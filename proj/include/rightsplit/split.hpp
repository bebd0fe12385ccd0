#pragma once

#include <optional>

#include "rightsplit/group.hpp"

namespace rsplit {

enum class SplitVerdict { SplitWithWitness, NoSplit, NotApplicable };

std::string to_string(SplitVerdict v);

/// Outcome of a splitting search. m is |G/[G,G]| when the abelianization is
/// cyclic (the coprimality criterion context), otherwise the index [G:H];
/// gcd_value = gcd(n, m/n) in the former case, 0 when not applicable.
struct SplitReport {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t gcd_value = 0;
    SplitVerdict verdict = SplitVerdict::NotApplicable;
    std::optional<Elem> witness;
    std::vector<Elem> witness_powers; // 1, x, ..., x^{n-1} when present
    std::string witness_label;
    std::int64_t elapsed_ms = 0;
};

/// Exhaustive search for x with x^n = 1 whose powers {1, x, ..., x^{n-1}}
/// represent the H-cosets; returns the least witness in element order.
/// Throws NotNormal / IndexMismatch.
SplitReport cyclic_transversal_search(const GroupPtr& g, const Subgroup& h);

/// Complement search: a subgroup T with |T| = [G:H] and T meet H = {1}; its
/// elements form a multiplicatively closed transversal, returned in canonical
/// coset order. Deterministic least-generator-first search over cyclic, then
/// 2-generator, then 3-generator candidates (complete for index <= 8).
/// Throws SearchBudgetExceeded when outside the supported sizes.
std::optional<Transversal> multiplicative_transversal_search(const GroupPtr& g, const Subgroup& h);

/// All primes p <= limit with p^r = 1 mod n and gcd(n, (p^r - 1)/n) = 1.
/// Throws GcdPrecondition when gcd(r, n) != 1.
std::vector<std::int64_t> dirichlet_condition_search(std::int64_t n, std::int64_t r,
                                                     std::int64_t limit);

/// Plain sieve of Eratosthenes.
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

} // namespace rsplit
