#ifndef HILBCERT_ARITH_HPP
#define HILBCERT_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbcert {

using Int = mpz_class;
using Rat = mpq_class;

/// A computation asked for more resources than its configured budget allows.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: files, flags, text forms.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Binomial coefficient C(n, k); returns 0 when n < k.
Int binomial(const Int& n, std::uint64_t k);
Int binomial(std::uint64_t n, std::uint64_t k);

/// Parses an exact rational from its decimal string form "p" or "p/q".
Rat parse_rational(std::string_view text);

/// Canonical decimal string form, "p" or "p/q".
std::string rational_to_string(const Rat& q);

bool is_integer(const Rat& q);
Int to_integer(const Rat& q);  // q must be integral

/// Runs body(0..count-1) on up to `threads` workers (0 = hardware default).
/// Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace hilbcert

#endif
