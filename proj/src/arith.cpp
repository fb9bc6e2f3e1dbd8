#include "hilbcert/arith.hpp"

#include <atomic>
#include <cctype>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hilbcert {

Int binomial(const Int& n, std::uint64_t k) {
    if (n < 0) throw std::invalid_argument("binomial: negative upper argument");
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Int binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Rat parse_rational(std::string_view text) {
    std::string s(text);
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
              c == '+' || c == '/'))
            throw parse_error("invalid rational literal: '" + s + "'");
    }
    try {
        Rat q(s);
        if (sgn(q.get_den()) == 0)
            throw parse_error("zero denominator in rational: '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw parse_error("invalid rational literal: '" + s + "'");
    }
}

std::string rational_to_string(const Rat& q) { return q.get_str(); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int to_integer(const Rat& q) {
    if (!is_integer(q))
        throw std::invalid_argument("expected integer, got " + q.get_str());
    return q.get_num();
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    unsigned workers = threads == 0 ? hw : threads;
    if (workers > count) workers = static_cast<unsigned>(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(count);  // drain remaining work
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace hilbcert
