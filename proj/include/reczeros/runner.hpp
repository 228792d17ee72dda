#ifndef RECZEROS_RUNNER_HPP
#define RECZEROS_RUNNER_HPP

// Worker pool for grid runs. Results come back in input order whatever the
// worker count, so output does not depend on scheduling.

#include "reczeros/exactnum.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace reczeros {

/// Fill the shared memo tables (Bernoulli numbers, pi) before workers start.
inline void warm_constants(unsigned k_max)
{
    bernoulli(2 * k_max + 2);
    pi_enclosure(256);
}

template <class T, class F>
auto parallel_map(const std::vector<T>& items, unsigned jobs, F&& fn)
    -> std::vector<std::decay_t<std::invoke_result_t<F&, const T&>>>
{
    using R = std::decay_t<std::invoke_result_t<F&, const T&>>;
    std::vector<std::optional<R>> slots(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size())
                return;
            try {
                slots[i].emplace(fn(items[i]));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
    if (n <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < n; ++t)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }
    std::vector<R> out;
    out.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (errors[i])
            std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

} // namespace reczeros

#endif // RECZEROS_RUNNER_HPP
