#include "hypersum/sweep.hpp"

#include <atomic>
#include <thread>

#include "hypersum/errors.hpp"

namespace hypersum {

std::vector<VerificationReport> run_ordered(
    const std::vector<std::function<VerificationReport()>>& tasks, unsigned jobs) {
    std::vector<VerificationReport> results(tasks.size());
    if (tasks.empty()) return results;
    if (jobs == 0) jobs = 1;
    jobs = std::min<unsigned>(jobs, tasks.size());

    auto run_one = [&](std::size_t i) {
        try {
            results[i] = tasks[i]();
        } catch (const Error& e) {
            results[i].status = Status::error;
            results[i].error_kind = e.kind();
        } catch (const std::exception&) {
            results[i].status = Status::error;
            results[i].error_kind = "Internal";
        }
    };

    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                run_one(i);
        });
    for (auto& th : pool) th.join();
    return results;
}

} // namespace hypersum
