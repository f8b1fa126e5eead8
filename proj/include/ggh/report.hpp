#pragma once

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "ggh/operator_engine.hpp"
#include "ggh/series_lab.hpp"

namespace ggh {

/// Fixed 17-significant-digit float rendering (deterministic across runs).
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline nlohmann::ordered_json check_report_to_json(const CheckReport& rep) {
    nlohmann::ordered_json j;
    j["name"] = rep.name;
    j["pass"] = rep.pass;
    j["failures"] = rep.failures;
    j["notes"] = rep.notes;
    return j;
}

inline nlohmann::ordered_json mh_report_to_json(const MHReport& rep) {
    nlohmann::ordered_json j;
    j["name"] = rep.name;
    j["x"] = rep.x.str();
    j["i"] = rep.i;
    j["limit"] = format_double(rep.limit);
    j["tolerance"] = format_double(rep.tol);
    j["indices"] = rep.indices;
    j["deviations"] = nlohmann::ordered_json::array();
    for (double d : rep.deviations) j["deviations"].push_back(format_double(d));
    j["decay_ratios"] = nlohmann::ordered_json::array();
    for (double d : rep.ratios) j["decay_ratios"].push_back(format_double(d));
    j["max_deviation"] =
        format_double(rep.deviations.empty()
                          ? 0.0
                          : *std::max_element(rep.deviations.begin(), rep.deviations.end()));
    j["final_below_tolerance"] = rep.final_pass;
    j["monotone_tail"] = rep.monotone_pass;
    j["pass"] = rep.pass;
    j["notes"] = rep.notes;
    return j;
}

/// Runs fn(k) for k = 0..count-1 on up to `jobs` threads; results land in
/// index order. Every task must be a pure computation.
template <typename R>
std::vector<R> parallel_map(long count, long jobs, const std::function<R(long)>& fn) {
    if (count <= 0) return {};
    if (jobs <= 0) jobs = static_cast<long>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    std::vector<R> results(static_cast<size_t>(count));
    if (jobs == 1 || count == 1) {
        for (long k = 0; k < count; ++k) results[static_cast<size_t>(k)] = fn(k);
        return results;
    }
    std::vector<std::exception_ptr> errors(static_cast<size_t>(count));
    std::atomic<long> next{0};
    auto worker = [&] {
        for (;;) {
            const long k = next.fetch_add(1);
            if (k >= count) return;
            try {
                results[static_cast<size_t>(k)] = fn(k);
            } catch (...) {
                errors[static_cast<size_t>(k)] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (long t = 0; t < std::min(jobs, count); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

} // namespace ggh
