#include "paretosum/algorithm.hpp"

#include <stdexcept>
#include <string>

#include "paretosum/base_algorithms.hpp"
#include "paretosum/nd_algorithms.hpp"
#include "paretosum/successive.hpp"

namespace paretosum {

std::string_view to_string(Algorithm algo) {
    switch (algo) {
        case Algorithm::bf: return "bf";
        case Algorithm::bs: return "bs";
        case Algorithm::pbs: return "pbs";
        case Algorithm::sc: return "sc";
        case Algorithm::ks: return "ks";
        case Algorithm::sbs: return "sbs";
        case Algorithm::sss: return "sss";
        case Algorithm::hybrid: return "hybrid";
        case Algorithm::ptree: return "ptree";
        case Algorithm::snd: return "snd";
        case Algorithm::dnd: return "dnd";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    for (auto algo : kAllAlgorithms) {
        if (to_string(algo) == name) return algo;
    }
    throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::size_t run_algorithm(Algorithm algo, const ParetoSet& a, const ParetoSet& b, const RunOptions& opts,
                          PointSink& sink, Counters& counters) {
    const SweepOptions sweep{opts.delta == 0 ? default_delta(a.size(), b.size()) : opts.delta};
    switch (algo) {
        case Algorithm::bf: return brute_force(a, b, sink, counters);
        case Algorithm::bs: return binary_search(a, b, sink, counters);
        case Algorithm::pbs: return priority_binary_search(a, b, sink, counters);
        case Algorithm::sc: return sort_compare(a, b, sink, counters);
        case Algorithm::ks: {
            std::size_t hint = 0;
            if (opts.k_hint) {
                hint = *opts.k_hint;
            } else {
                CountSink probe;
                Counters scratch;
                hint = sort_compare(a, b, probe, scratch);
            }
            return kirkpatrick_seidel(a, b, hint, sink, counters);
        }
        case Algorithm::sbs: return successive(a, b, Oracle::binary, sweep, sink, counters);
        case Algorithm::sss: return successive(a, b, Oracle::sweep, sweep, sink, counters);
        case Algorithm::hybrid: return hybrid_sss_sc(a, b, sweep, sink, counters);
        case Algorithm::ptree: return pareto_tree_filter(a, b, true, sink, counters);
        case Algorithm::snd: return nondomdc_sequential(a, b, sink, counters);
        case Algorithm::dnd: return nondomdc_doubling(a, b, sink, counters);
    }
    throw std::invalid_argument("unknown algorithm");
}

ParetoSet pareto_sum(Algorithm algo, const ParetoSet& a, const ParetoSet& b, const RunOptions& opts) {
    CollectSink sink;
    Counters counters;
    run_algorithm(algo, a, b, opts, sink, counters);
    return ParetoSet::from_trusted(sink.take());
}

}  // namespace paretosum
