#include "braidrep/probe.hpp"

#include <random>
#include <stdexcept>

#include "braidrep/braid.hpp"
#include "braidrep/lk.hpp"

namespace braidrep {

RationalPoint ProbeConfig::default_point() {
    RationalPoint pt;
    pt.set("q", mpq_class(3, 5));
    pt.set("t", mpq_class(7, 11));
    return pt;
}

void ProbeConfig::validate() const {
    if (n < 2) throw std::invalid_argument("probe needs n >= 2");
    if (trials < 0) throw std::invalid_argument("trials must be non-negative");
    if (max_len < 1) throw std::invalid_argument("max-len must be at least 1");
    for (const char* name : {"q", "t"}) {
        const mpq_class* x = point.find(name);
        if (!x) throw std::invalid_argument(std::string("probe point needs a value for ") + name);
        if (sgn(*x) == 0 || abs(*x) == 1)
            throw std::invalid_argument(std::string("probe value for ") + name + " must not be 0 or ±1");
    }
}

ProbeReport run_probe(const ProbeConfig& cfg) {
    cfg.validate();
    ProbeReport report;
    report.n = cfg.n;
    report.trials = cfg.trials;
    report.seed = cfg.seed;
    if (cfg.trials == 0) return report;

    const LkRepresentation symbolic(cfg.n);
    const NumericLkRepresentation numeric(symbolic, cfg.point);
    const RationalMatrix id = rational_identity(symbolic.dim());
    const RingMatrix ring_id = ring_identity(symbolic.dim(), lk_vars());

    // One master stream hands out a length and a word seed per sample.
    std::mt19937_64 master(cfg.seed);
    const long max_samples = 1000L * cfg.trials;
    while (report.kept < cfg.trials && report.sampled < max_samples) {
        const int length = 1 + static_cast<int>(master() % static_cast<std::uint64_t>(cfg.max_len));
        const BraidWord w = random_word(cfg.n, length, master());
        ++report.sampled;
        if (!certified_nontrivial(w)) {
            ++report.excluded;
            continue;
        }
        ++report.kept;
        if (!(numeric.evaluate(w) == id)) continue;
        ++report.numeric_hits;
        if (symbolic.evaluate(w) == ring_id) {
            ++report.true_collisions;
            report.collisions.push_back(to_string(w));
        }
    }
    return report;
}

nlohmann::json ProbeReport::to_json() const {
    return {{"n", n},
            {"trials", trials},
            {"seed", seed},
            {"sampled", sampled},
            {"excluded", excluded},
            {"kept", kept},
            {"numeric_hits", numeric_hits},
            {"true_collisions", true_collisions},
            {"collisions", collisions}};
}

}  // namespace braidrep
