#include "tww/sequence.hpp"

#include <algorithm>
#include <string>

namespace tww {

Replay replay_sequence(const Trigraph& g, const ContractionSequence& seq) {
    Replay out{g, {}};
    Trigraph& work = out.final_state;
    VerificationReport& report = out.report;

    for (const VertexId v : g.vertices()) {
        report.sigma[v] = v;
        report.preimage_sizes[v] = 1;
    }
    // members[w] lists the original vertices currently merged into w.
    std::map<VertexId, std::vector<VertexId>> members;
    for (const VertexId v : g.vertices()) members[v] = {v};

    report.width = work.max_red_degree();
    report.step_max_red_degrees.reserve(seq.size());
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const auto [keep, drop] = seq.steps[i];
        if (keep == drop) {
            throw MalformedCertificate(i, "contracts vertex " + std::to_string(keep) + " with itself");
        }
        for (const VertexId v : {keep, drop}) {
            if (!work.has_vertex(v)) {
                throw MalformedCertificate(i, "vertex " + std::to_string(v) + " is not alive");
            }
        }
        work.contract(keep, drop);

        auto& kept = members[keep];
        auto& gone = members[drop];
        for (const VertexId v : gone) report.sigma[v] = keep;
        kept.insert(kept.end(), gone.begin(), gone.end());
        members.erase(drop);
        report.preimage_sizes[keep] = kept.size();
        report.preimage_sizes.erase(drop);

        const std::size_t delta = work.max_red_degree();
        report.step_max_red_degrees.push_back(delta);
        report.width = std::max(report.width, delta);
    }
    return out;
}

VerificationReport apply_sequence(const Trigraph& g, const ContractionSequence& seq) {
    return replay_sequence(g, seq).report;
}

ContractionSequence lowest_label_completion(const Trigraph& g) {
    ContractionSequence seq;
    const auto alive = g.vertices();
    for (std::size_t i = 1; i < alive.size(); ++i) seq.push(alive[0], alive[i]);
    return seq;
}

ContractionSequence complete_sequence(const Trigraph& g, ContractionSequence prefix) {
    // Only the surviving labels matter, so track them without replaying edges.
    std::vector<bool> alive(g.id_bound(), false);
    for (const VertexId v : g.vertices()) alive[v] = true;
    for (const auto& s : prefix.steps) {
        if (s.drop < alive.size()) alive[s.drop] = false;
    }
    std::vector<VertexId> rest;
    for (VertexId v = 0; v < alive.size(); ++v) {
        if (alive[v]) rest.push_back(v);
    }
    for (std::size_t i = 1; i < rest.size(); ++i) prefix.push(rest[0], rest[i]);
    return prefix;
}

}  // namespace tww
