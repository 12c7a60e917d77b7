#include "rainbow/json_reports.hpp"

namespace rainbow {

using nlohmann::json;

json to_json(const CycleWitness& w) {
    json j;
    j["vertices"] = w.vertices;
    j["colors"] = w.colors;
    return j;
}

json to_json(const ReversalProfile& p) {
    json j;
    j["edge_types"] = p.edge_types;
    j["backward"] = p.backward;
    j["forward"] = p.forward;
    json positions = json::array();
    for (auto [k, kind] : p.reversals)
        positions.push_back({{"index", k},
                             {"kind", kind == ReversalKind::Backward ? "backward" : "forward"}});
    j["positions"] = positions;
    return j;
}

json to_json(const LiReport& r) {
    return json{{"length", r.length},
                {"directed_count", r.directed_cycles},
                {"rainbow_count", r.rainbow_cycles},
                {"properly_colored_count", r.properly_colored_cycles},
                {"directed_at_most_rainbow", r.directed_at_most_rainbow},
                {"rainbow_equals_properly_colored", r.rainbow_equals_properly_colored}};
}

json to_json(const NonRainbowBound& r) {
    return json{{"length", r.length},
                {"directed_count", r.directed_cycles},
                {"non_rainbow_count", r.non_rainbow},
                {"bound", r.bound},
                {"holds", r.holds}};
}

json to_json(const ConstructionChecklist& c) {
    json checks = json::array();
    for (const auto& chk : c.checks)
        checks.push_back({{"name", chk.name}, {"status", chk.status}, {"detail", chk.detail}});
    return json{{"kind", c.spec.kind},
                {"n", c.spec.n},
                {"sizes", c.spec.sizes},
                {"checks", checks},
                {"all_passed", c.all_passed()}};
}

json to_json(const AppendixUnionReport& r) {
    return json{{"n", r.n},
                {"union_identity", r.union_identity},
                {"symmetric_difference_all_star", r.symmetric_difference_all_star},
                {"g1_isomorphic", r.g1_isomorphic},
                {"g2_isomorphic", r.g2_isomorphic},
                {"all_hold", r.all_hold()}};
}

json to_json(const ExtremalityResult& r) {
    return json{{"partition", r.partition.assignment()},
                {"cyclic_counts", r.cyclic_counts},
                {"min_cyclic_density", r.min_cyclic_density.str()},
                {"extremal_at", r.extremal_at.str()}};
}

json to_json(const StructureReport& r) {
    json j;
    j["lambda"] = r.lambda.str();
    j["n"] = r.n;
    j["m"] = r.m;
    j["refined_partition"] = r.refined.assignment();
    for (int i = 0; i < 3; ++i) {
        std::string key = std::to_string(i);
        j["good"][key] = r.u_good[i];
        j["bad"][key] = r.u_bad[i];
        j["internal_bad"][key] = r.internal_bad[i];
        j["external_bad"][key] = r.external_bad[i];
        j["u_hat_size"][key] = r.u_hat_size[i];
        j["delta"][key] = r.delta[i];
        json details = json::array();
        for (const auto& d : r.good_detail[i]) {
            json detail{{"v", d.v},
                        {"typical_count", d.typical_count},
                        {"special_count", d.special_count},
                        {"special", d.special}};
            if (d.primary) detail["primary"] = *d.primary;
            details.push_back(detail);
        }
        j["good_detail"][key] = details;
    }
    j["amenable"] = r.amenable;
    json bounds = json::array();
    for (const auto& b : r.bounds) {
        json bj{{"name", b.name},
                {"part", b.part},
                {"lhs", b.lhs},
                {"rhs", b.rhs},
                {"status", b.status == BoundStatus::Holds
                               ? "holds"
                               : (b.status == BoundStatus::Fails ? "fails" : "vacuous")}};
        if (b.witness) bj["witness"] = *b.witness;
        bounds.push_back(bj);
    }
    j["bounds"] = bounds;
    return j;
}

json to_json(const VerificationSuite& s) {
    json checks = json::array();
    for (const auto& c : s.checks)
        checks.push_back({{"name", c.name},
                          {"status", c.status},
                          {"detail", c.detail},
                          {"seconds", c.seconds}});
    return json{{"checks", checks},
                {"pass", s.count("pass")},
                {"fail", s.count("fail")},
                {"vacuous", s.count("vacuous")},
                {"inconclusive", s.count("inconclusive")}};
}

json to_json(const ThresholdReport& r) {
    return json{{"n", r.n},
                {"length", r.length},
                {"trials", r.trials},
                {"seed", r.seed},
                {"palette_size", r.palette_size},
                {"threshold", r.threshold},
                {"accepted", r.accepted},
                {"rejected", r.rejected},
                {"with_rainbow", r.with_rainbow},
                {"hit_rate", r.hit_rate},
                {"model", "uniform color per K_n edge, rejection until the color degree bound"}};
}

json to_json(const ExtremalCycleCountReport& r) {
    return json{{"length", r.length},
                {"k", r.k},
                {"total_cycles", r.total_cycles},
                {"part_balanced_cycles", r.part_balanced_cycles},
                {"falling_factorial_product", r.falling_factorial_product},
                {"is_complete_blowup", r.is_complete_blowup},
                {"product_matches", r.product_matches}};
}

}  // namespace rainbow
