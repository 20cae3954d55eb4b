#include "unifree/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "unifree/collision.hpp"
#include "unifree/counting.hpp"
#include "unifree/cutset.hpp"
#include "unifree/errors.hpp"
#include "unifree/version.hpp"

namespace unifree {

namespace {

Json document_shell(const char* command) {
    Json doc;
    doc["tool"] = kToolName;
    doc["tool_version"] = kToolVersion;
    doc["command"] = command;
    return doc;
}

Json checks_to_json(const std::vector<CrossCheck>& checks) {
    Json arr = Json::array();
    for (const CrossCheck& c : checks) {
        arr.push_back(Json{{"name", c.name}, {"pass", c.pass}});
    }
    return arr;
}

void require_all_pass(const std::vector<CrossCheck>& checks, const char* command) {
    for (const CrossCheck& c : checks) {
        if (!c.pass) {
            throw internal_error(std::string(command) + " document cross-check '" +
                                 c.name + "' failed");
        }
    }
}

// Largest level whose cell count stays small; at least 1.
std::int64_t sample_level(std::int64_t base) {
    std::int64_t level = 1;
    std::int64_t cells = base;
    while (cells <= 4096 / base) {
        cells *= base;
        ++level;
    }
    return level;
}

// Every count over a sample window is at most one.
bool counts_at_most_one(const DigitSystem& ds, const Config& config) {
    BSequence b = b_sequence(ds, sample_level(ds.base), config);
    return std::all_of(b.values.begin(), b.values.end(),
                       [](const Int& v) { return v <= 1; });
}

NormalizationRecord recompute_reduction(const FunctionSystem& fs) {
    std::vector<std::int64_t> sorted = fs.offsets;
    std::sort(sorted.begin(), sorted.end());
    NormalizationRecord rec;
    rec.shift = sorted.front();
    std::int64_t g = 0;
    for (std::int64_t a : sorted) g = std::gcd(g, a - rec.shift);
    rec.scale = (g == 0) ? 1 : g;
    std::vector<std::int64_t> digits;
    digits.reserve(sorted.size());
    for (std::int64_t a : sorted) digits.push_back((a - rec.shift) / rec.scale);
    rec.core = validate(fs.slope, std::move(digits));
    return rec;
}

Json reduction_to_json(const NormalizationRecord& rec) {
    return Json{{"shift", rec.shift}, {"scale", rec.scale}, {"core", to_json(rec.core)}};
}

}  // namespace

Json unique_decision_document(const DigitSystem& ds, const Config& config) {
    Json doc = document_shell("unique");
    doc["input"] = to_json(ds);

    const bool square = static_cast<std::int64_t>(ds.digits.size()) == ds.base;
    UniquenessDecision unique = decide_unique(ds, config);
    std::optional<CutDecision> cut;
    if (square) {
        cut = has_cut_set(ds);
        if (cut->has_cut != unique.unique) {
            throw internal_error(
                "unique document: cut-set and carry-automaton deciders disagree");
        }
    }

    doc["decision"] = unique.unique ? "unique" : "not_unique";
    std::vector<CrossCheck> checks;
    if (square) checks.push_back({"deciders_agree", cut->has_cut == unique.unique});

    if (unique.unique) {
        if (square) {
            doc["certificate"] = to_json(*cut->certificate);
            checks.push_back({"cutset_certificate_valid",
                              verify_cut_certificate(ds, *cut->certificate)});
        } else {
            doc["certificate"] = nullptr;
        }
        checks.push_back({"counts_at_most_one", counts_at_most_one(ds, config)});
    } else {
        doc["certificate"] = to_json(*unique.witness);
        checks.push_back({"witness_valid", verify_witness(ds, *unique.witness)});
        checks.push_back({"witness_count_at_least_two",
                          count_expansions(ds, unique.witness->number) >= 2});
        if (square) {
            std::int64_t expected =
                std::max<std::int64_t>(cut->roots.max_level, 1);
            doc["uncut_path"] = to_json(*cut->path);
            checks.push_back({"uncut_path_valid",
                              verify_uncut_path(ds, *cut->path, expected)});
        }
    }

    doc["cross_checks"] = checks_to_json(checks);
    require_all_pass(checks, "unique");
    return doc;
}

Json free_decision_document(const FunctionSystem& fs, const Config& config) {
    Json doc = document_shell("free");
    doc["input"] = to_json(fs);

    FreenessDecision decision = decide_free(fs, config);
    doc["reduction"] = reduction_to_json(decision.reduction);
    doc["decision"] = decision.free ? "free" : "not_free";

    std::vector<CrossCheck> checks;
    {
        NormalizationRecord redo = recompute_reduction(fs);
        checks.push_back({"reduction_valid",
                          redo.shift == decision.reduction.shift &&
                              redo.scale == decision.reduction.scale &&
                              redo.core == decision.reduction.core});
    }

    const DigitSystem& core = decision.reduction.core;
    const bool square = static_cast<std::int64_t>(core.digits.size()) == core.base;

    if (decision.free) {
        if (square) {
            CutDecision cut = has_cut_set(core);
            if (!cut.has_cut) {
                throw internal_error(
                    "free document: cut-set decider contradicts the freeness decision");
            }
            doc["certificate"] = to_json(*cut.certificate);
            checks.push_back({"cutset_certificate_valid",
                              verify_cut_certificate(core, *cut.certificate)});
        } else {
            doc["certificate"] = nullptr;
        }
    } else {
        doc["certificate"] = to_json(*decision.certificate);
        checks.push_back(
            {"relation_valid", verify_relation(fs, *decision.certificate)});
        checks.push_back(
            {"witness_valid", verify_witness(core, *decision.witness)});
    }

    if (square && is_prime(fs.slope)) {
        checks.push_back({"prime_fast_path_agrees",
                          prime_fast_path_free(fs) == decision.free});
    }

    doc["cross_checks"] = checks_to_json(checks);
    require_all_pass(checks, "free");
    return doc;
}

bool reverify_document(const Json& doc) {
    try {
        const std::string command = doc.at("command").get<std::string>();
        const std::string decision = doc.at("decision").get<std::string>();
        const Json& certificate = doc.at("certificate");

        if (command == "unique") {
            DigitSystem ds = digit_system_from_json(doc.at("input"));
            if (decision == "unique") {
                if (certificate.is_null()) return decide_unique(ds).unique;
                if (static_cast<std::int64_t>(ds.digits.size()) != ds.base) return false;
                return verify_cut_certificate(ds, cut_certificate_from_json(certificate));
            }
            if (decision == "not_unique") {
                if (!verify_witness(ds, collision_witness_from_json(certificate))) {
                    return false;
                }
                if (doc.contains("uncut_path")) {
                    UncutPath path = uncut_path_from_json(doc.at("uncut_path"));
                    std::int64_t expected =
                        std::max<std::int64_t>(mask_tree_roots(ds).max_level, 1);
                    if (!verify_uncut_path(ds, path, expected)) return false;
                }
                return true;
            }
            return false;
        }

        if (command == "free") {
            FunctionSystem fs = function_system_from_json(doc.at("input"));
            const Json& reduction = doc.at("reduction");
            NormalizationRecord redo = recompute_reduction(fs);
            if (reduction.at("shift").get<std::int64_t>() != redo.shift ||
                reduction.at("scale").get<std::int64_t>() != redo.scale ||
                digit_system_from_json(reduction.at("core")) != redo.core) {
                return false;
            }
            if (decision == "free") {
                if (certificate.is_null()) return decide_free(fs).free;
                if (static_cast<std::int64_t>(redo.core.digits.size()) != redo.core.base) {
                    return false;
                }
                return verify_cut_certificate(redo.core,
                                              cut_certificate_from_json(certificate));
            }
            if (decision == "not_free") {
                return verify_relation(fs, relation_certificate_from_json(certificate));
            }
            return false;
        }
        return false;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace unifree
