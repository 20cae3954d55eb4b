#include "unifree/json_io.hpp"

#include <string>

#include "unifree/errors.hpp"

namespace unifree {

namespace {

std::vector<std::int64_t> int64_list(const Json& j) {
    std::vector<std::int64_t> values;
    values.reserve(j.size());
    for (const Json& entry : j) values.push_back(entry.get<std::int64_t>());
    return values;
}

}  // namespace

Json int_to_json(const Int& value) {
    if (fits_int64(value)) return static_cast<std::int64_t>(value);
    return value.str();  // decimal string once past the int64 range
}

Int int_from_json(const Json& value) {
    if (value.is_number_integer()) return Int(value.get<std::int64_t>());
    if (value.is_number_unsigned()) return Int(value.get<std::uint64_t>());
    if (value.is_string()) return Int(value.get<std::string>());
    throw input_error(errc::bad_argument, "expected an integer or a decimal string");
}

Json to_json(const DigitSystem& ds) {
    return Json{{"base", ds.base}, {"digits", ds.digits}};
}

DigitSystem digit_system_from_json(const Json& j) {
    return validate(j.at("base").get<std::int64_t>(), int64_list(j.at("digits")));
}

Json to_json(const TreeVertex& v) {
    return Json{{"num", v.numerator}, {"level", v.level}};
}

Json to_json(const CutCertificate& cert) {
    Json vertices = Json::array();
    for (const TreeVertex& v : cert.vertices) vertices.push_back(to_json(v));
    return Json{{"type", "cutset"}, {"depth", cert.depth}, {"vertices", std::move(vertices)}};
}

CutCertificate cut_certificate_from_json(const Json& j) {
    if (j.at("type").get<std::string>() != "cutset") {
        throw input_error(errc::bad_argument, "certificate type is not cutset");
    }
    CutCertificate cert;
    cert.depth = j.at("depth").get<std::int64_t>();
    for (const Json& entry : j.at("vertices")) {
        cert.vertices.push_back(TreeVertex{entry.at("num").get<std::int64_t>(),
                                           entry.at("level").get<std::int64_t>()});
    }
    return cert;
}

Json to_json(const UncutPath& path) {
    return Json{{"type", "uncut_path"}, {"digits", path.digits}};
}

UncutPath uncut_path_from_json(const Json& j) {
    if (j.at("type").get<std::string>() != "uncut_path") {
        throw input_error(errc::bad_argument, "certificate type is not uncut_path");
    }
    return UncutPath{int64_list(j.at("digits"))};
}

Json to_json(const CollisionWitness& witness) {
    return Json{{"type", "collision"},
                {"number", int_to_json(witness.number)},
                {"expansions", Json::array({witness.expansion_a, witness.expansion_b})}};
}

CollisionWitness collision_witness_from_json(const Json& j) {
    if (j.at("type").get<std::string>() != "collision") {
        throw input_error(errc::bad_argument, "certificate type is not collision");
    }
    const Json& expansions = j.at("expansions");
    if (expansions.size() != 2) {
        throw input_error(errc::bad_argument, "collision needs exactly two expansions");
    }
    CollisionWitness witness;
    witness.number = int_from_json(j.at("number"));
    witness.expansion_a = int64_list(expansions.at(0));
    witness.expansion_b = int64_list(expansions.at(1));
    return witness;
}

Json to_json(const FunctionSystem& fs) {
    return Json{{"slope", fs.slope}, {"offsets", fs.offsets}, {"seeds", fs.seeds}};
}

FunctionSystem function_system_from_json(const Json& j) {
    std::vector<std::int64_t> seeds;
    if (j.contains("seeds")) seeds = int64_list(j.at("seeds"));
    return make_function_system(j.at("slope").get<std::int64_t>(),
                                int64_list(j.at("offsets")), std::move(seeds));
}

Json to_json(const SemigroupWord& word) {
    return Json(word.letters);
}

Json to_json(const RelationCertificate& cert) {
    return Json{{"left", cert.left.letters},
                {"right", cert.right.letters},
                {"composite",
                 Json{{"slope", int_to_json(cert.composite.slope)},
                      {"offset", int_to_json(cert.composite.offset)}}}};
}

RelationCertificate relation_certificate_from_json(const Json& j) {
    RelationCertificate cert;
    for (const Json& entry : j.at("left")) {
        cert.left.letters.push_back(entry.get<std::int32_t>());
    }
    for (const Json& entry : j.at("right")) {
        cert.right.letters.push_back(entry.get<std::int32_t>());
    }
    const Json& composite = j.at("composite");
    cert.composite.slope = int_from_json(composite.at("slope"));
    cert.composite.offset = int_from_json(composite.at("offset"));
    return cert;
}

Json to_json(const DensityReport& report) {
    auto density = [](std::int64_t count, std::int64_t limit) {
        return Json{{"num", count}, {"den", limit + 1}};
    };
    Json samples = Json::array();
    for (const DensitySample& s : report.samples) {
        samples.push_back(Json{{"T", s.limit},
                               {"count", s.count},
                               {"density", density(s.count, s.limit)}});
    }
    return Json{{"limit_T", report.limit},
                {"orbit_count", report.orbit_count},
                {"density", density(report.orbit_count, report.limit)},
                {"samples", std::move(samples)}};
}

}  // namespace unifree
