#include "hfold/io.hpp"

namespace hfold::io {

namespace {

Json ints(std::span<const Integer> values)
{
    Json arr = Json::array();
    for (Integer v : values)
        arr.push_back(v);
    return arr;
}

std::vector<Integer> read_ints(const Json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_array())
        throw InvalidSetError(std::string("fringe JSON lacks array field '") + key + "'");
    return j.at(key).get<std::vector<Integer>>();
}

} // namespace

Json to_json(const StructureCertificate& certificate)
{
    const FringeStructure& f = certificate.fringe;
    Json j;
    j["set"] = ints(f.set.elements());
    j["t"] = f.t;
    j["h_t"] = f.h_t;
    j["c_t"] = f.empty_for_all_h ? Json(nullptr) : Json(f.c_t);
    j["d_t"] = f.empty_for_all_h ? Json(nullptr) : Json(f.d_t);
    j["C_t"] = ints(f.C_t);
    j["D_t"] = ints(f.D_t);
    j["c_prime_t"] = f.c_prime_t;
    j["d_prime_t"] = f.d_prime_t;
    j["verified_h"] = Json::array({certificate.verified_h_lo, certificate.verified_h_hi});
    if (f.empty_for_all_h)
        j["empty_for_all_h"] = true;
    return j;
}

StructureCertificate certificate_from_json(const Json& j)
{
    try {
        const bool empty = j.value("empty_for_all_h", false);
        FringeStructure f{
            NormalizedSet(read_ints(j, "set")),
            j.at("t").get<std::uint32_t>(),
            j.at("h_t").get<Integer>(),
            j.at("c_prime_t").get<Integer>(),
            j.at("d_prime_t").get<Integer>(),
            empty ? 0 : j.at("c_t").get<Integer>(),
            empty ? 0 : j.at("d_t").get<Integer>(),
            read_ints(j, "C_t"),
            read_ints(j, "D_t"),
            empty,
        };
        const auto range = j.at("verified_h").get<std::vector<Integer>>();
        if (range.size() != 2)
            throw InvalidSetError("verified_h must be [lo, hi]");
        return StructureCertificate{std::move(f), range[0], range[1]};
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSetError(std::string("malformed fringe JSON: ") + e.what());
    }
}

Json to_json(const NormalizationRecord& record)
{
    Json j;
    j["normalized"] = ints(record.normalized.elements());
    j["offset"] = record.offset;
    j["scale"] = record.scale;
    return j;
}

Json to_json(const WitnessSet& w)
{
    Json j;
    j["set"] = ints(w.set.elements());
    j["t"] = w.t;
    j["h"] = w.h;
    j["n"] = w.n;
    Json list = Json::array();
    for (std::size_t s = 0; s < w.witnesses.size(); ++s) {
        Json item;
        item["multiplicities"] = ints(w.witnesses[s]);
        item["zeros"] = w.zero_parts(s);
        list.push_back(std::move(item));
    }
    j["witnesses"] = std::move(list);
    return j;
}

Json to_json(const StructureMismatch& m)
{
    Json j;
    j["set"] = ints(m.fringe.set.elements());
    j["t"] = m.fringe.t;
    j["h"] = m.h;
    j["missing"] = ints(m.missing);
    j["unexpected"] = ints(m.unexpected);
    return j;
}

} // namespace hfold::io
