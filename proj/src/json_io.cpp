#include "choix/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace choix {

namespace {

constexpr double kMaxExactInt = 9007199254740992.0;  // 2^53

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

}  // namespace

Option option_from_json(const Json& j, std::size_t dimension) {
    if (!j.is_array() || j.empty()) {
        throw InvalidInput("an option must be a nonempty array of numbers");
    }
    std::vector<double> v;
    v.reserve(j.size());
    for (const Json& x : j) {
        if (!x.is_number()) {
            throw InvalidInput("option entries must be numbers");
        }
        v.push_back(x.get<double>());
    }
    if (dimension != 0 && v.size() != dimension) {
        throw DimensionMismatch("option has " + std::to_string(v.size()) +
                                " entries, expected " + std::to_string(dimension));
    }
    return Option(std::move(v));
}

OptionSet option_set_from_json(const Json& j, std::size_t dimension) {
    const Json& arr = j.is_object() ? require(j, "options") : j;
    if (!arr.is_array()) {
        throw InvalidInput("an option set must be an array of options");
    }
    OptionSet out;
    out.reserve(arr.size());
    for (const Json& o : arr) {
        out.push_back(option_from_json(o, dimension));
        if (dimension == 0) {
            dimension = out.back().dim();
        }
    }
    return out;
}

AssessmentPair pair_from_json(const Json& j, std::size_t dimension) {
    AssessmentPair pair;
    pair.chosen = option_set_from_json(require(j, "chosen"), dimension);
    if (j.contains("rejected")) {
        pair.rejected = option_set_from_json(j.at("rejected"), dimension);
    }
    return pair;
}

Assessment assessment_from_json(const Json& j) {
    const Json& dim = require(j, "dimension");
    if (!dim.is_number_integer() || dim.get<long long>() < 1) {
        throw InvalidInput("\"dimension\" must be a positive integer");
    }
    const auto dimension = static_cast<std::size_t>(dim.get<long long>());
    Assessment out(dimension);
    if (j.contains("pairs")) {
        const Json& pairs = j.at("pairs");
        if (!pairs.is_array()) {
            throw InvalidInput("\"pairs\" must be an array");
        }
        for (const Json& p : pairs) {
            out.add(pair_from_json(p, dimension));
        }
    }
    return out;
}

Json to_json(const Option& u) {
    Json arr = Json::array();
    for (double x : u.values()) {
        if (std::trunc(x) == x && std::abs(x) < kMaxExactInt) {
            arr.push_back(static_cast<long long>(x));
        } else {
            arr.push_back(x);
        }
    }
    return arr;
}

Json to_json(const OptionSet& set) {
    Json arr = Json::array();
    for (const Option& u : set) {
        arr.push_back(to_json(u));
    }
    return arr;
}

Json to_json(const AssessmentPair& pair) {
    return Json{{"chosen", to_json(pair.chosen)}, {"rejected", to_json(pair.rejected)}};
}

Json to_json(const Assessment& assessment) {
    Json pairs = Json::array();
    for (const AssessmentPair& p : assessment.pairs()) {
        pairs.push_back(to_json(p));
    }
    return Json{{"dimension", assessment.dimension()}, {"pairs", std::move(pairs)}};
}

Json to_json(const ChoiceResult& result) {
    return Json{{"chosen", to_json(result.chosen)},
                {"rejected", to_json(result.rejected)},
                {"consistent", result.consistent}};
}

Json to_json(const std::vector<OptionSet>& sets) {
    Json arr = Json::array();
    for (const OptionSet& s : sets) {
        arr.push_back(to_json(s));
    }
    return arr;
}

std::string to_string(const BigNat& n) { return n.str(); }

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

}  // namespace choix
