#include "cyclo/io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace cyclo::io {

json to_json(const ParameterSpec& spec)
{
    return json{{"e", spec.e()},
                {"p", spec.p()},
                {"delta", spec.delta()},
                {"charges", spec.charges()},
                {"derived",
                 {{"f", spec.f()}, {"eprime", spec.eprime()}, {"pprime", spec.pprime()}, {"r", spec.r()}, {"L", spec.L()}}}};
}

json to_json(const Multipartition& lambda)
{
    json out = json::array();
    for (const auto& comp : lambda.components()) out.push_back(comp.parts());
    return out;
}

Multipartition multipartition_from_json(const json& value)
{
    if (!value.is_array()) throw std::invalid_argument("multipartition must be a JSON array");
    std::vector<Partition> comps;
    for (const auto& comp : value) {
        if (!comp.is_array()) throw std::invalid_argument("component must be a JSON array");
        std::vector<int> parts;
        for (const auto& x : comp) {
            if (!x.is_number_integer()) throw std::invalid_argument("parts must be integers");
            parts.push_back(x.get<int>());
        }
        comps.emplace_back(std::move(parts));
    }
    return Multipartition(std::move(comps));
}

json classify_json(int n, const ParameterSpec& spec, const std::vector<SimpleLabel>& labels,
                   const CountReport& report)
{
    json rows = json::array();
    for (const auto& label : labels)
        rows.push_back(json{{"lambda", to_json(label.lambda)},
                            {"o_lambda", label.o_lambda},
                            {"i", label.eigen_index},
                            {"a_value", to_string(label.a_value)}});
    return json{{"spec", to_json(spec)},
                {"n", n},
                {"labels", std::move(rows)},
                {"checks",
                 {{"lambda0", report.lambda0},
                  {"lambda1", report.lambda1},
                  {"orbits", report.orbits},
                  {"total", report.orbit_total}}}};
}

std::string classify_tsv(const std::vector<SimpleLabel>& labels)
{
    std::ostringstream out;
    out << "lambda\to_lambda\ti\ta_value\n";
    for (const auto& label : labels)
        out << to_string(label.lambda) << '\t' << label.o_lambda << '\t' << label.eigen_index << '\t'
            << to_string(label.a_value) << '\n';
    return out.str();
}

std::string semisimple_tsv(const std::vector<SemisimpleLabel>& labels)
{
    std::ostringstream out;
    out << "representative\to_lambda\teigen_index\tdimension\ta_value\n";
    for (const auto& label : labels)
        out << to_string(label.representative) << '\t' << label.o_lambda << '\t' << label.eigen_index << '\t'
            << label.dimension << '\t' << to_string(label.a_value) << '\n';
    return out.str();
}

json count_to_json(const Count& value)
{
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max())
        return json(value.convert_to<std::uint64_t>());
    return json(value.str());
}

json semisimple_json(int n, const ParameterSpec& spec, const std::vector<SemisimpleLabel>& labels)
{
    json rows = json::array();
    for (const auto& label : labels)
        rows.push_back(json{{"representative", to_json(label.representative)},
                            {"o_lambda", label.o_lambda},
                            {"eigen_index", label.eigen_index},
                            {"dimension", count_to_json(label.dimension)},
                            {"a_value", to_string(label.a_value)}});
    return json{{"spec", to_json(spec)}, {"n", n}, {"labels", std::move(rows)}};
}

json listing_json(const std::vector<Multipartition>& items)
{
    json out = json::array();
    for (const auto& m : items) out.push_back(to_json(m));
    return out;
}

}  // namespace cyclo::io
