#include "cyclo/classify.hpp"

#include "cyclo/clifford.hpp"
#include "cyclo/flotw.hpp"

#include <algorithm>
#include <set>

namespace cyclo {

std::vector<SimpleLabel> classify(int n, const ParameterSpec& spec)
{
    const auto action = varpi(spec);
    std::vector<SimpleLabel> out;
    for (const auto& datum : orbits_of(enumerate_lambda1(n, spec), action)) {
        const auto a = a_value_r(datum.representative, spec);
        for (int i = 0; i < eigen_index_count(datum.representative, datum.o_lambda, spec.p()); ++i)
            out.push_back(SimpleLabel{datum.representative, datum.o_lambda, i, a});
    }
    std::sort(out.begin(), out.end(), [](const SimpleLabel& x, const SimpleLabel& y) {
        if (x.a_value != y.a_value) return x.a_value < y.a_value;
        if (x.lambda != y.lambda) return canonical_less(x.lambda, y.lambda);
        return x.eigen_index < y.eigen_index;
    });
    return out;
}

CountReport count_check(int n, const ParameterSpec& spec, SignatureOrder order)
{
    CountReport report;
    const auto lambda1 = enumerate_lambda1(n, spec);
    report.lambda1 = lambda1.size();
    report.lambda0 = enumerate_lambda0(n, spec, order).size();

    const std::set<Multipartition> members(lambda1.begin(), lambda1.end());
    const auto action = varpi(spec);
    for (const auto& datum : orbits_of(lambda1, action)) {
        ++report.orbits;
        report.orbit_total += static_cast<std::size_t>(eigen_index_count(datum.representative, datum.o_lambda, spec.p()));
        const bool inside = std::all_of(datum.orbit.begin(), datum.orbit.end(),
                                        [&](const Multipartition& m) { return members.contains(m); });
        if (!inside) ++report.straddling;
    }
    report.labels = classify(n, spec).size();
    return report;
}

TriangularityRecord triangularity_metadata(const SimpleLabel& label)
{
    return TriangularityRecord{
        label.a_value, "unitriangular_column",
        "d^{r,p,n}([W_N]) = [N] + sum of d_{W_N,L} [L] over simple L with a(L) < a(N); "
        "the decomposition column of this label is unitriangular"};
}

}  // namespace cyclo
