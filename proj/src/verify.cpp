#include "cyclo/verify.hpp"

#include "cyclo/afunction.hpp"
#include "cyclo/classify.hpp"
#include "cyclo/clifford.hpp"
#include "cyclo/flotw.hpp"

#include <set>

namespace cyclo {

std::vector<ParameterSpec> default_spec_matrix()
{
    return {build_parameters(4, 2, 1, {0}), build_parameters(2, 2, 1, {0}), build_parameters(3, 3, 1, {0}),
            build_parameters(4, 2, 2, {0, 1}), build_parameters(2, 4, 1, {0})};
}

std::string describe(const ParameterSpec& spec)
{
    std::string v;
    for (std::size_t k = 0; k < spec.charges().size(); ++k) {
        if (k > 0) v += ',';
        v += std::to_string(spec.charges()[k]);
    }
    return "(e=" + std::to_string(spec.e()) + ",p=" + std::to_string(spec.p()) +
           ",delta=" + std::to_string(spec.delta()) + ",v=(" + v + "))";
}

namespace {

Count power(Count base, int exponent)
{
    Count out = 1;
    for (int k = 0; k < exponent; ++k) out *= base;
    return out;
}

Count factorial(int n)
{
    Count out = 1;
    for (int k = 2; k <= n; ++k) out *= k;
    return out;
}

class Recorder {
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& context)
    {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.counterexample = context;
        }
    }
    bool failed() const { return !result_.passed; }
    IdentityResult take() { return std::move(result_); }

private:
    IdentityResult result_;
};

std::string at(const ParameterSpec& spec, int n) { return describe(spec) + " n=" + std::to_string(n); }

}  // namespace

std::vector<IdentityResult> run_verification(const VerifyOptions& options)
{
    std::vector<IdentityResult> results;
    const int lo = options.n_min;
    const int hi = options.n_max;

    {
        Recorder rec("sum_of_squares");
        for (const auto& spec : options.specs)
            for (int n = lo; n <= hi && !rec.failed(); ++n) {
                Count sum = 0;
                for (const auto& lambda : enumerate_multipartitions(n, static_cast<std::size_t>(spec.r())))
                    sum += syt_count(lambda) * syt_count(lambda);
                const Count expected = power(spec.r(), n) * factorial(n);
                rec.check(sum == expected, at(spec, n) + ": sum f^2 = " + sum.str() + " != " + expected.str());
            }
        results.push_back(rec.take());
    }
    {
        Recorder rec("semisimple_dimensions");
        for (const auto& spec : options.specs)
            for (int n = lo; n <= hi && !rec.failed(); ++n) {
                Count sum = 0;
                const auto labels = semisimple_labels(n, spec);
                for (const auto& label : labels) sum += label.dimension * label.dimension;
                if (n == 0) {
                    rec.check(labels.size() == 1 && sum == 1, at(spec, n) + ": expected one label of dimension 1");
                    continue;
                }
                const Count total = power(spec.r(), n) * factorial(n);
                rec.check(sum * spec.p() == total,
                          at(spec, n) + ": p * sum dim^2 = " + Count(sum * spec.p()).str() + " != " + total.str());
            }
        results.push_back(rec.take());
    }
    {
        Recorder rec("count_bijection");
        for (const auto& spec : options.specs) {
            if (hi < lo) break;
            const auto layers = kleshchev_layers(hi, spec, options.order);
            for (int n = std::max(lo, 0); n <= hi && !rec.failed(); ++n) {
                const auto kl = layers[static_cast<std::size_t>(n)].size();
                const auto fl = enumerate_flotw(n, spec).size();
                rec.check(kl == fl, at(spec, n) + ": |Kleshchev| = " + std::to_string(kl) +
                                        " != |FLOTW| = " + std::to_string(fl) + " (signature order " +
                                        to_string(options.order) + ")");
            }
        }
        results.push_back(rec.take());
    }
    {
        Recorder rec("varpi_stability");
        for (const auto& spec : options.specs) {
            const auto action = varpi(spec);
            for (int n = lo; n <= hi && !rec.failed(); ++n)
                for (const auto& lambda : enumerate_lambda1(n, spec)) {
                    const auto image = apply_varpi(lambda, action);
                    rec.check(in_lambda1(image, spec),
                              at(spec, n) + ": " + to_string(lambda) + " in Lambda1 but varpi = " + to_string(image) +
                                  " is not");
                    if (rec.failed()) break;
                }
        }
        results.push_back(rec.take());
    }
    {
        Recorder rec("a_invariance");
        for (const auto& spec : options.specs) {
            const auto action = varpi(spec);
            for (int n = lo; n <= hi && !rec.failed(); ++n)
                for (const auto& lambda : enumerate_multipartitions(n, static_cast<std::size_t>(spec.r()))) {
                    const auto a = a_value_r(lambda, spec);
                    const auto b = a_value_r(apply_varpi(lambda, action), spec);
                    rec.check(a == b, at(spec, n) + ": a" + to_string(lambda) + " = " + to_string(a) +
                                          " but a(varpi) = " + to_string(b));
                    if (rec.failed()) break;
                }
        }
        results.push_back(rec.take());
    }
    {
        Recorder rec("tableau_orbits");
        for (const auto& spec : options.specs) {
            const auto action = varpi(spec);
            for (int n = std::max(lo, 1); n <= hi && !rec.failed(); ++n)
                for (const auto& datum : orbits_of(enumerate_multipartitions(n, static_cast<std::size_t>(spec.r())), action)) {
                    const auto orbits = tableau_orbits(datum.representative, action, options.tableau_cap);
                    const std::size_t expected = static_cast<std::size_t>(spec.p() / datum.o_lambda);
                    for (const auto& o : orbits) {
                        rec.check(o.size() == expected, at(spec, n) + ": tableau orbit of " +
                                                            to_string(datum.representative) + " has size " +
                                                            std::to_string(o.size()) + ", expected " +
                                                            std::to_string(expected));
                        if (rec.failed()) break;
                    }
                    if (rec.failed()) break;
                }
        }
        results.push_back(rec.take());
    }
    {
        Recorder rec("morita_split");
        for (const auto& spec : options.specs) {
            const auto q = q_sequence(spec);
            const auto classes = morita_split(q, spec.e());
            bool ok = static_cast<int>(classes.size()) == spec.pprime();
            const RootOfUnity eta_p(spec.L() / spec.p(), spec.L());
            RootOfUnity shift(0, spec.L());
            for (std::size_t j = 0; ok && j < classes.size(); ++j, shift = shift * eta_p) {
                ok = static_cast<int>(classes[j].size()) == spec.fdelta();
                for (std::size_t k = 0; ok && k < classes[j].size(); ++k)
                    ok = q[classes[j][k]] == shift * q[classes[0][k]];
            }
            rec.check(ok, describe(spec) + ": Q does not split into p' translated classes of size f*delta");
        }
        results.push_back(rec.take());
    }
    {
        Recorder rec("classification_count");
        for (const auto& spec : options.specs)
            for (int n = lo; n <= hi && !rec.failed(); ++n) {
                const auto report = count_check(n, spec, options.order);
                rec.check(report.ok(), at(spec, n) + ": |Lambda0| = " + std::to_string(report.lambda0) +
                                           ", |Lambda1| = " + std::to_string(report.lambda1) +
                                           ", labels = " + std::to_string(report.labels) +
                                           ", sum p/o = " + std::to_string(report.orbit_total) +
                                           ", straddling orbits = " + std::to_string(report.straddling));
            }
        results.push_back(rec.take());
    }
    return results;
}

}  // namespace cyclo
