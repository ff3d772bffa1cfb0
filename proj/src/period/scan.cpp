#include "rcperiod/period.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "rcperiod/error.hpp"

namespace rcp {

ScanTable monomial_scan(const Hypersurface& X, const CurveFamily& fam, const std::vector<Complex>& s_list, int degree,
                        const PeriodOptions& opts, unsigned threads)
{
    const int want = X.degree() * 2 - X.m() - 2;
    if (degree != want)
        throw Error(Errc::DegreeError, "scan degree must be " + std::to_string(want) + ", got " + std::to_string(degree));
    if (s_list.empty())
        throw Error(Errc::InputError, "scan needs at least one sample");

    std::vector<PreparedJet> jets;
    for (const auto& s : s_list)
        jets.push_back(prepare_jet(X, fam(s), opts));

    std::vector<Exponent> monos = monomials_of_degree(X.nvars(), degree);
    std::sort(monos.begin(), monos.end(), [](const Exponent& a, const Exponent& b) { return grlex_less(b, a); });

    ScanTable out;
    out.family = fam.name;
    out.samples = s_list;
    out.rows.resize(monos.size());

    const std::size_t cells = monos.size() * s_list.size();
    std::vector<PeriodReport> results(cells);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    const auto work = [&] {
        for (std::size_t k = next++; k < cells; k = next++) {
            try {
                const std::size_t row = k / s_list.size();
                const std::size_t col = k % s_list.size();
                results[k] = evaluate_period(X, jets[col], MultiPoly::monomial(monos[row]), opts);
            } catch (...) {
                std::lock_guard<std::mutex> g(failure_lock);
                if (!failure)
                    failure = std::current_exception();
                next = cells;
            }
        }
    };
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);

    for (std::size_t row = 0; row < monos.size(); ++row) {
        auto& r = out.rows[row];
        r.monomial = monos[row];
        r.vanishes = true;
        for (std::size_t col = 0; col < s_list.size(); ++col) {
            const auto& rep = results[row * s_list.size() + col];
            r.values.push_back(rep.total);
            r.vanishes = r.vanishes && rep.vanishes(opts.vanish_tol);
        }
    }
    return out;
}

} // namespace rcp
