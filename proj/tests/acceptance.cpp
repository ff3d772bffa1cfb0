#include <cstdio>
#include <exception>

#include "rcperiod/verify.hpp"

int main()
{
    int failed = 0;
    const auto& names = rcp::criterion_names();
    for (int id = 1; id <= static_cast<int>(names.size()); ++id) {
        rcp::CriterionResult r;
        try {
            r = rcp::run_criterion(id);
        } catch (const std::exception& e) {
            r.id = id;
            r.name = names[static_cast<std::size_t>(id - 1)];
            r.detail = std::string("error: ") + e.what();
        }
        std::printf("%s\n", rcp::format_result(r).c_str());
        std::fflush(stdout);
        failed += r.passed ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(names.size()) - failed, names.size());
    return failed == 0 ? 0 : 1;
}
