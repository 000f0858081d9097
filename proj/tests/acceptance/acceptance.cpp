// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <string>

#include <hahn/selftest/suites.hpp>

namespace
{

using hahn::selftest::suite_result;

bool line(int criterion, bool ok, const std::string &text)
{
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, text.c_str());
    std::fflush(stdout);
    return ok;
}

std::string describe(const suite_result &r)
{
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s: %llu samples, %llu failures, %.2f s", r.name.c_str(),
                  static_cast<unsigned long long>(r.samples), static_cast<unsigned long long>(r.failures), r.seconds);
    std::string out = buf;
    if (r.first_failure) {
        out += " (first: " + *r.first_failure + ")";
    }
    return out;
}

} // namespace

int main()
{
    namespace st = hahn::selftest;
    bool all_ok = true;

    const auto start = std::chrono::steady_clock::now();
    const auto first = st::run("all");
    const double first_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    for (const auto &r : first) {
        bool ok = r.ok();
        std::string text = describe(r);
        if (r.criterion == 1) {
            ok = ok && r.seconds < 30;
            text += ", limit 30 s";
        }
        all_ok = line(r.criterion, ok, text) && all_ok;
    }

    // Determinism: a second full run must produce the same report.
    const auto second = st::run("all");
    const bool same = st::report(first).dump() == st::report(second).dump();
    char buf[160];
    std::snprintf(buf, sizeof(buf), "determinism: reports %s, full run %.1f s, limit 300 s",
                  same ? "identical" : "differ", first_seconds);
    all_ok = line(10, same && first_seconds < 300, buf) && all_ok;

    std::printf("%s\n", all_ok ? "all criteria passed" : "some criteria failed");
    return all_ok ? 0 : 1;
}
