#include "chowgamma/report.hpp"

#include <algorithm>
#include <cctype>

namespace chowgamma {

bool Report::passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const CheckRecord& c) { return c.pass; });
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [](const CheckRecord& c) { return !c.pass; }));
}

void Report::add(std::string id, bool pass, std::string lhs, std::string rhs, std::string residual,
                 std::string note) {
    checks_.push_back({std::move(id), pass, std::move(lhs), std::move(rhs), std::move(residual), std::move(note)});
}

void Report::append(const Report& other, const std::string& prefix) {
    for (CheckRecord c : other.checks_) {
        c.id = prefix + c.id;
        checks_.push_back(std::move(c));
    }
}

bool natural_less(const std::string& a, const std::string& b) {
    auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (digit(a[i]) && digit(b[j])) {
            std::size_t ei = i, ej = j;
            while (ei < a.size() && digit(a[ei])) ++ei;
            while (ej < b.size() && digit(b[ej])) ++ej;
            std::size_t si = a.find_first_not_of('0', i), sj = b.find_first_not_of('0', j);
            si = std::min(si, ei);
            sj = std::min(sj, ej);
            if (ei - si != ej - sj) return ei - si < ej - sj;
            int c = a.compare(si, ei - si, b, sj, ej - sj);
            if (c != 0) return c < 0;
            if (ei - i != ej - j) return ei - i < ej - j;
            i = ei;
            j = ej;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

void Report::sort_by_id() {
    std::stable_sort(checks_.begin(), checks_.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return natural_less(a.id, b.id); });
}

}  // namespace chowgamma
