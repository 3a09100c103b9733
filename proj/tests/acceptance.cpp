#include <iostream>

#include "z4v/verify.hpp"

int main() {
    auto results = z4v::acceptance_checks();
    bool failed = false;
    int i = 0;
    for (const auto& r : results) {
        ++i;
        std::cout << "criterion " << i << " " << r.name << ": " << z4v::status_name(r.status) << "\n";
        for (const auto& n : r.notes) std::cout << "    " << n << "\n";
        failed = failed || r.status == z4v::Status::fail;
    }
    return failed ? 1 : 0;
}
