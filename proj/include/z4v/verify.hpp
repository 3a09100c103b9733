#pragma once

#include <json.hpp>
#include <random>
#include <string>
#include <vector>

#include "z4v/linear_code.hpp"

namespace z4v {

enum class Status { pass, partial, fail };

std::string_view status_name(Status s);

struct CheckResult {
    std::string name;
    Status status = Status::pass;
    std::vector<std::string> notes;
    nlohmann::json payload = nlohmann::json::object();

    // A false hard check fails the result; a false soft check (published
    // coefficients, printed parameters) only downgrades it to partial.
    bool require(bool ok, const std::string& what);
    bool expect(bool ok, const std::string& what);
};

CheckResult combine(std::string name, const std::vector<CheckResult>& parts);

// Random generator matrix with 1..n+1 rows, entries uniform over R.
RCode random_r_code(std::size_t n, std::mt19937_64& rng);

CheckResult check_qr_extension();          // extended QR code at p = 7
CheckResult check_cyclic_n7();             // the self-dual cyclic code of length 7
CheckResult check_isodual_examples();      // Constructions A, B, C on the worked examples
CheckResult check_macwilliams(std::size_t trials = 50, std::uint64_t seed = 20240607);
CheckResult check_counts();
CheckResult check_factorizations();
CheckResult check_cyclic_tables(std::uint64_t cap = default_cap);
CheckResult check_qr_suites();
CheckResult check_invariants(std::uint64_t seed = 7);

// The nine acceptance checks in order.
std::vector<CheckResult> acceptance_checks();

// example1, example2, example4, counts, properties. ParseError otherwise.
CheckResult verify_target(const std::string& name);

nlohmann::json to_json(const CheckResult& r);

} // namespace z4v
