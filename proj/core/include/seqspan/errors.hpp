#pragma once

#include <stdexcept>
#include <string>

namespace seqspan {

enum class errc {
    no_polynomial_for_degree,
    primitivity_check_failed,
    division_by_zero,
    degree_not_divisor,
    log_of_zero,
    gamma_zero,
    bad_exponent,
    gcd_violation,
    value_not_binary,
    not_mersenne_prime,
    no_matching_beta,
    no_unit_element,
    period_mismatch,
    index_out_of_range,
    internal_check_failed,
    infeasible,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::no_polynomial_for_degree: return "NoPolynomialForDegree";
        case errc::primitivity_check_failed: return "PrimitivityCheckFailed";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::degree_not_divisor: return "DegreeNotDivisor";
        case errc::log_of_zero: return "LogOfZero";
        case errc::gamma_zero: return "GammaZero";
        case errc::bad_exponent: return "BadExponent";
        case errc::gcd_violation: return "GcdViolation";
        case errc::value_not_binary: return "ValueNotBinary";
        case errc::not_mersenne_prime: return "NotMersennePrime";
        case errc::no_matching_beta: return "NoMatchingBeta";
        case errc::no_unit_element: return "NoUnitElement";
        case errc::period_mismatch: return "PeriodMismatch";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::internal_check_failed: return "InternalCheckFailed";
        case errc::infeasible: return "Infeasible";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

inline void check(bool ok, errc code, const std::string& what) {
    if (!ok) raise(code, what);
}

}  // namespace seqspan
