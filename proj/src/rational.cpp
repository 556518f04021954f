#include "oujordan/rational.hpp"

namespace oujordan {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::BadSelection: return "BadSelection";
    case ErrorCode::NonSquareSelection: return "NonSquareSelection";
    case ErrorCode::ZeroDiagonal: return "ZeroDiagonal";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::BadRational: return "BadRational";
    case ErrorCode::MismatchWithClosedForm: return "MismatchWithClosedForm";
    case ErrorCode::GradeEqualsLevel: return "GradeEqualsLevel";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ObstructedRHS: return "ObstructedRHS";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::EigenCheckFailed: return "EigenCheckFailed";
    case ErrorCode::ChainCheckFailed: return "ChainCheckFailed";
    case ErrorCode::KernelCheckFailed: return "KernelCheckFailed";
    case ErrorCode::StepMatrixMismatch: return "StepMatrixMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::SumMismatch: return "SumMismatch";
    case ErrorCode::TheoryMismatch: return "TheoryMismatch";
    case ErrorCode::OutOfTheoryScope: return "OutOfTheoryScope";
    case ErrorCode::VertexNotFound: return "VertexNotFound";
    }
    return "UnknownError";
}

Rational parse_rational(std::string_view text) {
    const auto bad = [&] { return Error(ErrorCode::BadRational, "expected \"p\" or \"p/q\" with q > 0, got \"" + std::string(text) + "\""); };
    if (text.empty()) throw bad();

    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    const std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (num_part.empty() || den_part.empty()) throw bad();

    Integer num, den;
    try {
        num = Integer(std::string(num_part));
        den = Integer(std::string(den_part));
    } catch (const std::exception&) {
        throw bad();
    }
    if (den <= 0) throw bad();
    // Construction from the integer pair canonicalizes (string construction
    // of mpq does not).
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    return value.str();
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

Integer double_factorial(long n) {
    Integer result = 1;
    for (long i = n; i > 1; i -= 2) result *= i;
    return result;
}

Integer factorial(long n) {
    Integer result = 1;
    for (long i = 2; i <= n; ++i) result *= i;
    return result;
}

Rational rational_pow(const Rational& base, long exponent) {
    if (exponent < 0) throw Error(ErrorCode::BadIndex, "negative exponent");
    Rational result = 1;
    for (long i = 0; i < exponent; ++i) result *= base;
    return result;
}

} // namespace oujordan
