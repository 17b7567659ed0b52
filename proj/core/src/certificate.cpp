#include "dpz/certificate.hpp"

#include <array>
#include <utility>

#include "dpz/errors.hpp"

namespace dpz {

namespace {

template <typename E, std::size_t N>
using Table = std::array<std::pair<E, std::string_view>, N>;

constexpr Table<Verdict, 3> kVerdicts{{
    {Verdict::Reducible, "Reducible"},
    {Verdict::Irreducible, "Irreducible"},
    {Verdict::Unknown, "Unknown"},
}};

constexpr Table<CertificateKind, 10> kKinds{{
    {CertificateKind::None, "None"},
    {CertificateKind::FixedNormPlus1, "FixedNormPlus1"},
    {CertificateKind::FixedHyperbolicPair, "FixedHyperbolicPair"},
    {CertificateKind::SwappedOrFixedMinus1Pair, "SwappedOrFixedMinus1Pair"},
    {CertificateKind::FixedNormMinus1, "FixedNormMinus1"},
    {CertificateKind::AntiFixedNormMinus1, "AntiFixedNormMinus1"},
    {CertificateKind::EvenFixedLatticeObstruction, "EvenFixedLatticeObstruction"},
    {CertificateKind::Mod2Obstruction, "Mod2Obstruction"},
    {CertificateKind::AntiFixedObstruction, "AntiFixedObstruction"},
    {CertificateKind::DefiniteSearchObstruction, "DefiniteSearchObstruction"},
}};

constexpr Table<Criterion, 5> kCriteria{{
    {Criterion::FixedNormPlus1, "fixed_norm_plus1"},
    {Criterion::FixedHyperbolicPair, "hyperbolic_pair"},
    {Criterion::FixedNormMinus1, "fixed_norm_minus1"},
    {Criterion::AntiFixedNormMinus1, "antifixed_norm_minus1"},
    {Criterion::SwappedMinus1Pair, "swapped_minus1_pair"},
}};

constexpr Table<ObstructionCheck, 9> kChecks{{
    {ObstructionCheck::PlusEven, "plus_even"},
    {ObstructionCheck::MinusEven, "minus_even"},
    {ObstructionCheck::PlusGramEven, "plus_gram_even"},
    {ObstructionCheck::PlusDefiniteNoNorm, "plus_definite_no_norm"},
    {ObstructionCheck::MinusDefiniteNoNorm, "minus_definite_no_norm"},
    {ObstructionCheck::PlusDefiniteAnisotropic, "plus_definite_anisotropic"},
    {ObstructionCheck::PairMinusDefinite, "pair_minus_definite"},
    {ObstructionCheck::PairPlusDefinite, "pair_plus_definite"},
    {ObstructionCheck::PairComplete, "pair_complete"},
}};

template <typename E, std::size_t N>
std::string_view name_of(const Table<E, N>& t, E e) {
  for (const auto& [k, v] : t)
    if (k == e) return v;
  return "?";
}

template <typename E, std::size_t N>
E parse(const Table<E, N>& t, std::string_view s, const char* what) {
  for (const auto& [k, v] : t)
    if (v == s) return k;
  throw InputError(std::string("unknown ") + what + ": " + std::string(s));
}

}  // namespace

std::string_view to_string(Verdict v) { return name_of(kVerdicts, v); }
std::string_view to_string(CertificateKind k) { return name_of(kKinds, k); }
std::string_view to_string(Criterion c) { return name_of(kCriteria, c); }
std::string_view to_string(ObstructionCheck c) { return name_of(kChecks, c); }
Verdict verdict_from_string(std::string_view s) { return parse(kVerdicts, s, "verdict"); }
CertificateKind certificate_kind_from_string(std::string_view s) { return parse(kKinds, s, "certificate kind"); }
Criterion criterion_from_string(std::string_view s) { return parse(kCriteria, s, "criterion"); }
ObstructionCheck obstruction_check_from_string(std::string_view s) { return parse(kChecks, s, "obstruction check"); }

}  // namespace dpz
