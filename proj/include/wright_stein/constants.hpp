#pragma once

namespace wright_stein::constants {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kInvPi = 0.318309886183790671537767526745028724;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;

inline constexpr double kGammaOneThird = 2.67893853470774763365569294097467764;
inline constexpr double kGammaTwoThirds = 1.35411793942640041694528802815451378;
inline constexpr double kGammaFourThirds = 0.892979511569249211218564313658225880;

inline constexpr double kCbrt3 = 1.44224957030740838232163831078010958;    // 3^{1/3}
inline constexpr double kCbrt9 = 2.08008382305190411453005682435788539;    // 3^{2/3}
inline constexpr double kSixthRoot3 = 1.20093695517600272667546538734954285;  // 3^{1/6}
inline constexpr double kSqrt3 = 1.73205080756887729352744634150587237;

// Airy initial values: Ai(0) = 1/(3^{2/3} Gamma(2/3)), Ai'(0) = -1/(3^{1/3} Gamma(1/3)).
inline constexpr double kAiryAi0 = 0.355028053887817239260063186004183176;
inline constexpr double kAiryAiPrime0 = -0.258819403792806798405183560189203964;
// Bi(0) = 1/(3^{1/6} Gamma(2/3)), Bi'(0) = 3^{1/6}/Gamma(1/3).
inline constexpr double kAiryBi0 = 0.614926627446000735150922369093613554;
inline constexpr double kAiryBiPrime0 = 0.448288357353826357914823710398828390;

}  // namespace wright_stein::constants
