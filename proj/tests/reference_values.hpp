// Frozen reference values for the unit tests.
//
// Generated by tests/oracle/gen_specfun_refs.py and
// tests/oracle/gen_kernel_refs.py (mpmath 1.3, printed to 17 digits).
// Regenerate with:  python3 tests/oracle/gen_specfun_refs.py
//                   python3 tests/oracle/gen_kernel_refs.py
// Do not edit the numbers by hand.
#pragma once
#include "hardedge/types.hpp"

namespace hardedge::testref {

// --- log_gamma ---
constexpr Complex kLogGamma_3_4i{-1.7566267846037841, 4.7426644380346579};
constexpr Complex kLogGamma_m2p5_1i{-2.3441906524655926, -8.3041279866579259};
constexpr Complex kLogGamma_0p25_m0p75i{-0.16972508567707299, 1.3396434429923603};
constexpr Complex kLogGamma_m0p5_40i{-65.601872111602248, 105.97292419339480};
constexpr Complex kLogGamma_12_0i{17.502307845873886, 0.0};
// --- bessel_j ---
constexpr double kJ_0_0p5 = 0.93846980724081290;
constexpr double kJp_0_0p5 = -0.24226845767487389;
constexpr double kJ_0_4 = -0.39714980986384737;
constexpr double kJp_0_4 = 0.066043328023549136;
constexpr double kJ_0_11 = -0.17119030040719609;
constexpr double kJp_0_11 = 0.17678529895672150;
constexpr double kJ_0_13 = 0.20692610237706781;
constexpr double kJp_0_13 = 0.070318052121778371;
constexpr double kJ_0_40 = 0.0073668905842372896;
constexpr double kJp_0_40 = -0.12603831803758500;
constexpr double kJ_0_95 = 0.081811967783384144;
constexpr double kJp_0_95 = 0.0023925612997269056;
constexpr double kJ_1_0p5 = 0.24226845767487389;
constexpr double kJp_1_0p5 = 0.45393289189106513;
constexpr double kJ_1_4 = -0.066043328023549136;
constexpr double kJp_1_4 = -0.38063897785796009;
constexpr double kJ_1_11 = -0.17678529895672150;
constexpr double kJp_1_11 = -0.15511890959294868;
constexpr double kJ_1_13 = -0.070318052121778371;
constexpr double kJp_1_13 = 0.21233518330951230;
constexpr double kJ_1_40 = 0.12603831803758500;
constexpr double kJp_1_40 = 0.0042159326332976646;
constexpr double kJ_1_95 = -0.0023925612997269056;
constexpr double kJp_1_95 = 0.081837152639170743;
constexpr double kJ_half_0p5 = 0.54097378993452809;
constexpr double kJp_half_0p5 = 0.44927209030887679;
constexpr double kJ_half_4 = -0.30192051329163945;
constexpr double kJp_half_4 = -0.22302601251572388;
constexpr double kJ_half_11 = -0.24056889072320312;
constexpr double kJp_half_11 = 0.011999645261031889;
constexpr double kJ_half_13 = 0.092980175853725431;
constexpr double kJp_half_13 = 0.19723578778672862;
constexpr double kJ_half_40 = 0.094000962389533578;
constexpr double kJp_half_40 = -0.085313667706264591;
constexpr double kJ_half_95 = 0.055932643481494091;
constexpr double kJp_half_95 = 0.059478522521984428;
constexpr double kJ_2p5_0p5 = 0.0092364078193797245;
constexpr double kJp_2p5_0p5 = 0.045519660528752680;
constexpr double kJ_2p5_4 = 0.44088497455734117;
constexpr double kJp_2p5_4 = -0.090267160744069276;
constexpr double kJ_2p5_11 = 0.23431400122155967;
constexpr double kJp_2p5_11 = -0.076187776935168320;
constexpr double kJ_2p5_13 = -0.13767085904841080;
constexpr double kJp_2p5_13 = -0.16718446197535249;
constexpr double kJ_2p5_40 = -0.087514311409323546;
constexpr double kJp_2p5_40 = 0.091958324199216482;
constexpr double kJ_2p5_95 = -0.057801616329532132;
constexpr double kJp_2p5_95 = -0.057663045021304666;
constexpr Complex kJ_0_2_3i{-0.46951719204407019, -4.3137884094689224};
constexpr Complex kJ_1_m1_5i{-19.249347323683048, 14.669122344321996};
constexpr Complex kJp_0_2_3i{-3.7806829613712999, 0.81278094107357802};
// --- airy ---
constexpr double kAi_m12 = -0.066555175054373129;
constexpr double kAip_m12 = 1.0231104533679707;
constexpr double kAi_m7p2 = 0.30585152336862657;
constexpr double kAip_m7p2 = -0.41412428115703516;
constexpr double kAi_m3 = -0.37881429367765807;
constexpr double kAip_m3 = 0.31458376921659881;
constexpr double kAi_m1 = 0.53556088329235212;
constexpr double kAip_m1 = -0.010160567116645209;
constexpr double kAi_0 = 0.35502805388781724;
constexpr double kAip_0 = -0.25881940379280680;
constexpr double kAi_1 = 0.13529241631288142;
constexpr double kAip_1 = -0.15914744129679321;
constexpr double kAi_2p1 = 0.029952602115866527;
constexpr double kAip_2p1 = -0.046455994032674599;
constexpr double kAi_3 = 0.0065911393574607191;
constexpr double kAip_3 = -0.011912976705951318;
constexpr double kAi_6 = 9.9476943602528896e-6;
constexpr double kAip_6 = -2.4765200397034955e-5;
constexpr double kAi_9 = 2.4711684308724898e-9;
constexpr double kAip_9 = -7.4806413896589464e-9;
constexpr double kAi_12 = 1.3931846888753608e-13;
constexpr double kAip_12 = -4.8547365549853085e-13;
constexpr Complex kAi_2_2i{-0.063959228274258275, -0.0021206787026224184};
constexpr Complex kAi_m5_1i{1.6998161280439565, 0.54118970278972421};
constexpr Complex kAi_m2_8i{258590.85443309965, -168015.43681804831};
constexpr Complex kAip_m5_1i{0.94523896326924246, -3.8158433243585242};
constexpr Complex kAi_0_6i{94.814180082035604, -158.72123921734280};
// --- wright_bessel: J_{a,b}(x) = sum (-x)^j/(j! Gamma(a+jb)) ---
constexpr double kWright_2_1_3 = 0.088003064612533165;
constexpr double kWright_1p5_0p5_2 = 0.12906854085646486;
constexpr double kWright_2_3_10 = 0.59320810626146004;
constexpr double kWright_0p75_0p25_1 = 0.21771052353604738;
// --- Bessel kernel  K(x,y) = (y/x)^{a/2} [J_a(rx) ry J_a'(ry) - J_a(ry) rx J_a'(rx)] / (2(x-y)),  r* = sqrt(*) ---
constexpr double kBesselK_a0_1_2 = 0.17157233693895691;
constexpr double kBesselK_a0_4_2 = 0.11813503980749383;
constexpr double kBesselK_a1_1_2 = 0.048548683058174733;
constexpr double kBesselK_a1_3_0p5 = 0.011589248980025056;
constexpr double kBesselK_a2_2_2diag = 0.0040478231555970221;
constexpr double kBesselK_a0_1_1diag = 0.19479300438203078;
constexpr double kBesselK_a0_150_140 = 0.012593262382792498;
constexpr double kBesselK_am05_1_2 = 0.14034416109807484;
constexpr double kBesselKreg_am05_2_0 = 0.22232544943040466;
// --- Airy kernel  K(x,y) = (Ai(x)Ai'(y) - Ai(y)Ai'(x))/(x-y) ---
constexpr double kAiryK_m2_1 = 0.039945689051187241;
constexpr double kAiryK_m3_m1 = 0.082314896627711358;
constexpr double kAiryK_1_1diag = 0.0070238701595382204;
constexpr double kAiryK_0_0diag = 0.066987483779663974;
constexpr double kAiryK_2_3 = 6.6124229864699075e-5;
// --- residue series: (1/pi) sum (-1)^k 4^k / Gamma(k+1)^2 = J_0(4)/pi ---
constexpr double kJ0_4_over_pi = -0.12641671077567536;
// --- heat-flow composition fixture: Hermite-like check value ---
constexpr double kHeatX6_1p3_0p2 = -0.81949100000000000;
// --- Marchenko-Pastur Stieltjes (k=1, b=4): G(z) = (1 - sqrt(1-4/z))/2 ---
constexpr Complex kMPG_m1{-0.61803398874989485, 0.0};
constexpr Complex kMPG_2_1i{0.27639320225002103, -0.44721359549995794};
constexpr Complex kMPG_5_0i{0.27639320225002103, 0.0};
// --- GUE semicircle cdf at 0.5 (radius 2) ---
constexpr double kSemicircleCdf_0p5 = 0.65748117876285372;

// --- product-kernel values (residue series + mpmath line quadrature) ---
constexpr double kGinK_000_1_1 = 0.26926555419063729;
constexpr double kGinK_000_1_2 = 0.12016983829831396;
constexpr double kGinK_000_0_1p5 = 0.15225688646955122;
constexpr double kGinK_0000_1_1 = 0.19699113891707896;
constexpr double kGinK_012_1p5_0p7 = 0.088046480451697319;
constexpr double kGinK_000_1_v2 = 2.3298563713746689;
constexpr double kGinKn5_000_1_1 = 0.26040799766697293;
constexpr double kTruncK_0000_mu2_1_1 = 0.29625209247022609;
constexpr double kTruncK_0000_mu67_1_1 = 0.79055066950106822;
// --- Muttalib-Borodin kernel (Wright u-integral) ---
constexpr double kMBK_t2_a1_1_1 = 0.42364465553891518;
constexpr double kMBK_t2_a1_0p7_1p3 = 0.66358857266110077;
constexpr double kMBK_t2_a1_2_0p5 = 0.091927263087104237;
constexpr double kMBK_t1p5_am025_1_1 = 0.33639508915279782;
constexpr double kMBK_t3_a0p5_0p8_1p2 = 0.62173271573659816;
// --- finite Laguerre kernel ---
constexpr double kLueK_n8_a0p5_1_1p5 = 0.0036618612329993848;
constexpr double kLueK_n8_a0_0p5_0p5 = 3.5532010879395285;
constexpr double kLueK_n30_a0_2_2p1 = 0.70254548720265326;
// --- regularized Bessel kernel near y = 0 (alpha = -1/2, x = 1) ---
constexpr double kBesselKreg_am05_1_0 = 0.26784853340116379;
constexpr double kBesselKreg_am05_1_v2 = 0.26746811687152930;
constexpr double kBesselKreg_am05_1_v3 = 0.26781047586732277;
constexpr double kBesselKreg_am05_1_v4 = 0.26784472748893508;
// --- Airy kernel diagonal at 0.5 (supercritical reference point) ---
constexpr double kAiryK_0p5_0p5diag = 0.023743784061464177;
// --- Gaussian perturbation transform (literal imaginary-axis form) ---
constexpr double kPerturbBessel_s1_1_1 = 0.15781729105167649;
constexpr double kPerturbAiry_s0p5_0p5_0p5 = 0.022917627998351078;

}  // namespace hardedge::testref
