#pragma once

// Closed-form area generating functions of level-m polyominoes with cheesy
// blocks, m = 1, 2, 3.  The coefficient tables are transcribed data; the
// polynomial text they were copied from is kept next to each table so a
// mismatch against the transfer counts can be traced to a single entry.

#include <stdexcept>
#include <string>
#include <vector>

#include "cheesy/polynomial.hpp"
#include "cheesy/rational_function.hpp"

namespace cheesy {

namespace detail {

// q(1-6q+11q^2-6q^3+2q^4)
inline const std::vector<long> kLevel1Num = {0, 1, -6, 11, -6, 2};
// 1-9q+27q^2-32q^3+13q^4-3q^5-q^6
inline const std::vector<long> kLevel1Den = {1, -9, 27, -32, 13, -3, -1};

// q (1-13q+70q^2-202q^3+336q^4-317q^5+143q^6+18q^7-84q^8
//    +11q^9+227q^{10}-375q^{11}+267q^{12}-165q^{13}+134q^{14}-21q^{15}+4q^{16}
//    -124q^{17}+98q^{18}-12q^{19}+28q^{20}-16q^{21})
inline const std::vector<long> kLevel2Num = {
    0,    1,    -13,  70,  -202, 336, -317, 143, 18,  -84, 11, 227,
    -375, 267,  -165, 134, -21,  4,   -124, 98,  -12, 28,  -16};
// 1-16q+107q^2-391q^3+850q^4-1108q^5+797q^6-169q^7-266q^8
//  +317q^9+159q^{10}-913q^{11}+1081q^{12}-672q^{13}+446q^{14}-268q^{15}
//  +7q^{16}-158q^{17}+404q^{18}-222q^{19}+42q^{20}-70q^{21}+34q^{22}
inline const std::vector<long> kLevel2Den = {
    1,   -16,  107,  -391, 850, -1108, 797, -169, -266, 317, 159, -913,
    1081, -672, 446, -268, 7,   -158,  404, -222, 42,   -70, 34};

// q (1-24q+264q^2-1766q^3+8033q^4-26297q^5+63860q^6
//    -116445q^7+157849q^8-148533q^9+61825q^{10}+99443q^{11}
//    -308464q^{12}+519182q^{13}-655900q^{14}+618461q^{15}-344081q^{16}
//    -101610q^{17}+519331q^{18}-707969q^{19}+601249q^{20}-284943q^{21}
//    -68043q^{22}+297023q^{23}-346370q^{24}+265550q^{25}-140577q^{26}
//    +31503q^{27}+64681q^{28}-166424q^{29}+234520q^{30}-218182q^{31}
//    +130432q^{32}-29144q^{33}-33391q^{34}+38482q^{35}-12237q^{36}-2050q^{37}
//    -6144q^{38}+18593q^{39}-21514q^{40}+11634q^{41}+3351q^{42}-13907q^{43}
//    +12096q^{44}+2302q^{45}-8825q^{46}+570q^{47}+4681q^{48}-1695q^{49}
//    -1519q^{50}+1290q^{51}+64q^{52}-224q^{53}+44q^{54}-12q^{55})
inline const std::vector<long> kLevel3Num = {
    0,
    1,       -24,     264,     -1766,   8033,    -26297,  63860,
    -116445, 157849,  -148533, 61825,   99443,
    -308464, 519182,  -655900, 618461,  -344081,
    -101610, 519331,  -707969, 601249,  -284943,
    -68043,  297023,  -346370, 265550,  -140577,
    31503,   64681,   -166424, 234520,  -218182,
    130432,  -29144,  -33391,  38482,   -12237,  -2050,
    -6144,   18593,   -21514,  11634,   3351,    -13907,
    12096,   2302,    -8825,   570,     4681,    -1695,
    -1519,   1290,    64,      -224,    44,      -12};
// 1-27q+334q^2-2515q^3+12906q^4-47836q^5+132248q^6
//  -276956q^7+438796q^8-508406q^9+365771q^{10}+36865q^{11}
//  -648120q^{12}+1344653q^{13}-1932847q^{14}+2126787q^{15}-1632701q^{16}
//  +408884q^{17}+1117382q^{18}-2223607q^{19}+2392085q^{20}-1636807q^{21}
//  +418146q^{22}+665251q^{23}-1211688q^{24}+1191386q^{25}-838060q^{26}
//  +416174q^{27}-41907q^{28}-323733q^{29}+664097q^{30}-810808q^{31}
//  +657803q^{32}-319442q^{33}+14159q^{34}+120746q^{35}-95202q^{36}
//  +22341q^{37}-7930q^{38}+47294q^{39}-74720q^{40}+62640q^{41}-19120q^{42}
//  -28394q^{43}+46822q^{44}-21864q^{45}-18416q^{46}+20930q^{47}+6617q^{48}
//  -14093q^{49}+982q^{50}+5867q^{51}-2682q^{52}-642q^{53}+608q^{54}
//  -88q^{55}+12q^{56}
inline const std::vector<long> kLevel3Den = {
    1,        -27,      334,      -2515,   12906,   -47836,  132248,
    -276956,  438796,   -508406,  365771,  36865,
    -648120,  1344653,  -1932847, 2126787, -1632701,
    408884,   1117382,  -2223607, 2392085, -1636807,
    418146,   665251,   -1211688, 1191386, -838060,
    416174,   -41907,   -323733,  664097,  -810808,
    657803,   -319442,  14159,    120746,  -95202,
    22341,    -7930,    47294,    -74720,  62640,   -19120,
    -28394,   46822,    -21864,   -18416,  20930,   6617,
    -14093,   982,      5867,     -2682,   -642,    608,
    -88,      12};

inline IntPolynomial to_poly(const std::vector<long>& v) {
    std::vector<BigInt> c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return IntPolynomial(std::move(c));
}

}  // namespace detail

/// Area generating function of level `level` polyominoes with cheesy blocks.
inline RationalFunction closed_form_gf(int level) {
    switch (level) {
        case 1: return {detail::to_poly(detail::kLevel1Num), detail::to_poly(detail::kLevel1Den)};
        case 2: return {detail::to_poly(detail::kLevel2Num), detail::to_poly(detail::kLevel2Den)};
        case 3: return {detail::to_poly(detail::kLevel3Num), detail::to_poly(detail::kLevel3Den)};
        default: throw std::invalid_argument("no closed form for level " + std::to_string(level));
    }
}

}  // namespace cheesy
