// Generated by tools/gen_unicode_tables.py -- do not edit by hand.
#pragma once

#include <cstdint>

namespace forge::unicode_tables {

// Codepoints whose single-character NFKC normalization differs from
// the character itself, paired with byte offsets into kCompatBlob.
inline constexpr std::uint32_t kCompatKeys[2969] = {
    0x00A0, 0x00A8, 0x00AA, 0x00AF, 0x00B2, 0x00B3, 0x00B4, 0x00B5, 0x00B8, 0x00B9, 0x00BA, 0x00BC,
    0x00BD, 0x00BE, 0x0132, 0x0133, 0x013F, 0x0140, 0x0149, 0x017F, 0x01C4, 0x01C5, 0x01C6, 0x01C7,
    0x01C8, 0x01C9, 0x01CA, 0x01CB, 0x01CC, 0x01F1, 0x01F2, 0x01F3, 0x02B0, 0x02B1, 0x02B2, 0x02B3,
    0x02B4, 0x02B5, 0x02B6, 0x02B7, 0x02B8, 0x02D8, 0x02D9, 0x02DA, 0x02DB, 0x02DC, 0x02DD, 0x02E0,
    0x02E1, 0x02E2, 0x02E3, 0x02E4, 0x0340, 0x0341, 0x0343, 0x0344, 0x0374, 0x037A, 0x037E, 0x0384,
    0x0385, 0x0387, 0x03D0, 0x03D1, 0x03D2, 0x03D3, 0x03D4, 0x03D5, 0x03D6, 0x03F0, 0x03F1, 0x03F2,
    0x03F4, 0x03F5, 0x03F9, 0x0587, 0x0675, 0x0676, 0x0677, 0x0678, 0x0958, 0x0959, 0x095A, 0x095B,
    0x095C, 0x095D, 0x095E, 0x095F, 0x09DC, 0x09DD, 0x09DF, 0x0A33, 0x0A36, 0x0A59, 0x0A5A, 0x0A5B,
    0x0A5E, 0x0B5C, 0x0B5D, 0x0E33, 0x0EB3, 0x0EDC, 0x0EDD, 0x0F0C, 0x0F43, 0x0F4D, 0x0F52, 0x0F57,
    0x0F5C, 0x0F69, 0x0F73, 0x0F75, 0x0F76, 0x0F77, 0x0F78, 0x0F79, 0x0F81, 0x0F93, 0x0F9D, 0x0FA2,
    0x0FA7, 0x0FAC, 0x0FB9, 0x10FC, 0x1D2C, 0x1D2D, 0x1D2E, 0x1D30, 0x1D31, 0x1D32, 0x1D33, 0x1D34,
    0x1D35, 0x1D36, 0x1D37, 0x1D38, 0x1D39, 0x1D3A, 0x1D3C, 0x1D3D, 0x1D3E, 0x1D3F, 0x1D40, 0x1D41,
    0x1D42, 0x1D43, 0x1D44, 0x1D45, 0x1D46, 0x1D47, 0x1D48, 0x1D49, 0x1D4A, 0x1D4B, 0x1D4C, 0x1D4D,
    0x1D4F, 0x1D50, 0x1D51, 0x1D52, 0x1D53, 0x1D54, 0x1D55, 0x1D56, 0x1D57, 0x1D58, 0x1D59, 0x1D5A,
    0x1D5B, 0x1D5C, 0x1D5D, 0x1D5E, 0x1D5F, 0x1D60, 0x1D61, 0x1D62, 0x1D63, 0x1D64, 0x1D65, 0x1D66,
    0x1D67, 0x1D68, 0x1D69, 0x1D6A, 0x1D78, 0x1D9B, 0x1D9C, 0x1D9D, 0x1D9E, 0x1D9F, 0x1DA0, 0x1DA1,
    0x1DA2, 0x1DA3, 0x1DA4, 0x1DA5, 0x1DA6, 0x1DA7, 0x1DA8, 0x1DA9, 0x1DAA, 0x1DAB, 0x1DAC, 0x1DAD,
    0x1DAE, 0x1DAF, 0x1DB0, 0x1DB1, 0x1DB2, 0x1DB3, 0x1DB4, 0x1DB5, 0x1DB6, 0x1DB7, 0x1DB8, 0x1DB9,
    0x1DBA, 0x1DBB, 0x1DBC, 0x1DBD, 0x1DBE, 0x1DBF, 0x1E9A, 0x1E9B, 0x1F71, 0x1F73, 0x1F75, 0x1F77,
    0x1F79, 0x1F7B, 0x1F7D, 0x1FBB, 0x1FBD, 0x1FBE, 0x1FBF, 0x1FC0, 0x1FC1, 0x1FC9, 0x1FCB, 0x1FCD,
    0x1FCE, 0x1FCF, 0x1FD3, 0x1FDB, 0x1FDD, 0x1FDE, 0x1FDF, 0x1FE3, 0x1FEB, 0x1FED, 0x1FEE, 0x1FEF,
    0x1FF9, 0x1FFB, 0x1FFD, 0x1FFE, 0x2000, 0x2001, 0x2002, 0x2003, 0x2004, 0x2005, 0x2006, 0x2007,
    0x2008, 0x2009, 0x200A, 0x2011, 0x2017, 0x2024, 0x2025, 0x2026, 0x202F, 0x2033, 0x2034, 0x2036,
    0x2037, 0x203C, 0x203E, 0x2047, 0x2048, 0x2049, 0x2057, 0x205F, 0x2070, 0x2071, 0x2074, 0x2075,
    0x2076, 0x2077, 0x2078, 0x2079, 0x207A, 0x207B, 0x207C, 0x207D, 0x207E, 0x207F, 0x2080, 0x2081,
    0x2082, 0x2083, 0x2084, 0x2085, 0x2086, 0x2087, 0x2088, 0x2089, 0x208A, 0x208B, 0x208C, 0x208D,
    0x208E, 0x2090, 0x2091, 0x2092, 0x2093, 0x2094, 0x2095, 0x2096, 0x2097, 0x2098, 0x2099, 0x209A,
    0x209B, 0x209C, 0x20A8, 0x2100, 0x2101, 0x2102, 0x2103, 0x2105, 0x2106, 0x2107, 0x2109, 0x210A,
    0x210B, 0x210C, 0x210D, 0x210E, 0x210F, 0x2110, 0x2111, 0x2112, 0x2113, 0x2115, 0x2116, 0x2119,
    0x211A, 0x211B, 0x211C, 0x211D, 0x2120, 0x2121, 0x2122, 0x2124, 0x2126, 0x2128, 0x212A, 0x212B,
    0x212C, 0x212D, 0x212F, 0x2130, 0x2131, 0x2133, 0x2134, 0x2135, 0x2136, 0x2137, 0x2138, 0x2139,
    0x213B, 0x213C, 0x213D, 0x213E, 0x213F, 0x2140, 0x2145, 0x2146, 0x2147, 0x2148, 0x2149, 0x2150,
    0x2151, 0x2152, 0x2153, 0x2154, 0x2155, 0x2156, 0x2157, 0x2158, 0x2159, 0x215A, 0x215B, 0x215C,
    0x215D, 0x215E, 0x215F, 0x2160, 0x2161, 0x2162, 0x2163, 0x2164, 0x2165, 0x2166, 0x2167, 0x2168,
    0x2169, 0x216A, 0x216B, 0x216C, 0x216D, 0x216E, 0x216F, 0x2170, 0x2171, 0x2172, 0x2173, 0x2174,
    0x2175, 0x2176, 0x2177, 0x2178, 0x2179, 0x217A, 0x217B, 0x217C, 0x217D, 0x217E, 0x217F, 0x2189,
    0x222C, 0x222D, 0x222F, 0x2230, 0x2329, 0x232A, 0x2460, 0x2461, 0x2462, 0x2463, 0x2464, 0x2465,
    0x2466, 0x2467, 0x2468, 0x2469, 0x246A, 0x246B, 0x246C, 0x246D, 0x246E, 0x246F, 0x2470, 0x2471,
    0x2472, 0x2473, 0x2474, 0x2475, 0x2476, 0x2477, 0x2478, 0x2479, 0x247A, 0x247B, 0x247C, 0x247D,
    0x247E, 0x247F, 0x2480, 0x2481, 0x2482, 0x2483, 0x2484, 0x2485, 0x2486, 0x2487, 0x2488, 0x2489,
    0x248A, 0x248B, 0x248C, 0x248D, 0x248E, 0x248F, 0x2490, 0x2491, 0x2492, 0x2493, 0x2494, 0x2495,
    0x2496, 0x2497, 0x2498, 0x2499, 0x249A, 0x249B, 0x249C, 0x249D, 0x249E, 0x249F, 0x24A0, 0x24A1,
    0x24A2, 0x24A3, 0x24A4, 0x24A5, 0x24A6, 0x24A7, 0x24A8, 0x24A9, 0x24AA, 0x24AB, 0x24AC, 0x24AD,
    0x24AE, 0x24AF, 0x24B0, 0x24B1, 0x24B2, 0x24B3, 0x24B4, 0x24B5, 0x24B6, 0x24B7, 0x24B8, 0x24B9,
    0x24BA, 0x24BB, 0x24BC, 0x24BD, 0x24BE, 0x24BF, 0x24C0, 0x24C1, 0x24C2, 0x24C3, 0x24C4, 0x24C5,
    0x24C6, 0x24C7, 0x24C8, 0x24C9, 0x24CA, 0x24CB, 0x24CC, 0x24CD, 0x24CE, 0x24CF, 0x24D0, 0x24D1,
    0x24D2, 0x24D3, 0x24D4, 0x24D5, 0x24D6, 0x24D7, 0x24D8, 0x24D9, 0x24DA, 0x24DB, 0x24DC, 0x24DD,
    0x24DE, 0x24DF, 0x24E0, 0x24E1, 0x24E2, 0x24E3, 0x24E4, 0x24E5, 0x24E6, 0x24E7, 0x24E8, 0x24E9,
    0x24EA, 0x2A0C, 0x2A74, 0x2A75, 0x2A76, 0x2ADC, 0x2C7C, 0x2C7D, 0x2D6F, 0x2E9F, 0x2EF3, 0x2F00,
    0x2F01, 0x2F02, 0x2F03, 0x2F04, 0x2F05, 0x2F06, 0x2F07, 0x2F08, 0x2F09, 0x2F0A, 0x2F0B, 0x2F0C,
    0x2F0D, 0x2F0E, 0x2F0F, 0x2F10, 0x2F11, 0x2F12, 0x2F13, 0x2F14, 0x2F15, 0x2F16, 0x2F17, 0x2F18,
    0x2F19, 0x2F1A, 0x2F1B, 0x2F1C, 0x2F1D, 0x2F1E, 0x2F1F, 0x2F20, 0x2F21, 0x2F22, 0x2F23, 0x2F24,
    0x2F25, 0x2F26, 0x2F27, 0x2F28, 0x2F29, 0x2F2A, 0x2F2B, 0x2F2C, 0x2F2D, 0x2F2E, 0x2F2F, 0x2F30,
    0x2F31, 0x2F32, 0x2F33, 0x2F34, 0x2F35, 0x2F36, 0x2F37, 0x2F38, 0x2F39, 0x2F3A, 0x2F3B, 0x2F3C,
    0x2F3D, 0x2F3E, 0x2F3F, 0x2F40, 0x2F41, 0x2F42, 0x2F43, 0x2F44, 0x2F45, 0x2F46, 0x2F47, 0x2F48,
    0x2F49, 0x2F4A, 0x2F4B, 0x2F4C, 0x2F4D, 0x2F4E, 0x2F4F, 0x2F50, 0x2F51, 0x2F52, 0x2F53, 0x2F54,
    0x2F55, 0x2F56, 0x2F57, 0x2F58, 0x2F59, 0x2F5A, 0x2F5B, 0x2F5C, 0x2F5D, 0x2F5E, 0x2F5F, 0x2F60,
    0x2F61, 0x2F62, 0x2F63, 0x2F64, 0x2F65, 0x2F66, 0x2F67, 0x2F68, 0x2F69, 0x2F6A, 0x2F6B, 0x2F6C,
    0x2F6D, 0x2F6E, 0x2F6F, 0x2F70, 0x2F71, 0x2F72, 0x2F73, 0x2F74, 0x2F75, 0x2F76, 0x2F77, 0x2F78,
    0x2F79, 0x2F7A, 0x2F7B, 0x2F7C, 0x2F7D, 0x2F7E, 0x2F7F, 0x2F80, 0x2F81, 0x2F82, 0x2F83, 0x2F84,
    0x2F85, 0x2F86, 0x2F87, 0x2F88, 0x2F89, 0x2F8A, 0x2F8B, 0x2F8C, 0x2F8D, 0x2F8E, 0x2F8F, 0x2F90,
    0x2F91, 0x2F92, 0x2F93, 0x2F94, 0x2F95, 0x2F96, 0x2F97, 0x2F98, 0x2F99, 0x2F9A, 0x2F9B, 0x2F9C,
    0x2F9D, 0x2F9E, 0x2F9F, 0x2FA0, 0x2FA1, 0x2FA2, 0x2FA3, 0x2FA4, 0x2FA5, 0x2FA6, 0x2FA7, 0x2FA8,
    0x2FA9, 0x2FAA, 0x2FAB, 0x2FAC, 0x2FAD, 0x2FAE, 0x2FAF, 0x2FB0, 0x2FB1, 0x2FB2, 0x2FB3, 0x2FB4,
    0x2FB5, 0x2FB6, 0x2FB7, 0x2FB8, 0x2FB9, 0x2FBA, 0x2FBB, 0x2FBC, 0x2FBD, 0x2FBE, 0x2FBF, 0x2FC0,
    0x2FC1, 0x2FC2, 0x2FC3, 0x2FC4, 0x2FC5, 0x2FC6, 0x2FC7, 0x2FC8, 0x2FC9, 0x2FCA, 0x2FCB, 0x2FCC,
    0x2FCD, 0x2FCE, 0x2FCF, 0x2FD0, 0x2FD1, 0x2FD2, 0x2FD3, 0x2FD4, 0x2FD5, 0x3000, 0x3036, 0x3038,
    0x3039, 0x303A, 0x309B, 0x309C, 0x309F, 0x30FF, 0x3131, 0x3132, 0x3133, 0x3134, 0x3135, 0x3136,
    0x3137, 0x3138, 0x3139, 0x313A, 0x313B, 0x313C, 0x313D, 0x313E, 0x313F, 0x3140, 0x3141, 0x3142,
    0x3143, 0x3144, 0x3145, 0x3146, 0x3147, 0x3148, 0x3149, 0x314A, 0x314B, 0x314C, 0x314D, 0x314E,
    0x314F, 0x3150, 0x3151, 0x3152, 0x3153, 0x3154, 0x3155, 0x3156, 0x3157, 0x3158, 0x3159, 0x315A,
    0x315B, 0x315C, 0x315D, 0x315E, 0x315F, 0x3160, 0x3161, 0x3162, 0x3163, 0x3164, 0x3165, 0x3166,
    0x3167, 0x3168, 0x3169, 0x316A, 0x316B, 0x316C, 0x316D, 0x316E, 0x316F, 0x3170, 0x3171, 0x3172,
    0x3173, 0x3174, 0x3175, 0x3176, 0x3177, 0x3178, 0x3179, 0x317A, 0x317B, 0x317C, 0x317D, 0x317E,
    0x317F, 0x3180, 0x3181, 0x3182, 0x3183, 0x3184, 0x3185, 0x3186, 0x3187, 0x3188, 0x3189, 0x318A,
    0x318B, 0x318C, 0x318D, 0x318E, 0x3192, 0x3193, 0x3194, 0x3195, 0x3196, 0x3197, 0x3198, 0x3199,
    0x319A, 0x319B, 0x319C, 0x319D, 0x319E, 0x319F, 0x3200, 0x3201, 0x3202, 0x3203, 0x3204, 0x3205,
    0x3206, 0x3207, 0x3208, 0x3209, 0x320A, 0x320B, 0x320C, 0x320D, 0x320E, 0x320F, 0x3210, 0x3211,
    0x3212, 0x3213, 0x3214, 0x3215, 0x3216, 0x3217, 0x3218, 0x3219, 0x321A, 0x321B, 0x321C, 0x321D,
    0x321E, 0x3220, 0x3221, 0x3222, 0x3223, 0x3224, 0x3225, 0x3226, 0x3227, 0x3228, 0x3229, 0x322A,
    0x322B, 0x322C, 0x322D, 0x322E, 0x322F, 0x3230, 0x3231, 0x3232, 0x3233, 0x3234, 0x3235, 0x3236,
    0x3237, 0x3238, 0x3239, 0x323A, 0x323B, 0x323C, 0x323D, 0x323E, 0x323F, 0x3240, 0x3241, 0x3242,
    0x3243, 0x3244, 0x3245, 0x3246, 0x3247, 0x3250, 0x3251, 0x3252, 0x3253, 0x3254, 0x3255, 0x3256,
    0x3257, 0x3258, 0x3259, 0x325A, 0x325B, 0x325C, 0x325D, 0x325E, 0x325F, 0x3260, 0x3261, 0x3262,
    0x3263, 0x3264, 0x3265, 0x3266, 0x3267, 0x3268, 0x3269, 0x326A, 0x326B, 0x326C, 0x326D, 0x326E,
    0x326F, 0x3270, 0x3271, 0x3272, 0x3273, 0x3274, 0x3275, 0x3276, 0x3277, 0x3278, 0x3279, 0x327A,
    0x327B, 0x327C, 0x327D, 0x327E, 0x3280, 0x3281, 0x3282, 0x3283, 0x3284, 0x3285, 0x3286, 0x3287,
    0x3288, 0x3289, 0x328A, 0x328B, 0x328C, 0x328D, 0x328E, 0x328F, 0x3290, 0x3291, 0x3292, 0x3293,
    0x3294, 0x3295, 0x3296, 0x3297, 0x3298, 0x3299, 0x329A, 0x329B, 0x329C, 0x329D, 0x329E, 0x329F,
    0x32A0, 0x32A1, 0x32A2, 0x32A3, 0x32A4, 0x32A5, 0x32A6, 0x32A7, 0x32A8, 0x32A9, 0x32AA, 0x32AB,
    0x32AC, 0x32AD, 0x32AE, 0x32AF, 0x32B0, 0x32B1, 0x32B2, 0x32B3, 0x32B4, 0x32B5, 0x32B6, 0x32B7,
    0x32B8, 0x32B9, 0x32BA, 0x32BB, 0x32BC, 0x32BD, 0x32BE, 0x32BF, 0x32C0, 0x32C1, 0x32C2, 0x32C3,
    0x32C4, 0x32C5, 0x32C6, 0x32C7, 0x32C8, 0x32C9, 0x32CA, 0x32CB, 0x32CC, 0x32CD, 0x32CE, 0x32CF,
    0x32D0, 0x32D1, 0x32D2, 0x32D3, 0x32D4, 0x32D5, 0x32D6, 0x32D7, 0x32D8, 0x32D9, 0x32DA, 0x32DB,
    0x32DC, 0x32DD, 0x32DE, 0x32DF, 0x32E0, 0x32E1, 0x32E2, 0x32E3, 0x32E4, 0x32E5, 0x32E6, 0x32E7,
    0x32E8, 0x32E9, 0x32EA, 0x32EB, 0x32EC, 0x32ED, 0x32EE, 0x32EF, 0x32F0, 0x32F1, 0x32F2, 0x32F3,
    0x32F4, 0x32F5, 0x32F6, 0x32F7, 0x32F8, 0x32F9, 0x32FA, 0x32FB, 0x32FC, 0x32FD, 0x32FE, 0x32FF,
    0x3300, 0x3301, 0x3302, 0x3303, 0x3304, 0x3305, 0x3306, 0x3307, 0x3308, 0x3309, 0x330A, 0x330B,
    0x330C, 0x330D, 0x330E, 0x330F, 0x3310, 0x3311, 0x3312, 0x3313, 0x3314, 0x3315, 0x3316, 0x3317,
    0x3318, 0x3319, 0x331A, 0x331B, 0x331C, 0x331D, 0x331E, 0x331F, 0x3320, 0x3321, 0x3322, 0x3323,
    0x3324, 0x3325, 0x3326, 0x3327, 0x3328, 0x3329, 0x332A, 0x332B, 0x332C, 0x332D, 0x332E, 0x332F,
    0x3330, 0x3331, 0x3332, 0x3333, 0x3334, 0x3335, 0x3336, 0x3337, 0x3338, 0x3339, 0x333A, 0x333B,
    0x333C, 0x333D, 0x333E, 0x333F, 0x3340, 0x3341, 0x3342, 0x3343, 0x3344, 0x3345, 0x3346, 0x3347,
    0x3348, 0x3349, 0x334A, 0x334B, 0x334C, 0x334D, 0x334E, 0x334F, 0x3350, 0x3351, 0x3352, 0x3353,
    0x3354, 0x3355, 0x3356, 0x3357, 0x3358, 0x3359, 0x335A, 0x335B, 0x335C, 0x335D, 0x335E, 0x335F,
    0x3360, 0x3361, 0x3362, 0x3363, 0x3364, 0x3365, 0x3366, 0x3367, 0x3368, 0x3369, 0x336A, 0x336B,
    0x336C, 0x336D, 0x336E, 0x336F, 0x3370, 0x3371, 0x3372, 0x3373, 0x3374, 0x3375, 0x3376, 0x3377,
    0x3378, 0x3379, 0x337A, 0x337B, 0x337C, 0x337D, 0x337E, 0x337F, 0x3380, 0x3381, 0x3382, 0x3383,
    0x3384, 0x3385, 0x3386, 0x3387, 0x3388, 0x3389, 0x338A, 0x338B, 0x338C, 0x338D, 0x338E, 0x338F,
    0x3390, 0x3391, 0x3392, 0x3393, 0x3394, 0x3395, 0x3396, 0x3397, 0x3398, 0x3399, 0x339A, 0x339B,
    0x339C, 0x339D, 0x339E, 0x339F, 0x33A0, 0x33A1, 0x33A2, 0x33A3, 0x33A4, 0x33A5, 0x33A6, 0x33A7,
    0x33A8, 0x33A9, 0x33AA, 0x33AB, 0x33AC, 0x33AD, 0x33AE, 0x33AF, 0x33B0, 0x33B1, 0x33B2, 0x33B3,
    0x33B4, 0x33B5, 0x33B6, 0x33B7, 0x33B8, 0x33B9, 0x33BA, 0x33BB, 0x33BC, 0x33BD, 0x33BE, 0x33BF,
    0x33C0, 0x33C1, 0x33C2, 0x33C3, 0x33C4, 0x33C5, 0x33C6, 0x33C7, 0x33C8, 0x33C9, 0x33CA, 0x33CB,
    0x33CC, 0x33CD, 0x33CE, 0x33CF, 0x33D0, 0x33D1, 0x33D2, 0x33D3, 0x33D4, 0x33D5, 0x33D6, 0x33D7,
    0x33D8, 0x33D9, 0x33DA, 0x33DB, 0x33DC, 0x33DD, 0x33DE, 0x33DF, 0x33E0, 0x33E1, 0x33E2, 0x33E3,
    0x33E4, 0x33E5, 0x33E6, 0x33E7, 0x33E8, 0x33E9, 0x33EA, 0x33EB, 0x33EC, 0x33ED, 0x33EE, 0x33EF,
    0x33F0, 0x33F1, 0x33F2, 0x33F3, 0x33F4, 0x33F5, 0x33F6, 0x33F7, 0x33F8, 0x33F9, 0x33FA, 0x33FB,
    0x33FC, 0x33FD, 0x33FE, 0x33FF, 0xA69C, 0xA69D, 0xA770, 0xA7F8, 0xA7F9, 0xAB5C, 0xAB5D, 0xAB5E,
    0xAB5F, 0xAB69, 0xF900, 0xF901, 0xF902, 0xF903, 0xF904, 0xF905, 0xF906, 0xF907, 0xF908, 0xF909,
    0xF90A, 0xF90B, 0xF90C, 0xF90D, 0xF90E, 0xF90F, 0xF910, 0xF911, 0xF912, 0xF913, 0xF914, 0xF915,
    0xF916, 0xF917, 0xF918, 0xF919, 0xF91A, 0xF91B, 0xF91C, 0xF91D, 0xF91E, 0xF91F, 0xF920, 0xF921,
    0xF922, 0xF923, 0xF924, 0xF925, 0xF926, 0xF927, 0xF928, 0xF929, 0xF92A, 0xF92B, 0xF92C, 0xF92D,
    0xF92E, 0xF92F, 0xF930, 0xF931, 0xF932, 0xF933, 0xF934, 0xF935, 0xF936, 0xF937, 0xF938, 0xF939,
    0xF93A, 0xF93B, 0xF93C, 0xF93D, 0xF93E, 0xF93F, 0xF940, 0xF941, 0xF942, 0xF943, 0xF944, 0xF945,
    0xF946, 0xF947, 0xF948, 0xF949, 0xF94A, 0xF94B, 0xF94C, 0xF94D, 0xF94E, 0xF94F, 0xF950, 0xF951,
    0xF952, 0xF953, 0xF954, 0xF955, 0xF956, 0xF957, 0xF958, 0xF959, 0xF95A, 0xF95B, 0xF95C, 0xF95D,
    0xF95E, 0xF95F, 0xF960, 0xF961, 0xF962, 0xF963, 0xF964, 0xF965, 0xF966, 0xF967, 0xF968, 0xF969,
    0xF96A, 0xF96B, 0xF96C, 0xF96D, 0xF96E, 0xF96F, 0xF970, 0xF971, 0xF972, 0xF973, 0xF974, 0xF975,
    0xF976, 0xF977, 0xF978, 0xF979, 0xF97A, 0xF97B, 0xF97C, 0xF97D, 0xF97E, 0xF97F, 0xF980, 0xF981,
    0xF982, 0xF983, 0xF984, 0xF985, 0xF986, 0xF987, 0xF988, 0xF989, 0xF98A, 0xF98B, 0xF98C, 0xF98D,
    0xF98E, 0xF98F, 0xF990, 0xF991, 0xF992, 0xF993, 0xF994, 0xF995, 0xF996, 0xF997, 0xF998, 0xF999,
    0xF99A, 0xF99B, 0xF99C, 0xF99D, 0xF99E, 0xF99F, 0xF9A0, 0xF9A1, 0xF9A2, 0xF9A3, 0xF9A4, 0xF9A5,
    0xF9A6, 0xF9A7, 0xF9A8, 0xF9A9, 0xF9AA, 0xF9AB, 0xF9AC, 0xF9AD, 0xF9AE, 0xF9AF, 0xF9B0, 0xF9B1,
    0xF9B2, 0xF9B3, 0xF9B4, 0xF9B5, 0xF9B6, 0xF9B7, 0xF9B8, 0xF9B9, 0xF9BA, 0xF9BB, 0xF9BC, 0xF9BD,
    0xF9BE, 0xF9BF, 0xF9C0, 0xF9C1, 0xF9C2, 0xF9C3, 0xF9C4, 0xF9C5, 0xF9C6, 0xF9C7, 0xF9C8, 0xF9C9,
    0xF9CA, 0xF9CB, 0xF9CC, 0xF9CD, 0xF9CE, 0xF9CF, 0xF9D0, 0xF9D1, 0xF9D2, 0xF9D3, 0xF9D4, 0xF9D5,
    0xF9D6, 0xF9D7, 0xF9D8, 0xF9D9, 0xF9DA, 0xF9DB, 0xF9DC, 0xF9DD, 0xF9DE, 0xF9DF, 0xF9E0, 0xF9E1,
    0xF9E2, 0xF9E3, 0xF9E4, 0xF9E5, 0xF9E6, 0xF9E7, 0xF9E8, 0xF9E9, 0xF9EA, 0xF9EB, 0xF9EC, 0xF9ED,
    0xF9EE, 0xF9EF, 0xF9F0, 0xF9F1, 0xF9F2, 0xF9F3, 0xF9F4, 0xF9F5, 0xF9F6, 0xF9F7, 0xF9F8, 0xF9F9,
    0xF9FA, 0xF9FB, 0xF9FC, 0xF9FD, 0xF9FE, 0xF9FF, 0xFA00, 0xFA01, 0xFA02, 0xFA03, 0xFA04, 0xFA05,
    0xFA06, 0xFA07, 0xFA08, 0xFA09, 0xFA0A, 0xFA0B, 0xFA0C, 0xFA0D, 0xFA10, 0xFA12, 0xFA15, 0xFA16,
    0xFA17, 0xFA18, 0xFA19, 0xFA1A, 0xFA1B, 0xFA1C, 0xFA1D, 0xFA1E, 0xFA20, 0xFA22, 0xFA25, 0xFA26,
    0xFA2A, 0xFA2B, 0xFA2C, 0xFA2D, 0xFA2E, 0xFA2F, 0xFA30, 0xFA31, 0xFA32, 0xFA33, 0xFA34, 0xFA35,
    0xFA36, 0xFA37, 0xFA38, 0xFA39, 0xFA3A, 0xFA3B, 0xFA3C, 0xFA3D, 0xFA3E, 0xFA3F, 0xFA40, 0xFA41,
    0xFA42, 0xFA43, 0xFA44, 0xFA45, 0xFA46, 0xFA47, 0xFA48, 0xFA49, 0xFA4A, 0xFA4B, 0xFA4C, 0xFA4D,
    0xFA4E, 0xFA4F, 0xFA50, 0xFA51, 0xFA52, 0xFA53, 0xFA54, 0xFA55, 0xFA56, 0xFA57, 0xFA58, 0xFA59,
    0xFA5A, 0xFA5B, 0xFA5C, 0xFA5D, 0xFA5E, 0xFA5F, 0xFA60, 0xFA61, 0xFA62, 0xFA63, 0xFA64, 0xFA65,
    0xFA66, 0xFA67, 0xFA68, 0xFA69, 0xFA6A, 0xFA6B, 0xFA6C, 0xFA6D, 0xFA70, 0xFA71, 0xFA72, 0xFA73,
    0xFA74, 0xFA75, 0xFA76, 0xFA77, 0xFA78, 0xFA79, 0xFA7A, 0xFA7B, 0xFA7C, 0xFA7D, 0xFA7E, 0xFA7F,
    0xFA80, 0xFA81, 0xFA82, 0xFA83, 0xFA84, 0xFA85, 0xFA86, 0xFA87, 0xFA88, 0xFA89, 0xFA8A, 0xFA8B,
    0xFA8C, 0xFA8D, 0xFA8E, 0xFA8F, 0xFA90, 0xFA91, 0xFA92, 0xFA93, 0xFA94, 0xFA95, 0xFA96, 0xFA97,
    0xFA98, 0xFA99, 0xFA9A, 0xFA9B, 0xFA9C, 0xFA9D, 0xFA9E, 0xFA9F, 0xFAA0, 0xFAA1, 0xFAA2, 0xFAA3,
    0xFAA4, 0xFAA5, 0xFAA6, 0xFAA7, 0xFAA8, 0xFAA9, 0xFAAA, 0xFAAB, 0xFAAC, 0xFAAD, 0xFAAE, 0xFAAF,
    0xFAB0, 0xFAB1, 0xFAB2, 0xFAB3, 0xFAB4, 0xFAB5, 0xFAB6, 0xFAB7, 0xFAB8, 0xFAB9, 0xFABA, 0xFABB,
    0xFABC, 0xFABD, 0xFABE, 0xFABF, 0xFAC0, 0xFAC1, 0xFAC2, 0xFAC3, 0xFAC4, 0xFAC5, 0xFAC6, 0xFAC7,
    0xFAC8, 0xFAC9, 0xFACA, 0xFACB, 0xFACC, 0xFACD, 0xFACE, 0xFACF, 0xFAD0, 0xFAD1, 0xFAD2, 0xFAD3,
    0xFAD4, 0xFAD5, 0xFAD6, 0xFAD7, 0xFAD8, 0xFAD9, 0xFB00, 0xFB01, 0xFB02, 0xFB03, 0xFB04, 0xFB05,
    0xFB06, 0xFB13, 0xFB14, 0xFB15, 0xFB16, 0xFB17, 0xFB1D, 0xFB1F, 0xFB20, 0xFB21, 0xFB22, 0xFB23,
    0xFB24, 0xFB25, 0xFB26, 0xFB27, 0xFB28, 0xFB29, 0xFB2A, 0xFB2B, 0xFB2C, 0xFB2D, 0xFB2E, 0xFB2F,
    0xFB30, 0xFB31, 0xFB32, 0xFB33, 0xFB34, 0xFB35, 0xFB36, 0xFB38, 0xFB39, 0xFB3A, 0xFB3B, 0xFB3C,
    0xFB3E, 0xFB40, 0xFB41, 0xFB43, 0xFB44, 0xFB46, 0xFB47, 0xFB48, 0xFB49, 0xFB4A, 0xFB4B, 0xFB4C,
    0xFB4D, 0xFB4E, 0xFB4F, 0xFB50, 0xFB51, 0xFB52, 0xFB53, 0xFB54, 0xFB55, 0xFB56, 0xFB57, 0xFB58,
    0xFB59, 0xFB5A, 0xFB5B, 0xFB5C, 0xFB5D, 0xFB5E, 0xFB5F, 0xFB60, 0xFB61, 0xFB62, 0xFB63, 0xFB64,
    0xFB65, 0xFB66, 0xFB67, 0xFB68, 0xFB69, 0xFB6A, 0xFB6B, 0xFB6C, 0xFB6D, 0xFB6E, 0xFB6F, 0xFB70,
    0xFB71, 0xFB72, 0xFB73, 0xFB74, 0xFB75, 0xFB76, 0xFB77, 0xFB78, 0xFB79, 0xFB7A, 0xFB7B, 0xFB7C,
    0xFB7D, 0xFB7E, 0xFB7F, 0xFB80, 0xFB81, 0xFB82, 0xFB83, 0xFB84, 0xFB85, 0xFB86, 0xFB87, 0xFB88,
    0xFB89, 0xFB8A, 0xFB8B, 0xFB8C, 0xFB8D, 0xFB8E, 0xFB8F, 0xFB90, 0xFB91, 0xFB92, 0xFB93, 0xFB94,
    0xFB95, 0xFB96, 0xFB97, 0xFB98, 0xFB99, 0xFB9A, 0xFB9B, 0xFB9C, 0xFB9D, 0xFB9E, 0xFB9F, 0xFBA0,
    0xFBA1, 0xFBA2, 0xFBA3, 0xFBA4, 0xFBA5, 0xFBA6, 0xFBA7, 0xFBA8, 0xFBA9, 0xFBAA, 0xFBAB, 0xFBAC,
    0xFBAD, 0xFBAE, 0xFBAF, 0xFBB0, 0xFBB1, 0xFBD3, 0xFBD4, 0xFBD5, 0xFBD6, 0xFBD7, 0xFBD8, 0xFBD9,
    0xFBDA, 0xFBDB, 0xFBDC, 0xFBDD, 0xFBDE, 0xFBDF, 0xFBE0, 0xFBE1, 0xFBE2, 0xFBE3, 0xFBE4, 0xFBE5,
    0xFBE6, 0xFBE7, 0xFBE8, 0xFBE9, 0xFBEA, 0xFBEB, 0xFBEC, 0xFBED, 0xFBEE, 0xFBEF, 0xFBF0, 0xFBF1,
    0xFBF2, 0xFBF3, 0xFBF4, 0xFBF5, 0xFBF6, 0xFBF7, 0xFBF8, 0xFBF9, 0xFBFA, 0xFBFB, 0xFBFC, 0xFBFD,
    0xFBFE, 0xFBFF, 0xFC00, 0xFC01, 0xFC02, 0xFC03, 0xFC04, 0xFC05, 0xFC06, 0xFC07, 0xFC08, 0xFC09,
    0xFC0A, 0xFC0B, 0xFC0C, 0xFC0D, 0xFC0E, 0xFC0F, 0xFC10, 0xFC11, 0xFC12, 0xFC13, 0xFC14, 0xFC15,
    0xFC16, 0xFC17, 0xFC18, 0xFC19, 0xFC1A, 0xFC1B, 0xFC1C, 0xFC1D, 0xFC1E, 0xFC1F, 0xFC20, 0xFC21,
    0xFC22, 0xFC23, 0xFC24, 0xFC25, 0xFC26, 0xFC27, 0xFC28, 0xFC29, 0xFC2A, 0xFC2B, 0xFC2C, 0xFC2D,
    0xFC2E, 0xFC2F, 0xFC30, 0xFC31, 0xFC32, 0xFC33, 0xFC34, 0xFC35, 0xFC36, 0xFC37, 0xFC38, 0xFC39,
    0xFC3A, 0xFC3B, 0xFC3C, 0xFC3D, 0xFC3E, 0xFC3F, 0xFC40, 0xFC41, 0xFC42, 0xFC43, 0xFC44, 0xFC45,
    0xFC46, 0xFC47, 0xFC48, 0xFC49, 0xFC4A, 0xFC4B, 0xFC4C, 0xFC4D, 0xFC4E, 0xFC4F, 0xFC50, 0xFC51,
    0xFC52, 0xFC53, 0xFC54, 0xFC55, 0xFC56, 0xFC57, 0xFC58, 0xFC59, 0xFC5A, 0xFC5B, 0xFC5C, 0xFC5D,
    0xFC5E, 0xFC5F, 0xFC60, 0xFC61, 0xFC62, 0xFC63, 0xFC64, 0xFC65, 0xFC66, 0xFC67, 0xFC68, 0xFC69,
    0xFC6A, 0xFC6B, 0xFC6C, 0xFC6D, 0xFC6E, 0xFC6F, 0xFC70, 0xFC71, 0xFC72, 0xFC73, 0xFC74, 0xFC75,
    0xFC76, 0xFC77, 0xFC78, 0xFC79, 0xFC7A, 0xFC7B, 0xFC7C, 0xFC7D, 0xFC7E, 0xFC7F, 0xFC80, 0xFC81,
    0xFC82, 0xFC83, 0xFC84, 0xFC85, 0xFC86, 0xFC87, 0xFC88, 0xFC89, 0xFC8A, 0xFC8B, 0xFC8C, 0xFC8D,
    0xFC8E, 0xFC8F, 0xFC90, 0xFC91, 0xFC92, 0xFC93, 0xFC94, 0xFC95, 0xFC96, 0xFC97, 0xFC98, 0xFC99,
    0xFC9A, 0xFC9B, 0xFC9C, 0xFC9D, 0xFC9E, 0xFC9F, 0xFCA0, 0xFCA1, 0xFCA2, 0xFCA3, 0xFCA4, 0xFCA5,
    0xFCA6, 0xFCA7, 0xFCA8, 0xFCA9, 0xFCAA, 0xFCAB, 0xFCAC, 0xFCAD, 0xFCAE, 0xFCAF, 0xFCB0, 0xFCB1,
    0xFCB2, 0xFCB3, 0xFCB4, 0xFCB5, 0xFCB6, 0xFCB7, 0xFCB8, 0xFCB9, 0xFCBA, 0xFCBB, 0xFCBC, 0xFCBD,
    0xFCBE, 0xFCBF, 0xFCC0, 0xFCC1, 0xFCC2, 0xFCC3, 0xFCC4, 0xFCC5, 0xFCC6, 0xFCC7, 0xFCC8, 0xFCC9,
    0xFCCA, 0xFCCB, 0xFCCC, 0xFCCD, 0xFCCE, 0xFCCF, 0xFCD0, 0xFCD1, 0xFCD2, 0xFCD3, 0xFCD4, 0xFCD5,
    0xFCD6, 0xFCD7, 0xFCD8, 0xFCD9, 0xFCDA, 0xFCDB, 0xFCDC, 0xFCDD, 0xFCDE, 0xFCDF, 0xFCE0, 0xFCE1,
    0xFCE2, 0xFCE3, 0xFCE4, 0xFCE5, 0xFCE6, 0xFCE7, 0xFCE8, 0xFCE9, 0xFCEA, 0xFCEB, 0xFCEC, 0xFCED,
    0xFCEE, 0xFCEF, 0xFCF0, 0xFCF1, 0xFCF2, 0xFCF3, 0xFCF4, 0xFCF5, 0xFCF6, 0xFCF7, 0xFCF8, 0xFCF9,
    0xFCFA, 0xFCFB, 0xFCFC, 0xFCFD, 0xFCFE, 0xFCFF, 0xFD00, 0xFD01, 0xFD02, 0xFD03, 0xFD04, 0xFD05,
    0xFD06, 0xFD07, 0xFD08, 0xFD09, 0xFD0A, 0xFD0B, 0xFD0C, 0xFD0D, 0xFD0E, 0xFD0F, 0xFD10, 0xFD11,
    0xFD12, 0xFD13, 0xFD14, 0xFD15, 0xFD16, 0xFD17, 0xFD18, 0xFD19, 0xFD1A, 0xFD1B, 0xFD1C, 0xFD1D,
    0xFD1E, 0xFD1F, 0xFD20, 0xFD21, 0xFD22, 0xFD23, 0xFD24, 0xFD25, 0xFD26, 0xFD27, 0xFD28, 0xFD29,
    0xFD2A, 0xFD2B, 0xFD2C, 0xFD2D, 0xFD2E, 0xFD2F, 0xFD30, 0xFD31, 0xFD32, 0xFD33, 0xFD34, 0xFD35,
    0xFD36, 0xFD37, 0xFD38, 0xFD39, 0xFD3A, 0xFD3B, 0xFD3C, 0xFD3D, 0xFD50, 0xFD51, 0xFD52, 0xFD53,
    0xFD54, 0xFD55, 0xFD56, 0xFD57, 0xFD58, 0xFD59, 0xFD5A, 0xFD5B, 0xFD5C, 0xFD5D, 0xFD5E, 0xFD5F,
    0xFD60, 0xFD61, 0xFD62, 0xFD63, 0xFD64, 0xFD65, 0xFD66, 0xFD67, 0xFD68, 0xFD69, 0xFD6A, 0xFD6B,
    0xFD6C, 0xFD6D, 0xFD6E, 0xFD6F, 0xFD70, 0xFD71, 0xFD72, 0xFD73, 0xFD74, 0xFD75, 0xFD76, 0xFD77,
    0xFD78, 0xFD79, 0xFD7A, 0xFD7B, 0xFD7C, 0xFD7D, 0xFD7E, 0xFD7F, 0xFD80, 0xFD81, 0xFD82, 0xFD83,
    0xFD84, 0xFD85, 0xFD86, 0xFD87, 0xFD88, 0xFD89, 0xFD8A, 0xFD8B, 0xFD8C, 0xFD8D, 0xFD8E, 0xFD8F,
    0xFD92, 0xFD93, 0xFD94, 0xFD95, 0xFD96, 0xFD97, 0xFD98, 0xFD99, 0xFD9A, 0xFD9B, 0xFD9C, 0xFD9D,
    0xFD9E, 0xFD9F, 0xFDA0, 0xFDA1, 0xFDA2, 0xFDA3, 0xFDA4, 0xFDA5, 0xFDA6, 0xFDA7, 0xFDA8, 0xFDA9,
    0xFDAA, 0xFDAB, 0xFDAC, 0xFDAD, 0xFDAE, 0xFDAF, 0xFDB0, 0xFDB1, 0xFDB2, 0xFDB3, 0xFDB4, 0xFDB5,
    0xFDB6, 0xFDB7, 0xFDB8, 0xFDB9, 0xFDBA, 0xFDBB, 0xFDBC, 0xFDBD, 0xFDBE, 0xFDBF, 0xFDC0, 0xFDC1,
    0xFDC2, 0xFDC3, 0xFDC4, 0xFDC5, 0xFDC6, 0xFDC7, 0xFDF0, 0xFDF1, 0xFDF2, 0xFDF3, 0xFDF4, 0xFDF5,
    0xFDF6, 0xFDF7, 0xFDF8, 0xFDF9, 0xFDFA, 0xFDFB, 0xFDFC, 0xFE10, 0xFE11, 0xFE12, 0xFE13, 0xFE14,
    0xFE15, 0xFE16, 0xFE17, 0xFE18, 0xFE19, 0xFE30, 0xFE31, 0xFE32, 0xFE33, 0xFE34, 0xFE35, 0xFE36,
    0xFE37, 0xFE38, 0xFE39, 0xFE3A, 0xFE3B, 0xFE3C, 0xFE3D, 0xFE3E, 0xFE3F, 0xFE40, 0xFE41, 0xFE42,
    0xFE43, 0xFE44, 0xFE47, 0xFE48, 0xFE49, 0xFE4A, 0xFE4B, 0xFE4C, 0xFE4D, 0xFE4E, 0xFE4F, 0xFE50,
    0xFE51, 0xFE52, 0xFE54, 0xFE55, 0xFE56, 0xFE57, 0xFE58, 0xFE59, 0xFE5A, 0xFE5B, 0xFE5C, 0xFE5D,
    0xFE5E, 0xFE5F, 0xFE60, 0xFE61, 0xFE62, 0xFE63, 0xFE64, 0xFE65, 0xFE66, 0xFE68, 0xFE69, 0xFE6A,
    0xFE6B, 0xFE70, 0xFE71, 0xFE72, 0xFE74, 0xFE76, 0xFE77, 0xFE78, 0xFE79, 0xFE7A, 0xFE7B, 0xFE7C,
    0xFE7D, 0xFE7E, 0xFE7F, 0xFE80, 0xFE81, 0xFE82, 0xFE83, 0xFE84, 0xFE85, 0xFE86, 0xFE87, 0xFE88,
    0xFE89, 0xFE8A, 0xFE8B, 0xFE8C, 0xFE8D, 0xFE8E, 0xFE8F, 0xFE90, 0xFE91, 0xFE92, 0xFE93, 0xFE94,
    0xFE95, 0xFE96, 0xFE97, 0xFE98, 0xFE99, 0xFE9A, 0xFE9B, 0xFE9C, 0xFE9D, 0xFE9E, 0xFE9F, 0xFEA0,
    0xFEA1, 0xFEA2, 0xFEA3, 0xFEA4, 0xFEA5, 0xFEA6, 0xFEA7, 0xFEA8, 0xFEA9, 0xFEAA, 0xFEAB, 0xFEAC,
    0xFEAD, 0xFEAE, 0xFEAF, 0xFEB0, 0xFEB1, 0xFEB2, 0xFEB3, 0xFEB4, 0xFEB5, 0xFEB6, 0xFEB7, 0xFEB8,
    0xFEB9, 0xFEBA, 0xFEBB, 0xFEBC, 0xFEBD, 0xFEBE, 0xFEBF, 0xFEC0, 0xFEC1, 0xFEC2, 0xFEC3, 0xFEC4,
    0xFEC5, 0xFEC6, 0xFEC7, 0xFEC8, 0xFEC9, 0xFECA, 0xFECB, 0xFECC, 0xFECD, 0xFECE, 0xFECF, 0xFED0,
    0xFED1, 0xFED2, 0xFED3, 0xFED4, 0xFED5, 0xFED6, 0xFED7, 0xFED8, 0xFED9, 0xFEDA, 0xFEDB, 0xFEDC,
    0xFEDD, 0xFEDE, 0xFEDF, 0xFEE0, 0xFEE1, 0xFEE2, 0xFEE3, 0xFEE4, 0xFEE5, 0xFEE6, 0xFEE7, 0xFEE8,
    0xFEE9, 0xFEEA, 0xFEEB, 0xFEEC, 0xFEED, 0xFEEE, 0xFEEF, 0xFEF0, 0xFEF1, 0xFEF2, 0xFEF3, 0xFEF4,
    0xFEF5, 0xFEF6, 0xFEF7, 0xFEF8, 0xFEF9, 0xFEFA, 0xFEFB, 0xFEFC, 0xFF01, 0xFF02, 0xFF03, 0xFF04,
    0xFF05, 0xFF06, 0xFF07, 0xFF08, 0xFF09, 0xFF0A, 0xFF0B, 0xFF0C, 0xFF0D, 0xFF0E, 0xFF0F, 0xFF10,
    0xFF11, 0xFF12, 0xFF13, 0xFF14, 0xFF15, 0xFF16, 0xFF17, 0xFF18, 0xFF19, 0xFF1A, 0xFF1B, 0xFF1C,
    0xFF1D, 0xFF1E, 0xFF1F, 0xFF20, 0xFF21, 0xFF22, 0xFF23, 0xFF24, 0xFF25, 0xFF26, 0xFF27, 0xFF28,
    0xFF29, 0xFF2A, 0xFF2B, 0xFF2C, 0xFF2D, 0xFF2E, 0xFF2F, 0xFF30, 0xFF31, 0xFF32, 0xFF33, 0xFF34,
    0xFF35, 0xFF36, 0xFF37, 0xFF38, 0xFF39, 0xFF3A, 0xFF3B, 0xFF3C, 0xFF3D, 0xFF3E, 0xFF3F, 0xFF40,
    0xFF41, 0xFF42, 0xFF43, 0xFF44, 0xFF45, 0xFF46, 0xFF47, 0xFF48, 0xFF49, 0xFF4A, 0xFF4B, 0xFF4C,
    0xFF4D, 0xFF4E, 0xFF4F, 0xFF50, 0xFF51, 0xFF52, 0xFF53, 0xFF54, 0xFF55, 0xFF56, 0xFF57, 0xFF58,
    0xFF59, 0xFF5A, 0xFF5B, 0xFF5C, 0xFF5D, 0xFF5E, 0xFF5F, 0xFF60, 0xFF61, 0xFF62, 0xFF63, 0xFF64,
    0xFF65, 0xFF66, 0xFF67, 0xFF68, 0xFF69, 0xFF6A, 0xFF6B, 0xFF6C, 0xFF6D, 0xFF6E, 0xFF6F, 0xFF70,
    0xFF71, 0xFF72, 0xFF73, 0xFF74, 0xFF75, 0xFF76, 0xFF77, 0xFF78, 0xFF79, 0xFF7A, 0xFF7B, 0xFF7C,
    0xFF7D, 0xFF7E, 0xFF7F, 0xFF80, 0xFF81, 0xFF82, 0xFF83, 0xFF84, 0xFF85, 0xFF86, 0xFF87, 0xFF88,
    0xFF89, 0xFF8A, 0xFF8B, 0xFF8C, 0xFF8D, 0xFF8E, 0xFF8F, 0xFF90, 0xFF91, 0xFF92, 0xFF93, 0xFF94,
    0xFF95, 0xFF96, 0xFF97, 0xFF98, 0xFF99, 0xFF9A, 0xFF9B, 0xFF9C, 0xFF9D, 0xFF9E, 0xFF9F, 0xFFA0,
    0xFFA1, 0xFFA2, 0xFFA3, 0xFFA4, 0xFFA5, 0xFFA6, 0xFFA7, 0xFFA8, 0xFFA9, 0xFFAA, 0xFFAB, 0xFFAC,
    0xFFAD, 0xFFAE, 0xFFAF, 0xFFB0, 0xFFB1, 0xFFB2, 0xFFB3, 0xFFB4, 0xFFB5, 0xFFB6, 0xFFB7, 0xFFB8,
    0xFFB9, 0xFFBA, 0xFFBB, 0xFFBC, 0xFFBD, 0xFFBE, 0xFFC2, 0xFFC3, 0xFFC4, 0xFFC5, 0xFFC6, 0xFFC7,
    0xFFCA, 0xFFCB, 0xFFCC, 0xFFCD, 0xFFCE, 0xFFCF, 0xFFD2, 0xFFD3, 0xFFD4, 0xFFD5, 0xFFD6, 0xFFD7,
    0xFFDA, 0xFFDB, 0xFFDC, 0xFFE0, 0xFFE1, 0xFFE2, 0xFFE3, 0xFFE4, 0xFFE5, 0xFFE6, 0xFFE8, 0xFFE9,
    0xFFEA, 0xFFEB, 0xFFEC, 0xFFED, 0xFFEE,
};

inline constexpr std::uint32_t kCompatOffsets[2969] = {
    0, 2, 6, 8, 12, 14, 16, 20, 23, 27, 29, 31,
    37, 43, 49, 52, 55, 59, 63, 67, 69, 73, 77, 81,
    84, 87, 90, 93, 96, 99, 102, 105, 108, 110, 113, 115,
    117, 120, 123, 126, 128, 130, 134, 138, 142, 146, 150, 154,
    157, 159, 161, 163, 166, 169, 172, 175, 180, 183, 187, 189,
    193, 199, 202, 205, 208, 211, 214, 217, 220, 223, 226, 229,
    232, 235, 238, 241, 246, 251, 256, 261, 266, 273, 280, 287,
    294, 301, 308, 315, 322, 329, 336, 343, 350, 357, 364, 371,
    378, 385, 392, 399, 406, 413, 420, 427, 431, 438, 445, 452,
    459, 466, 473, 480, 487, 494, 504, 511, 521, 528, 535, 542,
    549, 556, 563, 570, 574, 576, 579, 581, 583, 585, 588, 590,
    592, 594, 596, 598, 600, 602, 604, 606, 609, 611, 613, 615,
    617, 619, 621, 624, 627, 631, 633, 635, 637, 640, 643, 646,
    648, 650, 652, 655, 657, 660, 664, 668, 670, 672, 674, 678,
    681, 683, 687, 690, 693, 696, 699, 702, 704, 706, 708, 710,
    713, 716, 719, 722, 725, 728, 731, 733, 736, 739, 742, 744,
    747, 750, 753, 756, 759, 762, 766, 769, 772, 776, 779, 782,
    785, 788, 791, 794, 797, 800, 803, 806, 809, 812, 815, 819,
    822, 825, 827, 830, 833, 836, 839, 843, 847, 850, 853, 856,
    859, 862, 865, 868, 871, 875, 878, 882, 886, 892, 895, 898,
    904, 910, 916, 919, 922, 928, 934, 940, 943, 946, 952, 958,
    960, 963, 966, 970, 974, 976, 978, 980, 982, 984, 986, 988,
    990, 992, 994, 996, 1000, 1004, 1006, 1009, 1013, 1015, 1022, 1032,
    1039, 1049, 1052, 1056, 1059, 1062, 1065, 1078, 1080, 1082, 1084, 1086,
    1088, 1090, 1092, 1094, 1096, 1098, 1102, 1104, 1106, 1108, 1110, 1112,
    1114, 1116, 1118, 1120, 1122, 1124, 1126, 1128, 1130, 1132, 1136, 1138,
    1140, 1142, 1144, 1146, 1148, 1150, 1153, 1155, 1157, 1159, 1161, 1163,
    1165, 1167, 1169, 1172, 1176, 1180, 1182, 1186, 1190, 1194, 1197, 1201,
    1203, 1205, 1207, 1209, 1211, 1214, 1216, 1218, 1220, 1222, 1224, 1227,
    1229, 1231, 1233, 1235, 1237, 1240, 1244, 1247, 1249, 1252, 1254, 1256,
    1259, 1261, 1263, 1265, 1267, 1269, 1271, 1273, 1276, 1279, 1282, 1285,
    1287, 1291, 1294, 1297, 1300, 1303, 1307, 1309, 1311, 1313, 1315, 1317,
    1323, 1329, 1336, 1342, 1348, 1354, 1360, 1366, 1372, 1378, 1384, 1390,
    1396, 1402, 1408, 1413, 1415, 1418, 1422, 1425, 1427, 1430, 1434, 1439,
    1442, 1444, 1447, 1451, 1453, 1455, 1457, 1459, 1461, 1464, 1468, 1471,
    1473, 1476, 1480, 1485, 1488, 1490, 1493, 1497, 1499, 1501, 1503, 1505,
    1511, 1518, 1528, 1535, 1545, 1549, 1553, 1555, 1557, 1559, 1561, 1563,
    1565, 1567, 1569, 1571, 1574, 1577, 1580, 1583, 1586, 1589, 1592, 1595,
    1598, 1601, 1604, 1608, 1612, 1616, 1620, 1624, 1628, 1632, 1636, 1640,
    1645, 1650, 1655, 1660, 1665, 1670, 1675, 1680, 1685, 1690, 1695, 1698,
    1701, 1704, 1707, 1710, 1713, 1716, 1719, 1722, 1726, 1730, 1734, 1738,
    1742, 1746, 1750, 1754, 1758, 1762, 1766, 1770, 1774, 1778, 1782, 1786,
    1790, 1794, 1798, 1802, 1806, 1810, 1814, 1818, 1822, 1826, 1830, 1834,
    1838, 1842, 1846, 1850, 1854, 1858, 1862, 1866, 1870, 1872, 1874, 1876,
    1878, 1880, 1882, 1884, 1886, 1888, 1890, 1892, 1894, 1896, 1898, 1900,
    1902, 1904, 1906, 1908, 1910, 1912, 1914, 1916, 1918, 1920, 1922, 1924,
    1926, 1928, 1930, 1932, 1934, 1936, 1938, 1940, 1942, 1944, 1946, 1948,
    1950, 1952, 1954, 1956, 1958, 1960, 1962, 1964, 1966, 1968, 1970, 1972,
    1974, 1976, 1989, 1993, 1996, 2000, 2006, 2008, 2010, 2014, 2018, 2022,
    2026, 2030, 2034, 2038, 2042, 2046, 2050, 2054, 2058, 2062, 2066, 2070,
    2074, 2078, 2082, 2086, 2090, 2094, 2098, 2102, 2106, 2110, 2114, 2118,
    2122, 2126, 2130, 2134, 2138, 2142, 2146, 2150, 2154, 2158, 2162, 2166,
    2170, 2174, 2178, 2182, 2186, 2190, 2194, 2198, 2202, 2206, 2210, 2214,
    2218, 2222, 2226, 2230, 2234, 2238, 2242, 2246, 2250, 2254, 2258, 2262,
    2266, 2270, 2274, 2278, 2282, 2286, 2290, 2294, 2298, 2302, 2306, 2310,
    2314, 2318, 2322, 2326, 2330, 2334, 2338, 2342, 2346, 2350, 2354, 2358,
    2362, 2366, 2370, 2374, 2378, 2382, 2386, 2390, 2394, 2398, 2402, 2406,
    2410, 2414, 2418, 2422, 2426, 2430, 2434, 2438, 2442, 2446, 2450, 2454,
    2458, 2462, 2466, 2470, 2474, 2478, 2482, 2486, 2490, 2494, 2498, 2502,
    2506, 2510, 2514, 2518, 2522, 2526, 2530, 2534, 2538, 2542, 2546, 2550,
    2554, 2558, 2562, 2566, 2570, 2574, 2578, 2582, 2586, 2590, 2594, 2598,
    2602, 2606, 2610, 2614, 2618, 2622, 2626, 2630, 2634, 2638, 2642, 2646,
    2650, 2654, 2658, 2662, 2666, 2670, 2674, 2678, 2682, 2686, 2690, 2694,
    2698, 2702, 2706, 2710, 2714, 2718, 2722, 2726, 2730, 2734, 2738, 2742,
    2746, 2750, 2754, 2758, 2762, 2766, 2770, 2774, 2778, 2782, 2786, 2790,
    2794, 2798, 2802, 2806, 2810, 2814, 2818, 2822, 2826, 2830, 2834, 2838,
    2842, 2846, 2850, 2854, 2858, 2862, 2866, 2870, 2874, 2878, 2880, 2884,
    2888, 2892, 2896, 2901, 2906, 2913, 2920, 2924, 2928, 2932, 2936, 2940,
    2944, 2948, 2952, 2956, 2960, 2964, 2968, 2972, 2976, 2980, 2984, 2988,
    2992, 2996, 3000, 3004, 3008, 3012, 3016, 3020, 3024, 3028, 3032, 3036,
    3040, 3044, 3048, 3052, 3056, 3060, 3064, 3068, 3072, 3076, 3080, 3084,
    3088, 3092, 3096, 3100, 3104, 3108, 3112, 3116, 3120, 3124, 3128, 3132,
    3136, 3140, 3144, 3148, 3152, 3156, 3160, 3164, 3168, 3172, 3176, 3180,
    3184, 3188, 3192, 3196, 3200, 3204, 3208, 3212, 3216, 3220, 3224, 3228,
    3232, 3236, 3240, 3244, 3248, 3252, 3256, 3260, 3264, 3268, 3272, 3276,
    3280, 3284, 3288, 3292, 3296, 3300, 3304, 3308, 3312, 3316, 3320, 3324,
    3328, 3332, 3336, 3340, 3344, 3348, 3352, 3358, 3364, 3370, 3376, 3382,
    3388, 3394, 3400, 3406, 3412, 3418, 3424, 3430, 3436, 3442, 3448, 3454,
    3460, 3466, 3472, 3478, 3484, 3490, 3496, 3502, 3508, 3514, 3520, 3526,
    3535, 3544, 3550, 3556, 3562, 3568, 3574, 3580, 3586, 3592, 3598, 3604,
    3610, 3616, 3622, 3628, 3634, 3640, 3646, 3652, 3658, 3664, 3670, 3676,
    3682, 3688, 3694, 3700, 3706, 3712, 3718, 3724, 3730, 3736, 3742, 3748,
    3754, 3760, 3764, 3768, 3772, 3776, 3780, 3783, 3786, 3789, 3792, 3795,
    3798, 3801, 3804, 3807, 3810, 3813, 3816, 3819, 3822, 3825, 3829, 3833,
    3837, 3841, 3845, 3849, 3853, 3857, 3861, 3865, 3869, 3873, 3877, 3881,
    3885, 3889, 3893, 3897, 3901, 3905, 3909, 3913, 3917, 3921, 3925, 3929,
    3933, 3937, 3944, 3951, 3955, 3959, 3963, 3967, 3971, 3975, 3979, 3983,
    3987, 3991, 3995, 3999, 4003, 4007, 4011, 4015, 4019, 4023, 4027, 4031,
    4035, 4039, 4043, 4047, 4051, 4055, 4059, 4063, 4067, 4071, 4075, 4079,
    4083, 4087, 4091, 4095, 4099, 4103, 4107, 4111, 4115, 4119, 4123, 4127,
    4131, 4135, 4139, 4143, 4147, 4151, 4154, 4157, 4160, 4163, 4166, 4169,
    4172, 4175, 4178, 4181, 4184, 4187, 4190, 4193, 4196, 4201, 4206, 4211,
    4216, 4221, 4226, 4231, 4236, 4241, 4247, 4253, 4259, 4262, 4266, 4269,
    4273, 4277, 4281, 4285, 4289, 4293, 4297, 4301, 4305, 4309, 4313, 4317,
    4321, 4325, 4329, 4333, 4337, 4341, 4345, 4349, 4353, 4357, 4361, 4365,
    4369, 4373, 4377, 4381, 4385, 4389, 4393, 4397, 4401, 4405, 4409, 4413,
    4417, 4421, 4425, 4429, 4433, 4437, 4441, 4445, 4449, 4453, 4457, 4461,
    4468, 4481, 4494, 4507, 4517, 4530, 4540, 4550, 4566, 4579, 4589, 4599,
    4609, 4622, 4635, 4645, 4655, 4662, 4672, 4685, 4698, 4705, 4721, 4740,
    4756, 4766, 4782, 4798, 4811, 4821, 4831, 4841, 4854, 4870, 4883, 4893,
    4903, 4913, 4920, 4927, 4934, 4941, 4951, 4961, 4977, 4987, 5000, 5016,
    5026, 5033, 5040, 5056, 5069, 5085, 5095, 5111, 5118, 5128, 5138, 5148,
    5158, 5168, 5181, 5191, 5198, 5208, 5218, 5228, 5241, 5251, 5261, 5271,
    5287, 5300, 5307, 5323, 5330, 5343, 5356, 5366, 5376, 5386, 5399, 5406,
    5416, 5429, 5436, 5452, 5462, 5467, 5472, 5477, 5482, 5487, 5492, 5497,
    5502, 5507, 5512, 5518, 5524, 5530, 5536, 5542, 5548, 5554, 5560, 5566,
    5572, 5578, 5584, 5590, 5596, 5602, 5606, 5609, 5612, 5616, 5619, 5622,
    5625, 5629, 5633, 5636, 5643, 5650, 5657, 5664, 5677, 5680, 5683, 5687,
    5690, 5693, 5696, 5699, 5702, 5706, 5711, 5714, 5717, 5721, 5725, 5728,
    5731, 5734, 5738, 5742, 5746, 5750, 5754, 5757, 5760, 5763, 5766, 5769,
    5773, 5776, 5779, 5782, 5786, 5790, 5793, 5797, 5801, 5805, 5808, 5812,
    5818, 5825, 5828, 5832, 5836, 5840, 5844, 5852, 5861, 5864, 5867, 5871,
    5874, 5877, 5880, 5884, 5887, 5890, 5893, 5896, 5899, 5903, 5906, 5909,
    5912, 5916, 5920, 5925, 5928, 5931, 5934, 5941, 5945, 5948, 5951, 5954,
    5957, 5960, 5963, 5966, 5969, 5972, 5975, 5979, 5982, 5985, 5989, 5993,
    5996, 6001, 6005, 6008, 6011, 6014, 6017, 6023, 6029, 6034, 6039, 6044,
    6049, 6054, 6059, 6064, 6069, 6074, 6080, 6086, 6092, 6098, 6104, 6110,
    6116, 6122, 6128, 6134, 6140, 6146, 6152, 6158, 6164, 6170, 6176, 6182,
    6188, 6194, 6200, 6206, 6210, 6213, 6216, 6220, 6223, 6226, 6230, 6234,
    6237, 6241, 6244, 6248, 6252, 6256, 6260, 6264, 6268, 6272, 6276, 6280,
    6284, 6288, 6292, 6296, 6300, 6304, 6308, 6312, 6316, 6320, 6324, 6328,
    6332, 6336, 6340, 6344, 6348, 6352, 6356, 6360, 6364, 6368, 6372, 6376,
    6380, 6384, 6388, 6392, 6396, 6400, 6404, 6408, 6412, 6416, 6420, 6424,
    6428, 6432, 6436, 6440, 6444, 6448, 6452, 6456, 6460, 6464, 6468, 6472,
    6476, 6480, 6484, 6488, 6492, 6496, 6500, 6504, 6508, 6512, 6516, 6520,
    6524, 6528, 6532, 6536, 6540, 6544, 6548, 6552, 6556, 6560, 6564, 6568,
    6572, 6576, 6580, 6584, 6588, 6592, 6596, 6600, 6604, 6608, 6612, 6616,
    6620, 6624, 6628, 6632, 6636, 6640, 6644, 6648, 6652, 6656, 6660, 6664,
    6668, 6672, 6676, 6680, 6684, 6688, 6692, 6696, 6700, 6704, 6708, 6712,
    6716, 6720, 6724, 6728, 6732, 6736, 6740, 6744, 6748, 6752, 6756, 6760,
    6764, 6768, 6772, 6776, 6780, 6784, 6788, 6792, 6796, 6800, 6804, 6808,
    6812, 6816, 6820, 6824, 6828, 6832, 6836, 6840, 6844, 6848, 6852, 6856,
    6860, 6864, 6868, 6872, 6876, 6880, 6884, 6888, 6892, 6896, 6900, 6904,
    6908, 6912, 6916, 6920, 6924, 6928, 6932, 6936, 6940, 6944, 6948, 6952,
    6956, 6960, 6964, 6968, 6972, 6976, 6980, 6984, 6988, 6992, 6996, 7000,
    7004, 7008, 7012, 7016, 7020, 7024, 7028, 7032, 7036, 7040, 7044, 7048,
    7052, 7056, 7060, 7064, 7068, 7072, 7076, 7080, 7084, 7088, 7092, 7096,
    7100, 7104, 7108, 7112, 7116, 7120, 7124, 7128, 7132, 7136, 7140, 7144,
    7148, 7152, 7156, 7160, 7164, 7168, 7172, 7176, 7180, 7184, 7188, 7192,
    7196, 7200, 7204, 7208, 7212, 7216, 7220, 7224, 7228, 7232, 7236, 7240,
    7244, 7248, 7252, 7256, 7260, 7264, 7268, 7272, 7276, 7280, 7284, 7288,
    7292, 7296, 7300, 7304, 7308, 7312, 7316, 7320, 7324, 7328, 7332, 7336,
    7340, 7344, 7348, 7352, 7356, 7360, 7364, 7368, 7372, 7376, 7380, 7384,
    7388, 7392, 7396, 7400, 7404, 7408, 7412, 7416, 7420, 7424, 7428, 7432,
    7436, 7440, 7444, 7448, 7452, 7456, 7460, 7464, 7468, 7472, 7476, 7480,
    7484, 7488, 7492, 7496, 7500, 7504, 7508, 7512, 7516, 7520, 7524, 7528,
    7532, 7536, 7540, 7544, 7548, 7552, 7556, 7560, 7564, 7568, 7572, 7576,
    7580, 7584, 7588, 7592, 7596, 7600, 7604, 7608, 7612, 7616, 7620, 7624,
    7628, 7632, 7636, 7640, 7644, 7648, 7652, 7657, 7661, 7665, 7669, 7673,
    7677, 7681, 7685, 7689, 7693, 7697, 7701, 7705, 7709, 7713, 7717, 7721,
    7725, 7729, 7733, 7737, 7741, 7745, 7749, 7753, 7757, 7761, 7765, 7769,
    7773, 7777, 7781, 7785, 7789, 7793, 7797, 7801, 7805, 7809, 7813, 7817,
    7821, 7825, 7829, 7833, 7837, 7841, 7845, 7849, 7853, 7857, 7861, 7865,
    7869, 7873, 7877, 7881, 7885, 7889, 7893, 7897, 7901, 7905, 7909, 7913,
    7917, 7921, 7925, 7929, 7933, 7937, 7941, 7945, 7949, 7953, 7957, 7961,
    7965, 7969, 7973, 7977, 7981, 7985, 7989, 7993, 7997, 8001, 8005, 8009,
    8013, 8017, 8021, 8025, 8029, 8033, 8037, 8041, 8046, 8051, 8056, 8060,
    8064, 8068, 8073, 8078, 8083, 8087, 8091, 8094, 8097, 8100, 8104, 8108,
    8111, 8114, 8119, 8124, 8129, 8134, 8139, 8144, 8149, 8152, 8155, 8158,
    8161, 8164, 8167, 8170, 8173, 8176, 8178, 8183, 8188, 8195, 8202, 8207,
    8212, 8217, 8222, 8227, 8232, 8237, 8242, 8247, 8252, 8257, 8262, 8267,
    8272, 8277, 8282, 8287, 8292, 8297, 8302, 8307, 8312, 8317, 8322, 8327,
    8332, 8337, 8342, 8347, 8350, 8353, 8356, 8359, 8362, 8365, 8368, 8371,
    8374, 8377, 8380, 8383, 8386, 8389, 8392, 8395, 8398, 8401, 8404, 8407,
    8410, 8413, 8416, 8419, 8422, 8425, 8428, 8431, 8434, 8437, 8440, 8443,
    8446, 8449, 8452, 8455, 8458, 8461, 8464, 8467, 8470, 8473, 8476, 8479,
    8482, 8485, 8488, 8491, 8494, 8497, 8500, 8503, 8506, 8509, 8512, 8515,
    8518, 8521, 8524, 8527, 8530, 8533, 8536, 8539, 8542, 8545, 8548, 8551,
    8554, 8557, 8560, 8563, 8566, 8569, 8572, 8575, 8578, 8581, 8584, 8587,
    8590, 8593, 8596, 8599, 8602, 8605, 8608, 8611, 8614, 8617, 8620, 8623,
    8626, 8629, 8632, 8635, 8638, 8641, 8644, 8647, 8650, 8653, 8656, 8659,
    8662, 8665, 8668, 8671, 8676, 8679, 8682, 8685, 8688, 8691, 8694, 8697,
    8700, 8703, 8706, 8709, 8712, 8717, 8722, 8727, 8732, 8737, 8742, 8747,
    8752, 8757, 8762, 8767, 8772, 8777, 8782, 8787, 8792, 8797, 8802, 8805,
    8808, 8811, 8814, 8819, 8824, 8829, 8834, 8839, 8844, 8849, 8854, 8859,
    8864, 8869, 8874, 8879, 8884, 8889, 8894, 8899, 8904, 8909, 8914, 8919,
    8924, 8929, 8934, 8939, 8944, 8949, 8954, 8959, 8964, 8969, 8974, 8979,
    8984, 8989, 8994, 8999, 9004, 9009, 9014, 9019, 9024, 9029, 9034, 9039,
    9044, 9049, 9054, 9059, 9064, 9069, 9074, 9079, 9084, 9089, 9094, 9099,
    9104, 9109, 9114, 9119, 9124, 9129, 9134, 9139, 9144, 9149, 9154, 9159,
    9164, 9169, 9174, 9179, 9184, 9189, 9194, 9199, 9204, 9209, 9214, 9219,
    9224, 9229, 9234, 9239, 9244, 9249, 9254, 9259, 9264, 9269, 9274, 9279,
    9284, 9290, 9296, 9302, 9308, 9314, 9320, 9325, 9330, 9335, 9340, 9345,
    9350, 9355, 9360, 9365, 9370, 9375, 9380, 9385, 9390, 9395, 9400, 9405,
    9410, 9415, 9420, 9425, 9430, 9435, 9440, 9445, 9450, 9455, 9460, 9465,
    9470, 9475, 9480, 9485, 9490, 9495, 9500, 9505, 9510, 9515, 9520, 9525,
    9530, 9535, 9540, 9545, 9550, 9555, 9560, 9565, 9570, 9575, 9580, 9585,
    9590, 9595, 9600, 9605, 9610, 9615, 9620, 9625, 9630, 9635, 9640, 9645,
    9650, 9655, 9660, 9665, 9670, 9675, 9680, 9685, 9690, 9695, 9700, 9705,
    9710, 9715, 9720, 9725, 9730, 9735, 9740, 9745, 9750, 9755, 9760, 9765,
    9770, 9775, 9780, 9785, 9790, 9795, 9800, 9805, 9810, 9815, 9820, 9825,
    9830, 9835, 9840, 9845, 9850, 9855, 9860, 9865, 9870, 9875, 9880, 9885,
    9890, 9895, 9900, 9905, 9910, 9915, 9920, 9925, 9930, 9935, 9940, 9945,
    9950, 9955, 9960, 9965, 9970, 9975, 9980, 9985, 9990, 9995, 10000, 10005,
    10010, 10015, 10020, 10025, 10030, 10037, 10044, 10051, 10056, 10061, 10066, 10071,
    10076, 10081, 10086, 10091, 10096, 10101, 10106, 10111, 10116, 10121, 10126, 10131,
    10136, 10141, 10146, 10151, 10156, 10161, 10166, 10171, 10176, 10181, 10186, 10191,
    10196, 10201, 10206, 10211, 10216, 10221, 10226, 10231, 10236, 10241, 10246, 10251,
    10256, 10261, 10266, 10271, 10276, 10281, 10286, 10291, 10296, 10301, 10306, 10311,
    10316, 10321, 10326, 10331, 10336, 10341, 10346, 10351, 10356, 10361, 10366, 10371,
    10376, 10381, 10386, 10391, 10396, 10401, 10406, 10411, 10416, 10423, 10430, 10437,
    10444, 10451, 10458, 10465, 10472, 10479, 10486, 10493, 10500, 10507, 10514, 10521,
    10528, 10535, 10542, 10549, 10556, 10563, 10570, 10577, 10584, 10591, 10598, 10605,
    10612, 10619, 10626, 10633, 10640, 10647, 10654, 10661, 10668, 10675, 10682, 10689,
    10696, 10703, 10710, 10717, 10724, 10731, 10738, 10745, 10752, 10759, 10766, 10773,
    10780, 10787, 10794, 10801, 10808, 10815, 10822, 10829, 10836, 10843, 10850, 10857,
    10864, 10871, 10878, 10885, 10892, 10899, 10906, 10913, 10920, 10927, 10934, 10941,
    10948, 10955, 10962, 10969, 10976, 10983, 10990, 10997, 11004, 11011, 11018, 11025,
    11032, 11039, 11046, 11053, 11060, 11067, 11074, 11081, 11088, 11095, 11102, 11109,
    11116, 11123, 11130, 11137, 11144, 11151, 11158, 11165, 11172, 11179, 11186, 11193,
    11200, 11207, 11214, 11221, 11228, 11235, 11242, 11249, 11256, 11265, 11274, 11283,
    11292, 11301, 11310, 11319, 11326, 11360, 11376, 11385, 11387, 11391, 11395, 11397,
    11399, 11401, 11403, 11407, 11411, 11415, 11418, 11422, 11426, 11428, 11430, 11432,
    11434, 11436, 11438, 11442, 11446, 11450, 11454, 11458, 11462, 11466, 11470, 11474,
    11478, 11482, 11486, 11488, 11490, 11494, 11498, 11502, 11506, 11508, 11510, 11512,
    11514, 11518, 11520, 11522, 11524, 11526, 11528, 11532, 11534, 11536, 11538, 11540,
    11544, 11548, 11550, 11552, 11554, 11556, 11558, 11560, 11562, 11564, 11566, 11568,
    11570, 11572, 11576, 11581, 11585, 11589, 11593, 11598, 11602, 11607, 11611, 11616,
    11620, 11625, 11629, 11634, 11637, 11640, 11643, 11646, 11649, 11652, 11655, 11658,
    11661, 11664, 11667, 11670, 11673, 11676, 11679, 11682, 11685, 11688, 11691, 11694,
    11697, 11700, 11703, 11706, 11709, 11712, 11715, 11718, 11721, 11724, 11727, 11730,
    11733, 11736, 11739, 11742, 11745, 11748, 11751, 11754, 11757, 11760, 11763, 11766,
    11769, 11772, 11775, 11778, 11781, 11784, 11787, 11790, 11793, 11796, 11799, 11802,
    11805, 11808, 11811, 11814, 11817, 11820, 11823, 11826, 11829, 11832, 11835, 11838,
    11841, 11844, 11847, 11850, 11853, 11856, 11859, 11862, 11865, 11868, 11871, 11874,
    11877, 11880, 11883, 11886, 11889, 11892, 11895, 11898, 11901, 11904, 11907, 11910,
    11913, 11916, 11919, 11922, 11925, 11928, 11931, 11934, 11937, 11940, 11943, 11946,
    11949, 11952, 11955, 11958, 11961, 11964, 11967, 11970, 11973, 11976, 11979, 11982,
    11985, 11990, 11995, 12000, 12005, 12010, 12015, 12020, 12025, 12027, 12029, 12031,
    12033, 12035, 12037, 12039, 12041, 12043, 12045, 12047, 12049, 12051, 12053, 12055,
    12057, 12059, 12061, 12063, 12065, 12067, 12069, 12071, 12073, 12075, 12077, 12079,
    12081, 12083, 12085, 12087, 12089, 12091, 12093, 12095, 12097, 12099, 12101, 12103,
    12105, 12107, 12109, 12111, 12113, 12115, 12117, 12119, 12121, 12123, 12125, 12127,
    12129, 12131, 12133, 12135, 12137, 12139, 12141, 12143, 12145, 12147, 12149, 12151,
    12153, 12155, 12157, 12159, 12161, 12163, 12165, 12167, 12169, 12171, 12173, 12175,
    12177, 12179, 12181, 12183, 12185, 12187, 12189, 12191, 12193, 12195, 12197, 12199,
    12201, 12203, 12205, 12207, 12209, 12211, 12213, 12217, 12221, 12225, 12229, 12233,
    12237, 12241, 12245, 12249, 12253, 12257, 12261, 12265, 12269, 12273, 12277, 12281,
    12285, 12289, 12293, 12297, 12301, 12305, 12309, 12313, 12317, 12321, 12325, 12329,
    12333, 12337, 12341, 12345, 12349, 12353, 12357, 12361, 12365, 12369, 12373, 12377,
    12381, 12385, 12389, 12393, 12397, 12401, 12405, 12409, 12413, 12417, 12421, 12425,
    12429, 12433, 12437, 12441, 12445, 12449, 12453, 12457, 12461, 12465, 12469, 12473,
    12477, 12481, 12485, 12489, 12493, 12497, 12501, 12505, 12509, 12513, 12517, 12521,
    12525, 12529, 12533, 12537, 12541, 12545, 12549, 12553, 12557, 12561, 12565, 12569,
    12573, 12577, 12581, 12585, 12589, 12593, 12597, 12601, 12605, 12609, 12613, 12617,
    12621, 12625, 12629, 12633, 12637, 12641, 12645, 12649, 12653, 12657, 12661, 12665,
    12669, 12673, 12677, 12681, 12684, 12687, 12690, 12694, 12697, 12700, 12704, 12708,
    12712, 12716, 12720, 12724, 12728,
};

// Each entry: one length byte followed by that many UTF-8 bytes.
inline constexpr unsigned char kCompatBlob[12732] = {
    1, 32, 3, 32, 204, 136, 1, 97, 3, 32, 204, 132,
    1, 50, 1, 51, 3, 32, 204, 129, 2, 206, 188, 3,
    32, 204, 167, 1, 49, 1, 111, 5, 49, 226, 129, 132,
    52, 5, 49, 226, 129, 132, 50, 5, 51, 226, 129, 132,
    52, 2, 73, 74, 2, 105, 106, 3, 76, 194, 183, 3,
    108, 194, 183, 3, 202, 188, 110, 1, 115, 3, 68, 197,
    189, 3, 68, 197, 190, 3, 100, 197, 190, 2, 76, 74,
    2, 76, 106, 2, 108, 106, 2, 78, 74, 2, 78, 106,
    2, 110, 106, 2, 68, 90, 2, 68, 122, 2, 100, 122,
    1, 104, 2, 201, 166, 1, 106, 1, 114, 2, 201, 185,
    2, 201, 187, 2, 202, 129, 1, 119, 1, 121, 3, 32,
    204, 134, 3, 32, 204, 135, 3, 32, 204, 138, 3, 32,
    204, 168, 3, 32, 204, 131, 3, 32, 204, 139, 2, 201,
    163, 1, 108, 1, 115, 1, 120, 2, 202, 149, 2, 204,
    128, 2, 204, 129, 2, 204, 147, 4, 204, 136, 204, 129,
    2, 202, 185, 3, 32, 205, 133, 1, 59, 3, 32, 204,
    129, 5, 32, 204, 136, 204, 129, 2, 194, 183, 2, 206,
    178, 2, 206, 184, 2, 206, 165, 2, 206, 142, 2, 206,
    171, 2, 207, 134, 2, 207, 128, 2, 206, 186, 2, 207,
    129, 2, 207, 130, 2, 206, 152, 2, 206, 181, 2, 206,
    163, 4, 213, 165, 214, 130, 4, 216, 167, 217, 180, 4,
    217, 136, 217, 180, 4, 219, 135, 217, 180, 4, 217, 138,
    217, 180, 6, 224, 164, 149, 224, 164, 188, 6, 224, 164,
    150, 224, 164, 188, 6, 224, 164, 151, 224, 164, 188, 6,
    224, 164, 156, 224, 164, 188, 6, 224, 164, 161, 224, 164,
    188, 6, 224, 164, 162, 224, 164, 188, 6, 224, 164, 171,
    224, 164, 188, 6, 224, 164, 175, 224, 164, 188, 6, 224,
    166, 161, 224, 166, 188, 6, 224, 166, 162, 224, 166, 188,
    6, 224, 166, 175, 224, 166, 188, 6, 224, 168, 178, 224,
    168, 188, 6, 224, 168, 184, 224, 168, 188, 6, 224, 168,
    150, 224, 168, 188, 6, 224, 168, 151, 224, 168, 188, 6,
    224, 168, 156, 224, 168, 188, 6, 224, 168, 171, 224, 168,
    188, 6, 224, 172, 161, 224, 172, 188, 6, 224, 172, 162,
    224, 172, 188, 6, 224, 185, 141, 224, 184, 178, 6, 224,
    187, 141, 224, 186, 178, 6, 224, 186, 171, 224, 186, 153,
    6, 224, 186, 171, 224, 186, 161, 3, 224, 188, 139, 6,
    224, 189, 130, 224, 190, 183, 6, 224, 189, 140, 224, 190,
    183, 6, 224, 189, 145, 224, 190, 183, 6, 224, 189, 150,
    224, 190, 183, 6, 224, 189, 155, 224, 190, 183, 6, 224,
    189, 128, 224, 190, 181, 6, 224, 189, 177, 224, 189, 178,
    6, 224, 189, 177, 224, 189, 180, 6, 224, 190, 178, 224,
    190, 128, 9, 224, 190, 178, 224, 189, 177, 224, 190, 128,
    6, 224, 190, 179, 224, 190, 128, 9, 224, 190, 179, 224,
    189, 177, 224, 190, 128, 6, 224, 189, 177, 224, 190, 128,
    6, 224, 190, 146, 224, 190, 183, 6, 224, 190, 156, 224,
    190, 183, 6, 224, 190, 161, 224, 190, 183, 6, 224, 190,
    166, 224, 190, 183, 6, 224, 190, 171, 224, 190, 183, 6,
    224, 190, 144, 224, 190, 181, 3, 225, 131, 156, 1, 65,
    2, 195, 134, 1, 66, 1, 68, 1, 69, 2, 198, 142,
    1, 71, 1, 72, 1, 73, 1, 74, 1, 75, 1, 76,
    1, 77, 1, 78, 1, 79, 2, 200, 162, 1, 80, 1,
    82, 1, 84, 1, 85, 1, 87, 1, 97, 2, 201, 144,
    2, 201, 145, 3, 225, 180, 130, 1, 98, 1, 100, 1,
    101, 2, 201, 153, 2, 201, 155, 2, 201, 156, 1, 103,
    1, 107, 1, 109, 2, 197, 139, 1, 111, 2, 201, 148,
    3, 225, 180, 150, 3, 225, 180, 151, 1, 112, 1, 116,
    1, 117, 3, 225, 180, 157, 2, 201, 175, 1, 118, 3,
    225, 180, 165, 2, 206, 178, 2, 206, 179, 2, 206, 180,
    2, 207, 134, 2, 207, 135, 1, 105, 1, 114, 1, 117,
    1, 118, 2, 206, 178, 2, 206, 179, 2, 207, 129, 2,
    207, 134, 2, 207, 135, 2, 208, 189, 2, 201, 146, 1,
    99, 2, 201, 149, 2, 195, 176, 2, 201, 156, 1, 102,
    2, 201, 159, 2, 201, 161, 2, 201, 165, 2, 201, 168,
    2, 201, 169, 2, 201, 170, 3, 225, 181, 187, 2, 202,
    157, 2, 201, 173, 3, 225, 182, 133, 2, 202, 159, 2,
    201, 177, 2, 201, 176, 2, 201, 178, 2, 201, 179, 2,
    201, 180, 2, 201, 181, 2, 201, 184, 2, 202, 130, 2,
    202, 131, 2, 198, 171, 2, 202, 137, 2, 202, 138, 3,
    225, 180, 156, 2, 202, 139, 2, 202, 140, 1, 122, 2,
    202, 144, 2, 202, 145, 2, 202, 146, 2, 206, 184, 3,
    97, 202, 190, 3, 225, 185, 161, 2, 206, 172, 2, 206,
    173, 2, 206, 174, 2, 206, 175, 2, 207, 140, 2, 207,
    141, 2, 207, 142, 2, 206, 134, 3, 32, 204, 147, 2,
    206, 185, 3, 32, 204, 147, 3, 32, 205, 130, 5, 32,
    204, 136, 205, 130, 2, 206, 136, 2, 206, 137, 5, 32,
    204, 147, 204, 128, 5, 32, 204, 147, 204, 129, 5, 32,
    204, 147, 205, 130, 2, 206, 144, 2, 206, 138, 5, 32,
    204, 148, 204, 128, 5, 32, 204, 148, 204, 129, 5, 32,
    204, 148, 205, 130, 2, 206, 176, 2, 206, 142, 5, 32,
    204, 136, 204, 128, 5, 32, 204, 136, 204, 129, 1, 96,
    2, 206, 140, 2, 206, 143, 3, 32, 204, 129, 3, 32,
    204, 148, 1, 32, 1, 32, 1, 32, 1, 32, 1, 32,
    1, 32, 1, 32, 1, 32, 1, 32, 1, 32, 1, 32,
    3, 226, 128, 144, 3, 32, 204, 179, 1, 46, 2, 46,
    46, 3, 46, 46, 46, 1, 32, 6, 226, 128, 178, 226,
    128, 178, 9, 226, 128, 178, 226, 128, 178, 226, 128, 178,
    6, 226, 128, 181, 226, 128, 181, 9, 226, 128, 181, 226,
    128, 181, 226, 128, 181, 2, 33, 33, 3, 32, 204, 133,
    2, 63, 63, 2, 63, 33, 2, 33, 63, 12, 226, 128,
    178, 226, 128, 178, 226, 128, 178, 226, 128, 178, 1, 32,
    1, 48, 1, 105, 1, 52, 1, 53, 1, 54, 1, 55,
    1, 56, 1, 57, 1, 43, 3, 226, 136, 146, 1, 61,
    1, 40, 1, 41, 1, 110, 1, 48, 1, 49, 1, 50,
    1, 51, 1, 52, 1, 53, 1, 54, 1, 55, 1, 56,
    1, 57, 1, 43, 3, 226, 136, 146, 1, 61, 1, 40,
    1, 41, 1, 97, 1, 101, 1, 111, 1, 120, 2, 201,
    153, 1, 104, 1, 107, 1, 108, 1, 109, 1, 110, 1,
    112, 1, 115, 1, 116, 2, 82, 115, 3, 97, 47, 99,
    3, 97, 47, 115, 1, 67, 3, 194, 176, 67, 3, 99,
    47, 111, 3, 99, 47, 117, 2, 198, 144, 3, 194, 176,
    70, 1, 103, 1, 72, 1, 72, 1, 72, 1, 104, 2,
    196, 167, 1, 73, 1, 73, 1, 76, 1, 108, 1, 78,
    2, 78, 111, 1, 80, 1, 81, 1, 82, 1, 82, 1,
    82, 2, 83, 77, 3, 84, 69, 76, 2, 84, 77, 1,
    90, 2, 206, 169, 1, 90, 1, 75, 2, 195, 133, 1,
    66, 1, 67, 1, 101, 1, 69, 1, 70, 1, 77, 1,
    111, 2, 215, 144, 2, 215, 145, 2, 215, 146, 2, 215,
    147, 1, 105, 3, 70, 65, 88, 2, 207, 128, 2, 206,
    179, 2, 206, 147, 2, 206, 160, 3, 226, 136, 145, 1,
    68, 1, 100, 1, 101, 1, 105, 1, 106, 5, 49, 226,
    129, 132, 55, 5, 49, 226, 129, 132, 57, 6, 49, 226,
    129, 132, 49, 48, 5, 49, 226, 129, 132, 51, 5, 50,
    226, 129, 132, 51, 5, 49, 226, 129, 132, 53, 5, 50,
    226, 129, 132, 53, 5, 51, 226, 129, 132, 53, 5, 52,
    226, 129, 132, 53, 5, 49, 226, 129, 132, 54, 5, 53,
    226, 129, 132, 54, 5, 49, 226, 129, 132, 56, 5, 51,
    226, 129, 132, 56, 5, 53, 226, 129, 132, 56, 5, 55,
    226, 129, 132, 56, 4, 49, 226, 129, 132, 1, 73, 2,
    73, 73, 3, 73, 73, 73, 2, 73, 86, 1, 86, 2,
    86, 73, 3, 86, 73, 73, 4, 86, 73, 73, 73, 2,
    73, 88, 1, 88, 2, 88, 73, 3, 88, 73, 73, 1,
    76, 1, 67, 1, 68, 1, 77, 1, 105, 2, 105, 105,
    3, 105, 105, 105, 2, 105, 118, 1, 118, 2, 118, 105,
    3, 118, 105, 105, 4, 118, 105, 105, 105, 2, 105, 120,
    1, 120, 2, 120, 105, 3, 120, 105, 105, 1, 108, 1,
    99, 1, 100, 1, 109, 5, 48, 226, 129, 132, 51, 6,
    226, 136, 171, 226, 136, 171, 9, 226, 136, 171, 226, 136,
    171, 226, 136, 171, 6, 226, 136, 174, 226, 136, 174, 9,
    226, 136, 174, 226, 136, 174, 226, 136, 174, 3, 227, 128,
    136, 3, 227, 128, 137, 1, 49, 1, 50, 1, 51, 1,
    52, 1, 53, 1, 54, 1, 55, 1, 56, 1, 57, 2,
    49, 48, 2, 49, 49, 2, 49, 50, 2, 49, 51, 2,
    49, 52, 2, 49, 53, 2, 49, 54, 2, 49, 55, 2,
    49, 56, 2, 49, 57, 2, 50, 48, 3, 40, 49, 41,
    3, 40, 50, 41, 3, 40, 51, 41, 3, 40, 52, 41,
    3, 40, 53, 41, 3, 40, 54, 41, 3, 40, 55, 41,
    3, 40, 56, 41, 3, 40, 57, 41, 4, 40, 49, 48,
    41, 4, 40, 49, 49, 41, 4, 40, 49, 50, 41, 4,
    40, 49, 51, 41, 4, 40, 49, 52, 41, 4, 40, 49,
    53, 41, 4, 40, 49, 54, 41, 4, 40, 49, 55, 41,
    4, 40, 49, 56, 41, 4, 40, 49, 57, 41, 4, 40,
    50, 48, 41, 2, 49, 46, 2, 50, 46, 2, 51, 46,
    2, 52, 46, 2, 53, 46, 2, 54, 46, 2, 55, 46,
    2, 56, 46, 2, 57, 46, 3, 49, 48, 46, 3, 49,
    49, 46, 3, 49, 50, 46, 3, 49, 51, 46, 3, 49,
    52, 46, 3, 49, 53, 46, 3, 49, 54, 46, 3, 49,
    55, 46, 3, 49, 56, 46, 3, 49, 57, 46, 3, 50,
    48, 46, 3, 40, 97, 41, 3, 40, 98, 41, 3, 40,
    99, 41, 3, 40, 100, 41, 3, 40, 101, 41, 3, 40,
    102, 41, 3, 40, 103, 41, 3, 40, 104, 41, 3, 40,
    105, 41, 3, 40, 106, 41, 3, 40, 107, 41, 3, 40,
    108, 41, 3, 40, 109, 41, 3, 40, 110, 41, 3, 40,
    111, 41, 3, 40, 112, 41, 3, 40, 113, 41, 3, 40,
    114, 41, 3, 40, 115, 41, 3, 40, 116, 41, 3, 40,
    117, 41, 3, 40, 118, 41, 3, 40, 119, 41, 3, 40,
    120, 41, 3, 40, 121, 41, 3, 40, 122, 41, 1, 65,
    1, 66, 1, 67, 1, 68, 1, 69, 1, 70, 1, 71,
    1, 72, 1, 73, 1, 74, 1, 75, 1, 76, 1, 77,
    1, 78, 1, 79, 1, 80, 1, 81, 1, 82, 1, 83,
    1, 84, 1, 85, 1, 86, 1, 87, 1, 88, 1, 89,
    1, 90, 1, 97, 1, 98, 1, 99, 1, 100, 1, 101,
    1, 102, 1, 103, 1, 104, 1, 105, 1, 106, 1, 107,
    1, 108, 1, 109, 1, 110, 1, 111, 1, 112, 1, 113,
    1, 114, 1, 115, 1, 116, 1, 117, 1, 118, 1, 119,
    1, 120, 1, 121, 1, 122, 1, 48, 12, 226, 136, 171,
    226, 136, 171, 226, 136, 171, 226, 136, 171, 3, 58, 58,
    61, 2, 61, 61, 3, 61, 61, 61, 5, 226, 171, 157,
    204, 184, 1, 106, 1, 86, 3, 226, 181, 161, 3, 230,
    175, 141, 3, 233, 190, 159, 3, 228, 184, 128, 3, 228,
    184, 168, 3, 228, 184, 182, 3, 228, 184, 191, 3, 228,
    185, 153, 3, 228, 186, 133, 3, 228, 186, 140, 3, 228,
    186, 160, 3, 228, 186, 186, 3, 229, 132, 191, 3, 229,
    133, 165, 3, 229, 133, 171, 3, 229, 134, 130, 3, 229,
    134, 150, 3, 229, 134, 171, 3, 229, 135, 160, 3, 229,
    135, 181, 3, 229, 136, 128, 3, 229, 138, 155, 3, 229,
    139, 185, 3, 229, 140, 149, 3, 229, 140, 154, 3, 229,
    140, 184, 3, 229, 141, 129, 3, 229, 141, 156, 3, 229,
    141, 169, 3, 229, 142, 130, 3, 229, 142, 182, 3, 229,
    143, 136, 3, 229, 143, 163, 3, 229, 155, 151, 3, 229,
    156, 159, 3, 229, 163, 171, 3, 229, 164, 130, 3, 229,
    164, 138, 3, 229, 164, 149, 3, 229, 164, 167, 3, 229,
    165, 179, 3, 229, 173, 144, 3, 229, 174, 128, 3, 229,
    175, 184, 3, 229, 176, 143, 3, 229, 176, 162, 3, 229,
    176, 184, 3, 229, 177, 174, 3, 229, 177, 177, 3, 229,
    183, 155, 3, 229, 183, 165, 3, 229, 183, 177, 3, 229,
    183, 190, 3, 229, 185, 178, 3, 229, 185, 186, 3, 229,
    185, 191, 3, 229, 187, 180, 3, 229, 187, 190, 3, 229,
    188, 139, 3, 229, 188, 147, 3, 229, 189, 144, 3, 229,
    189, 161, 3, 229, 189, 179, 3, 229, 191, 131, 3, 230,
    136, 136, 3, 230, 136, 182, 3, 230, 137, 139, 3, 230,
    148, 175, 3, 230, 148, 180, 3, 230, 150, 135, 3, 230,
    150, 151, 3, 230, 150, 164, 3, 230, 150, 185, 3, 230,
    151, 160, 3, 230, 151, 165, 3, 230, 155, 176, 3, 230,
    156, 136, 3, 230, 156, 168, 3, 230, 172, 160, 3, 230,
    173, 162, 3, 230, 173, 185, 3, 230, 174, 179, 3, 230,
    175, 139, 3, 230, 175, 148, 3, 230, 175, 155, 3, 230,
    176, 143, 3, 230, 176, 148, 3, 230, 176, 180, 3, 231,
    129, 171, 3, 231, 136, 170, 3, 231, 136, 182, 3, 231,
    136, 187, 3, 231, 136, 191, 3, 231, 137, 135, 3, 231,
    137, 153, 3, 231, 137, 155, 3, 231, 138, 172, 3, 231,
    142, 132, 3, 231, 142, 137, 3, 231, 147, 156, 3, 231,
    147, 166, 3, 231, 148, 152, 3, 231, 148, 159, 3, 231,
    148, 168, 3, 231, 148, 176, 3, 231, 150, 139, 3, 231,
    150, 146, 3, 231, 153, 182, 3, 231, 153, 189, 3, 231,
    154, 174, 3, 231, 154, 191, 3, 231, 155, 174, 3, 231,
    159, 155, 3, 231, 159, 162, 3, 231, 159, 179, 3, 231,
    164, 186, 3, 231, 166, 184, 3, 231, 166, 190, 3, 231,
    169, 180, 3, 231, 171, 139, 3, 231, 171, 185, 3, 231,
    177, 179, 3, 231, 179, 184, 3, 231, 188, 182, 3, 231,
    189, 145, 3, 231, 190, 138, 3, 231, 190, 189, 3, 232,
    128, 129, 3, 232, 128, 140, 3, 232, 128, 146, 3, 232,
    128, 179, 3, 232, 129, 191, 3, 232, 130, 137, 3, 232,
    135, 163, 3, 232, 135, 170, 3, 232, 135, 179, 3, 232,
    135, 188, 3, 232, 136, 140, 3, 232, 136, 155, 3, 232,
    136, 159, 3, 232, 137, 174, 3, 232, 137, 178, 3, 232,
    137, 184, 3, 232, 153, 141, 3, 232, 153, 171, 3, 232,
    161, 128, 3, 232, 161, 140, 3, 232, 161, 163, 3, 232,
    165, 190, 3, 232, 166, 139, 3, 232, 167, 146, 3, 232,
    168, 128, 3, 232, 176, 183, 3, 232, 177, 134, 3, 232,
    177, 149, 3, 232, 177, 184, 3, 232, 178, 157, 3, 232,
    181, 164, 3, 232, 181, 176, 3, 232, 182, 179, 3, 232,
    186, 171, 3, 232, 187, 138, 3, 232, 190, 155, 3, 232,
    190, 176, 3, 232, 190, 181, 3, 233, 130, 145, 3, 233,
    133, 137, 3, 233, 135, 134, 3, 233, 135, 140, 3, 233,
    135, 145, 3, 233, 149, 183, 3, 233, 150, 128, 3, 233,
    152, 156, 3, 233, 154, 182, 3, 233, 154, 185, 3, 233,
    155, 168, 3, 233, 157, 145, 3, 233, 157, 158, 3, 233,
    157, 162, 3, 233, 157, 169, 3, 233, 159, 139, 3, 233,
    159, 173, 3, 233, 159, 179, 3, 233, 160, 129, 3, 233,
    162, 168, 3, 233, 163, 155, 3, 233, 163, 159, 3, 233,
    166, 150, 3, 233, 166, 153, 3, 233, 166, 172, 3, 233,
    170, 168, 3, 233, 171, 152, 3, 233, 171, 159, 3, 233,
    172, 165, 3, 233, 172, 175, 3, 233, 172, 178, 3, 233,
    172, 188, 3, 233, 173, 154, 3, 233, 179, 165, 3, 233,
    185, 181, 3, 233, 185, 191, 3, 233, 186, 165, 3, 233,
    186, 187, 3, 233, 187, 131, 3, 233, 187, 141, 3, 233,
    187, 145, 3, 233, 187, 185, 3, 233, 187, 189, 3, 233,
    188, 142, 3, 233, 188, 147, 3, 233, 188, 160, 3, 233,
    188, 187, 3, 233, 189, 138, 3, 233, 189, 146, 3, 233,
    190, 141, 3, 233, 190, 156, 3, 233, 190, 160, 1, 32,
    3, 227, 128, 146, 3, 229, 141, 129, 3, 229, 141, 132,
    3, 229, 141, 133, 4, 32, 227, 130, 153, 4, 32, 227,
    130, 154, 6, 227, 130, 136, 227, 130, 138, 6, 227, 130,
    179, 227, 131, 136, 3, 225, 132, 128, 3, 225, 132, 129,
    3, 225, 134, 170, 3, 225, 132, 130, 3, 225, 134, 172,
    3, 225, 134, 173, 3, 225, 132, 131, 3, 225, 132, 132,
    3, 225, 132, 133, 3, 225, 134, 176, 3, 225, 134, 177,
    3, 225, 134, 178, 3, 225, 134, 179, 3, 225, 134, 180,
    3, 225, 134, 181, 3, 225, 132, 154, 3, 225, 132, 134,
    3, 225, 132, 135, 3, 225, 132, 136, 3, 225, 132, 161,
    3, 225, 132, 137, 3, 225, 132, 138, 3, 225, 132, 139,
    3, 225, 132, 140, 3, 225, 132, 141, 3, 225, 132, 142,
    3, 225, 132, 143, 3, 225, 132, 144, 3, 225, 132, 145,
    3, 225, 132, 146, 3, 225, 133, 161, 3, 225, 133, 162,
    3, 225, 133, 163, 3, 225, 133, 164, 3, 225, 133, 165,
    3, 225, 133, 166, 3, 225, 133, 167, 3, 225, 133, 168,
    3, 225, 133, 169, 3, 225, 133, 170, 3, 225, 133, 171,
    3, 225, 133, 172, 3, 225, 133, 173, 3, 225, 133, 174,
    3, 225, 133, 175, 3, 225, 133, 176, 3, 225, 133, 177,
    3, 225, 133, 178, 3, 225, 133, 179, 3, 225, 133, 180,
    3, 225, 133, 181, 3, 225, 133, 160, 3, 225, 132, 148,
    3, 225, 132, 149, 3, 225, 135, 135, 3, 225, 135, 136,
    3, 225, 135, 140, 3, 225, 135, 142, 3, 225, 135, 147,
    3, 225, 135, 151, 3, 225, 135, 153, 3, 225, 132, 156,
    3, 225, 135, 157, 3, 225, 135, 159, 3, 225, 132, 157,
    3, 225, 132, 158, 3, 225, 132, 160, 3, 225, 132, 162,
    3, 225, 132, 163, 3, 225, 132, 167, 3, 225, 132, 169,
    3, 225, 132, 171, 3, 225, 132, 172, 3, 225, 132, 173,
    3, 225, 132, 174, 3, 225, 132, 175, 3, 225, 132, 178,
    3, 225, 132, 182, 3, 225, 133, 128, 3, 225, 133, 135,
    3, 225, 133, 140, 3, 225, 135, 177, 3, 225, 135, 178,
    3, 225, 133, 151, 3, 225, 133, 152, 3, 225, 133, 153,
    3, 225, 134, 132, 3, 225, 134, 133, 3, 225, 134, 136,
    3, 225, 134, 145, 3, 225, 134, 146, 3, 225, 134, 148,
    3, 225, 134, 158, 3, 225, 134, 161, 3, 228, 184, 128,
    3, 228, 186, 140, 3, 228, 184, 137, 3, 229, 155, 155,
    3, 228, 184, 138, 3, 228, 184, 173, 3, 228, 184, 139,
    3, 231, 148, 178, 3, 228, 185, 153, 3, 228, 184, 153,
    3, 228, 184, 129, 3, 229, 164, 169, 3, 229, 156, 176,
    3, 228, 186, 186, 5, 40, 225, 132, 128, 41, 5, 40,
    225, 132, 130, 41, 5, 40, 225, 132, 131, 41, 5, 40,
    225, 132, 133, 41, 5, 40, 225, 132, 134, 41, 5, 40,
    225, 132, 135, 41, 5, 40, 225, 132, 137, 41, 5, 40,
    225, 132, 139, 41, 5, 40, 225, 132, 140, 41, 5, 40,
    225, 132, 142, 41, 5, 40, 225, 132, 143, 41, 5, 40,
    225, 132, 144, 41, 5, 40, 225, 132, 145, 41, 5, 40,
    225, 132, 146, 41, 5, 40, 234, 176, 128, 41, 5, 40,
    235, 130, 152, 41, 5, 40, 235, 139, 164, 41, 5, 40,
    235, 157, 188, 41, 5, 40, 235, 167, 136, 41, 5, 40,
    235, 176, 148, 41, 5, 40, 236, 130, 172, 41, 5, 40,
    236, 149, 132, 41, 5, 40, 236, 158, 144, 41, 5, 40,
    236, 176, 168, 41, 5, 40, 236, 185, 180, 41, 5, 40,
    237, 131, 128, 41, 5, 40, 237, 140, 140, 41, 5, 40,
    237, 149, 152, 41, 5, 40, 236, 163, 188, 41, 8, 40,
    236, 152, 164, 236, 160, 132, 41, 8, 40, 236, 152, 164,
    237, 155, 132, 41, 5, 40, 228, 184, 128, 41, 5, 40,
    228, 186, 140, 41, 5, 40, 228, 184, 137, 41, 5, 40,
    229, 155, 155, 41, 5, 40, 228, 186, 148, 41, 5, 40,
    229, 133, 173, 41, 5, 40, 228, 184, 131, 41, 5, 40,
    229, 133, 171, 41, 5, 40, 228, 185, 157, 41, 5, 40,
    229, 141, 129, 41, 5, 40, 230, 156, 136, 41, 5, 40,
    231, 129, 171, 41, 5, 40, 230, 176, 180, 41, 5, 40,
    230, 156, 168, 41, 5, 40, 233, 135, 145, 41, 5, 40,
    229, 156, 159, 41, 5, 40, 230, 151, 165, 41, 5, 40,
    230, 160, 170, 41, 5, 40, 230, 156, 137, 41, 5, 40,
    231, 164, 190, 41, 5, 40, 229, 144, 141, 41, 5, 40,
    231, 137, 185, 41, 5, 40, 232, 178, 161, 41, 5, 40,
    231, 165, 157, 41, 5, 40, 229, 138, 180, 41, 5, 40,
    228, 187, 163, 41, 5, 40, 229, 145, 188, 41, 5, 40,
    229, 173, 166, 41, 5, 40, 231, 155, 163, 41, 5, 40,
    228, 188, 129, 41, 5, 40, 232, 179, 135, 41, 5, 40,
    229, 141, 148, 41, 5, 40, 231, 165, 173, 41, 5, 40,
    228, 188, 145, 41, 5, 40, 232, 135, 170, 41, 5, 40,
    232, 135, 179, 41, 3, 229, 149, 143, 3, 229, 185, 188,
    3, 230, 150, 135, 3, 231, 174, 143, 3, 80, 84, 69,
    2, 50, 49, 2, 50, 50, 2, 50, 51, 2, 50, 52,
    2, 50, 53, 2, 50, 54, 2, 50, 55, 2, 50, 56,
    2, 50, 57, 2, 51, 48, 2, 51, 49, 2, 51, 50,
    2, 51, 51, 2, 51, 52, 2, 51, 53, 3, 225, 132,
    128, 3, 225, 132, 130, 3, 225, 132, 131, 3, 225, 132,
    133, 3, 225, 132, 134, 3, 225, 132, 135, 3, 225, 132,
    137, 3, 225, 132, 139, 3, 225, 132, 140, 3, 225, 132,
    142, 3, 225, 132, 143, 3, 225, 132, 144, 3, 225, 132,
    145, 3, 225, 132, 146, 3, 234, 176, 128, 3, 235, 130,
    152, 3, 235, 139, 164, 3, 235, 157, 188, 3, 235, 167,
    136, 3, 235, 176, 148, 3, 236, 130, 172, 3, 236, 149,
    132, 3, 236, 158, 144, 3, 236, 176, 168, 3, 236, 185,
    180, 3, 237, 131, 128, 3, 237, 140, 140, 3, 237, 149,
    152, 6, 236, 176, 184, 234, 179, 160, 6, 236, 163, 188,
    236, 157, 152, 3, 236, 154, 176, 3, 228, 184, 128, 3,
    228, 186, 140, 3, 228, 184, 137, 3, 229, 155, 155, 3,
    228, 186, 148, 3, 229, 133, 173, 3, 228, 184, 131, 3,
    229, 133, 171, 3, 228, 185, 157, 3, 229, 141, 129, 3,
    230, 156, 136, 3, 231, 129, 171, 3, 230, 176, 180, 3,
    230, 156, 168, 3, 233, 135, 145, 3, 229, 156, 159, 3,
    230, 151, 165, 3, 230, 160, 170, 3, 230, 156, 137, 3,
    231, 164, 190, 3, 229, 144, 141, 3, 231, 137, 185, 3,
    232, 178, 161, 3, 231, 165, 157, 3, 229, 138, 180, 3,
    231, 167, 152, 3, 231, 148, 183, 3, 229, 165, 179, 3,
    233, 129, 169, 3, 229, 132, 170, 3, 229, 141, 176, 3,
    230, 179, 168, 3, 233, 160, 133, 3, 228, 188, 145, 3,
    229, 134, 153, 3, 230, 173, 163, 3, 228, 184, 138, 3,
    228, 184, 173, 3, 228, 184, 139, 3, 229, 183, 166, 3,
    229, 143, 179, 3, 229, 140, 187, 3, 229, 174, 151, 3,
    229, 173, 166, 3, 231, 155, 163, 3, 228, 188, 129, 3,
    232, 179, 135, 3, 229, 141, 148, 3, 229, 164, 156, 2,
    51, 54, 2, 51, 55, 2, 51, 56, 2, 51, 57, 2,
    52, 48, 2, 52, 49, 2, 52, 50, 2, 52, 51, 2,
    52, 52, 2, 52, 53, 2, 52, 54, 2, 52, 55, 2,
    52, 56, 2, 52, 57, 2, 53, 48, 4, 49, 230, 156,
    136, 4, 50, 230, 156, 136, 4, 51, 230, 156, 136, 4,
    52, 230, 156, 136, 4, 53, 230, 156, 136, 4, 54, 230,
    156, 136, 4, 55, 230, 156, 136, 4, 56, 230, 156, 136,
    4, 57, 230, 156, 136, 5, 49, 48, 230, 156, 136, 5,
    49, 49, 230, 156, 136, 5, 49, 50, 230, 156, 136, 2,
    72, 103, 3, 101, 114, 103, 2, 101, 86, 3, 76, 84,
    68, 3, 227, 130, 162, 3, 227, 130, 164, 3, 227, 130,
    166, 3, 227, 130, 168, 3, 227, 130, 170, 3, 227, 130,
    171, 3, 227, 130, 173, 3, 227, 130, 175, 3, 227, 130,
    177, 3, 227, 130, 179, 3, 227, 130, 181, 3, 227, 130,
    183, 3, 227, 130, 185, 3, 227, 130, 187, 3, 227, 130,
    189, 3, 227, 130, 191, 3, 227, 131, 129, 3, 227, 131,
    132, 3, 227, 131, 134, 3, 227, 131, 136, 3, 227, 131,
    138, 3, 227, 131, 139, 3, 227, 131, 140, 3, 227, 131,
    141, 3, 227, 131, 142, 3, 227, 131, 143, 3, 227, 131,
    146, 3, 227, 131, 149, 3, 227, 131, 152, 3, 227, 131,
    155, 3, 227, 131, 158, 3, 227, 131, 159, 3, 227, 131,
    160, 3, 227, 131, 161, 3, 227, 131, 162, 3, 227, 131,
    164, 3, 227, 131, 166, 3, 227, 131, 168, 3, 227, 131,
    169, 3, 227, 131, 170, 3, 227, 131, 171, 3, 227, 131,
    172, 3, 227, 131, 173, 3, 227, 131, 175, 3, 227, 131,
    176, 3, 227, 131, 177, 3, 227, 131, 178, 6, 228, 187,
    164, 229, 146, 140, 12, 227, 130, 162, 227, 131, 145, 227,
    131, 188, 227, 131, 136, 12, 227, 130, 162, 227, 131, 171,
    227, 131, 149, 227, 130, 161, 12, 227, 130, 162, 227, 131,
    179, 227, 131, 154, 227, 130, 162, 9, 227, 130, 162, 227,
    131, 188, 227, 131, 171, 12, 227, 130, 164, 227, 131, 139,
    227, 131, 179, 227, 130, 176, 9, 227, 130, 164, 227, 131,
    179, 227, 131, 129, 9, 227, 130, 166, 227, 130, 169, 227,
    131, 179, 15, 227, 130, 168, 227, 130, 185, 227, 130, 175,
    227, 131, 188, 227, 131, 137, 12, 227, 130, 168, 227, 131,
    188, 227, 130, 171, 227, 131, 188, 9, 227, 130, 170, 227,
    131, 179, 227, 130, 185, 9, 227, 130, 170, 227, 131, 188,
    227, 131, 160, 9, 227, 130, 171, 227, 130, 164, 227, 131,
    170, 12, 227, 130, 171, 227, 131, 169, 227, 131, 131, 227,
    131, 136, 12, 227, 130, 171, 227, 131, 173, 227, 131, 170,
    227, 131, 188, 9, 227, 130, 172, 227, 131, 173, 227, 131,
    179, 9, 227, 130, 172, 227, 131, 179, 227, 131, 158, 6,
    227, 130, 174, 227, 130, 172, 9, 227, 130, 174, 227, 131,
    139, 227, 131, 188, 12, 227, 130, 173, 227, 131, 165, 227,
    131, 170, 227, 131, 188, 12, 227, 130, 174, 227, 131, 171,
    227, 131, 128, 227, 131, 188, 6, 227, 130, 173, 227, 131,
    173, 15, 227, 130, 173, 227, 131, 173, 227, 130, 176, 227,
    131, 169, 227, 131, 160, 18, 227, 130, 173, 227, 131, 173,
    227, 131, 161, 227, 131, 188, 227, 131, 136, 227, 131, 171,
    15, 227, 130, 173, 227, 131, 173, 227, 131, 175, 227, 131,
    131, 227, 131, 136, 9, 227, 130, 176, 227, 131, 169, 227,
    131, 160, 15, 227, 130, 176, 227, 131, 169, 227, 131, 160,
    227, 131, 136, 227, 131, 179, 15, 227, 130, 175, 227, 131,
    171, 227, 130, 188, 227, 130, 164, 227, 131, 173, 12, 227,
    130, 175, 227, 131, 173, 227, 131, 188, 227, 131, 141, 9,
    227, 130, 177, 227, 131, 188, 227, 130, 185, 9, 227, 130,
    179, 227, 131, 171, 227, 131, 138, 9, 227, 130, 179, 227,
    131, 188, 227, 131, 157, 12, 227, 130, 181, 227, 130, 164,
    227, 130, 175, 227, 131, 171, 15, 227, 130, 181, 227, 131,
    179, 227, 131, 129, 227, 131, 188, 227, 131, 160, 12, 227,
    130, 183, 227, 131, 170, 227, 131, 179, 227, 130, 176, 9,
    227, 130, 187, 227, 131, 179, 227, 131, 129, 9, 227, 130,
    187, 227, 131, 179, 227, 131, 136, 9, 227, 131, 128, 227,
    131, 188, 227, 130, 185, 6, 227, 131, 135, 227, 130, 183,
    6, 227, 131, 137, 227, 131, 171, 6, 227, 131, 136, 227,
    131, 179, 6, 227, 131, 138, 227, 131, 142, 9, 227, 131,
    142, 227, 131, 131, 227, 131, 136, 9, 227, 131, 143, 227,
    130, 164, 227, 131, 132, 15, 227, 131, 145, 227, 131, 188,
    227, 130, 187, 227, 131, 179, 227, 131, 136, 9, 227, 131,
    145, 227, 131, 188, 227, 131, 132, 12, 227, 131, 144, 227,
    131, 188, 227, 131, 172, 227, 131, 171, 15, 227, 131, 148,
    227, 130, 162, 227, 130, 185, 227, 131, 136, 227, 131, 171,
    9, 227, 131, 148, 227, 130, 175, 227, 131, 171, 6, 227,
    131, 148, 227, 130, 179, 6, 227, 131, 147, 227, 131, 171,
    15, 227, 131, 149, 227, 130, 161, 227, 131, 169, 227, 131,
    131, 227, 131, 137, 12, 227, 131, 149, 227, 130, 163, 227,
    131, 188, 227, 131, 136, 15, 227, 131, 150, 227, 131, 131,
    227, 130, 183, 227, 130, 167, 227, 131, 171, 9, 227, 131,
    149, 227, 131, 169, 227, 131, 179, 15, 227, 131, 152, 227,
    130, 175, 227, 130, 191, 227, 131, 188, 227, 131, 171, 6,
    227, 131, 154, 227, 130, 189, 9, 227, 131, 154, 227, 131,
    139, 227, 131, 146, 9, 227, 131, 152, 227, 131, 171, 227,
    131, 132, 9, 227, 131, 154, 227, 131, 179, 227, 130, 185,
    9, 227, 131, 154, 227, 131, 188, 227, 130, 184, 9, 227,
    131, 153, 227, 131, 188, 227, 130, 191, 12, 227, 131, 157,
    227, 130, 164, 227, 131, 179, 227, 131, 136, 9, 227, 131,
    156, 227, 131, 171, 227, 131, 136, 6, 227, 131, 155, 227,
    131, 179, 9, 227, 131, 157, 227, 131, 179, 227, 131, 137,
    9, 227, 131, 155, 227, 131, 188, 227, 131, 171, 9, 227,
    131, 155, 227, 131, 188, 227, 131, 179, 12, 227, 131, 158,
    227, 130, 164, 227, 130, 175, 227, 131, 173, 9, 227, 131,
    158, 227, 130, 164, 227, 131, 171, 9, 227, 131, 158, 227,
    131, 131, 227, 131, 143, 9, 227, 131, 158, 227, 131, 171,
    227, 130, 175, 15, 227, 131, 158, 227, 131, 179, 227, 130,
    183, 227, 131, 167, 227, 131, 179, 12, 227, 131, 159, 227,
    130, 175, 227, 131, 173, 227, 131, 179, 6, 227, 131, 159,
    227, 131, 170, 15, 227, 131, 159, 227, 131, 170, 227, 131,
    144, 227, 131, 188, 227, 131, 171, 6, 227, 131, 161, 227,
    130, 172, 12, 227, 131, 161, 227, 130, 172, 227, 131, 136,
    227, 131, 179, 12, 227, 131, 161, 227, 131, 188, 227, 131,
    136, 227, 131, 171, 9, 227, 131, 164, 227, 131, 188, 227,
    131, 137, 9, 227, 131, 164, 227, 131, 188, 227, 131, 171,
    9, 227, 131, 166, 227, 130, 162, 227, 131, 179, 12, 227,
    131, 170, 227, 131, 131, 227, 131, 136, 227, 131, 171, 6,
    227, 131, 170, 227, 131, 169, 9, 227, 131, 171, 227, 131,
    148, 227, 131, 188, 12, 227, 131, 171, 227, 131, 188, 227,
    131, 150, 227, 131, 171, 6, 227, 131, 172, 227, 131, 160,
    15, 227, 131, 172, 227, 131, 179, 227, 131, 136, 227, 130,
    178, 227, 131, 179, 9, 227, 131, 175, 227, 131, 131, 227,
    131, 136, 4, 48, 231, 130, 185, 4, 49, 231, 130, 185,
    4, 50, 231, 130, 185, 4, 51, 231, 130, 185, 4, 52,
    231, 130, 185, 4, 53, 231, 130, 185, 4, 54, 231, 130,
    185, 4, 55, 231, 130, 185, 4, 56, 231, 130, 185, 4,
    57, 231, 130, 185, 5, 49, 48, 231, 130, 185, 5, 49,
    49, 231, 130, 185, 5, 49, 50, 231, 130, 185, 5, 49,
    51, 231, 130, 185, 5, 49, 52, 231, 130, 185, 5, 49,
    53, 231, 130, 185, 5, 49, 54, 231, 130, 185, 5, 49,
    55, 231, 130, 185, 5, 49, 56, 231, 130, 185, 5, 49,
    57, 231, 130, 185, 5, 50, 48, 231, 130, 185, 5, 50,
    49, 231, 130, 185, 5, 50, 50, 231, 130, 185, 5, 50,
    51, 231, 130, 185, 5, 50, 52, 231, 130, 185, 3, 104,
    80, 97, 2, 100, 97, 2, 65, 85, 3, 98, 97, 114,
    2, 111, 86, 2, 112, 99, 2, 100, 109, 3, 100, 109,
    50, 3, 100, 109, 51, 2, 73, 85, 6, 229, 185, 179,
    230, 136, 144, 6, 230, 152, 173, 229, 146, 140, 6, 229,
    164, 167, 230, 173, 163, 6, 230, 152, 142, 230, 178, 187,
    12, 230, 160, 170, 229, 188, 143, 228, 188, 154, 231, 164,
    190, 2, 112, 65, 2, 110, 65, 3, 206, 188, 65, 2,
    109, 65, 2, 107, 65, 2, 75, 66, 2, 77, 66, 2,
    71, 66, 3, 99, 97, 108, 4, 107, 99, 97, 108, 2,
    112, 70, 2, 110, 70, 3, 206, 188, 70, 3, 206, 188,
    103, 2, 109, 103, 2, 107, 103, 2, 72, 122, 3, 107,
    72, 122, 3, 77, 72, 122, 3, 71, 72, 122, 3, 84,
    72, 122, 3, 206, 188, 108, 2, 109, 108, 2, 100, 108,
    2, 107, 108, 2, 102, 109, 2, 110, 109, 3, 206, 188,
    109, 2, 109, 109, 2, 99, 109, 2, 107, 109, 3, 109,
    109, 50, 3, 99, 109, 50, 2, 109, 50, 3, 107, 109,
    50, 3, 109, 109, 51, 3, 99, 109, 51, 2, 109, 51,
    3, 107, 109, 51, 5, 109, 226, 136, 149, 115, 6, 109,
    226, 136, 149, 115, 50, 2, 80, 97, 3, 107, 80, 97,
    3, 77, 80, 97, 3, 71, 80, 97, 3, 114, 97, 100,
    7, 114, 97, 100, 226, 136, 149, 115, 8, 114, 97, 100,
    226, 136, 149, 115, 50, 2, 112, 115, 2, 110, 115, 3,
    206, 188, 115, 2, 109, 115, 2, 112, 86, 2, 110, 86,
    3, 206, 188, 86, 2, 109, 86, 2, 107, 86, 2, 77,
    86, 2, 112, 87, 2, 110, 87, 3, 206, 188, 87, 2,
    109, 87, 2, 107, 87, 2, 77, 87, 3, 107, 206, 169,
    3, 77, 206, 169, 4, 97, 46, 109, 46, 2, 66, 113,
    2, 99, 99, 2, 99, 100, 6, 67, 226, 136, 149, 107,
    103, 3, 67, 111, 46, 2, 100, 66, 2, 71, 121, 2,
    104, 97, 2, 72, 80, 2, 105, 110, 2, 75, 75, 2,
    75, 77, 2, 107, 116, 2, 108, 109, 2, 108, 110, 3,
    108, 111, 103, 2, 108, 120, 2, 109, 98, 3, 109, 105,
    108, 3, 109, 111, 108, 2, 80, 72, 4, 112, 46, 109,
    46, 3, 80, 80, 77, 2, 80, 82, 2, 115, 114, 2,
    83, 118, 2, 87, 98, 5, 86, 226, 136, 149, 109, 5,
    65, 226, 136, 149, 109, 4, 49, 230, 151, 165, 4, 50,
    230, 151, 165, 4, 51, 230, 151, 165, 4, 52, 230, 151,
    165, 4, 53, 230, 151, 165, 4, 54, 230, 151, 165, 4,
    55, 230, 151, 165, 4, 56, 230, 151, 165, 4, 57, 230,
    151, 165, 5, 49, 48, 230, 151, 165, 5, 49, 49, 230,
    151, 165, 5, 49, 50, 230, 151, 165, 5, 49, 51, 230,
    151, 165, 5, 49, 52, 230, 151, 165, 5, 49, 53, 230,
    151, 165, 5, 49, 54, 230, 151, 165, 5, 49, 55, 230,
    151, 165, 5, 49, 56, 230, 151, 165, 5, 49, 57, 230,
    151, 165, 5, 50, 48, 230, 151, 165, 5, 50, 49, 230,
    151, 165, 5, 50, 50, 230, 151, 165, 5, 50, 51, 230,
    151, 165, 5, 50, 52, 230, 151, 165, 5, 50, 53, 230,
    151, 165, 5, 50, 54, 230, 151, 165, 5, 50, 55, 230,
    151, 165, 5, 50, 56, 230, 151, 165, 5, 50, 57, 230,
    151, 165, 5, 51, 48, 230, 151, 165, 5, 51, 49, 230,
    151, 165, 3, 103, 97, 108, 2, 209, 138, 2, 209, 140,
    3, 234, 157, 175, 2, 196, 166, 2, 197, 147, 3, 234,
    156, 167, 3, 234, 172, 183, 2, 201, 171, 3, 234, 173,
    146, 2, 202, 141, 3, 232, 177, 136, 3, 230, 155, 180,
    3, 232, 187, 138, 3, 232, 179, 136, 3, 230, 187, 145,
    3, 228, 184, 178, 3, 229, 143, 165, 3, 233, 190, 156,
    3, 233, 190, 156, 3, 229, 165, 145, 3, 233, 135, 145,
    3, 229, 150, 135, 3, 229, 165, 136, 3, 230, 135, 182,
    3, 231, 153, 169, 3, 231, 190, 133, 3, 232, 152, 191,
    3, 232, 158, 186, 3, 232, 163, 184, 3, 233, 130, 143,
    3, 230, 168, 130, 3, 230, 180, 155, 3, 231, 131, 153,
    3, 231, 143, 158, 3, 232, 144, 189, 3, 233, 133, 170,
    3, 233, 167, 177, 3, 228, 186, 130, 3, 229, 141, 181,
    3, 230, 172, 132, 3, 231, 136, 155, 3, 232, 152, 173,
    3, 233, 184, 158, 3, 229, 181, 144, 3, 230, 191, 171,
    3, 232, 151, 141, 3, 232, 165, 164, 3, 230, 139, 137,
    3, 232, 135, 152, 3, 232, 160, 159, 3, 229, 187, 138,
    3, 230, 156, 151, 3, 230, 181, 170, 3, 231, 139, 188,
    3, 233, 131, 142, 3, 228, 190, 134, 3, 229, 134, 183,
    3, 229, 139, 158, 3, 230, 147, 132, 3, 230, 171, 147,
    3, 231, 136, 144, 3, 231, 155, 167, 3, 232, 128, 129,
    3, 232, 152, 134, 3, 232, 153, 156, 3, 232, 183, 175,
    3, 233, 156, 178, 3, 233, 173, 175, 3, 233, 183, 186,
    3, 231, 162, 140, 3, 231, 165, 191, 3, 231, 182, 160,
    3, 232, 143, 137, 3, 233, 140, 132, 3, 233, 185, 191,
    3, 232, 171, 150, 3, 229, 163, 159, 3, 229, 188, 132,
    3, 231, 177, 160, 3, 232, 129, 190, 3, 231, 137, 162,
    3, 231, 163, 138, 3, 232, 179, 130, 3, 233, 155, 183,
    3, 229, 163, 152, 3, 229, 177, 162, 3, 230, 168, 147,
    3, 230, 183, 154, 3, 230, 188, 143, 3, 231, 180, 175,
    3, 231, 184, 183, 3, 233, 153, 139, 3, 229, 139, 146,
    3, 232, 130, 139, 3, 229, 135, 156, 3, 229, 135, 140,
    3, 231, 168, 156, 3, 231, 182, 190, 3, 232, 143, 177,
    3, 233, 153, 181, 3, 232, 174, 128, 3, 230, 139, 143,
    3, 230, 168, 130, 3, 232, 171, 190, 3, 228, 184, 185,
    3, 229, 175, 167, 3, 230, 128, 146, 3, 231, 142, 135,
    3, 231, 149, 176, 3, 229, 140, 151, 3, 231, 163, 187,
    3, 228, 190, 191, 3, 229, 190, 169, 3, 228, 184, 141,
    3, 230, 179, 140, 3, 230, 149, 184, 3, 231, 180, 162,
    3, 229, 143, 131, 3, 229, 161, 158, 3, 231, 156, 129,
    3, 232, 145, 137, 3, 232, 170, 170, 3, 230, 174, 186,
    3, 232, 190, 176, 3, 230, 178, 136, 3, 230, 139, 190,
    3, 232, 139, 165, 3, 230, 142, 160, 3, 231, 149, 165,
    3, 228, 186, 174, 3, 229, 133, 169, 3, 229, 135, 137,
    3, 230, 162, 129, 3, 231, 179, 167, 3, 232, 137, 175,
    3, 232, 171, 146, 3, 233, 135, 143, 3, 229, 139, 181,
    3, 229, 145, 130, 3, 229, 165, 179, 3, 229, 187, 172,
    3, 230, 151, 133, 3, 230, 191, 190, 3, 231, 164, 170,
    3, 233, 150, 173, 3, 233, 169, 170, 3, 233, 186, 151,
    3, 233, 187, 142, 3, 229, 138, 155, 3, 230, 155, 134,
    3, 230, 173, 183, 3, 232, 189, 162, 3, 229, 185, 180,
    3, 230, 134, 144, 3, 230, 136, 128, 3, 230, 146, 154,
    3, 230, 188, 163, 3, 231, 133, 137, 3, 231, 146, 137,
    3, 231, 167, 138, 3, 231, 183, 180, 3, 232, 129, 175,
    3, 232, 188, 166, 3, 232, 147, 174, 3, 233, 128, 163,
    3, 233, 141, 138, 3, 229, 136, 151, 3, 229, 138, 163,
    3, 229, 146, 189, 3, 231, 131, 136, 3, 232, 163, 130,
    3, 232, 170, 170, 3, 229, 187, 137, 3, 229, 191, 181,
    3, 230, 141, 187, 3, 230, 174, 174, 3, 231, 176, 190,
    3, 231, 141, 181, 3, 228, 187, 164, 3, 229, 155, 185,
    3, 229, 175, 167, 3, 229, 182, 186, 3, 230, 128, 156,
    3, 231, 142, 178, 3, 231, 145, 169, 3, 231, 190, 154,
    3, 232, 129, 134, 3, 233, 136, 180, 3, 233, 155, 182,
    3, 233, 157, 136, 3, 233, 160, 152, 3, 228, 190, 139,
    3, 231, 166, 174, 3, 233, 134, 180, 3, 233, 154, 184,
    3, 230, 131, 161, 3, 228, 186, 134, 3, 229, 131, 154,
    3, 229, 175, 174, 3, 229, 176, 191, 3, 230, 150, 153,
    3, 230, 168, 130, 3, 231, 135, 142, 3, 231, 153, 130,
    3, 232, 147, 188, 3, 233, 129, 188, 3, 233, 190, 141,
    3, 230, 154, 136, 3, 233, 152, 174, 3, 229, 138, 137,
    3, 230, 157, 187, 3, 230, 159, 179, 3, 230, 181, 129,
    3, 230, 186, 156, 3, 231, 144, 137, 3, 231, 149, 153,
    3, 231, 161, 171, 3, 231, 180, 144, 3, 233, 161, 158,
    3, 229, 133, 173, 3, 230, 136, 174, 3, 233, 153, 184,
    3, 229, 128, 171, 3, 229, 180, 153, 3, 230, 183, 170,
    3, 232, 188, 170, 3, 229, 190, 139, 3, 230, 133, 132,
    3, 230, 160, 151, 3, 231, 142, 135, 3, 233, 154, 134,
    3, 229, 136, 169, 3, 229, 144, 143, 3, 229, 177, 165,
    3, 230, 152, 147, 3, 230, 157, 142, 3, 230, 162, 168,
    3, 230, 179, 165, 3, 231, 144, 134, 3, 231, 151, 162,
    3, 231, 189, 185, 3, 232, 163, 143, 3, 232, 163, 161,
    3, 233, 135, 140, 3, 233, 155, 162, 3, 229, 140, 191,
    3, 230, 186, 186, 3, 229, 144, 157, 3, 231, 135, 144,
    3, 231, 146, 152, 3, 232, 151, 186, 3, 233, 154, 163,
    3, 233, 177, 151, 3, 233, 186, 159, 3, 230, 158, 151,
    3, 230, 183, 139, 3, 232, 135, 168, 3, 231, 171, 139,
    3, 231, 172, 160, 3, 231, 178, 146, 3, 231, 139, 128,
    3, 231, 130, 153, 3, 232, 173, 152, 3, 228, 187, 128,
    3, 232, 140, 182, 3, 229, 136, 186, 3, 229, 136, 135,
    3, 229, 186, 166, 3, 230, 139, 147, 3, 231, 179, 150,
    3, 229, 174, 133, 3, 230, 180, 158, 3, 230, 154, 180,
    3, 232, 188, 187, 3, 232, 161, 140, 3, 233, 153, 141,
    3, 232, 166, 139, 3, 229, 187, 147, 3, 229, 133, 128,
    3, 229, 151, 128, 3, 229, 161, 154, 3, 230, 153, 180,
    3, 229, 135, 158, 3, 231, 140, 170, 3, 231, 155, 138,
    3, 231, 164, 188, 3, 231, 165, 158, 3, 231, 165, 165,
    3, 231, 166, 143, 3, 233, 157, 150, 3, 231, 178, 190,
    3, 231, 190, 189, 3, 232, 152, 146, 3, 232, 171, 184,
    3, 233, 128, 184, 3, 233, 131, 189, 3, 233, 163, 175,
    3, 233, 163, 188, 3, 233, 164, 168, 3, 233, 182, 180,
    3, 233, 131, 158, 3, 233, 154, 183, 3, 228, 190, 174,
    3, 229, 131, 167, 3, 229, 133, 141, 3, 229, 139, 137,
    3, 229, 139, 164, 3, 229, 141, 145, 3, 229, 150, 157,
    3, 229, 152, 134, 3, 229, 153, 168, 3, 229, 161, 128,
    3, 229, 162, 168, 3, 229, 177, 164, 3, 229, 177, 174,
    3, 230, 130, 148, 3, 230, 133, 168, 3, 230, 134, 142,
    3, 230, 135, 178, 3, 230, 149, 143, 3, 230, 151, 162,
    3, 230, 154, 145, 3, 230, 162, 133, 3, 230, 181, 183,
    3, 230, 184, 154, 3, 230, 188, 162, 3, 231, 133, 174,
    3, 231, 136, 171, 3, 231, 144, 162, 3, 231, 162, 145,
    3, 231, 164, 190, 3, 231, 165, 137, 3, 231, 165, 136,
    3, 231, 165, 144, 3, 231, 165, 150, 3, 231, 165, 157,
    3, 231, 166, 141, 3, 231, 166, 142, 3, 231, 169, 128,
    3, 231, 170, 129, 3, 231, 175, 128, 3, 231, 183, 180,
    3, 231, 184, 137, 3, 231, 185, 129, 3, 231, 189, 178,
    3, 232, 128, 133, 3, 232, 135, 173, 3, 232, 137, 185,
    3, 232, 137, 185, 3, 232, 145, 151, 3, 232, 164, 144,
    3, 232, 166, 150, 3, 232, 172, 129, 3, 232, 172, 185,
    3, 232, 179, 147, 3, 232, 180, 136, 3, 232, 190, 182,
    3, 233, 128, 184, 3, 233, 155, 163, 3, 233, 159, 191,
    3, 233, 160, 187, 3, 230, 129, 181, 4, 240, 164, 139,
    174, 3, 232, 136, 152, 3, 228, 184, 166, 3, 229, 134,
    181, 3, 229, 133, 168, 3, 228, 190, 128, 3, 229, 133,
    133, 3, 229, 134, 128, 3, 229, 139, 135, 3, 229, 139,
    186, 3, 229, 150, 157, 3, 229, 149, 149, 3, 229, 150,
    153, 3, 229, 151, 162, 3, 229, 161, 154, 3, 229, 162,
    179, 3, 229, 165, 132, 3, 229, 165, 148, 3, 229, 169,
    162, 3, 229, 172, 168, 3, 229, 187, 146, 3, 229, 187,
    153, 3, 229, 189, 169, 3, 229, 190, 173, 3, 230, 131,
    152, 3, 230, 133, 142, 3, 230, 132, 136, 3, 230, 134,
    142, 3, 230, 133, 160, 3, 230, 135, 178, 3, 230, 136,
    180, 3, 230, 143, 132, 3, 230, 144, 156, 3, 230, 145,
    146, 3, 230, 149, 150, 3, 230, 153, 180, 3, 230, 156,
    151, 3, 230, 156, 155, 3, 230, 157, 150, 3, 230, 173,
    185, 3, 230, 174, 186, 3, 230, 181, 129, 3, 230, 187,
    155, 3, 230, 187, 139, 3, 230, 188, 162, 3, 231, 128,
    158, 3, 231, 133, 174, 3, 231, 158, 167, 3, 231, 136,
    181, 3, 231, 138, 175, 3, 231, 140, 170, 3, 231, 145,
    177, 3, 231, 148, 134, 3, 231, 148, 187, 3, 231, 152,
    157, 3, 231, 152, 159, 3, 231, 155, 138, 3, 231, 155,
    155, 3, 231, 155, 180, 3, 231, 157, 138, 3, 231, 157,
    128, 3, 231, 163, 140, 3, 231, 170, 177, 3, 231, 175,
    128, 3, 231, 177, 187, 3, 231, 181, 155, 3, 231, 183,
    180, 3, 231, 188, 190, 3, 232, 128, 133, 3, 232, 141,
    146, 3, 232, 143, 175, 3, 232, 157, 185, 3, 232, 165,
    129, 3, 232, 166, 134, 3, 232, 166, 150, 3, 232, 170,
    191, 3, 232, 171, 184, 3, 232, 171, 139, 3, 232, 172,
    129, 3, 232, 171, 190, 3, 232, 171, 173, 3, 232, 172,
    185, 3, 232, 174, 138, 3, 232, 180, 136, 3, 232, 188,
    184, 3, 233, 129, 178, 3, 233, 134, 153, 3, 233, 137,
    182, 3, 233, 153, 188, 3, 233, 155, 163, 3, 233, 157,
    150, 3, 233, 159, 155, 3, 233, 159, 191, 3, 233, 160,
    139, 3, 233, 160, 187, 3, 233, 172, 146, 3, 233, 190,
    156, 4, 240, 162, 161, 138, 4, 240, 162, 161, 132, 4,
    240, 163, 143, 149, 3, 227, 174, 157, 3, 228, 128, 152,
    3, 228, 128, 185, 4, 240, 165, 137, 137, 4, 240, 165,
    179, 144, 4, 240, 167, 187, 147, 3, 233, 189, 131, 3,
    233, 190, 142, 2, 102, 102, 2, 102, 105, 2, 102, 108,
    3, 102, 102, 105, 3, 102, 102, 108, 2, 115, 116, 2,
    115, 116, 4, 213, 180, 213, 182, 4, 213, 180, 213, 165,
    4, 213, 180, 213, 171, 4, 213, 190, 213, 182, 4, 213,
    180, 213, 173, 4, 215, 153, 214, 180, 4, 215, 178, 214,
    183, 2, 215, 162, 2, 215, 144, 2, 215, 147, 2, 215,
    148, 2, 215, 155, 2, 215, 156, 2, 215, 157, 2, 215,
    168, 2, 215, 170, 1, 43, 4, 215, 169, 215, 129, 4,
    215, 169, 215, 130, 6, 215, 169, 214, 188, 215, 129, 6,
    215, 169, 214, 188, 215, 130, 4, 215, 144, 214, 183, 4,
    215, 144, 214, 184, 4, 215, 144, 214, 188, 4, 215, 145,
    214, 188, 4, 215, 146, 214, 188, 4, 215, 147, 214, 188,
    4, 215, 148, 214, 188, 4, 215, 149, 214, 188, 4, 215,
    150, 214, 188, 4, 215, 152, 214, 188, 4, 215, 153, 214,
    188, 4, 215, 154, 214, 188, 4, 215, 155, 214, 188, 4,
    215, 156, 214, 188, 4, 215, 158, 214, 188, 4, 215, 160,
    214, 188, 4, 215, 161, 214, 188, 4, 215, 163, 214, 188,
    4, 215, 164, 214, 188, 4, 215, 166, 214, 188, 4, 215,
    167, 214, 188, 4, 215, 168, 214, 188, 4, 215, 169, 214,
    188, 4, 215, 170, 214, 188, 4, 215, 149, 214, 185, 4,
    215, 145, 214, 191, 4, 215, 155, 214, 191, 4, 215, 164,
    214, 191, 4, 215, 144, 215, 156, 2, 217, 177, 2, 217,
    177, 2, 217, 187, 2, 217, 187, 2, 217, 187, 2, 217,
    187, 2, 217, 190, 2, 217, 190, 2, 217, 190, 2, 217,
    190, 2, 218, 128, 2, 218, 128, 2, 218, 128, 2, 218,
    128, 2, 217, 186, 2, 217, 186, 2, 217, 186, 2, 217,
    186, 2, 217, 191, 2, 217, 191, 2, 217, 191, 2, 217,
    191, 2, 217, 185, 2, 217, 185, 2, 217, 185, 2, 217,
    185, 2, 218, 164, 2, 218, 164, 2, 218, 164, 2, 218,
    164, 2, 218, 166, 2, 218, 166, 2, 218, 166, 2, 218,
    166, 2, 218, 132, 2, 218, 132, 2, 218, 132, 2, 218,
    132, 2, 218, 131, 2, 218, 131, 2, 218, 131, 2, 218,
    131, 2, 218, 134, 2, 218, 134, 2, 218, 134, 2, 218,
    134, 2, 218, 135, 2, 218, 135, 2, 218, 135, 2, 218,
    135, 2, 218, 141, 2, 218, 141, 2, 218, 140, 2, 218,
    140, 2, 218, 142, 2, 218, 142, 2, 218, 136, 2, 218,
    136, 2, 218, 152, 2, 218, 152, 2, 218, 145, 2, 218,
    145, 2, 218, 169, 2, 218, 169, 2, 218, 169, 2, 218,
    169, 2, 218, 175, 2, 218, 175, 2, 218, 175, 2, 218,
    175, 2, 218, 179, 2, 218, 179, 2, 218, 179, 2, 218,
    179, 2, 218, 177, 2, 218, 177, 2, 218, 177, 2, 218,
    177, 2, 218, 186, 2, 218, 186, 2, 218, 187, 2, 218,
    187, 2, 218, 187, 2, 218, 187, 2, 219, 128, 2, 219,
    128, 2, 219, 129, 2, 219, 129, 2, 219, 129, 2, 219,
    129, 2, 218, 190, 2, 218, 190, 2, 218, 190, 2, 218,
    190, 2, 219, 146, 2, 219, 146, 2, 219, 147, 2, 219,
    147, 2, 218, 173, 2, 218, 173, 2, 218, 173, 2, 218,
    173, 2, 219, 135, 2, 219, 135, 2, 219, 134, 2, 219,
    134, 2, 219, 136, 2, 219, 136, 4, 219, 135, 217, 180,
    2, 219, 139, 2, 219, 139, 2, 219, 133, 2, 219, 133,
    2, 219, 137, 2, 219, 137, 2, 219, 144, 2, 219, 144,
    2, 219, 144, 2, 219, 144, 2, 217, 137, 2, 217, 137,
    4, 216, 166, 216, 167, 4, 216, 166, 216, 167, 4, 216,
    166, 219, 149, 4, 216, 166, 219, 149, 4, 216, 166, 217,
    136, 4, 216, 166, 217, 136, 4, 216, 166, 219, 135, 4,
    216, 166, 219, 135, 4, 216, 166, 219, 134, 4, 216, 166,
    219, 134, 4, 216, 166, 219, 136, 4, 216, 166, 219, 136,
    4, 216, 166, 219, 144, 4, 216, 166, 219, 144, 4, 216,
    166, 219, 144, 4, 216, 166, 217, 137, 4, 216, 166, 217,
    137, 4, 216, 166, 217, 137, 2, 219, 140, 2, 219, 140,
    2, 219, 140, 2, 219, 140, 4, 216, 166, 216, 172, 4,
    216, 166, 216, 173, 4, 216, 166, 217, 133, 4, 216, 166,
    217, 137, 4, 216, 166, 217, 138, 4, 216, 168, 216, 172,
    4, 216, 168, 216, 173, 4, 216, 168, 216, 174, 4, 216,
    168, 217, 133, 4, 216, 168, 217, 137, 4, 216, 168, 217,
    138, 4, 216, 170, 216, 172, 4, 216, 170, 216, 173, 4,
    216, 170, 216, 174, 4, 216, 170, 217, 133, 4, 216, 170,
    217, 137, 4, 216, 170, 217, 138, 4, 216, 171, 216, 172,
    4, 216, 171, 217, 133, 4, 216, 171, 217, 137, 4, 216,
    171, 217, 138, 4, 216, 172, 216, 173, 4, 216, 172, 217,
    133, 4, 216, 173, 216, 172, 4, 216, 173, 217, 133, 4,
    216, 174, 216, 172, 4, 216, 174, 216, 173, 4, 216, 174,
    217, 133, 4, 216, 179, 216, 172, 4, 216, 179, 216, 173,
    4, 216, 179, 216, 174, 4, 216, 179, 217, 133, 4, 216,
    181, 216, 173, 4, 216, 181, 217, 133, 4, 216, 182, 216,
    172, 4, 216, 182, 216, 173, 4, 216, 182, 216, 174, 4,
    216, 182, 217, 133, 4, 216, 183, 216, 173, 4, 216, 183,
    217, 133, 4, 216, 184, 217, 133, 4, 216, 185, 216, 172,
    4, 216, 185, 217, 133, 4, 216, 186, 216, 172, 4, 216,
    186, 217, 133, 4, 217, 129, 216, 172, 4, 217, 129, 216,
    173, 4, 217, 129, 216, 174, 4, 217, 129, 217, 133, 4,
    217, 129, 217, 137, 4, 217, 129, 217, 138, 4, 217, 130,
    216, 173, 4, 217, 130, 217, 133, 4, 217, 130, 217, 137,
    4, 217, 130, 217, 138, 4, 217, 131, 216, 167, 4, 217,
    131, 216, 172, 4, 217, 131, 216, 173, 4, 217, 131, 216,
    174, 4, 217, 131, 217, 132, 4, 217, 131, 217, 133, 4,
    217, 131, 217, 137, 4, 217, 131, 217, 138, 4, 217, 132,
    216, 172, 4, 217, 132, 216, 173, 4, 217, 132, 216, 174,
    4, 217, 132, 217, 133, 4, 217, 132, 217, 137, 4, 217,
    132, 217, 138, 4, 217, 133, 216, 172, 4, 217, 133, 216,
    173, 4, 217, 133, 216, 174, 4, 217, 133, 217, 133, 4,
    217, 133, 217, 137, 4, 217, 133, 217, 138, 4, 217, 134,
    216, 172, 4, 217, 134, 216, 173, 4, 217, 134, 216, 174,
    4, 217, 134, 217, 133, 4, 217, 134, 217, 137, 4, 217,
    134, 217, 138, 4, 217, 135, 216, 172, 4, 217, 135, 217,
    133, 4, 217, 135, 217, 137, 4, 217, 135, 217, 138, 4,
    217, 138, 216, 172, 4, 217, 138, 216, 173, 4, 217, 138,
    216, 174, 4, 217, 138, 217, 133, 4, 217, 138, 217, 137,
    4, 217, 138, 217, 138, 4, 216, 176, 217, 176, 4, 216,
    177, 217, 176, 4, 217, 137, 217, 176, 5, 32, 217, 140,
    217, 145, 5, 32, 217, 141, 217, 145, 5, 32, 217, 142,
    217, 145, 5, 32, 217, 143, 217, 145, 5, 32, 217, 144,
    217, 145, 5, 32, 217, 145, 217, 176, 4, 216, 166, 216,
    177, 4, 216, 166, 216, 178, 4, 216, 166, 217, 133, 4,
    216, 166, 217, 134, 4, 216, 166, 217, 137, 4, 216, 166,
    217, 138, 4, 216, 168, 216, 177, 4, 216, 168, 216, 178,
    4, 216, 168, 217, 133, 4, 216, 168, 217, 134, 4, 216,
    168, 217, 137, 4, 216, 168, 217, 138, 4, 216, 170, 216,
    177, 4, 216, 170, 216, 178, 4, 216, 170, 217, 133, 4,
    216, 170, 217, 134, 4, 216, 170, 217, 137, 4, 216, 170,
    217, 138, 4, 216, 171, 216, 177, 4, 216, 171, 216, 178,
    4, 216, 171, 217, 133, 4, 216, 171, 217, 134, 4, 216,
    171, 217, 137, 4, 216, 171, 217, 138, 4, 217, 129, 217,
    137, 4, 217, 129, 217, 138, 4, 217, 130, 217, 137, 4,
    217, 130, 217, 138, 4, 217, 131, 216, 167, 4, 217, 131,
    217, 132, 4, 217, 131, 217, 133, 4, 217, 131, 217, 137,
    4, 217, 131, 217, 138, 4, 217, 132, 217, 133, 4, 217,
    132, 217, 137, 4, 217, 132, 217, 138, 4, 217, 133, 216,
    167, 4, 217, 133, 217, 133, 4, 217, 134, 216, 177, 4,
    217, 134, 216, 178, 4, 217, 134, 217, 133, 4, 217, 134,
    217, 134, 4, 217, 134, 217, 137, 4, 217, 134, 217, 138,
    4, 217, 137, 217, 176, 4, 217, 138, 216, 177, 4, 217,
    138, 216, 178, 4, 217, 138, 217, 133, 4, 217, 138, 217,
    134, 4, 217, 138, 217, 137, 4, 217, 138, 217, 138, 4,
    216, 166, 216, 172, 4, 216, 166, 216, 173, 4, 216, 166,
    216, 174, 4, 216, 166, 217, 133, 4, 216, 166, 217, 135,
    4, 216, 168, 216, 172, 4, 216, 168, 216, 173, 4, 216,
    168, 216, 174, 4, 216, 168, 217, 133, 4, 216, 168, 217,
    135, 4, 216, 170, 216, 172, 4, 216, 170, 216, 173, 4,
    216, 170, 216, 174, 4, 216, 170, 217, 133, 4, 216, 170,
    217, 135, 4, 216, 171, 217, 133, 4, 216, 172, 216, 173,
    4, 216, 172, 217, 133, 4, 216, 173, 216, 172, 4, 216,
    173, 217, 133, 4, 216, 174, 216, 172, 4, 216, 174, 217,
    133, 4, 216, 179, 216, 172, 4, 216, 179, 216, 173, 4,
    216, 179, 216, 174, 4, 216, 179, 217, 133, 4, 216, 181,
    216, 173, 4, 216, 181, 216, 174, 4, 216, 181, 217, 133,
    4, 216, 182, 216, 172, 4, 216, 182, 216, 173, 4, 216,
    182, 216, 174, 4, 216, 182, 217, 133, 4, 216, 183, 216,
    173, 4, 216, 184, 217, 133, 4, 216, 185, 216, 172, 4,
    216, 185, 217, 133, 4, 216, 186, 216, 172, 4, 216, 186,
    217, 133, 4, 217, 129, 216, 172, 4, 217, 129, 216, 173,
    4, 217, 129, 216, 174, 4, 217, 129, 217, 133, 4, 217,
    130, 216, 173, 4, 217, 130, 217, 133, 4, 217, 131, 216,
    172, 4, 217, 131, 216, 173, 4, 217, 131, 216, 174, 4,
    217, 131, 217, 132, 4, 217, 131, 217, 133, 4, 217, 132,
    216, 172, 4, 217, 132, 216, 173, 4, 217, 132, 216, 174,
    4, 217, 132, 217, 133, 4, 217, 132, 217, 135, 4, 217,
    133, 216, 172, 4, 217, 133, 216, 173, 4, 217, 133, 216,
    174, 4, 217, 133, 217, 133, 4, 217, 134, 216, 172, 4,
    217, 134, 216, 173, 4, 217, 134, 216, 174, 4, 217, 134,
    217, 133, 4, 217, 134, 217, 135, 4, 217, 135, 216, 172,
    4, 217, 135, 217, 133, 4, 217, 135, 217, 176, 4, 217,
    138, 216, 172, 4, 217, 138, 216, 173, 4, 217, 138, 216,
    174, 4, 217, 138, 217, 133, 4, 217, 138, 217, 135, 4,
    216, 166, 217, 133, 4, 216, 166, 217, 135, 4, 216, 168,
    217, 133, 4, 216, 168, 217, 135, 4, 216, 170, 217, 133,
    4, 216, 170, 217, 135, 4, 216, 171, 217, 133, 4, 216,
    171, 217, 135, 4, 216, 179, 217, 133, 4, 216, 179, 217,
    135, 4, 216, 180, 217, 133, 4, 216, 180, 217, 135, 4,
    217, 131, 217, 132, 4, 217, 131, 217, 133, 4, 217, 132,
    217, 133, 4, 217, 134, 217, 133, 4, 217, 134, 217, 135,
    4, 217, 138, 217, 133, 4, 217, 138, 217, 135, 6, 217,
    128, 217, 142, 217, 145, 6, 217, 128, 217, 143, 217, 145,
    6, 217, 128, 217, 144, 217, 145, 4, 216, 183, 217, 137,
    4, 216, 183, 217, 138, 4, 216, 185, 217, 137, 4, 216,
    185, 217, 138, 4, 216, 186, 217, 137, 4, 216, 186, 217,
    138, 4, 216, 179, 217, 137, 4, 216, 179, 217, 138, 4,
    216, 180, 217, 137, 4, 216, 180, 217, 138, 4, 216, 173,
    217, 137, 4, 216, 173, 217, 138, 4, 216, 172, 217, 137,
    4, 216, 172, 217, 138, 4, 216, 174, 217, 137, 4, 216,
    174, 217, 138, 4, 216, 181, 217, 137, 4, 216, 181, 217,
    138, 4, 216, 182, 217, 137, 4, 216, 182, 217, 138, 4,
    216, 180, 216, 172, 4, 216, 180, 216, 173, 4, 216, 180,
    216, 174, 4, 216, 180, 217, 133, 4, 216, 180, 216, 177,
    4, 216, 179, 216, 177, 4, 216, 181, 216, 177, 4, 216,
    182, 216, 177, 4, 216, 183, 217, 137, 4, 216, 183, 217,
    138, 4, 216, 185, 217, 137, 4, 216, 185, 217, 138, 4,
    216, 186, 217, 137, 4, 216, 186, 217, 138, 4, 216, 179,
    217, 137, 4, 216, 179, 217, 138, 4, 216, 180, 217, 137,
    4, 216, 180, 217, 138, 4, 216, 173, 217, 137, 4, 216,
    173, 217, 138, 4, 216, 172, 217, 137, 4, 216, 172, 217,
    138, 4, 216, 174, 217, 137, 4, 216, 174, 217, 138, 4,
    216, 181, 217, 137, 4, 216, 181, 217, 138, 4, 216, 182,
    217, 137, 4, 216, 182, 217, 138, 4, 216, 180, 216, 172,
    4, 216, 180, 216, 173, 4, 216, 180, 216, 174, 4, 216,
    180, 217, 133, 4, 216, 180, 216, 177, 4, 216, 179, 216,
    177, 4, 216, 181, 216, 177, 4, 216, 182, 216, 177, 4,
    216, 180, 216, 172, 4, 216, 180, 216, 173, 4, 216, 180,
    216, 174, 4, 216, 180, 217, 133, 4, 216, 179, 217, 135,
    4, 216, 180, 217, 135, 4, 216, 183, 217, 133, 4, 216,
    179, 216, 172, 4, 216, 179, 216, 173, 4, 216, 179, 216,
    174, 4, 216, 180, 216, 172, 4, 216, 180, 216, 173, 4,
    216, 180, 216, 174, 4, 216, 183, 217, 133, 4, 216, 184,
    217, 133, 4, 216, 167, 217, 139, 4, 216, 167, 217, 139,
    6, 216, 170, 216, 172, 217, 133, 6, 216, 170, 216, 173,
    216, 172, 6, 216, 170, 216, 173, 216, 172, 6, 216, 170,
    216, 173, 217, 133, 6, 216, 170, 216, 174, 217, 133, 6,
    216, 170, 217, 133, 216, 172, 6, 216, 170, 217, 133, 216,
    173, 6, 216, 170, 217, 133, 216, 174, 6, 216, 172, 217,
    133, 216, 173, 6, 216, 172, 217, 133, 216, 173, 6, 216,
    173, 217, 133, 217, 138, 6, 216, 173, 217, 133, 217, 137,
    6, 216, 179, 216, 173, 216, 172, 6, 216, 179, 216, 172,
    216, 173, 6, 216, 179, 216, 172, 217, 137, 6, 216, 179,
    217, 133, 216, 173, 6, 216, 179, 217, 133, 216, 173, 6,
    216, 179, 217, 133, 216, 172, 6, 216, 179, 217, 133, 217,
    133, 6, 216, 179, 217, 133, 217, 133, 6, 216, 181, 216,
    173, 216, 173, 6, 216, 181, 216, 173, 216, 173, 6, 216,
    181, 217, 133, 217, 133, 6, 216, 180, 216, 173, 217, 133,
    6, 216, 180, 216, 173, 217, 133, 6, 216, 180, 216, 172,
    217, 138, 6, 216, 180, 217, 133, 216, 174, 6, 216, 180,
    217, 133, 216, 174, 6, 216, 180, 217, 133, 217, 133, 6,
    216, 180, 217, 133, 217, 133, 6, 216, 182, 216, 173, 217,
    137, 6, 216, 182, 216, 174, 217, 133, 6, 216, 182, 216,
    174, 217, 133, 6, 216, 183, 217, 133, 216, 173, 6, 216,
    183, 217, 133, 216, 173, 6, 216, 183, 217, 133, 217, 133,
    6, 216, 183, 217, 133, 217, 138, 6, 216, 185, 216, 172,
    217, 133, 6, 216, 185, 217, 133, 217, 133, 6, 216, 185,
    217, 133, 217, 133, 6, 216, 185, 217, 133, 217, 137, 6,
    216, 186, 217, 133, 217, 133, 6, 216, 186, 217, 133, 217,
    138, 6, 216, 186, 217, 133, 217, 137, 6, 217, 129, 216,
    174, 217, 133, 6, 217, 129, 216, 174, 217, 133, 6, 217,
    130, 217, 133, 216, 173, 6, 217, 130, 217, 133, 217, 133,
    6, 217, 132, 216, 173, 217, 133, 6, 217, 132, 216, 173,
    217, 138, 6, 217, 132, 216, 173, 217, 137, 6, 217, 132,
    216, 172, 216, 172, 6, 217, 132, 216, 172, 216, 172, 6,
    217, 132, 216, 174, 217, 133, 6, 217, 132, 216, 174, 217,
    133, 6, 217, 132, 217, 133, 216, 173, 6, 217, 132, 217,
    133, 216, 173, 6, 217, 133, 216, 173, 216, 172, 6, 217,
    133, 216, 173, 217, 133, 6, 217, 133, 216, 173, 217, 138,
    6, 217, 133, 216, 172, 216, 173, 6, 217, 133, 216, 172,
    217, 133, 6, 217, 133, 216, 174, 216, 172, 6, 217, 133,
    216, 174, 217, 133, 6, 217, 133, 216, 172, 216, 174, 6,
    217, 135, 217, 133, 216, 172, 6, 217, 135, 217, 133, 217,
    133, 6, 217, 134, 216, 173, 217, 133, 6, 217, 134, 216,
    173, 217, 137, 6, 217, 134, 216, 172, 217, 133, 6, 217,
    134, 216, 172, 217, 133, 6, 217, 134, 216, 172, 217, 137,
    6, 217, 134, 217, 133, 217, 138, 6, 217, 134, 217, 133,
    217, 137, 6, 217, 138, 217, 133, 217, 133, 6, 217, 138,
    217, 133, 217, 133, 6, 216, 168, 216, 174, 217, 138, 6,
    216, 170, 216, 172, 217, 138, 6, 216, 170, 216, 172, 217,
    137, 6, 216, 170, 216, 174, 217, 138, 6, 216, 170, 216,
    174, 217, 137, 6, 216, 170, 217, 133, 217, 138, 6, 216,
    170, 217, 133, 217, 137, 6, 216, 172, 217, 133, 217, 138,
    6, 216, 172, 216, 173, 217, 137, 6, 216, 172, 217, 133,
    217, 137, 6, 216, 179, 216, 174, 217, 137, 6, 216, 181,
    216, 173, 217, 138, 6, 216, 180, 216, 173, 217, 138, 6,
    216, 182, 216, 173, 217, 138, 6, 217, 132, 216, 172, 217,
    138, 6, 217, 132, 217, 133, 217, 138, 6, 217, 138, 216,
    173, 217, 138, 6, 217, 138, 216, 172, 217, 138, 6, 217,
    138, 217, 133, 217, 138, 6, 217, 133, 217, 133, 217, 138,
    6, 217, 130, 217, 133, 217, 138, 6, 217, 134, 216, 173,
    217, 138, 6, 217, 130, 217, 133, 216, 173, 6, 217, 132,
    216, 173, 217, 133, 6, 216, 185, 217, 133, 217, 138, 6,
    217, 131, 217, 133, 217, 138, 6, 217, 134, 216, 172, 216,
    173, 6, 217, 133, 216, 174, 217, 138, 6, 217, 132, 216,
    172, 217, 133, 6, 217, 131, 217, 133, 217, 133, 6, 217,
    132, 216, 172, 217, 133, 6, 217, 134, 216, 172, 216, 173,
    6, 216, 172, 216, 173, 217, 138, 6, 216, 173, 216, 172,
    217, 138, 6, 217, 133, 216, 172, 217, 138, 6, 217, 129,
    217, 133, 217, 138, 6, 216, 168, 216, 173, 217, 138, 6,
    217, 131, 217, 133, 217, 133, 6, 216, 185, 216, 172, 217,
    133, 6, 216, 181, 217, 133, 217, 133, 6, 216, 179, 216,
    174, 217, 138, 6, 217, 134, 216, 172, 217, 138, 6, 216,
    181, 217, 132, 219, 146, 6, 217, 130, 217, 132, 219, 146,
    8, 216, 167, 217, 132, 217, 132, 217, 135, 8, 216, 167,
    217, 131, 216, 168, 216, 177, 8, 217, 133, 216, 173, 217,
    133, 216, 175, 8, 216, 181, 217, 132, 216, 185, 217, 133,
    8, 216, 177, 216, 179, 217, 136, 217, 132, 8, 216, 185,
    217, 132, 217, 138, 217, 135, 8, 217, 136, 216, 179, 217,
    132, 217, 133, 6, 216, 181, 217, 132, 217, 137, 33, 216,
    181, 217, 132, 217, 137, 32, 216, 167, 217, 132, 217, 132,
    217, 135, 32, 216, 185, 217, 132, 217, 138, 217, 135, 32,
    217, 136, 216, 179, 217, 132, 217, 133, 15, 216, 172, 217,
    132, 32, 216, 172, 217, 132, 216, 167, 217, 132, 217, 135,
    8, 216, 177, 219, 140, 216, 167, 217, 132, 1, 44, 3,
    227, 128, 129, 3, 227, 128, 130, 1, 58, 1, 59, 1,
    33, 1, 63, 3, 227, 128, 150, 3, 227, 128, 151, 3,
    46, 46, 46, 2, 46, 46, 3, 226, 128, 148, 3, 226,
    128, 147, 1, 95, 1, 95, 1, 40, 1, 41, 1, 123,
    1, 125, 3, 227, 128, 148, 3, 227, 128, 149, 3, 227,
    128, 144, 3, 227, 128, 145, 3, 227, 128, 138, 3, 227,
    128, 139, 3, 227, 128, 136, 3, 227, 128, 137, 3, 227,
    128, 140, 3, 227, 128, 141, 3, 227, 128, 142, 3, 227,
    128, 143, 1, 91, 1, 93, 3, 32, 204, 133, 3, 32,
    204, 133, 3, 32, 204, 133, 3, 32, 204, 133, 1, 95,
    1, 95, 1, 95, 1, 44, 3, 227, 128, 129, 1, 46,
    1, 59, 1, 58, 1, 63, 1, 33, 3, 226, 128, 148,
    1, 40, 1, 41, 1, 123, 1, 125, 3, 227, 128, 148,
    3, 227, 128, 149, 1, 35, 1, 38, 1, 42, 1, 43,
    1, 45, 1, 60, 1, 62, 1, 61, 1, 92, 1, 36,
    1, 37, 1, 64, 3, 32, 217, 139, 4, 217, 128, 217,
    139, 3, 32, 217, 140, 3, 32, 217, 141, 3, 32, 217,
    142, 4, 217, 128, 217, 142, 3, 32, 217, 143, 4, 217,
    128, 217, 143, 3, 32, 217, 144, 4, 217, 128, 217, 144,
    3, 32, 217, 145, 4, 217, 128, 217, 145, 3, 32, 217,
    146, 4, 217, 128, 217, 146, 2, 216, 161, 2, 216, 162,
    2, 216, 162, 2, 216, 163, 2, 216, 163, 2, 216, 164,
    2, 216, 164, 2, 216, 165, 2, 216, 165, 2, 216, 166,
    2, 216, 166, 2, 216, 166, 2, 216, 166, 2, 216, 167,
    2, 216, 167, 2, 216, 168, 2, 216, 168, 2, 216, 168,
    2, 216, 168, 2, 216, 169, 2, 216, 169, 2, 216, 170,
    2, 216, 170, 2, 216, 170, 2, 216, 170, 2, 216, 171,
    2, 216, 171, 2, 216, 171, 2, 216, 171, 2, 216, 172,
    2, 216, 172, 2, 216, 172, 2, 216, 172, 2, 216, 173,
    2, 216, 173, 2, 216, 173, 2, 216, 173, 2, 216, 174,
    2, 216, 174, 2, 216, 174, 2, 216, 174, 2, 216, 175,
    2, 216, 175, 2, 216, 176, 2, 216, 176, 2, 216, 177,
    2, 216, 177, 2, 216, 178, 2, 216, 178, 2, 216, 179,
    2, 216, 179, 2, 216, 179, 2, 216, 179, 2, 216, 180,
    2, 216, 180, 2, 216, 180, 2, 216, 180, 2, 216, 181,
    2, 216, 181, 2, 216, 181, 2, 216, 181, 2, 216, 182,
    2, 216, 182, 2, 216, 182, 2, 216, 182, 2, 216, 183,
    2, 216, 183, 2, 216, 183, 2, 216, 183, 2, 216, 184,
    2, 216, 184, 2, 216, 184, 2, 216, 184, 2, 216, 185,
    2, 216, 185, 2, 216, 185, 2, 216, 185, 2, 216, 186,
    2, 216, 186, 2, 216, 186, 2, 216, 186, 2, 217, 129,
    2, 217, 129, 2, 217, 129, 2, 217, 129, 2, 217, 130,
    2, 217, 130, 2, 217, 130, 2, 217, 130, 2, 217, 131,
    2, 217, 131, 2, 217, 131, 2, 217, 131, 2, 217, 132,
    2, 217, 132, 2, 217, 132, 2, 217, 132, 2, 217, 133,
    2, 217, 133, 2, 217, 133, 2, 217, 133, 2, 217, 134,
    2, 217, 134, 2, 217, 134, 2, 217, 134, 2, 217, 135,
    2, 217, 135, 2, 217, 135, 2, 217, 135, 2, 217, 136,
    2, 217, 136, 2, 217, 137, 2, 217, 137, 2, 217, 138,
    2, 217, 138, 2, 217, 138, 2, 217, 138, 4, 217, 132,
    216, 162, 4, 217, 132, 216, 162, 4, 217, 132, 216, 163,
    4, 217, 132, 216, 163, 4, 217, 132, 216, 165, 4, 217,
    132, 216, 165, 4, 217, 132, 216, 167, 4, 217, 132, 216,
    167, 1, 33, 1, 34, 1, 35, 1, 36, 1, 37, 1,
    38, 1, 39, 1, 40, 1, 41, 1, 42, 1, 43, 1,
    44, 1, 45, 1, 46, 1, 47, 1, 48, 1, 49, 1,
    50, 1, 51, 1, 52, 1, 53, 1, 54, 1, 55, 1,
    56, 1, 57, 1, 58, 1, 59, 1, 60, 1, 61, 1,
    62, 1, 63, 1, 64, 1, 65, 1, 66, 1, 67, 1,
    68, 1, 69, 1, 70, 1, 71, 1, 72, 1, 73, 1,
    74, 1, 75, 1, 76, 1, 77, 1, 78, 1, 79, 1,
    80, 1, 81, 1, 82, 1, 83, 1, 84, 1, 85, 1,
    86, 1, 87, 1, 88, 1, 89, 1, 90, 1, 91, 1,
    92, 1, 93, 1, 94, 1, 95, 1, 96, 1, 97, 1,
    98, 1, 99, 1, 100, 1, 101, 1, 102, 1, 103, 1,
    104, 1, 105, 1, 106, 1, 107, 1, 108, 1, 109, 1,
    110, 1, 111, 1, 112, 1, 113, 1, 114, 1, 115, 1,
    116, 1, 117, 1, 118, 1, 119, 1, 120, 1, 121, 1,
    122, 1, 123, 1, 124, 1, 125, 1, 126, 3, 226, 166,
    133, 3, 226, 166, 134, 3, 227, 128, 130, 3, 227, 128,
    140, 3, 227, 128, 141, 3, 227, 128, 129, 3, 227, 131,
    187, 3, 227, 131, 178, 3, 227, 130, 161, 3, 227, 130,
    163, 3, 227, 130, 165, 3, 227, 130, 167, 3, 227, 130,
    169, 3, 227, 131, 163, 3, 227, 131, 165, 3, 227, 131,
    167, 3, 227, 131, 131, 3, 227, 131, 188, 3, 227, 130,
    162, 3, 227, 130, 164, 3, 227, 130, 166, 3, 227, 130,
    168, 3, 227, 130, 170, 3, 227, 130, 171, 3, 227, 130,
    173, 3, 227, 130, 175, 3, 227, 130, 177, 3, 227, 130,
    179, 3, 227, 130, 181, 3, 227, 130, 183, 3, 227, 130,
    185, 3, 227, 130, 187, 3, 227, 130, 189, 3, 227, 130,
    191, 3, 227, 131, 129, 3, 227, 131, 132, 3, 227, 131,
    134, 3, 227, 131, 136, 3, 227, 131, 138, 3, 227, 131,
    139, 3, 227, 131, 140, 3, 227, 131, 141, 3, 227, 131,
    142, 3, 227, 131, 143, 3, 227, 131, 146, 3, 227, 131,
    149, 3, 227, 131, 152, 3, 227, 131, 155, 3, 227, 131,
    158, 3, 227, 131, 159, 3, 227, 131, 160, 3, 227, 131,
    161, 3, 227, 131, 162, 3, 227, 131, 164, 3, 227, 131,
    166, 3, 227, 131, 168, 3, 227, 131, 169, 3, 227, 131,
    170, 3, 227, 131, 171, 3, 227, 131, 172, 3, 227, 131,
    173, 3, 227, 131, 175, 3, 227, 131, 179, 3, 227, 130,
    153, 3, 227, 130, 154, 3, 225, 133, 160, 3, 225, 132,
    128, 3, 225, 132, 129, 3, 225, 134, 170, 3, 225, 132,
    130, 3, 225, 134, 172, 3, 225, 134, 173, 3, 225, 132,
    131, 3, 225, 132, 132, 3, 225, 132, 133, 3, 225, 134,
    176, 3, 225, 134, 177, 3, 225, 134, 178, 3, 225, 134,
    179, 3, 225, 134, 180, 3, 225, 134, 181, 3, 225, 132,
    154, 3, 225, 132, 134, 3, 225, 132, 135, 3, 225, 132,
    136, 3, 225, 132, 161, 3, 225, 132, 137, 3, 225, 132,
    138, 3, 225, 132, 139, 3, 225, 132, 140, 3, 225, 132,
    141, 3, 225, 132, 142, 3, 225, 132, 143, 3, 225, 132,
    144, 3, 225, 132, 145, 3, 225, 132, 146, 3, 225, 133,
    161, 3, 225, 133, 162, 3, 225, 133, 163, 3, 225, 133,
    164, 3, 225, 133, 165, 3, 225, 133, 166, 3, 225, 133,
    167, 3, 225, 133, 168, 3, 225, 133, 169, 3, 225, 133,
    170, 3, 225, 133, 171, 3, 225, 133, 172, 3, 225, 133,
    173, 3, 225, 133, 174, 3, 225, 133, 175, 3, 225, 133,
    176, 3, 225, 133, 177, 3, 225, 133, 178, 3, 225, 133,
    179, 3, 225, 133, 180, 3, 225, 133, 181, 2, 194, 162,
    2, 194, 163, 2, 194, 172, 3, 32, 204, 132, 2, 194,
    166, 2, 194, 165, 3, 226, 130, 169, 3, 226, 148, 130,
    3, 226, 134, 144, 3, 226, 134, 145, 3, 226, 134, 146,
    3, 226, 134, 147, 3, 226, 150, 160, 3, 226, 151, 139,
};

inline constexpr std::uint32_t kLowerKeys[1167] = {
    0x0041, 0x0042, 0x0043, 0x0044, 0x0045, 0x0046, 0x0047, 0x0048, 0x0049, 0x004A, 0x004B, 0x004C,
    0x004D, 0x004E, 0x004F, 0x0050, 0x0051, 0x0052, 0x0053, 0x0054, 0x0055, 0x0056, 0x0057, 0x0058,
    0x0059, 0x005A, 0x00C0, 0x00C1, 0x00C2, 0x00C3, 0x00C4, 0x00C5, 0x00C6, 0x00C7, 0x00C8, 0x00C9,
    0x00CA, 0x00CB, 0x00CC, 0x00CD, 0x00CE, 0x00CF, 0x00D0, 0x00D1, 0x00D2, 0x00D3, 0x00D4, 0x00D5,
    0x00D6, 0x00D8, 0x00D9, 0x00DA, 0x00DB, 0x00DC, 0x00DD, 0x00DE, 0x0100, 0x0102, 0x0104, 0x0106,
    0x0108, 0x010A, 0x010C, 0x010E, 0x0110, 0x0112, 0x0114, 0x0116, 0x0118, 0x011A, 0x011C, 0x011E,
    0x0120, 0x0122, 0x0124, 0x0126, 0x0128, 0x012A, 0x012C, 0x012E, 0x0132, 0x0134, 0x0136, 0x0139,
    0x013B, 0x013D, 0x013F, 0x0141, 0x0143, 0x0145, 0x0147, 0x014A, 0x014C, 0x014E, 0x0150, 0x0152,
    0x0154, 0x0156, 0x0158, 0x015A, 0x015C, 0x015E, 0x0160, 0x0162, 0x0164, 0x0166, 0x0168, 0x016A,
    0x016C, 0x016E, 0x0170, 0x0172, 0x0174, 0x0176, 0x0178, 0x0179, 0x017B, 0x017D, 0x0181, 0x0182,
    0x0184, 0x0186, 0x0187, 0x0189, 0x018A, 0x018B, 0x018E, 0x018F, 0x0190, 0x0191, 0x0193, 0x0194,
    0x0196, 0x0197, 0x0198, 0x019C, 0x019D, 0x019F, 0x01A0, 0x01A2, 0x01A4, 0x01A6, 0x01A7, 0x01A9,
    0x01AC, 0x01AE, 0x01AF, 0x01B1, 0x01B2, 0x01B3, 0x01B5, 0x01B7, 0x01B8, 0x01BC, 0x01C4, 0x01C5,
    0x01C7, 0x01C8, 0x01CA, 0x01CB, 0x01CD, 0x01CF, 0x01D1, 0x01D3, 0x01D5, 0x01D7, 0x01D9, 0x01DB,
    0x01DE, 0x01E0, 0x01E2, 0x01E4, 0x01E6, 0x01E8, 0x01EA, 0x01EC, 0x01EE, 0x01F1, 0x01F2, 0x01F4,
    0x01F6, 0x01F7, 0x01F8, 0x01FA, 0x01FC, 0x01FE, 0x0200, 0x0202, 0x0204, 0x0206, 0x0208, 0x020A,
    0x020C, 0x020E, 0x0210, 0x0212, 0x0214, 0x0216, 0x0218, 0x021A, 0x021C, 0x021E, 0x0220, 0x0222,
    0x0224, 0x0226, 0x0228, 0x022A, 0x022C, 0x022E, 0x0230, 0x0232, 0x023A, 0x023B, 0x023D, 0x023E,
    0x0241, 0x0243, 0x0244, 0x0245, 0x0246, 0x0248, 0x024A, 0x024C, 0x024E, 0x0370, 0x0372, 0x0376,
    0x037F, 0x0386, 0x0388, 0x0389, 0x038A, 0x038C, 0x038E, 0x038F, 0x0391, 0x0392, 0x0393, 0x0394,
    0x0395, 0x0396, 0x0397, 0x0398, 0x0399, 0x039A, 0x039B, 0x039C, 0x039D, 0x039E, 0x039F, 0x03A0,
    0x03A1, 0x03A3, 0x03A4, 0x03A5, 0x03A6, 0x03A7, 0x03A8, 0x03A9, 0x03AA, 0x03AB, 0x03CF, 0x03D8,
    0x03DA, 0x03DC, 0x03DE, 0x03E0, 0x03E2, 0x03E4, 0x03E6, 0x03E8, 0x03EA, 0x03EC, 0x03EE, 0x03F4,
    0x03F7, 0x03F9, 0x03FA, 0x03FD, 0x03FE, 0x03FF, 0x0400, 0x0401, 0x0402, 0x0403, 0x0404, 0x0405,
    0x0406, 0x0407, 0x0408, 0x0409, 0x040A, 0x040B, 0x040C, 0x040D, 0x040E, 0x040F, 0x0410, 0x0411,
    0x0412, 0x0413, 0x0414, 0x0415, 0x0416, 0x0417, 0x0418, 0x0419, 0x041A, 0x041B, 0x041C, 0x041D,
    0x041E, 0x041F, 0x0420, 0x0421, 0x0422, 0x0423, 0x0424, 0x0425, 0x0426, 0x0427, 0x0428, 0x0429,
    0x042A, 0x042B, 0x042C, 0x042D, 0x042E, 0x042F, 0x0460, 0x0462, 0x0464, 0x0466, 0x0468, 0x046A,
    0x046C, 0x046E, 0x0470, 0x0472, 0x0474, 0x0476, 0x0478, 0x047A, 0x047C, 0x047E, 0x0480, 0x048A,
    0x048C, 0x048E, 0x0490, 0x0492, 0x0494, 0x0496, 0x0498, 0x049A, 0x049C, 0x049E, 0x04A0, 0x04A2,
    0x04A4, 0x04A6, 0x04A8, 0x04AA, 0x04AC, 0x04AE, 0x04B0, 0x04B2, 0x04B4, 0x04B6, 0x04B8, 0x04BA,
    0x04BC, 0x04BE, 0x04C0, 0x04C1, 0x04C3, 0x04C5, 0x04C7, 0x04C9, 0x04CB, 0x04CD, 0x04D0, 0x04D2,
    0x04D4, 0x04D6, 0x04D8, 0x04DA, 0x04DC, 0x04DE, 0x04E0, 0x04E2, 0x04E4, 0x04E6, 0x04E8, 0x04EA,
    0x04EC, 0x04EE, 0x04F0, 0x04F2, 0x04F4, 0x04F6, 0x04F8, 0x04FA, 0x04FC, 0x04FE, 0x0500, 0x0502,
    0x0504, 0x0506, 0x0508, 0x050A, 0x050C, 0x050E, 0x0510, 0x0512, 0x0514, 0x0516, 0x0518, 0x051A,
    0x051C, 0x051E, 0x0520, 0x0522, 0x0524, 0x0526, 0x0528, 0x052A, 0x052C, 0x052E, 0x0531, 0x0532,
    0x0533, 0x0534, 0x0535, 0x0536, 0x0537, 0x0538, 0x0539, 0x053A, 0x053B, 0x053C, 0x053D, 0x053E,
    0x053F, 0x0540, 0x0541, 0x0542, 0x0543, 0x0544, 0x0545, 0x0546, 0x0547, 0x0548, 0x0549, 0x054A,
    0x054B, 0x054C, 0x054D, 0x054E, 0x054F, 0x0550, 0x0551, 0x0552, 0x0553, 0x0554, 0x0555, 0x0556,
    0x10A0, 0x10A1, 0x10A2, 0x10A3, 0x10A4, 0x10A5, 0x10A6, 0x10A7, 0x10A8, 0x10A9, 0x10AA, 0x10AB,
    0x10AC, 0x10AD, 0x10AE, 0x10AF, 0x10B0, 0x10B1, 0x10B2, 0x10B3, 0x10B4, 0x10B5, 0x10B6, 0x10B7,
    0x10B8, 0x10B9, 0x10BA, 0x10BB, 0x10BC, 0x10BD, 0x10BE, 0x10BF, 0x10C0, 0x10C1, 0x10C2, 0x10C3,
    0x10C4, 0x10C5, 0x10C7, 0x10CD, 0x13A0, 0x13A1, 0x13A2, 0x13A3, 0x13A4, 0x13A5, 0x13A6, 0x13A7,
    0x13A8, 0x13A9, 0x13AA, 0x13AB, 0x13AC, 0x13AD, 0x13AE, 0x13AF, 0x13B0, 0x13B1, 0x13B2, 0x13B3,
    0x13B4, 0x13B5, 0x13B6, 0x13B7, 0x13B8, 0x13B9, 0x13BA, 0x13BB, 0x13BC, 0x13BD, 0x13BE, 0x13BF,
    0x13C0, 0x13C1, 0x13C2, 0x13C3, 0x13C4, 0x13C5, 0x13C6, 0x13C7, 0x13C8, 0x13C9, 0x13CA, 0x13CB,
    0x13CC, 0x13CD, 0x13CE, 0x13CF, 0x13D0, 0x13D1, 0x13D2, 0x13D3, 0x13D4, 0x13D5, 0x13D6, 0x13D7,
    0x13D8, 0x13D9, 0x13DA, 0x13DB, 0x13DC, 0x13DD, 0x13DE, 0x13DF, 0x13E0, 0x13E1, 0x13E2, 0x13E3,
    0x13E4, 0x13E5, 0x13E6, 0x13E7, 0x13E8, 0x13E9, 0x13EA, 0x13EB, 0x13EC, 0x13ED, 0x13EE, 0x13EF,
    0x13F0, 0x13F1, 0x13F2, 0x13F3, 0x13F4, 0x13F5, 0x1C90, 0x1C91, 0x1C92, 0x1C93, 0x1C94, 0x1C95,
    0x1C96, 0x1C97, 0x1C98, 0x1C99, 0x1C9A, 0x1C9B, 0x1C9C, 0x1C9D, 0x1C9E, 0x1C9F, 0x1CA0, 0x1CA1,
    0x1CA2, 0x1CA3, 0x1CA4, 0x1CA5, 0x1CA6, 0x1CA7, 0x1CA8, 0x1CA9, 0x1CAA, 0x1CAB, 0x1CAC, 0x1CAD,
    0x1CAE, 0x1CAF, 0x1CB0, 0x1CB1, 0x1CB2, 0x1CB3, 0x1CB4, 0x1CB5, 0x1CB6, 0x1CB7, 0x1CB8, 0x1CB9,
    0x1CBA, 0x1CBD, 0x1CBE, 0x1CBF, 0x1E00, 0x1E02, 0x1E04, 0x1E06, 0x1E08, 0x1E0A, 0x1E0C, 0x1E0E,
    0x1E10, 0x1E12, 0x1E14, 0x1E16, 0x1E18, 0x1E1A, 0x1E1C, 0x1E1E, 0x1E20, 0x1E22, 0x1E24, 0x1E26,
    0x1E28, 0x1E2A, 0x1E2C, 0x1E2E, 0x1E30, 0x1E32, 0x1E34, 0x1E36, 0x1E38, 0x1E3A, 0x1E3C, 0x1E3E,
    0x1E40, 0x1E42, 0x1E44, 0x1E46, 0x1E48, 0x1E4A, 0x1E4C, 0x1E4E, 0x1E50, 0x1E52, 0x1E54, 0x1E56,
    0x1E58, 0x1E5A, 0x1E5C, 0x1E5E, 0x1E60, 0x1E62, 0x1E64, 0x1E66, 0x1E68, 0x1E6A, 0x1E6C, 0x1E6E,
    0x1E70, 0x1E72, 0x1E74, 0x1E76, 0x1E78, 0x1E7A, 0x1E7C, 0x1E7E, 0x1E80, 0x1E82, 0x1E84, 0x1E86,
    0x1E88, 0x1E8A, 0x1E8C, 0x1E8E, 0x1E90, 0x1E92, 0x1E94, 0x1E9E, 0x1EA0, 0x1EA2, 0x1EA4, 0x1EA6,
    0x1EA8, 0x1EAA, 0x1EAC, 0x1EAE, 0x1EB0, 0x1EB2, 0x1EB4, 0x1EB6, 0x1EB8, 0x1EBA, 0x1EBC, 0x1EBE,
    0x1EC0, 0x1EC2, 0x1EC4, 0x1EC6, 0x1EC8, 0x1ECA, 0x1ECC, 0x1ECE, 0x1ED0, 0x1ED2, 0x1ED4, 0x1ED6,
    0x1ED8, 0x1EDA, 0x1EDC, 0x1EDE, 0x1EE0, 0x1EE2, 0x1EE4, 0x1EE6, 0x1EE8, 0x1EEA, 0x1EEC, 0x1EEE,
    0x1EF0, 0x1EF2, 0x1EF4, 0x1EF6, 0x1EF8, 0x1EFA, 0x1EFC, 0x1EFE, 0x1F08, 0x1F09, 0x1F0A, 0x1F0B,
    0x1F0C, 0x1F0D, 0x1F0E, 0x1F0F, 0x1F18, 0x1F19, 0x1F1A, 0x1F1B, 0x1F1C, 0x1F1D, 0x1F28, 0x1F29,
    0x1F2A, 0x1F2B, 0x1F2C, 0x1F2D, 0x1F2E, 0x1F2F, 0x1F38, 0x1F39, 0x1F3A, 0x1F3B, 0x1F3C, 0x1F3D,
    0x1F3E, 0x1F3F, 0x1F48, 0x1F49, 0x1F4A, 0x1F4B, 0x1F4C, 0x1F4D, 0x1F59, 0x1F5B, 0x1F5D, 0x1F5F,
    0x1F68, 0x1F69, 0x1F6A, 0x1F6B, 0x1F6C, 0x1F6D, 0x1F6E, 0x1F6F, 0x1F88, 0x1F89, 0x1F8A, 0x1F8B,
    0x1F8C, 0x1F8D, 0x1F8E, 0x1F8F, 0x1F98, 0x1F99, 0x1F9A, 0x1F9B, 0x1F9C, 0x1F9D, 0x1F9E, 0x1F9F,
    0x1FA8, 0x1FA9, 0x1FAA, 0x1FAB, 0x1FAC, 0x1FAD, 0x1FAE, 0x1FAF, 0x1FB8, 0x1FB9, 0x1FBA, 0x1FBB,
    0x1FBC, 0x1FC8, 0x1FC9, 0x1FCA, 0x1FCB, 0x1FCC, 0x1FD8, 0x1FD9, 0x1FDA, 0x1FDB, 0x1FE8, 0x1FE9,
    0x1FEA, 0x1FEB, 0x1FEC, 0x1FF8, 0x1FF9, 0x1FFA, 0x1FFB, 0x1FFC, 0x2126, 0x212A, 0x212B, 0x2132,
    0x2160, 0x2161, 0x2162, 0x2163, 0x2164, 0x2165, 0x2166, 0x2167, 0x2168, 0x2169, 0x216A, 0x216B,
    0x216C, 0x216D, 0x216E, 0x216F, 0x2183, 0x24B6, 0x24B7, 0x24B8, 0x24B9, 0x24BA, 0x24BB, 0x24BC,
    0x24BD, 0x24BE, 0x24BF, 0x24C0, 0x24C1, 0x24C2, 0x24C3, 0x24C4, 0x24C5, 0x24C6, 0x24C7, 0x24C8,
    0x24C9, 0x24CA, 0x24CB, 0x24CC, 0x24CD, 0x24CE, 0x24CF, 0x2C00, 0x2C01, 0x2C02, 0x2C03, 0x2C04,
    0x2C05, 0x2C06, 0x2C07, 0x2C08, 0x2C09, 0x2C0A, 0x2C0B, 0x2C0C, 0x2C0D, 0x2C0E, 0x2C0F, 0x2C10,
    0x2C11, 0x2C12, 0x2C13, 0x2C14, 0x2C15, 0x2C16, 0x2C17, 0x2C18, 0x2C19, 0x2C1A, 0x2C1B, 0x2C1C,
    0x2C1D, 0x2C1E, 0x2C1F, 0x2C20, 0x2C21, 0x2C22, 0x2C23, 0x2C24, 0x2C25, 0x2C26, 0x2C27, 0x2C28,
    0x2C29, 0x2C2A, 0x2C2B, 0x2C2C, 0x2C2D, 0x2C2E, 0x2C60, 0x2C62, 0x2C63, 0x2C64, 0x2C67, 0x2C69,
    0x2C6B, 0x2C6D, 0x2C6E, 0x2C6F, 0x2C70, 0x2C72, 0x2C75, 0x2C7E, 0x2C7F, 0x2C80, 0x2C82, 0x2C84,
    0x2C86, 0x2C88, 0x2C8A, 0x2C8C, 0x2C8E, 0x2C90, 0x2C92, 0x2C94, 0x2C96, 0x2C98, 0x2C9A, 0x2C9C,
    0x2C9E, 0x2CA0, 0x2CA2, 0x2CA4, 0x2CA6, 0x2CA8, 0x2CAA, 0x2CAC, 0x2CAE, 0x2CB0, 0x2CB2, 0x2CB4,
    0x2CB6, 0x2CB8, 0x2CBA, 0x2CBC, 0x2CBE, 0x2CC0, 0x2CC2, 0x2CC4, 0x2CC6, 0x2CC8, 0x2CCA, 0x2CCC,
    0x2CCE, 0x2CD0, 0x2CD2, 0x2CD4, 0x2CD6, 0x2CD8, 0x2CDA, 0x2CDC, 0x2CDE, 0x2CE0, 0x2CE2, 0x2CEB,
    0x2CED, 0x2CF2, 0xA640, 0xA642, 0xA644, 0xA646, 0xA648, 0xA64A, 0xA64C, 0xA64E, 0xA650, 0xA652,
    0xA654, 0xA656, 0xA658, 0xA65A, 0xA65C, 0xA65E, 0xA660, 0xA662, 0xA664, 0xA666, 0xA668, 0xA66A,
    0xA66C, 0xA680, 0xA682, 0xA684, 0xA686, 0xA688, 0xA68A, 0xA68C, 0xA68E, 0xA690, 0xA692, 0xA694,
    0xA696, 0xA698, 0xA69A, 0xA722, 0xA724, 0xA726, 0xA728, 0xA72A, 0xA72C, 0xA72E, 0xA732, 0xA734,
    0xA736, 0xA738, 0xA73A, 0xA73C, 0xA73E, 0xA740, 0xA742, 0xA744, 0xA746, 0xA748, 0xA74A, 0xA74C,
    0xA74E, 0xA750, 0xA752, 0xA754, 0xA756, 0xA758, 0xA75A, 0xA75C, 0xA75E, 0xA760, 0xA762, 0xA764,
    0xA766, 0xA768, 0xA76A, 0xA76C, 0xA76E, 0xA779, 0xA77B, 0xA77D, 0xA77E, 0xA780, 0xA782, 0xA784,
    0xA786, 0xA78B, 0xA78D, 0xA790, 0xA792, 0xA796, 0xA798, 0xA79A, 0xA79C, 0xA79E, 0xA7A0, 0xA7A2,
    0xA7A4, 0xA7A6, 0xA7A8, 0xA7AA, 0xA7AB, 0xA7AC, 0xA7AD, 0xA7AE, 0xA7B0, 0xA7B1, 0xA7B2, 0xA7B3,
    0xA7B4, 0xA7B6, 0xA7B8, 0xA7BA, 0xA7BC, 0xA7BE, 0xA7C2, 0xA7C4, 0xA7C5, 0xA7C6, 0xA7C7, 0xA7C9,
    0xA7F5, 0xFF21, 0xFF22, 0xFF23, 0xFF24, 0xFF25, 0xFF26, 0xFF27, 0xFF28, 0xFF29, 0xFF2A, 0xFF2B,
    0xFF2C, 0xFF2D, 0xFF2E, 0xFF2F, 0xFF30, 0xFF31, 0xFF32, 0xFF33, 0xFF34, 0xFF35, 0xFF36, 0xFF37,
    0xFF38, 0xFF39, 0xFF3A,
};

inline constexpr std::uint32_t kLowerValues[1167] = {
    0x0061, 0x0062, 0x0063, 0x0064, 0x0065, 0x0066, 0x0067, 0x0068, 0x0069, 0x006A, 0x006B, 0x006C,
    0x006D, 0x006E, 0x006F, 0x0070, 0x0071, 0x0072, 0x0073, 0x0074, 0x0075, 0x0076, 0x0077, 0x0078,
    0x0079, 0x007A, 0x00E0, 0x00E1, 0x00E2, 0x00E3, 0x00E4, 0x00E5, 0x00E6, 0x00E7, 0x00E8, 0x00E9,
    0x00EA, 0x00EB, 0x00EC, 0x00ED, 0x00EE, 0x00EF, 0x00F0, 0x00F1, 0x00F2, 0x00F3, 0x00F4, 0x00F5,
    0x00F6, 0x00F8, 0x00F9, 0x00FA, 0x00FB, 0x00FC, 0x00FD, 0x00FE, 0x0101, 0x0103, 0x0105, 0x0107,
    0x0109, 0x010B, 0x010D, 0x010F, 0x0111, 0x0113, 0x0115, 0x0117, 0x0119, 0x011B, 0x011D, 0x011F,
    0x0121, 0x0123, 0x0125, 0x0127, 0x0129, 0x012B, 0x012D, 0x012F, 0x0133, 0x0135, 0x0137, 0x013A,
    0x013C, 0x013E, 0x0140, 0x0142, 0x0144, 0x0146, 0x0148, 0x014B, 0x014D, 0x014F, 0x0151, 0x0153,
    0x0155, 0x0157, 0x0159, 0x015B, 0x015D, 0x015F, 0x0161, 0x0163, 0x0165, 0x0167, 0x0169, 0x016B,
    0x016D, 0x016F, 0x0171, 0x0173, 0x0175, 0x0177, 0x00FF, 0x017A, 0x017C, 0x017E, 0x0253, 0x0183,
    0x0185, 0x0254, 0x0188, 0x0256, 0x0257, 0x018C, 0x01DD, 0x0259, 0x025B, 0x0192, 0x0260, 0x0263,
    0x0269, 0x0268, 0x0199, 0x026F, 0x0272, 0x0275, 0x01A1, 0x01A3, 0x01A5, 0x0280, 0x01A8, 0x0283,
    0x01AD, 0x0288, 0x01B0, 0x028A, 0x028B, 0x01B4, 0x01B6, 0x0292, 0x01B9, 0x01BD, 0x01C6, 0x01C6,
    0x01C9, 0x01C9, 0x01CC, 0x01CC, 0x01CE, 0x01D0, 0x01D2, 0x01D4, 0x01D6, 0x01D8, 0x01DA, 0x01DC,
    0x01DF, 0x01E1, 0x01E3, 0x01E5, 0x01E7, 0x01E9, 0x01EB, 0x01ED, 0x01EF, 0x01F3, 0x01F3, 0x01F5,
    0x0195, 0x01BF, 0x01F9, 0x01FB, 0x01FD, 0x01FF, 0x0201, 0x0203, 0x0205, 0x0207, 0x0209, 0x020B,
    0x020D, 0x020F, 0x0211, 0x0213, 0x0215, 0x0217, 0x0219, 0x021B, 0x021D, 0x021F, 0x019E, 0x0223,
    0x0225, 0x0227, 0x0229, 0x022B, 0x022D, 0x022F, 0x0231, 0x0233, 0x2C65, 0x023C, 0x019A, 0x2C66,
    0x0242, 0x0180, 0x0289, 0x028C, 0x0247, 0x0249, 0x024B, 0x024D, 0x024F, 0x0371, 0x0373, 0x0377,
    0x03F3, 0x03AC, 0x03AD, 0x03AE, 0x03AF, 0x03CC, 0x03CD, 0x03CE, 0x03B1, 0x03B2, 0x03B3, 0x03B4,
    0x03B5, 0x03B6, 0x03B7, 0x03B8, 0x03B9, 0x03BA, 0x03BB, 0x03BC, 0x03BD, 0x03BE, 0x03BF, 0x03C0,
    0x03C1, 0x03C3, 0x03C4, 0x03C5, 0x03C6, 0x03C7, 0x03C8, 0x03C9, 0x03CA, 0x03CB, 0x03D7, 0x03D9,
    0x03DB, 0x03DD, 0x03DF, 0x03E1, 0x03E3, 0x03E5, 0x03E7, 0x03E9, 0x03EB, 0x03ED, 0x03EF, 0x03B8,
    0x03F8, 0x03F2, 0x03FB, 0x037B, 0x037C, 0x037D, 0x0450, 0x0451, 0x0452, 0x0453, 0x0454, 0x0455,
    0x0456, 0x0457, 0x0458, 0x0459, 0x045A, 0x045B, 0x045C, 0x045D, 0x045E, 0x045F, 0x0430, 0x0431,
    0x0432, 0x0433, 0x0434, 0x0435, 0x0436, 0x0437, 0x0438, 0x0439, 0x043A, 0x043B, 0x043C, 0x043D,
    0x043E, 0x043F, 0x0440, 0x0441, 0x0442, 0x0443, 0x0444, 0x0445, 0x0446, 0x0447, 0x0448, 0x0449,
    0x044A, 0x044B, 0x044C, 0x044D, 0x044E, 0x044F, 0x0461, 0x0463, 0x0465, 0x0467, 0x0469, 0x046B,
    0x046D, 0x046F, 0x0471, 0x0473, 0x0475, 0x0477, 0x0479, 0x047B, 0x047D, 0x047F, 0x0481, 0x048B,
    0x048D, 0x048F, 0x0491, 0x0493, 0x0495, 0x0497, 0x0499, 0x049B, 0x049D, 0x049F, 0x04A1, 0x04A3,
    0x04A5, 0x04A7, 0x04A9, 0x04AB, 0x04AD, 0x04AF, 0x04B1, 0x04B3, 0x04B5, 0x04B7, 0x04B9, 0x04BB,
    0x04BD, 0x04BF, 0x04CF, 0x04C2, 0x04C4, 0x04C6, 0x04C8, 0x04CA, 0x04CC, 0x04CE, 0x04D1, 0x04D3,
    0x04D5, 0x04D7, 0x04D9, 0x04DB, 0x04DD, 0x04DF, 0x04E1, 0x04E3, 0x04E5, 0x04E7, 0x04E9, 0x04EB,
    0x04ED, 0x04EF, 0x04F1, 0x04F3, 0x04F5, 0x04F7, 0x04F9, 0x04FB, 0x04FD, 0x04FF, 0x0501, 0x0503,
    0x0505, 0x0507, 0x0509, 0x050B, 0x050D, 0x050F, 0x0511, 0x0513, 0x0515, 0x0517, 0x0519, 0x051B,
    0x051D, 0x051F, 0x0521, 0x0523, 0x0525, 0x0527, 0x0529, 0x052B, 0x052D, 0x052F, 0x0561, 0x0562,
    0x0563, 0x0564, 0x0565, 0x0566, 0x0567, 0x0568, 0x0569, 0x056A, 0x056B, 0x056C, 0x056D, 0x056E,
    0x056F, 0x0570, 0x0571, 0x0572, 0x0573, 0x0574, 0x0575, 0x0576, 0x0577, 0x0578, 0x0579, 0x057A,
    0x057B, 0x057C, 0x057D, 0x057E, 0x057F, 0x0580, 0x0581, 0x0582, 0x0583, 0x0584, 0x0585, 0x0586,
    0x2D00, 0x2D01, 0x2D02, 0x2D03, 0x2D04, 0x2D05, 0x2D06, 0x2D07, 0x2D08, 0x2D09, 0x2D0A, 0x2D0B,
    0x2D0C, 0x2D0D, 0x2D0E, 0x2D0F, 0x2D10, 0x2D11, 0x2D12, 0x2D13, 0x2D14, 0x2D15, 0x2D16, 0x2D17,
    0x2D18, 0x2D19, 0x2D1A, 0x2D1B, 0x2D1C, 0x2D1D, 0x2D1E, 0x2D1F, 0x2D20, 0x2D21, 0x2D22, 0x2D23,
    0x2D24, 0x2D25, 0x2D27, 0x2D2D, 0xAB70, 0xAB71, 0xAB72, 0xAB73, 0xAB74, 0xAB75, 0xAB76, 0xAB77,
    0xAB78, 0xAB79, 0xAB7A, 0xAB7B, 0xAB7C, 0xAB7D, 0xAB7E, 0xAB7F, 0xAB80, 0xAB81, 0xAB82, 0xAB83,
    0xAB84, 0xAB85, 0xAB86, 0xAB87, 0xAB88, 0xAB89, 0xAB8A, 0xAB8B, 0xAB8C, 0xAB8D, 0xAB8E, 0xAB8F,
    0xAB90, 0xAB91, 0xAB92, 0xAB93, 0xAB94, 0xAB95, 0xAB96, 0xAB97, 0xAB98, 0xAB99, 0xAB9A, 0xAB9B,
    0xAB9C, 0xAB9D, 0xAB9E, 0xAB9F, 0xABA0, 0xABA1, 0xABA2, 0xABA3, 0xABA4, 0xABA5, 0xABA6, 0xABA7,
    0xABA8, 0xABA9, 0xABAA, 0xABAB, 0xABAC, 0xABAD, 0xABAE, 0xABAF, 0xABB0, 0xABB1, 0xABB2, 0xABB3,
    0xABB4, 0xABB5, 0xABB6, 0xABB7, 0xABB8, 0xABB9, 0xABBA, 0xABBB, 0xABBC, 0xABBD, 0xABBE, 0xABBF,
    0x13F8, 0x13F9, 0x13FA, 0x13FB, 0x13FC, 0x13FD, 0x10D0, 0x10D1, 0x10D2, 0x10D3, 0x10D4, 0x10D5,
    0x10D6, 0x10D7, 0x10D8, 0x10D9, 0x10DA, 0x10DB, 0x10DC, 0x10DD, 0x10DE, 0x10DF, 0x10E0, 0x10E1,
    0x10E2, 0x10E3, 0x10E4, 0x10E5, 0x10E6, 0x10E7, 0x10E8, 0x10E9, 0x10EA, 0x10EB, 0x10EC, 0x10ED,
    0x10EE, 0x10EF, 0x10F0, 0x10F1, 0x10F2, 0x10F3, 0x10F4, 0x10F5, 0x10F6, 0x10F7, 0x10F8, 0x10F9,
    0x10FA, 0x10FD, 0x10FE, 0x10FF, 0x1E01, 0x1E03, 0x1E05, 0x1E07, 0x1E09, 0x1E0B, 0x1E0D, 0x1E0F,
    0x1E11, 0x1E13, 0x1E15, 0x1E17, 0x1E19, 0x1E1B, 0x1E1D, 0x1E1F, 0x1E21, 0x1E23, 0x1E25, 0x1E27,
    0x1E29, 0x1E2B, 0x1E2D, 0x1E2F, 0x1E31, 0x1E33, 0x1E35, 0x1E37, 0x1E39, 0x1E3B, 0x1E3D, 0x1E3F,
    0x1E41, 0x1E43, 0x1E45, 0x1E47, 0x1E49, 0x1E4B, 0x1E4D, 0x1E4F, 0x1E51, 0x1E53, 0x1E55, 0x1E57,
    0x1E59, 0x1E5B, 0x1E5D, 0x1E5F, 0x1E61, 0x1E63, 0x1E65, 0x1E67, 0x1E69, 0x1E6B, 0x1E6D, 0x1E6F,
    0x1E71, 0x1E73, 0x1E75, 0x1E77, 0x1E79, 0x1E7B, 0x1E7D, 0x1E7F, 0x1E81, 0x1E83, 0x1E85, 0x1E87,
    0x1E89, 0x1E8B, 0x1E8D, 0x1E8F, 0x1E91, 0x1E93, 0x1E95, 0x00DF, 0x1EA1, 0x1EA3, 0x1EA5, 0x1EA7,
    0x1EA9, 0x1EAB, 0x1EAD, 0x1EAF, 0x1EB1, 0x1EB3, 0x1EB5, 0x1EB7, 0x1EB9, 0x1EBB, 0x1EBD, 0x1EBF,
    0x1EC1, 0x1EC3, 0x1EC5, 0x1EC7, 0x1EC9, 0x1ECB, 0x1ECD, 0x1ECF, 0x1ED1, 0x1ED3, 0x1ED5, 0x1ED7,
    0x1ED9, 0x1EDB, 0x1EDD, 0x1EDF, 0x1EE1, 0x1EE3, 0x1EE5, 0x1EE7, 0x1EE9, 0x1EEB, 0x1EED, 0x1EEF,
    0x1EF1, 0x1EF3, 0x1EF5, 0x1EF7, 0x1EF9, 0x1EFB, 0x1EFD, 0x1EFF, 0x1F00, 0x1F01, 0x1F02, 0x1F03,
    0x1F04, 0x1F05, 0x1F06, 0x1F07, 0x1F10, 0x1F11, 0x1F12, 0x1F13, 0x1F14, 0x1F15, 0x1F20, 0x1F21,
    0x1F22, 0x1F23, 0x1F24, 0x1F25, 0x1F26, 0x1F27, 0x1F30, 0x1F31, 0x1F32, 0x1F33, 0x1F34, 0x1F35,
    0x1F36, 0x1F37, 0x1F40, 0x1F41, 0x1F42, 0x1F43, 0x1F44, 0x1F45, 0x1F51, 0x1F53, 0x1F55, 0x1F57,
    0x1F60, 0x1F61, 0x1F62, 0x1F63, 0x1F64, 0x1F65, 0x1F66, 0x1F67, 0x1F80, 0x1F81, 0x1F82, 0x1F83,
    0x1F84, 0x1F85, 0x1F86, 0x1F87, 0x1F90, 0x1F91, 0x1F92, 0x1F93, 0x1F94, 0x1F95, 0x1F96, 0x1F97,
    0x1FA0, 0x1FA1, 0x1FA2, 0x1FA3, 0x1FA4, 0x1FA5, 0x1FA6, 0x1FA7, 0x1FB0, 0x1FB1, 0x1F70, 0x1F71,
    0x1FB3, 0x1F72, 0x1F73, 0x1F74, 0x1F75, 0x1FC3, 0x1FD0, 0x1FD1, 0x1F76, 0x1F77, 0x1FE0, 0x1FE1,
    0x1F7A, 0x1F7B, 0x1FE5, 0x1F78, 0x1F79, 0x1F7C, 0x1F7D, 0x1FF3, 0x03C9, 0x006B, 0x00E5, 0x214E,
    0x2170, 0x2171, 0x2172, 0x2173, 0x2174, 0x2175, 0x2176, 0x2177, 0x2178, 0x2179, 0x217A, 0x217B,
    0x217C, 0x217D, 0x217E, 0x217F, 0x2184, 0x24D0, 0x24D1, 0x24D2, 0x24D3, 0x24D4, 0x24D5, 0x24D6,
    0x24D7, 0x24D8, 0x24D9, 0x24DA, 0x24DB, 0x24DC, 0x24DD, 0x24DE, 0x24DF, 0x24E0, 0x24E1, 0x24E2,
    0x24E3, 0x24E4, 0x24E5, 0x24E6, 0x24E7, 0x24E8, 0x24E9, 0x2C30, 0x2C31, 0x2C32, 0x2C33, 0x2C34,
    0x2C35, 0x2C36, 0x2C37, 0x2C38, 0x2C39, 0x2C3A, 0x2C3B, 0x2C3C, 0x2C3D, 0x2C3E, 0x2C3F, 0x2C40,
    0x2C41, 0x2C42, 0x2C43, 0x2C44, 0x2C45, 0x2C46, 0x2C47, 0x2C48, 0x2C49, 0x2C4A, 0x2C4B, 0x2C4C,
    0x2C4D, 0x2C4E, 0x2C4F, 0x2C50, 0x2C51, 0x2C52, 0x2C53, 0x2C54, 0x2C55, 0x2C56, 0x2C57, 0x2C58,
    0x2C59, 0x2C5A, 0x2C5B, 0x2C5C, 0x2C5D, 0x2C5E, 0x2C61, 0x026B, 0x1D7D, 0x027D, 0x2C68, 0x2C6A,
    0x2C6C, 0x0251, 0x0271, 0x0250, 0x0252, 0x2C73, 0x2C76, 0x023F, 0x0240, 0x2C81, 0x2C83, 0x2C85,
    0x2C87, 0x2C89, 0x2C8B, 0x2C8D, 0x2C8F, 0x2C91, 0x2C93, 0x2C95, 0x2C97, 0x2C99, 0x2C9B, 0x2C9D,
    0x2C9F, 0x2CA1, 0x2CA3, 0x2CA5, 0x2CA7, 0x2CA9, 0x2CAB, 0x2CAD, 0x2CAF, 0x2CB1, 0x2CB3, 0x2CB5,
    0x2CB7, 0x2CB9, 0x2CBB, 0x2CBD, 0x2CBF, 0x2CC1, 0x2CC3, 0x2CC5, 0x2CC7, 0x2CC9, 0x2CCB, 0x2CCD,
    0x2CCF, 0x2CD1, 0x2CD3, 0x2CD5, 0x2CD7, 0x2CD9, 0x2CDB, 0x2CDD, 0x2CDF, 0x2CE1, 0x2CE3, 0x2CEC,
    0x2CEE, 0x2CF3, 0xA641, 0xA643, 0xA645, 0xA647, 0xA649, 0xA64B, 0xA64D, 0xA64F, 0xA651, 0xA653,
    0xA655, 0xA657, 0xA659, 0xA65B, 0xA65D, 0xA65F, 0xA661, 0xA663, 0xA665, 0xA667, 0xA669, 0xA66B,
    0xA66D, 0xA681, 0xA683, 0xA685, 0xA687, 0xA689, 0xA68B, 0xA68D, 0xA68F, 0xA691, 0xA693, 0xA695,
    0xA697, 0xA699, 0xA69B, 0xA723, 0xA725, 0xA727, 0xA729, 0xA72B, 0xA72D, 0xA72F, 0xA733, 0xA735,
    0xA737, 0xA739, 0xA73B, 0xA73D, 0xA73F, 0xA741, 0xA743, 0xA745, 0xA747, 0xA749, 0xA74B, 0xA74D,
    0xA74F, 0xA751, 0xA753, 0xA755, 0xA757, 0xA759, 0xA75B, 0xA75D, 0xA75F, 0xA761, 0xA763, 0xA765,
    0xA767, 0xA769, 0xA76B, 0xA76D, 0xA76F, 0xA77A, 0xA77C, 0x1D79, 0xA77F, 0xA781, 0xA783, 0xA785,
    0xA787, 0xA78C, 0x0265, 0xA791, 0xA793, 0xA797, 0xA799, 0xA79B, 0xA79D, 0xA79F, 0xA7A1, 0xA7A3,
    0xA7A5, 0xA7A7, 0xA7A9, 0x0266, 0x025C, 0x0261, 0x026C, 0x026A, 0x029E, 0x0287, 0x029D, 0xAB53,
    0xA7B5, 0xA7B7, 0xA7B9, 0xA7BB, 0xA7BD, 0xA7BF, 0xA7C3, 0xA794, 0x0282, 0x1D8E, 0xA7C8, 0xA7CA,
    0xA7F6, 0xFF41, 0xFF42, 0xFF43, 0xFF44, 0xFF45, 0xFF46, 0xFF47, 0xFF48, 0xFF49, 0xFF4A, 0xFF4B,
    0xFF4C, 0xFF4D, 0xFF4E, 0xFF4F, 0xFF50, 0xFF51, 0xFF52, 0xFF53, 0xFF54, 0xFF55, 0xFF56, 0xFF57,
    0xFF58, 0xFF59, 0xFF5A,
};

// Closed [first, last] codepoint ranges, general category P*.
inline constexpr std::uint32_t kPunctRanges[264] = {
    0x0021, 0x0023, 0x0025, 0x002A, 0x002C, 0x002F, 0x003A, 0x003B, 0x003F, 0x0040, 0x005B, 0x005D, 0x005F, 0x005F, 0x007B, 0x007B, 0x007D, 0x007D, 0x00A1, 0x00A1, 0x00A7, 0x00A7, 0x00AB, 0x00AB,
    0x00B6, 0x00B7, 0x00BB, 0x00BB, 0x00BF, 0x00BF, 0x037E, 0x037E, 0x0387, 0x0387, 0x055A, 0x055F, 0x0589, 0x058A, 0x05BE, 0x05BE, 0x05C0, 0x05C0, 0x05C3, 0x05C3, 0x05C6, 0x05C6, 0x05F3, 0x05F4,
    0x0609, 0x060A, 0x060C, 0x060D, 0x061B, 0x061B, 0x061E, 0x061F, 0x066A, 0x066D, 0x06D4, 0x06D4, 0x0700, 0x070D, 0x07F7, 0x07F9, 0x0830, 0x083E, 0x085E, 0x085E, 0x0964, 0x0965, 0x0970, 0x0970,
    0x09FD, 0x09FD, 0x0A76, 0x0A76, 0x0AF0, 0x0AF0, 0x0C77, 0x0C77, 0x0C84, 0x0C84, 0x0DF4, 0x0DF4, 0x0E4F, 0x0E4F, 0x0E5A, 0x0E5B, 0x0F04, 0x0F12, 0x0F14, 0x0F14, 0x0F3A, 0x0F3D, 0x0F85, 0x0F85,
    0x0FD0, 0x0FD4, 0x0FD9, 0x0FDA, 0x104A, 0x104F, 0x10FB, 0x10FB, 0x1360, 0x1368, 0x1400, 0x1400, 0x166E, 0x166E, 0x169B, 0x169C, 0x16EB, 0x16ED, 0x1735, 0x1736, 0x17D4, 0x17D6, 0x17D8, 0x17DA,
    0x1800, 0x180A, 0x1944, 0x1945, 0x1A1E, 0x1A1F, 0x1AA0, 0x1AA6, 0x1AA8, 0x1AAD, 0x1B5A, 0x1B60, 0x1BFC, 0x1BFF, 0x1C3B, 0x1C3F, 0x1C7E, 0x1C7F, 0x1CC0, 0x1CC7, 0x1CD3, 0x1CD3, 0x2010, 0x2027,
    0x2030, 0x2043, 0x2045, 0x2051, 0x2053, 0x205E, 0x207D, 0x207E, 0x208D, 0x208E, 0x2308, 0x230B, 0x2329, 0x232A, 0x2768, 0x2775, 0x27C5, 0x27C6, 0x27E6, 0x27EF, 0x2983, 0x2998, 0x29D8, 0x29DB,
    0x29FC, 0x29FD, 0x2CF9, 0x2CFC, 0x2CFE, 0x2CFF, 0x2D70, 0x2D70, 0x2E00, 0x2E2E, 0x2E30, 0x2E4F, 0x2E52, 0x2E52, 0x3001, 0x3003, 0x3008, 0x3011, 0x3014, 0x301F, 0x3030, 0x3030, 0x303D, 0x303D,
    0x30A0, 0x30A0, 0x30FB, 0x30FB, 0xA4FE, 0xA4FF, 0xA60D, 0xA60F, 0xA673, 0xA673, 0xA67E, 0xA67E, 0xA6F2, 0xA6F7, 0xA874, 0xA877, 0xA8CE, 0xA8CF, 0xA8F8, 0xA8FA, 0xA8FC, 0xA8FC, 0xA92E, 0xA92F,
    0xA95F, 0xA95F, 0xA9C1, 0xA9CD, 0xA9DE, 0xA9DF, 0xAA5C, 0xAA5F, 0xAADE, 0xAADF, 0xAAF0, 0xAAF1, 0xABEB, 0xABEB, 0xFD3E, 0xFD3F, 0xFE10, 0xFE19, 0xFE30, 0xFE52, 0xFE54, 0xFE61, 0xFE63, 0xFE63,
    0xFE68, 0xFE68, 0xFE6A, 0xFE6B, 0xFF01, 0xFF03, 0xFF05, 0xFF0A, 0xFF0C, 0xFF0F, 0xFF1A, 0xFF1B, 0xFF1F, 0xFF20, 0xFF3B, 0xFF3D, 0xFF3F, 0xFF3F, 0xFF5B, 0xFF5B, 0xFF5D, 0xFF5D, 0xFF5F, 0xFF65,
};

// Closed [first, last] codepoint ranges of whitespace.
inline constexpr std::uint32_t kSpaceRanges[20] = {
    0x0009, 0x000D, 0x001C, 0x0020, 0x0085, 0x0085, 0x00A0, 0x00A0, 0x1680, 0x1680, 0x2000, 0x200A, 0x2028, 0x2029, 0x202F, 0x202F, 0x205F, 0x205F, 0x3000, 0x3000,
};

}  // namespace forge::unicode_tables
