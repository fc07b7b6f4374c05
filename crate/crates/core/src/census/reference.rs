//! Published values used by `verify` and the acceptance suite.

use num_bigint::BigUint;

use super::oeis::parse_sequence;

/// Periodic binary words of length `n` (OEIS A152061), `n = 0..=50`.
pub const A152061: &str = include_str!("../../data/a152061.txt");

pub fn a152061() -> Vec<BigUint> {
    parse_sequence(A152061).expect("embedded sequence parses")
}

/// `lim_n s_q(n) / 2` for `q = 1..=40`.
pub const LIMIT_HALVES: [u64; 40] = [
    1,
    3,
    10,
    29,
    82,
    215,
    556,
    1_385,
    3_391,
    8_135,
    19_261,
    44_963,
    103_906,
    237_719,
    539_458,
    1_214_993,
    2_718_760,
    6_047_426,
    13_380_766,
    29_463_632,
    64_594_576,
    141_046_655,
    306_858_874,
    665_342_837,
    1_438_134_475,
    3_099_548_927,
    6_662_442_946,
    14_285_118_725,
    30_557_828_119,
    65_225_030_201,
    138_937_277_596,
    295_385_810_819,
    626_867_939_224,
    1_328_075_901_017,
    2_809_126_944_436,
    5_932_793_909_801,
    12_511_847_996_740,
    26_350_575_690_893,
    55_423_630_773_538,
    116_429_658_505_697,
];

/// Number of words of length `n` with the largest complexity, `n = 0..=24`.
pub const MAX_COUNTS: [u64; 25] = [
    1, 2, 2, 6, 8, 24, 30, 98, 98, 406, 344, 1_398, 1_638, 5_774, 5_116, 23_018, 22_476, 86_128,
    89_566, 351_250, 375_710, 1_461_670, 1_539_164, 5_687_234, 6_814_782,
];

/// `(n, q, r_q(n), s_q(n))` for `4 <= n <= 22`, `3 <= q <= 10`. Published
/// cells left out as inconsistent: `(18, 9)` has `r > s`, `(19, 9)` has `s`
/// larger than the maximum count at that length, `(18, 10)` reads `0/0`,
/// and `(13, 4)` (`28/58`) and `(14, 7)` (`4442/9868`) make their rows sum
/// to something other than `2^n`. Exhaustive search gives `34/64` and
/// `4442/9668` for the last two.
pub const PROPORTIONS: &[(usize, usize, u64, u64)] = &[
    (4, 3, 0, 8),
    (5, 3, 8, 24),
    (6, 3, 14, 26),
    (6, 4, 0, 30),
    (7, 3, 10, 22),
    (7, 4, 38, 98),
    (8, 3, 8, 20),
    (8, 4, 82, 130),
    (8, 5, 0, 98),
    (9, 3, 8, 20),
    (9, 4, 48, 78),
    (9, 5, 112, 406),
    (10, 3, 8, 20),
    (10, 4, 34, 64),
    (10, 5, 244, 588),
    (10, 6, 0, 344),
    (11, 3, 8, 20),
    (11, 4, 28, 58),
    (11, 5, 384, 564),
    (11, 6, 576, 1_398),
    (12, 3, 8, 20),
    (12, 4, 28, 58),
    (12, 5, 158, 282),
    (12, 6, 1_048, 2_090),
    (12, 7, 0, 1_638),
    (13, 3, 8, 20),
    (13, 5, 120, 250),
    (13, 6, 1_396, 2_076),
    (13, 7, 1_736, 5_774),
    (14, 3, 8, 20),
    (14, 4, 28, 58),
    (14, 5, 112, 244),
    (14, 6, 774, 1_270),
    (14, 8, 0, 5_116),
    (15, 3, 8, 20),
    (15, 4, 28, 58),
    (15, 5, 148, 226),
    (15, 6, 578, 908),
    (15, 7, 3_338, 8_530),
    (15, 8, 7_524, 23_018),
    (16, 3, 8, 20),
    (16, 4, 28, 58),
    (16, 5, 80, 164),
    (16, 6, 536, 752),
    (16, 7, 2_908, 7_738),
    (16, 8, 14_230, 34_320),
    (16, 9, 0, 22_476),
    (17, 3, 8, 20),
    (17, 4, 28, 58),
    (17, 5, 104, 200),
    (17, 6, 262, 514),
    (17, 7, 2_850, 7_102),
    (17, 8, 20_516, 37_042),
    (17, 9, 30_486, 86_128),
    (18, 3, 8, 20),
    (18, 4, 28, 58),
    (18, 5, 110, 188),
    (18, 6, 356, 598),
    (18, 7, 2_070, 5_692),
    (18, 8, 14_456, 29_990),
    (19, 3, 8, 20),
    (19, 4, 28, 58),
    (19, 5, 86, 164),
    (19, 6, 402, 582),
    (19, 7, 2_380, 4_996),
    (19, 8, 12_312, 26_542),
    (19, 10, 134_578, 351_250),
    (20, 3, 8, 20),
    (20, 4, 28, 58),
    (20, 5, 86, 164),
    (20, 6, 238, 430),
    (20, 7, 1_478, 3_814),
    (20, 8, 11_670, 23_328),
    (20, 9, 54_990, 115_896),
    (20, 10, 278_696, 529_148),
    (21, 3, 8, 20),
    (21, 4, 28, 58),
    (21, 5, 98, 176),
    (21, 6, 292, 496),
    (21, 7, 1_318, 3_168),
    (21, 8, 8_472, 18_720),
    (21, 9, 52_178, 108_042),
    (21, 10, 266_760, 504_794),
    (22, 3, 8, 20),
    (22, 4, 28, 58),
    (22, 5, 86, 164),
    (22, 6, 322, 502),
    (22, 7, 1_288, 2_846),
    (22, 8, 6_594, 16_024),
    (22, 9, 44_922, 94_732),
    (22, 10, 220_544, 451_368),
];

/// Published cells for one length.
pub fn proportions(n: usize) -> impl Iterator<Item = (usize, u64, u64)> {
    PROPORTIONS
        .iter()
        .filter(move |c| c.0 == n)
        .map(|&(_, q, r, s)| (q, r, s))
}
