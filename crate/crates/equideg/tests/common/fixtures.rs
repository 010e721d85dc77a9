/// Squared Bessel zeros `s_nm`, rows `m = 0..=10`, columns `n = 1..=9`.
pub const BESSEL_TABLE: [[f64; 9]; 11] = [
    [5.783, 30.471, 74.887, 139.04, 222.932, 326.563, 449.934, 593.043, 755.891],
    [14.682, 49.218, 103.499, 177.521, 271.282, 384.782, 518.021, 671.0, 843.718],
    [26.374, 70.85, 135.021, 218.92, 322.555, 445.928, 589.038, 751.888, 934.476],
    [40.706, 95.278, 169.395, 263.201, 376.625, 509.98, 662.968, 835.693, 1028.15],
    [57.583, 122.428, 206.57, 310.322, 433.761, 576.913, 739.79, 922.398, 1124.74],
    [76.939, 152.241, 246.495, 360.245, 493.631, 646.702, 819.483, 1011.99, 1224.21],
    [98.726, 184.67, 289.13, 412.934, 556.303, 719.321, 902.024, 1104.44, 1326.56],
    [122.908, 219.67, 334.436, 468.356, 621.751, 794.743, 987.392, 1199.73, 1431.77],
    [149.453, 257.21, 382.38, 526.481, 689.946, 872.946, 1075.56, 1297.84, 1539.81],
    [178.337, 297.26, 432.933, 587.281, 760.863, 953.907, 1166.52, 1398.77, 1650.68],
    [209.54, 339.793, 486.07, 650.732, 834.48, 1037.6, 1260.24, 1502.48, 1764.35],
];

pub const DEG_1_0: &[(&str, i64)] = &[
    ("(G)", 1),
    ("(D2^D1 x^S4 S4p)", -1),
];

pub const DEG_1_2: &[(&str, i64)] = &[
    ("(G)", 1),
    ("(D6^Z1 x^V4 S4p)", -2),
    ("(D2^D1 x^D4 D4p)", -1),
    ("(D2^D1 x^D4hd D4p)", -1),
    ("(D2^D1 x^V4 V4p)", 1),
    ("(D2^Z1 x^V4 D4p)", 4),
];

pub const DEG_1_3: &[(&str, i64)] = &[
    ("(G)", 1),
    ("(D2^D1 x^D4z D4p)", -1),
    ("(D2^D1 x^D3z D3p)", -1),
    ("(D2^D1 x^D2d D4z)", -1),
    ("(D4^Z1 x^Z2m D4p)", -2),
    ("(D6^Z1 x^Z1 D3p)", -2),
    ("(D2^D1 x^Z2m D2p)", 1),
    ("(D2^Z1 x^Z2m V4p)", 2),
    ("(D2^Z1 x^Z2m D4z)", 2),
    ("(D2^Z1 x^D1z D4z)", 2),
    ("(D2^D1 x^Z1 Z1p)", -1),
    ("(D2^Z1 x^Z1 D2p)", -2),
];

pub const DEG_3_0: &[(&str, i64)] = &[
    ("(G)", 1),
    ("(D6^D3 x^S4 S4p)", -1),
];

pub const DEG_3_2: &[(&str, i64)] = &[
    ("(G)", 1),
    ("(D18^Z3 x^V4 S4p)", -2),
    ("(D6^D3 x^D4 D4p)", -1),
    ("(D6^D3 x^D4hd D4p)", -1),
    ("(D6^D3 x^V4 V4p)", 1),
    ("(D6^Z3 x^V4 D4p)", 4),
];

pub const DEG_3_3: &[(&str, i64)] = &[
    ("(G)", 1),
    ("(D6^D3 x^D4z D4p)", -1),
    ("(D6^D3 x^D3z D3p)", -1),
    ("(D6^D3 x^D2d D4z)", -1),
    ("(D12^Z3 x^Z2m D4p)", -2),
    ("(D18^Z3 x^Z1 D3p)", -2),
    ("(D6^D3 x^Z2m D2p)", 1),
    ("(D6^Z3 x^Z2m V4p)", 2),
    ("(D6^Z3 x^Z2m D4z)", 2),
    ("(D6^Z3 x^D1z D4z)", 2),
    ("(D6^D3 x^Z1 Z1p)", -1),
    ("(D6^Z3 x^Z1 D2p)", -2),
];

pub const MAXIMAL_1_0: &[&str] = &["(D2^D1 x^S4 S4p)"];

pub const MAXIMAL_1_2: &[&str] = &["(D6^Z1 x^V4 S4p)", "(D2^D1 x^D4 D4p)", "(D2^D1 x^D4hd D4p)"];

pub const MAXIMAL_1_3: &[&str] = &["(D2^D1 x^D4z D4p)", "(D2^D1 x^D3z D3p)", "(D2^D1 x^D2d D4z)", "(D4^Z1 x^Z2m D4p)", "(D6^Z1 x^Z1 D3p)"];

pub const MAXIMAL_3_0: &[&str] = &["(D6^D3 x^S4 S4p)"];

pub const MAXIMAL_3_2: &[&str] = &["(D18^Z3 x^V4 S4p)", "(D6^D3 x^D4 D4p)", "(D6^D3 x^D4hd D4p)"];

pub const MAXIMAL_3_3: &[&str] = &["(D6^D3 x^D4z D4p)", "(D6^D3 x^D3z D3p)", "(D6^D3 x^D2d D4z)", "(D12^Z3 x^Z2m D4p)", "(D18^Z3 x^Z1 D3p)"];

pub const OMEGA_132: &[(&str, i64)] = &[
    ("(D6^Z3 x^V4 D4p)", -4),
    ("(D6^D3 x^V4 V4p)", -1),
    ("(D6^D3 x^D4 D4p)", 1),
    ("(D6^D3 x^D4hd D4p)", 1),
    ("(D18^Z3 x^V4 S4p)", 2),
];

pub const OMEGA_133: &[(&str, i64)] = &[
    ("(D6^Z3 x^Z1 D1p)", 4),
    ("(D6^Z3 x^Z1 D2p)", 2),
    ("(D6^D3 x^Z1 Z1p)", 1),
    ("(D6^Z3 x^D1 D4z)", -2),
    ("(D6^Z3 x^Z2m D4z)", -2),
    ("(D6^Z3 x^Z2m V4p)", -2),
    ("(D6^Z3 x^Z2 Z4p)", 2),
    ("(D6^Z3 x^Z2 D4z)", 2),
    ("(D6^Z3 x^Z2 V4p)", 2),
    ("(D6^D3 x^D1 D1p)", -1),
    ("(D6^D3 x^D1z D1p)", -1),
    ("(D6^D3 x^Z2m D2p)", -1),
    ("(D6^D3 x^Z2 D2p)", 1),
    ("(D18^Z3 x^Z1 D3p)", -2),
    ("(D12^Z3 x^Z2m D4p)", 2),
    ("(D6^Z3 x^Z4 D4p)", -2),
    ("(D6^Z3 x^D2z D4p)", -2),
    ("(D6^D3 x^D2d D4z)", 1),
    ("(D6^D3 x^Z4 Z4p)", -1),
    ("(D6^D3 x^D2z D4z)", -1),
    ("(D6^D3 x^D3z D3p)", 1),
    ("(D6^D3 x^D4z D4p)", 1),
];

pub const OMEGA_130: &[(&str, i64)] = &[
    ("(D6^Z3 x^D1 D4z)", 2),
    ("(D6^Z3 x^Z2 Z4p)", -2),
    ("(D6^Z3 x^Z2 D4z)", -2),
    ("(D6^Z3 x^Z2 V4p)", -2),
    ("(D6^D3 x^D1 D1p)", 1),
    ("(D6^D3 x^Z2 D2p)", -1),
    ("(D6^Z3 x^Z3 D3p)", -2),
    ("(D6^D3 x^Z3 Z3p)", -1),
    ("(D6^Z3 x^Z4 D4p)", 2),
    ("(D6^Z3 x^V4 D4p)", 3),
    ("(D6^D3 x^Z4 Z4p)", 1),
    ("(D6^D3 x^V4 V4p)", 1),
    ("(D6^D3 x^D4 D4p)", -2),
    ("(D6^D3 x^S4 S4p)", 1),
];

pub const OMEGA_212: &[(&str, i64)] = &[
    ("(D2^Z1 x^Z1 D2p)", 2),
    ("(D2^D1 x^Z1 Z1p)", 1),
    ("(D2^Z1 x^D1 D4z)", -2),
    ("(D2^Z1 x^D1z D4z)", -2),
    ("(D2^D1 x^D1 D1p)", -1),
    ("(D2^D1 x^D1z D1p)", -1),
    ("(D6^Z1 x^Z1 D3p)", 4),
    ("(D2^Z1 x^Z4 D4p)", -2),
    ("(D2^Z1 x^D2z D4p)", 2),
    ("(D2^Z1 x^V4 D4p)", 2),
    ("(D2^D1 x^Z4 Z4p)", -1),
    ("(D2^D1 x^D2z D4z)", 1),
    ("(D2^D1 x^D4 D4p)", 1),
    ("(D2^D1 x^D4hd D4p)", -1),
    ("(D6^Z1 x^V4 S4p)", -2),
];

pub const OMEGA_213: &[(&str, i64)] = &[
    ("(D2^Z1 x^Z1 D1p)", -4),
    ("(D2^Z1 x^Z1 D2p)", -4),
    ("(D2^D1 x^Z1 Z1p)", -2),
    ("(D2^Z1 x^D1 D4z)", 2),
    ("(D2^Z1 x^D1z D4z)", 2),
    ("(D2^Z1 x^Z2m D4z)", 2),
    ("(D2^Z1 x^Z2m V4p)", 2),
    ("(D2^D1 x^D1 D1p)", 1),
    ("(D2^D1 x^D1z D1p)", 2),
    ("(D2^D1 x^Z2m D2p)", 1),
    ("(D6^Z1 x^Z1 D3p)", -2),
    ("(D2^Z1 x^Z3 D3p)", 2),
    ("(D2^D1 x^Z3 Z3p)", 1),
    ("(D4^Z1 x^Z2m D4p)", -2),
    ("(D2^Z1 x^Z4 D4p)", 2),
    ("(D2^D1 x^D2d D4z)", -1),
    ("(D2^D1 x^Z4 Z4p)", 1),
    ("(D2^D1 x^D3z D3p)", 1),
    ("(D2^D1 x^D4z D4p)", -1),
];

pub const RABINOWITZ_SUM: &[(&str, i64)] = &[
    ("(D2^Z1 x^Z1 D1p)", -4),
    ("(D2^Z1 x^Z1 D2p)", -2),
    ("(D2^D1 x^Z1 Z1p)", -1),
    ("(D2^Z1 x^Z2m D4z)", 2),
    ("(D2^Z1 x^Z2m V4p)", 2),
    ("(D2^D1 x^D1z D1p)", 1),
    ("(D2^D1 x^Z2m D2p)", 1),
    ("(D6^Z1 x^Z1 D3p)", 2),
    ("(D2^Z1 x^Z3 D3p)", 2),
    ("(D2^D1 x^Z3 Z3p)", 1),
    ("(D4^Z1 x^Z2m D4p)", -2),
    ("(D2^Z1 x^D2z D4p)", 2),
    ("(D2^Z1 x^V4 D4p)", 2),
    ("(D2^D1 x^D2d D4z)", -1),
    ("(D2^D1 x^D2z D4z)", 1),
    ("(D2^D1 x^D3z D3p)", -1),
    ("(D2^D1 x^D4z D4p)", -1),
    ("(D2^D1 x^D4 D4p)", 1),
    ("(D2^D1 x^D4hd D4p)", -1),
    ("(D6^Z1 x^V4 S4p)", -2),
    ("(D6^Z3 x^Z1 D1p)", 4),
    ("(D6^Z3 x^Z1 D2p)", 2),
    ("(D6^D3 x^Z1 Z1p)", 1),
    ("(D6^Z3 x^Z2m D4z)", -2),
    ("(D6^Z3 x^Z2m V4p)", -2),
    ("(D6^D3 x^D1z D1p)", -1),
    ("(D6^D3 x^Z2m D2p)", -1),
    ("(D18^Z3 x^Z1 D3p)", -2),
    ("(D6^Z3 x^Z3 D3p)", -2),
    ("(D6^D3 x^Z3 Z3p)", -1),
    ("(D12^Z3 x^Z2m D4p)", 2),
    ("(D6^Z3 x^D2z D4p)", -2),
    ("(D6^Z3 x^V4 D4p)", -2),
    ("(D6^D3 x^D2d D4z)", 1),
    ("(D6^D3 x^D2z D4z)", -1),
    ("(D6^D3 x^D3z D3p)", 1),
    ("(D6^D3 x^D4z D4p)", 1),
    ("(D6^D3 x^D4 D4p)", -1),
    ("(D6^D3 x^D4hd D4p)", 1),
    ("(D18^Z3 x^V4 S4p)", 2),
    ("(D6^D3 x^S4 S4p)", 1),
];

