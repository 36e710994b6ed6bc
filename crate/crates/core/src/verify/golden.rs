//! Published reference values reproduced by the check suites.

/// Tier types with their weight polynomials.
pub const TIER_POLYS: &[(&[usize], &str)] = &[
    (&[1, 1, 1], "q + 4"),
    (&[2, 2], "q + 4"),
    (&[1, 1, 2], "q^2 + 5q + 11"),
    (&[1, 1, 1, 1], "q^3 + 6q^2 + 20q + 33"),
    (&[2, 3], "q^2 + 5q + 11"),
    (&[1, 1, 3], "q^3 + 6q^2 + 16q + 26"),
    (&[1, 2, 2], "q^4 + 6q^3 + 22q^2 + 51q + 66"),
    (&[1, 1, 1, 2], "q^5 + 7q^4 + 28q^3 + 78q^2 + 152q + 171"),
    (&[1, 1, 1, 1, 1], "q^6 + 8q^5 + 35q^4 + 111q^3 + 260q^2 + 453q + 456"),
    (&[2, 4], "q^3 + 6q^2 + 16q + 26"),
    (&[3, 3], "q^4 + 6q^3 + 22q^2 + 51q + 66"),
    (&[1, 1, 4], "q^4 + 7q^3 + 22q^2 + 42q + 57"),
    (&[1, 2, 3], "q^6 + 7q^5 + 29q^4 + 85q^3 + 190q^2 + 308q + 302"),
    (&[2, 2, 2], "q^7 + 7q^6 + 30q^5 + 97q^4 + 243q^3 + 487q^2 + 719q + 627"),
    (&[1, 1, 1, 3], "q^7 + 8q^6 + 36q^5 + 114q^4 + 281q^3 + 549q^2 + 801q + 718"),
    (&[1, 1, 2, 2], "q^8 + 8q^7 + 37q^6 + 127q^5 + 346q^4 + 766q^3 + 1378q^2 + 1882q + 1533"),
    (&[1, 1, 1, 1, 2], "q^9 + 9q^8 + 45q^7 + 164q^6 + 479q^5 + 1154q^4 + 2327q^3 + 3868q^2 + 4957q + 3784"),
    (
        &[1, 1, 1, 1, 1, 1],
        "q^10 + 10q^9 + 54q^8 + 209q^7 + 649q^6 + 1681q^5 + 3691q^4 + 6921q^3 + 10805q^2 + 13139q + 9460",
    ),
];

/// `(n, m, T_{n,m}, P_{n,m})`.
pub const COUNTS: &[(usize, usize, u64, u64)] = &[
    (3, 1, 0, 0),
    (3, 2, 2, 2),
    (3, 3, 11, 5),
    (4, 1, 0, 0),
    (4, 2, 7, 7),
    (4, 3, 72, 51),
    (4, 4, 306, 60),
    (5, 1, 0, 0),
    (5, 2, 36, 36),
    (5, 3, 693, 585),
    (5, 4, 4304, 1748),
    (5, 5, 16274, 1324),
    (6, 1, 0, 0),
    (6, 2, 246, 246),
    (6, 3, 8868, 8130),
    (6, 4, 80496, 46500),
    (6, 5, 400200, 83940),
    (6, 6, 1414050, 46620),
];

/// `[x^d] E_n` for `d = 0..n`.
pub const Q_EULERIAN: &[(usize, &[&str])] = &[
    (4, &["1", "q^2 + 3q + 7", "q^2 + 4q + 6", "1"]),
    (5, &["1", "q^3 + 3q^2 + 7q + 15", "q^4 + 4q^3 + 11q^2 + 25q + 25", "q^3 + 5q^2 + 10q + 10", "1"]),
    (
        6,
        &[
            "1",
            "q^4 + 3q^3 + 7q^2 + 15q + 31",
            "q^6 + 4q^5 + 11q^4 + 31q^3 + 58q^2 + 107q + 90",
            "q^6 + 5q^5 + 16q^4 + 34q^3 + 76q^2 + 105q + 65",
            "q^4 + 6q^3 + 15q^2 + 20q + 15",
            "1",
        ],
    ),
];

/// `[x^d]` of Stanley's descent/inversion polynomial.
pub const STANLEY: &[(usize, &[&str])] = &[
    (3, &["1", "2q^2 + 2q", "q^3"]),
    (4, &["1", "q^4 + 3q^3 + 4q^2 + 3q", "3q^5 + 4q^4 + 3q^3 + q^2", "q^6"]),
];

/// `[x^k]` of the maxmin polynomial, `k = 0..n`.
pub const MAXMIN: &[(usize, &[&str])] = &[
    (4, &["0", "1", "q + 4", "1"]),
    (5, &["0", "1", "q^2 + 5q + 11", "q^2 + 5q + 11", "1"]),
    (
        6,
        &["0", "1", "q^3 + 6q^2 + 16q + 26", "q^4 + 6q^3 + 22q^2 + 51q + 66", "q^3 + 6q^2 + 16q + 26", "1"],
    ),
];

/// Leading coefficients of `W_1, ..., W_4`.
pub const W_PREFIXES: &[&[u64]] = &[
    &[1, 3, 7, 15, 31],
    &[1, 4, 11, 31, 65],
    &[1, 5, 16, 41],
    &[1, 6, 22, 63, 155],
];

/// Leading agreement of `W_d` with row `d` of the two-coloured triangle.
pub const W_TRIANGLE_AGREEMENT: &[usize] = &[2, 3, 4, 5];

/// Rows `k = 1..=4` of the two-coloured partition triangle, `n = k..=9`.
pub const TRIANGLE: &[&[u64]] = &[
    &[1, 3, 6, 12, 20, 35, 54, 86, 128],
    &[1, 4, 11, 24, 49, 89, 158, 262],
    &[1, 5, 16, 41, 91, 186, 351],
    &[1, 6, 22, 63, 155, 342],
];

/// Complete nonambiguous trees with `k` internal points.
pub const CNAT_COUNTS: &[u64] = &[1, 1, 4, 33, 456, 9460];
