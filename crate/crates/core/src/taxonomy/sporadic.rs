//! Orders of the 26 sporadic groups, used only for recognition.

use num_bigint::BigUint;
use num_traits::One;

type Factorization = &'static [(u32, u32)];

const SPORADIC: &[(&str, Factorization)] = &[
    ("M11", &[(2, 4), (3, 2), (5, 1), (11, 1)]),
    ("M12", &[(2, 6), (3, 3), (5, 1), (11, 1)]),
    ("M22", &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1)]),
    ("M23", &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1), (23, 1)]),
    ("M24", &[(2, 10), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1)]),
    ("J1", &[(2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (19, 1)]),
    ("J2", &[(2, 7), (3, 3), (5, 2), (7, 1)]),
    ("J3", &[(2, 7), (3, 5), (5, 1), (17, 1), (19, 1)]),
    (
        "J4",
        &[
            (2, 21),
            (3, 3),
            (5, 1),
            (7, 1),
            (11, 3),
            (23, 1),
            (29, 1),
            (31, 1),
            (37, 1),
            (43, 1),
        ],
    ),
    ("HS", &[(2, 9), (3, 2), (5, 3), (7, 1), (11, 1)]),
    ("McL", &[(2, 7), (3, 6), (5, 3), (7, 1), (11, 1)]),
    ("Suz", &[(2, 13), (3, 7), (5, 2), (7, 1), (11, 1), (13, 1)]),
    (
        "Co1",
        &[(2, 21), (3, 9), (5, 4), (7, 2), (11, 1), (13, 1), (23, 1)],
    ),
    ("Co2", &[(2, 18), (3, 6), (5, 3), (7, 1), (11, 1), (23, 1)]),
    ("Co3", &[(2, 10), (3, 7), (5, 3), (7, 1), (11, 1), (23, 1)]),
    ("He", &[(2, 10), (3, 3), (5, 2), (7, 3), (17, 1)]),
    ("HN", &[(2, 14), (3, 6), (5, 6), (7, 1), (11, 1), (19, 1)]),
    ("Fi22", &[(2, 17), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1)]),
    (
        "Fi23",
        &[
            (2, 18),
            (3, 13),
            (5, 2),
            (7, 1),
            (11, 1),
            (13, 1),
            (17, 1),
            (23, 1),
        ],
    ),
    (
        "Fi24'",
        &[
            (2, 21),
            (3, 16),
            (5, 2),
            (7, 3),
            (11, 1),
            (13, 1),
            (17, 1),
            (23, 1),
            (29, 1),
        ],
    ),
    (
        "Ly",
        &[
            (2, 8),
            (3, 7),
            (5, 6),
            (7, 1),
            (11, 1),
            (31, 1),
            (37, 1),
            (67, 1),
        ],
    ),
    (
        "O'N",
        &[(2, 9), (3, 4), (5, 1), (7, 3), (11, 1), (19, 1), (31, 1)],
    ),
    ("Ru", &[(2, 14), (3, 3), (5, 3), (7, 1), (13, 1), (29, 1)]),
    (
        "Th",
        &[(2, 15), (3, 10), (5, 3), (7, 2), (13, 1), (19, 1), (31, 1)],
    ),
    (
        "B",
        &[
            (2, 41),
            (3, 13),
            (5, 6),
            (7, 2),
            (11, 1),
            (13, 1),
            (17, 1),
            (19, 1),
            (23, 1),
            (31, 1),
            (47, 1),
        ],
    ),
    (
        "M",
        &[
            (2, 46),
            (3, 20),
            (5, 9),
            (7, 6),
            (11, 2),
            (13, 3),
            (17, 1),
            (19, 1),
            (23, 1),
            (29, 1),
            (31, 1),
            (41, 1),
            (47, 1),
            (59, 1),
            (71, 1),
        ],
    ),
];

pub const SPORADIC_NAMES: [&str; 26] = [
    "M11", "M12", "M22", "M23", "M24", "J1", "J2", "J3", "J4", "HS", "McL", "Suz", "Co1", "Co2",
    "Co3", "He", "HN", "Fi22", "Fi23", "Fi24'", "Ly", "O'N", "Ru", "Th", "B", "M",
];

pub fn sporadic_order(name: &str) -> Option<BigUint> {
    let (_, fac) = SPORADIC.iter().find(|(n, _)| *n == name)?;
    let mut o = BigUint::one();
    for &(p, e) in fac.iter() {
        o *= BigUint::from(p).pow(e);
    }
    Some(o)
}

pub(crate) fn sporadic_with_order(order: &BigUint) -> Vec<&'static str> {
    SPORADIC_NAMES
        .iter()
        .copied()
        .filter(|n| sporadic_order(n).as_ref() == Some(order))
        .collect()
}
