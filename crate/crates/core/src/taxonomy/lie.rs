//! Orders of the finite simple groups of Lie type.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::{SimpleGroupId, SimpleKind};
use crate::error::GroupError;
use crate::field::prime_power;

/// Order of the Tits group `2F4(2)'`.
pub const TITS_ORDER: u64 = 17_971_200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieFamily {
    A,
    B,
    C,
    D,
    G,
    F,
    E,
    TwistedA,
    TwistedD,
    Triality,
    Suzuki,
    Ree,
    TwistedF,
    TwistedE,
}

pub const ALL_FAMILIES: [LieFamily; 14] = [
    LieFamily::A,
    LieFamily::B,
    LieFamily::C,
    LieFamily::D,
    LieFamily::G,
    LieFamily::F,
    LieFamily::E,
    LieFamily::TwistedA,
    LieFamily::TwistedD,
    LieFamily::Triality,
    LieFamily::Suzuki,
    LieFamily::Ree,
    LieFamily::TwistedF,
    LieFamily::TwistedE,
];

impl LieFamily {
    pub fn prefix(self) -> &'static str {
        match self {
            LieFamily::A => "A",
            LieFamily::B => "B",
            LieFamily::C => "C",
            LieFamily::D => "D",
            LieFamily::G => "G",
            LieFamily::F => "F",
            LieFamily::E => "E",
            LieFamily::TwistedA => "2A",
            LieFamily::TwistedD => "2D",
            LieFamily::Triality => "3D",
            LieFamily::Suzuki => "2B",
            LieFamily::Ree => "2G",
            LieFamily::TwistedF => "2F",
            LieFamily::TwistedE => "2E",
        }
    }

    /// Admissible ranks as `(min, max)`; `None` means unbounded.
    fn ranks(self) -> (u32, Option<u32>) {
        match self {
            LieFamily::A => (1, None),
            LieFamily::B | LieFamily::C => (2, None),
            LieFamily::D | LieFamily::TwistedD => (4, None),
            LieFamily::TwistedA => (2, None),
            LieFamily::G | LieFamily::Suzuki | LieFamily::Ree => (2, Some(2)),
            LieFamily::F | LieFamily::Triality | LieFamily::TwistedF => (4, Some(4)),
            LieFamily::E => (6, Some(8)),
            LieFamily::TwistedE => (6, Some(6)),
        }
    }

    /// The characteristic forced by the family, with the required odd exponent.
    fn forced_characteristic(self) -> Option<u64> {
        match self {
            LieFamily::Suzuki | LieFamily::TwistedF => Some(2),
            LieFamily::Ree => Some(3),
            _ => None,
        }
    }
}

impl FromStr for LieFamily {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        ALL_FAMILIES
            .iter()
            .copied()
            .find(|f| f.prefix().eq_ignore_ascii_case(s))
            .ok_or_else(|| GroupError::Inadmissible(format!("unknown Lie family `{s}`")))
    }
}

/// A Lie-type label `family`, `rank`, field size `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieId {
    pub family: LieFamily,
    pub rank: u32,
    pub q: u64,
}

impl LieId {
    pub fn new(family: LieFamily, rank: u32, q: u64) -> Self {
        LieId { family, rank, q }
    }

    pub fn characteristic(&self) -> u64 {
        prime_power(self.q).map(|(p, _)| p).unwrap_or(0)
    }
}

impl fmt::Display for LieId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}q{}", self.family.prefix(), self.rank, self.q)
    }
}

const EXCLUDED: [(LieFamily, u32, u64); 8] = [
    (LieFamily::A, 1, 2),
    (LieFamily::A, 1, 3),
    (LieFamily::TwistedA, 2, 2),
    (LieFamily::Suzuki, 2, 2),
    (LieFamily::B, 2, 2),
    (LieFamily::G, 2, 2),
    (LieFamily::Ree, 2, 3),
    (LieFamily::TwistedF, 4, 2),
];

fn small_gcd(a: u64, b: &BigUint) -> u64 {
    let r = (b % a).to_u64().expect("small residue");
    a.gcd(&r)
}

/// Order of the group before dividing by the center; strictly increasing in `q` and in the rank.
fn undivided_order(family: LieFamily, n: u32, q: u64) -> BigUint {
    let qb = BigUint::from(q);
    let pw = |e: u32| qb.pow(e);
    let minus = |e: u32| pw(e) - 1u32;
    let plus = |e: u32| pw(e) + 1u32;
    let product = |exps: &[u32]| exps.iter().fold(BigUint::one(), |acc, &e| acc * minus(e));
    match family {
        LieFamily::A => (2..=n + 1).fold(pw(n * (n + 1) / 2), |o, i| o * minus(i)),
        LieFamily::B | LieFamily::C => (1..=n).fold(pw(n * n), |o, i| o * minus(2 * i)),
        LieFamily::D => (1..n).fold(pw(n * (n - 1)) * minus(n), |o, i| o * minus(2 * i)),
        LieFamily::TwistedD => (1..n).fold(pw(n * (n - 1)) * plus(n), |o, i| o * minus(2 * i)),
        LieFamily::TwistedA => (2..=n + 1).fold(pw(n * (n + 1) / 2), |o, i| {
            o * if i % 2 == 0 { minus(i) } else { plus(i) }
        }),
        LieFamily::Triality => pw(12) * (pw(8) + pw(4) + 1u32) * minus(6) * minus(2),
        LieFamily::Suzuki => pw(2) * plus(2) * minus(1),
        LieFamily::Ree => pw(3) * plus(3) * minus(1),
        LieFamily::TwistedF => pw(12) * plus(6) * minus(4) * plus(3) * minus(1),
        LieFamily::G => pw(6) * minus(6) * minus(2),
        LieFamily::F => pw(24) * product(&[12, 8, 6, 2]),
        LieFamily::E => match n {
            6 => pw(36) * product(&[12, 9, 8, 6, 5, 2]),
            7 => pw(63) * product(&[18, 14, 12, 10, 8, 6, 2]),
            _ => pw(120) * product(&[30, 24, 20, 18, 14, 12, 8, 2]),
        },
        LieFamily::TwistedE => {
            pw(36) * minus(12) * plus(9) * minus(8) * minus(6) * plus(5) * minus(2)
        }
    }
}

/// Order of the center of the simply connected cover.
fn center_divisor(family: LieFamily, n: u32, q: u64) -> u64 {
    let qn = BigUint::from(q).pow(n);
    match family {
        LieFamily::A => (n as u64 + 1).gcd(&(q - 1)),
        LieFamily::TwistedA => (n as u64 + 1).gcd(&(q + 1)),
        LieFamily::B | LieFamily::C => 2u64.gcd(&(q - 1)),
        LieFamily::D => small_gcd(4, &(qn - 1u32)),
        LieFamily::TwistedD => small_gcd(4, &(qn + 1u32)),
        LieFamily::E if n == 6 => 3u64.gcd(&(q - 1)),
        LieFamily::E if n == 7 => 2u64.gcd(&(q - 1)),
        LieFamily::TwistedE => 3u64.gcd(&(q + 1)),
        _ => 1,
    }
}

/// Largest center divisor over all `q`, for cutting the enumeration.
fn max_center_divisor(family: LieFamily, n: u32) -> u64 {
    match family {
        LieFamily::A | LieFamily::TwistedA => n as u64 + 1,
        LieFamily::B | LieFamily::C => 2,
        LieFamily::D | LieFamily::TwistedD => 4,
        LieFamily::E if n == 6 => 3,
        LieFamily::E if n == 7 => 2,
        LieFamily::TwistedE => 3,
        _ => 1,
    }
}

/// The closed-form order, without admissibility checks.
pub fn lie_order_formula(family: LieFamily, n: u32, q: u64) -> BigUint {
    undivided_order(family, n, q) / center_divisor(family, n, q)
}

fn check_admissible(family: LieFamily, rank: u32, q: u64) -> Result<(), GroupError> {
    let (lo, hi) = family.ranks();
    if rank < lo
        || hi.is_some_and(|h| rank > h)
        || (family == LieFamily::E && !(6..=8).contains(&rank))
    {
        let range = match hi {
            Some(h) if h == lo => format!("rank {lo}"),
            Some(h) => format!("rank in {lo}..={h}"),
            None => format!("rank >= {lo}"),
        };
        return Err(GroupError::Inadmissible(format!(
            "family {} requires {range}, got {rank}",
            family.prefix()
        )));
    }
    let (p, f) = prime_power(q)
        .ok_or_else(|| GroupError::Inadmissible(format!("q = {q} is not a prime power")))?;
    if let Some(c) = family.forced_characteristic() {
        if p != c || f % 2 == 0 {
            return Err(GroupError::Inadmissible(format!(
                "family {} requires q = {c}^(2m+1), got {q}",
                family.prefix()
            )));
        }
    }
    if EXCLUDED.contains(&(family, rank, q)) {
        return Err(GroupError::Inadmissible(format!(
            "{}{}({q}) is not simple",
            family.prefix(),
            rank
        )));
    }
    Ok(())
}

/// Exact order of the simple group `family_rank(q)`.
pub fn lie_order(family: LieFamily, rank: u32, q: u64) -> Result<BigUint, GroupError> {
    check_admissible(family, rank, q)?;
    Ok(lie_order_formula(family, rank, q))
}

/// Field sizes allowed for a family, in increasing order.
fn field_sizes(family: LieFamily) -> Box<dyn Iterator<Item = u64>> {
    match family.forced_characteristic() {
        Some(c) => Box::new((0u32..).map(move |m| c.pow(2 * m + 1))),
        None => Box::new((2u64..).filter(|&q| prime_power(q).is_some())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieEntry {
    pub label: LieId,
    pub id: SimpleGroupId,
    pub order: BigUint,
    pub characteristic: u64,
}

/// Whether an admissible label is listed separately or folded into its `B` twin.
fn listed(id: &LieId) -> bool {
    !(id.family == LieFamily::C && (id.rank == 2 || id.q.is_multiple_of(2)))
}

/// Every simple group of Lie type with order at most `bound`, sorted by order then label.
///
/// The search over `q` and over the rank stops once the undivided order exceeds
/// `bound` times the largest possible center; both sequences are asserted to be
/// strictly increasing, which is what makes the cut exhaustive.
pub fn enumerate_lie(bound: &BigUint, tits: bool) -> Vec<LieEntry> {
    let mut out = Vec::new();
    for family in ALL_FAMILIES {
        let (lo, hi) = family.ranks();
        let mut previous_floor: Option<BigUint> = None;
        let mut rank = lo;
        while hi.is_none_or(|h| rank <= h) {
            let limit = bound * max_center_divisor(family, rank);
            let q0 = field_sizes(family).next().expect("nonempty");
            let floor = undivided_order(family, rank, q0);
            if let Some(prev) = &previous_floor {
                // Doubling of the floor outpaces the growth of the center bound,
                // so one rank over the limit rules out all larger ranks.
                assert!(
                    floor >= prev * 2u32,
                    "order must double with rank for {family:?}"
                );
                assert!(
                    max_center_divisor(family, rank) <= 2 * max_center_divisor(family, rank - 1)
                );
            }
            if floor > limit {
                break;
            }
            let mut last: Option<BigUint> = None;
            for q in field_sizes(family) {
                let raw = undivided_order(family, rank, q);
                if let Some(l) = &last {
                    assert!(&raw > l, "order must grow with q for {family:?}{rank}");
                }
                if raw > limit {
                    break;
                }
                let order = &raw / center_divisor(family, rank, q);
                let label = LieId::new(family, rank, q);
                if &order <= bound && check_admissible(family, rank, q).is_ok() && listed(&label) {
                    out.push(LieEntry {
                        label,
                        id: SimpleGroupId::from_kind(SimpleKind::Lie(label)),
                        order,
                        characteristic: label.characteristic(),
                    });
                }
                last = Some(raw);
            }
            previous_floor = Some(floor);
            rank += 1;
        }
    }
    if tits && &BigUint::from(TITS_ORDER) <= bound {
        out.push(LieEntry {
            label: LieId::new(LieFamily::TwistedF, 4, 2),
            id: SimpleGroupId::from_kind(SimpleKind::Tits),
            order: BigUint::from(TITS_ORDER),
            characteristic: 2,
        });
    }
    out.sort_by(|a, b| (&a.order, &a.id).cmp(&(&b.order, &b.id)));
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CollisionStatus {
    Safe,
    Violation,
}

impl fmt::Display for CollisionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CollisionStatus::Safe => "SAFE",
            CollisionStatus::Violation => "VIOLATION",
        })
    }
}

/// An order carried by Lie-type groups in at least two characteristics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollisionRecord {
    pub order: BigUint,
    pub labels: Vec<SimpleKind>,
    pub characteristics: BTreeSet<u64>,
    pub status: CollisionStatus,
}

impl fmt::Display for CollisionRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        let chars: Vec<String> = self.characteristics.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "order={} ids={} chars={} status={}",
            self.order,
            ids.join(";"),
            chars.join(","),
            self.status
        )
    }
}

/// All orders up to `bound` realized in two or more characteristics.
///
/// A record is a violation when two of its characteristics are both at least 5.
pub fn artin_collision_scan(bound: &BigUint, tits: bool) -> Vec<CollisionRecord> {
    let mut by_order: BTreeMap<BigUint, Vec<LieEntry>> = BTreeMap::new();
    for e in enumerate_lie(bound, tits) {
        by_order.entry(e.order.clone()).or_default().push(e);
    }
    by_order
        .into_iter()
        .filter_map(|(order, entries)| {
            let characteristics: BTreeSet<u64> = entries.iter().map(|e| e.characteristic).collect();
            if characteristics.len() < 2 {
                return None;
            }
            let labels: BTreeSet<SimpleKind> = entries
                .iter()
                .flat_map(|e| {
                    e.id.aliases()
                        .iter()
                        .filter(|k| k.characteristic().is_some())
                        .cloned()
                })
                .collect();
            let large = characteristics.iter().filter(|&&c| c >= 5).count();
            Some(CollisionRecord {
                order,
                labels: labels.into_iter().collect(),
                characteristics,
                status: if large >= 2 {
                    CollisionStatus::Violation
                } else {
                    CollisionStatus::Safe
                },
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(f: LieFamily, n: u32, q: u64) -> u128 {
        lie_order(f, n, q).unwrap().to_u128().unwrap()
    }

    #[test]
    fn classical_small_orders() {
        use LieFamily::*;
        assert_eq!(ord(A, 1, 5), 60);
        assert_eq!(ord(A, 1, 4), 60);
        assert_eq!(ord(A, 1, 7), 168);
        assert_eq!(ord(A, 2, 2), 168);
        assert_eq!(ord(TwistedA, 3, 2), 25920);
        assert_eq!(ord(C, 2, 3), 25920);
        assert_eq!(ord(TwistedA, 2, 3), 6048);
        assert_eq!(ord(Suzuki, 2, 8), 29120);
        assert_eq!(ord(G, 2, 3), 4245696);
        assert_eq!(ord(Triality, 4, 2), 211341312);
        assert_eq!(ord(D, 4, 2), 174182400);
        assert_eq!(ord(TwistedD, 4, 2), 197406720);
        assert_eq!(ord(Ree, 2, 27), 10073444472);
        assert_eq!(ord(A, 2, 4), 20160);
        assert_eq!(ord(A, 3, 2), 20160);
    }

    #[test]
    fn inadmissible_parameters_name_the_constraint() {
        let e = lie_order(LieFamily::A, 1, 2).unwrap_err();
        assert!(e.to_string().contains("not simple"));
        let e = lie_order(LieFamily::D, 3, 5).unwrap_err();
        assert!(e.to_string().contains("rank >= 4"));
        let e = lie_order(LieFamily::Suzuki, 2, 4).unwrap_err();
        assert!(e.to_string().contains("2^(2m+1)"));
        assert!(lie_order(LieFamily::A, 1, 6).is_err());
    }

    #[test]
    fn enumeration_starts_at_sixty() {
        assert!(enumerate_lie(&BigUint::from(59u32), true).is_empty());
        let e60: Vec<String> = enumerate_lie(&BigUint::from(60u32), true)
            .iter()
            .map(|e| e.label.to_string())
            .collect();
        assert_eq!(e60, ["A1q4", "A1q5"]);
        let e200: Vec<String> = enumerate_lie(&BigUint::from(200u32), true)
            .iter()
            .map(|e| e.label.to_string())
            .collect();
        assert_eq!(e200, ["A1q4", "A1q5", "A1q7", "A2q2"]);
    }

    #[test]
    fn family_parsing() {
        assert_eq!("2A".parse::<LieFamily>().unwrap(), LieFamily::TwistedA);
        assert_eq!("e".parse::<LieFamily>().unwrap(), LieFamily::E);
        assert!("X".parse::<LieFamily>().is_err());
    }

    #[test]
    fn scan_to_ten_to_the_eighth() {
        assert!(artin_collision_scan(&BigUint::from(59u32), true).is_empty());
        let records = artin_collision_scan(&BigUint::from(100_000_000u32), true);
        let lines: Vec<String> = records.iter().map(|r| r.to_string()).collect();
        assert_eq!(
            lines,
            [
                "order=60 ids=A1q4;A1q5 chars=2,5 status=SAFE",
                "order=168 ids=A1q7;A2q2 chars=2,7 status=SAFE",
                "order=25920 ids=B2q3;C2q3;2A3q2 chars=2,3 status=SAFE",
            ]
        );
    }
}
