//! Conjugacy classes by exhaustive orbit computation over the ranked elements.

use crate::config::Config;
use crate::error::GroupError;
use crate::group::FiniteGroup;
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Perm,
    pub size: u128,
}

struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: u128) -> Self {
        BitSet(vec![0; (n as usize).div_ceil(64)])
    }
    fn insert(&mut self, i: u128) -> bool {
        let (w, b) = ((i / 64) as usize, i % 64);
        let fresh = self.0[w] & (1 << b) == 0;
        self.0[w] |= 1 << b;
        fresh
    }
    fn contains(&self, i: u128) -> bool {
        self.0[(i / 64) as usize] & (1 << (i % 64)) != 0
    }
}

/// All classes; representatives are the first class members in rank order.
pub fn conjugacy_classes(g: &FiniteGroup, cfg: &Config) -> Result<Vec<ConjugacyClass>, GroupError> {
    classes_where(g, cfg, None, |_| true)
}

/// Classes, refusing as soon as more than `max_classes` are found.
pub fn conjugacy_classes_capped(
    g: &FiniteGroup,
    cfg: &Config,
    max_classes: usize,
) -> Result<Vec<ConjugacyClass>, GroupError> {
    classes_where(g, cfg, Some(max_classes), |_| true)
}

/// Classes whose elements satisfy a class function `keep` (e.g. an order condition).
pub fn classes_where(
    g: &FiniteGroup,
    cfg: &Config,
    max_classes: Option<usize>,
    keep: impl Fn(&Perm) -> bool,
) -> Result<Vec<ConjugacyClass>, GroupError> {
    g.check_enumeration(cfg, "conjugacy class enumeration")?;
    let chain = g.chain();
    let order = g.order();
    let gens = g.perm_generators();
    let mut seen = BitSet::new(order);
    let mut out = Vec::new();
    for r in 0..order {
        if seen.contains(r) {
            continue;
        }
        let x = chain.unrank(r);
        if !keep(&x) {
            continue;
        }
        if let Some(cap) = max_classes {
            if out.len() == cap {
                return Err(GroupError::cap(
                    "number of conjugacy classes",
                    cap as u128 + 1,
                    cap as u128,
                ));
            }
        }
        seen.insert(r);
        let mut size = 1u128;
        let mut queue = vec![x.clone()];
        while let Some(y) = queue.pop() {
            for s in gens {
                let z = y.conjugate_by(s);
                let rz = chain.rank(&z).expect("conjugate stays in the group");
                if seen.insert(rz) {
                    size += 1;
                    queue.push(z);
                }
            }
        }
        out.push(ConjugacyClass {
            representative: x,
            size,
        });
    }
    Ok(out)
}
