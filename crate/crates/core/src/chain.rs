//! Stabilizer chains by deterministic Schreier-Sims.
//!
//! Base points are the smallest points moved by the element that forces a new
//! level, so the chain of a fixed generator list is reproducible. Generators
//! can be appended to a finished chain; only the new Schreier generators are
//! then sifted.

use rand::Rng;

use crate::perm::Perm;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    /// Generators of the stabilizer of the earlier base points.
    gens: Vec<Perm>,
    orbit: Vec<u32>,
    /// Point -> index into `orbit`, or `NONE`.
    position: Vec<u32>,
    /// `reps[k]` maps `base` to `orbit[k]`.
    reps: Vec<Perm>,
    inv_reps: Vec<Perm>,
    /// `done[j]` counts orbit points whose Schreier generator with `gens[j]` sifts.
    done: Vec<usize>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut position = vec![NONE; degree];
        position[base as usize] = 0;
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            position,
            reps: vec![Perm::identity(degree)],
            inv_reps: vec![Perm::identity(degree)],
            done: Vec::new(),
        }
    }

    fn push_gen(&mut self, g: Perm) {
        self.gens.push(g);
        self.done.push(0);
        self.extend_orbit();
    }

    fn extend_orbit(&mut self) {
        let mut k = 0;
        while k < self.orbit.len() {
            let x = self.orbit[k];
            for s in &self.gens {
                let y = s.apply(x);
                if self.position[y as usize] == NONE {
                    self.position[y as usize] = self.orbit.len() as u32;
                    self.orbit.push(y);
                    let rep = self.reps[k].compose(s);
                    self.inv_reps.push(rep.inverse());
                    self.reps.push(rep);
                }
            }
            k += 1;
        }
    }

    #[inline]
    fn index_of(&self, x: u32) -> Option<usize> {
        let p = self.position[x as usize];
        (p != NONE).then_some(p as usize)
    }
}

/// A base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Perm]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            if chain.levels.iter().all(|l| g.apply(l.base) == l.base) {
                let b = g.smallest_moved_point().expect("non-identity");
                chain.levels.push(Level::new(b, degree));
            }
        }
        for g in gens {
            let depth = chain.fixed_prefix(&g);
            for l in 0..=depth.min(chain.levels.len() - 1) {
                chain.levels[l].gens.push(g.clone());
                chain.levels[l].done.push(0);
            }
        }
        for l in &mut chain.levels {
            l.extend_orbit();
        }
        chain.complete();
        chain
    }

    pub fn trivial(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of leading base points fixed by `g`.
    fn fixed_prefix(&self, g: &Perm) -> usize {
        self.levels
            .iter()
            .take_while(|l| g.apply(l.base) == l.base)
            .count()
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level where sifting stopped.
    pub fn strip_from(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let x = h.apply(level.base);
            match level.index_of(x) {
                None => return (h, i),
                Some(k) => {
                    if k != 0 {
                        h = h.compose(&level.inv_reps[k]);
                    }
                }
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.strip_from(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    fn complete(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let li = i as usize;
            let mut dropped: Option<usize> = None;
            'scan: for gi in 0..self.levels[li].gens.len() {
                while self.levels[li].done[gi] < self.levels[li].orbit.len() {
                    let level = &self.levels[li];
                    let k = level.done[gi];
                    let s = &level.gens[gi];
                    let y = s.apply(level.orbit[k]);
                    let ky = level.index_of(y).expect("orbit is closed");
                    let schreier = level.reps[k].compose(s).compose(&level.inv_reps[ky]);
                    self.levels[li].done[gi] += 1;
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = self.strip_from(&schreier, li + 1);
                    if j < self.levels.len() || !h.is_identity() {
                        if j == self.levels.len() {
                            let b = h.smallest_moved_point().expect("non-identity residue");
                            self.levels.push(Level::new(b, self.degree));
                        }
                        for l in li + 1..=j {
                            self.levels[l].push_gen(h.clone());
                        }
                        dropped = Some(j);
                        break 'scan;
                    }
                }
            }
            match dropped {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
    }

    /// Adds a generator; returns false if it was already a member.
    pub fn add_generator(&mut self, g: &Perm) -> bool {
        if self.contains(g) {
            return false;
        }
        if self.fixed_prefix(g) == self.levels.len() {
            let b = g
                .smallest_moved_point()
                .expect("non-member is non-identity");
            self.levels.push(Level::new(b, self.degree));
        }
        let depth = self.fixed_prefix(g);
        for l in 0..=depth.min(self.levels.len() - 1) {
            self.levels[l].push_gen(g.clone());
        }
        self.complete();
        true
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Generators of the `i`-th point stabilizer in the chain.
    pub fn level_generators(&self, i: usize) -> &[Perm] {
        &self.levels[i].gens
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        let mut out: Vec<Perm> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// All Schreier generators `u_x s u_{xs}^-1` of every level, excluding identities.
    pub fn schreier_generators(&self) -> Vec<Perm> {
        let mut out = Vec::new();
        for level in &self.levels {
            for (k, &x) in level.orbit.iter().enumerate() {
                for s in &level.gens {
                    let ky = level.index_of(s.apply(x)).expect("closed orbit");
                    let sg = level.reps[k].compose(s).compose(&level.inv_reps[ky]);
                    if !sg.is_identity() {
                        out.push(sg);
                    }
                }
            }
        }
        out
    }

    /// Position of `g` in the mixed-radix enumeration of the group, if it is a member.
    pub fn rank(&self, g: &Perm) -> Option<u128> {
        let mut h = g.clone();
        let mut rank = 0u128;
        for level in &self.levels {
            let k = level.index_of(h.apply(level.base))?;
            rank = rank * level.orbit.len() as u128 + k as u128;
            if k != 0 {
                h = h.compose(&level.inv_reps[k]);
            }
        }
        h.is_identity().then_some(rank)
    }

    /// Inverse of [`rank`](Self::rank); `r` must be below the group order.
    pub fn unrank(&self, mut r: u128) -> Perm {
        let mut digits = vec![0usize; self.levels.len()];
        for (i, level) in self.levels.iter().enumerate().rev() {
            let n = level.orbit.len() as u128;
            digits[i] = (r % n) as usize;
            r /= n;
        }
        let mut g = Perm::identity(self.degree);
        for (i, level) in self.levels.iter().enumerate().rev() {
            if digits[i] != 0 {
                g = g.compose(&level.reps[digits[i]]);
            }
        }
        g
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Perm {
        let mut g = Perm::identity(self.degree);
        for level in self.levels.iter().rev() {
            let k = rng.gen_range(0..level.orbit.len());
            if k != 0 {
                g = g.compose(&level.reps[k]);
            }
        }
        g
    }

    /// Canonical element of the coset `N g` for the group `N` of this chain: the one
    /// whose base images are lexicographically smallest.
    pub fn canonical_coset_rep(&self, g: &Perm) -> Perm {
        let mut h = g.clone();
        for level in &self.levels {
            let (k, _) = level
                .orbit
                .iter()
                .enumerate()
                .min_by_key(|(_, &x)| h.apply(x))
                .expect("orbit is nonempty");
            if k != 0 {
                h = level.reps[k].compose(&h);
            }
        }
        h
    }
}
