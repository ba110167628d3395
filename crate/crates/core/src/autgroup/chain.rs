//! Deterministic Schreier–Sims.
//!
//! Base points are taken in natural order: whenever a new strong generator
//! fixes the whole current base, its smallest moved point is appended.

use num_bigint::BigUint;

use super::perm::{Permutation, PermutationGroup};

#[derive(Debug, Clone)]
struct Level {
    base_point: usize,
    /// `reps[p]` maps the base point to `p`, for `p` in the basic orbit.
    reps: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

/// Base and strong generating set with basic transversals.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(group: &PermutationGroup) -> Self {
        let mut chain = StabilizerChain {
            degree: group.degree(),
            strong: Vec::new(),
            levels: Vec::new(),
        };
        for g in group.generators() {
            if let Some(residue) = chain.sift(g) {
                chain.add_strong(residue);
            }
        }
        // Every Schreier generator must sift to the identity.
        'restart: loop {
            for i in 0..chain.levels.len() {
                let gens = chain.level_generators(i);
                let level = &chain.levels[i];
                for &p in &level.orbit {
                    let rep_p = level.reps[p].as_ref().expect("orbit point has a rep");
                    for s in &gens {
                        let q = s.at(p);
                        let rep_q = level.reps[q].as_ref().expect("orbit closed under gens");
                        let schreier = rep_p.then(s).then(&rep_q.inverse());
                        if let Some(residue) = chain.sift(&schreier) {
                            chain.add_strong(residue);
                            continue 'restart;
                        }
                    }
                }
            }
            break;
        }
        chain
    }

    /// Base points, 1-based.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point + 1).collect()
    }

    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    /// Product of basic orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g).is_none()
    }

    /// Strips `g` through the chain; `None` when it reduces to the identity.
    fn sift(&self, g: &Permutation) -> Option<Permutation> {
        let mut h = g.clone();
        for level in &self.levels {
            let p = h.at(level.base_point);
            match &level.reps[p] {
                Some(rep) => h = h.then(&rep.inverse()),
                None => return Some(h),
            }
        }
        (!h.is_identity()).then_some(h)
    }

    fn level_generators(&self, i: usize) -> Vec<Permutation> {
        self.strong
            .iter()
            .filter(|s| self.levels[..i].iter().all(|l| s.at(l.base_point) == l.base_point))
            .cloned()
            .collect()
    }

    fn add_strong(&mut self, g: Permutation) {
        debug_assert!(!g.is_identity());
        if self.levels.iter().all(|l| g.at(l.base_point) == l.base_point) {
            let b = g.first_moved().expect("non-identity");
            self.levels.push(Level {
                base_point: b,
                reps: Vec::new(),
                orbit: Vec::new(),
            });
        }
        self.strong.push(g);
        for i in 0..self.levels.len() {
            let gens = self.level_generators(i);
            let level = &mut self.levels[i];
            let b = level.base_point;
            let mut reps: Vec<Option<Permutation>> = vec![None; self.degree];
            reps[b] = Some(Permutation::identity(self.degree));
            let mut orbit = vec![b];
            let mut next = 0;
            while next < orbit.len() {
                let p = orbit[next];
                next += 1;
                for s in &gens {
                    let q = s.at(p);
                    if reps[q].is_none() {
                        reps[q] = Some(reps[p].as_ref().unwrap().then(s));
                        orbit.push(q);
                    }
                }
            }
            level.reps = reps;
            level.orbit = orbit;
        }
    }
}
