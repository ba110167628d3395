use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use super::chain::StabilizerChain;
use crate::error::{Error, Result};

/// A bijection on `{1, ..., degree}`. Composition is left to right:
/// `a.then(b)` maps `x` to `b(a(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// From one-line notation with 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        let mut zero_based = Vec::with_capacity(degree);
        for &p in images {
            if p == 0 || p > degree || seen[p - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a permutation of 1..={degree}"
                )));
            }
            seen[p - 1] = true;
            zero_based.push(p - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// From disjoint cycles over 1-based points; omitted points are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut touched = vec![false; degree + 1];
        for cycle in cycles {
            for (idx, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree || touched[p] {
                    return Err(Error::InvalidPermutation(format!("bad cycle {cycle:?}")));
                }
                touched[p] = true;
                images[p - 1] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Self::from_images(&images)
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.images[p - 1] + 1
    }

    #[inline]
    pub(crate) fn at(&self, i: usize) -> usize {
        self.images[i]
    }

    /// One-line notation, 1-based.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub(crate) fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().position(|(i, &j)| i != j)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, img) in self.images.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", img + 1)?;
        }
        Ok(())
    }
}

/// A permutation group given by generators. The empty generator list is the trivial group.
#[derive(Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        Ok(PermutationGroup { degree, generators })
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Point orbits, each sorted, listed by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.degree).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in &self.generators {
            for i in 0..self.degree {
                let (a, b) = (find(&mut parent, i), find(&mut parent, g.at(i)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut cell_of_root = vec![usize::MAX; self.degree];
        for i in 0..self.degree {
            let r = find(&mut parent, i);
            if cell_of_root[r] == usize::MAX {
                cell_of_root[r] = cells.len();
                cells.push(Vec::new());
            }
            cells[cell_of_root[r]].push(i + 1);
        }
        cells
    }

    /// `true` iff there is exactly one orbit.
    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    pub fn stabilizer_chain(&self) -> StabilizerChain {
        StabilizerChain::new(self)
    }

    pub fn order(&self) -> BigUint {
        self.stabilizer_chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.stabilizer_chain().contains(g)
    }

    /// All elements by closure, or `None` once more than `limit` are found.
    pub fn elements(&self, limit: usize) -> Option<BTreeSet<Permutation>> {
        let id = Permutation::identity(self.degree);
        let mut seen = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            for s in &self.generators {
                let h = g.then(s);
                if seen.insert(h.clone()) {
                    if seen.len() > limit {
                        return None;
                    }
                    queue.push_back(h);
                }
            }
        }
        Some(seen)
    }
}

impl fmt::Debug for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutationGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Group text: `"degree g"`, then one generator per line in 1-based one-line notation.
impl fmt::Display for PermutationGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.degree, self.generators.len())?;
        for g in &self.generators {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for PermutationGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines();
        let header = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
        let nums: Vec<usize> = header
            .split(' ')
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| Error::parse(1, "header must be \"degree g\""))?;
        let [degree, count] = nums[..] else {
            return Err(Error::parse(1, "header must be \"degree g\""));
        };
        let mut generators = Vec::with_capacity(count);
        for idx in 0..count {
            let line = lines.next().ok_or_else(|| Error::parse(idx + 2, "missing generator"))?;
            let images: Vec<usize> = line
                .split(' ')
                .map(str::parse)
                .collect::<Result<_, _>>()
                .map_err(|_| Error::parse(idx + 2, "invalid image list"))?;
            if images.len() != degree {
                return Err(Error::parse(idx + 2, format!("expected {degree} images")));
            }
            generators.push(Permutation::from_images(&images).map_err(|e| Error::parse(idx + 2, e.to_string()))?);
        }
        if lines.next().is_some() {
            return Err(Error::parse(count + 2, "trailing content"));
        }
        PermutationGroup::new(degree, generators)
    }
}
