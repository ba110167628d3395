//! Automorphisms of a complete colored digraph by equitable refinement and
//! individualization.
//!
//! The first path of the search tree is built by always individualizing the
//! smallest vertex of the target cell. Then, level by level from the deepest
//! up, every other vertex `w` of that level's target cell that is not yet in
//! the orbit of the chosen vertex is individualized instead, and the subtree
//! below it is searched for a leaf equivalent to the first leaf. Each hit is an
//! automorphism fixing the earlier chosen vertices and mapping the chosen
//! vertex to `w`, so the generators collected this way generate the full group.
//!
//! Refinement is label-invariant: cells are ordered positions in `lab`,
//! fragments are placed by ascending neighbour count, and every split is
//! recorded in a trace that must match the first path at the same depth.

use std::collections::VecDeque;

#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    pos: Vec<usize>,
    /// Start position of the cell holding each vertex.
    cell_of: Vec<usize>,
    /// Length of the cell starting at a position, 0 elsewhere.
    cell_len: Vec<usize>,
    cells: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut cell_len = vec![0; n];
        if n > 0 {
            cell_len[0] = n;
        }
        Partition {
            lab: (0..n).collect(),
            pos: (0..n).collect(),
            cell_of: vec![0; n],
            cell_len,
            cells: usize::from(n > 0),
        }
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    fn cell_starts(&self) -> Vec<usize> {
        let mut starts = Vec::with_capacity(self.cells);
        let mut s = 0;
        while s < self.lab.len() {
            starts.push(s);
            s += self.cell_len[s];
        }
        starts
    }

    /// First smallest non-singleton cell, by position.
    fn target_cell(&self) -> Option<usize> {
        self.cell_starts()
            .into_iter()
            .filter(|&s| self.cell_len[s] > 1)
            .min_by_key(|&s| (self.cell_len[s], s))
    }

    fn members(&self, start: usize) -> &[usize] {
        &self.lab[start..start + self.cell_len[start]]
    }

    /// Moves `v` to the front of its cell as a singleton. Returns its position.
    fn individualize(&mut self, v: usize) -> usize {
        let s = self.cell_of[v];
        let len = self.cell_len[s];
        debug_assert!(len > 1);
        let (pv, other) = (self.pos[v], self.lab[s]);
        self.lab.swap(s, pv);
        self.pos[other] = pv;
        self.pos[v] = s;
        self.cell_len[s] = 1;
        self.cell_len[s + 1] = len - 1;
        for &u in &self.lab[s + 1..s + len] {
            self.cell_of[u] = s + 1;
        }
        self.cells += 1;
        s
    }

    /// Splits the cell at `start` so that `key` is constant on each fragment,
    /// fragments ordered by ascending key. Returns the fragment starts and keys.
    fn split_by(&mut self, start: usize, key: &[u32]) -> Vec<(usize, u32)> {
        let len = self.cell_len[start];
        let slice = &mut self.lab[start..start + len];
        slice.sort_by_key(|&v| key[v]);
        let mut fragments = Vec::new();
        let mut frag_start = start;
        for idx in start..start + len {
            let v = self.lab[idx];
            self.pos[v] = idx;
            if idx > start && key[v] != key[self.lab[idx - 1]] {
                self.cell_len[frag_start] = idx - frag_start;
                fragments.push((frag_start, key[self.lab[frag_start]]));
                frag_start = idx;
            }
            self.cell_of[v] = frag_start;
        }
        self.cell_len[frag_start] = start + len - frag_start;
        fragments.push((frag_start, key[self.lab[frag_start]]));
        self.cells += fragments.len() - 1;
        fragments
    }
}

pub(crate) struct ColoredDigraph<'a> {
    n: usize,
    ncolors: usize,
    colors: &'a [u8],
}

impl<'a> ColoredDigraph<'a> {
    pub(crate) fn new(n: usize, ncolors: usize, colors: &'a [u8]) -> Self {
        debug_assert_eq!(colors.len(), n * n);
        ColoredDigraph { n, ncolors, colors }
    }

    #[inline]
    fn color(&self, x: usize, y: usize) -> usize {
        usize::from(self.colors[x * self.n + y])
    }

    fn is_automorphism(&self, perm: &[usize]) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.color(x, y) == self.color(perm[x], perm[y])))
    }

    /// Refines `p` to the coarsest equitable partition below it, starting from
    /// the given splitter cells. Returns the split trace.
    fn refine(&self, p: &mut Partition, splitters: &[usize]) -> Vec<u32> {
        let n = self.n;
        let mut trace = Vec::new();
        let mut queue: VecDeque<usize> = splitters.iter().copied().collect();
        let mut queued = vec![false; n];
        for &s in splitters {
            queued[s] = true;
        }
        let mut counts = vec![0u32; self.ncolors * n];
        while let Some(sp) = queue.pop_front() {
            queued[sp] = false;
            if p.is_discrete() {
                break;
            }
            counts.iter_mut().for_each(|c| *c = 0);
            for &y in p.members(sp) {
                for x in 0..n {
                    counts[self.color(x, y) * n + x] += 1;
                }
            }
            for r in 0..self.ncolors {
                let key = &counts[r * n..(r + 1) * n];
                for start in p.cell_starts() {
                    let cell = p.members(start);
                    if cell.len() == 1 {
                        continue;
                    }
                    let k0 = key[cell[0]];
                    if cell.iter().all(|&v| key[v] == k0) {
                        continue;
                    }
                    let fragments = p.split_by(start, key);
                    trace.extend([sp as u32, r as u32, start as u32, fragments.len() as u32]);
                    for &(fs, k) in &fragments {
                        trace.extend([k, p.cell_len[fs] as u32]);
                        if !queued[fs] {
                            queued[fs] = true;
                            queue.push_back(fs);
                        }
                    }
                }
            }
        }
        trace.push(p.cells as u32);
        trace
    }
}

struct Level {
    partition: Partition,
    target: usize,
    chosen: usize,
    trace: Vec<u32>,
}

/// Generators (0-based image vectors) of the automorphism group of `graph`.
pub(crate) fn automorphism_generators(graph: &ColoredDigraph<'_>) -> Vec<Vec<usize>> {
    let n = graph.n;
    if n <= 1 {
        return Vec::new();
    }
    let mut root = Partition::unit(n);
    // vertices of different loop color can never be swapped
    let loop_color: Vec<u32> = (0..n).map(|v| graph.color(v, v) as u32).collect();
    root.split_by(0, &loop_color);
    let starts = root.cell_starts();
    graph.refine(&mut root, &starts);

    let mut path: Vec<Level> = Vec::new();
    let mut current = root;
    while let Some(target) = current.target_cell() {
        let chosen = *current.members(target).iter().min().expect("non-empty cell");
        let mut next = current.clone();
        let s = next.individualize(chosen);
        let trace = graph.refine(&mut next, &[s]);
        path.push(Level {
            partition: current,
            target,
            chosen,
            trace,
        });
        current = next;
    }
    let first_leaf = current.lab;

    let mut generators: Vec<Vec<usize>> = Vec::new();
    for depth in (0..path.len()).rev() {
        let level = &path[depth];
        let mut candidates = level.partition.members(level.target).to_vec();
        candidates.sort_unstable();
        let mut orbit_root = orbit_roots(n, &generators);
        for w in candidates {
            if w == level.chosen || orbit_root[w] == orbit_root[level.chosen] {
                continue;
            }
            let mut p = level.partition.clone();
            let s = p.individualize(w);
            if graph.refine(&mut p, &[s]) != level.trace {
                continue;
            }
            if let Some(g) = find_equivalent_leaf(graph, &path, &first_leaf, p, depth + 1) {
                generators.push(g);
                orbit_root = orbit_roots(n, &generators);
            }
        }
    }
    generators
}

fn find_equivalent_leaf(
    graph: &ColoredDigraph<'_>,
    path: &[Level],
    first_leaf: &[usize],
    p: Partition,
    depth: usize,
) -> Option<Vec<usize>> {
    if p.is_discrete() {
        let mut perm = vec![0; graph.n];
        for (&a, &b) in first_leaf.iter().zip(&p.lab) {
            perm[a] = b;
        }
        return graph.is_automorphism(&perm).then_some(perm);
    }
    let level = &path[depth];
    let mut candidates = p.members(level.target).to_vec();
    candidates.sort_unstable();
    for u in candidates {
        let mut q = p.clone();
        let s = q.individualize(u);
        if graph.refine(&mut q, &[s]) != level.trace {
            continue;
        }
        if let Some(g) = find_equivalent_leaf(graph, path, first_leaf, q, depth + 1) {
            return Some(g);
        }
    }
    None
}

fn orbit_roots(n: usize, generators: &[Vec<usize>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in generators {
        for (i, &j) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|i| find(&mut parent, i)).collect()
}
