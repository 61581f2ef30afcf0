//! Finite bounded lattices given by their cover (Hasse) relation.
//!
//! Elements are dense indices `0..n`. The order is kept as one down-set
//! bitset per element. Meet and join tables are filled once at
//! construction; later queries are table lookups.

use std::collections::HashMap;

use thiserror::Error;

use crate::elem::{Elem, ElemSet};

/// Default upper bound on the number of elements accepted by [`Lattice::build`].
pub const DEFAULT_MAX_SIZE: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("{size} elements exceeds the size limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("cover relation has a cycle through `{0}`")]
    CycleDetected(String),
    #[error("order is not bounded (minimal: {minimal:?}, maximal: {maximal:?})")]
    NotBounded { minimal: Vec<String>, maximal: Vec<String> },
    #[error("`{a}` and `{b}` have no unique {bound}")]
    NotALattice { a: String, b: String, bound: Bound },
}

/// Which bound was missing when construction failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Meet,
    Join,
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bound::Meet => f.write_str("greatest lower bound"),
            Bound::Join => f.write_str("least upper bound"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Lattice {
    names: Vec<String>,
    lookup: HashMap<String, Elem>,
    down: Vec<ElemSet>,
    up: Vec<ElemSet>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

impl Lattice {
    /// Builds a lattice from element names and `(lower, upper)` cover pairs,
    /// using [`DEFAULT_MAX_SIZE`].
    pub fn build<N: AsRef<str>>(names: &[N], covers: &[(N, N)]) -> Result<Self, LatticeError> {
        Self::build_with_limit(names, covers, DEFAULT_MAX_SIZE)
    }

    pub fn build_with_limit<N: AsRef<str>>(names: &[N], covers: &[(N, N)], limit: usize) -> Result<Self, LatticeError> {
        let n = names.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if n > limit {
            return Err(LatticeError::TooLarge { size: n, limit });
        }

        let mut lookup = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            let name = name.as_ref();
            if lookup.insert(name.to_string(), Elem::new(i)).is_some() {
                return Err(LatticeError::DuplicateElement(name.to_string()));
            }
        }
        let resolve = |s: &str| {
            lookup
                .get(s)
                .copied()
                .ok_or_else(|| LatticeError::UnknownElement(s.to_string()))
        };

        let mut below: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut above: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for (lo, hi) in covers {
            let lo = resolve(lo.as_ref())?.index();
            let hi = resolve(hi.as_ref())?.index();
            below[hi].push(lo);
            above[lo].push(hi);
            indegree[hi] += 1;
        }

        // Kahn's algorithm from the minimal elements upward; every element
        // sees its full down-set before it is finalized.
        let mut down: Vec<ElemSet> = (0..n).map(|_| ElemSet::empty(n)).collect();
        let mut queue: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut done = vec![false; n];
        let mut processed = 0;
        while let Some(x) = queue.pop() {
            processed += 1;
            done[x] = true;
            let mut set = ElemSet::empty(n);
            set.insert(Elem::new(x));
            for &l in &below[x] {
                set.union_with(&down[l]);
            }
            down[x] = set;
            for &h in &above[x] {
                indegree[h] -= 1;
                if indegree[h] == 0 {
                    queue.push(h);
                }
            }
        }
        if processed < n {
            let stuck = (0..n).find(|&i| !done[i]).expect("unprocessed element");
            return Err(LatticeError::CycleDetected(names[stuck].as_ref().to_string()));
        }

        let mut up: Vec<ElemSet> = (0..n).map(|_| ElemSet::empty(n)).collect();
        for (b, set) in down.iter().enumerate() {
            for a in set.iter() {
                up[a.index()].insert(Elem::new(b));
            }
        }

        let minimal: Vec<usize> = (0..n).filter(|&i| down[i].len() == 1).collect();
        let maximal: Vec<usize> = (0..n).filter(|&i| up[i].len() == 1).collect();
        if minimal.len() != 1 || maximal.len() != 1 {
            let to_names = |v: &[usize]| v.iter().map(|&i| names[i].as_ref().to_string()).collect();
            return Err(LatticeError::NotBounded {
                minimal: to_names(&minimal),
                maximal: to_names(&maximal),
            });
        }
        let bottom = Elem::new(minimal[0]);
        let top = Elem::new(maximal[0]);

        let down_size: Vec<usize> = down.iter().map(ElemSet::len).collect();
        let up_size: Vec<usize> = up.iter().map(ElemSet::len).collect();
        let mut meet = vec![bottom; n * n];
        let mut join = vec![top; n * n];
        for a in 0..n {
            for b in a..n {
                let not_lattice = |bound| LatticeError::NotALattice {
                    a: names[a].as_ref().to_string(),
                    b: names[b].as_ref().to_string(),
                    bound,
                };
                let m = greatest_in(&down[a].intersection(&down[b]), &down, &down_size)
                    .ok_or_else(|| not_lattice(Bound::Meet))?;
                let j =
                    greatest_in(&up[a].intersection(&up[b]), &up, &up_size).ok_or_else(|| not_lattice(Bound::Join))?;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }

        Ok(Lattice {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
            lookup,
            down,
            up,
            meet,
            join,
            bottom,
            top,
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.len()).map(Elem::new)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e.index()]
    }

    pub fn elem(&self, name: &str) -> Result<Elem, LatticeError> {
        self.lookup
            .get(name)
            .copied()
            .ok_or_else(|| LatticeError::UnknownElement(name.to_string()))
    }

    #[inline]
    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> Elem {
        self.top
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a.index() * self.len() + b.index()]
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a.index() * self.len() + b.index()]
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.down[b.index()].contains(a)
    }

    /// `{x : x <= a}`
    pub fn down_set(&self, a: Elem) -> &ElemSet {
        &self.down[a.index()]
    }

    /// `{x : a <= x}`
    pub fn up_set(&self, a: Elem) -> &ElemSet {
        &self.up[a.index()]
    }

    pub fn empty_set(&self) -> ElemSet {
        ElemSet::empty(self.len())
    }

    pub fn set_of(&self, elems: impl IntoIterator<Item = Elem>) -> ElemSet {
        ElemSet::from_elems(self.len(), elems)
    }

    /// Meet of every element of `set`; the top for the empty set.
    pub fn meet_all(&self, set: impl IntoIterator<Item = Elem>) -> Elem {
        set.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of every element of `set`; the bottom for the empty set.
    pub fn join_all(&self, set: impl IntoIterator<Item = Elem>) -> Elem {
        set.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// The cover relation `(lower, upper)` in index order.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for a in self.elements() {
            for b in self.up_set(a).iter() {
                if a == b {
                    continue;
                }
                // b covers a iff the open interval (a, b) is empty
                let between = self.up[a.index()].intersection_count(&self.down[b.index()]);
                if between == 2 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Atoms: elements covering the bottom.
    pub fn atoms(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&x| x != self.bottom && self.down_set(x).len() == 2)
            .collect()
    }
}

/// The element of `candidates` whose down-set (or up-set, depending on
/// `sets`) contains all of `candidates`, if one exists.
fn greatest_in(candidates: &ElemSet, sets: &[ElemSet], sizes: &[usize]) -> Option<Elem> {
    let best = candidates.iter().max_by_key(|e| sizes[e.index()])?;
    candidates.is_subset(&sets[best.index()]).then_some(best)
}
