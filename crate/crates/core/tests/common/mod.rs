//! Brute-force reference implementations used to cross-check the library.
//!
//! Everything here is computed from the raw document (names, covers, ortho
//! pairs) with naive algorithms: Warshall closure for the order, exhaustive
//! scans for bounds, subset enumeration for subalgebras and ultrafilters. No
//! table from the library is consulted.

#![allow(dead_code)]

use std::collections::BTreeSet;

use orthomodal::io::{corpus, LatticeDocument};
use orthomodal::lattice::DEFAULT_MAX_SIZE;
use orthomodal::{Elem, ElemSet, ModalLattice, OrthoLattice};

pub struct Entry {
    pub name: &'static str,
    pub doc: LatticeDocument,
    pub ol: OrthoLattice,
    pub oracle: Oracle,
}

impl Entry {
    pub fn modal(&self) -> ModalLattice {
        ModalLattice::new(self.ol.clone()).expect("orthomodular entry")
    }
}

pub fn corpus_entries() -> Vec<Entry> {
    corpus::names()
        .map(|name| {
            let doc = corpus::document(name).expect("bundled document parses");
            let ol = doc.build(DEFAULT_MAX_SIZE).expect("bundled document builds");
            let oracle = Oracle::from_document(&doc);
            Entry { name, doc, ol, oracle }
        })
        .collect()
}

/// Corpus entries satisfying the orthomodular law, per the oracle.
pub fn corpus_omls() -> Vec<Entry> {
    corpus_entries()
        .into_iter()
        .filter(|e| e.oracle.orthomodular_violation().is_none())
        .collect()
}

pub fn elem(i: usize) -> Elem {
    Elem::new(i)
}

pub fn to_set(ol: &OrthoLattice, idx: &[usize]) -> ElemSet {
    ol.set_of(idx.iter().map(|&i| Elem::new(i)))
}

pub fn from_set(set: &ElemSet) -> Vec<usize> {
    set.iter().map(|e| e.index()).collect()
}

pub struct Oracle {
    pub names: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub neg: Vec<usize>,
    pub bottom: usize,
    pub top: usize,
}

impl Oracle {
    pub fn from_document(doc: &LatticeDocument) -> Self {
        let n = doc.elements.len();
        let idx = |s: &str| doc.elements.iter().position(|e| e == s).expect("known name");
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in &doc.covers {
            leq[idx(a)][idx(b)] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        let bound = |lower: bool, a: usize, b: usize| -> usize {
            let candidates: Vec<usize> = (0..n)
                .filter(|&c| {
                    if lower {
                        leq[c][a] && leq[c][b]
                    } else {
                        leq[a][c] && leq[b][c]
                    }
                })
                .collect();
            *candidates
                .iter()
                .find(|&&c| candidates.iter().all(|&d| if lower { leq[d][c] } else { leq[c][d] }))
                .expect("bound exists")
        };
        let meet = (0..n).map(|a| (0..n).map(|b| bound(true, a, b)).collect()).collect();
        let join = (0..n).map(|a| (0..n).map(|b| bound(false, a, b)).collect()).collect();
        let mut neg = vec![usize::MAX; n];
        for (a, b) in &doc.ortho {
            neg[idx(a)] = idx(b);
        }
        let bottom = (0..n).find(|&x| (0..n).all(|y| leq[x][y])).expect("bottom");
        let top = (0..n).find(|&x| (0..n).all(|y| leq[y][x])).expect("top");
        Oracle {
            names: doc.elements.clone(),
            leq,
            meet,
            join,
            neg,
            bottom,
            top,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn all(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn index(&self, name: &str) -> usize {
        self.names.iter().position(|n| n == name).expect("known name")
    }

    pub fn involution_holds(&self) -> bool {
        self.all().all(|x| self.neg[self.neg[x]] == x)
    }

    pub fn de_morgan_holds(&self) -> bool {
        self.all().all(|x| {
            self.all()
                .all(|y| self.neg[self.join[x][y]] == self.meet[self.neg[x]][self.neg[y]])
        })
    }

    pub fn contradiction_holds(&self) -> bool {
        self.all().all(|x| self.meet[x][self.neg[x]] == self.bottom)
    }

    /// Order form of the law: `a ≤ b` implies `b = a ∨ (¬a ∧ b)`.
    pub fn orthomodular_violation(&self) -> Option<(usize, usize)> {
        for a in self.all() {
            for b in self.all() {
                if self.leq[a][b] && self.join[a][self.meet[self.neg[a]][b]] != b {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// `z` splits the lattice as `[0, z] × [0, ¬z]` via `x ↦ (x ∧ z, x ∧ ¬z)`.
    pub fn is_central(&self, z: usize) -> bool {
        let nz = self.neg[z];
        let split = |x: usize| (self.meet[x][z], self.meet[x][nz]);
        let injective =
            self.all().collect::<BTreeSet<_>>().len() == self.all().map(split).collect::<BTreeSet<_>>().len();
        let surjective = self.all().filter(|&u| self.leq[u][z]).all(|u| {
            self.all()
                .filter(|&v| self.leq[v][nz])
                .all(|v| split(self.join[u][v]) == (u, v))
        });
        let order = self.all().all(|x| {
            self.all().all(|y| {
                let ((x1, x2), (y1, y2)) = (split(x), split(y));
                self.leq[x][y] == (self.leq[x1][y1] && self.leq[x2][y2])
            })
        });
        injective && surjective && order
    }

    pub fn center(&self) -> Vec<usize> {
        self.all().filter(|&z| self.is_central(z)).collect()
    }

    pub fn diamond(&self, a: usize) -> usize {
        let ups: Vec<usize> = self.center().into_iter().filter(|&z| self.leq[a][z]).collect();
        *ups.iter()
            .find(|&&z| ups.iter().all(|&w| self.leq[z][w]))
            .expect("least central upper bound")
    }

    pub fn boxed(&self, a: usize) -> usize {
        let downs: Vec<usize> = self.center().into_iter().filter(|&z| self.leq[z][a]).collect();
        *downs
            .iter()
            .find(|&&z| downs.iter().all(|&w| self.leq[w][z]))
            .expect("greatest central lower bound")
    }

    pub fn is_boolean_subalgebra(&self, set: &[usize]) -> bool {
        let has = |x: usize| set.contains(&x);
        has(self.bottom)
            && has(self.top)
            && set.iter().all(|&x| {
                has(self.neg[x])
                    && set.iter().all(|&y| {
                        has(self.meet[x][y])
                            && has(self.join[x][y])
                            && set
                                .iter()
                                .all(|&z| self.meet[x][self.join[y][z]] == self.join[self.meet[x][y]][self.meet[x][z]])
                    })
            })
    }

    /// Every Boolean subalgebra, by testing every subset containing the bounds.
    pub fn boolean_subalgebras(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        assert!(n <= 20, "subset enumeration is exponential");
        let mut out = Vec::new();
        for mask in 0u64..(1 << n) {
            if mask & (1 << self.bottom) == 0 || mask & (1 << self.top) == 0 {
                continue;
            }
            let set: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            if self.is_boolean_subalgebra(&set) {
                out.push(set);
            }
        }
        out
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let all = self.boolean_subalgebras();
        all.iter()
            .filter(|b| !all.iter().any(|c| c.len() > b.len() && b.iter().all(|x| c.contains(x))))
            .cloned()
            .collect()
    }

    /// Least set containing `gens` closed under `∧`, `∨`, `¬`, by naive fixpoint.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = gens.iter().copied().collect();
        loop {
            let snapshot: Vec<usize> = set.iter().copied().collect();
            let mut grown = set.clone();
            for &x in &snapshot {
                grown.insert(self.neg[x]);
                for &y in &snapshot {
                    grown.insert(self.meet[x][y]);
                    grown.insert(self.join[x][y]);
                }
            }
            if grown == set {
                return snapshot;
            }
            set = grown;
        }
    }

    /// Ultrafilters of the Boolean subalgebra `b`, by testing every subset.
    pub fn ultrafilters(&self, b: &[usize]) -> Vec<Vec<usize>> {
        let k = b.len();
        assert!(k <= 20);
        let mut out = Vec::new();
        for mask in 1u64..(1 << k) {
            let f: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| b[i]).collect();
            let has = |x: usize| f.contains(&x);
            let proper = !has(self.bottom);
            let upward = f.iter().all(|&x| b.iter().all(|&y| !self.leq[x][y] || has(y)));
            let meets = f.iter().all(|&x| f.iter().all(|&y| has(self.meet[x][y])));
            let prime = b.iter().all(|&x| has(x) != has(self.neg[x]));
            if proper && upward && meets && prime {
                out.push(f);
            }
        }
        out
    }

    /// Central `z` true under every ultrafilter of `⟨W ∪ Z⟩` containing `p`,
    /// for every Boolean subalgebra `W ∋ p`.
    pub fn consequences(&self, p: usize, subalgebras: &[Vec<usize>]) -> Vec<usize> {
        let center = self.center();
        let mut cons: Vec<usize> = center.clone();
        for w in subalgebras.iter().filter(|w| w.contains(&p)) {
            let mut gens = w.clone();
            gens.extend(&center);
            let expanded = self.generated(&gens);
            for u in self.ultrafilters(&expanded) {
                if u.contains(&p) {
                    cons.retain(|z| u.contains(z));
                }
            }
        }
        cons
    }

    pub fn is_greechie_set(&self, set: &[usize]) -> bool {
        let c = |a: usize, b: usize| self.join[self.meet[a][b]][self.meet[a][self.neg[b]]] == a;
        for (i, &x) in set.iter().enumerate() {
            for (j, &y) in set.iter().enumerate().skip(i + 1) {
                for &z in set.iter().skip(j + 1) {
                    if !((c(x, y) && c(x, z)) || (c(y, x) && c(y, z)) || (c(z, x) && c(z, y))) {
                        return false;
                    }
                }
            }
        }
        true
    }
}
