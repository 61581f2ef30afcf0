//! Greechie diagrams (`.gd`) and their pasting into orthomodular lattices.
//!
//! ```text
//! greechie pasting12
//! blocks: a b c ; c d e
//! ```
//!
//! Each block of `k` atoms contributes a Boolean algebra `2^k`; blocks are
//! glued along shared atoms (and their complements) and along 0 and 1. The
//! pasted order is rebuilt from scratch and re-validated, so a diagram that
//! slips past the loop checks still cannot yield a bogus lattice.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use thiserror::Error;

use crate::io::oml::{check_token, split_line, LatticeDocument};
use crate::io::InputError;
use crate::lattice::Lattice;
use crate::ortho::OrthoLattice;
use crate::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreechieError {
    #[error("diagram has no blocks")]
    NoBlocks,
    #[error("block {block} needs at least two distinct atoms")]
    BlockTooSmall { block: usize },
    #[error("atom `{atom}` appears twice in block {block}")]
    DuplicateAtom { block: usize, atom: String },
    #[error("atom name `{0}` is reserved")]
    ReservedAtom(String),
    #[error("blocks {first} and {second} share more than one atom")]
    BlockOverlapTooLarge { first: usize, second: usize },
    #[error("blocks {blocks:?} form a loop of order {}", blocks.len())]
    LoopOrder3or4 { blocks: Vec<usize> },
    #[error("pasting has {size} elements, limit is {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("pasting is not an orthomodular lattice: {0}")]
    GenerationFailed(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreechieDocument {
    pub name: String,
    pub blocks: Vec<Vec<String>>,
}

pub fn parse_greechie(text: &str) -> Result<GreechieDocument, InputError> {
    let mut name: Option<String> = None;
    let mut blocks = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let Some(text) = split_line(raw) else { continue };
        if name.is_none() {
            let rest = text
                .strip_prefix("greechie")
                .filter(|r| r.starts_with(char::is_whitespace))
                .ok_or_else(|| InputError::syntax(line, "expected `greechie <name>` header"))?
                .trim();
            check_token(rest, line)?;
            name = Some(rest.to_string());
            continue;
        }
        let rest = text
            .strip_prefix("blocks:")
            .ok_or_else(|| InputError::syntax(line, format!("expected `blocks: ...`, got `{text}`")))?;
        for block in rest.split(';') {
            let atoms: Vec<String> = block.split_whitespace().map(str::to_string).collect();
            if atoms.is_empty() {
                return Err(InputError::syntax(line, "empty block"));
            }
            for a in &atoms {
                check_token(a, line)?;
            }
            blocks.push(atoms);
        }
    }
    let name = name.ok_or_else(|| InputError::syntax(last_line + 1, "missing `greechie <name>` header"))?;
    if blocks.is_empty() {
        return Err(InputError::syntax(last_line + 1, "no blocks"));
    }
    Ok(GreechieDocument { name, blocks })
}

pub fn emit_greechie(doc: &GreechieDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "greechie {}", doc.name);
    let blocks: Vec<String> = doc.blocks.iter().map(|b| b.join(" ")).collect();
    let _ = writeln!(out, "blocks: {}", blocks.join(" ; "));
    out
}

/// Atom indices of each block, after the structural checks on the diagram.
fn index_blocks(doc: &GreechieDocument) -> Result<(Vec<String>, Vec<Vec<usize>>), GreechieError> {
    if doc.blocks.is_empty() {
        return Err(GreechieError::NoBlocks);
    }
    let mut atoms: Vec<String> = Vec::new();
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut blocks = Vec::with_capacity(doc.blocks.len());
    for (b, block) in doc.blocks.iter().enumerate() {
        let mut ids = Vec::with_capacity(block.len());
        for atom in block {
            if atom == "0" || atom == "1" || atom.contains('+') {
                return Err(GreechieError::ReservedAtom(atom.clone()));
            }
            let id = *index.entry(atom.as_str()).or_insert_with(|| {
                atoms.push(atom.clone());
                atoms.len() - 1
            });
            if ids.contains(&id) {
                return Err(GreechieError::DuplicateAtom {
                    block: b,
                    atom: atom.clone(),
                });
            }
            ids.push(id);
        }
        if ids.len() < 2 {
            return Err(GreechieError::BlockTooSmall { block: b });
        }
        blocks.push(ids);
    }
    Ok((atoms, blocks))
}

/// The atom shared by each pair of blocks, rejecting pairs sharing two or more.
fn shared_atoms(blocks: &[Vec<usize>]) -> Result<Vec<Vec<Option<usize>>>, GreechieError> {
    let m = blocks.len();
    let mut share = vec![vec![None; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let common: Vec<usize> = blocks[i].iter().copied().filter(|a| blocks[j].contains(a)).collect();
            match common.as_slice() {
                [] => {}
                [a] => {
                    share[i][j] = Some(*a);
                    share[j][i] = Some(*a);
                }
                _ => return Err(GreechieError::BlockOverlapTooLarge { first: i, second: j }),
            }
        }
    }
    Ok(share)
}

/// A cycle of three or four distinct blocks in which consecutive blocks
/// share an atom and the shared atoms are pairwise distinct.
#[allow(clippy::needless_range_loop)]
fn find_short_loop(share: &[Vec<Option<usize>>]) -> Option<Vec<usize>> {
    let m = share.len();
    let distinct = |atoms: &[usize]| atoms.iter().collect::<BTreeSet<_>>().len() == atoms.len();
    for i in 0..m {
        for j in 0..m {
            let Some(ij) = share[i][j].filter(|_| j != i) else {
                continue;
            };
            for k in 0..m {
                if k == i || k == j {
                    continue;
                }
                let Some(jk) = share[j][k] else { continue };
                if let Some(ki) = share[k][i] {
                    if distinct(&[ij, jk, ki]) {
                        return Some(vec![i, j, k]);
                    }
                }
                for l in 0..m {
                    if l == i || l == j || l == k {
                        continue;
                    }
                    let (Some(kl), Some(li)) = (share[k][l], share[l][i]) else {
                        continue;
                    };
                    if distinct(&[ij, jk, kl, li]) {
                        return Some(vec![i, j, k, l]);
                    }
                }
            }
        }
    }
    None
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Pastes the blocks of `doc` into a lattice document and re-validates it as
/// an orthomodular lattice.
pub fn generate_from_greechie(doc: &GreechieDocument, max_size: usize) -> Result<LatticeDocument, GreechieError> {
    let (atom_names, blocks) = index_blocks(doc)?;
    let share = shared_atoms(&blocks)?;
    if let Some(blocks) = find_short_loop(&share) {
        return Err(GreechieError::LoopOrder3or4 { blocks });
    }

    // Node (b, mask) is the join of the atoms of block b selected by mask.
    let mut offset = Vec::with_capacity(blocks.len());
    let mut total = 0usize;
    for block in &blocks {
        let size = u32::try_from(block.len())
            .ok()
            .and_then(|k| 1usize.checked_shl(k))
            .unwrap_or(usize::MAX);
        if size > max_size {
            return Err(GreechieError::TooLarge { size, limit: max_size });
        }
        offset.push(total);
        total += size;
    }
    let node = |b: usize, mask: usize| offset[b] + mask;
    let full = |b: usize| (1usize << blocks[b].len()) - 1;
    let bit = |b: usize, atom: usize| 1usize << blocks[b].iter().position(|&a| a == atom).expect("atom in block");

    let mut uf = UnionFind((0..total).collect());
    for b in 1..blocks.len() {
        uf.union(node(0, 0), node(b, 0));
        uf.union(node(0, full(0)), node(b, full(b)));
    }
    for (i, row) in share.iter().enumerate() {
        for (j, shared) in row.iter().enumerate().skip(i + 1) {
            if let Some(a) = *shared {
                uf.union(node(i, bit(i, a)), node(j, bit(j, a)));
                uf.union(node(i, full(i) ^ bit(i, a)), node(j, full(j) ^ bit(j, a)));
            }
        }
    }

    // Name each class after its shortest atom decomposition.
    let mut best: HashMap<usize, (usize, Vec<usize>)> = HashMap::new();
    for (b, block) in blocks.iter().enumerate() {
        for mask in 0..=full(b) {
            let mut atoms: Vec<usize> = (0..block.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| block[i])
                .collect();
            atoms.sort_unstable();
            let key = (if mask == full(b) { usize::MAX } else { atoms.len() }, atoms);
            let root = uf.find(node(b, mask));
            let slot = best.entry(root).or_insert_with(|| key.clone());
            if key < *slot {
                *slot = key;
            }
        }
    }
    let mut classes: Vec<(usize, (usize, Vec<usize>))> = best.into_iter().collect();
    classes.sort_by(|a, b| a.1.cmp(&b.1));
    if classes.len() > max_size {
        return Err(GreechieError::TooLarge {
            size: classes.len(),
            limit: max_size,
        });
    }
    let class_index: HashMap<usize, usize> = classes.iter().enumerate().map(|(i, (root, _))| (*root, i)).collect();
    let names: Vec<String> = classes
        .iter()
        .map(|(_, (size, atoms))| match (*size, atoms.len()) {
            (usize::MAX, _) => "1".to_string(),
            (_, 0) => "0".to_string(),
            _ => atoms
                .iter()
                .map(|&a| atom_names[a].as_str())
                .collect::<Vec<_>>()
                .join("+"),
        })
        .collect();

    let class_of = |uf: &mut UnionFind, b: usize, mask: usize| class_index[&uf.find(node(b, mask))];

    for a in 0..atom_names.len() {
        for other in a + 1..atom_names.len() {
            let locate = |atom: usize| {
                blocks
                    .iter()
                    .position(|bl| bl.contains(&atom))
                    .expect("atom has a block")
            };
            let (ba, bo) = (locate(a), locate(other));
            if class_of(&mut uf, ba, bit(ba, a)) == class_of(&mut uf, bo, bit(bo, other)) {
                return Err(GreechieError::GenerationFailed(format!(
                    "atoms `{}` and `{}` coincide",
                    atom_names[a], atom_names[other]
                )));
            }
        }
    }

    let mut relation = BTreeSet::new();
    let mut neg: Vec<Option<usize>> = vec![None; names.len()];
    for (b, block) in blocks.iter().enumerate() {
        for mask in 0..=full(b) {
            let here = class_of(&mut uf, b, mask);
            let there = class_of(&mut uf, b, full(b) ^ mask);
            match neg[here] {
                None => neg[here] = Some(there),
                Some(prev) if prev != there => {
                    return Err(GreechieError::GenerationFailed(format!(
                        "`{}` has two orthocomplements",
                        names[here]
                    )));
                }
                Some(_) => {}
            }
            for i in 0..block.len() {
                if mask & (1 << i) == 0 {
                    let upper = class_of(&mut uf, b, mask | (1 << i));
                    relation.insert((here, upper));
                }
            }
        }
    }

    let covers: Vec<(&str, &str)> = relation
        .iter()
        .map(|&(lo, hi)| (names[lo].as_str(), names[hi].as_str()))
        .collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let lattice = Lattice::build_with_limit(&name_refs, &covers, max_size)
        .map_err(|e| GreechieError::GenerationFailed(e.to_string()))?;
    let neg = neg
        .into_iter()
        .map(|c| crate::Elem::new(c.expect("every class has a complement")))
        .collect();
    let ol = OrthoLattice::attach(lattice, neg).map_err(|e| GreechieError::GenerationFailed(e.to_string()))?;
    if let Verdict::Counterexample((x, y)) = ol.check_orthomodular() {
        return Err(GreechieError::GenerationFailed(format!(
            "orthomodular law fails at x = `{}`, y = `{}`",
            ol.name(x),
            ol.name(y)
        )));
    }
    Ok(LatticeDocument::from_ortho(doc.name.clone(), &ol))
}
