//! Programmatic constructions of small ortholattices: Boolean algebras,
//! horizontal sums `MOn`, the benzene ring and direct products.

use crate::io::LatticeDocument;
use crate::lattice::DEFAULT_MAX_SIZE;
use crate::ortho::OrthoLattice;

fn assemble(
    name: &str,
    elements: Vec<String>,
    covers: Vec<(String, String)>,
    ortho: Vec<(String, String)>,
) -> OrthoLattice {
    let doc = LatticeDocument {
        name: name.to_string(),
        bottom: elements[0].clone(),
        top: elements[elements.len() - 1].clone(),
        elements,
        covers,
        ortho,
    };
    doc.build(DEFAULT_MAX_SIZE)
        .expect("construction yields an ortholattice")
}

fn atom_name(i: usize) -> String {
    char::from(b'a' + u8::try_from(i).expect("at most 26 atoms")).to_string()
}

/// The Boolean algebra `2^k` on atoms `a, b, ...`. Elements are named by
/// their atoms joined with `+`, with `0` and `1` for the bounds.
pub fn boolean(k: usize) -> OrthoLattice {
    assert!(k <= 8, "2^{k} exceeds the default size limit");
    let full = (1usize << k) - 1;
    let name = |mask: usize| match mask {
        0 => "0".to_string(),
        m if m == full => "1".to_string(),
        m => (0..k)
            .filter(|i| m & (1 << i) != 0)
            .map(atom_name)
            .collect::<Vec<_>>()
            .join("+"),
    };
    let mut masks: Vec<usize> = (0..=full).collect();
    masks.sort_by_key(|m| (m.count_ones(), (0..k).map(|i| m & (1 << i) == 0).collect::<Vec<_>>()));
    let elements: Vec<String> = masks.iter().map(|&m| name(m)).collect();
    let mut covers = Vec::new();
    for &m in &masks {
        for i in 0..k {
            if m & (1 << i) == 0 {
                covers.push((name(m), name(m | (1 << i))));
            }
        }
    }
    let ortho = masks.iter().map(|&m| (name(m), name(full ^ m))).collect();
    assemble(&format!("bool{k}"), elements, covers, ortho)
}

/// Horizontal sum of `n` copies of `2^2`: `0 < a, a', b, b', ... < 1`.
pub fn mo(n: usize) -> OrthoLattice {
    let mut elements = vec!["0".to_string()];
    for i in 0..n {
        elements.push(atom_name(i));
        elements.push(format!("{}'", atom_name(i)));
    }
    elements.push("1".to_string());
    let middle = &elements[1..elements.len() - 1];
    let mut covers: Vec<(String, String)> = middle.iter().map(|x| ("0".to_string(), x.clone())).collect();
    covers.extend(middle.iter().map(|x| (x.clone(), "1".to_string())));
    let mut ortho = vec![("0".to_string(), "1".to_string())];
    for i in 0..n {
        let (x, nx) = (atom_name(i), format!("{}'", atom_name(i)));
        ortho.push((x.clone(), nx.clone()));
        ortho.push((nx, x));
    }
    ortho.push(("1".to_string(), "0".to_string()));
    assemble(&format!("mo{n}"), elements, covers, ortho)
}

/// The hexagon `0 < a < b < 1`, `0 < b' < a' < 1`: an ortholattice that is not
/// orthomodular.
pub fn benzene() -> OrthoLattice {
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let p = |v: &[(&str, &str)]| v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    assemble(
        "o6",
        s(&["0", "a", "b", "b'", "a'", "1"]),
        p(&[
            ("0", "a"),
            ("a", "b"),
            ("b", "1"),
            ("0", "b'"),
            ("b'", "a'"),
            ("a'", "1"),
        ]),
        p(&[
            ("0", "1"),
            ("a", "a'"),
            ("b", "b'"),
            ("b'", "b"),
            ("a'", "a"),
            ("1", "0"),
        ]),
    )
}

/// Direct product with componentwise operations; element `(x, y)` is named
/// `x_y` and indexed as `x * |right| + y`.
pub fn product(left: &OrthoLattice, right: &OrthoLattice) -> OrthoLattice {
    let pair = |x: &str, y: &str| format!("{x}_{y}");
    let mut elements = Vec::with_capacity(left.len() * right.len());
    let mut ortho = Vec::with_capacity(elements.capacity());
    for x in left.elements() {
        for y in right.elements() {
            elements.push(pair(left.name(x), right.name(y)));
            ortho.push((
                pair(left.name(x), right.name(y)),
                pair(left.name(left.neg(x)), right.name(right.neg(y))),
            ));
        }
    }
    let mut covers = Vec::new();
    for (lo, hi) in left.covers() {
        for y in right.elements() {
            covers.push((pair(left.name(lo), right.name(y)), pair(left.name(hi), right.name(y))));
        }
    }
    for x in left.elements() {
        for (lo, hi) in right.covers() {
            covers.push((pair(left.name(x), right.name(lo)), pair(left.name(x), right.name(hi))));
        }
    }
    let bottom = pair(left.name(left.bottom()), right.name(right.bottom()));
    let top = pair(left.name(left.top()), right.name(right.top()));
    let doc = LatticeDocument {
        name: "product".into(),
        elements,
        bottom,
        top,
        covers,
        ortho,
    };
    doc.build(DEFAULT_MAX_SIZE).expect("product of ortholattices")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(boolean(1).len(), 2);
        assert_eq!(boolean(3).len(), 8);
        assert_eq!(mo(2).len(), 6);
        assert_eq!(mo(3).len(), 8);
        assert_eq!(benzene().len(), 6);
        assert_eq!(product(&boolean(1), &mo(2)).len(), 12);
    }

    #[test]
    fn boolean_names() {
        let cube = boolean(3);
        assert_eq!(cube.names(), ["0", "a", "b", "c", "a+b", "a+c", "b+c", "1"]);
        let ab = cube.elem("a+b").unwrap();
        assert_eq!(cube.name(cube.neg(ab)), "c");
    }

    #[test]
    fn product_is_componentwise() {
        let p = product(&boolean(1), &mo(2));
        let e = |n: &str| p.elem(n).unwrap();
        assert_eq!(p.meet(e("1_a"), e("0_1")), e("0_a"));
        assert_eq!(p.join(e("1_a"), e("0_b")), e("1_1"));
        assert_eq!(p.neg(e("1_a")), e("0_a'"));
        assert_eq!(p.name(p.bottom()), "0_0");
    }
}
