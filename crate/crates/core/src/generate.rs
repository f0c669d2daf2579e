//! Space populations for the verification suite: exhaustive labeled posets
//! at tiny sizes and seeded random posets/lattices beyond that.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::poset::Poset;

/// Cap on the number of saturated compacts a random poset's Alexandroff
/// space may produce; keeps power-space deciders tractable.
pub const UP_SET_REJECTION_CAP: usize = 48;

/// Cap on the number of opens of the resulting upper Vietoris space (the
/// up-sets of the reverse-inclusion order on nonempty up-sets).
pub const UV_OPEN_REJECTION_CAP: usize = 512;

fn default_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

/// All labeled posets on n elements, enumerated by scanning every strict
/// relation on ordered pairs and keeping the transitive antisymmetric ones.
/// Practical for n <= 5 (2^20 masks).
pub fn all_labeled_posets(n: usize) -> Result<Vec<Poset>> {
    assert!(n <= 5, "exhaustive enumeration is sized for n <= 5");
    if n == 0 {
        return Ok(vec![]);
    }
    let pair_count = n * n - n;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pair_count) {
        let mut up = [0u64; 5];
        for i in 0..n {
            up[i] = 1 << i;
        }
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                up[i] |= 1 << j;
            }
        }
        if !is_transitive_antisymmetric(&up[..n]) {
            continue;
        }
        out.push(Poset::from_index_pairs(
            default_names(n),
            &rows_to_pairs(&up[..n]),
        )?);
    }
    Ok(out)
}

fn is_transitive_antisymmetric(up: &[u64]) -> bool {
    for i in 0..up.len() {
        let mut reach = up[i];
        let mut rest = up[i] & !(1 << i);
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if up[j] >> i & 1 == 1 {
                return false;
            }
            reach |= up[j];
        }
        if reach != up[i] {
            return false;
        }
    }
    true
}

fn rows_to_pairs(up: &[u64]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for (i, &row) in up.iter().enumerate() {
        for j in 0..up.len() {
            if i != j && row >> j & 1 == 1 {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Seeded random posets: a random DAG on index order, transitively closed.
/// Posets whose up-set lattice exceeds the rejection cap are redrawn so the
/// resulting power spaces stay small.
pub fn random_posets(count: usize, max_n: usize, seed: u64) -> Result<Vec<Poset>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.random_range(1..=max_n);
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.random_bool(0.35) {
                    pairs.push((i, j));
                }
            }
        }
        let p = Poset::from_index_pairs(default_names(n), &pairs)
            .expect("a DAG closure is always a poset");
        if within_power_space_caps(&p)? {
            out.push(p);
        }
    }
    Ok(out)
}

fn within_power_space_caps(p: &Poset) -> Result<bool> {
    let up_sets = match p.up_sets(UP_SET_REJECTION_CAP + 1) {
        Ok(v) if v.len() <= UP_SET_REJECTION_CAP => v,
        _ => return Ok(false),
    };
    let nonempty: Vec<_> = up_sets.into_iter().filter(|s| !s.is_empty()).collect();
    let mut pairs = Vec::new();
    for (i, a) in nonempty.iter().enumerate() {
        for (j, b) in nonempty.iter().enumerate() {
            if i != j && b.is_subset(a) {
                pairs.push((i, j));
            }
        }
    }
    let d_order = Poset::from_index_pairs(
        (0..nonempty.len()).map(|i| format!("k{i}")).collect(),
        &pairs,
    )?;
    Ok(matches!(d_order.up_sets(UV_OPEN_REJECTION_CAP + 1),
        Ok(v) if v.len() <= UV_OPEN_REJECTION_CAP))
}

/// Seeded random lattices on exactly n elements (n >= 2): a random poset on
/// the middle elements with a forced bottom and top, kept when every pair
/// has a meet and a join.
pub fn random_lattices(count: usize, n: usize, seed: u64) -> Result<Vec<Poset>> {
    assert!(n >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mid = n - 2;
        let mut pairs = Vec::new();
        for i in 0..mid {
            for j in (i + 1)..mid {
                if rng.random_bool(0.3) {
                    pairs.push((i + 1, j + 1));
                }
            }
        }
        for i in 0..mid {
            pairs.push((0, i + 1));
            pairs.push((i + 1, n - 1));
        }
        if n == 2 {
            pairs.push((0, 1));
        }
        let p = Poset::from_index_pairs(default_names(n), &pairs)
            .expect("a DAG closure is always a poset");
        if p.check_lattice().is_ok() {
            out.push(p);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_poset_counts() {
        // OEIS A001035: labeled posets on n elements
        assert_eq!(all_labeled_posets(1).unwrap().len(), 1);
        assert_eq!(all_labeled_posets(2).unwrap().len(), 3);
        assert_eq!(all_labeled_posets(3).unwrap().len(), 19);
        assert_eq!(all_labeled_posets(4).unwrap().len(), 219);
    }

    #[test]
    fn random_posets_are_deterministic() {
        let a = random_posets(20, 6, 9).unwrap();
        let b = random_posets(20, 6, 9).unwrap();
        assert_eq!(a.len(), 20);
        for (p, q) in a.iter().zip(&b) {
            assert_eq!(p.n(), q.n());
            for i in 0..p.n() {
                assert_eq!(p.up_row(i), q.up_row(i));
            }
        }
        let c = random_posets(20, 6, 10).unwrap();
        let differs = a
            .iter()
            .zip(&c)
            .any(|(p, q)| p.n() != q.n() || (0..p.n()).any(|i| p.up_row(i) != q.up_row(i)));
        assert!(differs);
    }

    #[test]
    fn random_lattices_are_lattices() {
        let ls = random_lattices(25, 6, 3).unwrap();
        assert_eq!(ls.len(), 25);
        for l in &ls {
            l.check_lattice().unwrap();
            assert_eq!(l.n(), 6);
        }
    }
}
