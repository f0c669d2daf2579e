//! Shared constructors for the standard small test spaces.

use crate::pointset::PointSet;
use crate::poset::Poset;
use crate::topology::TopSpace;

pub fn chain(k: usize) -> Poset {
    let names: Vec<String> = (0..k).map(|i| i.to_string()).collect();
    let pairs: Vec<(usize, usize)> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Poset::from_index_pairs(names, &pairs).unwrap()
}

/// 0 < a, b < 1 with a, b incomparable. Indices: 0, a=1, b=2, 1=3.
pub fn diamond() -> Poset {
    Poset::new(
        vec!["0".into(), "a".into(), "b".into(), "1".into()],
        &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
    )
    .unwrap()
}

pub fn antichain(k: usize) -> Poset {
    let names: Vec<String> = (0..k).map(|i| format!("x{i}")).collect();
    Poset::from_index_pairs(names, &[]).unwrap()
}

pub fn scott(p: &Poset) -> TopSpace {
    p.scott_topology().unwrap()
}

pub fn discrete(k: usize) -> TopSpace {
    let names: Vec<String> = (0..k).map(|i| format!("p{i}")).collect();
    let opens: Vec<PointSet> = (0..(1u64 << k)).map(|m| PointSet::from_bits(k, m)).collect();
    TopSpace::new(names, opens, false).unwrap()
}

pub fn indiscrete(k: usize) -> TopSpace {
    let names: Vec<String> = (0..k).map(|i| format!("p{i}")).collect();
    TopSpace::new(names, vec![PointSet::empty(k), PointSet::full(k)], false).unwrap()
}
