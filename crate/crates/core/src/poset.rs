//! Finite posets with named elements and bitmask rows for the order relation.
//!
//! The constructor takes order generators (a cover list or any sub-relation),
//! closes them reflexively and transitively, and rejects antisymmetry
//! violations, so every `Poset` in circulation is a genuine partial order.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_GROUND};
use crate::topology::TopSpace;

/// Definitional Scott generation quantifies over all 2^n subsets; above this
/// carrier size it refuses rather than silently degrade.
pub const SCOTT_DEFINITIONAL_MAX: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    /// up[i] = bitmask of { j : i <= j }
    up: Vec<u64>,
    /// down[i] = bitmask of { j : j <= i }
    down: Vec<u64>,
}

impl Poset {
    /// Builds a poset from element names and generator pairs (a, b) meaning
    /// a <= b. The reflexive-transitive closure is taken; antisymmetry
    /// violations are rejected.
    pub fn new<S: AsRef<str>>(names: Vec<String>, leq_pairs: &[(S, S)]) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if n > MAX_GROUND {
            return Err(Error::CarrierTooLarge(n));
        }
        let mut index: HashMap<&str, usize> = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        let mut pairs = Vec::with_capacity(leq_pairs.len());
        for (a, b) in leq_pairs {
            let ia = *index
                .get(a.as_ref())
                .ok_or_else(|| Error::UnknownElement(a.as_ref().to_string()))?;
            let ib = *index
                .get(b.as_ref())
                .ok_or_else(|| Error::UnknownElement(b.as_ref().to_string()))?;
            pairs.push((ia, ib));
        }
        Self::from_index_pairs(names, &pairs)
    }

    /// Same as `new` but with the relation given by element indices.
    pub fn from_index_pairs(names: Vec<String>, leq_pairs: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if n > MAX_GROUND {
            return Err(Error::CarrierTooLarge(n));
        }
        let mut up = vec![0u64; n];
        for i in 0..n {
            up[i] |= 1 << i;
        }
        for &(a, b) in leq_pairs {
            assert!(a < n && b < n);
            up[a] |= 1 << b;
        }
        // Warshall closure on bitmask rows.
        for k in 0..n {
            for i in 0..n {
                if up[i] & (1 << k) != 0 {
                    up[i] |= up[k];
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && up[i] & (1 << j) != 0 && up[j] & (1 << i) != 0 {
                    return Err(Error::NotAntisymmetric {
                        a: names[i].clone(),
                        b: names[j].clone(),
                    });
                }
            }
        }
        Ok(Self::from_up_rows(names, up))
    }

    /// Builds from already-closed rows. Caller guarantees reflexivity,
    /// transitivity and antisymmetry (debug-asserted).
    pub(crate) fn from_up_rows(names: Vec<String>, up: Vec<u64>) -> Self {
        let n = names.len();
        debug_assert!((0..n).all(|i| up[i] & (1 << i) != 0));
        let mut down = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                if up[i] & (1 << j) != 0 {
                    down[j] |= 1 << i;
                }
            }
        }
        Poset { names, up, down }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a] & (1 << b) != 0
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn up_row(&self, i: usize) -> u64 {
        self.up[i]
    }

    pub fn down_row(&self, i: usize) -> u64 {
        self.down[i]
    }

    /// {x : exists y in s with y <= x}
    pub fn up_set(&self, s: &PointSet) -> Result<PointSet> {
        s.check_ground(self.n())?;
        let mut bits = 0u64;
        for i in s.iter() {
            bits |= self.up[i];
        }
        Ok(PointSet::from_bits(self.n(), bits))
    }

    /// {x : exists y in s with x <= y}
    pub fn down_set(&self, s: &PointSet) -> Result<PointSet> {
        s.check_ground(self.n())?;
        let mut bits = 0u64;
        for i in s.iter() {
            bits |= self.down[i];
        }
        Ok(PointSet::from_bits(self.n(), bits))
    }

    pub fn is_up_set(&self, s: &PointSet) -> bool {
        self.up_set(s).map(|u| u == *s).unwrap_or(false)
    }

    /// Nonempty and every pair of members has an upper bound among members.
    pub fn is_directed(&self, s: &PointSet) -> Result<bool> {
        s.check_ground(self.n())?;
        if s.is_empty() {
            return Ok(false);
        }
        for a in s.iter() {
            for b in s.iter() {
                let ub = self.up[a] & self.up[b] & s.bits();
                if ub == 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn upper_bound_mask(&self, s: &PointSet) -> u64 {
        let mut bits = PointSet::full(self.n()).bits();
        for i in s.iter() {
            bits &= self.up[i];
        }
        bits
    }

    fn lower_bound_mask(&self, s: &PointSet) -> u64 {
        let mut bits = PointSet::full(self.n()).bits();
        for i in s.iter() {
            bits &= self.down[i];
        }
        bits
    }

    /// Least upper bound when it exists; absence is a value.
    pub fn sup(&self, s: &PointSet) -> Result<Option<usize>> {
        s.check_ground(self.n())?;
        let ubs = self.upper_bound_mask(s);
        Ok(self.least_of_mask(ubs))
    }

    /// Greatest lower bound when it exists.
    pub fn inf(&self, s: &PointSet) -> Result<Option<usize>> {
        s.check_ground(self.n())?;
        let lbs = self.lower_bound_mask(s);
        Ok(self.greatest_of_mask(lbs))
    }

    fn least_of_mask(&self, mask: u64) -> Option<usize> {
        (0..self.n()).find(|&l| mask & (1 << l) != 0 && mask & !self.up[l] == 0)
    }

    fn greatest_of_mask(&self, mask: u64) -> Option<usize> {
        (0..self.n()).find(|&g| mask & (1 << g) != 0 && mask & !self.down[g] == 0)
    }

    pub fn bottom(&self) -> Option<usize> {
        self.least_of_mask(PointSet::full(self.n()).bits())
    }

    pub fn top(&self) -> Option<usize> {
        self.greatest_of_mask(PointSet::full(self.n()).bits())
    }

    /// Minimal members of a subset.
    pub fn minimals(&self, s: &PointSet) -> PointSet {
        let picks =
            s.iter().filter(|&i| s.bits() & self.down[i] & !(1u64 << i) == 0).collect::<Vec<_>>();
        PointSet::from_indices(self.n(), picks)
    }

    /// Maximal members of a subset.
    pub fn maximals(&self, s: &PointSet) -> PointSet {
        let picks =
            s.iter().filter(|&i| s.bits() & self.up[i] & !(1u64 << i) == 0).collect::<Vec<_>>();
        PointSet::from_indices(self.n(), picks)
    }

    /// All up-sets, enumerated as up-closures of antichains (each up-set is
    /// the closure of its unique set of minimal elements). Includes the empty
    /// set. Fails when the count would exceed `cap`.
    pub fn up_sets(&self, cap: usize) -> Result<Vec<PointSet>> {
        let n = self.n();
        let comparable: Vec<u64> = (0..n).map(|i| self.up[i] | self.down[i]).collect();
        let mut out: Vec<PointSet> = Vec::new();
        // Iterative DFS over (next candidate index, chosen-closure, forbidden).
        let mut stack = vec![(0usize, 0u64, 0u64)];
        while let Some((start, closure, forbidden)) = stack.pop() {
            if out.len() >= cap {
                return Err(Error::CapExceeded {
                    what: "enumerating up-sets",
                    cap,
                    reached: out.len() + 1,
                });
            }
            out.push(PointSet::from_bits(n, closure));
            for j in start..n {
                if forbidden & (1 << j) == 0 {
                    stack.push((j + 1, closure | self.up[j], forbidden | comparable[j]));
                }
            }
        }
        out.sort_by(|a, b| a.card_lex_cmp(b));
        Ok(out)
    }

    /// The Alexandroff topology: all up-sets are open.
    pub fn alexandroff_topology(&self) -> Result<TopSpace> {
        let opens = self.up_sets(usize::MAX)?;
        TopSpace::from_closed_family(self.names.clone(), opens)
    }

    /// The Scott topology computed from the definition: U open iff U is an
    /// upper set and every directed D with sup(D) in U meets U. Quantifies
    /// over all 2^n subsets, so the carrier is capped.
    pub fn scott_topology(&self) -> Result<TopSpace> {
        let n = self.n();
        if n > SCOTT_DEFINITIONAL_MAX {
            return Err(Error::CapExceeded {
                what: "definitional Scott generation (2^n directed subsets)",
                cap: SCOTT_DEFINITIONAL_MAX,
                reached: n,
            });
        }
        // Directed subsets with existing suprema, collected once.
        let mut directed: Vec<(u64, usize)> = Vec::new();
        let limit: u64 = if n == 64 { u64::MAX } else { 1u64 << n };
        let mut mask = 1u64;
        while mask < limit {
            let d = PointSet::from_bits(n, mask);
            if self.is_directed(&d)? {
                if let Some(s) = self.sup(&d)? {
                    directed.push((mask, s));
                }
            }
            mask += 1;
        }
        let candidates = self.up_sets(usize::MAX)?;
        let opens: Vec<PointSet> = candidates
            .into_iter()
            .filter(|u| {
                directed
                    .iter()
                    .all(|&(d, s)| !u.contains(s) || d & u.bits() != 0)
            })
            .collect();
        TopSpace::from_closed_family(self.names.clone(), opens)
    }

    /// Lattice check: every pair has a meet and a join. Finite lattices with
    /// top and bottom are complete.
    pub fn check_lattice(&self) -> Result<()> {
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                let pair = PointSet::from_indices(n, [a, b]);
                if self.sup(&pair)?.is_none() {
                    return Err(Error::NotALattice {
                        a: self.names[a].clone(),
                        b: self.names[b].clone(),
                        which: "join",
                    });
                }
                if self.inf(&pair)?.is_none() {
                    return Err(Error::NotALattice {
                        a: self.names[a].clone(),
                        b: self.names[b].clone(),
                        which: "meet",
                    });
                }
            }
        }
        if self.top().is_none() || self.bottom().is_none() {
            return Err(Error::Precondition(
                "lattice lacks a top or bottom element".to_string(),
            ));
        }
        Ok(())
    }
}
