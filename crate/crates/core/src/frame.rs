//! The complete-Heyting-algebra structure on D(L) for a finite lattice L.
//!
//! For finite L the Scott space is Alexandroff, so D(L) is exactly the family
//! of nonempty up-sets of L under reverse inclusion. Joins are intersections,
//! meets are unions; the frame law, Heyting implication by residuation and
//! spatiality via prime decomposition are all checked definitionally.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::pointset::PointSet;
use crate::poset::Poset;

/// Exhaustive frame-law quantification over all 2^m element subsets.
const FRAME_LAW_EXHAUSTIVE_MAX: usize = 12;
/// Random subsets sampled per element when beyond the exhaustive bound.
const FRAME_LAW_SAMPLES: usize = 1000;

#[derive(Clone, Debug)]
pub struct FrameOnD {
    lattice: Poset,
    /// Nonempty up-sets of L in (cardinality, lex) order.
    elements: Vec<PointSet>,
    top: usize,
    bottom: usize,
}

#[derive(Clone, Debug)]
pub struct FrameLawReport {
    pub holds: bool,
    /// A failing (a, S) pair.
    pub witness: Option<(usize, Vec<usize>)>,
    pub exhaustive: bool,
    pub pairs_checked: u64,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct SpatialityReport {
    pub primes: Vec<usize>,
    pub every_principal_filter_prime: bool,
    pub every_element_meet_of_primes: bool,
    pub spatial: bool,
}

impl FrameOnD {
    pub fn build(lattice: &Poset) -> Result<Self> {
        lattice.check_lattice()?;
        let mut elements: Vec<PointSet> = lattice
            .up_sets(usize::MAX)?
            .into_iter()
            .filter(|u| !u.is_empty())
            .collect();
        elements.sort_by(|a, b| a.card_lex_cmp(b));
        let top_of_l = lattice.top().expect("lattice has a top");
        let top_elem = PointSet::singleton(lattice.n(), top_of_l);
        let bottom_elem = PointSet::full(lattice.n());
        let top = elements.iter().position(|e| *e == top_elem).unwrap();
        let bottom = elements.iter().position(|e| *e == bottom_elem).unwrap();
        // Every member contains the top of L, so binary intersections stay
        // nonempty; unions of up-sets are up-sets.
        for e in &elements {
            assert!(e.contains(top_of_l), "every member of D(L) contains the top of L");
        }
        Ok(FrameOnD { lattice: lattice.clone(), elements, top, bottom })
    }

    pub fn lattice(&self) -> &Poset {
        &self.lattice
    }

    pub fn elements(&self) -> &[PointSet] {
        &self.elements
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn element_index(&self, e: &PointSet) -> Option<usize> {
        self.elements.iter().position(|x| x == e)
    }

    /// K1 <= K2 iff K1 ⊇ K2.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.elements[b].is_subset(&self.elements[a])
    }

    /// Join of a family is the intersection of its members (empty family
    /// gives the bottom, which is L itself). Asserted to be the least upper
    /// bound under reverse inclusion.
    pub fn join(&self, family: &[usize]) -> usize {
        let mut inter = PointSet::full(self.lattice.n());
        for &i in family {
            inter = inter.inter(&self.elements[i]);
        }
        assert!(!inter.is_empty(), "joins in D(L) are nonempty: all members contain the top");
        let j = self
            .element_index(&inter)
            .expect("intersection of up-sets is an up-set");
        debug_assert!(self.is_lub(j, family));
        j
    }

    /// Meet of a family is the union of its members (empty family gives the
    /// top {1_L}). Asserted to be the greatest lower bound.
    pub fn meet(&self, family: &[usize]) -> usize {
        let mut uni = PointSet::singleton(self.lattice.n(), self.lattice.top().unwrap());
        if !family.is_empty() {
            uni = PointSet::empty(self.lattice.n());
            for &i in family {
                uni = uni.union(&self.elements[i]);
            }
        }
        let m = self.element_index(&uni).expect("union of up-sets is an up-set");
        debug_assert!(self.is_glb(m, family));
        m
    }

    fn is_lub(&self, j: usize, family: &[usize]) -> bool {
        family.iter().all(|&i| self.leq(i, j))
            && (0..self.elements.len())
                .filter(|&c| family.iter().all(|&i| self.leq(i, c)))
                .all(|c| self.leq(j, c))
    }

    fn is_glb(&self, m: usize, family: &[usize]) -> bool {
        family.iter().all(|&i| self.leq(m, i))
            && (0..self.elements.len())
                .filter(|&c| family.iter().all(|&i| self.leq(c, i)))
                .all(|c| self.leq(c, m))
    }

    /// The infinite distributive law a ∧ ⋁S = ⋁{a ∧ s : s ∈ S}, exhaustive
    /// over all subsets when the frame is small, seeded random subsets
    /// otherwise.
    pub fn frame_law_check(&self, seed: u64) -> FrameLawReport {
        let m = self.elements.len();
        let mut checked = 0u64;
        if m <= FRAME_LAW_EXHAUSTIVE_MAX {
            for a in 0..m {
                for mask in 0u64..(1 << m) {
                    let family: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
                    checked += 1;
                    if !self.frame_law_instance(a, &family) {
                        return FrameLawReport {
                            holds: false,
                            witness: Some((a, family)),
                            exhaustive: true,
                            pairs_checked: checked,
                            seed,
                        };
                    }
                }
            }
            FrameLawReport { holds: true, witness: None, exhaustive: true, pairs_checked: checked, seed }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..FRAME_LAW_SAMPLES {
                let a = rng.random_range(0..m);
                let family: Vec<usize> = (0..m).filter(|_| rng.random_bool(0.5)).collect();
                checked += 1;
                if !self.frame_law_instance(a, &family) {
                    return FrameLawReport {
                        holds: false,
                        witness: Some((a, family)),
                        exhaustive: false,
                        pairs_checked: checked,
                        seed,
                    };
                }
            }
            FrameLawReport { holds: true, witness: None, exhaustive: false, pairs_checked: checked, seed }
        }
    }

    fn frame_law_instance(&self, a: usize, family: &[usize]) -> bool {
        let lhs = self.meet(&[a, self.join(family)]);
        let meets: Vec<usize> = family.iter().map(|&s| self.meet(&[a, s])).collect();
        lhs == self.join(&meets)
    }

    /// Heyting implication by residuation: a ⇒ b = ⋁{c : a ∧ c <= b}.
    /// Residuation (c <= a ⇒ b iff a ∧ c <= b) is asserted for every c.
    pub fn heyting_implication(&self, a: usize, b: usize) -> usize {
        let m = self.elements.len();
        let candidates: Vec<usize> =
            (0..m).filter(|&c| self.leq(self.meet(&[a, c]), b)).collect();
        let imp = self.join(&candidates);
        for c in 0..m {
            assert_eq!(
                self.leq(c, imp),
                self.leq(self.meet(&[a, c]), b),
                "residuation law violated"
            );
        }
        imp
    }

    /// p is prime iff a ∧ b <= p forces a <= p or b <= p, checked over all
    /// pairs.
    pub fn is_prime(&self, p: usize) -> bool {
        let m = self.elements.len();
        (0..m).all(|a| {
            (0..m).all(|b| {
                !self.leq(self.meet(&[a, b]), p) || self.leq(a, p) || self.leq(b, p)
            })
        })
    }

    /// Lists the primes, asserts each principal filter is prime, and checks
    /// that every element is the meet of the principal filters of its
    /// members.
    pub fn primes_and_spatiality(&self) -> SpatialityReport {
        let m = self.elements.len();
        let primes: Vec<usize> = (0..m).filter(|&p| self.is_prime(p)).collect();
        let n = self.lattice.n();
        let mut every_principal_prime = true;
        for x in 0..n {
            let upx = PointSet::from_bits(n, self.lattice.up_row(x));
            let idx = self.element_index(&upx).expect("principal filters are in D(L)");
            if !primes.contains(&idx) {
                every_principal_prime = false;
            }
        }
        let mut every_meet = true;
        for (i, k) in self.elements.iter().enumerate() {
            let filters: Vec<usize> = k
                .iter()
                .map(|x| {
                    self.element_index(&PointSet::from_bits(n, self.lattice.up_row(x))).unwrap()
                })
                .collect();
            if self.meet(&filters) != i {
                every_meet = false;
            }
        }
        // Spatial: every element is a meet of primes. The principal-filter
        // decomposition realizes it whenever both component checks pass.
        let spatial = (0..m).all(|k| {
            let below: Vec<usize> = primes.iter().copied().filter(|&p| self.leq(k, p)).collect();
            self.meet(&below) == k
        });
        SpatialityReport {
            primes,
            every_principal_filter_prime: every_principal_prime,
            every_element_meet_of_primes: every_meet,
            spatial,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::testutil::{antichain, chain, diamond};

    #[test]
    fn build_examples() {
        let fr = FrameOnD::build(&chain(2)).unwrap();
        let bits: Vec<u64> = fr.elements().iter().map(|e| e.bits()).collect();
        assert_eq!(bits, vec![0b10, 0b11]);

        assert_eq!(FrameOnD::build(&diamond()).unwrap().elements().len(), 5);
        assert_eq!(FrameOnD::build(&chain(1)).unwrap().elements().len(), 1);
        assert!(matches!(
            FrameOnD::build(&antichain(2)),
            Err(Error::NotALattice { .. })
        ));
    }

    #[test]
    fn join_is_intersection_meet_is_union() {
        let fr = FrameOnD::build(&diamond()).unwrap();
        let n = 4;
        let up_a = fr.element_index(&PointSet::from_indices(n, [1, 3])).unwrap();
        let up_b = fr.element_index(&PointSet::from_indices(n, [2, 3])).unwrap();
        let top = fr.element_index(&PointSet::from_indices(n, [3])).unwrap();
        let ab1 = fr.element_index(&PointSet::from_indices(n, [1, 2, 3])).unwrap();
        assert_eq!(fr.join(&[up_a, up_b]), top);
        assert_eq!(fr.meet(&[up_a, up_b]), ab1);
        assert_eq!(fr.top(), top);
        for k in 0..fr.elements().len() {
            assert_eq!(fr.join(&[k, fr.top()]), fr.top());
            assert_eq!(fr.meet(&[k, fr.bottom()]), fr.bottom());
        }
        assert_eq!(fr.join(&[]), fr.bottom());
        assert_eq!(fr.meet(&[]), fr.top());
    }

    #[test]
    fn frame_law_small_lattices() {
        for l in [chain(2), chain(3), diamond()] {
            let fr = FrameOnD::build(&l).unwrap();
            let report = fr.frame_law_check(0);
            assert!(report.holds && report.exhaustive);
        }
    }

    #[test]
    fn heyting_implication_examples() {
        let fr = FrameOnD::build(&diamond()).unwrap();
        let m = fr.elements().len();
        for a in 0..m {
            assert_eq!(fr.heyting_implication(a, a), fr.top());
            assert_eq!(fr.heyting_implication(fr.top(), a), a);
        }
        // brute force over all c with up(a) ∪ c ⊇ up(b)
        let n = 4;
        let up_a = fr.element_index(&PointSet::from_indices(n, [1, 3])).unwrap();
        let up_b = fr.element_index(&PointSet::from_indices(n, [2, 3])).unwrap();
        let brute: Vec<usize> = (0..m)
            .filter(|&c| {
                fr.elements()[up_b].is_subset(&fr.elements()[up_a].union(&fr.elements()[c]))
            })
            .collect();
        let mut expected = PointSet::full(n);
        for &c in &brute {
            expected = expected.inter(&fr.elements()[c]);
        }
        assert_eq!(fr.elements()[fr.heyting_implication(up_a, up_b)], expected);
        assert_eq!(fr.heyting_implication(up_a, up_b), up_b);
    }

    #[test]
    fn primes_and_spatiality_examples() {
        let fr = FrameOnD::build(&chain(2)).unwrap();
        let rep = fr.primes_and_spatiality();
        assert!(rep.spatial && rep.every_principal_filter_prime);
        assert_eq!(rep.primes.len(), 2);

        let fr = FrameOnD::build(&diamond()).unwrap();
        let rep = fr.primes_and_spatiality();
        assert!(rep.spatial && rep.every_element_meet_of_primes);
        let up_a = fr.element_index(&PointSet::from_indices(4, [1, 3])).unwrap();
        assert!(rep.primes.contains(&up_a));
        // K = {a,b,1} is the meet of the principal filters of a, b, 1
        let k = fr.element_index(&PointSet::from_indices(4, [1, 2, 3])).unwrap();
        let up_b = fr.element_index(&PointSet::from_indices(4, [2, 3])).unwrap();
        let top = fr.top();
        assert_eq!(fr.meet(&[up_a, up_b, top]), k);
    }

    #[test]
    fn elements_agree_with_powerspace() {
        use crate::powerspace::PowerSpace;
        for l in [chain(3), diamond()] {
            let fr = FrameOnD::build(&l).unwrap();
            let ps = PowerSpace::build_default(&l.scott_topology().unwrap()).unwrap();
            assert_eq!(fr.elements(), ps.elements());
        }
    }
}
