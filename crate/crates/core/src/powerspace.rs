//! The Smyth power space D(X): all nonempty saturated compact subsets of a
//! finite space under the upper Vietoris topology, ordered by reverse
//! inclusion. Includes the canonical mapping x -> up(x), the Scott topology
//! on (D(X), ⊇), and the proof-replaying generic-point extractor.

use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_GROUND};
use crate::poset::{Poset, SCOTT_DEFINITIONAL_MAX};
use crate::topology::{TopSpace, DEFAULT_ELEMENT_CAP};

#[derive(Clone, Debug)]
pub struct PowerSpace {
    base: TopSpace,
    /// Nonempty saturated compact subsets in (cardinality, lex) order.
    elements: Vec<PointSet>,
}

/// x -> up(x) as an index into the power space elements.
#[derive(Clone, Debug)]
pub struct CanonicalMap {
    pub graph: Vec<usize>,
}

impl PowerSpace {
    pub fn build(base: &TopSpace, element_cap: usize) -> Result<Self> {
        let elements = base.saturated_compacts(element_cap)?;
        Ok(PowerSpace { base: base.clone(), elements })
    }

    pub fn build_default(base: &TopSpace) -> Result<Self> {
        Self::build(base, DEFAULT_ELEMENT_CAP)
    }

    pub fn base(&self) -> &TopSpace {
        &self.base
    }

    pub fn elements(&self) -> &[PointSet] {
        &self.elements
    }

    pub fn element_index(&self, k: &PointSet) -> Option<usize> {
        self.elements.iter().position(|e| e == k)
    }

    /// Order on D(X): K1 <= K2 iff K1 ⊇ K2.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elements[j].is_subset(&self.elements[i])
    }

    pub fn element_name(&self, i: usize) -> String {
        format!("{{{}}}", self.base.set_names(&self.elements[i]).join(","))
    }

    /// Box U = {K : K ⊆ U}, as a subset of the element index set.
    pub fn box_open(&self, u: &PointSet) -> Result<PointSet> {
        u.check_ground(self.base.n())?;
        if !self.base.is_open(u) {
            return Err(Error::NotOpenOrClosed {
                set: format!("{u:?}"),
                kind: "open",
            });
        }
        Ok(self.element_mask(|k| k.is_subset(u)))
    }

    /// Diamond C = {K : K ∩ C ≠ ∅}, the closed dual. Asserted to equal the
    /// complement of box(X∖C).
    pub fn diamond_closed(&self, c: &PointSet) -> Result<PointSet> {
        c.check_ground(self.base.n())?;
        if !self.base.is_closed(c) {
            return Err(Error::NotOpenOrClosed {
                set: format!("{c:?}"),
                kind: "closed",
            });
        }
        let dia = self.element_mask(|k| k.intersects(c));
        let via_box = self.box_open(&c.complement())?.complement();
        assert_eq!(dia, via_box, "diamond(C) must equal the complement of box(X minus C)");
        Ok(dia)
    }

    fn element_mask<F: Fn(&PointSet) -> bool>(&self, pred: F) -> PointSet {
        let m = self.elements.len();
        assert!(m <= MAX_GROUND, "element subsets need at most 64 elements");
        PointSet::from_indices(m, (0..m).filter(|&i| pred(&self.elements[i])))
    }

    /// (D(X), ⊇) as a poset with elements named by their member lists.
    pub fn order_poset(&self) -> Result<Poset> {
        let m = self.elements.len();
        if m > MAX_GROUND {
            return Err(Error::CarrierTooLarge(m));
        }
        let names: Vec<String> = (0..m).map(|i| self.element_name(i)).collect();
        let mut up = vec![0u64; m];
        for i in 0..m {
            for j in 0..m {
                if self.leq(i, j) {
                    up[i] |= 1 << j;
                }
            }
        }
        Ok(Poset::from_up_rows(names, up))
    }

    /// D(X) with the upper Vietoris topology as a finite space. The opens
    /// are the union closure of the box basis; the basis is closed under
    /// intersection since box(U) ∩ box(V) = box(U ∩ V) (asserted), so the
    /// union closure is a topology.
    pub fn uv_topspace(&self) -> Result<TopSpace> {
        let m = self.elements.len();
        if m > MAX_GROUND {
            return Err(Error::CarrierTooLarge(m));
        }
        let names: Vec<String> = (0..m).map(|i| self.element_name(i)).collect();
        let mut basis = Vec::with_capacity(self.base.opens().len());
        for u in self.base.opens() {
            basis.push(self.box_open(u)?);
        }
        if self.base.opens().len() <= 512 {
            for (i, u) in self.base.opens().iter().enumerate() {
                for v in &self.base.opens()[i..] {
                    let boxed_inter = self.box_open(&u.inter(v))?;
                    assert_eq!(
                        boxed_inter,
                        basis[i].inter(&self.box_open(v)?),
                        "box basis must be intersection-closed"
                    );
                }
            }
        }
        TopSpace::new(names, basis, true)
    }

    /// The canonical mapping x -> up(x). Verified to be injective,
    /// continuous and open onto its image.
    pub fn canonical_map(&self) -> Result<CanonicalMap> {
        let n = self.base.n();
        let spec = self.base.specialization();
        if let Some((i, j)) = spec.t0_witness {
            return Err(Error::NotT0 {
                a: self.base.points()[i].clone(),
                b: self.base.points()[j].clone(),
            });
        }
        let mut graph = Vec::with_capacity(n);
        for x in 0..n {
            let upx = self.base.saturation(&PointSet::singleton(n, x))?;
            let idx = self.element_index(&upx).ok_or_else(|| {
                Error::Precondition(format!("up({}) missing from D(X)", self.base.points()[x]))
            })?;
            graph.push(idx);
        }
        // Injectivity (follows from T0, still checked).
        for x in 0..n {
            for y in (x + 1)..n {
                if graph[x] == graph[y] {
                    return Err(Error::NotT0 {
                        a: self.base.points()[x].clone(),
                        b: self.base.points()[y].clone(),
                    });
                }
            }
        }
        // Order embedding: x <= y iff up(x) ⊇ up(y).
        for x in 0..n {
            for y in 0..n {
                let leq_tau = spec.up[x] & (1 << y) != 0;
                assert_eq!(
                    leq_tau,
                    self.leq(graph[x], graph[y]),
                    "canonical map must be an order embedding"
                );
            }
        }
        let image = PointSet::from_indices(self.elements.len(), graph.iter().copied());
        for u in self.base.opens() {
            // Continuity: the preimage of box(U) is U itself (up(x) ⊆ U iff
            // x ∈ U for open U), hence open.
            let boxed = self.box_open(u)?;
            let preimage =
                PointSet::from_indices(n, (0..n).filter(|&x| boxed.contains(graph[x])));
            assert!(
                self.base.is_open(&preimage),
                "canonical map preimage of a basic open must be open"
            );
            assert_eq!(preimage, *u);
            // Openness onto the image: the image of U is the trace of box(U).
            let image_u =
                PointSet::from_indices(self.elements.len(), u.iter().map(|x| graph[x]));
            assert_eq!(image_u, boxed.inter(&image), "canonical map must be open onto its image");
        }
        Ok(CanonicalMap { graph })
    }

    /// The Scott topology of the poset (D(X), ⊇). Small power spaces use the
    /// definitional generator (directed-subset quantification); beyond that
    /// the Alexandroff family is returned, which coincides with the Scott
    /// topology on finite posets.
    pub fn scott_on_powerspace(&self) -> Result<TopSpace> {
        let order = self.order_poset()?;
        if order.n() <= SCOTT_DEFINITIONAL_MAX {
            order.scott_topology()
        } else {
            order.alexandroff_topology()
        }
    }

    /// True iff every upper Vietoris open is Scott-open in (D(X), ⊇).
    pub fn uv_weaker_than_scott(&self) -> Result<(bool, Option<PointSet>)> {
        let uv = self.uv_topspace()?;
        let scott = self.scott_on_powerspace()?;
        for u in uv.opens() {
            if !scott.is_open(u) {
                return Ok((false, Some(*u)));
            }
        }
        Ok((true, None))
    }

    /// Executes the generic-point extraction for an irreducible closed F:
    /// image F under the canonical map, close it in the Scott space of D(X),
    /// recognize the closure as a principal down-set of some K, extract K's
    /// least element s, and confirm F = cl({s}).
    pub fn generic_point(&self, f: &PointSet) -> Result<usize> {
        let n = self.base.n();
        f.check_ground(n)?;
        if !self.base.is_closed(f) || f.is_empty() {
            return Err(Error::Precondition(
                "generic-point extraction needs a nonempty closed set".into(),
            ));
        }
        if !self.base.irreducible_closed_sets().contains(f) {
            return Err(Error::Precondition(
                "generic-point extraction needs an irreducible closed set".into(),
            ));
        }
        let xi = self.canonical_map()?;
        let scott = self.scott_on_powerspace()?;
        let m = self.elements.len();
        let image_f = PointSet::from_indices(m, f.iter().map(|x| xi.graph[x]));
        let closure = scott.closure(&image_f)?;
        // The closure must be the principal down-set of a unique K.
        let k_idx = (0..m)
            .find(|&k| {
                closure.contains(k)
                    && closure
                        == PointSet::from_indices(m, (0..m).filter(|&a| self.leq(a, k)))
            })
            .ok_or_else(|| {
                Error::Precondition(
                    "closure of the image is not a principal down-set; \
                     the Scott space of D(X) would be non-sober"
                        .into(),
                )
            })?;
        let k = &self.elements[k_idx];
        // Claim 1: every element of K is an upper bound of F.
        let spec = self.base.specialization();
        for member in k.iter() {
            for x in f.iter() {
                assert!(
                    spec.up[x] & (1 << member) != 0,
                    "claim 1 violated: a member of K fails to bound F"
                );
            }
        }
        // Claim 2: K has a least element.
        let s = k
            .iter()
            .find(|&s| k.iter().all(|y| spec.up[s] & (1 << y) != 0))
            .ok_or_else(|| {
                Error::Precondition("claim 2 violated: K lacks a least element".into())
            })?;
        // Claim 3: F is the closure of {s}.
        let cl_s = self.base.point_closure(s);
        assert_eq!(cl_s, *f, "claim 3 violated: F must equal cl of the least element");
        Ok(s)
    }

    /// D applied n times; each stage materializes the upper Vietoris space
    /// of the previous one.
    pub fn iterate(base: &TopSpace, n: usize, element_cap: usize) -> Result<PowerSpace> {
        assert!(n >= 1);
        let mut ps = PowerSpace::build(base, element_cap)?;
        for _ in 1..n {
            let stage = ps.uv_topspace()?;
            ps = PowerSpace::build(&stage, element_cap)?;
        }
        Ok(ps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{chain, diamond, discrete, scott};

    #[test]
    fn elements_of_standard_spaces() {
        let ps = PowerSpace::build_default(&scott(&chain(2))).unwrap();
        let bits: Vec<u64> = ps.elements().iter().map(|e| e.bits()).collect();
        assert_eq!(bits, vec![0b10, 0b11]);

        let ps = PowerSpace::build_default(&scott(&diamond())).unwrap();
        assert_eq!(ps.elements().len(), 5);

        let ps = PowerSpace::build_default(&discrete(2)).unwrap();
        assert_eq!(ps.elements().len(), 3);
    }

    #[test]
    fn element_cap_is_enforced() {
        let err = PowerSpace::build(&discrete(4), 5);
        assert!(matches!(err, Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn box_and_diamond() {
        let space = scott(&diamond());
        let ps = PowerSpace::build_default(&space).unwrap();
        let full = PointSet::full(4);
        assert_eq!(ps.box_open(&full).unwrap().len(), ps.elements().len());
        assert!(ps.box_open(&PointSet::empty(4)).unwrap().is_empty());
        // only up(1) = {1} fits inside the open {1}
        let top_only = PointSet::from_indices(4, [3]);
        let boxed = ps.box_open(&top_only).unwrap();
        assert_eq!(boxed.len(), 1);
        assert_eq!(ps.elements()[boxed.iter().next().unwrap()], top_only);
        // non-open rejected
        assert!(ps.box_open(&PointSet::from_indices(4, [0])).is_err());
        // diamond over every closed set agrees with the box complement
        for c in space.closeds() {
            ps.diamond_closed(&c).unwrap();
        }
        assert!(ps.diamond_closed(&top_only).is_err());
    }

    #[test]
    fn canonical_map_examples() {
        let ps = PowerSpace::build_default(&discrete(2)).unwrap();
        let xi = ps.canonical_map().unwrap();
        assert_eq!(ps.elements()[xi.graph[0]], PointSet::from_indices(2, [0]));
        assert_eq!(ps.elements()[xi.graph[1]], PointSet::from_indices(2, [1]));

        let ps = PowerSpace::build_default(&scott(&chain(2))).unwrap();
        let xi = ps.canonical_map().unwrap();
        assert_eq!(ps.elements()[xi.graph[0]], PointSet::full(2));
        assert_eq!(ps.elements()[xi.graph[1]], PointSet::from_indices(2, [1]));

        let ps = PowerSpace::build_default(&scott(&diamond())).unwrap();
        let xi = ps.canonical_map().unwrap();
        assert_eq!(ps.elements()[xi.graph[1]], PointSet::from_indices(4, [1, 3]));
    }

    #[test]
    fn canonical_map_rejects_non_t0() {
        let ps = PowerSpace::build_default(&crate::testutil::indiscrete(2)).unwrap();
        assert!(matches!(ps.canonical_map(), Err(Error::NotT0 { .. })));
    }

    #[test]
    fn scott_on_powerspace_examples() {
        let ps = PowerSpace::build_default(&scott(&chain(2))).unwrap();
        assert_eq!(ps.scott_on_powerspace().unwrap().opens().len(), 3);

        // D(discrete 2) under reverse inclusion is the three-element poset
        // with bottom {a,b} below the incomparable {a} and {b}. Oracle: count
        // its up-sets directly.
        let ps = PowerSpace::build_default(&discrete(2)).unwrap();
        let order = ps.order_poset().unwrap();
        let brute = (0..(1u64 << 3))
            .filter(|&m| {
                let s = PointSet::from_bits(3, m);
                order.up_set(&s).unwrap() == s
            })
            .count();
        assert_eq!(brute, 5);
        assert_eq!(ps.scott_on_powerspace().unwrap().opens().len(), brute);

        let ps = PowerSpace::build_default(&discrete(1)).unwrap();
        assert_eq!(ps.scott_on_powerspace().unwrap().opens().len(), 2);
    }

    #[test]
    fn uv_weaker_than_scott_on_finite_spaces() {
        for space in [scott(&chain(2)), scott(&diamond()), discrete(3)] {
            let ps = PowerSpace::build_default(&space).unwrap();
            let (weaker, witness) = ps.uv_weaker_than_scott().unwrap();
            assert!(weaker, "witness: {witness:?}");
        }
    }

    #[test]
    fn uv_specialization_is_reverse_inclusion() {
        for space in [scott(&chain(2)), scott(&diamond()), discrete(3)] {
            let ps = PowerSpace::build_default(&space).unwrap();
            let uv = ps.uv_topspace().unwrap();
            let spec = uv.specialization();
            assert!(spec.t0_witness.is_none());
            for i in 0..ps.elements().len() {
                for j in 0..ps.elements().len() {
                    assert_eq!(spec.up[i] & (1 << j) != 0, ps.leq(i, j));
                }
            }
        }
    }

    #[test]
    fn generic_point_examples() {
        let space = scott(&chain(2));
        let ps = PowerSpace::build_default(&space).unwrap();
        let f = PointSet::full(2);
        assert_eq!(ps.generic_point(&f).unwrap(), 1);

        let space = scott(&diamond());
        let ps = PowerSpace::build_default(&space).unwrap();
        let cl_a = space.point_closure(1);
        assert_eq!(cl_a, PointSet::from_indices(4, [0, 1]));
        assert_eq!(ps.generic_point(&cl_a).unwrap(), 1);
        for x in 0..4 {
            assert_eq!(ps.generic_point(&space.point_closure(x)).unwrap(), x);
        }
        // reducible closed sets are rejected
        let reducible = PointSet::from_indices(4, [0, 1, 2]);
        assert!(space.is_closed(&reducible));
        assert!(ps.generic_point(&reducible).is_err());
    }

    #[test]
    fn iterate_examples() {
        let ps = PowerSpace::iterate(&discrete(1), 3, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(ps.elements().len(), 1);

        // D(D(discrete 2)): brute-force oracle over the first stage's space.
        let first = PowerSpace::build_default(&discrete(2)).unwrap();
        let stage = first.uv_topspace().unwrap();
        let oracle = (1u64..(1 << stage.n()))
            .filter(|&m| {
                let s = PointSet::from_bits(stage.n(), m);
                stage.is_saturated(&s) && stage.is_compact(&s).unwrap()
            })
            .count();
        let second = PowerSpace::iterate(&discrete(2), 2, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(second.elements().len(), oracle);

        // D of a finite chain's Scott space is a chain again.
        let second = PowerSpace::iterate(&scott(&chain(2)), 2, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(second.elements().len(), 2);
        let order = second.order_poset().unwrap();
        assert!(order.leq(0, 1) || order.leq(1, 0));
    }
}
