//! Finite topological spaces and the classical deciders: specialization,
//! saturation, compactness, irreducibility, sobriety, well-filteredness,
//! d-space and coherence.
//!
//! All deciders are definitional. Where a quantifier ranges over an
//! exponential family (directed subsets, filtered families, open covers) the
//! search is exhaustive below a size threshold and budget-bounded above it,
//! with the verdict recording whether the search was exhausted.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_GROUND};
use crate::poset::Poset;

/// Full pairwise union/intersection closure is checked up to this family
/// size; larger families get a deterministic sample of pairs.
const CLOSURE_CHECK_MAX: usize = 1024;
/// Exhaustive open-cover enumeration for the compactness oracle.
const COMPACT_EXHAUSTIVE_MAX_OPENS: usize = 10;
/// Direct closed-pair quantification for irreducibility below this family
/// size; larger spaces use the equivalent minimal-neighborhood basis test.
const IRREDUCIBLE_PAIR_MAX_CLOSEDS: usize = 128;
/// Size cap for generated (union/intersection-closed) open families.
const GENERATE_CAP: usize = 1_000_000;
/// Exhaustive directed-subset enumeration for dcpo / Scott-open checks.
const DIRECTED_EXHAUSTIVE_MAX: usize = 16;
/// Exhaustive filtered-family enumeration needs 2^|D(X)| subsets.
const WF_EXHAUSTIVE_MAX_ELEMENTS: usize = 20;

pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopSpace {
    points: Vec<String>,
    opens: Vec<PointSet>,
    open_bits: HashSet<u64>,
}

/// Specialization preorder of a space: `up[i]` is the bitmask of points above
/// point i. T0 fails exactly when two distinct points are order-equivalent.
#[derive(Clone, Debug)]
pub struct Specialization {
    pub up: Vec<u64>,
    pub t0_witness: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SoberVerdict {
    pub holds: bool,
    /// An irreducible closed set with zero or at least two generic points,
    /// together with those generic points.
    pub witness: Option<(PointSet, Vec<usize>)>,
}

#[derive(Clone, Debug)]
pub struct WfVerdict {
    pub holds: bool,
    /// A filtered family and an open set violating the defining condition.
    pub witness: Option<(Vec<PointSet>, PointSet)>,
    pub families_checked: u64,
    /// False when the generator-bounded search ran out of budget before
    /// covering every candidate family.
    pub search_exhausted: bool,
}

#[derive(Clone, Debug)]
pub struct DSpaceVerdict {
    pub holds: bool,
    pub t0_witness: Option<(usize, usize)>,
    /// A directed subset without a supremum, if the specialization order
    /// fails to be a dcpo.
    pub non_dcpo_witness: Option<PointSet>,
    /// An open set that is not Scott-open in the specialization order.
    pub non_scott_open: Option<PointSet>,
}

#[derive(Clone, Debug)]
pub struct CoherentVerdict {
    pub holds: bool,
    pub witness: Option<(PointSet, PointSet)>,
}

#[derive(Clone, Debug)]
pub struct WfParams {
    pub generator_bound: usize,
    pub exhaustive: bool,
    pub family_budget: u64,
    pub element_cap: usize,
}

impl Default for WfParams {
    fn default() -> Self {
        WfParams {
            generator_bound: 4,
            exhaustive: false,
            family_budget: 200_000,
            element_cap: DEFAULT_ELEMENT_CAP,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SpaceReport {
    pub t0: bool,
    pub t0_witness: Option<(String, String)>,
    pub sober: SoberVerdict,
    pub well_filtered: WfVerdict,
    pub d_space: DSpaceVerdict,
    pub coherent: CoherentVerdict,
}

impl TopSpace {
    /// Validating constructor. With `generate` the family is closed under
    /// finite unions and intersections (and the empty and full sets added);
    /// without it the family must already be a topology.
    pub fn new(points: Vec<String>, opens: Vec<PointSet>, generate: bool) -> Result<Self> {
        let n = points.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if n > MAX_GROUND {
            return Err(Error::CarrierTooLarge(n));
        }
        let mut seen = HashSet::new();
        for p in &points {
            if !seen.insert(p.as_str()) {
                return Err(Error::DuplicateElement(p.clone()));
            }
        }
        for o in &opens {
            o.check_ground(n)?;
        }
        let mut bits: HashSet<u64> = opens.iter().map(|o| o.bits()).collect();
        if generate {
            bits.insert(0);
            bits.insert(PointSet::full(n).bits());
            loop {
                let snapshot: Vec<u64> = bits.iter().copied().collect();
                let before = bits.len();
                for (i, &a) in snapshot.iter().enumerate() {
                    for &b in &snapshot[i + 1..] {
                        bits.insert(a | b);
                        bits.insert(a & b);
                    }
                }
                if bits.len() > GENERATE_CAP {
                    return Err(Error::CapExceeded {
                        what: "generating a topology from a subbasis",
                        cap: GENERATE_CAP,
                        reached: bits.len(),
                    });
                }
                if bits.len() == before {
                    break;
                }
            }
        } else {
            if !bits.contains(&0) {
                return Err(Error::NotATopology("missing empty set".into()));
            }
            if !bits.contains(&PointSet::full(n).bits()) {
                return Err(Error::NotATopology("missing full set".into()));
            }
            let list: Vec<u64> = bits.iter().copied().collect();
            if list.len() <= CLOSURE_CHECK_MAX {
                for (i, &a) in list.iter().enumerate() {
                    for &b in &list[i + 1..] {
                        if !bits.contains(&(a | b)) {
                            return Err(Error::NotATopology(format!(
                                "union of {:?} and {:?} missing",
                                PointSet::from_bits(n, a),
                                PointSet::from_bits(n, b)
                            )));
                        }
                        if !bits.contains(&(a & b)) {
                            return Err(Error::NotATopology(format!(
                                "intersection of {:?} and {:?} missing",
                                PointSet::from_bits(n, a),
                                PointSet::from_bits(n, b)
                            )));
                        }
                    }
                }
            } else {
                // Deterministic stride sample of pairs for very large families.
                let stride = list.len() * list.len() / (CLOSURE_CHECK_MAX * CLOSURE_CHECK_MAX) + 1;
                let mut k = 0usize;
                for (i, &a) in list.iter().enumerate() {
                    for &b in &list[i + 1..] {
                        k += 1;
                        if k % stride != 0 {
                            continue;
                        }
                        if !bits.contains(&(a | b)) || !bits.contains(&(a & b)) {
                            return Err(Error::NotATopology(
                                "family not closed under union/intersection".into(),
                            ));
                        }
                    }
                }
            }
        }
        let mut opens: Vec<PointSet> =
            bits.iter().map(|&b| PointSet::from_bits(n, b)).collect();
        opens.sort_by(|a, b| a.card_lex_cmp(b));
        Ok(TopSpace { points, opens, open_bits: bits })
    }

    /// For families that are union/intersection-closed by construction
    /// (up-set families, closure outputs). Still validated.
    pub(crate) fn from_closed_family(points: Vec<String>, opens: Vec<PointSet>) -> Result<Self> {
        Self::new(points, opens, false)
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn is_open(&self, s: &PointSet) -> bool {
        s.ground() == self.n() && self.open_bits.contains(&s.bits())
    }

    pub fn is_closed(&self, s: &PointSet) -> bool {
        s.ground() == self.n() && self.open_bits.contains(&s.complement().bits())
    }

    pub fn closeds(&self) -> Vec<PointSet> {
        let mut cs: Vec<PointSet> = self.opens.iter().map(|o| o.complement()).collect();
        cs.sort_by(|a, b| a.card_lex_cmp(b));
        cs
    }

    pub fn point_index(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }

    pub fn set_names(&self, s: &PointSet) -> Vec<String> {
        s.iter().map(|i| self.points[i].clone()).collect()
    }

    pub fn closure(&self, s: &PointSet) -> Result<PointSet> {
        s.check_ground(self.n())?;
        let mut avoid = 0u64;
        for o in &self.opens {
            if !o.intersects(s) {
                avoid |= o.bits();
            }
        }
        Ok(PointSet::from_bits(self.n(), PointSet::full(self.n()).bits() & !avoid))
    }

    pub fn point_closure(&self, i: usize) -> PointSet {
        self.closure(&PointSet::singleton(self.n(), i)).unwrap()
    }

    pub fn interior(&self, s: &PointSet) -> Result<PointSet> {
        s.check_ground(self.n())?;
        let mut bits = 0u64;
        for o in &self.opens {
            if o.is_subset(s) {
                bits |= o.bits();
            }
        }
        Ok(PointSet::from_bits(self.n(), bits))
    }

    /// Intersection of all opens containing `s`. Asserted to equal the up-set
    /// of `s` in the specialization preorder.
    pub fn saturation(&self, s: &PointSet) -> Result<PointSet> {
        s.check_ground(self.n())?;
        let mut bits = PointSet::full(self.n()).bits();
        for o in &self.opens {
            if s.is_subset(o) {
                bits &= o.bits();
            }
        }
        let sat = PointSet::from_bits(self.n(), bits);
        let spec = self.specialization();
        let mut up = 0u64;
        for i in s.iter() {
            up |= spec.up[i];
        }
        assert_eq!(sat.bits(), up, "saturation must equal specialization up-set");
        Ok(sat)
    }

    pub fn is_saturated(&self, s: &PointSet) -> bool {
        self.saturation(s).map(|t| t == *s).unwrap_or(false)
    }

    /// x <= y iff x lies in the closure of {y}, i.e. every open containing x
    /// contains y.
    pub fn specialization(&self) -> Specialization {
        let n = self.n();
        let mut up = vec![0u64; n];
        for i in 0..n {
            let mut above = PointSet::full(n).bits();
            for o in &self.opens {
                if o.contains(i) {
                    above &= o.bits();
                }
            }
            up[i] = above;
        }
        let mut t0_witness = None;
        'outer: for i in 0..n {
            for j in (i + 1)..n {
                if up[i] & (1 << j) != 0 && up[j] & (1 << i) != 0 {
                    t0_witness = Some((i, j));
                    break 'outer;
                }
            }
        }
        Specialization { up, t0_witness }
    }

    pub fn is_t0(&self) -> bool {
        self.specialization().t0_witness.is_none()
    }

    /// The specialization order as a poset; fails on non-T0 spaces.
    pub fn specialization_poset(&self) -> Result<Poset> {
        let spec = self.specialization();
        if let Some((i, j)) = spec.t0_witness {
            return Err(Error::NotT0 {
                a: self.points[i].clone(),
                b: self.points[j].clone(),
            });
        }
        Ok(Poset::from_up_rows(self.points.clone(), spec.up))
    }

    /// Definitional compactness: every open cover drawn from the stored opens
    /// has a finite subcover. Covers are enumerated exhaustively for small
    /// open families; otherwise a subcover of size at most |s| is constructed
    /// for the canonical full cover (finite families are their own finite
    /// subcovers).
    pub fn is_compact(&self, s: &PointSet) -> Result<bool> {
        s.check_ground(self.n())?;
        if s.is_empty() {
            return Ok(true);
        }
        let card = s.len();
        if self.opens.len() <= COMPACT_EXHAUSTIVE_MAX_OPENS {
            let k = self.opens.len();
            for mask in 1u64..(1 << k) {
                let mut covered = 0u64;
                for (i, o) in self.opens.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        covered |= o.bits();
                    }
                }
                if s.bits() & !covered != 0 {
                    continue;
                }
                if !self.has_small_subcover(s, |i| mask & (1 << i) != 0, card) {
                    return Ok(false);
                }
            }
            Ok(true)
        } else {
            Ok(self.has_small_subcover(s, |_| true, card))
        }
    }

    fn has_small_subcover<F: Fn(usize) -> bool>(
        &self,
        s: &PointSet,
        in_cover: F,
        limit: usize,
    ) -> bool {
        let mut picked = 0u64;
        let mut count = 0usize;
        for p in s.iter() {
            if picked & (1 << p) != 0 {
                continue;
            }
            match self
                .opens
                .iter()
                .enumerate()
                .find(|(i, o)| in_cover(*i) && o.contains(p))
            {
                Some((_, o)) => {
                    picked |= o.bits();
                    count += 1;
                    if count > limit {
                        return false;
                    }
                }
                None => return false,
            }
        }
        true
    }

    /// All nonempty saturated compact subsets, in (cardinality, lex) order.
    /// Enumerated as up-closures of antichains of the specialization
    /// preorder's quotient poset, not by scanning all subsets.
    pub fn saturated_compacts(&self, cap: usize) -> Result<Vec<PointSet>> {
        let n = self.n();
        let spec = self.specialization();
        // Quotient by order-equivalence; saturated sets are unions of full
        // classes, upward closed in the quotient order.
        let mut class_of = vec![usize::MAX; n];
        let mut class_masks: Vec<u64> = Vec::new();
        let mut reps: Vec<usize> = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = class_masks.len();
            let mut mask = 0u64;
            for j in 0..n {
                if spec.up[i] & (1 << j) != 0 && spec.up[j] & (1 << i) != 0 {
                    class_of[j] = c;
                    mask |= 1 << j;
                }
            }
            class_masks.push(mask);
            reps.push(i);
        }
        let q = class_masks.len();
        if q > MAX_GROUND {
            return Err(Error::CarrierTooLarge(q));
        }
        let mut qup = vec![0u64; q];
        for a in 0..q {
            for b in 0..q {
                if spec.up[reps[a]] & (1 << reps[b]) != 0 {
                    qup[a] |= 1 << b;
                }
            }
        }
        let qposet =
            Poset::from_up_rows((0..q).map(|c| c.to_string()).collect(), qup);
        let qupsets = qposet.up_sets(cap)?;
        let mut out = Vec::with_capacity(qupsets.len());
        for u in &qupsets {
            if u.is_empty() {
                continue;
            }
            let mut mask = 0u64;
            for c in u.iter() {
                mask |= class_masks[c];
            }
            let k = PointSet::from_bits(n, mask);
            debug_assert!(self.is_compact(&k)?);
            out.push(k);
        }
        out.sort_by(|a, b| a.card_lex_cmp(b));
        Ok(out)
    }

    /// All nonempty closed F such that F inside a union of two closed sets
    /// forces F inside one of them. Small spaces quantify over all closed
    /// pairs directly; larger ones use the minimal-neighborhood basis
    /// formulation (F is irreducible iff any two basic opens meeting F
    /// intersect inside F), which is equivalent since every open is a union
    /// of minimal point neighborhoods.
    pub fn irreducible_closed_sets(&self) -> Vec<PointSet> {
        let closeds = self.closeds();
        let mut out = Vec::new();
        if closeds.len() <= IRREDUCIBLE_PAIR_MAX_CLOSEDS {
            for f in &closeds {
                if f.is_empty() {
                    continue;
                }
                let reducible = closeds.iter().any(|f1| {
                    f1 != f
                        && closeds.iter().any(|f2| {
                            f2 != f
                                && f.is_subset(&f1.union(f2))
                                && !f.is_subset(f1)
                                && !f.is_subset(f2)
                        })
                });
                if !reducible {
                    out.push(*f);
                }
            }
        } else {
            let basis = self.minimal_neighborhoods();
            for f in &closeds {
                if f.is_empty() {
                    continue;
                }
                let meeting: Vec<u64> = basis
                    .iter()
                    .map(|u| u.bits())
                    .filter(|&u| u & f.bits() != 0)
                    .collect();
                let irreducible = meeting
                    .iter()
                    .all(|&u| meeting.iter().all(|&v| u & v & f.bits() != 0));
                if irreducible {
                    out.push(*f);
                }
            }
        }
        out.sort_by(|a, b| a.card_lex_cmp(b));
        out
    }

    /// Minimal open neighborhood of each point (intersection of all opens
    /// containing it). These form a basis of the topology.
    pub fn minimal_neighborhoods(&self) -> Vec<PointSet> {
        let n = self.n();
        (0..n)
            .map(|i| {
                let mut bits = PointSet::full(n).bits();
                for o in &self.opens {
                    if o.contains(i) {
                        bits &= o.bits();
                    }
                }
                PointSet::from_bits(n, bits)
            })
            .collect()
    }

    /// The generic points of a closed set: members whose closure is the set.
    pub fn generic_points(&self, f: &PointSet) -> Vec<usize> {
        f.iter().filter(|&x| self.point_closure(x) == *f).collect()
    }

    pub fn is_sober(&self) -> SoberVerdict {
        for f in self.irreducible_closed_sets() {
            let gps = self.generic_points(&f);
            if gps.len() != 1 {
                return SoberVerdict { holds: false, witness: Some((f, gps)) };
            }
        }
        SoberVerdict { holds: true, witness: None }
    }

    /// Well-filteredness: for every filtered family F of saturated compact
    /// sets and open U with ⋂F ⊆ U, some member of F is inside U.
    ///
    /// Candidate families are the intersection-closures of generator sets of
    /// bounded size drawn from D(X); such closures are filtered by
    /// construction. The exhaustive mode scans every subfamily of D(X) and is
    /// gated on small spaces.
    pub fn is_well_filtered(&self, params: &WfParams) -> Result<WfVerdict> {
        let elements = self.saturated_compacts(params.element_cap)?;
        let m = elements.len();
        let mut checked = 0u64;
        if params.exhaustive {
            if self.n() > 5 || m > WF_EXHAUSTIVE_MAX_ELEMENTS {
                return Err(Error::CapExceeded {
                    what: "exhaustive filtered-family enumeration",
                    cap: WF_EXHAUSTIVE_MAX_ELEMENTS,
                    reached: m,
                });
            }
            for mask in 1u64..(1u64 << m) {
                let family: Vec<&PointSet> = (0..m)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| &elements[i])
                    .collect();
                if !Self::family_is_filtered(&family) {
                    continue;
                }
                checked += 1;
                if let Some(w) = self.wf_violation(&family) {
                    return Ok(WfVerdict {
                        holds: false,
                        witness: Some(w),
                        families_checked: checked,
                        search_exhausted: true,
                    });
                }
            }
            return Ok(WfVerdict {
                holds: true,
                witness: None,
                families_checked: checked,
                search_exhausted: true,
            });
        }
        // Generator-bounded search: each generator set whose intersection
        // closure stays inside D(X) yields a filtered family.
        let mut exhausted = true;
        let mut budget = params.family_budget;
        'sizes: for size in 1..=params.generator_bound.min(m) {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                if budget == 0 {
                    exhausted = false;
                    break 'sizes;
                }
                budget -= 1;
                if let Some(family) = self.generated_family(&elements, &combo) {
                    checked += 1;
                    if let Some(w) = self.wf_violation(&family.iter().collect::<Vec<_>>()) {
                        return Ok(WfVerdict {
                            holds: false,
                            witness: Some(w),
                            families_checked: checked,
                            search_exhausted: false,
                        });
                    }
                }
                if !next_combination(&mut combo, m) {
                    continue 'sizes;
                }
            }
        }
        Ok(WfVerdict {
            holds: true,
            witness: None,
            families_checked: checked,
            search_exhausted: exhausted,
        })
    }

    pub fn family_is_filtered(family: &[&PointSet]) -> bool {
        if family.is_empty() {
            return false;
        }
        family.iter().all(|a| {
            family.iter().all(|b| {
                family
                    .iter()
                    .any(|c| c.is_subset(a) && c.is_subset(b))
            })
        })
    }

    /// Intersection closure of the chosen generators, or None when some
    /// intersection drops out of D(X) (becomes empty).
    fn generated_family(&self, elements: &[PointSet], combo: &[usize]) -> Option<Vec<PointSet>> {
        let n = self.n();
        let mut members: Vec<u64> = Vec::new();
        for mask in 1u64..(1 << combo.len()) {
            let mut inter = PointSet::full(n).bits();
            for (i, &e) in combo.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    inter &= elements[e].bits();
                }
            }
            if inter == 0 {
                return None;
            }
            if !members.contains(&inter) {
                members.push(inter);
            }
        }
        Some(members.into_iter().map(|b| PointSet::from_bits(n, b)).collect())
    }

    fn wf_violation(&self, family: &[&PointSet]) -> Option<(Vec<PointSet>, PointSet)> {
        let n = self.n();
        let mut inter = PointSet::full(n).bits();
        for f in family {
            inter &= f.bits();
        }
        let inter = PointSet::from_bits(n, inter);
        for u in &self.opens {
            if inter.is_subset(u) && !family.iter().any(|f| f.is_subset(u)) {
                return Some((family.iter().map(|f| (*f).clone()).collect(), *u));
            }
        }
        None
    }

    /// d-space: T0, the specialization order is a dcpo, and every open is
    /// Scott-open in that order.
    pub fn is_d_space(&self) -> DSpaceVerdict {
        let spec = self.specialization();
        if let Some(w) = spec.t0_witness {
            return DSpaceVerdict {
                holds: false,
                t0_witness: Some(w),
                non_dcpo_witness: None,
                non_scott_open: None,
            };
        }
        let poset = Poset::from_up_rows(self.points.clone(), spec.up);
        let n = self.n();
        // Directed subsets with/without suprema.
        let mut directed_with_sup: Vec<(u64, usize)> = Vec::new();
        if n <= DIRECTED_EXHAUSTIVE_MAX {
            for mask in 1u64..(1u64 << n) {
                let d = PointSet::from_bits(n, mask);
                if poset.is_directed(&d).unwrap() {
                    match poset.sup(&d).unwrap() {
                        Some(s) => directed_with_sup.push((mask, s)),
                        None => {
                            return DSpaceVerdict {
                                holds: false,
                                t0_witness: None,
                                non_dcpo_witness: Some(d),
                                non_scott_open: None,
                            }
                        }
                    }
                }
            }
        } else {
            // Bounded check: directed subsets of size <= 3. A finite directed
            // set always has a maximum, so larger ones are subsumed.
            for a in 0..n {
                for b in a..n {
                    for c in b..n {
                        let d = PointSet::from_indices(n, [a, b, c]);
                        if poset.is_directed(&d).unwrap() {
                            match poset.sup(&d).unwrap() {
                                Some(s) => directed_with_sup.push((d.bits(), s)),
                                None => {
                                    return DSpaceVerdict {
                                        holds: false,
                                        t0_witness: None,
                                        non_dcpo_witness: Some(d),
                                        non_scott_open: None,
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        for u in &self.opens {
            if !poset.is_up_set(u) {
                return DSpaceVerdict {
                    holds: false,
                    t0_witness: None,
                    non_dcpo_witness: None,
                    non_scott_open: Some(*u),
                };
            }
            for &(d, s) in &directed_with_sup {
                if u.contains(s) && d & u.bits() == 0 {
                    return DSpaceVerdict {
                        holds: false,
                        t0_witness: None,
                        non_dcpo_witness: None,
                        non_scott_open: Some(*u),
                    };
                }
            }
        }
        DSpaceVerdict {
            holds: true,
            t0_witness: None,
            non_dcpo_witness: None,
            non_scott_open: None,
        }
    }

    /// Coherence: intersections of compact saturated sets are compact.
    pub fn is_coherent(&self, element_cap: usize) -> Result<CoherentVerdict> {
        let elements = self.saturated_compacts(element_cap)?;
        for (i, k1) in elements.iter().enumerate() {
            for k2 in &elements[i..] {
                if !self.is_compact(&k1.inter(k2))? {
                    return Ok(CoherentVerdict {
                        holds: false,
                        witness: Some((*k1, *k2)),
                    });
                }
            }
        }
        Ok(CoherentVerdict { holds: true, witness: None })
    }

    pub fn space_report(&self, wf: &WfParams) -> Result<SpaceReport> {
        let spec = self.specialization();
        let t0 = spec.t0_witness.is_none();
        let sober = self.is_sober();
        let well_filtered = self.is_well_filtered(wf)?;
        let d_space = self.is_d_space();
        let coherent = self.is_coherent(wf.element_cap)?;
        if t0 {
            assert!(
                !sober.holds || well_filtered.holds,
                "sober must imply well-filtered on T0 spaces"
            );
            assert!(
                !well_filtered.holds || d_space.holds,
                "well-filtered must imply d-space on T0 spaces"
            );
        }
        Ok(SpaceReport {
            t0,
            t0_witness: spec
                .t0_witness
                .map(|(i, j)| (self.points[i].clone(), self.points[j].clone())),
            sober,
            well_filtered,
            d_space,
            coherent,
        })
    }
}

/// Advances `combo` to the next k-combination of {0..m-1} in lexicographic
/// order; false when the last combination has been visited.
pub(crate) fn next_combination(combo: &mut [usize], m: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < m - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{antichain, chain, diamond, discrete, indiscrete, scott};

    #[test]
    fn specialization_recovers_alexandroff_order() {
        for p in [chain(3), diamond(), antichain(2)] {
            let space = p.alexandroff_topology().unwrap();
            assert_eq!(space.specialization_poset().unwrap(), p);
        }
    }

    #[test]
    fn indiscrete_two_point_is_not_t0() {
        let space = indiscrete(2);
        let spec = space.specialization();
        assert_eq!(spec.t0_witness, Some((0, 1)));
        assert_eq!(spec.up[0], 0b11);
        assert_eq!(spec.up[1], 0b11);
    }

    #[test]
    fn scott_two_chain_specialization() {
        let space = scott(&chain(2));
        // cl({1}) = {0,1}
        assert_eq!(space.point_closure(1), PointSet::full(2));
        let p = space.specialization_poset().unwrap();
        assert!(p.leq(0, 1) && !p.leq(1, 0));
    }

    #[test]
    fn saturation_examples() {
        let space = scott(&chain(2));
        for o in space.opens() {
            assert_eq!(space.saturation(o).unwrap(), *o);
        }
        let s0 = PointSet::from_indices(2, [0]);
        assert_eq!(space.saturation(&s0).unwrap(), PointSet::full(2));
        let disc = discrete(3);
        for m in 0..8u64 {
            let s = PointSet::from_bits(3, m);
            assert_eq!(disc.saturation(&s).unwrap(), s);
        }
    }

    #[test]
    fn irreducible_closed_sets_examples() {
        let space = scott(&chain(2));
        let irr = space.irreducible_closed_sets();
        let bits: Vec<u64> = irr.iter().map(|s| s.bits()).collect();
        assert_eq!(bits.len(), 2);
        assert!(bits.contains(&0b01) && bits.contains(&0b11));

        let disc = discrete(2);
        let irr = disc.irreducible_closed_sets();
        assert_eq!(irr.iter().map(|s| s.bits()).collect::<Vec<_>>(), vec![0b01, 0b10]);

        let ind = indiscrete(2);
        let irr = ind.irreducible_closed_sets();
        assert_eq!(irr.iter().map(|s| s.bits()).collect::<Vec<_>>(), vec![0b11]);
    }

    #[test]
    fn sober_examples() {
        assert!(scott(&diamond()).is_sober().holds);
        assert!(scott(&chain(2)).is_sober().holds);
        let v = indiscrete(2).is_sober();
        assert!(!v.holds);
        let (w, gps) = v.witness.unwrap();
        assert_eq!(w, PointSet::full(2));
        assert_eq!(gps, vec![0, 1]);
    }

    #[test]
    fn well_filtered_examples() {
        let params = WfParams::default();
        assert!(scott(&chain(2)).is_well_filtered(&params).unwrap().holds);
        assert!(discrete(3).is_well_filtered(&params).unwrap().holds);
        let exhaustive = WfParams { exhaustive: true, ..WfParams::default() };
        assert!(scott(&diamond()).is_well_filtered(&exhaustive).unwrap().holds);
    }

    #[test]
    fn d_space_examples() {
        assert!(scott(&diamond()).is_d_space().holds);
        assert!(antichain(3).alexandroff_topology().unwrap().is_d_space().holds);
        let v = indiscrete(2).is_d_space();
        assert!(!v.holds);
        assert_eq!(v.t0_witness, Some((0, 1)));
    }

    #[test]
    fn coherence_examples() {
        for space in [scott(&diamond()), discrete(4), scott(&chain(3))] {
            assert!(space.is_coherent(DEFAULT_ELEMENT_CAP).unwrap().holds);
        }
    }

    #[test]
    fn compactness_is_definitional_and_true_on_finite_sets() {
        let space = scott(&diamond());
        for m in 0..16u64 {
            assert!(space.is_compact(&PointSet::from_bits(4, m)).unwrap());
        }
    }

    #[test]
    fn saturated_compacts_of_scott_chain() {
        let space = scott(&chain(2));
        let dx = space.saturated_compacts(DEFAULT_ELEMENT_CAP).unwrap();
        let bits: Vec<u64> = dx.iter().map(|s| s.bits()).collect();
        assert_eq!(bits, vec![0b10, 0b11]);
    }

    #[test]
    fn topology_validation_rejects_gaps() {
        let opens = vec![
            PointSet::empty(2),
            PointSet::from_indices(2, [0]),
            PointSet::from_indices(2, [1]),
        ];
        // missing the full set, and union closure fails
        assert!(TopSpace::new(vec!["a".into(), "b".into()], opens.clone(), false).is_err());
        let generated = TopSpace::new(vec!["a".into(), "b".into()], opens, true).unwrap();
        assert_eq!(generated.opens().len(), 4);
    }

    #[test]
    fn report_implication_chain() {
        for p in [chain(3), diamond(), antichain(2)] {
            let r = scott(&p).space_report(&WfParams::default()).unwrap();
            assert!(r.t0 && r.sober.holds && r.well_filtered.holds && r.d_space.holds);
        }
    }

    #[test]
    fn next_combination_visits_all() {
        let mut combo = vec![0, 1];
        let mut seen = vec![combo.clone()];
        while next_combination(&mut combo, 4) {
            seen.push(combo.clone());
        }
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
