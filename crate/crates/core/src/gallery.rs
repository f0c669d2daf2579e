//! Symbolic countable spaces with finite descriptions: the Alexandroff space
//! of the naturals, the cofinite naturals, and the cocountable model. Every
//! verdict about them is carried by a witness that `check_witness` replays
//! inside the finite-or-cofinite set algebra.
//!
//! The cocountable model reads Finite as "countable" and CoFinite as
//! "co-countable" over an uncountable ground set; every set the arguments
//! touch is representable under that reading.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::topology::TopSpace;

/// Bound for the sampled portions of witness replay (prefix lengths, chain
/// depths, isomorphism checks).
pub const WITNESS_DEPTH: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "support", rename_all = "kebab-case")]
pub enum SymbolicSet {
    /// Exactly the listed naturals.
    Finite(Vec<u64>),
    /// Everything except the listed naturals.
    CoFinite(Vec<u64>),
}

use SymbolicSet::{CoFinite, Finite};

impl SymbolicSet {
    pub fn finite<I: IntoIterator<Item = u64>>(it: I) -> Self {
        Finite(normalize(it))
    }

    pub fn cofinite<I: IntoIterator<Item = u64>>(it: I) -> Self {
        CoFinite(normalize(it))
    }

    pub fn empty() -> Self {
        Finite(vec![])
    }

    pub fn full() -> Self {
        CoFinite(vec![])
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Finite(s) if s.is_empty())
    }

    pub fn is_finite_kind(&self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn support(&self) -> &[u64] {
        match self {
            Finite(s) | CoFinite(s) => s,
        }
    }

    pub fn contains(&self, n: u64) -> bool {
        match self {
            Finite(s) => s.contains(&n),
            CoFinite(s) => !s.contains(&n),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        match (self, other) {
            (Finite(a), Finite(b)) => Self::finite(a.iter().chain(b).copied()),
            (Finite(a), CoFinite(b)) | (CoFinite(b), Finite(a)) => {
                Self::cofinite(b.iter().copied().filter(|x| !a.contains(x)))
            }
            (CoFinite(a), CoFinite(b)) => {
                Self::cofinite(a.iter().copied().filter(|x| b.contains(x)))
            }
        }
    }

    pub fn inter(&self, other: &Self) -> Self {
        self.complement().union(&other.complement()).complement()
    }

    pub fn complement(&self) -> Self {
        match self {
            Finite(s) => CoFinite(s.clone()),
            CoFinite(s) => Finite(s.clone()),
        }
    }

    /// Relative complement self ∖ other.
    pub fn minus(&self, other: &Self) -> Self {
        self.inter(&other.complement())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.minus(other).is_empty()
    }

    /// The trace on the finite fragment {0..n-1}.
    pub fn restrict(&self, n: usize) -> PointSet {
        PointSet::from_indices(n, (0..n).filter(|&i| self.contains(i as u64)))
    }
}

fn normalize<I: IntoIterator<Item = u64>>(it: I) -> Vec<u64> {
    let mut v: Vec<u64> = it.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GalleryName {
    NatAlexandroff,
    NatCofinite,
    OmegaCocountable,
}

impl GalleryName {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "nat-alexandroff" => Ok(GalleryName::NatAlexandroff),
            "nat-cofinite" => Ok(GalleryName::NatCofinite),
            "omega-cocountable-model" => Ok(GalleryName::OmegaCocountable),
            other => Err(Error::UnknownGallerySpace(other.to_string())),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            GalleryName::NatAlexandroff => "nat-alexandroff",
            GalleryName::NatCofinite => "nat-cofinite",
            GalleryName::OmegaCocountable => "omega-cocountable-model",
        }
    }

    /// Decidable openness for representable sets.
    pub fn is_open(&self, s: &SymbolicSet) -> bool {
        match self {
            // Opens are the up-sets of the usual order: the empty set and
            // the tails, whose complements are prefixes {0..k-1}.
            GalleryName::NatAlexandroff => {
                s.is_empty() || matches!(s, CoFinite(sup) if is_prefix(sup))
            }
            // Cofinite / cocountable: empty or co-small.
            GalleryName::NatCofinite | GalleryName::OmegaCocountable => {
                s.is_empty() || !s.is_finite_kind()
            }
        }
    }

    /// Decidable compactness characterization for representable sets.
    pub fn is_compact(&self, s: &SymbolicSet) -> bool {
        match self {
            // Every nonempty subset has a least element whose minimal open
            // neighborhood (its tail) covers everything above it.
            GalleryName::NatAlexandroff => true,
            // Every subset of a cofinite space is compact.
            GalleryName::NatCofinite => true,
            // Countable subsets are compact only when finite; co-countable
            // sets admit the escaping countable cover.
            GalleryName::OmegaCocountable => s.is_finite_kind(),
        }
    }

    pub fn is_saturated(&self, s: &SymbolicSet) -> bool {
        match self {
            // Saturated = up-set: empty or a tail.
            GalleryName::NatAlexandroff => {
                s.is_empty() || matches!(s, CoFinite(sup) if is_prefix(sup))
            }
            // T1: every set is saturated.
            GalleryName::NatCofinite | GalleryName::OmegaCocountable => true,
        }
    }

    /// Closure of a representable set.
    pub fn closure(&self, s: &SymbolicSet) -> SymbolicSet {
        match self {
            // Closed sets are down-sets: empty, full, or prefixes.
            GalleryName::NatAlexandroff => match s {
                Finite(sup) if sup.is_empty() => SymbolicSet::empty(),
                Finite(sup) => SymbolicSet::finite(0..=*sup.iter().max().unwrap()),
                CoFinite(_) => SymbolicSet::full(),
            },
            // T1 with only small sets closed: small sets are their own
            // closure, large sets close to the whole space.
            GalleryName::NatCofinite | GalleryName::OmegaCocountable => match s {
                Finite(_) => s.clone(),
                CoFinite(_) => SymbolicSet::full(),
            },
        }
    }

    /// The finite fragment {0..n-1} as a validated TopSpace.
    pub fn restrict(&self, n: usize) -> Result<TopSpace> {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        match self {
            GalleryName::NatAlexandroff => {
                let opens: Vec<PointSet> = (0..=n)
                    .map(|k| PointSet::from_indices(n, k..n))
                    .collect();
                TopSpace::new(names, opens, false)
            }
            GalleryName::NatCofinite | GalleryName::OmegaCocountable => {
                let opens: Vec<PointSet> =
                    (0..(1u64 << n)).map(|m| PointSet::from_bits(n, m)).collect();
                TopSpace::new(names, opens, false)
            }
        }
    }
}

fn is_prefix(support: &[u64]) -> bool {
    support.iter().enumerate().all(|(i, &x)| x == i as u64)
}

/// The tail {k, k+1, ...}; in nat-alexandroff this is the principal filter
/// of k.
pub fn tail(k: u64) -> SymbolicSet {
    SymbolicSet::cofinite(0..k)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    /// The whole space is irreducible closed but no singleton closes to it.
    IrreducibleNotPointClosure,
    /// The chain of tails is a filtered family of compact saturated sets
    /// whose intersection is empty, yet no tail fits inside the empty open.
    TailChainEscapesOpen { depth: u64 },
    /// Representable filtered families of nonempty finite sets have a
    /// least member.
    LeastMemberOfFilteredFamilies { families: Vec<Vec<SymbolicSet>> },
    /// Compact saturated nonempty sets are exactly the tails, and k -> tail(k)
    /// is an order isomorphism onto (D, ⊇).
    PowerspaceIsoToNaturals { checked_up_to: u64 },
    /// The descending chain of tails has no supremum in (D, ⊇).
    PowerspaceChainWithoutSup { depth: u64 },
    /// Box of a tail is the principal up-set of that tail in (D, ⊇), so the
    /// upper Vietoris, Scott and Alexandroff topologies coincide on D.
    UvEqualsScottOnPowerspace { checked_up_to: u64 },
    /// Specialization is discrete, hence a dcpo, and every topology on it is
    /// contained in the discrete Scott topology.
    DiscreteSpecializationDSpace { checked_up_to: u64 },
    /// D(X) consists exactly of the nonempty finite (= countable-side) sets.
    DElementsAreFiniteSets { checked_up_to: u64 },
    /// An arbitrary claim that cl({point}) is the whole space; used to
    /// validate (or refute) externally supplied witnesses.
    PointClosureIsWholeSpace { point: u64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct GalleryReport {
    pub name: String,
    pub modeling_note: Option<String>,
    pub sober: Option<bool>,
    pub well_filtered: bool,
    pub d_space: Option<bool>,
    pub d_characterization: String,
    pub d_is_dcpo: Option<bool>,
    pub d_iso_to_naturals: Option<bool>,
    pub uv_equals_scott: Option<bool>,
    pub witnesses: Vec<Witness>,
}

/// Replays a witness's defining conditions in the symbolic algebra.
pub fn check_witness(name: GalleryName, witness: &Witness) -> Result<bool> {
    match witness {
        Witness::IrreducibleNotPointClosure => {
            if name == GalleryName::NatAlexandroff {
                return Err(Error::MalformedWitness(
                    "irreducibility-without-generic-point is claimed for the T1 models".into(),
                ));
            }
            // Any two nonempty opens are co-small, so they intersect in a
            // co-small (hence nonempty) set; the whole space is irreducible.
            for i in 0..WITNESS_DEPTH {
                for j in 0..WITNESS_DEPTH {
                    let u = SymbolicSet::cofinite(0..i);
                    let v = SymbolicSet::cofinite(j..j + 8);
                    if !(name.is_open(&u) && name.is_open(&v)) {
                        continue;
                    }
                    let w = u.inter(&v);
                    if w.is_finite_kind() || w.is_empty() {
                        return Ok(false);
                    }
                }
            }
            // No singleton closes to the whole space.
            Ok((0..WITNESS_DEPTH).all(|x| {
                name.closure(&SymbolicSet::finite([x])) != SymbolicSet::full()
            }))
        }
        Witness::TailChainEscapesOpen { depth } => {
            if *depth < 2 {
                return Err(Error::MalformedWitness("tail chain needs depth >= 2".into()));
            }
            let tails: Vec<SymbolicSet> = (0..*depth).map(tail).collect();
            let empty_open = SymbolicSet::empty();
            if !name.is_open(&empty_open) {
                return Ok(false);
            }
            // Each tail is a nonempty compact saturated set, the chain is
            // descending (hence filtered), and every natural is eventually
            // excluded, so the full intersection is empty.
            for (k, t) in tails.iter().enumerate() {
                if t.is_empty() || !name.is_compact(t) || !name.is_saturated(t) {
                    return Ok(false);
                }
                if k + 1 < tails.len() && !tails[k + 1].is_subset(t) {
                    return Ok(false);
                }
                if k > 0 && t.contains(k as u64 - 1) {
                    return Ok(false);
                }
                // no tail fits inside the empty open
                if t.is_subset(&empty_open) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Witness::LeastMemberOfFilteredFamilies { families } => {
            if families.is_empty() {
                return Err(Error::MalformedWitness("no families supplied".into()));
            }
            for family in families {
                if family.is_empty() {
                    return Err(Error::MalformedWitness("empty family".into()));
                }
                for m in family {
                    if m.is_empty() || !name.is_compact(m) || !name.is_saturated(m) {
                        return Ok(false);
                    }
                }
                let filtered = family.iter().all(|a| {
                    family.iter().all(|b| {
                        family.iter().any(|c| c.is_subset(a) && c.is_subset(b))
                    })
                });
                if !filtered {
                    return Err(Error::MalformedWitness("family is not filtered".into()));
                }
                let least = family
                    .iter()
                    .any(|c| family.iter().all(|m| c.is_subset(m)));
                if !least {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Witness::PowerspaceIsoToNaturals { checked_up_to } => {
            let n = *checked_up_to;
            // order embedding: k <= m iff tail(k) ⊇ tail(m)
            for k in 0..n {
                for m in 0..n {
                    if (k <= m) != tail(m).is_subset(&tail(k)) {
                        return Ok(false);
                    }
                }
            }
            // compact saturated nonempty representable sets are exactly tails
            for k in 0..n {
                let t = tail(k);
                if !(name.is_compact(&t) && name.is_saturated(&t) && !t.is_empty()) {
                    return Ok(false);
                }
                let f = SymbolicSet::finite(0..=k);
                if name.is_saturated(&f) {
                    return Ok(false);
                }
                let gap = SymbolicSet::cofinite((0..k).chain([k + 1]));
                if name.is_saturated(&gap) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Witness::PowerspaceChainWithoutSup { depth } => {
            // An upper bound of every tail under ⊇ must be contained in all
            // tails; any candidate tail(m) fails at depth m+1, and finite
            // nonempty sets are not saturated, so no bound exists in D.
            Ok((0..*depth).all(|m| !tail(m).is_subset(&tail(m + 1)))
                && (0..*depth).all(|m| {
                    let f = SymbolicSet::finite([m]);
                    !name.is_saturated(&f) || !name.is_compact(&f)
                }))
        }
        Witness::UvEqualsScottOnPowerspace { checked_up_to } => {
            let n = *checked_up_to;
            // box(tail(k)) = {K in D : K ⊆ tail(k)} = {tail(m) : m >= k},
            // the principal up-set of tail(k) in ⊇.
            for k in 0..n {
                for m in 0..n {
                    let member = tail(m).is_subset(&tail(k));
                    if member != (m >= k) {
                        return Ok(false);
                    }
                }
            }
            // Scott = Alexandroff on the chain: a directed representable
            // family of tails with a supremum has a greatest member.
            for k in 1..n.min(8) {
                let family: Vec<SymbolicSet> = (0..k).map(tail).collect();
                let has_least_tail = family
                    .iter()
                    .any(|c| family.iter().all(|m| m.is_subset(c)));
                if !has_least_tail {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Witness::DiscreteSpecializationDSpace { checked_up_to } => {
            let n = *checked_up_to;
            for x in 0..n {
                let cl = name.closure(&SymbolicSet::finite([x]));
                if cl != SymbolicSet::finite([x]) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Witness::DElementsAreFiniteSets { checked_up_to } => {
            let n = *checked_up_to;
            for k in 1..n {
                let f = SymbolicSet::finite(0..k);
                if !(name.is_compact(&f) && name.is_saturated(&f)) {
                    return Ok(false);
                }
                let c = SymbolicSet::cofinite(0..k);
                if name.is_compact(&c) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Witness::PointClosureIsWholeSpace { point } => {
            Ok(name.closure(&SymbolicSet::finite([*point])) == SymbolicSet::full())
        }
    }
}

/// Builds the verdict report for a gallery space; every verdict is backed by
/// a witness that `check_witness` has validated.
pub fn analyze_gallery(name: GalleryName) -> Result<GalleryReport> {
    let report = match name {
        GalleryName::OmegaCocountable => {
            let families = vec![
                vec![
                    SymbolicSet::finite(0..6),
                    SymbolicSet::finite(0..4),
                    SymbolicSet::finite(0..2),
                ],
                vec![
                    SymbolicSet::finite([0, 1, 2, 5]),
                    SymbolicSet::finite([0, 2, 5]),
                    SymbolicSet::finite([0, 2]),
                ],
                vec![SymbolicSet::finite([7])],
            ];
            GalleryReport {
                name: name.as_str().to_string(),
                modeling_note: Some(
                    "uncountable ground modeled by the finite/cofinite algebra with the \
                     reading Finite <-> countable, CoFinite <-> co-countable"
                        .to_string(),
                ),
                sober: Some(false),
                well_filtered: true,
                d_space: Some(true),
                d_characterization: "nonempty finite sets".to_string(),
                d_is_dcpo: Some(true),
                d_iso_to_naturals: None,
                uv_equals_scott: None,
                witnesses: vec![
                    Witness::IrreducibleNotPointClosure,
                    Witness::LeastMemberOfFilteredFamilies { families },
                    Witness::DElementsAreFiniteSets { checked_up_to: WITNESS_DEPTH },
                    Witness::DiscreteSpecializationDSpace { checked_up_to: WITNESS_DEPTH },
                ],
            }
        }
        GalleryName::NatCofinite => GalleryReport {
            name: name.as_str().to_string(),
            modeling_note: None,
            sober: Some(false),
            well_filtered: false,
            d_space: Some(true),
            d_characterization: "all nonempty subsets".to_string(),
            d_is_dcpo: None,
            d_iso_to_naturals: None,
            uv_equals_scott: None,
            witnesses: vec![
                Witness::IrreducibleNotPointClosure,
                Witness::TailChainEscapesOpen { depth: WITNESS_DEPTH },
                Witness::DiscreteSpecializationDSpace { checked_up_to: WITNESS_DEPTH },
            ],
        },
        GalleryName::NatAlexandroff => GalleryReport {
            name: name.as_str().to_string(),
            modeling_note: None,
            sober: None,
            well_filtered: false,
            d_space: None,
            d_characterization: "the tails, order-isomorphic to the naturals".to_string(),
            d_is_dcpo: Some(false),
            d_iso_to_naturals: Some(true),
            uv_equals_scott: Some(true),
            witnesses: vec![
                Witness::TailChainEscapesOpen { depth: WITNESS_DEPTH },
                Witness::PowerspaceIsoToNaturals { checked_up_to: WITNESS_DEPTH },
                Witness::PowerspaceChainWithoutSup { depth: WITNESS_DEPTH },
                Witness::UvEqualsScottOnPowerspace { checked_up_to: WITNESS_DEPTH },
            ],
        },
    };
    for w in &report.witnesses {
        if !check_witness(name, w)? {
            return Err(Error::Precondition(format!(
                "gallery witness failed validation: {w:?}"
            )));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_algebra_examples() {
        assert_eq!(
            SymbolicSet::finite([1, 2]).union(&SymbolicSet::finite([2, 3])),
            SymbolicSet::finite([1, 2, 3])
        );
        assert_eq!(
            SymbolicSet::cofinite([0]).inter(&SymbolicSet::cofinite([1])),
            SymbolicSet::cofinite([0, 1])
        );
        assert_eq!(SymbolicSet::finite([5]).complement(), SymbolicSet::cofinite([5]));
        assert_eq!(
            SymbolicSet::cofinite([0]).minus(&SymbolicSet::finite([3])),
            SymbolicSet::cofinite([0, 3])
        );
        assert!(SymbolicSet::finite([2]).is_subset(&SymbolicSet::cofinite([1])));
        assert!(!SymbolicSet::cofinite([1]).is_subset(&SymbolicSet::finite([2])));
    }

    #[test]
    fn gallery_verdicts() {
        let omega = analyze_gallery(GalleryName::OmegaCocountable).unwrap();
        assert_eq!(omega.sober, Some(false));
        assert!(omega.well_filtered);
        assert_eq!(omega.d_characterization, "nonempty finite sets");

        let alex = analyze_gallery(GalleryName::NatAlexandroff).unwrap();
        assert!(!alex.well_filtered);
        assert_eq!(alex.d_is_dcpo, Some(false));
        assert_eq!(alex.d_iso_to_naturals, Some(true));
        assert_eq!(alex.uv_equals_scott, Some(true));

        let cof = analyze_gallery(GalleryName::NatCofinite).unwrap();
        assert_eq!(cof.sober, Some(false));
        assert!(!cof.well_filtered);
        assert_eq!(cof.d_space, Some(true));
    }

    #[test]
    fn witness_replay() {
        // the tails witness validates in the cofinite model
        assert!(check_witness(
            GalleryName::NatCofinite,
            &Witness::TailChainEscapesOpen { depth: 16 }
        )
        .unwrap());
        // a fake witness claiming cl({3}) = X in nat-cofinite is refuted
        assert!(!check_witness(
            GalleryName::NatCofinite,
            &Witness::PointClosureIsWholeSpace { point: 3 }
        )
        .unwrap());
        // irreducibility of the whole cofinite space validates
        assert!(check_witness(GalleryName::NatCofinite, &Witness::IrreducibleNotPointClosure)
            .unwrap());
        // malformed witnesses are rejected, not refuted
        assert!(check_witness(
            GalleryName::NatCofinite,
            &Witness::TailChainEscapesOpen { depth: 1 }
        )
        .is_err());
    }

    #[test]
    fn unknown_name_rejected() {
        assert!(GalleryName::parse("sierpinski").is_err());
        assert!(GalleryName::parse("nat-alexandroff").is_ok());
    }

    #[test]
    fn restrictions_are_valid_spaces() {
        for name in [
            GalleryName::NatAlexandroff,
            GalleryName::NatCofinite,
            GalleryName::OmegaCocountable,
        ] {
            for n in 1..=8 {
                let space = name.restrict(n).unwrap();
                assert_eq!(space.n(), n);
                // finite fragments: everything compact (agrees with the
                // symbolic characterization on Finite sets)
                for m in 0..(1u64 << n) {
                    let s = PointSet::from_bits(n, m);
                    assert!(space.is_compact(&s).unwrap());
                }
            }
        }
        // fragment of nat-alexandroff is the chain's Alexandroff space
        let space = GalleryName::NatAlexandroff.restrict(3).unwrap();
        assert_eq!(space.opens().len(), 4);
    }

    #[test]
    fn symbolic_compactness_matches_fragments() {
        // Finite symbolic sets are compact in every model and restrict to
        // compact fragments; the documented caveat is that co-small sets
        // restrict to finite (compact) traces even where they are not
        // compact at full scale.
        for name in [
            GalleryName::NatAlexandroff,
            GalleryName::NatCofinite,
            GalleryName::OmegaCocountable,
        ] {
            let space = name.restrict(6).unwrap();
            for s in [SymbolicSet::finite([0, 2]), SymbolicSet::finite(1..4)] {
                assert!(name.is_compact(&s));
                assert!(space.is_compact(&s.restrict(6)).unwrap());
            }
        }
        assert!(!GalleryName::OmegaCocountable.is_compact(&SymbolicSet::cofinite([0])));
    }

    #[test]
    fn alexandroff_iso_to_naturals_on_prefix() {
        // n -> tail(n) is constructed and verified on the first 64 elements
        assert!(check_witness(
            GalleryName::NatAlexandroff,
            &Witness::PowerspaceIsoToNaturals { checked_up_to: 64 }
        )
        .unwrap());
    }

    #[test]
    fn filtered_finite_families_have_least_members() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut families = Vec::new();
        for _ in 0..50 {
            // descending chains of finite sets are filtered and representable
            let mut cur: Vec<u64> = (0..rng.random_range(3..10u64)).collect();
            let mut fam = vec![SymbolicSet::finite(cur.clone())];
            while cur.len() > 1 {
                cur.remove(rng.random_range(0..cur.len()));
                fam.push(SymbolicSet::finite(cur.clone()));
            }
            families.push(fam);
        }
        assert!(check_witness(
            GalleryName::OmegaCocountable,
            &Witness::LeastMemberOfFilteredFamilies { families }
        )
        .unwrap());
    }
}
