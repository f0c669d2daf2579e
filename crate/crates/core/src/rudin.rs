//! Rudin-style searches over the Smyth power space: the minimal irreducible
//! closed set meeting all members of an irreducible family, the union lemma
//! for compact families, and the well-filteredness transfer check between a
//! space and its upper space.

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::powerspace::PowerSpace;
use crate::topology::{TopSpace, WfParams, WfVerdict};

/// Every clause of the Rudin search output, verified definitionally.
#[derive(Clone, Debug)]
pub struct RudinChecklist {
    pub closed: bool,
    pub subset_of_c: bool,
    pub meets_all_members: bool,
    pub minimal: bool,
    pub irreducible: bool,
}

impl RudinChecklist {
    pub fn all(&self) -> bool {
        self.closed && self.subset_of_c && self.meets_all_members && self.minimal && self.irreducible
    }
}

/// Irreducibility of an arbitrary subset A of a space: A inside a union of
/// two closed sets forces A inside one of them.
pub fn subset_is_irreducible(space: &TopSpace, a: &PointSet) -> bool {
    if a.is_empty() {
        return false;
    }
    let closeds = space.closeds();
    !closeds.iter().any(|f1| {
        closeds.iter().any(|f2| {
            a.is_subset(&f1.union(f2)) && !a.is_subset(f1) && !a.is_subset(f2)
        })
    })
}

/// Finds the minimal closed irreducible subset of C that meets every member
/// of the irreducible family A, deterministically (cardinality, then lex,
/// among the minimal solutions).
pub fn rudin_minimal(
    ps: &PowerSpace,
    family: &[usize],
    c: &PointSet,
) -> Result<(PointSet, RudinChecklist)> {
    let base = ps.base();
    c.check_ground(base.n())?;
    if family.is_empty() {
        return Err(Error::Precondition("the family A must be nonempty".into()));
    }
    if !base.is_closed(c) {
        return Err(Error::Precondition("C must be closed in the base space".into()));
    }
    let members: Vec<&PointSet> = family.iter().map(|&i| &ps.elements()[i]).collect();
    if let Some(k) = members.iter().find(|k| !k.intersects(c)) {
        return Err(Error::Precondition(format!(
            "C must meet every member of A; missed {:?}",
            base.set_names(k)
        )));
    }
    let uv = ps.uv_topspace()?;
    let a_subset = PointSet::from_indices(ps.elements().len(), family.iter().copied());
    if !subset_is_irreducible(&uv, &a_subset) {
        return Err(Error::Precondition(
            "A must be irreducible in the upper Vietoris topology".into(),
        ));
    }
    // All closed subsets of C that meet every member, then the minimal ones.
    let candidates: Vec<PointSet> = base
        .closeds()
        .into_iter()
        .filter(|b| b.is_subset(c) && members.iter().all(|k| k.intersects(b)))
        .collect();
    let minimal: Vec<&PointSet> = candidates
        .iter()
        .filter(|b| !candidates.iter().any(|d| d.is_subset(b) && *d != **b))
        .collect();
    let pick = *minimal
        .iter()
        .min_by(|a, b| a.card_lex_cmp(b))
        .expect("C itself is always a candidate");
    let checklist = RudinChecklist {
        closed: base.is_closed(pick),
        subset_of_c: pick.is_subset(c),
        meets_all_members: members.iter().all(|k| k.intersects(pick)),
        minimal: !base
            .closeds()
            .iter()
            .any(|d| d.is_subset(pick) && d != pick && members.iter().all(|k| k.intersects(d))),
        irreducible: subset_is_irreducible(base, pick),
    };
    assert!(checklist.all(), "rudin output failed verification: {checklist:?}");
    Ok((*pick, checklist))
}

/// Union lemma: the union of a nonempty compact subset of D(X) is again a
/// member of D(X). Compactness of the family is checked definitionally in
/// the upper Vietoris topology.
pub fn union_of_compact_family(ps: &PowerSpace, family: &[usize]) -> Result<PointSet> {
    if family.is_empty() {
        return Err(Error::Precondition("the family K must be nonempty".into()));
    }
    let uv = ps.uv_topspace()?;
    let family_set = PointSet::from_indices(ps.elements().len(), family.iter().copied());
    if !uv.is_compact(&family_set)? {
        return Err(Error::Precondition(
            "the family K must be compact in the upper Vietoris topology".into(),
        ));
    }
    let mut union = PointSet::empty(ps.base().n());
    for &i in family {
        union = union.union(&ps.elements()[i]);
    }
    assert!(
        ps.element_index(&union).is_some(),
        "union of a compact family must be a member of D(X)"
    );
    Ok(union)
}

#[derive(Clone, Debug)]
pub struct WfTransferReport {
    pub base_verdict: WfVerdict,
    pub upper_verdict: WfVerdict,
    pub agree: bool,
}

/// Runs the well-filteredness decider on X and on its upper space and
/// asserts the verdicts agree.
pub fn wf_transfer_check(space: &TopSpace, params: &WfParams) -> Result<WfTransferReport> {
    if !space.is_t0() {
        return Err(Error::Precondition("well-filteredness transfer needs a T0 space".into()));
    }
    let base_verdict = space.is_well_filtered(params)?;
    let ps = PowerSpace::build(space, params.element_cap)?;
    let uv = ps.uv_topspace()?;
    let upper_verdict = uv.is_well_filtered(params)?;
    let agree = base_verdict.holds == upper_verdict.holds;
    assert!(agree, "well-filteredness must transfer between X and D(X)");
    Ok(WfTransferReport { base_verdict, upper_verdict, agree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{chain, diamond, discrete, scott};

    #[test]
    fn rudin_minimal_discrete() {
        let space = discrete(2);
        let ps = PowerSpace::build_default(&space).unwrap();
        let a = ps.element_index(&PointSet::from_indices(2, [0])).unwrap();
        let c = PointSet::full(2);
        let (out, checklist) = rudin_minimal(&ps, &[a], &c).unwrap();
        // brute-force oracle over all closed subsets of C
        let brute = space
            .closeds()
            .into_iter()
            .filter(|b| !b.is_empty() && b.contains(0))
            .min_by(|x, y| x.card_lex_cmp(y))
            .unwrap();
        assert_eq!(out, brute);
        assert_eq!(out, PointSet::from_indices(2, [0]));
        assert!(checklist.all());
    }

    #[test]
    fn rudin_minimal_scott_chain() {
        let space = scott(&chain(2));
        let ps = PowerSpace::build_default(&space).unwrap();
        let top = ps.element_index(&PointSet::from_indices(2, [1])).unwrap();
        let c = PointSet::full(2);
        // closed sets of the Scott 2-chain are {}, {0}, {0,1}; the only one
        // containing the point 1 is the whole space.
        let (out, _) = rudin_minimal(&ps, &[top], &c).unwrap();
        assert_eq!(out, PointSet::full(2));
    }

    #[test]
    fn rudin_rejects_bad_input() {
        let space = discrete(2);
        let ps = PowerSpace::build_default(&space).unwrap();
        let a = ps.element_index(&PointSet::from_indices(2, [0])).unwrap();
        // C not meeting the member
        let c_miss = PointSet::from_indices(2, [1]);
        assert!(rudin_minimal(&ps, &[a], &c_miss).is_err());
        // empty family
        assert!(rudin_minimal(&ps, &[], &PointSet::full(2)).is_err());
        // non-irreducible family: {{a}},{{b}} in the discrete upper space
        let b = ps.element_index(&PointSet::from_indices(2, [1])).unwrap();
        assert!(rudin_minimal(&ps, &[a, b], &PointSet::full(2)).is_err());
    }

    #[test]
    fn union_examples() {
        let ps = PowerSpace::build_default(&discrete(2)).unwrap();
        let all: Vec<usize> = (0..ps.elements().len()).collect();
        assert_eq!(union_of_compact_family(&ps, &all).unwrap(), PointSet::full(2));

        let ps = PowerSpace::build_default(&scott(&chain(2))).unwrap();
        let top = ps.element_index(&PointSet::from_indices(2, [1])).unwrap();
        assert_eq!(
            union_of_compact_family(&ps, &[top]).unwrap(),
            PointSet::from_indices(2, [1])
        );

        let ps = PowerSpace::build_default(&scott(&diamond())).unwrap();
        let up_a = ps.element_index(&PointSet::from_indices(4, [1, 3])).unwrap();
        let up_b = ps.element_index(&PointSet::from_indices(4, [2, 3])).unwrap();
        assert_eq!(
            union_of_compact_family(&ps, &[up_a, up_b]).unwrap(),
            PointSet::from_indices(4, [1, 2, 3])
        );
    }

    #[test]
    fn wf_transfer_examples() {
        let params = WfParams::default();
        for space in [scott(&chain(2)), discrete(3), scott(&diamond())] {
            let report = wf_transfer_check(&space, &params).unwrap();
            assert!(report.base_verdict.holds && report.upper_verdict.holds && report.agree);
        }
    }
}
