//! The verification suite: nine batteries over exhaustive small posets and
//! seeded random spaces. Each battery reports pass/fail with a witness
//! description; the serialized report depends only on the inputs and the
//! seed, never on timing.

use std::time::Instant;

use serde_json::{json, Value};

use crate::error::Result;
use crate::formats::to_stable_string;
use crate::frame::FrameOnD;
use crate::gallery::{analyze_gallery, check_witness, GalleryName};
use crate::generate::{all_labeled_posets, random_lattices, random_posets};
use crate::pointset::PointSet;
use crate::poset::Poset;
use crate::powerspace::PowerSpace;
use crate::rudin;
use crate::topology::{next_combination, TopSpace, WfParams};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Labeled posets are enumerated exhaustively up to this size.
    pub exhaustive_upto: usize,
    pub random_posets: usize,
    pub random_poset_max_n: usize,
    /// Labeled lattices are enumerated exhaustively up to this size.
    pub lattice_exhaustive_upto: usize,
    pub random_lattices: usize,
    pub element_cap: usize,
    /// Re-run a reduced configuration twice and compare report bytes.
    pub check_determinism: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 42,
            exhaustive_upto: 4,
            random_posets: 500,
            random_poset_max_n: 8,
            lattice_exhaustive_upto: 5,
            random_lattices: 200,
            element_cap: 100_000,
            check_determinism: true,
        }
    }
}

impl SuiteConfig {
    fn reduced(&self) -> SuiteConfig {
        SuiteConfig {
            seed: self.seed,
            exhaustive_upto: 3,
            random_posets: 40,
            random_poset_max_n: 6,
            lattice_exhaustive_upto: 4,
            random_lattices: 20,
            element_cap: self.element_cap,
            check_determinism: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub cases: usize,
    pub detail: Option<String>,
    /// Wall time; excluded from serialized reports to keep them byte-stable.
    pub millis: u128,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub seed: u64,
    pub criteria: Vec<CriterionResult>,
    pub pass: bool,
}

impl SuiteReport {
    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "pass": self.pass,
            "criteria": self.criteria.iter().map(|c| json!({
                "id": c.id,
                "name": c.name,
                "pass": c.pass,
                "cases": c.cases,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

fn poset_label(p: &Poset) -> String {
    let rows: Vec<u64> = (0..p.n()).map(|i| p.up_row(i)).collect();
    format!("poset(n={}, up_rows={:?})", p.n(), rows)
}

/// The shared population: all labeled posets up to the exhaustive bound plus
/// seeded random posets, each carrying its Alexandroff space.
pub fn population(cfg: &SuiteConfig) -> Result<Vec<Poset>> {
    let mut all = Vec::new();
    for n in 1..=cfg.exhaustive_upto {
        all.extend(all_labeled_posets(n)?);
    }
    all.extend(random_posets(cfg.random_posets, cfg.random_poset_max_n, cfg.seed)?);
    Ok(all)
}

fn criterion<F>(id: u8, name: &'static str, body: F) -> CriterionResult
where
    F: FnOnce() -> Result<(usize, Option<String>)>,
{
    let started = Instant::now();
    let (cases, detail) = match body() {
        Ok(x) => x,
        Err(e) => (0, Some(format!("error: {e}"))),
    };
    CriterionResult {
        id,
        name,
        pass: detail.is_none(),
        cases,
        detail,
        millis: started.elapsed().as_millis(),
    }
}

fn c1_scott_alexandroff(posets: &[Poset]) -> CriterionResult {
    criterion(1, "scott-alexandroff-coincidence", || {
        for p in posets {
            let alex = p.alexandroff_topology()?;
            let scott = p.scott_topology()?;
            if alex.opens() != scott.opens() {
                return Ok((0, Some(format!("topologies differ on {}", poset_label(p)))));
            }
        }
        Ok((posets.len(), None))
    })
}

/// Specialization of the upper Vietoris topology computed from the box
/// basis: K1 below K2 iff every box around K1 contains K2.
fn uv_specialization_is_reverse_inclusion(ps: &PowerSpace) -> Result<bool> {
    let boxes: Vec<PointSet> = ps
        .base()
        .opens()
        .iter()
        .map(|u| ps.box_open(u))
        .collect::<Result<_>>()?;
    let m = ps.elements().len();
    for i in 0..m {
        for j in 0..m {
            let spec = boxes.iter().all(|b| !b.contains(i) || b.contains(j));
            if spec != ps.leq(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct SharedPassResult {
    c2: CriterionResult,
    c3: CriterionResult,
    c5: CriterionResult,
    c6: CriterionResult,
}

/// One pass over the population building each power space once, feeding the
/// specialization (2), embedding (3), sobriety-transfer (5) and
/// well-filteredness-transfer (6) batteries.
fn shared_pass(posets: &[Poset], cfg: &SuiteConfig) -> SharedPassResult {
    let started = Instant::now();
    let mut fails: [Option<String>; 4] = [None, None, None, None];
    let mut cases = 0usize;
    let wf_params = WfParams {
        generator_bound: 3,
        exhaustive: false,
        family_budget: 2_000,
        element_cap: cfg.element_cap,
    };

    let outcome: Result<()> = (|| {
        for p in posets {
            cases += 1;
            let label = poset_label(p);
            let space = p.alexandroff_topology()?;
            let ps = PowerSpace::build(&space, cfg.element_cap)?;

            // (2) specialization of uv equals reverse inclusion
            if fails[0].is_none() {
                if !uv_specialization_is_reverse_inclusion(&ps)? {
                    fails[0] = Some(format!("uv specialization differs from ⊇ on {label}"));
                } else if ps.elements().len() <= 12 {
                    let uv = ps.uv_topspace()?;
                    let sp = uv.specialization_poset()?;
                    let order = ps.order_poset()?;
                    for i in 0..ps.elements().len() {
                        if sp.up_row(i) != order.up_row(i) {
                            fails[0] =
                                Some(format!("uv specialization poset differs on {label}"));
                            break;
                        }
                    }
                }
            }

            // (3) canonical map verified as a topological embedding
            if fails[1].is_none() {
                if let Err(e) = ps.canonical_map() {
                    fails[1] = Some(format!("embedding failed on {label}: {e}"));
                }
            }

            let uv = ps.uv_topspace()?;

            // (5) sobriety transfer and generic-point proof replay
            if fails[2].is_none() {
                let base_sober = space.is_sober();
                let upper_sober = uv.is_sober();
                if !(base_sober.holds && upper_sober.holds) {
                    fails[2] = Some(format!(
                        "sobriety transfer failed on {label}: base {} upper {}",
                        base_sober.holds, upper_sober.holds
                    ));
                } else {
                    for f in space.irreducible_closed_sets() {
                        let got = ps.generic_point(&f)?;
                        let oracle = space.generic_points(&f);
                        if oracle != vec![got] {
                            fails[2] = Some(format!(
                                "generic point mismatch on {label}: replay {got}, oracle {oracle:?}"
                            ));
                            break;
                        }
                    }
                }
            }

            // (6) well-filteredness transfer and the three-way equivalence
            if fails[3].is_none() {
                let transfer = rudin::wf_transfer_check(&space, &wf_params)?;
                let upper_d = uv.is_d_space();
                let three_way = transfer.base_verdict.holds
                    && transfer.upper_verdict.holds
                    && upper_d.holds;
                if !(transfer.agree && three_way) {
                    fails[3] = Some(format!(
                        "well-filteredness equivalence failed on {label}: base {} upper {} d-space {}",
                        transfer.base_verdict.holds, transfer.upper_verdict.holds, upper_d.holds
                    ));
                }
            }
        }
        Ok(())
    })();
    if let Err(e) = outcome {
        for slot in fails.iter_mut() {
            if slot.is_none() {
                *slot = Some(format!("error: {e}"));
            }
        }
    }

    let millis = started.elapsed().as_millis();
    let mk = |id: u8, name: &'static str, detail: Option<String>| CriterionResult {
        id,
        name,
        pass: detail.is_none(),
        cases,
        detail,
        millis,
    };
    SharedPassResult {
        c2: mk(2, "uv-specialization-is-reverse-inclusion", fails[0].take()),
        c3: mk(3, "canonical-map-embedding", fails[1].take()),
        c5: mk(5, "sobriety-transfer-and-generic-points", fails[2].take()),
        c6: mk(6, "well-filteredness-three-way-equivalence", fails[3].take()),
    }
}

fn c4_frames(cfg: &SuiteConfig) -> CriterionResult {
    criterion(4, "frame-suite", || {
        let mut lattices = Vec::new();
        for n in 1..=cfg.lattice_exhaustive_upto {
            lattices.extend(
                all_labeled_posets(n)?
                    .into_iter()
                    .filter(|p| p.check_lattice().is_ok()),
            );
        }
        lattices.extend(random_lattices(cfg.random_lattices, 6, cfg.seed)?);
        for l in &lattices {
            let label = poset_label(l);
            let frame = FrameOnD::build(l)?;
            let law = frame.frame_law_check(cfg.seed);
            if !law.holds {
                return Ok((0, Some(format!("frame law failed on {label}"))));
            }
            let m = frame.elements().len();
            for a in 0..m {
                for b in 0..m {
                    // verifies residuation against every c internally
                    frame.heyting_implication(a, b);
                    let j = frame.join(&[a, b]);
                    let mt = frame.meet(&[a, b]);
                    let inter = frame.elements()[a].inter(&frame.elements()[b]);
                    let uni = frame.elements()[a].union(&frame.elements()[b]);
                    if frame.elements()[j] != inter || frame.elements()[mt] != uni {
                        return Ok((0, Some(format!(
                            "join/meet formulas failed on {label} at ({a},{b})"
                        ))));
                    }
                }
            }
            let spatiality = frame.primes_and_spatiality();
            if !spatiality.spatial {
                return Ok((0, Some(format!("spatiality failed on {label}"))));
            }
        }
        Ok((lattices.len(), None))
    })
}

/// Irreducibility of a subset via the minimal-neighborhood basis: every two
/// basis opens meeting A must meet A jointly.
fn subset_irreducible_by_basis(basis: &[PointSet], a: &PointSet) -> bool {
    if a.is_empty() {
        return false;
    }
    basis.iter().all(|u| {
        !u.intersects(a)
            || basis
                .iter()
                .all(|v| !v.intersects(a) || u.inter(v).intersects(a))
    })
}

fn c7_rudin(cfg: &SuiteConfig) -> CriterionResult {
    criterion(7, "rudin-minimal-sets", || {
        let mut spaces = Vec::new();
        for n in 1..=cfg.exhaustive_upto.min(4) {
            spaces.extend(all_labeled_posets(n)?);
        }
        let mut cases = 0usize;
        for p in &spaces {
            let label = poset_label(p);
            let space = p.alexandroff_topology()?;
            let ps = PowerSpace::build(&space, cfg.element_cap)?;
            let uv = ps.uv_topspace()?;
            let basis = uv.minimal_neighborhoods();
            let m = ps.elements().len();
            let closeds = space.closeds();
            for size in 1..=3.min(m) {
                let mut combo: Vec<usize> = (0..size).collect();
                loop {
                    let family = combo.clone();
                    let family_set =
                        PointSet::from_indices(uv.n(), family.iter().copied());
                    let irreducible = subset_irreducible_by_basis(&basis, &family_set);
                    if irreducible != rudin::subset_is_irreducible(&uv, &family_set) {
                        return Ok((0, Some(format!(
                            "irreducibility routes disagree on {label} family {family:?}"
                        ))));
                    }
                    let union = rudin::union_of_compact_family(&ps, &family)?;
                    if ps.element_index(&union).is_none() {
                        return Ok((0, Some(format!(
                            "union of compact family escaped D(X) on {label}"
                        ))));
                    }
                    if irreducible {
                        for c in &closeds {
                            if !family.iter().all(|&k| ps.elements()[k].intersects(c)) {
                                continue;
                            }
                            cases += 1;
                            let (got, checklist) = rudin::rudin_minimal(&ps, &family, c)?;
                            if !checklist.all() {
                                return Ok((0, Some(format!(
                                    "checklist failed on {label}: {checklist:?}"
                                ))));
                            }
                            if got != brute_force_rudin(&space, &ps, &family, c) {
                                return Ok((0, Some(format!(
                                    "minimal set mismatch on {label} family {family:?}"
                                ))));
                            }
                        }
                    }
                    if !next_combination(&mut combo, m) {
                        break;
                    }
                }
            }
        }
        Ok((cases, None))
    })
}

/// Independent oracle: scan all closed subsets of C meeting every member,
/// keep the inclusion-minimal ones, return the (cardinality, lex) least.
fn brute_force_rudin(
    space: &TopSpace,
    ps: &PowerSpace,
    family: &[usize],
    c: &PointSet,
) -> PointSet {
    let members: Vec<&PointSet> = family.iter().map(|&k| &ps.elements()[k]).collect();
    let candidates: Vec<PointSet> = space
        .closeds()
        .into_iter()
        .filter(|f| f.is_subset(c) && members.iter().all(|k| k.intersects(f)))
        .collect();
    let minimal: Vec<&PointSet> = candidates
        .iter()
        .filter(|f| !candidates.iter().any(|g| *g != **f && g.is_subset(f)))
        .collect();
    minimal
        .into_iter()
        .min_by(|a, b| a.card_lex_cmp(b))
        .expect("C itself is always a candidate")
        .clone()
}

fn c8_gallery() -> CriterionResult {
    criterion(8, "gallery-verdicts", || {
        let omega = analyze_gallery(GalleryName::OmegaCocountable)?;
        if !(omega.sober == Some(false)
            && omega.well_filtered
            && omega.d_characterization == "nonempty finite sets")
        {
            return Ok((0, Some("omega-cocountable-model verdict mismatch".into())));
        }
        let alex = analyze_gallery(GalleryName::NatAlexandroff)?;
        if !(!alex.well_filtered
            && alex.d_iso_to_naturals == Some(true)
            && alex.d_is_dcpo == Some(false)
            && alex.uv_equals_scott == Some(true))
        {
            return Ok((0, Some("nat-alexandroff verdict mismatch".into())));
        }
        let cof = analyze_gallery(GalleryName::NatCofinite)?;
        if !(cof.sober == Some(false) && !cof.well_filtered && cof.d_space == Some(true))
        {
            return Ok((0, Some("nat-cofinite verdict mismatch".into())));
        }
        let mut witnesses = 0usize;
        for (name, report) in [
            (GalleryName::OmegaCocountable, &omega),
            (GalleryName::NatAlexandroff, &alex),
            (GalleryName::NatCofinite, &cof),
        ] {
            for w in &report.witnesses {
                witnesses += 1;
                if !check_witness(name, w)? {
                    return Ok((0, Some(format!("witness refuted for {}", name.as_str()))));
                }
            }
        }
        Ok((witnesses, None))
    })
}

fn c9_determinism(cfg: &SuiteConfig) -> CriterionResult {
    criterion(9, "deterministic-reports", || {
        let reduced = cfg.reduced();
        let a = to_stable_string(&run_suite(&reduced)?.to_json());
        let b = to_stable_string(&run_suite(&reduced)?.to_json());
        if a != b {
            return Ok((0, Some("reduced suite reports differ between runs".into())));
        }
        Ok((2, None))
    })
}

pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let posets = population(cfg)?;
    let mut criteria = Vec::new();
    criteria.push(c1_scott_alexandroff(&posets));
    let shared = shared_pass(&posets, cfg);
    criteria.push(shared.c2);
    criteria.push(shared.c3);
    criteria.push(c4_frames(cfg));
    criteria.push(shared.c5);
    criteria.push(shared.c6);
    criteria.push(c7_rudin(cfg));
    criteria.push(c8_gallery());
    if cfg.check_determinism {
        criteria.push(c9_determinism(cfg));
    }
    let pass = criteria.iter().all(|c| c.pass);
    Ok(SuiteReport { seed: cfg.seed, criteria, pass })
}
