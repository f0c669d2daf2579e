//! Property-based invariants over random posets, spaces and symbolic sets.

use proptest::prelude::*;

use upperspace::gallery::SymbolicSet;
use upperspace::{PointSet, Poset, TopSpace};

/// Random poset on up to 6 elements via a random DAG on index order.
fn arb_poset() -> impl Strategy<Value = Poset> {
    (1usize..=6).prop_flat_map(|n| {
        let pair_count = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pair_count).prop_map(move |edges| {
            let names = (0..n).map(|i| format!("p{i}")).collect();
            let mut pairs = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if edges[k] {
                        pairs.push((i, j));
                    }
                    k += 1;
                }
            }
            Poset::from_index_pairs(names, &pairs).unwrap()
        })
    })
}

fn arb_symbolic() -> impl Strategy<Value = SymbolicSet> {
    (any::<bool>(), proptest::collection::vec(0u64..16, 0..5)).prop_map(|(co, sup)| {
        if co {
            SymbolicSet::cofinite(sup)
        } else {
            SymbolicSet::finite(sup)
        }
    })
}

proptest! {
    #[test]
    fn up_set_is_a_closure_operator(p in arb_poset(), bits in 0u64..64) {
        let s = PointSet::from_bits(p.n(), bits & ((1 << p.n()) - 1));
        let up = p.up_set(&s).unwrap();
        prop_assert!(s.is_subset(&up));
        prop_assert_eq!(&p.up_set(&up).unwrap(), &up);
        prop_assert!(p.is_up_set(&up));
    }

    #[test]
    fn saturation_is_specialization_up_set(p in arb_poset(), bits in 0u64..64) {
        let space = p.alexandroff_topology().unwrap();
        let s = PointSet::from_bits(p.n(), bits & ((1 << p.n()) - 1));
        let sat = space.saturation(&s).unwrap();
        // in an Alexandroff space the saturation is the order's up-set
        prop_assert_eq!(sat, p.up_set(&s).unwrap());
    }

    #[test]
    fn sup_is_least_upper_bound(p in arb_poset(), bits in 0u64..64) {
        let s = PointSet::from_bits(p.n(), bits & ((1 << p.n()) - 1));
        if let Some(sup) = p.sup(&s).unwrap() {
            for i in s.iter() {
                prop_assert!(p.leq(i, sup));
            }
            for b in 0..p.n() {
                if s.iter().all(|i| p.leq(i, b)) {
                    prop_assert!(p.leq(sup, b));
                }
            }
        }
    }

    #[test]
    fn closure_and_interior_are_dual(p in arb_poset(), bits in 0u64..64) {
        let space = p.alexandroff_topology().unwrap();
        let s = PointSet::from_bits(p.n(), bits & ((1 << p.n()) - 1));
        let cl = space.closure(&s).unwrap();
        let int_c = space.interior(&s.complement()).unwrap();
        prop_assert_eq!(cl, int_c.complement());
    }

    #[test]
    fn finite_spaces_are_sober_and_well_filtered(p in arb_poset()) {
        let space = p.alexandroff_topology().unwrap();
        let report = space.space_report(&Default::default()).unwrap();
        prop_assert!(report.t0);
        prop_assert!(report.sober.holds);
        prop_assert!(report.well_filtered.holds);
        prop_assert!(report.d_space.holds);
        prop_assert!(report.coherent.holds);
    }

    #[test]
    fn symbolic_algebra_laws(a in arb_symbolic(), b in arb_symbolic(), c in arb_symbolic()) {
        prop_assert_eq!(a.union(&b), b.union(&a));
        prop_assert_eq!(a.inter(&b), b.inter(&a));
        prop_assert_eq!(a.union(&b.inter(&c)), a.union(&b).inter(&a.union(&c)));
        prop_assert_eq!(a.complement().complement(), a.clone());
        // de Morgan
        prop_assert_eq!(a.union(&b).complement(), a.complement().inter(&b.complement()));
        prop_assert!(a.inter(&b).is_subset(&a));
        prop_assert!(a.is_subset(&a.union(&b)));
        // membership agrees pointwise on a window
        for x in 0..24u64 {
            prop_assert_eq!(a.union(&b).contains(x), a.contains(x) || b.contains(x));
            prop_assert_eq!(a.inter(&b).contains(x), a.contains(x) && b.contains(x));
        }
    }

    #[test]
    fn symbolic_restriction_is_a_homomorphism(a in arb_symbolic(), b in arb_symbolic()) {
        let n = 20;
        prop_assert_eq!(a.union(&b).restrict(n), a.restrict(n).union(&b.restrict(n)));
        prop_assert_eq!(a.inter(&b).restrict(n), a.restrict(n).inter(&b.restrict(n)));
        prop_assert_eq!(a.complement().restrict(n), a.restrict(n).complement());
    }
}

/// Sobriety decider agrees with a brute-force oracle on arbitrary (not
/// necessarily T0) small spaces.
#[test]
fn sober_matches_brute_force_oracle() {
    let mut checked = 0;
    for n in 1usize..=3 {
        // every union-closed family over n points containing 0 and full
        let subset_count = 1usize << n;
        for mask in 0u64..(1 << subset_count) {
            let opens: Vec<PointSet> = (0..subset_count)
                .filter(|&s| mask >> s & 1 == 1)
                .map(|s| PointSet::from_bits(n, s as u64))
                .collect();
            let names = (0..n).map(|i| format!("p{i}")).collect();
            let Ok(space) = TopSpace::new(names, opens, false) else {
                continue;
            };
            checked += 1;
            let verdict = space.is_sober();
            let oracle = {
                let closeds = space.closeds();
                let mut ok = true;
                for f in &closeds {
                    if f.is_empty() {
                        continue;
                    }
                    let irreducible = !closeds.iter().any(|f1| {
                        closeds.iter().any(|f2| {
                            f.is_subset(&f1.union(f2))
                                && !f.is_subset(f1)
                                && !f.is_subset(f2)
                        })
                    });
                    if irreducible {
                        let generics = (0..n)
                            .filter(|&x| space.point_closure(x) == *f)
                            .count();
                        ok &= generics == 1;
                    }
                }
                ok
            };
            assert_eq!(verdict.holds, oracle);
        }
    }
    // labeled topologies on 1, 2, 3 points: 1 + 4 + 29
    assert_eq!(checked, 34);
}
