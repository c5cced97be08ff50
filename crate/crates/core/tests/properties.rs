use kktheory_core::crmod::Part;
use kktheory_core::exactalg::{
    extension_candidates, homology, induced_hom, smith_normal_form, ExtensionBound, FgAbGroup, GroupHom, IntMatrix,
    InvariantFactors,
};
use kktheory_core::kgraph::{validate, KGraphSpec};
use kktheory_core::spectral::compute_e2;
use num_bigint::BigInt;
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-9i64..=9, rows * cols).prop_map(move |d| IntMatrix::from_i64(rows, cols, &d))
}

fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    // product of elementary row operations
    prop::collection::vec((0..n.max(1), 0..n.max(1), -3i64..=3), 0..8).prop_map(move |ops| {
        let mut u = IntMatrix::identity(n);
        for (i, j, c) in ops {
            if i != j && n > 1 {
                let mut e = IntMatrix::identity(n);
                e[(i, j)] = BigInt::from(c);
                u = e.mul(&u);
            }
        }
        u
    })
}

fn cyclic_orders() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2u64..=6, 0..=2)
}

fn invariants(orders: &[u64]) -> InvariantFactors {
    FgAbGroup::cyclic_sum(&orders.iter().map(|&d| BigInt::from(d)).collect::<Vec<_>>())
        .invariants()
        .clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_diagonal_is_a_presentation_invariant(
        (m, u, v) in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| (matrix(r, c), unimodular(r), unimodular(c)))
    ) {
        let a = smith_normal_form(&m).diagonal();
        let b = smith_normal_form(&u.mul(&m).mul(&v)).diagonal();
        prop_assert_eq!(a, b);
        let left = FgAbGroup::from_relations(m.clone());
        let right = FgAbGroup::from_relations(u.mul(&m));
        prop_assert_eq!(left.invariants(), right.invariants());
    }

    #[test]
    fn induced_maps_are_functorial(k in -3i64..=3, l in -3i64..=3, d in matrix(3, 3)) {
        // homology of 0 → Z^3 --d--> Z^3
        let mid = FgAbGroup::free(3);
        let incoming = GroupHom::zero(FgAbGroup::trivial(), mid.clone());
        let outgoing = GroupHom::new(mid.clone(), mid.clone(), d).unwrap();
        let h = homology(&incoming, &outgoing).unwrap();
        let fk = GroupHom::multiplication(mid.clone(), k);
        let fl = GroupHom::multiplication(mid.clone(), l);
        let composed = induced_hom(&fk.compose(&fl).unwrap(), &h, &h).unwrap();
        let separately = induced_hom(&fk, &h, &h).unwrap().compose(&induced_hom(&fl, &h, &h).unwrap()).unwrap();
        prop_assert!(composed.equals(&separately).unwrap());
        let id = induced_hom(&GroupHom::identity(mid), &h, &h).unwrap();
        prop_assert!(id.equals(&GroupHom::identity(h.group().clone())).unwrap());
    }

    #[test]
    fn extensions_contain_the_direct_sum(a in cyclic_orders(), b in cyclic_orders()) {
        let sub = invariants(&a);
        let quotient = invariants(&b);
        let mut both = a.clone();
        both.extend(&b);
        let split = invariants(&both);
        let candidates = extension_candidates(&sub, &quotient, ExtensionBound::default()).unwrap();
        prop_assert!(candidates.contains(&split));
        let order = sub.order().unwrap() * quotient.order().unwrap();
        for c in &candidates {
            prop_assert_eq!(c.order().unwrap(), order.clone());
        }
    }
}

fn mixed_family(n: i64) -> KGraphSpec {
    let m1 = IntMatrix::from_rows(&[&[1, 1, 1], &[1, 0, n - 1], &[1, n - 1, 0]]);
    let m2 = IntMatrix::from_rows(&[&[1, 1, 1], &[1, n - 1, 0], &[1, 0, n - 1]]);
    KGraphSpec {
        k: 2,
        vertices: vec!["a".into(), "b".into(), "c".into()],
        matrices: vec![m1, m2],
        involution: vec![0, 2, 1],
    }
}

#[test]
fn relabelling_vertices_leaves_the_page_unchanged() {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for n in 2..5 {
        let base = mixed_family(n);
        let reference = compute_e2(&base).unwrap();
        for perm in perms {
            let s = base.relabel(&perm);
            assert!(validate(&s).is_ok());
            let page = compute_e2(&s).unwrap();
            for part in [Part::Real, Part::Complex] {
                for p in 0..=2 {
                    for q in 0..8 {
                        assert_eq!(
                            page.group(part, p, q),
                            reference.group(part, p, q),
                            "n={n} perm={perm:?}"
                        );
                    }
                }
            }
        }
    }
}
