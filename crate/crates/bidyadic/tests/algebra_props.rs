//! Randomized checks of the exterior-algebra and dyadic laws over exact
//! rationals.  Every assertion here is an identity, so equality is literal —
//! no tolerances anywhere.

use bidyadic::basis::{complement_roundtrip_sign, GRADE_DIMS};
use bidyadic::dyadic::{
    complement_both, dyad_vector_form, modified_from_constitutive, constitutive_from_modified,
    Dyadic, Space,
};
use bidyadic::exterior::{eps_n, MultiForm, MultiVector};
use bidyadic::linalg::Mat;
use bidyadic::scalar::{int, ratio, Scalar};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn vector(grade: u8) -> impl Strategy<Value = MultiVector> {
    proptest::collection::vec(scalar(), GRADE_DIMS[grade as usize])
        .prop_map(move |c| MultiVector::new(grade, c).expect("coordinate count matches grade"))
}

fn form(grade: u8) -> impl Strategy<Value = MultiForm> {
    proptest::collection::vec(scalar(), GRADE_DIMS[grade as usize])
        .prop_map(move |c| MultiForm::new(grade, c).expect("coordinate count matches grade"))
}

fn map(out: Space, input: Space) -> impl Strategy<Value = Dyadic> {
    let (r, c) = (out.dim(), input.dim());
    proptest::collection::vec(scalar(), r * c).prop_map(move |entries| {
        Dyadic::new(out, input, Mat::from_fn(r, c, |i, j| entries[i * c + j].clone()))
            .expect("matrix shape matches the spaces")
    })
}

fn vec_map() -> impl Strategy<Value = Dyadic> {
    map(Space::vectors(1), Space::vectors(1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// `a ∧ b = (−1)^{jk} b ∧ a` across the grade pairs that fit in four
    /// dimensions.
    #[test]
    fn wedge_is_graded_commutative(
        a in vector(1), b in vector(1), x in vector(2), y in vector(2), w in vector(3),
    ) {
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap().neg());
        prop_assert_eq!(a.wedge(&x).unwrap(), x.wedge(&a).unwrap());
        prop_assert_eq!(x.wedge(&y).unwrap(), y.wedge(&x).unwrap());
        prop_assert_eq!(a.wedge(&w).unwrap(), w.wedge(&a).unwrap().neg());
    }

    #[test]
    fn wedge_is_associative(a in vector(1), b in vector(1), c in vector(1), x in vector(2)) {
        prop_assert_eq!(
            a.wedge(&b).unwrap().wedge(&c).unwrap(),
            a.wedge(&b.wedge(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.wedge(&b).unwrap().wedge(&x).unwrap(),
            a.wedge(&b.wedge(&x).unwrap()).unwrap()
        );
    }

    #[test]
    fn wedge_distributes_over_addition(a in form(1), x in form(2), y in form(2)) {
        prop_assert_eq!(
            a.wedge(&x.add(&y).unwrap()).unwrap(),
            a.wedge(&x).unwrap().add(&a.wedge(&y).unwrap()).unwrap()
        );
    }

    /// The identity that pins the contraction sign, in its graded form
    /// `a⌋(ν∧Φ) = ν∧(a⌋Φ) + (−1)^k (a|ν)Φ` for `Φ` of grade `k` (last-slot
    /// insertion commutes `a` past all of `Φ`).  At `k = 2` — the field
    /// two-forms everything downstream cares about — the sign is `+`.
    #[test]
    fn contraction_satisfies_the_leibniz_identity(
        a in vector(1), nu in form(1), f1 in form(1), f2 in form(2), f3 in form(3),
    ) {
        let s = a.pair(&nu).unwrap();
        for phi in [&f1, &f2, &f3] {
            let signed = if phi.grade() % 2 == 0 { s.clone() } else { -s.clone() };
            let lhs = a.contract(&nu.wedge(phi).unwrap()).unwrap();
            let rhs =
                nu.wedge(&a.contract(phi).unwrap()).unwrap().add(&phi.scale(&signed)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    /// `pair(a⌋ω, X) = pair(ω, X∧a)`: contraction inserts into the last slot.
    #[test]
    fn contraction_is_adjoint_to_last_slot_wedge(
        a in vector(1), w2 in form(2), x1 in vector(1), w3 in form(3), x2 in vector(2),
    ) {
        prop_assert_eq!(
            a.contract(&w2).unwrap().pair(&x1).unwrap(),
            w2.pair(&x1.wedge(&a).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.contract(&w3).unwrap().pair(&x2).unwrap(),
            w3.pair(&x2.wedge(&a).unwrap()).unwrap()
        );
    }

    /// `pair(β, X⌊α) = pair(α∧β, X)`: the hook removes from the first slots.
    #[test]
    fn hook_is_adjoint_to_first_slot_wedge(
        x2 in vector(2), x3 in vector(3),
        a1 in form(1), a2 in form(2), b1 in form(1), b2 in form(2),
    ) {
        prop_assert_eq!(
            b1.pair(&x2.hook(&a1).unwrap()).unwrap(),
            a1.wedge(&b1).unwrap().pair(&x2).unwrap()
        );
        prop_assert_eq!(
            b2.pair(&x3.hook(&a1).unwrap()).unwrap(),
            a1.wedge(&b2).unwrap().pair(&x3).unwrap()
        );
        prop_assert_eq!(
            b1.pair(&x3.hook(&a2).unwrap()).unwrap(),
            a2.wedge(&b1).unwrap().pair(&x3).unwrap()
        );
    }

    /// Both complements in sequence multiply by `(−1)^{k(4−k)}`.
    #[test]
    fn complement_roundtrips_with_the_grade_sign(
        x1 in vector(1), x2 in vector(2), x3 in vector(3),
    ) {
        for x in [&x1, &x2, &x3] {
            let back = x.complement().complement();
            let lambda = int(complement_roundtrip_sign(x.grade()) as i64);
            prop_assert_eq!(back, x.scale(&lambda));
        }
    }

    /// The complement is the metric-free adjoint of wedging to the volume
    /// form: `pair(X∁, Y) = pair(ε_N, X∧Y)`.
    #[test]
    fn complement_pairs_through_the_volume_form(
        x1 in vector(1), y3 in vector(3), x2 in vector(2), y2 in vector(2),
    ) {
        prop_assert_eq!(
            x1.complement().pair(&y3).unwrap(),
            eps_n().pair(&x1.wedge(&y3).unwrap()).unwrap()
        );
        prop_assert_eq!(
            x2.complement().pair(&y2).unwrap(),
            eps_n().pair(&x2.wedge(&y2).unwrap()).unwrap()
        );
    }

    #[test]
    fn composition_is_associative_and_transpose_reverses_it(
        a in vec_map(), b in vec_map(), c in vec_map(),
    ) {
        prop_assert_eq!(
            a.compose(&b).unwrap().compose(&c).unwrap(),
            a.compose(&b.compose(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.compose(&b).unwrap().transpose(),
            b.transpose().compose(&a.transpose()).unwrap()
        );
    }

    /// Compounds are multiplicative (Cauchy–Binet), and the fourth compound
    /// is the determinant.
    #[test]
    fn compounds_are_multiplicative(a in vec_map(), b in vec_map()) {
        let ab = a.compose(&b).unwrap();
        for p in 2..=3u8 {
            prop_assert_eq!(
                ab.compound(p).unwrap(),
                a.compound(p).unwrap().compose(&b.compound(p).unwrap()).unwrap()
            );
        }
        let det = a.mat().det().unwrap();
        prop_assert_eq!(a.compound(4).unwrap().mat()[(0, 0)].clone(), det);
    }

    /// The double wedge is symmetric, transposes slotwise, and squares the
    /// identity to twice the second compound (no factorial normalization).
    #[test]
    fn double_wedge_symmetry_and_normalization(a in vec_map(), b in vec_map()) {
        let ab = a.double_wedge(&b).unwrap();
        prop_assert_eq!(ab.clone(), b.double_wedge(&a).unwrap());
        prop_assert_eq!(ab.transpose(), a.transpose().double_wedge(&b.transpose()).unwrap());
        let aa = a.double_wedge(&a).unwrap();
        prop_assert_eq!(aa, a.compound(2).unwrap().scale(&int(2)));
    }

    /// A rank-deficient map kills its higher compounds: any sum of two dyads
    /// has vanishing third compound.
    #[test]
    fn rank_two_maps_have_zero_third_compound(
        x in vector(1), y in vector(1), wx in form(1), wy in form(1),
    ) {
        let d = dyad_vector_form(&x, &wx).add(&dyad_vector_form(&y, &wy)).unwrap();
        prop_assert!(d.compound(3).unwrap().is_zero());
        prop_assert!(d.compound(4).unwrap().is_zero());
    }

    /// `(x ω)|y = x · pair(ω, y)`.
    #[test]
    fn dyads_apply_as_outer_products(x in vector(1), omega in form(1), y in vector(1)) {
        let lhs = dyad_vector_form(&x, &omega).apply_vector(&y).unwrap().expect_vector();
        prop_assert_eq!(lhs, x.scale(&omega.pair(&y).unwrap()));
    }

    /// Hooking the volume vector into both slots is reversible, and doing it
    /// twice on a bivector map returns the original (grade-2 sign is `+1`).
    #[test]
    fn modified_and_constitutive_maps_convert_both_ways(
        m in map(Space::forms(2), Space::forms(2)),
    ) {
        let mm = modified_from_constitutive(&m).unwrap();
        prop_assert_eq!(constitutive_from_modified(&mm).unwrap(), m);
        let twice = complement_both(&complement_both(&mm).unwrap()).unwrap();
        prop_assert_eq!(twice, mm);
    }

    /// Linearity of the whole dyadic layer in one stroke: applying a random
    /// map to a linear combination.
    #[test]
    fn maps_are_linear(
        m in map(Space::forms(2), Space::forms(2)), f in form(2), g in form(2), s in scalar(),
    ) {
        let lhs = m.apply_form(&f.add(&g.scale(&s)).unwrap()).unwrap().expect_form();
        let mf = m.apply_form(&f).unwrap().expect_form();
        let mg = m.apply_form(&g).unwrap().expect_form();
        prop_assert_eq!(lhs, mf.add(&mg.scale(&s)).unwrap());
    }
}
