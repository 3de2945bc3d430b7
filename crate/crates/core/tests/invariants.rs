//! Property tests: field axioms, bialgebra laws on random elements, and the
//! structural facts every partial action and deformation must satisfy.

use num_rational::BigRational;
use proptest::prelude::*;

use hopf_partial::catalog::{get_algebra, load_table, table_algebras, table_rows};
use hopf_partial::exactfield::{Cyclo, CyclotomicField};
use hopf_partial::groups::{group_algebra, lambda_n, FiniteGroup};
use hopf_partial::hopfcore::{HopfAlgebra, Tensor, Vector};
use hopf_partial::partial::{convolution, is_partial_action, PartialAction};
use hopf_partial::smash::{
    check_carac, check_coproduct_closure, check_phi_equivalence, check_restriction_lemma, check_strong, compute_h_lambda, Echelon,
};

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn element(field: &CyclotomicField, coeffs: &[(i64, i64)]) -> Cyclo {
    let deg = field.degree();
    field.from_coeffs(coeffs.iter().take(deg).map(|&(n, d)| rational(n, d)).collect())
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-5i64..=5, 1i64..=4), 4)
}

fn vector(h: &HopfAlgebra, entries: &[(usize, i64)]) -> Vector {
    let mut v = Vector::zero();
    for &(i, c) in entries {
        v.add_term(i % h.dim(), &h.field().from_int(c));
    }
    v
}

fn tensor_square(h: &HopfAlgebra, a: &Tensor, b: &Tensor) -> Tensor {
    h.multiply_tensor(a, b)
}

const ALGEBRAS: [&str; 8] = ["Sweedler", "A2", "A4''", "A4'''", "H6", "H9", "H17", "H25"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in coeffs(), b in coeffs(), c in coeffs(), m in prop::sample::select(vec![4u32, 8, 12])) {
        let f = CyclotomicField::new(m).unwrap();
        let (a, b, c) = (element(&f, &a), element(&f, &b), element(&f, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
        prop_assert!(f.root_of_unity(1).pow(m as i64).unwrap().is_one());
    }

    #[test]
    fn bialgebra_laws_on_random_elements(
        name in prop::sample::select(ALGEBRAS.to_vec()),
        a in prop::collection::vec((0usize..64, -3i64..=3), 1..4),
        b in prop::collection::vec((0usize..64, -3i64..=3), 1..4),
    ) {
        let h = get_algebra(name).unwrap();
        let (a, b) = (vector(&h, &a), vector(&h, &b));
        let ab = h.multiply(&a, &b);
        prop_assert_eq!(h.comultiply(&ab), tensor_square(&h, &h.comultiply(&a), &h.comultiply(&b)));
        prop_assert_eq!(h.counit(&ab), &h.counit(&a) * &h.counit(&b));
        prop_assert_eq!(h.antipode(&ab), h.multiply(&h.antipode(&b), &h.antipode(&a)));
    }

    #[test]
    fn group_indicators_are_idempotent_partial_actions(
        name in prop::sample::select(vec!["C4", "C2xC2", "C6", "S3", "D4", "Q8"]),
        gens in prop::collection::vec(0usize..8, 0..3),
    ) {
        let g = FiniteGroup::named(name).unwrap();
        let gens: Vec<usize> = gens.into_iter().map(|i| i % g.order()).collect();
        let n = g.generated_by(&gens);
        let f = CyclotomicField::new(4).unwrap();
        let h = group_algebra(&g, &f).unwrap();
        let lambda = lambda_n(&g, &n, &f);
        prop_assert!(is_partial_action(&h, &lambda));
        prop_assert_eq!(convolution(&h, &lambda, &lambda), lambda.clone());
        let pa = PartialAction::new(&h, lambda).unwrap();
        prop_assert_eq!(compute_h_lambda(&h, &pa).unwrap().dim(), n.order());
    }

    #[test]
    fn sweedler_lambda_alpha_for_every_alpha(num in -20i64..=20, den in 1i64..=7) {
        let h = get_algebra("Sweedler").unwrap();
        let f = h.field().clone();
        let a = f.from_rational(rational(num, den));
        let lambda = vec![f.one(), f.zero(), a.clone(), a];
        prop_assert!(is_partial_action(&h, &lambda));
        prop_assert_eq!(convolution(&h, &lambda, &lambda), lambda.clone());
        let pa = PartialAction::new(&h, lambda).unwrap();
        prop_assert!(!check_carac(&h, &pa).holds);
        prop_assert_eq!(compute_h_lambda(&h, &pa).unwrap().dim(), 2);
    }

    #[test]
    fn unconstrained_rows_hold_at_random_points(
        pick in 0usize..1000,
        point in prop::collection::vec((-6i64..=6, 1i64..=3), 6),
    ) {
        let names = table_algebras();
        let name = names[pick % names.len()];
        let h = get_algebra(name).unwrap();
        let rows = table_rows(&h, &load_table(name).unwrap()).unwrap();
        let row = &rows[(pick / names.len()) % rows.len()];
        prop_assume!(row.family.constraints().is_empty() && row.verify_symbolic(&h));
        let f = row.family.field().clone();
        let p: Vec<Cyclo> = point.iter().take(row.family.parameters().len()).map(|&(n, d)| f.from_rational(rational(n, d))).collect();
        let values = row.values_at(&p);
        prop_assert!(is_partial_action(&h, &values));
        prop_assert_eq!(convolution(&h, &values, &values), values.clone());
        let lambda = PartialAction::new(&h, values).unwrap();
        let s = compute_h_lambda(&h, &lambda).unwrap();
        let carac = check_carac(&h, &lambda).holds;
        prop_assert_eq!(carac, check_coproduct_closure(&h, &s));
        prop_assert!(!check_strong(&h, &lambda).holds || carac);
        prop_assert!(check_restriction_lemma(&h, &lambda, &s).holds);
        prop_assert!(check_phi_equivalence(&h, &lambda).unwrap());
    }

    #[test]
    fn echelon_spans_what_was_inserted(rows in prop::collection::vec(prop::collection::vec((0usize..6, -4i64..=4), 1..5), 1..8)) {
        let f = CyclotomicField::new(4).unwrap();
        let vs: Vec<Vector> = rows
            .iter()
            .map(|r| {
                let mut v = Vector::zero();
                for &(i, c) in r {
                    v.add_term(i, &f.from_int(c));
                }
                v
            })
            .collect();
        let e = Echelon::from_vectors(&vs);
        prop_assert!(e.rank() <= vs.len().min(6));
        for v in &vs {
            prop_assert!(e.contains(v));
            let coords = e.coordinates(v, &f.zero()).unwrap();
            let mut back = Vector::zero();
            for (c, row) in coords.iter().zip(e.rows()) {
                back.add_scaled(c, row);
            }
            prop_assert_eq!(&back, v);
        }
    }
}
