use super::*;
use crate::catalog::get_algebra;

fn sweedler_lambda(alpha: i64) -> (HopfAlgebra, PartialAction) {
    let h = get_algebra("Sweedler").unwrap();
    let f = h.field().clone();
    let a = f.from_int(alpha);
    let lambda = PartialAction::new(&h, vec![f.one(), f.zero(), a.clone(), a]).unwrap();
    (h, lambda)
}

#[test]
fn counit_gives_whole_algebra() {
    let h = get_algebra("A2").unwrap();
    let eps = PartialAction::counit(&h);
    let s = compute_h_lambda(&h, &eps).unwrap();
    assert_eq!(s.dim(), h.dim());
    assert!(check_carac(&h, &eps).holds);
    assert!(check_strong(&h, &eps).holds);
    assert!(check_coproduct_closure(&h, &s));
}

#[test]
fn sweedler_deformation_is_two_dimensional_and_not_hopf() {
    let (h, lambda) = sweedler_lambda(1);
    let s = compute_h_lambda(&h, &lambda).unwrap();
    assert_eq!(s.dim(), 2);
    let alpha_g_plus_gx = h.element("g + gx").unwrap();
    assert!(s.contains(&alpha_g_plus_gx));
    let carac = check_carac(&h, &lambda);
    assert!(!carac.holds);
    assert_eq!(carac.witness.unwrap().element, "gx");
    assert!(!check_coproduct_closure(&h, &s));
    assert!(check_phi_equivalence(&h, &lambda).unwrap());
    assert!(check_restriction_lemma(&h, &lambda, &s).holds);
}

#[test]
fn sweedler_alpha_zero_still_fails_carac() {
    let (h, lambda) = sweedler_lambda(0);
    let s = compute_h_lambda(&h, &lambda).unwrap();
    assert_eq!(s.dim(), 2);
    assert!(!check_carac(&h, &lambda).holds);
    let skew = check_skew_corollaries(&h, &lambda);
    assert!(!skew.instances.is_empty());
    assert!(skew.consistent);
}

#[test]
fn taft_two_two_deforms_to_sweedler() {
    let (s, m) = taft_witness(2, 2).unwrap();
    assert_eq!(s.dim(), 4);
    assert!(m.injective);
}

#[test]
fn taft_lambda_is_hopf_deformation() {
    let (t, lambda) = taft_lambda(3, 2).unwrap();
    assert!(check_carac(&t, &lambda).holds);
    assert_eq!(compute_h_lambda(&t, &lambda).unwrap().dim(), 9);
}

#[test]
fn wrong_image_is_rejected() {
    let (t, _) = taft_lambda(2, 2).unwrap();
    let small = catalog::taft(2, 1).unwrap();
    // g ↦ g has order 4, not 2
    let images = parse_images(&t, &small, &[("g".into(), "g".into()), ("x".into(), "x".into())]).unwrap();
    assert!(matches!(verify_hopf_morphism(&small, &t, &images), Err(SmashError::NotAMorphism { .. })));
}

#[test]
fn universality_embeds_sweedler() {
    let h = get_algebra("Sweedler").unwrap();
    let w = lambda_hopf_witness_construction(&h, &FiniteGroup::cyclic(2, "g").unwrap()).unwrap();
    assert_eq!(w.l.dim(), 8);
    assert_eq!(w.h_lambda.dim(), 4);
    assert!(w.carac);
    assert!(w.morphism.injective);
}

#[test]
fn tensor_action_multiplies_values() {
    let (h, lambda) = sweedler_lambda(2);
    let kg = get_algebra("kC2").unwrap();
    let eps = PartialAction::counit(&kg);
    let hl = tensor_hopf(&h, &kg, &[("g", "h")]).unwrap();
    let t = tensor_partial_action(&h, &lambda, &kg, &eps, &hl).unwrap();
    for i in 0..h.dim() {
        for j in 0..kg.dim() {
            assert_eq!(t.value(i * kg.dim() + j), &(lambda.value(i) * eps.value(j)));
        }
    }
}
