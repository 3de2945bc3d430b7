use super::*;
use crate::exactfield::Rational;
use crate::groups::{group_algebra, FiniteGroup};
use crate::hopfcore::PointedPresentation;

fn field(m: u32) -> CyclotomicField {
    CyclotomicField::new(m).unwrap()
}

fn sweedler() -> HopfAlgebra {
    PointedPresentation::new("H4", FiniteGroup::cyclic(2, "g").unwrap(), field(4))
        .skew("x", ("1", "g"), &[("g", "-1")], 2, "0")
        .unwrap()
        .build()
        .unwrap()
}

fn a4pp() -> HopfAlgebra {
    PointedPresentation::new("A4''", FiniteGroup::cyclic(4, "g").unwrap(), field(4))
        .skew("x", ("1", "g"), &[("g", "-1")], 2, "g^2 - 1")
        .unwrap()
        .build()
        .unwrap()
}

fn subgroup(h: &HopfAlgebra, words: &[&str]) -> Subgroup {
    let g = h.group_likes().unwrap().group;
    let gens: Vec<usize> = words.iter().map(|w| g.parse_element(w).unwrap()).collect();
    g.generated_by(&gens)
}

fn labels(h: &HopfAlgebra, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| h.label(i).to_string()).collect()
}

fn sweedler_lambda(h: &HopfAlgebra, alpha: i64) -> Vec<Cyclo> {
    let f = h.field();
    vec![f.one(), f.zero(), f.from_int(alpha), f.from_int(alpha)]
}

#[test]
fn defects_on_sweedler() {
    let h = sweedler();
    let lam = sweedler_lambda(&h, 3);
    assert!(partial_defect(&h, &lam, 1, 1).is_zero());
    assert!(is_partial_action(&h, &lam));
    let f = h.field();
    let half = f.from_rational(Rational::new(1.into(), 2.into()));
    let bad = vec![f.one(), half, f.zero(), f.zero()];
    assert_eq!(partial_defect(&h, &bad, 1, 0), f.from_rational(Rational::new(1.into(), 4.into())));
    let bad = vec![f.one(), f.zero(), f.one(), f.zero()];
    assert!(!is_partial_action(&h, &bad));
    assert_eq!(convolution(&h, &lam, &lam), lam);
}

#[test]
fn sweedler_transversal_and_system() {
    let h = sweedler();
    let sys = build_reduced_system(&h, &subgroup(&h, &["1"])).unwrap();
    assert_eq!(labels(&h, &sys.transversal.representatives), ["x", "gx"]);
    assert_eq!(labels(&h, &sys.transversal.reduced), ["gx"]);
    assert_eq!(sys.equations.len(), 4);
    let fams = solve_partial_actions(&h, &subgroup(&h, &["1"]), &SolveConfig::default()).unwrap();
    assert_eq!(fams.len(), 1);
    let f = &fams[0].family;
    assert_eq!(f.parameters().len(), 1);
    assert_eq!(f.assignment("x"), f.assignment("gx"));
    assert!(fams[0].verify_symbolic(&h));

    let all = solve_partial_actions(&h, &subgroup(&h, &["g"]), &SolveConfig::default()).unwrap();
    assert_eq!(all.len(), 1);
    let eps: Vec<Cyclo> = (0..4).map(|i| h.counit_basis(i).clone()).collect();
    assert_eq!(all[0].values_at(&[]), eps);
}

#[test]
fn a4pp_transversals() {
    let h = a4pp();
    let t = build_transversal(&h, &subgroup(&h, &["g^2"])).unwrap();
    assert_eq!(t.classes.iter().map(|c| labels(&h, c)).collect::<Vec<_>>(), [vec!["x", "g^2x"], vec!["gx", "g^3x"]]);
    assert_eq!(labels(&h, &t.reduced), ["gx"]);
    assert_eq!(build_reduced_system(&h, &subgroup(&h, &["g^2"])).unwrap().equations.len(), 8);
    let t = build_transversal(&h, &subgroup(&h, &["1"])).unwrap();
    assert_eq!(labels(&h, &t.reduced), ["gx", "g^2x", "g^3x"]);
}

#[test]
fn a4pp_trivial_subgroup_needs_gamma() {
    let h = a4pp();
    let fams = solve_partial_actions(&h, &subgroup(&h, &["1"]), &SolveConfig::default()).unwrap();
    assert_eq!(fams.len(), 1);
    let f = &fams[0].family;
    assert_eq!(f.parameters().len(), 1);
    assert_eq!(f.constraints().len(), 1);
    assert_eq!(f.constraints()[0].total_degree(), 2);
    assert_eq!(f.assignment("x"), f.assignment("g^3x"));
    assert!(f.assignment("gx").unwrap().is_zero());
    let pt = fams[0].default_point().unwrap();
    assert!(is_partial_action(&h, &fams[0].values_at(&pt)));
}

#[test]
fn full_system_agrees_on_sweedler() {
    let h = sweedler();
    for words in [&["1"][..], &["g"][..]] {
        let n = subgroup(&h, words);
        let a = solve_partial_actions(&h, &n, &SolveConfig::default()).unwrap();
        let b = solve_full_system(&h, &n, &SolveConfig::default()).unwrap();
        let fa: Vec<&SolutionFamily> = a.iter().map(|f| &f.family).collect();
        let fb: Vec<&SolutionFamily> = b.iter().map(|f| &f.family).collect();
        assert!(same_variety(&h, &fa, &fb).unwrap());
    }
}

#[test]
fn group_algebra_actions_are_subgroup_indicators() {
    let g = FiniteGroup::named("C2xC2").unwrap();
    let h = group_algebra(&g, &field(1)).unwrap();
    let all = enumerate_all_partial_actions(&h, &SolveConfig::default()).unwrap();
    assert_eq!(all.len(), 5);
    for (n, fams) in all {
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].values_at(&[]), crate::groups::lambda_n(&g, &n, h.field()));
    }
}

#[test]
fn property_suite_on_sweedler() {
    let h = sweedler();
    let rep = check_property_suite(&h, &sweedler_lambda(&h, 2)).unwrap();
    assert!(rep.is_ok(), "{:?}", rep.failures);
    assert!(rep.checked.iter().any(|c| c.starts_with("(d)")));
    assert!(check_property_suite(&h, &sweedler_lambda(&h, 2)[..3]).is_err());
}

#[test]
fn symmetry_is_reported() {
    let h = sweedler();
    let fams = solve_partial_actions(&h, &subgroup(&h, &["1"]), &SolveConfig::default()).unwrap();
    let s = fams[0].symmetry(&h);
    let concrete = is_symmetric(&h, &fams[0].values_at(&[h.field().from_int(1)])).unwrap();
    match s {
        Symmetry::Symmetric => assert!(concrete),
        Symmetry::NotSymmetric => assert!(!concrete),
        Symmetry::ParameterDependent => {}
    }
}
