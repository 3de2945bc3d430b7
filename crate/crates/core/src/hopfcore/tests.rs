use super::*;
use crate::groups::{group_algebra, FiniteGroup};

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

#[test]
fn sweedler_structure() {
    let h = sweedler();
    assert_eq!(h.labels(), ["1", "g", "x", "gx"]);
    let x = h.element("x").unwrap();
    let gx = h.element("gx").unwrap();
    assert_eq!(h.element("xg").unwrap(), gx.scale(&-h.one()));
    assert!(h.multiply(&x, &x).is_zero());
    assert_eq!(h.format_tensor(&h.comultiply(&x)), "g⊗x + x⊗1");
    assert_eq!(h.antipode(&x), gx.scale(&-h.one()));
    let gl = h.group_likes().unwrap();
    assert_eq!(gl.group.order(), 2);
    let sp = h.skew_primitives();
    assert!(sp.contains(&SkewPrimitive { x: 2, g: 0, h: 1 }));
    assert!(sp.contains(&SkewPrimitive { x: 3, g: 1, h: 0 }));
}

#[test]
fn taft_algebra_dimension_and_axioms() {
    let f = field(4);
    let t = PointedPresentation::new("T4", FiniteGroup::cyclic(4, "g").unwrap(), f)
        .constant("q", "zeta4")
        .unwrap()
        .skew("x", ("1", "g"), &[("g", "q")], 4, "0")
        .unwrap()
        .build()
        .unwrap();
    assert_eq!(t.dim(), 16);
    assert!(t.check_hopf_axioms().is_ok());
}

#[test]
fn liftings_with_group_terms() {
    // x^2 = g^2 - 1 over C4, χ(g) = -1
    let h = PointedPresentation::new("lift", FiniteGroup::cyclic(4, "g").unwrap(), field(4))
        .skew("x", ("1", "g"), &[("g", "-1")], 2, "g^2 - 1")
        .unwrap()
        .build()
        .unwrap();
    assert_eq!(h.dim(), 8);
    assert_eq!(h.multiply(&h.element("x").unwrap(), &h.element("x").unwrap()), h.element("g^2 - 1").unwrap());
}

#[test]
fn wrong_power_relation_is_rejected() {
    // x^2 = g - 1 is not compatible with χ(g) = -1
    let r = PointedPresentation::new("bad", FiniteGroup::cyclic(2, "g").unwrap(), field(4))
        .skew("x", ("1", "g"), &[("g", "-1")], 2, "g")
        .unwrap()
        .build();
    assert!(matches!(r, Err(HopfError::NonConfluentPresentation(_)) | Err(HopfError::AxiomFailure(_))));
}

#[test]
fn missing_cross_relation() {
    let r = PointedPresentation::new("A", FiniteGroup::cyclic(2, "g").unwrap(), field(4))
        .skew("x", ("1", "g"), &[("g", "-1")], 2, "0")
        .unwrap()
        .skew("y", ("1", "g"), &[("g", "-1")], 2, "0")
        .unwrap()
        .build();
    assert!(matches!(r, Err(HopfError::MissingCrossRelation(..))));
}

#[test]
fn broken_structure_reports_law() {
    let mut d = sweedler().structure().clone();
    d.counit[2] = d.field.one();
    let err = HopfAlgebra::from_structure(d).unwrap_err();
    match err {
        HopfError::AxiomFailure(rep) => assert!(rep.failed_laws().contains(&"counit")),
        e => panic!("{e}"),
    }
}

#[test]
fn tensor_with_group_algebra() {
    let h = sweedler();
    let k = group_algebra(&FiniteGroup::cyclic(2, "a").unwrap(), &field(1)).unwrap();
    let t = tensor_hopf(&h, &k, &[]).unwrap();
    assert_eq!(t.dim(), 8);
    assert_eq!(t.group_likes().unwrap().group.order(), 4);
    assert!(t.label_index("gxa").is_some());
}

#[test]
fn qbinomials() {
    let f = field(3);
    let w = f.primitive_root();
    assert!(qbinomial(3, 1, &w).is_zero());
    assert_eq!(qbinomial(4, 2, &f.from_int(1)), f.from_int(6));
    assert_eq!(qbinomial(2, 1, &f.from_int(2)), f.from_int(3));
}

#[test]
fn field_extension_keeps_axioms() {
    let h = sweedler().with_field(&field(8)).unwrap();
    assert!(h.check_hopf_axioms().is_ok());
    assert_eq!(h.field().order(), 8);
}

#[test]
fn presentation_json() {
    let src = r#"{"name":"H4","group":"C2","field_order":4,
        "generators":[{"name":"x","in_p":["1","g"],"chi":{"g":"-1"},"nilpotency":2}]}"#;
    let spec: PresentationSpec = serde_json::from_str(src).unwrap();
    assert_eq!(spec.build().unwrap().dim(), 4);
}
