use super::*;

#[test]
fn every_entry_builds_with_promised_shape() {
    for e in entries() {
        let h = get_algebra(&e.name).unwrap();
        assert_eq!(h.dim(), e.dim, "{}", e.name);
        assert_eq!(h.field().order(), e.field_order, "{}", e.name);
        let gl = h.group_likes().map(|g| g.indices.len()).unwrap_or(0);
        assert_eq!(gl, e.group_likes, "{}", e.name);
    }
}

#[test]
fn unknown_names_are_rejected() {
    assert!(matches!(get_algebra("H30"), Err(CatalogError::UnknownName(_))));
    assert!(matches!(get_algebra("kZ9"), Err(CatalogError::UnknownName(_))));
    assert!(matches!(load_table("kC2"), Err(CatalogError::NoTable(_))));
}

#[test]
fn every_table_parses_against_its_algebra() {
    for name in table_algebras() {
        let h = get_algebra(name).unwrap();
        let rows = table_rows(&h, &load_table(name).unwrap()).unwrap();
        assert!(!rows.is_empty(), "{name}");
    }
}

#[test]
fn row_counts() {
    let count = |n: &str| load_table(n).unwrap().rows.len();
    assert_eq!(count("Sweedler"), 2);
    assert_eq!(count("A22"), 5);
    assert_eq!(count("H17"), 16);
    assert_eq!(count("H6"), 2);
}

#[test]
fn h6_has_no_row_for_trivial_subgroup() {
    let t = load_table("H6").unwrap();
    assert!(t.rows.iter().all(|r| r.subgroup != ["1"]));
}

#[test]
fn constraints_are_recorded() {
    let h15 = load_table("H15").unwrap();
    assert!(h15.rows.iter().any(|r| r.constraints == ["sigma*delta"]));
    let h16 = load_table("H16").unwrap();
    assert!(h16.rows.iter().any(|r| r.constraints == ["Omega*zeta + 1/2"]));
}

#[test]
fn h7_trivial_subgroup_row_violates_partial_axiom() {
    let h = get_algebra("H7").unwrap();
    let rows = table_rows(&h, &load_table("H7").unwrap()).unwrap();
    let trivial = rows.iter().find(|r| r.subgroup.order() == 1).unwrap();
    assert!(!trivial.verify_symbolic(&h));
}

#[test]
fn diagram_edges_name_catalog_algebras() {
    let edges = diagram_edges().unwrap();
    assert_eq!(edges.len(), 26);
    for e in &edges {
        get_algebra(&e.source).unwrap();
        get_algebra(&e.target).unwrap();
    }
}

#[test]
fn file_stems_replace_primes() {
    assert_eq!(table_file_stem("A4'''"), "A4ppp");
    assert_eq!(table_file_stem("H3"), "H3");
}
