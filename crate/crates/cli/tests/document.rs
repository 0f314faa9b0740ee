use catalog::{build, FamilyId};
use cli::{to_obj, to_svg, DocumentError, TilingDocument};
use proptest::prelude::*;

fn doc(name: &str) -> TilingDocument {
    let id = FamilyId::parse(name).unwrap();
    let r = build(&id).unwrap();
    TilingDocument::from_realization(&id.to_string(), Some(id), &r, 1e-9)
}

#[test]
fn s36_5_round_trip_is_byte_identical() {
    let d = doc("S36_5").normalized();
    let text = d.to_json();
    let back = TilingDocument::from_json(&text).unwrap();
    assert!(back == d);
    assert_eq!(back.to_json(), text);
    assert!(back.complex == doc("S36_5").complex);
    // exact angles keep their rational form
    assert!(text.contains("\"4/9 pi\""));
}

#[test]
fn numeric_templates_round_trip() {
    for name in ["S16_4", "QP6", "E□1", "E□2", "S12_1"] {
        let d = doc(name);
        let once = TilingDocument::from_json(&d.to_json()).unwrap().to_json();
        let twice = TilingDocument::from_json(&once).unwrap().to_json();
        assert_eq!(once, twice, "{name}");
        assert_eq!(TilingDocument::from_json(&d.to_json()).unwrap().complex, d.complex);
    }
}

#[test]
fn obj_counts() {
    let obj = to_obj(&doc("P6")).unwrap();
    assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 8);
    assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 6);
    // polygonal faces, never triangulated
    assert!(obj.lines().filter(|l| l.starts_with("f ")).all(|l| l.split_whitespace().count() == 5));
}

#[test]
fn svg_is_well_formed() {
    let d = doc("E□4").clone();
    let d = TilingDocument { family: Some(FamilyId::parse("E□4").unwrap().with_p(4)), ..d };
    let svg = to_svg(&d).unwrap();
    assert_eq!(svg.matches("<path ").count(), 16);
    assert!(svg.starts_with("<svg ") && svg.ends_with("</svg>\n"));
    assert_eq!(svg.matches("<g ").count(), svg.matches("</g>").count());
    // 64 segments per edge, four edges per tile
    let first = svg.lines().find(|l| l.starts_with("<path")).unwrap();
    assert_eq!(first.matches('L').count() + first.matches('M').count(), 4 * 64);
    assert!(!svg.contains("NaN") && !svg.contains("inf"));
}

#[test]
fn missing_coordinates() {
    let mut d = doc("P4");
    d.coords = None;
    assert!(matches!(to_obj(&d), Err(DocumentError::NoCoords)));
    assert!(matches!(to_svg(&d), Err(DocumentError::NoCoords)));
    assert!(matches!(d.realization(), Err(DocumentError::NoCoords)));
    let back = TilingDocument::from_json(&d.to_json()).unwrap();
    assert_eq!(back.coords, None);
}

#[test]
fn bad_documents() {
    assert!(matches!(TilingDocument::from_json("[]"), Err(DocumentError::Parse(_))));
    let text = doc("P4").to_json().replacen("\"schema_version\": 1", "\"schema_version\": 7", 1);
    assert!(matches!(TilingDocument::from_json(&text), Err(DocumentError::Version(7))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn earth_map_documents_round_trip(p in 3u32..9, beta in 0.3f64..0.7) {
        let id = FamilyId::parse("E△1").unwrap().with_p(p).with_free(vec![beta]);
        let r = build(&id).unwrap();
        let d = TilingDocument::from_realization(&id.to_string(), Some(id), &r, 1e-9);
        let once = TilingDocument::from_json(&d.to_json()).unwrap();
        prop_assert_eq!(&once.complex, &d.complex);
        prop_assert_eq!(&once.coords, &d.coords);
        prop_assert_eq!(once.to_json(), TilingDocument::from_json(&once.to_json()).unwrap().to_json());
    }

    #[test]
    fn obj_has_one_face_per_tile(p in 3u32..12) {
        let id = FamilyId::parse("E□4").unwrap().with_p(p);
        let r = build(&id).unwrap();
        let d = TilingDocument::from_realization(&id.to_string(), Some(id), &r, 1e-9);
        let obj = to_obj(&d).unwrap();
        prop_assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 2 * p as usize);
        prop_assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 2 + 2 * p as usize);
        prop_assert_eq!(to_svg(&d).unwrap().matches("<path ").count(), 4 * p as usize);
    }
}
