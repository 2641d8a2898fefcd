use std::fs;
use std::path::Path;

use omega_norm::catalog::{
    dihedral, load_catalog_dir, load_group_file, parse_group_file, GroupFile, GroupSource,
    GroupSpec,
};
use omega_norm::Error;

fn parse(text: &str) -> omega_norm::Result<omega_norm::FiniteGroup> {
    parse_group_file(text, Path::new("t.group.json"), 1000)
}

#[test]
fn round_trip_through_disk() {
    let d8 = dihedral(8).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("D8.group.json");
    fs::write(
        &path,
        serde_json::to_string_pretty(&GroupFile::from_group(&d8)).unwrap(),
    )
    .unwrap();
    let back = load_group_file(&path).unwrap();
    assert_eq!(back.name(), "D8");
    assert_eq!(back.order(), 8);
    assert_eq!(back.elements(), d8.elements());

    let specs = load_catalog_dir(dir.path()).unwrap();
    assert_eq!(specs.len(), 1);
    assert_eq!(specs[0].name, "D8");
    assert_eq!(specs[0].source, GroupSource::File(path));
}

#[test]
fn syntax_errors_carry_position() {
    let err =
        parse("{\"name\": \"x\",\n \"degree\": 3,\n \"generators\": [[1,0,2],]}").unwrap_err();
    match err {
        Error::Parse { line, column, .. } => {
            assert_eq!(line, 3);
            assert!(column > 1);
        }
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(
        parse("{\"name\": \"x\", \"degree\": 3, \"generators\": [], \"extra\": 1}"),
        Err(Error::Parse { .. })
    ));
}

#[test]
fn invalid_generators() {
    let err = parse(r#"{"name": "x", "degree": 3, "generators": [[1,0,2],[0,0,1]]}"#).unwrap_err();
    let msg = err.to_string();
    assert!(matches!(err, Error::InvalidGroupFile { .. }));
    assert!(msg.contains("generators[1]"), "{msg}");

    let err = parse(r#"{"name": "x", "degree": 3, "generators": [[1,0]]}"#).unwrap_err();
    assert!(err.to_string().contains("length 2"));

    let err = parse(r#"{"name": "x", "degree": 0, "generators": []}"#).unwrap_err();
    assert!(matches!(err, Error::InvalidGroupFile { .. }));
}

#[test]
fn expected_order_and_cap() {
    let s3 = r#"{"name": "S3", "degree": 3, "generators": [[1,0,2],[1,2,0]], "expected_order": 7}"#;
    assert!(matches!(
        parse(s3),
        Err(Error::OrderMismatch {
            expected: 7,
            actual: 6,
            ..
        })
    ));
    let s7 = r#"{"name": "S7", "degree": 7, "generators": [[1,0,2,3,4,5,6],[1,2,3,4,5,6,0]]}"#;
    assert!(matches!(
        parse(s7),
        Err(Error::OrderCapExceeded { cap: 1000 })
    ));
    let trivial = parse(r#"{"name": "1", "degree": 2, "generators": []}"#).unwrap();
    assert_eq!(trivial.order(), 1);
}

#[test]
fn cli_group_argument() {
    let spec = GroupSpec::parse("builtin:dicyclic:4");
    let q16 = spec.build(1000).unwrap();
    assert_eq!((q16.name(), q16.order()), ("Q16", 16));
    let spec = GroupSpec::parse("groups/F21.group.json");
    assert_eq!(spec.name, "F21");
    assert!(matches!(spec.build(1000), Err(Error::Io(_))));
    assert!(matches!(
        GroupSpec::parse("builtin:cyclic").build(1000),
        Err(Error::BadParameters { .. })
    ));
}
